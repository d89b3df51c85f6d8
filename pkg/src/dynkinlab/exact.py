"""Exact arithmetic kernel: integer polynomials, rational functions, matrices.

Everything downstream (Cartan matrices, Coxeter transformations, generating
functions) is computed over Z or Q with no floating point.  Polynomials are
dense coefficient tuples in ascending order; the zero polynomial is the
empty tuple.  Rational functions are kept reduced with a positive leading
denominator coefficient, so equal functions compare equal structurally.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, PoleAtOriginError, RankError


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    for c in out:
        if not isinstance(c, int):
            raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
    return tuple(out)


class IntPoly:
    """Polynomial with integer coefficients in one formal variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @staticmethod
    def _coerce(other: object) -> "IntPoly | None":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return None

    def __add__(self, other: object) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPoly(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: object) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __call__(self, value):
        """Evaluate by Horner's rule; value may be int or Fraction."""
        acc = value * 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def substitute(self, p: "IntPoly") -> "IntPoly":
        """Composition self(p(t))."""
        acc = IntPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    def eval_matrix(self, m: "IntMatrix") -> "IntMatrix":
        n = m.nrows
        if n != m.ncols:
            raise DimensionError("square matrix required")
        acc = IntMatrix.zeros(n, n)
        for c in reversed(self.coeffs):
            acc = acc @ m + IntMatrix.identity(n) * c
        return acc

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        c = self.content()
        if c == 0:
            return IntPoly()
        if self.leading() < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)

    def divexact(self, d: "IntPoly") -> "IntPoly":
        """Quotient self / d, valid only when d divides self in Z[t]."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPoly()
        rem = list(self.coeffs)
        dc = d.coeffs
        dn = len(dc)
        qn = len(rem) - dn + 1
        if qn <= 0:
            raise ArithmeticError("division is not exact")
        q = [0] * qn
        for k in range(qn - 1, -1, -1):
            c = rem[k + dn - 1]
            if c % dc[-1]:
                raise ArithmeticError("division is not exact")
            q[k] = c // dc[-1]
            if q[k]:
                for j, b in enumerate(dc):
                    rem[k + j] -= q[k] * b
        if any(rem):
            raise ArithmeticError("division is not exact")
        return IntPoly(q)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a modulo b."""
    lead = b.leading()
    r = a
    k = a.degree - b.degree + 1
    while not r.is_zero() and r.degree >= b.degree:
        shift = r.degree - b.degree
        r = r * lead - b * IntPoly.monomial(shift, r.leading())
        k -= 1
    if k > 0:
        r = r * (lead ** k)
    return r


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Greatest common divisor via the primitive remainder sequence.

    Result has positive leading coefficient; gcd(0, 0) = 0.
    """
    if p.is_zero() and q.is_zero():
        return IntPoly()
    if p.is_zero():
        return q.primitive() * abs(q.content())
    if q.is_zero():
        return p.primitive() * abs(p.content())
    c = math.gcd(p.content(), q.content())
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive()
    return a * c


class RatFunc:
    """Reduced rational function num/den over Z[t].

    Canonical form: gcd(num, den) = 1 and the leading coefficient of den is
    positive, so equality is plain structural equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        n = _as_poly(num)
        d = _as_poly(den)
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        if n.is_zero():
            d = IntPoly.one()
        else:
            g = poly_gcd(n, d)
            n = n.divexact(g)
            d = d.divexact(g)
            if d.leading() < 0:
                n, d = -n, -d
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RatFunc is immutable")

    def is_polynomial(self) -> bool:
        return self.den == IntPoly.one()

    def as_poly(self) -> IntPoly:
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        return self.num

    @staticmethod
    def _coerce(other: object) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (IntPoly, int)):
            return RatFunc(other)
        return None

    def __add__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __call__(self, value: Fraction) -> Fraction:
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return Fraction(self.num(value)) / d

    def substitute(self, p: IntPoly) -> "RatFunc":
        return RatFunc(self.num.substitute(p), self.den.substitute(p))

    def __repr__(self) -> str:
        return f"RatFunc({self.num.coeffs!r}, {self.den.coeffs!r})"


def _as_poly(v) -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly((v,))
    raise TypeError(f"cannot interpret {type(v).__name__} as a polynomial")


def ratfunc_reduce(num, den) -> RatFunc:
    """Reduced canonical rational function num/den."""
    return RatFunc(num, den)


class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rs = tuple(tuple(int(v) for v in row) for row in rows)
        if rs and any(len(r) != len(rs[0]) for r in rs):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int, m: int) -> "IntMatrix":
        return cls(tuple((0,) * m for _ in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return IntMatrix(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(-v for v in row) for row in self.rows)

    def __mul__(self, scalar: int) -> "IntMatrix":
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix(tuple(v * scalar for v in row) for row in self.rows)

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError("inner dimensions differ")
        cols = tuple(zip(*other.rows)) if other.rows else ()
        return IntMatrix(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows
        )

    def __pow__(self, k: int) -> "IntMatrix":
        if self.nrows != self.ncols:
            raise DimensionError("square matrix required")
        if k < 0:
            raise ValueError("negative power")
        out = IntMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def mulvec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise DimensionError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.rows else IntMatrix(())

    def trace(self) -> int:
        if self.nrows != self.ncols:
            raise DimensionError("square matrix required")
        return sum(self.rows[i][i] for i in range(self.nrows))

    def det(self) -> int:
        p = charpoly(self)
        n = self.nrows
        return p.coeff(0) if n % 2 == 0 else -p.coeff(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("IntMatrix", self.rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows!r})"


class PolyMatrix:
    """Immutable square matrix with IntPoly entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[IntPoly | int]]):
        rs = tuple(tuple(_as_poly(v) for v in row) for row in rows)
        if any(len(r) != len(rs) for r in rs):
            raise DimensionError("square matrix required")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PolyMatrix is immutable")

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> IntPoly:
        i, j = ij
        return self.rows[i][j]

    def replace_col(self, j: int, col: Sequence[IntPoly | int]) -> "PolyMatrix":
        if len(col) != self.size:
            raise DimensionError("column length mismatch")
        return PolyMatrix(
            tuple(_as_poly(col[i]) if jj == j else v for jj, v in enumerate(row))
            for i, row in enumerate(self.rows)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("PolyMatrix", tuple(tuple(p.coeffs for p in row) for row in self.rows)))

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows!r})"


def lambda_identity_minus(m: IntMatrix) -> PolyMatrix:
    """The matrix x*I - m over Z[x]."""
    if m.nrows != m.ncols:
        raise DimensionError("square matrix required")
    x = IntPoly.x()
    return PolyMatrix(
        tuple(x - m.rows[i][j] if i == j else IntPoly.const(-m.rows[i][j]) for j in range(m.ncols))
        for i in range(m.nrows)
    )


def charpoly(m: IntMatrix) -> IntPoly:
    """Characteristic polynomial det(x*I - m), monic, ascending coefficients.

    Faddeev-LeVerrier recursion; every division is an exact integer division,
    so the result is certified over Z.  charpoly of the empty matrix is 1.
    """
    if m.nrows != m.ncols:
        raise DimensionError("square matrix required")
    n = m.nrows
    if n == 0:
        return IntPoly.one()
    ident = IntMatrix.identity(n)
    coeffs = [1]
    mk = ident
    for k in range(1, n + 1):
        am = m @ mk
        tr = am.trace()
        if tr % k:
            raise ArithmeticError("trace not divisible in Faddeev-LeVerrier step")
        ck = -(tr // k)
        coeffs.append(ck)
        mk = am + ident * ck
    if mk != IntMatrix.zeros(n, n):
        raise ArithmeticError("Faddeev-LeVerrier closure failed")
    return IntPoly(reversed(coeffs))


def _det_cofactor(rows: Sequence[Sequence[IntPoly]]) -> IntPoly:
    n = len(rows)
    if n == 0:
        return IntPoly.one()
    if n == 1:
        return rows[0][0]
    acc = IntPoly.zero()
    for j in range(n):
        a = rows[0][j]
        if a.is_zero():
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = a * _det_cofactor(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def det_poly(m: PolyMatrix) -> IntPoly:
    """Determinant over Z[t]: cofactor expansion below size 5, Bareiss above.

    Bareiss one-step fraction-free elimination keeps every intermediate
    entry in Z[t]; each division is exact by construction.
    """
    n = m.size
    if n < 5:
        return _det_cofactor(m.rows)
    a = [list(row) for row in m.rows]
    sign = 1
    prev = IntPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot is None:
                return IntPoly.zero()
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divexact(prev)
            a[i][k] = IntPoly.zero()
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def series_expand(f: RatFunc, nterms: int) -> list[Fraction]:
    """First nterms Taylor coefficients of f at t = 0."""
    if nterms < 0:
        raise ValueError("negative number of terms")
    d0 = f.den.coeff(0)
    if d0 == 0:
        raise PoleAtOriginError("denominator vanishes at the origin")
    out: list[Fraction] = []
    for k in range(nterms):
        acc = Fraction(f.num.coeff(k))
        for j in range(1, min(k, f.den.degree) + 1):
            acc -= f.den.coeff(j) * out[k - j]
        out.append(acc / d0)
    return out


def nullspace_primitive(m: IntMatrix) -> tuple[int, ...]:
    """Primitive positive integer kernel vector of a corank-one matrix.

    Raises RankError unless the kernel has dimension exactly 1 and the
    generator can be scaled to have all entries positive.
    """
    n, cols = m.nrows, m.ncols
    a = [[Fraction(v) for v in row] for row in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, n) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [v / pv for v in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(cols) if c not in pivots]
    if len(free) != 1:
        raise RankError(f"kernel dimension is {len(free)}, expected 1")
    fc = free[0]
    vec = [Fraction(0)] * cols
    vec[fc] = Fraction(1)
    for row_idx, pc in enumerate(pivots):
        vec[pc] = -a[row_idx][fc]
    denom = math.lcm(*(v.denominator for v in vec))
    ints = [int(v * denom) for v in vec]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    if all(v < 0 for v in ints):
        ints = [-v for v in ints]
    if any(v <= 0 for v in ints):
        raise RankError("kernel vector is not strictly positive")
    return tuple(ints)


def vec_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise DimensionError("vector length mismatch")
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise DimensionError("vector length mismatch")
    return tuple(x - y for x, y in zip(a, b))


_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(?:([A-Za-z])(?:\^(\d+))?)?$")


def format_poly(p: IntPoly, var: str = "t") -> str:
    """Render ascending: '1 + 2*t^3 - t^5'; unit coefficients are elided."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def parse_poly(text: str, var: str = "t") -> IntPoly:
    """Inverse of format_poly (also accepts explicit '^1' and '1*' forms)."""
    s = text.strip()
    if s == "0":
        return IntPoly.zero()
    s = s.replace("-", "+-").lstrip("+")
    coeffs: dict[int, int] = {}
    for chunk in s.split("+"):
        term = chunk.strip()
        if not term:
            raise ValueError(f"malformed polynomial text: {text!r}")
        sign = 1
        if term.startswith("-"):
            sign = -1
            term = term[1:].strip()
        m = _TERM_RE.match(term.replace(" ", ""))
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"malformed term {chunk.strip()!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            k = 0
        else:
            if m.group(2) != var:
                raise ValueError(f"unexpected variable {m.group(2)!r}, expected {var!r}")
            k = int(m.group(3)) if m.group(3) else 1
        coeffs[k] = coeffs.get(k, 0) + sign * coeff
    top = max(coeffs)
    return IntPoly(coeffs.get(k, 0) for k in range(top + 1))


def format_ratfunc(f: RatFunc, var: str = "t") -> str:
    if f.is_polynomial():
        return format_poly(f.num, var)
    return f"({format_poly(f.num, var)}) / ({format_poly(f.den, var)})"
