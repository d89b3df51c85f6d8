"""Binary polyhedral groups and the Molien series oracle.

This is the only module that touches floating point.  Group elements are
2x2 complex matrices enumerated by closure from fixed generators; the
Molien sums are rounded to integers with a drift assertion before they
cross back into the exact world.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .diagram import DiagramId, build
from .errors import (
    DomainError,
    GeneratorSetError,
    IdentityViolationError,
    NumericalDriftError,
    UnsupportedFamilyError,
)
from .exact import IntMatrix, vec_add
from .kostant import mckay_operator, multiplicities
from .report import Report

Mat2 = tuple[tuple[complex, complex], tuple[complex, complex]]

_EXCEPTIONAL = {
    "binary_tetrahedral": 24,
    "binary_octahedral": 48,
    "binary_icosahedral": 120,
}
_PARAMETRIC = ("cyclic", "binary_dihedral")

_TOL = 1e-6
_STRICT = 1e-9


@dataclass(frozen=True)
class BpgId:
    """Name of a finite subgroup of the unit quaternions."""

    family: str
    n: int | None = None

    def __post_init__(self):
        if self.family == "cyclic":
            if self.n is None or self.n < 1:
                raise DomainError("cyclic group needs n >= 1")
        elif self.family == "binary_dihedral":
            if self.n is None or self.n < 2:
                raise DomainError("binary dihedral group needs n >= 2")
        elif self.family in _EXCEPTIONAL:
            if self.n is not None:
                raise DomainError(f"{self.family} takes no parameter")
        else:
            raise UnsupportedFamilyError(f"unknown group family {self.family!r}")

    @classmethod
    def parse(cls, text: str) -> "BpgId":
        s = text.strip()
        if ":" in s:
            fam, _, num = s.partition(":")
            if not num.isdigit():
                raise DomainError(f"bad group parameter in {text!r}")
            return cls(fam, int(num))
        return cls(s)

    @property
    def text(self) -> str:
        return self.family if self.n is None else f"{self.family}:{self.n}"

    @property
    def order(self) -> int:
        if self.family == "cyclic":
            return self.n
        if self.family == "binary_dihedral":
            return 4 * self.n
        return _EXCEPTIONAL[self.family]

    def paired_diagram(self) -> DiagramId:
        """McKay partner: cyclic(n) <-> A_(n-1), dihedral(n) <-> D_(n+2),
        tetrahedral <-> E6, octahedral <-> E7, icosahedral <-> E8."""
        if self.family == "cyclic":
            if self.n < 2:
                raise DomainError("cyclic:1 has no paired diagram in the catalog")
            return DiagramId.parse(f"A{self.n - 1}")
        if self.family == "binary_dihedral":
            return DiagramId.parse(f"D{self.n + 2}")
        name = {"binary_tetrahedral": "E6", "binary_octahedral": "E7",
                "binary_icosahedral": "E8"}[self.family]
        return DiagramId.parse(name)


@dataclass(frozen=True)
class BpgGroup:
    bid: BpgId
    elements: tuple[Mat2, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def traces(self) -> tuple[float, ...]:
        out = []
        for m in self.elements:
            tr = m[0][0] + m[1][1]
            if abs(tr.imag) >= _STRICT:
                raise NumericalDriftError(f"non-real trace {tr}")
            out.append(tr.real)
        return tuple(out)

    def contains_minus_identity(self) -> bool:
        return any(_near(m, ((-1, 0), (0, -1))) for m in self.elements)


def _quaternion(a: float, b: float, c: float, d: float) -> Mat2:
    """a + bi + cj + dk as a matrix in the standard SU(2) embedding."""
    return ((complex(a, b), complex(c, d)), (complex(-c, d), complex(a, -b)))


def _mul(x: Mat2, y: Mat2) -> Mat2:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def _renorm(m: Mat2) -> Mat2:
    # project back onto the unit quaternions: m = p*1 + q*j up to conjugates
    p = (m[0][0] + m[1][1].conjugate()) / 2
    q = (m[0][1] - m[1][0].conjugate()) / 2
    norm = math.sqrt(abs(p) ** 2 + abs(q) ** 2)
    p, q = p / norm, q / norm
    return ((p, q), (-q.conjugate(), p.conjugate()))


def _near(x: Mat2, y: Mat2) -> bool:
    return all(abs(x[i][j] - y[i][j]) < _TOL for i in range(2) for j in range(2))


def _generators(bid: BpgId) -> tuple[Mat2, ...]:
    if bid.family == "cyclic":
        z = cmath.exp(2j * math.pi / bid.n)
        return (((z, 0), (0, z.conjugate())),)
    if bid.family == "binary_dihedral":
        z = cmath.exp(1j * math.pi / bid.n)
        s = ((0, -1), (1, 0))
        return (((z, 0), (0, z.conjugate())), s)
    quat_i = _quaternion(0, 1, 0, 0)
    w = _quaternion(0.5, 0.5, 0.5, 0.5)
    if bid.family == "binary_tetrahedral":
        return (quat_i, w)
    if bid.family == "binary_octahedral":
        r = 1 / math.sqrt(2)
        return (quat_i, w, _quaternion(r, r, 0, 0))
    phi = (1 + math.sqrt(5)) / 2
    return (w, _quaternion(phi / 2, 1 / (2 * phi), 0.5, 0))


def enumerate_group(bid: BpgId) -> BpgGroup:
    """Closure of the generator set, checked against the expected order."""
    expected = bid.order
    identity: Mat2 = ((1, 0), (0, 1))
    elems: list[Mat2] = [identity]
    frontier = [identity]
    gens = _generators(bid)
    while frontier:
        fresh: list[Mat2] = []
        for x in frontier:
            for g in gens:
                y = _renorm(_mul(x, g))
                if any(_near(y, e) for e in elems):
                    continue
                elems.append(y)
                fresh.append(y)
                if len(elems) > expected:
                    raise GeneratorSetError(
                        f"{bid.text}: closure exceeded expected order {expected}"
                    )
        frontier = fresh
    if len(elems) != expected:
        raise GeneratorSetError(
            f"{bid.text}: closure has {len(elems)} elements, expected {expected}"
        )
    for m in elems:
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if abs(det - 1) >= _STRICT:
            raise NumericalDriftError(f"{bid.text}: determinant drifted to {det}")
        dot = m[0][0] * m[1][0].conjugate() + m[0][1] * m[1][1].conjugate()
        row0 = abs(m[0][0]) ** 2 + abs(m[0][1]) ** 2
        if abs(dot) >= _STRICT or abs(row0 - 1) >= _STRICT:
            raise NumericalDriftError(f"{bid.text}: element is not unitary")
    return BpgGroup(bid, tuple(elems))


def _molien_sums(group: BpgGroup, nterms: int) -> tuple[list[int], float]:
    """Molien coefficients 0..nterms and the worst pre-rounding deviation.

    1/det(I - tg) = 1/(1 - tr(g) t + t^2) since det g = 1, so the degree-n
    character of g on binary forms satisfies s_n = tr(g) s_(n-1) - s_(n-2).
    """
    sums = [0j] * (nterms + 1)
    for m in group.elements:
        tr = m[0][0] + m[1][1]
        prev, cur = 0j, 1 + 0j
        for n in range(nterms + 1):
            sums[n] += cur
            prev, cur = cur, tr * cur - prev
    out: list[int] = []
    worst = 0.0
    for n, total in enumerate(sums):
        value = total / group.order
        nearest = round(value.real)
        dev = max(abs(value.real - nearest), abs(value.imag))
        worst = max(worst, dev)
        if dev >= _TOL:
            raise NumericalDriftError(
                f"molien coefficient at degree {n} drifted: {value}"
            )
        if nearest < 0:
            raise IdentityViolationError(
                f"negative invariant dimension {nearest} at degree {n}"
            )
        out.append(nearest)
    return out, worst


def molien_coeffs(group: BpgGroup, nterms: int) -> list[int]:
    """dim of the degree-0..nterms invariants of the binary-form action."""
    if nterms < 0:
        raise DomainError("nterms must be >= 0")
    return _molien_sums(group, nterms)[0]


def crosscheck(bid: BpgId, nterms: int = 60) -> Report:
    """Molien series against component 0 of the paired diagram, two routes."""
    group = enumerate_group(bid)
    did = bid.paired_diagram()
    ext = build(did, extended=True)
    coeffs, worst = _molien_sums(group, nterms)
    series = multiplicities(ext, nterms + 1)
    component0 = [v[0] for v in series.vectors]
    checks = [
        (f"group order is {bid.order}", group.order == bid.order),
        (f"float deviation below {_TOL:g}", worst < _TOL),
        (f"molien series matches component 0 of {did.text} through degree {nterms}",
         coeffs == component0),
    ]
    if group.contains_minus_identity():
        checks.append(
            ("-I in group forces m0(odd) = 0", all(c == 0 for c in coeffs[1::2]))
        )
    return Report(f"molien crosscheck {bid.text} vs {did.text}", tuple(checks))


def mckay_matrix_numeric(bid: BpgId, nterms: int = 40) -> tuple[IntMatrix, Report]:
    """Clebsch-Gordan shift B v_n = v_(n-1) + v_(n+1) on the paired diagram,
    with component 0 sourced from the Molien sum rather than from Cramer.

    Traces alone cannot rebuild the full multiplicity matrix (that would
    need the irreducible characters), so the report is limited to what the
    invariant series affords: the full shift on Cramer-sourced vectors plus
    the component-0 three-term identity against the Molien series.
    """
    group = enumerate_group(bid)
    did = bid.paired_diagram()
    ext = build(did, extended=True)
    b = mckay_operator(ext)
    m0 = molien_coeffs(group, nterms + 1)
    v = multiplicities(ext, nterms + 2).vectors
    images = [b.mulvec(v[n]) for n in range(nterms + 1)]

    boundary = images[0] == v[1]  # v_(-1) is the zero representation
    shift = all(
        images[n] == vec_add(v[n - 1], v[n + 1]) for n in range(1, nterms + 1)
    )
    comp0 = images[0][0] == m0[1] and all(
        images[n][0] == m0[n - 1] + m0[n + 1] for n in range(1, nterms + 1)
    )
    checks = [
        ("B v_0 = v_1", boundary),
        (f"B v_n = v_(n-1) + v_(n+1) for n = 1..{nterms}", shift),
        ("(B v_n)_0 = m0(n-1) + m0(n+1) with molien-sourced m0", comp0),
    ]
    if bid.family == "cyclic" and bid.n >= 2:
        size = ext.size
        if size == 2:
            circulant = b.rows == ((0, 2), (2, 0))
        else:
            circulant = all(
                b[i, j] == (1 if (i - j) % size in (1, size - 1) else 0)
                for i in range(size)
                for j in range(size)
            )
        checks.append(("B is the 2-regular circulant", circulant))
    return b, Report(f"mckay shift for {bid.text} via {did.text}", tuple(checks))


def _folded_candidates(did: DiagramId) -> tuple[BpgId, ...]:
    fam, n = did.family, did.rank
    if fam in ("B", "C"):
        return (BpgId("cyclic", 2 * n), BpgId("binary_dihedral", n))
    if fam == "DD":
        return (BpgId("binary_dihedral", n - 1), BpgId("binary_dihedral", 2 * n - 2))
    if fam == "CD":
        inner = BpgId("cyclic", 4) if n == 2 else BpgId("binary_dihedral", n - 1)
        return (inner, BpgId("binary_dihedral", 2 * n - 2))
    if fam in ("F4", "F4dual"):
        return (BpgId("binary_tetrahedral"), BpgId("binary_octahedral"))
    if fam in ("G2", "G2dual"):
        return (BpgId("binary_dihedral", 2), BpgId("binary_tetrahedral"))
    raise UnsupportedFamilyError(f"{did.text} is not a folded family")


def folded_component_report(did: DiagramId, nterms: int = 24) -> Report:
    """Exploratory: compare component 0 of a folded diagram with the Molien
    series of the natural subgroup pair.  Observations only; every line is
    informational and the report never fails."""
    ext = build(did, extended=True)
    component0 = [v[0] for v in multiplicities(ext, nterms + 1).vectors]
    lines = []
    for bid in _folded_candidates(did):
        coeffs = molien_coeffs(enumerate_group(bid), nterms)
        verdict = "matches" if coeffs == component0 else "differs from"
        lines.append(
            (f"component 0 {verdict} molien series of {bid.text} (degree <= {nterms})",
             True),
        )
    return Report(f"folded molien exploration for {did.text}", tuple(lines))
