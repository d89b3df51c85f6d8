"""Dynkin diagram catalog: Cartan matrices, bipartitions, foldings.

Vertex conventions, fixed once for the whole package:

* extended diagrams list the affine vertex first (index 0), followed by the
  finite vertices in the order of the corresponding finite diagram;
* A_n is the chain a1..an, extended by a vertex joined to both ends
  (a double bond for n = 1, a cycle otherwise);
* D_m is the chain d1..d_{m-2} with the fork f1, f2 on d_{m-2}; the affine
  vertex forks with d1 on d2;
* E6 is ordered (x0, x1, x2, y1, y2, y3) with x0 the degree-3 vertex,
  arms x1-y1-x0, x2-y2-x0 and y3-x0; the affine vertex sits on y3;
* E7 is the chain e1..e6 with e7 on e3, affine vertex on e1;
* E8 is the chain e1..e7 with e8 on e5, affine vertex on e1;
* B_n / C_n are chains whose last bond is doubled, K[n-1][n-2] = -2 for B
  and K[n-2][n-1] = -2 for C;
* the multiply-laced extended diagrams are all produced by fold():
  G2 from extended D4, G2dual from extended E6 (order-3 symmetries),
  F4 from extended E7, F4dual from extended E6 (order-2 arm swaps),
  C from the even cycle, B and DD and CD from extended D diagrams
  (end-pair identifications).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import (
    CatalogCorruptionError,
    DomainError,
    FoldingError,
    UnsupportedFamilyError,
)
from .exact import IntMatrix, nullspace_primitive

FAMILIES = ("A", "D", "E6", "E7", "E8", "B", "C", "F4", "G2", "G2dual", "F4dual", "DD", "CD")
RANKED = {"A": 1, "D": 4, "B": 2, "C": 2, "DD": 3, "CD": 2}
EXTENDED_ONLY = ("G2dual", "F4dual", "DD", "CD")
SIMPLY_LACED = ("A", "D", "E6", "E7", "E8")

_ID_RE = re.compile(r"^(DD|CD|[ABCD])(\d+)$")


@dataclass(frozen=True)
class DiagramId:
    """Family name plus rank for the ranked families (A, D, B, C, DD, CD)."""

    family: str
    rank: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise UnsupportedFamilyError(f"unknown family {self.family!r}")
        if self.family in RANKED:
            if self.rank is None:
                raise DomainError(f"family {self.family} needs a rank")
            if self.rank < RANKED[self.family]:
                raise DomainError(
                    f"family {self.family} needs rank >= {RANKED[self.family]}"
                )
        elif self.rank is not None:
            raise DomainError(f"family {self.family} does not take a rank")

    @classmethod
    def parse(cls, text: str) -> "DiagramId":
        s = text.strip()
        if s in ("E6", "E7", "E8", "F4", "G2", "F4dual", "G2dual"):
            return cls(s)
        m = _ID_RE.match(s)
        if not m:
            raise UnsupportedFamilyError(f"cannot parse diagram id {text!r}")
        return cls(m.group(1), int(m.group(2)))

    @property
    def text(self) -> str:
        return self.family if self.rank is None else f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Diagram:
    """A diagram instance: vertices, Cartan matrix and derived structure.

    bipartition is (part_x, part_y) with both parts mutually non-adjacent,
    or None when the underlying graph has an odd cycle.  The orientation
    (which class is called y) follows the rules in coxeter.py.  u0 lists
    the vertices adjacent to the affine vertex (for a finite diagram: the
    vertices its extension would attach to).
    """

    did: DiagramId | None
    extended: bool
    labels: tuple[str, ...]
    cartan: IntMatrix
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    affine_index: int | None
    u0: tuple[int, ...] | None
    display: tuple[tuple[tuple[int, int], ...], ...] | None = None
    fold_source: tuple[str, tuple[tuple[str, ...], ...], str] | None = None

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> int:
        return self.size - 1 if self.extended else self.size

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(
            j for j in range(self.size) if j != i and self.cartan[i, j] != 0
        )


def _two_coloring(k: IntMatrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    n = k.nrows
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if j == i or k[i, j] == 0:
                    continue
                if color[j] == -1:
                    color[j] = 1 - color[i]
                    queue.append(j)
                elif color[j] == color[i]:
                    return None
    part0 = tuple(i for i in range(n) if color[i] == 0)
    part1 = tuple(i for i in range(n) if color[i] == 1)
    return part0, part1


def _orient(
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None,
    affine_index: int | None,
    attach: tuple[int, ...] | None,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Order a 2-coloring as (part_x, part_y).

    part_y holds the affine vertex on extended diagrams, or all attachment
    vertices on finite ones when they share a class; the fallback puts
    vertex 0 into part_x.
    """
    if parts is None:
        return None
    p0, p1 = parts
    if affine_index is not None:
        return (p1, p0) if affine_index in p0 else (p0, p1)
    if attach:
        if all(v in p0 for v in attach):
            return (p1, p0)
        if all(v in p1 for v in attach):
            return (p0, p1)
    return (p0, p1) if 0 in p0 else (p1, p0)


def _make(
    did: DiagramId | None,
    extended: bool,
    labels: tuple[str, ...],
    cartan: IntMatrix,
    attach: tuple[int, ...] | None = None,
    display: tuple[tuple[tuple[int, int], ...], ...] | None = None,
    fold_source: tuple[str, tuple[tuple[str, ...], ...], str] | None = None,
) -> Diagram:
    n = cartan.nrows
    if cartan.ncols != n or len(labels) != n:
        raise CatalogCorruptionError("label/matrix size mismatch")
    for i in range(n):
        if cartan[i, i] != 2:
            raise CatalogCorruptionError("diagonal entry is not 2")
        for j in range(n):
            if i != j and (cartan[i, j] > 0 or (cartan[i, j] == 0) != (cartan[j, i] == 0)):
                raise CatalogCorruptionError("off-diagonal sign pattern broken")
    affine_index = 0 if extended else None
    if extended:
        attach = tuple(j for j in range(1, n) if cartan[0, j] != 0)
    parts = _orient(_two_coloring(cartan), affine_index, attach)
    return Diagram(
        did=did,
        extended=extended,
        labels=labels,
        cartan=cartan,
        bipartition=parts,
        affine_index=affine_index,
        u0=attach,
        display=display,
        fold_source=fold_source,
    )


def _simply_laced_cartan(n: int, edges: tuple[tuple[int, int], ...]) -> IntMatrix:
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        rows[i][j] = rows[j][i] = -1
    return IntMatrix(rows)


def _chain_edges(n: int, offset: int = 0) -> tuple[tuple[int, int], ...]:
    return tuple((offset + i, offset + i + 1) for i in range(n - 1))


def _finite_ade(did: DiagramId):
    """labels, edges, attach indices and display grid for a finite A/D/E diagram."""
    fam, n = did.family, did.rank
    if fam == "A":
        labels = tuple(f"a{i + 1}" for i in range(n))
        edges = _chain_edges(n)
        attach = (0,) if n == 1 else (0, n - 1)
        display = (tuple((c, c) for c in range(n)),)
        return labels, edges, attach, display
    if fam == "D":
        m = n
        labels = tuple(f"d{i + 1}" for i in range(m - 2)) + ("f1", "f2")
        edges = _chain_edges(m - 2) + ((m - 3, m - 2), (m - 3, m - 1))
        attach = (1,)
        display = (
            tuple((c, c) for c in range(m - 1)),
            ((m - 3, m - 1),),
        )
        return labels, edges, attach, display
    if fam == "E6":
        labels = ("x0", "x1", "x2", "y1", "y2", "y3")
        edges = ((0, 3), (0, 4), (0, 5), (1, 3), (2, 4))
        attach = (5,)
        display = (((0, 1), (1, 3), (2, 0), (3, 4), (4, 2)), ((2, 5),))
        return labels, edges, attach, display
    if fam == "E7":
        labels = tuple(f"e{i + 1}" for i in range(7))
        edges = _chain_edges(6) + ((2, 6),)
        attach = (0,)
        display = (tuple((c, c) for c in range(6)), ((2, 6),))
        return labels, edges, attach, display
    if fam == "E8":
        labels = tuple(f"e{i + 1}" for i in range(8))
        edges = _chain_edges(7) + ((4, 7),)
        attach = (0,)
        display = (tuple((c, c) for c in range(7)), ((4, 7),))
        return labels, edges, attach, display
    raise UnsupportedFamilyError(f"{fam} is not simply laced")


def _build_finite(did: DiagramId) -> Diagram:
    fam, n = did.family, did.rank
    if fam in SIMPLY_LACED:
        labels, edges, attach, display = _finite_ade(did)
        return _make(did, False, labels, _simply_laced_cartan(len(labels), edges),
                     attach=attach, display=display)
    if fam in ("B", "C"):
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 1):
            rows[i][i + 1] = rows[i + 1][i] = -1
        if fam == "B":
            rows[n - 1][n - 2] = -2
        else:
            rows[n - 2][n - 1] = -2
        labels = tuple(f"{fam.lower()}{i + 1}" for i in range(n))
        return _make(did, False, labels, IntMatrix(rows))
    if fam == "F4":
        k = IntMatrix(((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2)))
        return _make(did, False, ("f1", "f2", "f3", "f4"), k)
    if fam == "G2":
        return _make(did, False, ("g1", "g2"), IntMatrix(((2, -1), (-3, 2))))
    raise UnsupportedFamilyError(f"family {fam} has no finite form")


def _extend_simply_laced(did: DiagramId) -> Diagram:
    fam, n = did.family, did.rank
    if fam == "A" and n == 1:
        # double bond between the affine vertex and a1
        return _make(did, True, ("a0", "a1"), IntMatrix(((2, -2), (-2, 2))))
    labels, edges, attach, display = _finite_ade(did)
    ext_labels = ("a0",) + labels
    ext_edges = tuple((i + 1, j + 1) for i, j in edges) + tuple((0, v + 1) for v in attach)
    ext_display = tuple(tuple((c, v + 1) for c, v in row) for row in display)
    return _make(did, True, ext_labels, _simply_laced_cartan(len(ext_labels), ext_edges),
                 display=ext_display)


def fold(diagram: Diagram, orbits) -> tuple[Diagram, Diagram]:
    """Fold a diagram along an orbit partition of its vertices.

    Each orbit becomes one vertex; the new entry for the pair (A, B) is
    sum(K[i][j] for i in A) at any fixed j in B.  The partition is
    admissible only if no orbit contains a bond and the sum does not depend
    on the chosen representative j.  Returns the folded diagram together
    with its dual (transposed Cartan matrix).
    """
    k = diagram.cartan
    n = diagram.size
    resolved: list[tuple[int, ...]] = []
    for orb in orbits:
        resolved.append(tuple(diagram.index_of(v) if isinstance(v, str) else int(v) for v in orb))
    seen = sorted(v for orb in resolved for v in orb)
    if seen != list(range(n)):
        raise FoldingError("orbits do not partition the vertex set")
    for orb in resolved:
        for i in orb:
            for j in orb:
                if i != j and k[i, j] != 0:
                    raise FoldingError("orbit contains a bond")
    m = len(resolved)
    rows = [[0] * m for _ in range(m)]
    for a, orb_a in enumerate(resolved):
        for b, orb_b in enumerate(resolved):
            if a == b:
                rows[a][b] = 2
                continue
            sums = {sum(k[i, j] for i in orb_a) for j in orb_b}
            if len(sums) != 1:
                raise FoldingError("entry sum depends on the representative")
            rows[a][b] = sums.pop()
    labels = tuple("+".join(diagram.labels[v] for v in orb) for orb in resolved)
    extended = diagram.extended
    if extended:
        holder = next(a for a, orb in enumerate(resolved) if diagram.affine_index in orb)
        if holder != 0:
            order = [holder] + [a for a in range(m) if a != holder]
            rows = [[rows[a][b] for b in order] for a in order]
            labels = tuple(labels[a] for a in order)
            resolved = [resolved[a] for a in order]
    src = (
        diagram.did.text if diagram.did else "?",
        tuple(tuple(diagram.labels[v] for v in orb) for orb in resolved),
    )
    primary = _make(None, extended, labels, IntMatrix(rows),
                    fold_source=src + ("primary",))
    dual = _make(None, extended, labels, IntMatrix(rows).transpose(),
                 fold_source=src + ("dual",))
    return primary, dual


def _build_extended(did: DiagramId) -> Diagram:
    fam, n = did.family, did.rank
    if fam in SIMPLY_LACED:
        return _extend_simply_laced(did)
    if fam == "G2":
        base = build(DiagramId("D", 4), extended=True)
        folded, _ = fold(base, (("a0",), ("d2",), ("d1", "f1", "f2")))
        return replace(folded, did=did)
    if fam == "G2dual":
        base = build(DiagramId("E6"), extended=True)
        folded, _ = fold(base, (("a0", "x1", "x2"), ("y1", "y2", "y3"), ("x0",)))
        return replace(folded, did=did)
    if fam == "F4":
        base = build(DiagramId("E7"), extended=True)
        folded, _ = fold(base, (("a0", "e6"), ("e1", "e5"), ("e2", "e4"), ("e3",), ("e7",)))
        return replace(folded, did=did)
    if fam == "F4dual":
        base = build(DiagramId("E6"), extended=True)
        folded, _ = fold(base, (("a0",), ("y3",), ("x0",), ("y1", "y2"), ("x1", "x2")))
        return replace(folded, did=did)
    if fam == "C":
        base = build(DiagramId("A", 2 * n - 1), extended=True)
        orbits = [("a0",)] + [
            (f"a{i}", f"a{2 * n - i}") for i in range(1, n)
        ] + [(f"a{n}",)]
        folded, _ = fold(base, orbits)
        return replace(folded, did=did)
    if fam == "B":
        base = build(DiagramId("D", n + 2), extended=True)
        orbits = [("a0", "d1")] + [(f"d{i}",) for i in range(2, n + 1)] + [("f1", "f2")]
        folded, _ = fold(base, orbits)
        return replace(folded, did=did)
    if fam == "DD":
        base = build(DiagramId("D", n + 1), extended=True)
        orbits = [("a0",)] + [(f"d{i}",) for i in range(1, n)] + [("f1", "f2")]
        folded, _ = fold(base, orbits)
        return replace(folded, did=did)
    if fam == "CD":
        base = build(DiagramId("D", 2 * n), extended=True)
        orbits = [("a0", "f2"), ("d1", "f1")] + [
            (f"d{i}", f"d{2 * n - i}") for i in range(2, n)
        ] + [(f"d{n}",)]
        folded, _ = fold(base, orbits)
        return replace(folded, did=did)
    raise UnsupportedFamilyError(f"no extended form for family {fam}")


@lru_cache(maxsize=None)
def build(did: DiagramId, extended: bool = False) -> Diagram:
    """Construct a catalog diagram."""
    if did.family in EXTENDED_ONLY and not extended:
        raise UnsupportedFamilyError(f"family {did.family} exists only in extended form")
    return _build_extended(did) if extended else _build_finite(did)


def finite_part(diagram: Diagram) -> Diagram:
    """The diagram left after deleting the affine vertex."""
    if not diagram.extended:
        raise DomainError("finite part is defined for extended diagrams")
    sub = IntMatrix(tuple(row[1:] for row in diagram.cartan.rows[1:]))
    attach = tuple(j - 1 for j in (diagram.u0 or ()))
    did = diagram.did if diagram.did and diagram.did.family not in EXTENDED_ONLY else None
    return _make(did, False, diagram.labels[1:], sub, attach=attach)


def nil_root(diagram: Diagram) -> tuple[int, ...]:
    """Primitive positive kernel vector of the extended Cartan matrix."""
    if not diagram.extended:
        raise DomainError("nil root requires an extended diagram")
    return nullspace_primitive(diagram.cartan)


def highest_root(diagram: Diagram) -> tuple[int, ...]:
    """Coordinates of the highest root, read off the extension's nil root."""
    if diagram.extended or diagram.did is None:
        raise DomainError("highest root is computed for finite catalog diagrams")
    if diagram.did.family not in SIMPLY_LACED:
        raise UnsupportedFamilyError("highest root construction is simply-laced only")
    delta = nil_root(build(diagram.did, extended=True))
    if delta[0] != 1:
        raise CatalogCorruptionError("nil root affine coordinate is not 1")
    return delta[1:]


_GROUP_ORDER = {"E6": 24, "E7": 48, "E8": 120}


def group_order(did: DiagramId) -> int:
    """Order of the binary polyhedral group attached to a finite ADE diagram."""
    if did.family == "A":
        return did.rank + 1
    if did.family == "D":
        return 4 * (did.rank - 2)
    if did.family in _GROUP_ORDER:
        return _GROUP_ORDER[did.family]
    raise UnsupportedFamilyError("group order is tabulated for ADE families only")


def kostant_numbers(did: DiagramId) -> tuple[int, int, int, int]:
    """(a, b, h, |G|) for a finite ADE diagram, with a*b = 2|G| certified.

    a is twice the largest nil root coordinate, h the Coxeter number and
    b = h + 2 - a.
    """
    if did.family not in SIMPLY_LACED:
        raise UnsupportedFamilyError("Kostant numbers are defined for ADE families")
    from .coxeter import coxeter_number  # deferred: coxeter depends on diagram

    ext = build(did, extended=True)
    a = 2 * max(nil_root(ext))
    h = coxeter_number(build(did))
    b = h + 2 - a
    order = group_order(did)
    if a * b != 2 * order:
        raise CatalogCorruptionError(f"a*b = {a * b} but 2|G| = {2 * order}")
    return a, b, h, order


def catalog_extended() -> tuple[Diagram, ...]:
    """Every extended diagram exercised by the verification suites."""
    ids: list[DiagramId] = []
    ids += [DiagramId("A", n) for n in range(1, 9)]
    ids += [DiagramId("D", m) for m in range(4, 11)]
    ids += [DiagramId("E6"), DiagramId("E7"), DiagramId("E8")]
    ids += [DiagramId("B", n) for n in range(2, 7)]
    ids += [DiagramId("C", n) for n in range(2, 7)]
    ids += [DiagramId("F4"), DiagramId("G2"), DiagramId("F4dual"), DiagramId("G2dual")]
    ids += [DiagramId("DD", n) for n in range(3, 7)]
    ids += [DiagramId("CD", n) for n in range(2, 7)]
    return tuple(build(did, extended=True) for did in ids)
