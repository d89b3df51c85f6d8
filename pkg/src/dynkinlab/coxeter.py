"""Bicolored Coxeter transformations and their characteristic polynomials.

A reflection acts on root-basis coordinates by S_i = I - e_i (row_i K).
For a bipartite diagram with classes (part_x, part_y) the bicolored pair is
w1 = prod(S_i, i in part_y) and w2 = prod(S_i, i in part_x); the Coxeter
transformation is C = w2 w1.  On a finite simply-laced diagram the class
orientation is chosen so that w2 fixes the highest root; on an extended
diagram the affine vertex sits in part_y, which makes C independent of the
choice up to similarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import Diagram, DiagramId, build
from .errors import (
    DomainError,
    ExcludedDiagramError,
    IdentityViolationError,
    MissingParameterError,
)
from .exact import IntMatrix, IntPoly, RatFunc, charpoly

L = IntPoly.x()


@dataclass(frozen=True)
class BicoloredPair:
    """The two involutions, each recorded with the vertex class it reflects."""

    w1: IntMatrix
    w2: IntMatrix
    reflects: tuple[tuple[int, ...], tuple[int, ...]]  # (class of w1, class of w2)


def reflection(diagram: Diagram, i: int) -> IntMatrix:
    k = diagram.cartan
    n = diagram.size
    return IntMatrix(
        tuple(
            tuple((1 if r == c else 0) - (k[i, c] if r == i else 0) for c in range(n))
            for r in range(n)
        )
    )


def _product_over(diagram: Diagram, part: tuple[int, ...]) -> IntMatrix:
    # vertices of one class commute, so the product is order-independent
    out = IntMatrix.identity(diagram.size)
    for i in part:
        out = out @ reflection(diagram, i)
    return out


@lru_cache(maxsize=None)
def bicolored_reflections(diagram: Diagram) -> BicoloredPair:
    if diagram.bipartition is None:
        raise ExcludedDiagramError(
            "diagram has an odd cycle, hence no bicolored decomposition"
        )
    part_x, part_y = diagram.bipartition
    return BicoloredPair(
        w1=_product_over(diagram, part_y),
        w2=_product_over(diagram, part_x),
        reflects=(part_y, part_x),
    )


def coxeter_transform(diagram: Diagram) -> IntMatrix:
    pair = bicolored_reflections(diagram)
    return pair.w2 @ pair.w1


def coxeter_number(diagram: Diagram) -> int:
    """Order of the bicolored Coxeter transformation of a finite diagram."""
    if diagram.extended:
        raise DomainError("the affine Coxeter transformation has infinite order")
    c = coxeter_transform(diagram)
    ident = IntMatrix.identity(diagram.size)
    bound = 10 * diagram.size * diagram.size
    cur = c
    for m in range(1, bound + 1):
        if cur == ident:
            return m
        cur = cur @ c
    raise DomainError(f"order exceeds the bound {bound}; diagram is not finite type")


def affine_A_charpoly(n: int, k: int) -> IntPoly:
    """Characteristic polynomial (L^(n-k+1) - 1)(L^k - 1) of the affine
    Coxeter transformation on the (n+1)-cycle with class sizes k, n+1-k."""
    if not 1 <= k <= n:
        raise DomainError(f"k must lie in 1..{n}")
    return (L ** (n - k + 1) - 1) * (L**k - 1)


_AFFINE_PARTNER = {"B": "CD", "C": "C", "D": "D", "E6": "E6", "E7": "E7",
                   "E8": "E8", "F4": "F4", "G2": "G2"}


def char_polys(did: DiagramId, k: int | None = None) -> tuple[IntPoly, IntPoly]:
    """(chi, chi_affine) for a finite catalog diagram.

    chi comes from the finite bicolored transformation.  chi_affine comes
    from the extended partner diagram: the same family for C, D, E, F4, G2,
    the CD diagram for B, and the closed form for family A, which needs the
    conjugacy parameter k of the cycle splitting.
    """
    chi = charpoly(coxeter_transform(build(did)))
    if did.family == "A":
        if k is None:
            raise MissingParameterError(
                "family A needs the parameter k to pick an affine transformation"
            )
        return chi, affine_A_charpoly(did.rank, k)
    partner = _AFFINE_PARTNER.get(did.family)
    if partner is None:
        raise DomainError(f"no affine partner for family {did.family}")
    ext = build(DiagramId(partner, did.rank), extended=True)
    chi_affine = charpoly(coxeter_transform(ext))
    if chi_affine(1) != 0:
        raise IdentityViolationError("affine characteristic polynomial misses lambda = 1")
    return chi, chi_affine


def ebeling_quotient(did: DiagramId, k: int | None = None) -> RatFunc:
    """chi / chi_affine as a reduced rational function in lambda."""
    chi, chi_affine = char_polys(did, k)
    return RatFunc(chi, chi_affine)
