"""Bicolored Coxeter transformations: involutions, orders, char polynomials."""

from __future__ import annotations

import pytest

from dynkinlab.coxeter import (
    affine_A_charpoly,
    bicolored_reflections,
    char_polys,
    coxeter_number,
    coxeter_transform,
    ebeling_quotient,
)
from dynkinlab.diagram import SIMPLY_LACED, DiagramId, build, catalog_extended, highest_root, nil_root
from dynkinlab.errors import ExcludedDiagramError, MissingParameterError
from dynkinlab.exact import IntMatrix, IntPoly, RatFunc, charpoly

L = IntPoly.x()

W1_E6 = IntMatrix(
    (
        (1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (1, 1, 0, -1, 0, 0),
        (1, 0, 1, 0, -1, 0),
        (1, 0, 0, 0, 0, -1),
    )
)
W2_E6 = IntMatrix(
    (
        (-1, 0, 0, 1, 1, 1),
        (0, -1, 0, 1, 0, 0),
        (0, 0, -1, 0, 1, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 1),
    )
)


def test_a1_pair():
    pair = bicolored_reflections(build(DiagramId("A", 1)))
    assert pair.w1 == IntMatrix(((-1,),))
    assert pair.w2 == IntMatrix.identity(1)


def test_e6_pair_matches_block_matrices():
    d = build(DiagramId("E6"))
    pair = bicolored_reflections(d)
    assert pair.w1 == W1_E6
    assert pair.w2 == W2_E6
    assert pair.reflects == ((3, 4, 5), (0, 1, 2))


def test_e6_coxeter_block_form():
    d = build(DiagramId("E6"))
    c = coxeter_transform(d)
    b = IntMatrix.identity(6) * 2 - d.cartan
    bxy = IntMatrix(tuple(row[3:] for row in b.rows[:3]))
    byx = IntMatrix(tuple(row[:3] for row in b.rows[3:]))
    # C = ((B_xy B_yx - I, -B_xy), (B_yx, -I)) in (x | y) block order
    top = IntMatrix(
        tuple(
            tuple((bxy @ byx - IntMatrix.identity(3)).rows[i] + (-bxy).rows[i])
            for i in range(3)
        )
    )
    bottom = IntMatrix(tuple(tuple(byx.rows[i] + (-IntMatrix.identity(3)).rows[i]) for i in range(3)))
    assert c == IntMatrix(top.rows + bottom.rows)


def test_excluded_diagram():
    with pytest.raises(ExcludedDiagramError):
        bicolored_reflections(build(DiagramId("A", 2), extended=True))


def test_involutions_and_determinant():
    for did in [DiagramId("A", 4), DiagramId("D", 5), DiagramId("E7"),
                DiagramId("B", 3), DiagramId("C", 4), DiagramId("F4"), DiagramId("G2")]:
        d = build(did)
        pair = bicolored_reflections(d)
        ident = IntMatrix.identity(d.size)
        assert pair.w1 @ pair.w1 == ident
        assert pair.w2 @ pair.w2 == ident
        c = coxeter_transform(d)
        assert c.det() == (1 if d.size % 2 == 0 else -1)


def test_w2_fixes_highest_root():
    for did in [DiagramId("A", 1), DiagramId("A", 3), DiagramId("A", 5),
                DiagramId("D", 4), DiagramId("D", 6), DiagramId("E6"),
                DiagramId("E7"), DiagramId("E8")]:
        d = build(did)
        beta = highest_root(d)
        assert bicolored_reflections(d).w2.mulvec(beta) == beta


def test_affine_transform_fixes_nil_root():
    for d in catalog_extended():
        if d.bipartition is None:
            continue
        delta = nil_root(d)
        assert coxeter_transform(d).mulvec(delta) == delta


def test_coxeter_numbers():
    assert coxeter_number(build(DiagramId("A", 1))) == 2
    assert coxeter_number(build(DiagramId("E6"))) == 12
    assert coxeter_number(build(DiagramId("F4"))) == 12
    assert coxeter_number(build(DiagramId("G2"))) == 6
    assert coxeter_number(build(DiagramId("B", 3))) == 6
    assert coxeter_number(build(DiagramId("D", 4))) == 6
    assert coxeter_number(build(DiagramId("E8"))) == 30


def test_char_polys_frozen():
    chi, chi_aff = char_polys(DiagramId("D", 4))
    assert chi == (L + 1) * (L**3 + 1)
    assert chi_aff == (L - 1) ** 2 * (L + 1) ** 3

    chi, chi_aff = char_polys(DiagramId("E7"))
    assert chi * (L**3 + 1) == (L + 1) * (L**9 + 1)
    assert chi_aff == (L**4 - 1) * (L**3 - 1) * (L + 1)

    chi, chi_aff = char_polys(DiagramId("B", 3))
    assert chi == L**3 + 1
    assert chi_aff == (L**2 - 1) * (L**2 - 1)

    chi, chi_aff = char_polys(DiagramId("G2"))
    assert chi == L**2 - L + 1
    assert chi_aff == (L - 1) ** 2 * (L + 1)


def test_char_polys_family_a():
    chi, chi_aff = char_polys(DiagramId("A", 5), k=3)
    assert chi * (L - 1) == L**6 - 1
    assert chi_aff == (L**3 - 1) ** 2
    with pytest.raises(MissingParameterError):
        char_polys(DiagramId("A", 5))


def test_affine_a_charpoly():
    assert affine_A_charpoly(3, 2) == (L**2 - 1) ** 2
    assert affine_A_charpoly(1, 1) == (L - 1) ** 2
    # the bicolored transformation of the 6-cycle realizes k = 3
    ca = coxeter_transform(build(DiagramId("A", 5), extended=True))
    assert charpoly(ca) == affine_A_charpoly(5, 3)
    ca = coxeter_transform(build(DiagramId("A", 3), extended=True))
    assert charpoly(ca) == affine_A_charpoly(3, 2)


def test_ebeling_quotient_values():
    q = ebeling_quotient(DiagramId("E8"))
    assert q * ((L**10 - 1) * (L**6 - 1)) == RatFunc(L**15 + 1)
    assert ebeling_quotient(DiagramId("G2")) == RatFunc(L**3 + 1, (L**2 - 1) ** 2)


def test_quotient_coincidence_spot_checks():
    assert ebeling_quotient(DiagramId("G2")) == ebeling_quotient(DiagramId("D", 4))
    assert ebeling_quotient(DiagramId("F4")) == ebeling_quotient(DiagramId("E6"))
    assert ebeling_quotient(DiagramId("C", 3)) == ebeling_quotient(DiagramId("A", 5), k=3)


def test_simply_laced_chi_divides_chi_affine_shape():
    # chi and chi_affine share the eigenvalue -1 structure: chi_affine(1) = 0
    for did in [DiagramId("D", 5), DiagramId("E6"), DiagramId("B", 4), DiagramId("C", 5)]:
        _, chi_aff = char_polys(did)
        assert chi_aff(1) == 0


def test_coxeter_number_matches_charpoly_roots():
    # C^h = I implies chi divides L^h - 1 times (L+1) powers; spot check exact orders
    for did, h in [(DiagramId("A", 2), 3), (DiagramId("D", 5), 8), (DiagramId("E6"), 12)]:
        d = build(did)
        assert coxeter_number(d) == h
        c = coxeter_transform(d)
        assert c**h == IntMatrix.identity(d.size)
        assert all(c**m != IntMatrix.identity(d.size) for m in range(1, h))
