from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from antiramsey.errors import DimensionMismatch, NotUnimodular
from antiramsey.hodge import (
    chromatic_hodge_coefficients,
    extracted_polynomial,
    hodge_dims_from_delta,
    negative_ehrhart_series,
    verify_compressed_chain,
    verify_lattice_coh,
)
from antiramsey.poly import IntPolynomial as P, RationalFunction as R
from antiramsey.polytope import LatticePolytope, Triangulation, delta_vector, ehrhart_polynomial
from antiramsey.simplicial import SimplicialComplex, apex_augment

TWO_POINTS = SimplicialComplex(2, [[0], [1]])
CYCLE8 = SimplicialComplex.from_facets([[i, (i + 1) % 8] for i in range(8)])
SEG11 = LatticePolytope([(-1,), (1,)])
SEG11_T = Triangulation([(-1,), (1,)], [(0,), (1,)])
RING = [(-1, -1), (0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0)]
SQ11 = LatticePolytope(RING)
SQ11_T = Triangulation(RING, [(i, (i + 1) % 8) for i in range(8)])


def test_hodge_examples():
    h = hodge_dims_from_delta((1, 0), 1)
    assert h.full == (1,) and h.primitive == (0,)
    h = hodge_dims_from_delta((1, 3, 0), 2)
    assert h.primitive == (0, 3) and h.full == (0, 5)
    h = hodge_dims_from_delta((1, 0, 0), 2)
    assert h.primitive == (0, 0) and h.full == (0, 2)
    with pytest.raises(DimensionMismatch):
        hodge_dims_from_delta((1, 3, 0), 3)


@given(st.integers(1, 6).flatmap(lambda N: st.tuples(st.just(N), st.lists(st.integers(0, 50), min_size=N, max_size=N))))
def test_hodge_invariants(args):
    N, tail = args
    delta = (1, *tail)
    h = hodge_dims_from_delta(delta, N)
    assert h.primitive[:-1] == h.full[:-1]
    assert h.full[-1] == h.primitive[-1] + N
    assert sum(h.primitive) == sum(delta[1:])
    assert all(x >= 0 for x in h.full + h.primitive)


def test_chromatic_hodge_two_points():
    a = apex_augment(TWO_POINTS)
    rep = chromatic_hodge_coefficients(a.S, a.witness, SEG11, SEG11_T)
    assert rep.passed and rep.lhs == P([1, 1])
    assert rep.details["claims"] == [{"i": 1, "coefficient": 1, "filtration_level": 0,
                                      "primitive_dim": 1, "pass": True}]
    # without the sign the odd-codimension quotient is -(1 + t)
    assert rep.details["literal_form"] == R(P([-1, -1]))


def test_chromatic_hodge_cycle8():
    a = apex_augment(CYCLE8)
    rep = chromatic_hodge_coefficients(a.S, a.witness, SQ11, SQ11_T)
    assert rep.passed and rep.lhs == P([1, 6, 1]) == delta_vector(SQ11).polynomial
    assert rep.details["hodge"].primitive == (1, 6)


def test_chromatic_hodge_degenerate():
    a = apex_augment(SimplicialComplex.simplex(3))
    rep = chromatic_hodge_coefficients(a.S, a.witness)
    assert rep.passed and rep.lhs == P([1])
    assert set(rep.details["hodge"].primitive) == {0}


def test_extracted_polynomial_nonnegative_on_compressed_fixtures():
    for T in (TWO_POINTS, CYCLE8, SimplicialComplex.from_facets([[0, 1], [1, 2], [2, 3], [3, 0]])):
        a = apex_augment(T)
        c = T.n - T.krull_dim
        p = extracted_polynomial(a.S, c)
        assert all(x >= 0 for x in p.coeffs)


def test_compressed_chain_segment():
    a = apex_augment(TWO_POINTS)
    rep = verify_compressed_chain(a.S, a.witness, SEG11, SEG11_T)
    assert rep.passed
    assert rep.lhs == R(P([0, 1, 1])) == rep.rhs
    assert negative_ehrhart_series(SEG11) == R(P([0, -1, -1]), P([1, -1]) ** 2)
    disp = rep.details["displayed_form"]
    assert not disp["pass"]
    assert disp["rhs"] == R(P([1, 1]) * P([1, -3]), P([-1, 1]))
    assert not rep.details["proof_form"]["pass"]


def test_compressed_chain_square():
    a = apex_augment(CYCLE8)
    rep = verify_compressed_chain(a.S, a.witness, SQ11, SQ11_T)
    assert rep.passed and rep.hypotheses_ok
    for key in ("i_part2", "ii_h_equals_delta", "iii_negative_series", "iv_chain"):
        assert rep.details[key]


def test_compressed_chain_reports_non_compressed_triangulation():
    corners = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
    square4 = SimplicialComplex.from_facets([[0, 1], [1, 2], [2, 3], [3, 0]])
    a = apex_augment(square4)
    rep = verify_compressed_chain(a.S, a.witness, SQ11, Triangulation(corners, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert not rep.hypotheses_ok and not rep.passed


def test_lattice_coh_segment():
    seg = LatticePolytope([(0,), (2,)])
    T = Triangulation([(0,), (1,), (2,)], [(0, 1), (1, 2)])
    a = apex_augment(T.complex())
    rep = verify_lattice_coh(a.S, a.witness, seg, T)
    assert rep.passed
    assert rep.lhs == R(P([0, 1, 1]), P([1, -1]) ** 2)
    assert rep.details["series"] == [0] + [2 * m - 1 for m in range(1, 9)]


def test_lattice_coh_degenerate_and_higher():
    seg = LatticePolytope([(0,), (1,)])
    T = Triangulation([(0,), (1,)], [(0, 1)])
    a = apex_augment(T.complex())
    assert a.degenerate
    rep = verify_lattice_coh(a.S, a.witness, seg, T)
    assert rep.passed and rep.lhs == R(P.monomial(2), P([1, -1]) ** 2)
    cube_pts = list(product((0, 1), repeat=3))
    simplices = []
    for order in permutations(range(3)):
        cur = [0, 0, 0]
        s = [cube_pts.index(tuple(cur))]
        for k in order:
            cur[k] = 1
            s.append(cube_pts.index(tuple(cur)))
        simplices.append(s)
    T = Triangulation(cube_pts, simplices)
    a = apex_augment(T.complex())
    assert verify_lattice_coh(a.S, a.witness, LatticePolytope(cube_pts), T).passed


def test_lattice_coh_requires_unimodular():
    tri = LatticePolytope([(0, 0), (2, 0), (0, 2)])
    T = Triangulation([(0, 0), (2, 0), (0, 2)], [(0, 1, 2)])
    a = apex_augment(T.complex())
    with pytest.raises(NotUnimodular):
        verify_lattice_coh(a.S, a.witness, tri, T)


def test_negative_series_matches_ehrhart_values():
    from antiramsey.poly import series_expand
    for Pl in (SEG11, SQ11, LatticePolytope([(0, 0), (2, 0), (0, 2)])):
        E = ehrhart_polynomial(Pl)
        got = series_expand(negative_ehrhart_series(Pl), 7)
        assert got == [0] + [E(-m) for m in range(1, 8)]
