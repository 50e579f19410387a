from itertools import combinations

import pytest

from antiramsey.chromatic import (
    chi_polynomial,
    count_colorings,
    cor18_extract,
    exists_coloring,
    verify_identity_part1,
    verify_identity_part2,
)
from antiramsey.errors import BudgetExceeded, EnumerationTooLarge, NotPropertyI
from antiramsey.poly import IntPolynomial as P, RationalFunction as R
from antiramsey.simplicial import PropertyIWitness, SimplicialComplex, apex_augment

from conftest import random_complex

TRI = SimplicialComplex.from_nonfaces(3, [[0, 1, 2]])
S4 = SimplicialComplex.from_nonfaces(4, [[0, 1, 2], [0, 2, 3]])
PATH = SimplicialComplex.from_facets([[0, 1], [1, 2]])
CYCLE8 = SimplicialComplex.from_facets([[i, (i + 1) % 8] for i in range(8)])
TWO_POINTS = SimplicialComplex(2, [[0], [1]])


def k_n_triangles(n):
    edges = list(combinations(range(n), 2))
    idx = {e: k for k, e in enumerate(edges)}
    tris = [[idx[(a, b)], idx[(a, c)], idx[(b, c)]] for a, b, c in combinations(range(n), 3)]
    return SimplicialComplex.from_nonfaces(len(edges), tris)


def test_chi_examples():
    assert chi_polynomial(TRI).polynomial == P([0, -1, 0, 1])
    assert chi_polynomial(S4).polynomial == P([0, 1, -2, 0, 1])
    for n in range(5):
        assert chi_polynomial(SimplicialComplex.simplex(n)).polynomial == P.monomial(n)


def test_chi_examples_match_brute_force():
    for S in (TRI, S4):
        chi = chi_polynomial(S)
        assert [chi(t) for t in range(5)] == [count_colorings(S, t) for t in range(5)]


def test_count_examples():
    assert count_colorings(TRI, 2) == 6
    assert count_colorings(TRI, 1) == 0
    assert count_colorings(SimplicialComplex.simplex(3), 2) == 8
    assert count_colorings(SimplicialComplex.simplex(0), 0) == 1
    with pytest.raises(EnumerationTooLarge):
        count_colorings(SimplicialComplex.simplex(30), 2)


def test_exists_examples():
    assert not exists_coloring(k_n_triangles(6), 2)
    assert exists_coloring(k_n_triangles(5), 2)
    for n in range(1, 5):
        assert exists_coloring(SimplicialComplex.simplex(n), 1)
    with pytest.raises(BudgetExceeded):
        exists_coloring(k_n_triangles(6), 2, budget=10)


def test_methods_agree(rng):
    for _ in range(60):
        S = random_complex(rng)
        assert chi_polynomial(S).polynomial == chi_polynomial(S, method="subsets").polynomial


def test_chi_invariants(rng):
    for _ in range(200):
        S = random_complex(rng)
        chi = chi_polynomial(S)
        p = chi.polynomial
        if any(len(s) == 1 for s in S.minimal_nonfaces):
            # a vertex that is not a face is monochromatic under every coloring
            assert p.is_zero()
        else:
            assert p.degree == S.n and p.leading == 1
        assert p(0) == 0
        assert p(1) == (1 if chi.r == 0 else 0)
        for t in range(4):
            assert exists_coloring(S, t) == (p(t) > 0)


def test_adding_a_nonface_never_increases(rng):
    for _ in range(80):
        S = random_complex(rng, n_max=7, r_max=4)
        nf = [set(s) for s in S.minimal_nonfaces]
        cand = set(rng.sample(range(S.n), rng.randint(1, S.n)))
        if any(c <= cand or cand <= c for c in nf):
            continue
        bigger = SimplicialComplex.from_nonfaces(S.n, [*map(sorted, nf), sorted(cand)])
        p, q = chi_polynomial(S).polynomial, chi_polynomial(bigger).polynomial
        assert all(q(t) <= p(t) for t in range(6))


def test_part1_examples():
    rep = verify_identity_part1(TRI)
    assert rep.passed and rep.lhs == R(P([0, -1])) and rep.rhs == R(P([0, -1]))
    rep = verify_identity_part1(S4)
    assert rep.details["h"] == P([1, 1, 1, -1])
    assert rep.passed and rep.lhs == R(P([0, 1, -2]))
    rep = verify_identity_part1(SimplicialComplex.from_nonfaces(4, [[0, 1], [2, 3]]))
    assert not rep.hypotheses_ok and not rep.passed and "hypothesis_failed" in rep.details


def test_part2_examples():
    for T, chi in [(TWO_POINTS, P([0, -1, 0, 1])), (PATH, P([0, 0, -1, 0, 1]))]:
        res = apex_augment(T)
        rep = verify_identity_part2(res.S, res.witness)
        assert rep.passed and rep.details["chi"] == chi
        assert rep.details["literal_form_pass"]
    res = apex_augment(CYCLE8)
    rep = verify_identity_part2(res.S, res.witness)
    assert rep.passed and rep.details["h_T"] == P([1, 6, 1])
    # with d = dim S + 1 = 8 the identity is off by (t-1)^5 / t^5
    assert rep.details["d"] == 3 and rep.details["d_literal"] == 8
    assert not rep.details["literal_form_pass"]


def test_part2_rejects_bad_witness():
    with pytest.raises(NotPropertyI):
        verify_identity_part2(TRI, PropertyIWitness(((0,),), apex=2))


def test_cor18():
    res = cor18_extract(TRI)
    assert res.hypotheses["a"] == 1
    # P(u) = 1 - u^-3 (u^3 - u) = u^-2
    assert res.candidate == R(1, P.monomial(2))
    assert not res.is_polynomial
    two = SimplicialComplex.from_nonfaces(4, [[0, 1], [2, 3]])
    res = cor18_extract(two)
    h = two.h_polynomial()
    assert res.hypotheses["a"] == 2 and res.hypotheses["h"] == h == P([1, 2, 1])
    assert res.hypotheses["h_a_plus_1_ge_3"] is False
    assert res.candidate is not None
    bad = SimplicialComplex.from_nonfaces(8, [[0, 1, 2], [0, 3, 4], [5, 6, 7]])
    res = cor18_extract(bad)
    assert not res.hypotheses["c_uniform"] and res.candidate is None
