from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from antiramsey.errors import DivisionNotExact, InvalidBound, PoleAtZero
from antiramsey.poly import (
    IntPolynomial as P,
    RationalFunction as R,
    poly_arith,
    rational_from_series,
    ratfun_ops,
    reverse,
    series_expand,
)

coeff_lists = st.lists(st.integers(-9, 9), max_size=6)


def test_difference_of_squares():
    assert poly_arith(P([-1, 1]), P([1, 1]), "mul") == P([-1, 0, 1])


def test_exact_divide():
    q = poly_arith(P([0, -1, 0, 1]), P([-1, 1]), "exact_divide")
    assert q == P([0, 1, 1])
    assert q * P([-1, 1]) == P([0, -1, 0, 1])


def test_exact_divide_remainder():
    with pytest.raises(DivisionNotExact) as info:
        P([1, 0, 1]).exact_divide(P([-1, 1]))
    assert info.value.remainder == P([2])


def test_exact_divide_non_integral_quotient():
    with pytest.raises(DivisionNotExact):
        P([1]).exact_divide(P([2]))


def test_zero_degree_sentinel():
    assert P([0, 0]).degree == -1
    assert P().is_zero()
    assert P([3, 0, 0]).coeffs == (3,)


def test_reverse_examples():
    assert reverse(P([1, 1, 1]), 2) == P([1, 1, 1])
    assert reverse(P([1, 2]), 3) == P([0, 0, 2, 1])
    assert reverse(P([0, -1, 0, 1]), 3) == P([1, 0, -1])
    with pytest.raises(InvalidBound):
        reverse(P([0, 0, 1]), 1)


@given(coeff_lists, st.integers(0, 4))
def test_reverse_involution(c, extra):
    p = P(c)
    bound = max(p.degree, 0) + extra
    assert reverse(reverse(p, bound), bound) == p


def test_ratfun_examples():
    assert ratfun_ops(R(P([-1, 0, 1]), P([-1, 1])), R(P([1, 1])), "eq")
    one_minus_t = P([1, -1])
    f = R(P([1, 1]), one_minus_t ** 2)
    assert ratfun_ops(f, None, "substitute_reciprocal") == R(P([0, 1, 1]), P([-1, 1]) ** 2)
    assert ratfun_ops(R(1, one_minus_t), R(1, one_minus_t), "mul") == R(1, one_minus_t ** 2)


def test_canonical_form():
    f = R(P([2, 2]), P([-2, 0, 2]))  # 2(1+t) / 2(t^2-1) = 1/(t-1)
    assert f.num == P([1]) and f.den == P([-1, 1])
    g = R(P([1]), P([1, -1]))
    assert g.den.leading > 0 and g.num == P([-1])


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ratfun_eq_invariant_under_common_factor(a, b, s):
    p, q, s = P(a), P(b), P(s)
    if q.is_zero() or s.is_zero():
        return
    lhs, rhs = R(p * s, q * s), R(p, q)
    assert lhs == rhs
    # structural equality of canonical forms agrees with cross-multiplication
    assert (lhs.num, lhs.den) == (rhs.num, rhs.den)


def test_series_examples():
    assert series_expand(R(P([1, 1]), P([1, -1]) ** 2), 3) == [1, 3, 5, 7]
    assert series_expand(R(1, P([1, -1])), 2) == [1, 1, 1]
    assert series_expand(R(P([1, 1]), P([1, -1]) ** 3), 2) == [1, 4, 9]
    assert series_expand(R(1, P([2, 0])), 1) == [Fraction(1, 2), 0]
    with pytest.raises(PoleAtZero):
        series_expand(R(1, P([0, 1])), 2)


def test_rational_from_series_roundtrip():
    # sum_{m>=1} (2m-1) t^m = t(1+t)/(1-t)^2
    f = rational_from_series([0, 1, 3, 5], 1)
    assert f == R(P([0, 1, 1]), P([1, -1]) ** 2)
    assert series_expand(f, 6) == [0, 1, 3, 5, 7, 9, 11]


def test_json_roundtrip():
    f = R(P([0, 1, 1]), P([1, -2, 1]))
    assert f.to_json() == {"num": [0, 1, 1], "den": [1, -2, 1]}
    assert R.from_json(f.to_json()) == f
