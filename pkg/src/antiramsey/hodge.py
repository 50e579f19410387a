"""Hodge filtration data from delta-vectors and the chromatic/Ehrhart cross-identities.

The hypersurface itself is never built. Filtration quotient dimensions are
read off the delta-vector of its Newton polytope, which is assumed
P-regular; that assumption is carried as a flag in every report.

For S in the apex family, chi(S)(t) = t^d (t-1)^c h_T(1/t) with T = T(S),
c = codim T and d = n - c. The identities below are all rearrangements of
this one, combined with h_T = delta_P for compressed or unimodular
triangulations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chromatic import T_MINUS_ONE, chi_polynomial, part2_exponent, verify_identity_part2
from .errors import DimensionMismatch, DivisionNotExact, ExactDivisionFailed
from .poly import IntPolynomial, RationalFunction, rational_from_series, series_expand, t_power
from .polytope import (
    DeltaVector,
    LatticePolytope,
    Triangulation,
    count_points,
    delta_vector,
    ehrhart_polynomial,
    ehrhart_series,
    is_compressed,
    verify_hstar_eq_h,
)
from .reports import VerificationReport
from .simplicial import PropertyIWitness, SimplicialComplex, auxiliary_complex, is_isomorphic

SIGN_NOTE = ("sign (-1)^c applied: without it the extracted polynomial is the negative "
             "of h_T(S) whenever the codimension c is odd")


@dataclass(frozen=True)
class HodgeDims:
    N: int
    full: tuple[int, ...]
    primitive: tuple[int, ...]

    def to_json(self) -> dict:
        return {"N": self.N, "full": list(self.full), "primitive": list(self.primitive)}


def hodge_dims_from_delta(delta, N: int) -> HodgeDims:
    """Filtration quotient dims of H^(N-1) of a generic hypersurface with Newton polytope P.

    full[i] = delta_(N-i) for i < N-1 and delta_1 + N for i = N-1;
    the primitive part drops the +N.
    """
    d = tuple(delta)
    if len(d) != N + 1:
        raise DimensionMismatch(f"delta-vector of length {len(d)} does not fit torus dimension {N}")
    if N < 1:
        raise DimensionMismatch("torus dimension must be at least 1")
    primitive = tuple(d[N - i] for i in range(N))
    full = primitive[:-1] + (primitive[-1] + N,)
    return HodgeDims(N, full, primitive)


def _hypotheses(S, w, P, T, T_S):
    out = {"assumptions": {"P_regular": True}}
    if P is None or T is None:
        out["polytope_supplied"] = False
        return out, True
    comp = is_compressed(P, T)
    out["compressed"] = comp
    out["isomorphic_to_T(S)"] = is_isomorphic(T_S, T.complex())
    ok = comp.definition_check and comp.h_equals_delta and out["isomorphic_to_T(S)"]
    return out, ok


def extracted_polynomial(S: SimplicialComplex, c: int) -> IntPolynomial:
    """(-1)^c t^n chi(S)(1/t) / (t-1)^c by exact division."""
    chi = chi_polynomial(S).polynomial
    top = chi.reverse(S.n)
    try:
        q = top.exact_divide(T_MINUS_ONE ** c)
    except DivisionNotExact as exc:
        raise ExactDivisionFailed(f"t^n chi(1/t) is not divisible by (t-1)^{c}") from exc
    return q * (-1) ** c


def chromatic_hodge_coefficients(S: SimplicialComplex, w: PropertyIWitness,
                                 P: LatticePolytope | None = None,
                                 T: Triangulation | None = None) -> VerificationReport:
    """Coefficients of the extracted polynomial against delta_P and primitive Hodge dims.

    With m + 1 = N = dim P, the coefficient of t^i for i = 1..N is claimed
    to equal the primitive dimension at filtration level N - i, i.e. delta_i.
    """
    T_S = auxiliary_complex(S, w)
    n = S.n
    d = part2_exponent(S, T_S)
    c = n - d
    poly = extracted_polynomial(S, c)
    h_T = T_S.h_polynomial()
    hyp, hyp_ok = _hypotheses(S, w, P, T, T_S)
    d_literal = S.krull_dim
    chi = chi_polynomial(S).polynomial
    literal = RationalFunction(chi.reverse(n), T_MINUS_ONE ** (n - d_literal))
    details = {"n": n, "d": d, "d_literal": d_literal, "codim": c, "h_T": h_T,
               "literal_form": literal, "literal_form_equals_h_T": literal == RationalFunction(h_T),
               "sign_note": SIGN_NOTE, **hyp}
    if P is not None:
        delta = delta_vector(P)
        N = P.dim
    else:
        N = max(T_S.krull_dim, 1)
        delta = DeltaVector(tuple(poly.coeff(i) for i in range(N + 1)))
    details["delta"] = delta
    ok = poly == h_T and poly == delta.polynomial
    claims = []
    try:
        dims = hodge_dims_from_delta(delta, N)
        details["hodge"] = dims
        for i in range(1, N + 1):
            coeff = poly.coeff(i)
            level = N - i
            claims.append({"i": i, "coefficient": coeff, "filtration_level": level,
                           "primitive_dim": dims.primitive[level], "pass": coeff == dims.primitive[level]})
    except DimensionMismatch as exc:
        details["hodge_error"] = str(exc)
        ok = False
    details["claims"] = claims
    ok = ok and all(cl["pass"] for cl in claims)
    return VerificationReport("(-1)^c t^n chi(S)(t^-1) / (t-1)^c = h_T(S)(t) = delta_P(t)",
                              hyp_ok, poly, h_T, ok and hyp_ok, details)


def negative_ehrhart_series(P: LatticePolytope) -> RationalFunction:
    """sum_{m >= 1} E(P, -m) t^m from the Ehrhart polynomial at negative integers."""
    E = ehrhart_polynomial(P)
    values = [0] + [int(E(-m)) for m in range(1, P.dim + 2)]
    return rational_from_series(values, P.dim)


def verify_compressed_chain(S: SimplicialComplex, w: PropertyIWitness,
                            P: LatticePolytope, T: Triangulation) -> VerificationReport:
    """Chain from chi(S) through h_T(S) and delta_P to the negative Ehrhart series.

    (i)   chi(S)(t) / (t^d (t-1)^(n-d)) = h_T(S)(1/t)
    (ii)  h_T(S)(t) = delta_P(t)
    (iii) E~_P(t) = -E_P(1/t)
    (iv)  chi(S)(t) / (t^(d-r-1) (t-1)^(n-d)) = -(t-1)^(r+1) E~_P(t),  r = dim P

    The forms with (t^(r+1) - 1)(1 + E~_P(t)) and (t^r - 1)(1 + E~_P(t))
    on the right are evaluated as well and reported.
    """
    part2 = verify_identity_part2(S, w)
    T_S = auxiliary_complex(S, w)
    hyp, hyp_ok = _hypotheses(S, w, P, T, T_S)
    n = S.n
    d = part2.details["d"]
    r = P.dim
    chi = RationalFunction(chi_polynomial(S).polynomial)
    h_T = T_S.h_polynomial()
    delta = delta_vector(P)
    E_neg = negative_ehrhart_series(P)
    E_recip = ehrhart_series(P).substitute_reciprocal()
    step_ii = h_T == delta.polynomial
    step_iii = E_neg == -E_recip
    lhs = chi / (t_power(d - r - 1) * RationalFunction(T_MINUS_ONE ** (n - d)))
    rhs = -RationalFunction(T_MINUS_ONE ** (r + 1)) * E_neg
    step_iv = lhs == rhs
    # older indexing with dim P = m + 1
    m = r - 1
    lhs_m = chi / (t_power(d - m - 2) * RationalFunction(T_MINUS_ONE ** (n - d)))
    displayed = (t_power(m + 2) - 1) * (1 + E_neg)
    proof_form = (t_power(m + 1) - 1) * (1 + E_neg)
    details = {
        "n": n, "d": d, "r": r,
        "i_part2": part2.passed, "ii_h_equals_delta": step_ii,
        "iii_negative_series": step_iii, "iv_chain": step_iv,
        "E_tilde": E_neg, "E_P_reciprocal": E_recip,
        "displayed_form": {"lhs": lhs_m, "rhs": displayed, "pass": lhs_m == displayed},
        "proof_form": {"lhs": lhs_m, "rhs": proof_form, "pass": lhs_m == proof_form},
        **hyp,
    }
    ok = part2.passed and step_ii and step_iii and step_iv
    return VerificationReport("chi(S)(t) / (t^(d-r-1)(t-1)^(n-d)) = -(t-1)^(r+1) E~_P(t)",
                              hyp_ok, lhs, rhs, ok and hyp_ok, details)


def verify_lattice_coh(S: SimplicialComplex, w: PropertyIWitness, P: LatticePolytope,
                       T_full: Triangulation, order: int = 8) -> VerificationReport:
    """chi(S)(t) / (t^(e-r-1) (t-1)^(n-e+r+1)) = E_P(1/t) for a unimodular triangulation.

    e = n - codim T(S), r = dim P. The right side is also compared as a
    power series with (-1)^(r+1) sum_{m >= 1} E+(P, m) t^m up to ``order``.
    """
    hstar = verify_hstar_eq_h(P, T_full)
    T_S = auxiliary_complex(S, w)
    iso = is_isomorphic(T_S, T_full.complex())
    n = S.n
    e = part2_exponent(S, T_S)
    r = P.dim
    chi = RationalFunction(chi_polynomial(S).polynomial)
    lhs = chi / (t_power(e - r - 1) * RationalFunction(T_MINUS_ONE ** (n - e + r + 1)))
    rhs = ehrhart_series(P).substitute_reciprocal()
    exact = lhs == rhs
    got = series_expand(lhs, order) if lhs.den.coeff(0) != 0 else None
    want = [0] + [(-1) ** (r + 1) * count_points(P, m, "interior") for m in range(1, order + 1)]
    series_ok = got == want
    hyp_ok = hstar.passed and iso
    details = {"n": n, "e": e, "e_literal": S.krull_dim, "r": r,
               "h_star_equals_h": hstar.passed, "isomorphic_to_T(S)": iso,
               "series": got, "interior_series": want, "series_pass": series_ok,
               "assumptions": {"P_regular": True}}
    return VerificationReport("chi(S)(t) / (t^(e-r-1)(t-1)^(n-e+r+1)) = E_P(t^-1)",
                              hyp_ok, lhs, rhs, exact and series_ok and hyp_ok, details)
