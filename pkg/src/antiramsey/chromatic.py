"""Simplicial chromatic polynomials, coloring counts and the h-vector identities.

chi(S)(t) counts maps V(S) -> {1..t} under which no minimal nonface is
monochromatic. By inclusion-exclusion over sets A of minimal nonfaces,

    chi(S)(t) = sum_A (-1)^|A| t^(n - |U A| + c(A))

where c(A) counts connected components of the hypergraph with edges A.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import BudgetExceeded, CapExceeded, EnumerationTooLarge, NotPropertyI
from .poly import IntPolynomial, RationalFunction, t_power
from .reports import VerificationReport
from .simplicial import (
    PropertyIWitness,
    SimplicialComplex,
    auxiliary_complex,
    bits,
    check_property_I,
    uniform_c_check,
)
from .unionfind import DisjointSet

MAX_NONFACES = 24
MAX_STATES = 1_000_000
MAX_COLORINGS = 10**8

T_MINUS_ONE = IntPolynomial([-1, 1])


@dataclass(frozen=True)
class ChromaticResult:
    polynomial: IntPolynomial
    n: int
    r: int

    def __call__(self, t):
        return self.polynomial(t)


def _merge_states(n: int, nonfaces: list[int]) -> IntPolynomial:
    # Group the 2^r subsets by their component structure; the coefficient of
    # each structure is the signed number of subsets producing it.
    states: dict[tuple[int, ...], int] = {(): 1}
    for sigma in nonfaces:
        nxt = dict(states)
        for comps, c in states.items():
            merged = sigma
            rest = []
            for comp in comps:
                if comp & merged:
                    merged |= comp
                else:
                    rest.append(comp)
            rest.append(merged)
            key = tuple(sorted(rest))
            v = nxt.get(key, 0) - c
            if v:
                nxt[key] = v
            else:
                nxt.pop(key, None)
        states = nxt
        if len(states) > MAX_STATES:
            raise CapExceeded(f"{len(states)} component structures exceeds cap {MAX_STATES}")
    coeffs = [0] * (n + 1)
    for comps, c in states.items():
        union = 0
        for comp in comps:
            union |= comp
        coeffs[n - union.bit_count() + len(comps)] += c
    return IntPolynomial(coeffs)


def _subset_sum(n: int, nonfaces: list[int]) -> IntPolynomial:
    coeffs = [0] * (n + 1)
    r = len(nonfaces)
    for k in range(r + 1):
        for A in combinations(range(r), k):
            ds = DisjointSet(n)
            union = 0
            for i in A:
                vs = bits(nonfaces[i])
                union |= nonfaces[i]
                for v in vs[1:]:
                    ds.union(vs[0], v)
            # every vertex outside the union is its own component
            coeffs[ds.count] += (-1) ** k
    return IntPolynomial(coeffs)


def chi_polynomial(S: SimplicialComplex, method: str = "merge") -> ChromaticResult:
    """Inclusion-exclusion over subsets of minimal nonfaces.

    ``method="subsets"`` walks all 2^r subsets with a fresh union-find each;
    the default groups subsets by component structure and gives the same
    polynomial faster. The 2^r walk is capped at r <= MAX_NONFACES; the
    grouped sum is capped by the number of distinct structures instead.
    """
    nf = list(S.nonface_masks)
    if method == "merge":
        poly = _merge_states(S.n, nf)
    elif method == "subsets":
        if len(nf) > MAX_NONFACES:
            raise CapExceeded(f"{len(nf)} minimal nonfaces exceeds cap {MAX_NONFACES}")
        poly = _subset_sum(S.n, nf)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ChromaticResult(poly, S.n, len(nf))


def count_avoiding_colorings(n: int, blocks, t: int, chunk: int = 1 << 18) -> int:
    """Count maps range(n) -> range(t) under which no block is monochromatic.

    Plain enumeration of all t^n maps, vectorised in chunks.
    """
    if t < 0:
        raise ValueError("number of colors must be nonnegative")
    total = t ** n
    if total > MAX_COLORINGS:
        raise EnumerationTooLarge(f"{t}^{n} colorings exceeds {MAX_COLORINGS}")
    blocks = [list(b) for b in blocks]
    if n == 0:
        return 0 if any(not b for b in blocks) else 1
    if t == 0:
        return 0
    powers = t ** np.arange(n, dtype=np.int64)
    count = 0
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        colors = (idx[:, None] // powers[None, :]) % t
        ok = np.ones(len(idx), dtype=bool)
        for b in blocks:
            block = colors[:, b]
            ok &= ~(block == block[:, :1]).all(axis=1)
        count += int(ok.sum())
    return count


def count_colorings(S: SimplicialComplex, t: int) -> int:
    """Brute-force count over all t^n colorings (independent of chi_polynomial)."""
    if t > 1 and t ** S.n > MAX_COLORINGS:
        raise EnumerationTooLarge(f"{t}^{S.n} colorings exceeds {MAX_COLORINGS}")
    return count_avoiding_colorings(S.n, [bits(m) for m in S.nonface_masks], t)


def exists_coloring(S: SimplicialComplex, t: int, budget: int | None = None) -> bool:
    """Backtracking search for a coloring with no monochromatic minimal nonface.

    Vertices are taken most-constrained first. A color larger than every
    color used so far is only tried once (colors are interchangeable), which
    prunes symmetric branches without changing the answer.
    """
    n = S.n
    if n == 0:
        return True
    if t <= 0:
        return False
    nonfaces = [bits(m) for m in S.nonface_masks]
    load = [0] * n
    for s in nonfaces:
        for v in s:
            load[v] += 1
    order = sorted(range(n), key=lambda v: (-load[v], v))
    pos = {v: k for k, v in enumerate(order)}
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for s in nonfaces:
        closing[max(pos[v] for v in s)].append(s)
    color = [-1] * n
    nodes = 0

    def extend(k: int, used: int) -> bool:
        nonlocal nodes
        if k == n:
            return True
        v = order[k]
        for c in range(min(t, used + 1)):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"search exceeded {budget} nodes")
            color[v] = c
            if any(all(color[u] == c for u in s) for s in closing[k]):
                continue
            if extend(k + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return extend(0, 0)


def reciprocal(p: IntPolynomial) -> RationalFunction:
    """p(1/t) as a rational function."""
    if p.is_zero():
        return RationalFunction(p)
    return RationalFunction(p.reverse(p.degree), IntPolynomial.monomial(p.degree))


def verify_identity_part1(S: SimplicialComplex) -> VerificationReport:
    """chi(S)(t) - t^n = t^(n+1) ((1 - 1/t)^(n-d) h_S(1/t) - 1), d = Krull dimension."""
    n, d = S.n, S.krull_dim
    hyp = uniform_c_check(S, "all_one")
    chi = chi_polynomial(S).polynomial
    h = S.h_polynomial()
    lhs = RationalFunction(chi - IntPolynomial.monomial(n))
    one_minus_inv = RationalFunction(T_MINUS_ONE, IntPolynomial.monomial(1))
    rhs = t_power(n + 1) * (one_minus_inv ** (n - d) * reciprocal(h) - 1)
    equal = lhs == rhs
    details = {"n": n, "d": d, "chi": chi, "h": h, "equality": equal}
    if not hyp.holds:
        details["hypothesis_failed"] = f"c(I) = 2 for nonface indices {hyp.witness}"
    return VerificationReport("chi(S)(t) - t^n = t^(n+1)((1 - t^-1)^(n-d) h_S(t^-1) - 1)",
                              hyp.holds, lhs, rhs, hyp.holds and equal, details)


def part2_exponent(S: SimplicialComplex, T: SimplicialComplex) -> int:
    """Exponent d for which chi(S) = t^d (t-1)^(n-d) h_T(1/t) holds on the apex family.

    n - d must equal the codimension of T (its vertex count minus Krull
    dimension); for an apex augmentation this gives d = dim T + 2.
    """
    return S.n - (T.n - T.krull_dim)


def verify_identity_part2(S: SimplicialComplex, w: PropertyIWitness) -> VerificationReport:
    """chi(S)(t) / (t^d (t-1)^(n-d)) = h_T(S)(1/t) as rational functions."""
    if not check_property_I(S, w):
        raise NotPropertyI("witness fails property I")
    T = auxiliary_complex(S, w)
    n = S.n
    d = part2_exponent(S, T)
    d_literal = S.krull_dim
    chi = chi_polynomial(S).polynomial
    h_T = T.h_polynomial()
    rhs = reciprocal(h_T)

    def lhs_for(dd):
        return RationalFunction(chi) / (t_power(dd) * RationalFunction(T_MINUS_ONE ** (n - dd)))

    lhs = lhs_for(d)
    literal_pass = lhs_for(d_literal) == rhs
    details = {
        "n": n,
        "d": d,
        "d_literal": d_literal,
        "literal_form_pass": literal_pass,
        "chi": chi,
        "h_T": h_T,
        "T": T.to_json(),
    }
    if d != d_literal:
        details["note"] = "exponent d = n - codim T(S) used; dim S + 1 differs for this instance"
    return VerificationReport("chi(S)(t) / (t^d (t-1)^(n-d)) = h_T(S)(t^-1)",
                              True, lhs, rhs, lhs == rhs, details)


@dataclass(frozen=True)
class Cor18Result:
    hypotheses: dict
    candidate: RationalFunction | None
    is_polynomial: bool

    def to_json(self) -> dict:
        from .reports import jsonable
        cand = self.candidate.to_json() if self.candidate is not None else None
        return {"hypotheses": jsonable(self.hypotheses), "candidate": cand,
                "is_polynomial": self.is_polynomial}


def cor18_extract(S: SimplicialComplex) -> Cor18Result:
    """Candidate P(u) from t^-n - chi(1/t) + (t^(n+1) - t^(n+a)) sum_i t^-|sigma_i| = t^-n P(1/t).

    Multiplying by t^n and writing u = 1/t gives
    P(u) = 1 - u^-n chi(u) + (u^(-2n-1) - u^(-2n-a)) sum_i u^|sigma_i|,
    which is returned as a rational function in u together with whether it
    is a genuine polynomial.
    """
    n, r = S.n, S.r
    uc = uniform_c_check(S, "all_equal_a")
    if r <= 1:
        a, c_ok = 1, True
    else:
        a, c_ok = uc.a, uc.holds
    h = S.h_polynomial()
    hyp: dict = {"c_uniform": c_ok, "a": a, "h": h}
    if a is not None:
        top = h.degree
        hyp["h_a_plus_r_ge_1"] = h.coeff(a + r) >= 1
        hyp["h_a_plus_1_ge_3"] = h.coeff(a + 1) >= 3
        hyp["h_a_plus_2_ge_3"] = h.coeff(a + 2) >= 3
        hyp["h_i_ge_1_from_a"] = all(h.coeff(i) >= 1 for i in range(a, top + 1))
        hyp["all_ok"] = c_ok and all(hyp[k] for k in ("h_a_plus_r_ge_1", "h_a_plus_1_ge_3",
                                                        "h_a_plus_2_ge_3", "h_i_ge_1_from_a"))
        chi = chi_polynomial(S).polynomial
        sizes = IntPolynomial([0])
        for m in S.nonface_masks:
            sizes = sizes + IntPolynomial.monomial(m.bit_count())
        cand = (1 - RationalFunction(chi) * t_power(-n)
                + (t_power(-2 * n - 1) - t_power(-2 * n - a)) * RationalFunction(sizes))
    else:
        hyp["all_ok"] = False
        return Cor18Result(hyp, None, False)
    return Cor18Result(hyp, cand, cand.is_polynomial())
