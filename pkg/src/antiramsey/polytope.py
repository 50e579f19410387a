"""Lattice polytopes: point counts, Ehrhart data, duality and triangulation checks.

Everything is exact. A polytope of dimension r in Z^N is handled in integer
coordinates of its affine lattice, so dilations and counts work the same
whether or not it is full-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .errors import (
    CapExceeded,
    EmptyInput,
    EnumerationTooLarge,
    InvalidArgument,
    MixedDimensions,
    NotBoundaryTriangulation,
    NotFullDimensional,
    NotInCstar,
    NotStandardType,
    NotUnimodular,
)
from .lattice import (
    LatticeFrame,
    Vector,
    dot,
    hyperplane,
    lattice_frame,
    rank,
    simplex_volume,
    solve,
    sub,
)
from .poly import IntPolynomial, RationalFunction, rational_from_series
from .reports import VerificationReport, jsonable
from .simplicial import SimplicialComplex

MAX_AMBIENT_DIM = 6
MAX_VERTICES = 32
MAX_CANDIDATES = 10**8


def _as_point(p) -> Vector:
    out = []
    for x in p:
        if isinstance(x, bool) or int(x) != x:
            raise InvalidArgument(f"coordinate {x!r} is not an integer")
        out.append(int(x))
    return tuple(out)


class LatticePolytope:
    """Convex hull of integer points, with vertices and facets computed exactly.

    Facets are (a, b) meaning a.y <= b in the reduced coordinates y of the
    affine lattice; for full-dimensional polytopes those are the ambient
    coordinates themselves. Input points that are not vertices are dropped
    and listed in ``pruned``.
    """

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = [_as_point(p) for p in points]
        if not pts:
            raise EmptyInput("a polytope needs at least one point")
        N = len(pts[0])
        if N == 0 or any(len(p) != N for p in pts):
            raise InvalidArgument("points must share one positive ambient dimension")
        if N > MAX_AMBIENT_DIM:
            raise CapExceeded(f"ambient dimension {N} exceeds cap {MAX_AMBIENT_DIM}")
        pts = sorted(set(pts))
        if len(pts) > MAX_VERTICES:
            raise CapExceeded(f"{len(pts)} points exceeds cap {MAX_VERTICES}")
        self.ambient_dim = N
        self.frame: LatticeFrame = lattice_frame(pts)
        self.dim = self.frame.dim
        reduced = {p: self.frame.coords(p) for p in pts}
        self.facets = self._facets(sorted(reduced.values()))
        keep = [p for p in pts if self._is_vertex(reduced[p])]
        self.vertices: tuple[Vector, ...] = tuple(keep)
        self.pruned: tuple[Vector, ...] = tuple(p for p in pts if p not in keep)
        self.reduced_vertices: tuple[Vector, ...] = tuple(reduced[p] for p in keep)

    @classmethod
    def from_json(cls, data: dict) -> "LatticePolytope":
        return cls(data["vertices"])

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}

    def _facets(self, pts: list[Vector]) -> tuple[tuple[Vector, int], ...]:
        r = self.dim
        if r == 0:
            return ()
        found = set()
        for subset in combinations(pts, r):
            hp = hyperplane(subset)
            if hp is None:
                continue
            a, b = hp
            vals = [dot(a, p) for p in pts]
            if all(v <= b for v in vals):
                found.add((a, b))
            elif all(v >= b for v in vals):
                found.add((tuple(-x for x in a), -b))
        return tuple(sorted(found))

    def _is_vertex(self, y: Vector) -> bool:
        tight = [a for a, b in self.facets if dot(a, y) == b]
        return rank(tight) == self.dim

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({[list(v) for v in self.vertices]})"

    def facet_vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(i for i, y in enumerate(self.reduced_vertices) if dot(a, y) == b)
                for a, b in self.facets]

    def contains(self, x: Sequence[int], strict: bool = False) -> bool:
        y = self.frame.coords(x)
        if y is None:
            return False
        if strict:
            return all(dot(a, y) < b for a, b in self.facets)
        return all(dot(a, y) <= b for a, b in self.facets)

    def lattice_points(self, m: int = 1, region: str = "closed") -> list[Vector]:
        """Lattice points of mP (or its relative interior) in ambient coordinates."""
        mask, grid = self._scan(m, region)
        origin = tuple(m * o for o in self.frame.origin)
        shifted = LatticeFrame(origin, self.frame.basis)
        return sorted(shifted.point(tuple(int(v) for v in y)) for y in grid[mask])

    def _scan(self, m, region, chunk=None):
        r = self.dim
        lo = [m * min(v[i] for v in self.reduced_vertices) for i in range(r)]
        hi = [m * max(v[i] for v in self.reduced_vertices) for i in range(r)]
        sizes = [h - l + 1 for l, h in zip(lo, hi)]
        total = int(np.prod(sizes, dtype=object)) if sizes else 1
        if total > MAX_CANDIDATES:
            raise EnumerationTooLarge(f"{total} candidate points exceeds {MAX_CANDIDATES}")
        idx = np.arange(total, dtype=np.int64)
        grid = np.zeros((total, r), dtype=np.int64)
        for i in range(r - 1, -1, -1):
            grid[:, i] = idx % sizes[i] + lo[i]
            idx //= sizes[i]
        if not self.facets:
            return np.ones(total, dtype=bool), grid
        A = np.array([a for a, _ in self.facets], dtype=np.int64)
        b = np.array([bb for _, bb in self.facets], dtype=np.int64) * m
        vals = grid @ A.T
        mask = (vals < b).all(axis=1) if region == "interior" else (vals <= b).all(axis=1)
        return mask, grid

    @cached_property
    def normalized_volume(self) -> int:
        """r! times the volume in the affine lattice, by a pulling triangulation."""
        return sum(simplex_volume([self.reduced_vertices[i] for i in s]) for s in self.pulling_triangulation())

    def pulling_triangulation(self) -> list[tuple[int, ...]]:
        verts = self.reduced_vertices
        facet_sets = self.facet_vertex_sets()

        def affine_dim(vs):
            vs = sorted(vs)
            return rank([sub(verts[i], verts[vs[0]]) for i in vs[1:]])

        def pull(face: frozenset, k: int) -> list[tuple[int, ...]]:
            if len(face) == k + 1:
                return [tuple(sorted(face))]
            v0 = min(face)
            subs = set()
            for F in facet_sets:
                G = face & F
                if G != face and len(G) >= k and affine_dim(G) == k - 1:
                    subs.add(frozenset(G))
            out = []
            for G in sorted(subs, key=sorted):
                if v0 in G:
                    continue
                out.extend(tuple(sorted(s + (v0,))) for s in pull(G, k - 1))
            return out

        return pull(frozenset(range(len(verts))), self.dim)


def build_polytope(points: Sequence[Sequence[int]]) -> LatticePolytope:
    return LatticePolytope(points)


def count_points(P: LatticePolytope, m: int, region: str = "closed") -> int:
    """Number of lattice points in mP, or in its relative interior."""
    if region not in ("closed", "interior"):
        raise InvalidArgument(f"unknown region {region!r}")
    if m < 0:
        raise InvalidArgument("dilation factor must be nonnegative")
    if m == 0:
        return 1 if region == "closed" else 0
    mask, _ = P._scan(m, region)
    return int(mask.sum())


@dataclass(frozen=True)
class EhrhartPolynomial:
    """E(P, m) as a polynomial in m with rational coefficients."""
    coeffs: tuple[Fraction, ...]
    checks: tuple[tuple[int, int, int], ...] = ()  # (m, interpolated, counted)

    def __call__(self, m) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    @property
    def checks_ok(self) -> bool:
        return all(a == b for _, a, b in self.checks)

    def to_json(self) -> dict:
        return {"coefficients": jsonable(list(self.coeffs)),
                "checks": [{"m": m, "interpolated": a, "counted": b} for m, a, b in self.checks]}

    def __str__(self):
        from .poly import format_poly
        return format_poly(self.coeffs, "m")


def ehrhart_polynomial(P: LatticePolytope, counts: Sequence[int] | None = None) -> EhrhartPolynomial:
    """Degree-r interpolant through E(P, 0..r), cross-checked at m = r+1, r+2."""
    r = P.dim
    if counts is None:
        counts = [count_points(P, m) for m in range(r + 3)]
    vander = [tuple(m ** k for m in range(r + 1)) for k in range(r + 1)]
    coeffs = solve(vander, counts[: r + 1])
    E = EhrhartPolynomial(tuple(coeffs))
    checks = tuple((m, int(E(m)) if E(m).denominator == 1 else E(m), counts[m]) for m in range(r + 1, r + 3))
    return EhrhartPolynomial(tuple(coeffs), checks)


@dataclass(frozen=True)
class DeltaVector:
    entries: tuple[int, ...]

    @property
    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.entries)

    def to_json(self) -> list:
        return list(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        # delta_i vanishes above the dimension
        return self.entries[i] if i < len(self.entries) else 0


def delta_vector(P: LatticePolytope, counts: Sequence[int] | None = None) -> DeltaVector:
    """delta_i = sum_j (-1)^(i-j) C(r+1, i-j) E(P, j) for i = 0..r."""
    r = P.dim
    if counts is None:
        counts = [count_points(P, m) for m in range(r + 1)]
    return DeltaVector(tuple(sum((-1) ** (i - j) * comb(r + 1, i - j) * counts[j] for j in range(i + 1))
                             for i in range(r + 1)))


def ehrhart_series(P: LatticePolytope) -> RationalFunction:
    """sum_m E(P, m) t^m = delta(t) / (1 - t)^(r+1)."""
    return RationalFunction(delta_vector(P).polynomial, IntPolynomial([1, -1]) ** (P.dim + 1))


def interior_series(P: LatticePolytope) -> RationalFunction:
    """sum_{m >= 1} E+(P, m) t^m rebuilt from direct interior counts."""
    r = P.dim
    values = [0] + [count_points(P, m, "interior") for m in range(1, r + 2)]
    return rational_from_series(values, r)


def verify_reciprocity(P: LatticePolytope, m_max: int = 5) -> VerificationReport:
    """(-1)^r E(P, -m) = interior count of mP, pointwise and as series.

    The series form is E_P(1/t) = (-1)^(r+1) E+_P(t), with E+ built from
    interior counts rather than from the Ehrhart polynomial.
    """
    r = P.dim
    E = ehrhart_polynomial(P)
    pointwise = []
    for m in range(1, m_max + 1):
        lhs = (-1) ** r * E(-m)
        rhs = count_points(P, m, "interior")
        pointwise.append({"m": m, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs})
    lhs = ehrhart_series(P).substitute_reciprocal()
    rhs = (-1) ** (r + 1) * interior_series(P)
    series_ok = lhs == rhs
    ok = series_ok and all(p["pass"] for p in pointwise) and E.checks_ok
    return VerificationReport("E_P(t^-1) = (-1)^(r+1) E+_P(t); (-1)^r E(P,-m) = #(m int P)",
                              True, lhs, rhs, ok,
                              {"r": r, "ehrhart": E, "pointwise": pointwise, "series_pass": series_ok})


@dataclass(frozen=True)
class PolarDual:
    vertices: tuple[tuple[Fraction, ...], ...]
    dual: LatticePolytope | None
    standard_type: bool
    in_Cstar: bool
    round_trip: bool | None

    def to_json(self) -> dict:
        return {"dual": self.dual.to_json() if self.dual is not None else "non_integral",
                "vertices": jsonable([list(v) for v in self.vertices]),
                "standard_type": self.standard_type, "in_Cstar": self.in_Cstar,
                "round_trip": self.round_trip}


def polar_dual(P: LatticePolytope, _check_round_trip: bool = True) -> PolarDual:
    """P* = {a : a.x <= 1 for all x in P}; its vertices are a/b over facets a.x <= b."""
    if P.dim != P.ambient_dim:
        raise NotFullDimensional(f"dimension {P.dim} in ambient dimension {P.ambient_dim}")
    if not all(b > 0 for _, b in P.facets):
        raise NotStandardType("origin is not in the interior")
    verts = tuple(sorted(tuple(Fraction(x, b) for x in a) for a, b in P.facets))
    integral = all(x.denominator == 1 for v in verts for x in v)
    dual = LatticePolytope([[int(x) for x in v] for v in verts]) if integral else None
    round_trip = None
    if dual is not None and _check_round_trip:
        back = polar_dual(dual, _check_round_trip=False)
        round_trip = back.dual is not None and back.dual == P
    return PolarDual(verts, dual, True, integral, round_trip)


@dataclass(frozen=True)
class Triangulation:
    points: tuple[Vector, ...]
    simplices: tuple[tuple[int, ...], ...]

    def __init__(self, points, simplices):
        pts = tuple(_as_point(p) for p in points)
        simp = tuple(sorted(tuple(sorted(int(i) for i in s)) for s in simplices))
        if not simp:
            raise EmptyInput("triangulation has no simplices")
        for s in simp:
            if len(set(s)) != len(s) or any(not 0 <= i < len(pts) for i in s):
                raise InvalidArgument(f"simplex {s} has bad point indices")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "simplices", simp)

    @classmethod
    def from_json(cls, data: dict) -> "Triangulation":
        return cls(data["points"], data["simplices"])

    def to_json(self) -> dict:
        return {"points": [list(p) for p in self.points], "simplices": [list(s) for s in self.simplices]}

    @property
    def used(self) -> list[int]:
        return sorted({i for s in self.simplices for i in s})

    def dimension(self) -> int:
        dims = {len(s) - 1 for s in self.simplices}
        if len(dims) > 1:
            raise MixedDimensions(f"simplices of dimensions {sorted(dims)}")
        return dims.pop()

    def complex(self) -> SimplicialComplex:
        """Abstract complex on the used points, relabelled 0..k-1 in index order."""
        used = self.used
        pos = {v: k for k, v in enumerate(used)}
        return SimplicialComplex.from_facets([[pos[i] for i in s] for s in self.simplices], len(used))

    def simplex_points(self, s) -> list[Vector]:
        return [self.points[i] for i in s]


def _side(ridge: Sequence[Vector], x: Vector) -> int:
    a, b = hyperplane(ridge)
    v = dot(a, x) - b
    return (v > 0) - (v < 0)


def _check_pseudomanifold(simplices, coords, boundary_ok) -> str | None:
    """Each ridge lies in two simplices on opposite sides, or in one and on the boundary."""
    ridges: dict[tuple, list] = {}
    for s in simplices:
        for i in range(len(s)):
            ridges.setdefault(s[:i] + s[i + 1:], []).append(s[i])
    for ridge, opp in ridges.items():
        if len(opp) > 2:
            return f"ridge {ridge} lies in {len(opp)} simplices"
        rpts = [coords[i] for i in ridge]
        if len(opp) == 2:
            if _side(rpts, coords[opp[0]]) * _side(rpts, coords[opp[1]]) != -1:
                return f"simplices meeting at {ridge} overlap"
        elif not boundary_ok(ridge):
            return f"ridge {ridge} is exposed inside the region"
    return None


def check_full_triangulation(P: LatticePolytope, T: Triangulation) -> str | None:
    """None if T triangulates P, else the reason it does not."""
    r = P.dim
    coords = {}
    for i in T.used:
        y = P.frame.coords(T.points[i])
        if y is None or not P.contains(T.points[i]):
            return f"point {T.points[i]} is not a lattice point of P"
        coords[i] = y
    if T.dimension() != r:
        return f"simplices have dimension {T.dimension()}, P has dimension {r}"
    vol = 0
    for s in T.simplices:
        v = simplex_volume([coords[i] for i in s])
        if v == 0:
            return f"simplex {s} is degenerate"
        vol += v
    if vol != P.normalized_volume:
        return f"simplex volumes sum to {vol}, P has normalized volume {P.normalized_volume}"
    if r == 0:
        return None

    def on_boundary(ridge):
        return any(all(dot(a, coords[i]) == b for i in ridge) for a, b in P.facets)

    return _check_pseudomanifold(T.simplices, coords, on_boundary)


def check_boundary_triangulation(P: LatticePolytope, T: Triangulation) -> str | None:
    """None if T triangulates the boundary of P, else the reason it does not."""
    r = P.dim
    if r == 0:
        return "a point has empty boundary"
    if T.dimension() != r - 1:
        return f"boundary simplices must have dimension {r - 1}"
    red = {}
    for i in T.used:
        y = P.frame.coords(T.points[i])
        if y is None or not P.contains(T.points[i]):
            return f"point {T.points[i]} is not a lattice point of P"
        red[i] = y
    facet_of = {}
    for s in T.simplices:
        homes = [k for k, (a, b) in enumerate(P.facets) if all(dot(a, red[i]) == b for i in s)]
        if len(homes) != 1:
            return f"simplex {s} does not lie in exactly one facet"
        facet_of[s] = homes[0]
    fsets = P.facet_vertex_sets()
    for k in range(len(P.facets)):
        F = LatticePolytope([P.vertices[i] for i in sorted(fsets[k])])
        mine = [s for s in T.simplices if facet_of[s] == k]
        vol = 0
        for s in mine:
            pts = [F.frame.coords(T.points[i]) for i in s]
            v = simplex_volume(pts)
            if v == 0:
                return f"simplex {s} is degenerate"
            vol += v
        if vol != F.normalized_volume:
            return f"facet {k} covered with volume {vol}, expected {F.normalized_volume}"
        if r >= 2:
            coords = {i: F.frame.coords(T.points[i]) for s in mine for i in s}
            Fk = P.facets[k]
            problem = _check_pseudomanifold(
                mine, coords,
                lambda ridge: any(all(dot(a, red[i]) == b for i in ridge)
                                  for a, b in P.facets if (a, b) != Fk))
            if problem:
                return problem
    if r >= 2:
        ridges: dict[tuple, int] = {}
        for s in T.simplices:
            for i in range(len(s)):
                ridges[s[:i] + s[i + 1:]] = ridges.get(s[:i] + s[i + 1:], 0) + 1
        bad = [rg for rg, c in ridges.items() if c != 2]
        if bad:
            return f"ridge {bad[0]} is not shared by exactly two simplices"
    return None


def is_unimodular(T: Triangulation) -> bool:
    """Every simplex has normalized volume 1 in the lattice of its own affine hull."""
    T.dimension()
    for s in T.simplices:
        pts = T.simplex_points(s)
        frame = lattice_frame(pts)
        if frame.dim != len(s) - 1:
            return False
        if simplex_volume([frame.coords(p) for p in pts]) != 1:
            return False
    return True


@dataclass(frozen=True)
class CompressedResult:
    definition_check: bool
    h_equals_delta: bool
    delta_ge_h: bool
    h: tuple[int, ...]
    delta: tuple[int, ...]

    def to_json(self) -> dict:
        return {"definition_check": self.definition_check, "h_equals_delta": self.h_equals_delta,
                "delta_ge_h": self.delta_ge_h, "h": list(self.h), "delta": list(self.delta)}


def _padded(p: IntPolynomial, length: int) -> tuple[int, ...]:
    return tuple(p.coeff(i) for i in range(max(length, p.degree + 1)))


def is_compressed(P: LatticePolytope, T: Triangulation) -> CompressedResult:
    """Compare T's vertex set with the boundary lattice points and h(T) with delta(P)."""
    dual = polar_dual(P)
    if not dual.in_Cstar:
        raise NotInCstar("polar dual has non-integral vertices")
    problem = check_boundary_triangulation(P, T)
    if problem:
        raise NotBoundaryTriangulation(problem)
    boundary = set(P.lattice_points(1)) - set(P.lattice_points(1, "interior"))
    used = {T.points[i] for i in T.used}
    delta = delta_vector(P)
    h = _padded(T.complex().h_polynomial(), len(delta))
    d = tuple(delta) + (0,) * (len(h) - len(delta))
    return CompressedResult(used == boundary, h == d, all(x >= y for x, y in zip(d, h)), h, d)


def is_unimodal(seq: Sequence[int]) -> bool:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    return all(seq[i] >= seq[i + 1] for i in range(k, len(seq) - 1))


def verify_hstar_eq_h(P: LatticePolytope, T: Triangulation) -> VerificationReport:
    """delta(P) against the h-polynomial of a unimodular triangulation of P."""
    problem = check_full_triangulation(P, T)
    if problem:
        raise InvalidArgument(f"not a triangulation of P: {problem}")
    if not is_unimodular(T):
        raise NotUnimodular("some simplex has normalized volume above 1")
    delta = delta_vector(P)
    h = T.complex().h_polynomial()
    return VerificationReport("h*_P = h(T) for a unimodular triangulation T", True,
                              delta.polynomial, h, delta.polynomial == h,
                              {"delta": delta, "h_star_unimodal": is_unimodal(delta)})
