"""Abstract simplicial complexes on the vertex labels 0..n-1.

A complex is determined either by its facets or by its minimal nonfaces; the
other description is derived on demand. The two are related by hypergraph
duality: a set is a nonface exactly when it meets the complement of every
facet, so the minimal nonfaces are the minimal transversals of the facet
complements, and the facets are the complements of the minimal transversals
of the nonfaces.

Dimension conventions: ``dim`` is the simplicial dimension (largest face size
minus one); ``krull_dim`` is ``dim + 1``, the Krull dimension of the
Stanley-Reisner ring. h-polynomials and every identity check use
``krull_dim``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    InvalidArgument,
    InvalidNonfaces,
    InvalidVertex,
    InvalidWitness,
    NotPropertyI,
    UnsupportedWitness,
)
from .poly import IntPolynomial
from .unionfind import DisjointSet

#: cap on vertex count when minimal nonfaces are derived from facets
MAX_NONFACE_SEARCH_VERTICES = 25


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _minimize(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def minimal_transversals(edges: Sequence[int]) -> list[int]:
    """Inclusion-minimal sets meeting every edge (Berge's incremental method)."""
    transversals = [0]
    for e in sorted(set(edges), key=lambda m: m.bit_count()):
        nxt = []
        for t in transversals:
            if t & e:
                nxt.append(t)
            else:
                nxt.extend(t | (1 << v) for v in bits(e))
        transversals = _minimize(nxt)
        if not transversals:
            break
    return transversals


class SimplicialComplex:
    """Immutable simplicial complex with ``n`` vertex labels.

    Vertices that lie in no facet are allowed; each such vertex is a minimal
    nonface of size one.
    """

    def __init__(self, n: int, facets: Iterable[Iterable[int]] | None = None, *,
                 minimal_nonfaces: Iterable[Iterable[int]] | None = None):
        if (facets is None) == (minimal_nonfaces is None):
            raise InvalidArgument("give exactly one of facets or minimal_nonfaces")
        if n < 0:
            raise InvalidArgument("vertex count must be nonnegative")
        self.n = n
        self._facet_masks: list[int] | None = None
        self._nonface_masks: list[int] | None = None
        if facets is not None:
            fs = [tuple(f) for f in facets]
            self._check_labels(fs)
            masks = [mask_of(f) for f in fs] or [0]
            # keep inclusion-maximal sets only
            masks = sorted(set(masks), key=lambda m: -m.bit_count())
            maximal: list[int] = []
            for m in masks:
                if not any(k & m == m for k in maximal):
                    maximal.append(m)
            self._facet_masks = sorted(maximal, key=bits)
        else:
            ns = [tuple(s) for s in minimal_nonfaces]
            self._check_labels(ns)
            masks = [mask_of(s) for s in ns]
            if any(m == 0 for m in masks):
                raise InvalidNonfaces("the empty set cannot be a nonface")
            if len(set(masks)) != len(masks):
                raise InvalidNonfaces("duplicate nonfaces")
            for a, b in combinations(masks, 2):
                if a & b == a or a & b == b:
                    raise InvalidNonfaces(f"nonfaces {bits(a)} and {bits(b)} are nested")
            self._nonface_masks = sorted(masks, key=bits)

    def _check_labels(self, sets):
        for s in sets:
            for v in s:
                if not isinstance(v, int) or not 0 <= v < self.n:
                    raise InvalidVertex(f"vertex label {v!r} outside 0..{self.n - 1}")

    @classmethod
    def from_facets(cls, facets, n: int | None = None) -> "SimplicialComplex":
        facets = [tuple(f) for f in facets]
        if n is None:
            n = 1 + max((v for f in facets for v in f), default=-1)
        return cls(n, facets)

    @classmethod
    def from_nonfaces(cls, n: int, nonfaces) -> "SimplicialComplex":
        return cls(n, minimal_nonfaces=nonfaces)

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, [range(n)])

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def facet_masks(self) -> list[int]:
        if self._facet_masks is None:
            full = self.full_mask
            self._facet_masks = sorted((full ^ t for t in minimal_transversals(self._nonface_masks)), key=bits)
        return self._facet_masks

    @property
    def nonface_masks(self) -> list[int]:
        if self._nonface_masks is None:
            if self.n > MAX_NONFACE_SEARCH_VERTICES:
                raise CapExceeded(f"minimal nonface search capped at {MAX_NONFACE_SEARCH_VERTICES} vertices")
            full = self.full_mask
            comps = [full ^ f for f in self.facet_masks]
            self._nonface_masks = sorted(minimal_transversals(comps), key=bits)
        return self._nonface_masks

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bits(m) for m in self.facet_masks)

    @property
    def minimal_nonfaces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(bits(m) for m in self.nonface_masks)

    @property
    def r(self) -> int:
        return len(self.nonface_masks)

    @property
    def dim(self) -> int:
        return max(m.bit_count() for m in self.facet_masks) - 1

    @property
    def krull_dim(self) -> int:
        return self.dim + 1

    def is_face(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        if self._nonface_masks is not None:
            return not any(s & m == s for s in self._nonface_masks)
        return any(f & m == m for f in self.facet_masks)

    def face_masks(self) -> list[int]:
        facets = self.facet_masks
        out = []
        stack = [(0, 0)]
        while stack:
            face, start = stack.pop()
            out.append(face)
            for v in range(start, self.n):
                g = face | (1 << v)
                if any(f & g == g for f in facets):
                    stack.append((g, v + 1))
        return out

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 2)
        for face in self.face_masks():
            counts[face.bit_count()] += 1
        return tuple(counts)

    def h_polynomial(self) -> IntPolynomial:
        return h_from_f(self.f_vector())

    def relabel(self, mapping: dict[int, int], n: int) -> "SimplicialComplex":
        return SimplicialComplex(n, [[mapping[v] for v in f] for f in self.facets])

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facet_masks == other.facet_masks

    def __hash__(self):
        return hash((self.n, tuple(self.facet_masks)))

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={list(map(list, self.facets))})"

    def to_json(self, form: str = "facets") -> dict:
        if form == "facets":
            return {"n": self.n, "facets": [list(f) for f in self.facets]}
        return {"n": self.n, "minimal_nonfaces": [list(s) for s in self.minimal_nonfaces]}


def h_from_f(f: Sequence[int]) -> IntPolynomial:
    """h(t) = sum_i f_{i-1} t^i (1-t)^{d-i} with d = len(f) - 1."""
    d = len(f) - 1
    h = [0] * (d + 1)
    for i, fi in enumerate(f):
        # expand t^i (1-t)^{d-i}
        for j in range(d - i + 1):
            h[i + j] += fi * comb(d - i, j) * (-1) ** j
    return IntPolynomial(h)


def build_complex(spec: dict) -> SimplicialComplex:
    """Build from ``{"facets": ...}`` or ``{"n": ..., "minimal_nonfaces": ...}``."""
    if "minimal_nonfaces" in spec:
        if "n" not in spec:
            raise InvalidArgument("nonface form requires 'n'")
        return SimplicialComplex.from_nonfaces(int(spec["n"]), spec["minimal_nonfaces"])
    if "facets" in spec:
        return SimplicialComplex.from_facets(spec["facets"], spec.get("n"))
    raise InvalidArgument("complex needs 'facets' or 'minimal_nonfaces'")


def minimal_nonfaces(S: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    return S.minimal_nonfaces


def f_vector(S: SimplicialComplex) -> tuple[int, ...]:
    return S.f_vector()


def h_polynomial(S: SimplicialComplex) -> IntPolynomial:
    return S.h_polynomial()


def _components(masks: Sequence[int]) -> int:
    ds = DisjointSet(len(masks))
    for i, j in combinations(range(len(masks)), 2):
        if masks[i] & masks[j]:
            ds.union(i, j)
    return ds.count


def component_count(S: SimplicialComplex, I: Iterable[int]) -> int:
    """c(I): components of the intersection graph on the nonfaces indexed by I (0-based)."""
    I = sorted(set(I))
    if not I:
        raise InvalidArgument("c(I) needs a nonempty index set")
    nf = S.nonface_masks
    if I[0] < 0 or I[-1] >= len(nf):
        raise InvalidArgument(f"nonface index out of range 0..{len(nf) - 1}")
    return _components([nf[i] for i in I])


@dataclass(frozen=True)
class UniformC:
    holds: bool
    a: int | None
    flagged: bool = False
    witness: tuple[int, ...] | None = None


def uniform_c_check(S: SimplicialComplex, mode: str = "all_one") -> UniformC:
    nf = S.nonface_masks
    r = len(nf)
    pairwise = all(a & b for a, b in combinations(nf, 2))
    if mode == "all_one":
        if pairwise:
            return UniformC(True, 1)
        i, j = next((i, j) for i, j in combinations(range(r), 2) if not nf[i] & nf[j])
        return UniformC(False, None, witness=(i, j))
    if mode != "all_equal_a":
        raise InvalidArgument(f"unknown mode {mode!r}")
    if r <= 1:
        return UniformC(True, None, flagged=True)
    if pairwise:
        # every index set of pairwise meeting nonfaces is connected
        return UniformC(True, 1)
    a = None
    for size in range(2, r + 1):
        for I in combinations(range(r), size):
            c = _components([nf[i] for i in I])
            if a is None:
                a = c
            elif c != a:
                return UniformC(False, None, witness=I)
    return UniformC(True, a)


@dataclass(frozen=True)
class PropertyIWitness:
    alphas: tuple[tuple[int, ...], ...]
    apex: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(tuple(sorted(a)) for a in self.alphas))

    def to_json(self) -> dict:
        return {"alphas": [list(a) for a in self.alphas], "apex": self.apex}

    @classmethod
    def from_json(cls, data: dict) -> "PropertyIWitness":
        return cls(tuple(tuple(a) for a in data["alphas"]), data.get("apex"))


def check_property_I(S: SimplicialComplex, w: PropertyIWitness) -> bool:
    """Check the intersection conditions for every nonempty I and p outside I.

    For fixed p the conditions only depend on the pair (sigma_I, alpha_I), so
    the check runs over the distinct values of that pair instead of over all
    subsets. Minimal nonfaces form an antichain, so an intersection of two or
    more of them never equals a single one; this separates the |I| = 1 values
    (where only the disjointness clause applies) from the |I| >= 2 values.
    """
    sig = S.nonface_masks
    r = len(sig)
    if len(w.alphas) != r:
        raise InvalidWitness(f"witness has {len(w.alphas)} sets for {r} nonfaces")
    labels = sorted({v for a in w.alphas for v in a})
    pos = {v: k for k, v in enumerate(labels)}
    alp = [mask_of(pos[v] for v in a) for a in w.alphas]
    if any(alp[i].bit_count() != sig[i].bit_count() - 1 for i in range(r)):
        return False

    def ok(s_I, a_I, big, p):
        s = s_I & sig[p]
        a = a_I & alp[p]
        if not s:
            return not a
        return not big or a.bit_count() == s.bit_count() - 1

    for p in range(r):
        others = [i for i in range(r) if i != p]
        if not all(ok(sig[i], alp[i], False, p) for i in others):
            return False
        seen = set()
        queue = []
        for i, j in combinations(others, 2):
            val = (sig[i] & sig[j], alp[i] & alp[j])
            if val not in seen:
                seen.add(val)
                queue.append(val)
        while queue:
            s_I, a_I = queue.pop()
            if not ok(s_I, a_I, True, p):
                return False
            for i in others:
                val = (s_I & sig[i], a_I & alp[i])
                if val not in seen:
                    seen.add(val)
                    queue.append(val)
    return True


@dataclass(frozen=True)
class ApexResult:
    S: SimplicialComplex
    witness: PropertyIWitness
    degenerate: bool = False


def apex_augment(T: SimplicialComplex) -> ApexResult:
    """Add one shared fresh vertex (label T.n) to every minimal nonface of T."""
    nus = T.nonface_masks
    if not nus:
        return ApexResult(T, PropertyIWitness(()), degenerate=True)
    w = T.n
    S = SimplicialComplex.from_nonfaces(T.n + 1, [bits(m) + (w,) for m in nus])
    alphas = tuple(tuple(v for v in s if v != w) for s in S.minimal_nonfaces)
    return ApexResult(S, PropertyIWitness(alphas, w))


def auxiliary_complex(S: SimplicialComplex, w: PropertyIWitness) -> SimplicialComplex:
    """T(S) for the apex family: drop the apex, keep the alphas as minimal nonfaces."""
    if w.apex is None:
        if not w.alphas and not S.nonface_masks:
            return S
        raise UnsupportedWitness("T(S) is only constructed for witnesses with an apex vertex")
    if not check_property_I(S, w):
        raise NotPropertyI("witness fails property I")
    apex = w.apex
    for sigma, alpha in zip(S.minimal_nonfaces, w.alphas):
        if apex not in sigma or tuple(v for v in sigma if v != apex) != alpha:
            raise UnsupportedWitness("witness is not of apex form sigma_i = alpha_i + {apex}")

    def down(v):
        return v - 1 if v > apex else v

    return SimplicialComplex.from_nonfaces(S.n - 1, [[down(v) for v in a] for a in w.alphas])


def codimension(S: SimplicialComplex) -> int:
    """n - krull_dim: number of vertices beyond the Krull dimension."""
    return S.n - S.krull_dim


def is_isomorphic(A: SimplicialComplex, B: SimplicialComplex) -> bool:
    """Abstract isomorphism via the vertex-facet incidence graph."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    if A.n != B.n or A.f_vector() != B.f_vector():
        return False

    def incidence(S):
        g = nx.Graph()
        g.add_nodes_from((("v", v) for v in range(S.n)), kind="v")
        for k, f in enumerate(S.facets):
            g.add_node(("f", k), kind="f")
            g.add_edges_from((("f", k), ("v", v)) for v in f)
        return g

    gm = GraphMatcher(incidence(A), incidence(B), node_match=lambda x, y: x["kind"] == y["kind"])
    return gm.is_isomorphic()
