"""Auxiliary hypergraphs whose proper colourings are frugal colourings of a
graph, and a checker for the local-sparsity hypotheses of the sparse
hypergraph colouring theorem.

Three builders are provided:

* :func:`build_basic` -- graph edges plus every (beta+1)-set inside a
  neighbourhood. Its proper colourings are exactly the beta-frugal
  colourings of ``g``.
* :func:`build_cycle_reduction` -- additionally joins *special pairs*
  (non-adjacent pairs with more than ``2t`` common neighbours) and keeps only
  the (beta+1)-sets that contain no 2-edge.
* :func:`build_kbt_reduction` -- generalises special pairs to minimal
  independent special s-sets for ``s = 2..beta`` with thresholds
  ``alpha_s = Delta ** ((beta + 1 - s) / beta - eps)``.

Enumerating (beta+1)-sets inside neighbourhoods costs
``sum_v C(deg v, beta + 1)`` set operations.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .graph import Graph, max_degree
from .hypergraph import Hypergraph, delta_star, max_codegree, rank


@dataclass(frozen=True)
class ReductionParams:
    """Frugality ``beta``, forbidden-pattern parameter ``t`` and the maximum
    degree ``delta`` the thresholds are computed from."""

    beta: int
    t: int
    delta: int

    def __post_init__(self):
        if self.beta < 1:
            raise ValueError("beta must be positive")
        if self.t < 2:
            raise ValueError("t must be at least 2")
        if self.delta < 0:
            raise ValueError("delta must be non-negative")

    @classmethod
    def for_graph(cls, g: Graph, beta: int, t: int) -> "ReductionParams":
        return cls(beta, t, max_degree(g))

    @property
    def epsilon(self) -> Fraction:
        return Fraction(1, 4 * self.beta * self.beta)

    @property
    def f(self) -> float:
        """``delta ** epsilon``, the sparsity gain used with the K_{beta,t} reduction."""
        return float(self.delta) ** float(self.epsilon)

    @property
    def alpha(self) -> int:
        """Special-pair threshold of the cycle reduction."""
        return 2 * self.t

    def alpha_s(self, s: int) -> float:
        """Common-neighbourhood threshold for special s-sets (``alpha_1 = delta``)."""
        if s == 1:
            return float(self.delta)
        if not 2 <= s <= self.beta:
            raise ValueError(f"s={s} outside 1..beta")
        exponent = Fraction(self.beta + 1 - s, self.beta) - self.epsilon
        return float(self.delta) ** float(exponent)

    # preset values of f for certify(), one per upper-bound argument
    def f_k2t(self) -> float:
        return self.delta ** (1.0 / self.beta) / self.t

    def f_cycle(self) -> float:
        return self.delta ** (1.0 / self.beta) / (2 * self.t)

    def f_kbt(self) -> float:
        return self.f


def f_preset(name: str, params: ReductionParams) -> float:
    presets = {"k2t": params.f_k2t, "cycle": params.f_cycle, "kbt": params.f_kbt}
    try:
        return presets[name]()
    except KeyError:
        raise ValueError(f"unknown f preset {name!r}; choose from {sorted(presets)}") from None


def _neighbourhood_sets(g: Graph, size: int) -> set[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()
    for v in range(g.n):
        if len(g.adj[v]) >= size:
            out.update(combinations(g.adj[v], size))
    return out


def build_basic(g: Graph, beta: int) -> Hypergraph:
    """Graph edges plus every (beta+1)-subset of some neighbourhood."""
    if beta < 1:
        raise ValueError("beta must be positive")
    edges: set[tuple[int, ...]] = set(g.edges())
    edges |= _neighbourhood_sets(g, beta + 1)
    return Hypergraph.from_edges(g.n, edges)


def _pair_counts(g: Graph) -> Counter:
    counts: Counter = Counter()
    for w in range(g.n):
        counts.update(combinations(g.adj[w], 2))
    return counts


def find_special_pairs(g: Graph, alpha: float) -> list[tuple[int, int]]:
    """Non-adjacent pairs with strictly more than ``alpha`` common neighbours."""
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    return sorted(p for p, c in _pair_counts(g).items()
                  if c > alpha and not g.has_edge(*p))


def special_degrees(g: Graph, alpha: float) -> list[int]:
    """``|sigma(u)|``: the number of special pairs through each vertex."""
    deg = [0] * g.n
    for u, v in find_special_pairs(g, alpha):
        deg[u] += 1
        deg[v] += 1
    return deg


def _contains_smaller_edge(s: tuple[int, ...], small: set[tuple[int, ...]],
                           sizes: range) -> bool:
    return any(sub in small for k in sizes for sub in combinations(s, k))


def build_cycle_reduction(g: Graph, params: ReductionParams) -> Hypergraph:
    """Graph edges, special pairs (threshold ``2t``), and neighbourhood
    (beta+1)-sets containing neither."""
    if params.beta < 2:
        raise ValueError("the cycle reduction needs beta >= 2")
    two_edges: set[tuple[int, ...]] = set(g.edges())
    two_edges.update(find_special_pairs(g, params.alpha))
    big = [s for s in _neighbourhood_sets(g, params.beta + 1)
           if not _contains_smaller_edge(s, two_edges, range(2, 3))]
    return Hypergraph.from_edges(g.n, list(two_edges) + big)


def _is_independent(g: Graph, s: tuple[int, ...]) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(s, 2))


def find_special_sets(g: Graph, params: ReductionParams) -> list[tuple[int, ...]]:
    """Minimal independent s-sets (2 <= s <= beta) with more than ``alpha_s``
    common neighbours, in order of increasing size then lexicographic.

    Every ``alpha_s`` is at least 1 when ``delta >= 1``, so only sets with a
    common neighbour qualify and it suffices to scan subsets of
    neighbourhoods.
    """
    if params.beta < 2:
        raise ValueError("special sets need beta >= 2")
    committed: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    for s in range(2, params.beta + 1):
        threshold = params.alpha_s(s)
        counts: Counter = Counter()
        for w in range(g.n):
            counts.update(combinations(g.adj[w], s))
        for cand in sorted(counts):
            if counts[cand] <= threshold:
                continue
            if not _is_independent(g, cand):
                continue
            if _contains_smaller_edge(cand, committed, range(2, s)):
                continue
            committed.add(cand)
            out.append(cand)
    return out


def build_kbt_reduction(g: Graph, params: ReductionParams) -> Hypergraph:
    """Graph edges, special sets, and neighbourhood (beta+1)-sets containing
    no smaller edge."""
    if params.beta < 2:
        raise ValueError("the K_{beta,t} reduction needs beta >= 2")
    small: set[tuple[int, ...]] = set(g.edges())
    small.update(find_special_sets(g, params))
    big = [s for s in _neighbourhood_sets(g, params.beta + 1)
           if not _contains_smaller_edge(s, small, range(2, params.beta + 1))]
    return Hypergraph.from_edges(g.n, list(small) + big)


REDUCTIONS = {
    "basic": lambda g, p: build_basic(g, p.beta),
    "cycle": build_cycle_reduction,
    "kbt": build_kbt_reduction,
}


def build_reduction(kind: str, g: Graph, params: ReductionParams) -> Hypergraph:
    try:
        builder = REDUCTIONS[kind]
    except KeyError:
        raise ValueError(f"unknown reduction {kind!r}; choose from {sorted(REDUCTIONS)}") from None
    return builder(g, params)


# -- certificate -------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Observed codegrees and triangle counts against the two hypotheses."""

    rank: int
    delta_star: float
    f: float
    codegree_table: dict[tuple[int, int], int] = field(repr=False)
    triangle_max: int
    verdict_a: bool
    verdict_b: bool

    def codegree_bound(self, s: int, ell: int) -> float:
        return self.delta_star ** (ell - s) / self.f

    @property
    def triangle_bound(self) -> float:
        return self.delta_star ** 2 / self.f

    @property
    def ok(self) -> bool:
        return self.verdict_a and self.verdict_b

    def report(self) -> str:
        """One line per (s, ell) and one for triangles: observed, bound, verdict."""
        lines = [f"# rank={self.rank} delta_star={self.delta_star:.6g} f={self.f:.6g}"]
        for (s, ell), obs in sorted(self.codegree_table.items()):
            bound = self.codegree_bound(s, ell)
            status = "pass" if obs <= bound else "FAIL"
            lines.append(f"codegree s={s} l={ell} observed={obs} bound={bound:.6g} {status}")
        status = "pass" if self.verdict_b else "FAIL"
        lines.append(f"triangles observed={self.triangle_max} "
                     f"bound={self.triangle_bound:.6g} {status}")
        lines.append(f"verdict_a={self.verdict_a} verdict_b={self.verdict_b}")
        return "\n".join(lines) + "\n"


def max_triangles_per_vertex(g: Graph) -> int:
    best = 0
    for v in range(g.n):
        nb = set(g.adj[v])
        count = sum(1 for u in g.adj[v] for w in g.adj[u] if u < w and w in nb)
        best = max(best, count)
    return best


def certify(h: Hypergraph, f: float) -> Certificate:
    if not f > 1:
        raise ValueError(f"f must exceed 1, got {f}")
    r = rank(h)
    if r < 3:
        raise ValueError(f"rank must be at least 3, got {r}")
    ds = delta_star(h)
    table = {(s, ell): max_codegree(h, s, ell)
             for ell in range(3, r + 1) for s in range(2, ell)}
    tri = max_triangles_per_vertex(h.layer_graph())
    verdict_a = all(obs <= ds ** (ell - s) / f for (s, ell), obs in table.items())
    verdict_b = tri <= ds * ds / f
    return Certificate(r, ds, f, table, tri, verdict_a, verdict_b)


def kst_prime(t: int, ell: int, s: int) -> int:
    """``C(t - 1, ell - s) + 1``; appears only in the counting argument for the
    K_{beta,t} reduction and is not consumed by any builder."""
    return math.comb(t - 1, ell - s) + 1

