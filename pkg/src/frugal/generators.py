"""Instance constructions: Yuster grid graphs, point-hyperplane incidence
graphs of projective geometries over prime fields, G(n, p), and the pruning
step that turns a random graph into a bounded-degree, large-girth graph."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .graph import Graph
from .hypergraph import Colouring
from .rng import make_rng

GRID_CAP = 4096
PG_CAP = 20000


@dataclass(frozen=True)
class GnpSpec:
    n: int
    p: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p} outside [0, 1]")


def grid_graph(n: int, beta: int, cap: int = GRID_CAP) -> Graph:
    """Vertices ``[n]^(beta+1)`` in lexicographic order, adjacent when they
    agree in at least one coordinate."""
    if n < 2 or beta < 1:
        raise ValueError("need n >= 2 and beta >= 1")
    size = n ** (beta + 1)
    if size > cap:
        raise ValueError(f"grid graph would have {size} vertices (cap {cap})")
    pts = np.array(list(product(range(n), repeat=beta + 1)), dtype=np.int64)
    share = (pts[:, None, :] == pts[None, :, :]).any(axis=2)
    np.fill_diagonal(share, False)
    us, vs = np.nonzero(np.triu(share))
    return Graph.from_edges(size, zip(us.tolist(), vs.tolist()))


def grid_degree(n: int, beta: int) -> int:
    return n ** (beta + 1) - (n - 1) ** (beta + 1) - 1


def grid_colour_class_bound(g: Graph, c: Colouring, beta: int) -> bool:
    """True iff every colour class has at most ``beta`` vertices.

    Every beta-frugal colouring of a grid graph has this property; the
    caller is responsible for passing a frugal colouring.
    """
    sizes: dict[int, int] = {}
    for col in c.colour:
        sizes[col] = sizes.get(col, 0) + 1
    return all(s <= beta for s in sizes.values())


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def projective_points(q: int, dim: int) -> np.ndarray:
    """Normalised representatives (first nonzero coordinate 1) of the
    1-dimensional subspaces of GF(q)^dim, in lexicographic order."""
    rows = []
    for lead in range(dim):
        for tail in product(range(q), repeat=dim - lead - 1):
            rows.append((0,) * lead + (1,) + tail)
    return np.array(rows, dtype=np.int64)


def pg_incidence(q: int, beta: int, cap: int = PG_CAP) -> Graph:
    """Point-hyperplane incidence graph of PG(beta+1, q), q prime.

    Points are vertices ``0..P-1``, hyperplanes ``P..2P-1`` where
    ``P = (q^(beta+2) - 1) / (q - 1)``. A hyperplane is stored as its normal
    vector and contains a point when their dot product vanishes mod q.
    """
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime (prime powers are not supported)")
    if beta < 1:
        raise ValueError("beta must be positive")
    dim = beta + 2
    count = (q ** dim - 1) // (q - 1)
    if 2 * count > cap:
        raise ValueError(f"incidence graph would have {2 * count} vertices (cap {cap})")
    pts = projective_points(q, dim)
    incident = (pts @ pts.T) % q == 0
    ps, hs = np.nonzero(incident)
    return Graph.from_edges(2 * count, zip(ps.tolist(), (hs + count).tolist()))


def sample_gnp(spec: GnpSpec) -> Graph:
    """Each of the C(n, 2) pairs is an edge independently with probability p.

    Pairs are visited in lexicographic order and decided by one uniform
    draw each from :func:`frugal.rng.make_rng`.
    """
    n, p = spec.n, spec.p
    if n < 2:
        return Graph.from_edges(n, [])
    rng = make_rng(spec.seed)
    us, vs = np.triu_indices(n, k=1)
    hit = rng.random(us.size) < p
    return Graph.from_edges(n, zip(us[hit].tolist(), vs[hit].tolist()))


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    return sample_gnp(GnpSpec(n, p, seed))


@dataclass
class PruneReport:
    """Original ids of the vertices removed at each stage, and of survivors."""

    high_degree: list[int] = field(default_factory=list)
    on_short_cycles: list[int] = field(default_factory=list)
    kept: list[int] = field(default_factory=list)

    @property
    def removed(self) -> int:
        return len(self.high_degree) + len(self.on_short_cycles)


def _short_cycle_through(adj: list[set[int]], root: int, limit: int):
    """A cycle of length < ``limit`` found by BFS from ``root``, as a vertex
    list, or None. Finds one whenever ``root`` lies on such a cycle."""
    depth_cap = (limit - 1) // 2
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in sorted(adj[u]):
            if w not in dist:
                if du + 1 <= depth_cap:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
            elif w != parent[u] and du + dist[w] + 1 < limit:
                # splice the two tree paths at their lowest common ancestor
                left, right = [u], [w]
                while left[-1] != right[-1]:
                    if dist[left[-1]] >= dist[right[-1]]:
                        left.append(parent[left[-1]])
                    else:
                        right.append(parent[right[-1]])
                return left + right[-2::-1]
    return None


def prune(g: Graph, d: float, girth_target: int) -> tuple[Graph, PruneReport]:
    """Drop vertices of degree >= 10d (degrees taken in ``g``), then delete
    one vertex from each remaining cycle shorter than ``girth_target`` until
    none is left.

    The deleted cycle vertex is the one of highest current degree, ties by
    id. Returns the induced subgraph on the survivors (relabelled in
    ascending original-id order) and a report of what was removed.
    """
    report = PruneReport()
    alive = [True] * g.n
    for v in range(g.n):
        if g.degree(v) >= 10 * d:
            alive[v] = False
            report.high_degree.append(v)
    adj = [set(w for w in g.adj[v] if alive[w]) if alive[v] else set()
           for v in range(g.n)]

    if girth_target > 3:
        for v in range(g.n):
            while alive[v]:
                cyc = _short_cycle_through(adj, v, girth_target)
                if cyc is None:
                    break
                victim = max(cyc, key=lambda u: (len(adj[u]), -u))
                alive[victim] = False
                report.on_short_cycles.append(victim)
                for w in adj[victim]:
                    adj[w].discard(victim)
                adj[victim] = set()

    report.kept = [v for v in range(g.n) if alive[v]]
    return g.induced_subgraph(report.kept), report
