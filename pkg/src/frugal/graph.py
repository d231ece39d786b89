"""Simple undirected graphs and the neighbourhood / forbidden-subgraph queries
used by the reductions.

Vertices are the integers ``0..n-1``. Graphs are immutable once built.
The subgraph-freeness checks (``is_c2t_free``, ``is_pt_free``) are exhaustive
searches meant as small-instance oracles.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Optional, Sequence


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as sorted adjacency tuples.

    Build with :meth:`from_edges` rather than the raw constructor, which
    trusts its input. ``labels`` holds the original vertex names when the
    graph was ingested from arbitrary labels (see :meth:`from_labelled_edges`).
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[Hashable, ...]] = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_labelled_edges(cls, pairs: Iterable[tuple[Hashable, Hashable]]) -> "Graph":
        """Map arbitrary hashable labels to dense ids in first-seen order."""
        index: dict[Hashable, int] = {}
        edges = []
        for a, b in pairs:
            for x in (a, b):
                if x not in index:
                    index[x] = len(index)
            edges.append((index[a], index[b]))
        g = cls.from_edges(len(index), edges)
        return cls(g.n, g.adj, tuple(index))

    def __len__(self) -> int:
        return self.n

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adj[u]
        # binary search on the sorted tuple
        lo, hi = 0, len(nb)
        while lo < hi:
            mid = (lo + hi) // 2
            if nb[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nb) and nb[lo] == v

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def induced_subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, relabelled to ``0..len(keep)-1`` in
        ascending order of the original ids."""
        kept = sorted(set(keep))
        pos = {v: i for i, v in enumerate(kept)}
        edges = [(pos[u], pos[v]) for u in kept for v in self.adj[u]
                 if u < v and v in pos]
        return Graph.from_edges(len(kept), edges)


def _check_vertex_set(g: Graph, s: Sequence[int]) -> tuple[int, ...]:
    vs = tuple(sorted(set(s)))
    if len(vs) != len(s):
        raise ValueError("vertex set has repeated ids")
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise ValueError("vertex id out of range")
    return vs


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def common_neighbourhood(g: Graph, s: Sequence[int]) -> tuple[int, ...]:
    """Sorted vertices adjacent to every vertex of ``s``."""
    vs = _check_vertex_set(g, s)
    if not vs:
        raise ValueError("common neighbourhood of an empty set is undefined here")
    # intersect starting from the smallest neighbourhood
    ordered = sorted(vs, key=g.degree)
    common = set(g.adj[ordered[0]])
    for v in ordered[1:]:
        common.intersection_update(g.adj[v])
        if not common:
            break
    return tuple(sorted(common))


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best: Optional[int] = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            # no shorter cycle can be found beyond this depth
            if best is not None and 2 * du + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            break
    return best


def _has_cycle_of_length(g: Graph, length: int) -> bool:
    # the cycle is rooted at its minimum vertex; only larger vertices are used
    for s in range(g.n):
        nbrs = [w for w in g.adj[s] if w > s]
        if len(nbrs) < 2:
            continue
        closers: set[int] = set()
        on_path = [False] * g.n
        on_path[s] = True

        def extend(u: int, depth: int) -> bool:
            # depth = number of vertices on the path so far
            if depth == length:
                return u in closers
            for w in g.adj[u]:
                if w > s and not on_path[w]:
                    on_path[w] = True
                    if extend(w, depth + 1):
                        return True
                    on_path[w] = False
            return False

        for first in nbrs:
            # ordering the two cycle neighbours of s halves the search
            closers = {w for w in nbrs if w > first}
            if not closers:
                continue
            on_path[first] = True
            if extend(first, 2):
                return True
            on_path[first] = False
    return False


def is_c2t_free(g: Graph, t: int) -> bool:
    """True iff ``g`` has no cycle of length exactly ``2t`` (as a subgraph)."""
    if t < 2:
        raise ValueError("t must be at least 2")
    if t == 2:
        # C4 exists iff some pair of vertices has two common neighbours
        seen: set[tuple[int, int]] = set()
        for w in range(g.n):
            for pair in combinations(g.adj[w], 2):
                if pair in seen:
                    return False
                seen.add(pair)
        return True
    return not _has_cycle_of_length(g, 2 * t)


def _subset_counts(g: Graph, size: int) -> dict[tuple[int, ...], int]:
    """For each ``size``-subset with a common neighbour, the number of common
    neighbours. Cost is the sum over v of C(deg v, size)."""
    counts: dict[tuple[int, ...], int] = {}
    for w in range(g.n):
        for sub in combinations(g.adj[w], size):
            counts[sub] = counts.get(sub, 0) + 1
    return counts


def is_kst_free(g: Graph, s: int, t: int) -> bool:
    """True iff ``g`` contains no copy of K_{s,t} as a subgraph.

    An s-set with at least t common neighbours exists exactly when a t-set
    with at least s common neighbours does, so scanning the smaller side
    covers both side assignments.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    small, large = min(s, t), max(s, t)
    if small == 1:
        return max_degree(g) < large
    return all(c < large for c in _subset_counts(g, small).values())


def is_pt_free(g: Graph, t: int) -> bool:
    """True iff ``g`` contains no path on ``t`` vertices. Exhaustive DFS."""
    if t < 2:
        raise ValueError("t must be at least 2")
    if t == 2:
        return g.m == 0
    on_path = [False] * g.n

    def extend(u: int, count: int) -> bool:
        if count == t:
            return True
        for w in g.adj[u]:
            if not on_path[w]:
                on_path[w] = True
                if extend(w, count + 1):
                    return True
                on_path[w] = False
        return False

    for s in range(g.n):
        on_path[s] = True
        if extend(s, 1):
            return False
        on_path[s] = False
    return True


def count_triangles_at(g: Graph, v: int) -> int:
    """Number of edges inside the neighbourhood of ``v``."""
    nb = g.adj[v]
    nbset = set(nb)
    return sum(1 for u in nb for w in g.adj[u] if u < w and w in nbset)


def square(g: Graph) -> Graph:
    """Graph joining vertices at distance 1 or 2 in ``g``."""
    edges = set(g.edges())
    for w in range(g.n):
        edges.update(combinations(g.adj[w], 2))
    return Graph.from_edges(g.n, edges)


# -- named small graphs ------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with left part ``0..a-1`` and right part ``a..a+b-1``."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    return complete_bipartite(1, m)


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


# -- text format -------------------------------------------------------------

def _data_lines(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def format_graph(g: Graph) -> str:
    """``n m`` header then one ``u v`` line per edge, ``u < v``, sorted."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 2:
        raise ValueError("graph text must start with an 'n m' header")
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"bad edge line: {' '.join(row)}")
        u, v = int(row[0]), int(row[1])
        if not 0 <= u < v < n:
            raise ValueError(f"edge line must satisfy 0 <= u < v < n: {u} {v}")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edge")
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))
