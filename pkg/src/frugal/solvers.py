"""Colouring algorithms for hypergraphs and frugal colourings of graphs.

Heuristics (:func:`greedy_colour`, :func:`resample_colour`) work on any
hypergraph; to frugally colour a graph, colour one of the reductions in
:mod:`frugal.reduction`. The exact solvers are exponential branch-and-bound
searches and refuse inputs above a vertex cap.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional

from .graph import Graph
from .hypergraph import Colouring, Hypergraph, is_proper
from .rng import IntStream, make_rng

EXACT_CAP = 14


class ColouringFailure(Exception):
    """Greedy ran out of colours at ``vertex``."""

    def __init__(self, vertex: int, k: int):
        super().__init__(f"all {k} colours forbidden at vertex {vertex}")
        self.vertex = vertex
        self.k = k


class ResampleTimeout(Exception):
    """No proper colouring found within the round budget. This says nothing
    about whether one exists."""

    def __init__(self, k: int, rounds: int):
        super().__init__(f"no proper {k}-colouring found after {rounds} resamplings")
        self.k = k
        self.rounds = rounds


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SolverResult:
    colouring: Colouring
    palette_size: int
    iterations: int = 0
    seed: Optional[int] = None


# -- greedy ------------------------------------------------------------------

def _two_degrees(h: Hypergraph) -> list[int]:
    deg = [0] * h.n
    for e in h.edges:
        if len(e) == 2:
            deg[e[0]] += 1
            deg[e[1]] += 1
    return deg


def greedy_order(h: Hypergraph) -> list[int]:
    """Vertices by descending 2-degree, ties by id."""
    deg = _two_degrees(h)
    return sorted(range(h.n), key=lambda v: (-deg[v], v))


def greedy_colour(h: Hypergraph, k: int) -> SolverResult:
    """Give each vertex the least colour that does not complete a
    monochromatic edge. Raises :class:`ColouringFailure` if none of the ``k``
    colours is available."""
    if k < 1:
        raise ValueError("k must be positive")
    col: list[Optional[int]] = [None] * h.n
    inc = h.incidence()
    for v in greedy_order(h):
        forbidden = set()
        for i in inc[v]:
            e = h.edges[i]
            first = None
            for u in e:
                if u == v:
                    continue
                cu = col[u]
                if cu is None or (first is not None and cu != first):
                    break
                first = cu
            else:
                forbidden.add(first)
        c = 0
        while c in forbidden:
            c += 1
        if c >= k:
            raise ColouringFailure(v, k)
        col[v] = c
    return SolverResult(Colouring(tuple(col), k), k)


def greedy_palette(h: Hypergraph) -> int:
    """Smallest k for which :func:`greedy_colour` succeeds.

    The greedy choice never depends on ``k``, and a vertex of hypergraph
    degree d forbids at most d colours, so ``max degree + 1`` always works.
    """
    if h.n == 0:
        return 1
    bound = max((len(x) for x in h.incidence()), default=0) + 1
    res = greedy_colour(h, bound)
    return max(res.colouring.colour) + 1


# -- resampling --------------------------------------------------------------

def resample_colour(h: Hypergraph, k: int, seed: int, max_rounds: int = 100_000) -> SolverResult:
    """Moser-Tardos style search.

    Colours are drawn uniformly; while some edge is monochromatic, the first
    such edge in canonical order (size, then lexicographic) gets all its
    vertices redrawn. Raises :class:`ResampleTimeout` after ``max_rounds``
    redraws.
    """
    if k < 2:
        raise ValueError("resampling needs at least 2 colours")
    stream = IntStream(make_rng(seed), k)
    col = stream.take(h.n)
    edges = h.edges
    inc = h.incidence()

    def is_mono(e) -> bool:
        c = col[e[0]]
        for u in e[1:]:
            if col[u] != c:
                return False
        return True

    mono = [is_mono(e) for e in edges]
    heap = [i for i, bad in enumerate(mono) if bad]
    heapq.heapify(heap)
    rounds = 0
    while heap:
        i = heap[0]
        if not mono[i]:
            heapq.heappop(heap)
            continue
        if rounds >= max_rounds:
            raise ResampleTimeout(k, rounds)
        e = edges[i]
        for u, c in zip(e, stream.take(len(e))):
            col[u] = c
        rounds += 1
        touched = {j for u in e for j in inc[u]}
        for j in touched:
            now = is_mono(edges[j])
            if now and not mono[j]:
                heapq.heappush(heap, j)
            mono[j] = now
    return SolverResult(Colouring(tuple(col), k), k, rounds, seed)


# -- exact -------------------------------------------------------------------

def _search_order(n: int, nbrs: list[set[int]]) -> list[int]:
    """Start at a max-degree vertex, then repeatedly take the vertex with most
    already-ordered neighbours (ties: degree, then id)."""
    order: list[int] = []
    placed = [False] * n
    links = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if not placed[u]),
                key=lambda u: (links[u], len(nbrs[u]), -u))
        placed[v] = True
        order.append(v)
        for u in nbrs[v]:
            links[u] += 1
    return order


def _greedy_clique(n: int, nbrs: list[set[int]]) -> int:
    best = 1 if n else 0
    for start in range(n):
        clique = [start]
        cand = set(nbrs[start])
        while cand:
            v = max(cand, key=lambda u: (len(nbrs[u] & cand), -u))
            clique.append(v)
            cand &= nbrs[v]
        best = max(best, len(clique))
    return best


def exact_hypergraph_colouring(h: Hypergraph, cap: int = EXACT_CAP) -> Colouring:
    """A proper colouring with the minimum number of colours."""
    if h.n > cap:
        raise InstanceTooLarge(f"n={h.n} exceeds exact-solver cap {cap}")
    n = h.n
    if n == 0:
        return Colouring((), 1)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in h.edges:
        for u in e:
            nbrs[u].update(e)
    for u in range(n):
        nbrs[u].discard(u)
    order = _search_order(n, nbrs)
    pos = {v: i for i, v in enumerate(order)}
    # edges are checked once, when their last vertex in search order is coloured
    pair_checks: list[list[int]] = [[] for _ in range(n)]
    wide_checks: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in h.edges:
        last = max(e, key=pos.__getitem__)
        others = tuple(u for u in e if u != last)
        if len(others) == 1:
            pair_checks[last].append(others[0])
        else:
            wide_checks[last].append(others)

    two_nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in h.edges:
        if len(e) == 2:
            two_nbrs[e[0]].add(e[1])
            two_nbrs[e[1]].add(e[0])
    lower = _greedy_clique(n, two_nbrs) if h.edges else 1
    if h.edges:
        lower = max(lower, 2)

    seed_col = greedy_colour(h, greedy_palette(h)).colouring.colour
    best = list(seed_col)
    incumbent = max(best) + 1
    col = [-1] * n

    def dfs(i: int, used: int) -> bool:
        nonlocal incumbent, best
        if used >= incumbent:
            return False
        if i == n:
            incumbent = used
            best = col.copy()
            return incumbent <= lower
        v = order[i]
        for c in range(used + 1):
            if c + 1 >= incumbent:
                break
            if any(col[u] == c for u in pair_checks[v]):
                continue
            if any(all(col[u] == c for u in others) for others in wide_checks[v]):
                continue
            col[v] = c
            if dfs(i + 1, max(used, c + 1)):
                return True
            col[v] = -1
        return False

    if incumbent > lower:
        dfs(0, 0)
    return Colouring(tuple(best), incumbent)


def exact_hypergraph_chromatic(h: Hypergraph, cap: int = EXACT_CAP) -> int:
    return exact_hypergraph_colouring(h, cap).k


def exact_chromatic(g: Graph, cap: int = EXACT_CAP) -> int:
    """Ordinary chromatic number."""
    return exact_hypergraph_chromatic(Hypergraph.from_graph(g), cap)


def exact_frugal_colouring(g: Graph, beta: int, cap: int = EXACT_CAP) -> Colouring:
    """A beta-frugal colouring of ``g`` with the minimum number of colours.

    Works on ``g`` directly (colour multiplicities per neighbourhood), not
    through a hypergraph, so it can serve as an oracle for the reductions.
    """
    if beta < 1:
        raise ValueError("beta must be positive")
    if g.n > cap:
        raise InstanceTooLarge(f"n={g.n} exceeds exact-solver cap {cap}")
    n = g.n
    if n == 0:
        return Colouring((), 1)
    adj = g.adj
    # distance <= 2 neighbourhoods drive the search order
    near: list[set[int]] = [set(adj[v]) for v in range(n)]
    for w in range(n):
        for u in adj[w]:
            near[u].update(adj[w])
    for u in range(n):
        near[u].discard(u)
    order = _search_order(n, near)

    # trivial lower bound: a max-degree vertex plus its neighbourhood
    delta = max(len(a) for a in adj)
    lower = 1 + -(-delta // beta) if delta else 1
    lower = max(lower, _greedy_clique(n, [set(a) for a in adj]))

    # initial incumbent: every vertex its own colour
    best = list(range(n))
    incumbent = n
    col = [-1] * n
    counts = [dict() for _ in range(n)]  # counts[w][c] = coloured neighbours of w with colour c

    def dfs(i: int, used: int) -> bool:
        nonlocal incumbent, best
        if used >= incumbent:
            return False
        if i == n:
            incumbent = used
            best = col.copy()
            return incumbent <= lower
        v = order[i]
        for c in range(used + 1):
            if c + 1 >= incumbent:
                break
            if counts[v].get(c, 0):
                continue  # a neighbour already has colour c
            if any(counts[w].get(c, 0) >= beta for w in adj[v]):
                continue
            col[v] = c
            for w in adj[v]:
                counts[w][c] = counts[w].get(c, 0) + 1
            if dfs(i + 1, max(used, c + 1)):
                return True
            for w in adj[v]:
                counts[w][c] -= 1
            col[v] = -1
        return False

    if incumbent > lower:
        dfs(0, 0)
    return Colouring(tuple(best), incumbent)


def exact_frugal_chromatic(g: Graph, beta: int, cap: int = EXACT_CAP) -> int:
    return exact_frugal_colouring(g, beta, cap).k


# -- verifiers ---------------------------------------------------------------

@dataclass(frozen=True)
class FrugalCheck:
    """Result of :func:`verify_frugal`; truthy iff the colouring is valid.

    On failure exactly one witness is set: ``edge`` for a monochromatic graph
    edge, or ``(vertex, colour, count)`` for an overloaded neighbourhood.
    """

    ok: bool
    edge: Optional[tuple[int, int]] = None
    vertex: Optional[int] = None
    colour: Optional[int] = None
    count: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_frugal(g: Graph, c: Colouring, beta: int) -> FrugalCheck:
    if len(c) != g.n:
        raise ValueError(f"colouring covers {len(c)} vertices, graph has {g.n}")
    col = c.colour
    for u, v in g.edges():
        if col[u] == col[v]:
            return FrugalCheck(False, edge=(u, v))
    for v in range(g.n):
        seen: dict[int, int] = {}
        for w in g.adj[v]:
            seen[col[w]] = seen.get(col[w], 0) + 1
        for colour in sorted(seen):
            if seen[colour] > beta:
                return FrugalCheck(False, vertex=v, colour=colour, count=seen[colour])
    return FrugalCheck(True)


def _is_tree(p: Graph) -> bool:
    if p.n == 0 or p.m != p.n - 1:
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in p.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == p.n


def verify_avoiding(g: Graph, c: Colouring, pattern: Graph) -> bool:
    """True iff ``c`` is proper and no subgraph copy of the tree ``pattern``
    uses exactly two colours.

    With ``pattern = star_graph(beta + 1)`` this is beta-frugality; with
    ``path_graph(4)`` it is star colouring.
    """
    if not _is_tree(pattern) or pattern.m < 2:
        raise NotImplementedError("only trees with at least 2 edges are supported")
    if len(c) != g.n:
        raise ValueError(f"colouring covers {len(c)} vertices, graph has {g.n}")
    col = c.colour
    if any(col[u] == col[v] for u, v in g.edges()):
        return False

    # root the pattern at a max-degree vertex; embed in BFS order
    root = max(range(pattern.n), key=lambda v: (pattern.degree(v), -v))
    order, parent, depth = [root], {root: -1}, {root: 0}
    for u in order:
        for w in pattern.adj[u]:
            if w not in parent:
                parent[w] = u
                depth[w] = depth[u] + 1
                order.append(w)

    image = [-1] * pattern.n
    used = set()

    def embed(i: int, colours: list) -> bool:
        if i == len(order):
            return True
        p = order[i]
        host = image[parent[p]]
        want = colours[depth[p] % 2]
        for z in g.adj[host]:
            if z in used or (want is not None and col[z] != want):
                continue
            image[p] = z
            used.add(z)
            fresh = want is None
            if fresh:
                colours[1] = col[z]
            if embed(i + 1, colours):
                return True
            if fresh:
                colours[1] = None
            used.discard(z)
        return False

    for x in range(g.n):
        image[root] = x
        used.add(x)
        if embed(1, [col[x], None]):
            return False
        used.discard(x)
    return True


def check_result(h: Hypergraph, result: SolverResult) -> bool:
    return is_proper(h, result.colouring)
