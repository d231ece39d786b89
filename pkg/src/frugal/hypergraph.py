"""Hypergraphs with mixed edge sizes, their degree/codegree statistics, and
proper colourings."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph


def _canonical_key(edge: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (len(edge), edge)


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a deduplicated tuple of sorted edges.

    Edges are kept in canonical order: by size, then lexicographically.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        uniq = set()
        for e in edges:
            edge = tuple(sorted(set(e)))
            if len(edge) < 2:
                raise ValueError(f"edge {edge} has fewer than 2 distinct vertices")
            if edge[0] < 0 or edge[-1] >= n:
                raise ValueError(f"edge {edge} out of range for n={n}")
            uniq.add(edge)
        return cls(n, tuple(sorted(uniq, key=_canonical_key)))

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls.from_edges(g.n, g.edges())

    @property
    def m(self) -> int:
        return len(self.edges)

    def edges_of_size(self, ell: int) -> list[tuple[int, ...]]:
        return [e for e in self.edges if len(e) == ell]

    def layer_graph(self, ell: int = 2) -> Graph:
        """The 2-uniform part as a :class:`Graph` (only ``ell=2`` is meaningful)."""
        if ell != 2:
            raise ValueError("only the 2-edge layer is a graph")
        return Graph.from_edges(self.n, self.edges_of_size(2))

    def incidence(self) -> list[list[int]]:
        """Per-vertex list of indices into ``edges``."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc


@dataclass(frozen=True)
class Colouring:
    """Total colouring ``colour[v] in range(k)``."""

    colour: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("palette size must be positive")
        for c in self.colour:
            if c is None or not 0 <= c < self.k:
                raise ValueError(f"colour {c!r} outside palette 0..{self.k - 1}")

    @classmethod
    def of(cls, colours: Sequence[int], k: int | None = None) -> "Colouring":
        colours = tuple(colours)
        if k is None:
            k = max(colours, default=-1) + 1 or 1
        return cls(colours, k)

    def __len__(self) -> int:
        return len(self.colour)

    def __getitem__(self, v: int) -> int:
        return self.colour[v]

    def used(self) -> int:
        return len(set(self.colour))


def rank(h: Hypergraph) -> int:
    if not h.edges:
        raise ValueError("rank of an edgeless hypergraph is undefined")
    return max(len(e) for e in h.edges)


def max_ell_degree(h: Hypergraph, ell: int) -> int:
    """Maximum over vertices of the number of ``ell``-edges containing it."""
    if not 2 <= ell <= rank(h):
        raise ValueError(f"ell={ell} outside 2..rank")
    counts = Counter(v for e in h.edges if len(e) == ell for v in e)
    return max(counts.values(), default=0)


def max_codegree(h: Hypergraph, s: int, ell: int) -> int:
    """Maximum over ``s``-sets S of the number of ``ell``-edges containing S.

    Only s-subsets of edges can have positive codegree, so the scan costs
    the sum of C(|e|, s) over ``ell``-edges.
    """
    if not 1 <= s < ell <= rank(h):
        raise ValueError(f"need 1 <= s < ell <= rank, got s={s}, ell={ell}")
    counts = Counter(sub for e in h.edges if len(e) == ell
                     for sub in combinations(e, s))
    return max(counts.values(), default=0)


def _check_total(h: Hypergraph, c: Colouring) -> None:
    if len(c) != h.n:
        raise ValueError(f"colouring covers {len(c)} vertices, hypergraph has {h.n}")


def monochromatic_edges(h: Hypergraph, c: Colouring) -> list[tuple[int, ...]]:
    _check_total(h, c)
    col = c.colour
    return [e for e in h.edges if all(col[v] == col[e[0]] for v in e[1:])]


def is_proper(h: Hypergraph, c: Colouring) -> bool:
    """True iff no edge is monochromatic."""
    _check_total(h, c)
    col = c.colour
    for e in h.edges:
        first = col[e[0]]
        if all(col[v] == first for v in e[1:]):
            return False
    return True


def delta_star(h: Hypergraph) -> float:
    """max over ell of (max ell-degree) ** (1 / (ell - 1))."""
    r = rank(h)
    return max(float(max_ell_degree(h, ell)) ** (1.0 / (ell - 1))
               for ell in range(2, r + 1))


# -- text formats ------------------------------------------------------------

def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(x) for x in line.split()])
    if not rows or len(rows[0]) != 2:
        raise ValueError("hypergraph text must start with an 'n m' header")
    n, m = rows[0]
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges, found {len(rows) - 1}")
    for e in rows[1:]:
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ValueError(f"edge vertices must be strictly ascending: {e}")
    return Hypergraph.from_edges(n, rows[1:])


def format_colouring(c: Colouring) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c.colour))


def parse_colouring(text: str, k: int | None = None) -> Colouring:
    pairs = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        v, col = (int(x) for x in line.split())
        if v in pairs:
            raise ValueError(f"vertex {v} coloured twice")
        pairs[v] = col
    n = len(pairs)
    if set(pairs) != set(range(n)):
        raise ValueError("colouring must cover vertices 0..n-1 exactly")
    return Colouring.of([pairs[v] for v in range(n)], k)
