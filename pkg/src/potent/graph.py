"""Small labeled simple graphs, named patterns and subgraph embedding.

Vertices are ``0..n-1`` internally.  Adjacency is kept as one int bitmask
per vertex, which is plenty for the n <= 16 graphs this package searches.
JSON output uses 1-based labels so vertex ``i`` lines up with ``d_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .sequence import DegreeSequence

__all__ = [
    "LabeledGraph",
    "TargetPattern",
    "build_named",
    "degree_sequence_of",
    "find_embedding",
    "is_embedding",
    "remove_subgraph_edges",
    "disjoint_union",
    "target_pattern",
]


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(repr=False, compare=False)

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        canon = set()
        adj = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {u}-{v} outside 0..{vertex_count - 1}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> LabeledGraph:
        n = len(adj)
        return cls(n, [(u, v) for u in range(n) for v in _bits(adj[u]) if u < v])

    @property
    def n(self) -> int:
        return self.vertex_count

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.vertex_count, "edges": [[u + 1, v + 1] for u, v in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: Mapping) -> LabeledGraph:
        return cls(data["n"], [(u - 1, v - 1) for u, v in data["edges"]])


def _complete(r: int) -> list[tuple[int, int]]:
    return list(combinations(range(r), 2))


def _bipartite(r: int, s: int) -> list[tuple[int, int]]:
    return [(u, r + v) for u in range(r) for v in range(s)]


def _cycle(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


def _path(k: int) -> list[tuple[int, int]]:
    # k edges on k + 1 vertices
    return [(i, i + 1) for i in range(k)]


def _minus(n: int, base: list[tuple[int, int]], removed: list[tuple[int, int]]) -> LabeledGraph:
    drop = {tuple(sorted(e)) for e in removed}
    return LabeledGraph(n, [e for e in base if tuple(sorted(e)) not in drop])


_ALIASES = {
    "k33": "K33",
    "k3,3": "K33",
    "k23": "K23",
    "k2,3": "K23",
    "k6c6": "K6minusC6",
    "k6minusc6": "K6minusC6",
    "k6-c6": "K6minusC6",
    "prism": "K6minusC6",
    "k5p4": "K5minusP4",
    "k5minusp4": "K5minusP4",
    "k5-p4": "K5minusP4",
}


def build_named(tag: str, *params: int) -> LabeledGraph:
    """Construct a named graph.

    Accepted tags: ``K33``, ``K23``, ``K6minusC6`` (complement of the 6-cycle
    0-1-2-3-4-5), ``K5minusP4`` (K5 minus the path 0-1-2-3-4), and the
    parametric families ``K`` (complete, ``K5`` or ``("K", 5)``), ``Krs``
    (complete bipartite, ``K2,4`` or ``("Krs", 2, 4)``), ``C`` (cycle on k
    vertices, k >= 3) and ``P`` (path with k edges).

    Raises:
        ValueError: unknown tag or invalid parameters.
    """
    name = _ALIASES.get(tag.lower().replace("_", "").replace("{", "").replace("}", ""), tag)
    if name == "K33":
        return LabeledGraph(6, _bipartite(3, 3))
    if name == "K23":
        return LabeledGraph(5, _bipartite(2, 3))
    if name == "K6minusC6":
        return _minus(6, _complete(6), _cycle(6))
    if name == "K5minusP4":
        return _minus(5, _complete(5), _path(4))

    if not params:
        m = re.fullmatch(r"([KCP])_?\{?(\d+)(?:,(\d+))?\}?", tag.strip())
        if m is None:
            raise ValueError(f"unknown graph tag {tag!r}")
        name = m.group(1) + ("rs" if m.group(3) else "")
        params = tuple(int(g) for g in m.groups()[1:] if g is not None)

    if name == "Krs":
        if len(params) != 2 or min(params) < 1:
            raise ValueError(f"K_r,s needs two positive sizes, got {params}")
        r, s = params
        return LabeledGraph(r + s, _bipartite(r, s))
    if len(params) != 1:
        raise ValueError(f"{name} takes one parameter, got {params}")
    (k,) = params
    if name == "K":
        if k < 1:
            raise ValueError("K_r needs r >= 1")
        return LabeledGraph(k, _complete(k))
    if name == "C":
        if k < 3:
            raise ValueError(f"C_{k} is not a simple cycle; need k >= 3")
        return LabeledGraph(k, _cycle(k))
    if name == "P":
        if k < 0:
            raise ValueError("P_k needs k >= 0")
        return LabeledGraph(k + 1, _path(k))
    raise ValueError(f"unknown graph tag {tag!r}")


@dataclass(frozen=True)
class TargetPattern:
    """A pattern graph H with a tag: a named pattern or ``Custom``."""

    tag: str
    graph: LabeledGraph

    NAMED = ("K23", "K5minusP4", "K33", "K6minusC6")

    def __post_init__(self):
        if self.tag in self.NAMED:
            if self.graph != build_named(self.tag):
                raise ValueError(f"graph does not match canonical {self.tag}")
        elif self.tag != "Custom":
            raise ValueError(f"unknown target tag {self.tag!r}")

    @property
    def order(self) -> int:
        return self.graph.vertex_count

    @classmethod
    def custom(cls, graph: LabeledGraph) -> TargetPattern:
        return cls("Custom", graph)

    def __str__(self) -> str:
        return self.tag


def target_pattern(name: str | TargetPattern) -> TargetPattern:
    """Look up a named target; accepts CLI spellings like ``k33`` or ``k6c6``."""
    if isinstance(name, TargetPattern):
        return name
    tag = _ALIASES.get(name.lower(), name)
    if tag not in TargetPattern.NAMED:
        raise ValueError(f"unknown target {name!r}; expected one of k23, k5p4, k33, k6c6")
    return TargetPattern(tag, build_named(tag))


def degree_sequence_of(g: LabeledGraph) -> DegreeSequence:
    return DegreeSequence(g.degrees())


@lru_cache(maxsize=64)
def _search_plan(h: LabeledGraph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    # connected order, most-constrained first; back[i] = earlier neighbours of order[i]
    remaining = set(range(h.n))
    order: list[int] = []
    placed = 0
    while remaining:
        frontier = [v for v in remaining if h.adj[v] & placed]
        pool = frontier or list(remaining)
        v = max(pool, key=lambda x: ((h.adj[x] & placed).bit_count(), h.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    back = []
    seen = 0
    for x in order:
        back.append(tuple(_bits(h.adj[x] & seen)))
        seen |= 1 << x
    return tuple(order), tuple(back)


def embed_adjacency(
    adj: Sequence[int],
    h: LabeledGraph,
    allowed: Sequence[int] | None = None,
) -> tuple[int, ...] | None:
    """:func:`find_embedding` on a raw bitmask adjacency list."""
    n = len(adj)
    if h.n > n:
        return None
    if h.n == 0:
        return ()
    order, back = _search_plan(h)
    g_deg = [a.bit_count() for a in adj]
    base = []
    for x in range(h.n):
        need = h.degree(x)
        mask = 0
        for y in range(n):
            if g_deg[y] >= need:
                mask |= 1 << y
        if allowed is not None:
            mask &= allowed[x]
        if not mask:
            return None
        base.append(mask)
    phi = [-1] * h.n
    depth = len(order)

    def extend(pos: int, used: int) -> bool:
        if pos == depth:
            return True
        x = order[pos]
        cand = base[x] & ~used
        for y in back[pos]:
            cand &= adj[phi[y]]
        while cand:
            low = cand & -cand
            cand ^= low
            phi[x] = low.bit_length() - 1
            if extend(pos + 1, used | low):
                return True
        return False

    if extend(0, 0):
        return tuple(phi)
    return None


def find_embedding(
    g: LabeledGraph,
    h: LabeledGraph,
    allowed: Sequence[int] | None = None,
) -> tuple[int, ...] | None:
    """Find an injective map of H's vertices into G preserving H's edges.

    Returns a tuple ``phi`` with ``phi[x]`` the G-vertex hosting H-vertex
    ``x``, or None.  This is plain (non-induced) subgraph containment.
    ``allowed`` optionally restricts each H-vertex to a bitmask of hosts.
    Candidates are pruned by degree (a host needs at least the pattern
    vertex's degree) and by adjacency to already-placed neighbours.
    """
    return embed_adjacency(g.adj, h, allowed)


def is_embedding(g: LabeledGraph, h: LabeledGraph, phi: Sequence[int]) -> bool:
    """Check injectivity and edge preservation of ``phi`` directly."""
    if len(phi) != h.n or len(set(phi)) != len(phi):
        return False
    if any(not 0 <= p < g.n for p in phi):
        return False
    return all((min(phi[u], phi[v]), max(phi[u], phi[v])) in g.edges for u, v in h.edges)


def remove_subgraph_edges(g: LabeledGraph, phi: Sequence[int], h: LabeledGraph) -> LabeledGraph:
    """G minus the images of H's edges under ``phi``; vertices are kept."""
    if not is_embedding(g, h, phi):
        raise ValueError("phi is not an embedding of H in G")
    gone = {tuple(sorted((phi[u], phi[v]))) for u, v in h.edges}
    return LabeledGraph(g.n, [e for e in g.edges if e not in gone])


def disjoint_union(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    shift = g.n
    return LabeledGraph(g.n + h.n, [*g.edges, *((u + shift, v + shift) for u, v in h.edges)])
