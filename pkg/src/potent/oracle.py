"""Ground truth by exhaustive search over realizations.

Two search modes answer "does some realization of pi contain H?":

``exhaustive``
    walk every labeled realization of pi and test each for a copy of H.
``top_degree``
    put H on the |V(H)| highest-degree positions (every assignment), then
    try to complete the rest of the graph without reusing H's edges.  A
    realization containing H can always be rearranged so H sits on the
    largest degrees, so both modes agree on existence.

Both are backtracking searches meant for n <= 10 or so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .graph import LabeledGraph, TargetPattern, embed_adjacency, is_embedding, target_pattern
from .sequence import DegreeSequence, is_graphic

__all__ = [
    "DEFAULT_CAP",
    "HARD_CAP",
    "OracleError",
    "OracleResult",
    "RealizationWitness",
    "complete_under_forbidden",
    "enumerate_realizations",
    "oracle_potential",
    "oracle_search",
]

DEFAULT_CAP = 10
HARD_CAP = 16
MODES = ("exhaustive", "top_degree")


class OracleError(ValueError):
    """Precondition failure: non-graphic input, zero terms, or n over the cap."""


@dataclass(frozen=True)
class RealizationWitness:
    """A realization of ``sequence`` plus an embedding of the target into it.

    ``embedding[x]`` is the 0-based vertex hosting pattern vertex ``x``;
    vertex ``i`` of ``graph`` has degree ``sequence.d(i + 1)``.
    """

    graph: LabeledGraph
    embedding: tuple[int, ...]
    target: TargetPattern
    sequence: DegreeSequence
    mode: str = "exhaustive"

    def validate(self) -> bool:
        return (
            tuple(self.graph.degrees()) == self.sequence.terms
            and is_embedding(self.graph, self.target.graph, self.embedding)
        )

    def to_json(self) -> dict:
        return {
            "sequence": str(self.sequence),
            "target": self.target.tag,
            "mode": self.mode,
            "graph": self.graph.to_json(),
            "embedding": [p + 1 for p in self.embedding],
        }


@dataclass
class OracleResult:
    witness: RealizationWitness | None
    states_explored: int = 0
    mode: str = "exhaustive"
    sequence: DegreeSequence | None = field(default=None, repr=False)
    target: TargetPattern | None = field(default=None, repr=False)

    @property
    def potential(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict:
        if self.witness is not None:
            return {"potential": True, **self.witness.to_json()}
        return {
            "potential": False,
            "sequence": str(self.sequence),
            "target": self.target.tag if self.target else None,
            "mode": self.mode,
            "exhausted": True,
            "states_explored": self.states_explored,
        }


def _check_cap(n: int, cap: int) -> None:
    if cap > HARD_CAP:
        raise OracleError(f"vertex cap {cap} exceeds hard maximum {HARD_CAP}")
    if n > cap:
        raise OracleError(f"n={n} exceeds the oracle vertex cap {cap}")


def _residual_graphic(r: Sequence[int], start: int) -> bool:
    return is_graphic(tuple(sorted(r[start:], reverse=True)))


class _Counter:
    __slots__ = ("states",)

    def __init__(self):
        self.states = 0


def _realizations(terms: tuple[int, ...], counter: _Counter) -> Iterator[list[int]]:
    n = len(terms)
    r = list(terms)
    adj = [0] * n

    def place(v: int) -> Iterator[list[int]]:
        counter.states += 1
        if v == n:
            yield adj
            return
        need = r[v]
        if need == 0:
            yield from place(v + 1)
            return
        cand = [u for u in range(v + 1, n) if r[u] > 0]
        for chosen in combinations(cand, need):
            for u in chosen:
                r[u] -= 1
                adj[v] |= 1 << u
                adj[u] |= 1 << v
            r[v] = 0
            if _residual_graphic(r, v + 1):
                yield from place(v + 1)
            r[v] = need
            for u in chosen:
                r[u] += 1
                adj[v] &= ~(1 << u)
                adj[u] &= ~(1 << v)

    yield from place(0)


def _as_sequence(seq) -> DegreeSequence:
    return seq if isinstance(seq, DegreeSequence) else DegreeSequence(seq)


def enumerate_realizations(seq: DegreeSequence | Iterable[int], cap: int = DEFAULT_CAP) -> Iterator[LabeledGraph]:
    """Yield every labeled realization of ``seq`` exactly once.

    Vertex ``i`` gets degree ``seq.d(i + 1)``.  Vertices are filled in order;
    each takes its remaining neighbours among later vertices, and a branch is
    cut as soon as the later vertices' residual demands stop being graphic,
    so every branch ends in a realization.

    Raises:
        OracleError: ``seq`` is not graphic or is longer than ``cap``.
    """
    seq = _as_sequence(seq)
    _check_cap(len(seq), cap)
    if not is_graphic(seq):
        raise OracleError(f"{seq} is not graphic")
    for adj in _realizations(seq.terms, _Counter()):
        yield LabeledGraph.from_adjacency(adj)


def complete_under_forbidden(
    residual: Sequence[int],
    placed: LabeledGraph,
    counter: _Counter | None = None,
) -> LabeledGraph | None:
    """Graph with degree ``residual[i]`` at vertex ``i`` avoiding ``placed``'s edges.

    ``residual`` is positional (not re-sorted).  Returns None when no such
    edge-disjoint completion exists.
    """
    n = len(residual)
    if placed.n != n:
        raise ValueError(f"placed graph has {placed.n} vertices, residual has {n}")
    for i, x in enumerate(residual):
        if x < 0 or x + placed.degree(i) > n - 1:
            raise ValueError(f"residual {x} at vertex {i + 1} cannot fit beside the placed edges")
    if sum(residual) % 2:
        return None
    if counter is None:
        counter = _Counter()
    full = (1 << n) - 1
    # free[v]: vertices v may still be joined to
    free = [full & ~placed.adj[v] & ~(1 << v) for v in range(n)]
    r = list(residual)
    new = [0] * n

    def feasible() -> bool:
        live = 0
        for v in range(n):
            if r[v]:
                live |= 1 << v
        for v in range(n):
            if r[v] and (free[v] & live).bit_count() < r[v]:
                return False
        return is_graphic(tuple(sorted((x for x in r if x), reverse=True)))

    def fill() -> bool:
        counter.states += 1
        v = next((i for i in range(n) if r[i]), None)
        if v is None:
            return True
        need = r[v]
        cand = [u for u in range(v + 1, n) if r[u] and free[v] >> u & 1]
        if len(cand) < need:
            return False
        for chosen in combinations(cand, need):
            r[v] = 0
            for u in chosen:
                r[u] -= 1
                new[v] |= 1 << u
                new[u] |= 1 << v
            if feasible() and fill():
                return True
            r[v] = need
            for u in chosen:
                r[u] += 1
                new[v] &= ~(1 << u)
                new[u] &= ~(1 << v)
        return False

    if not feasible():
        return None
    if fill():
        return LabeledGraph.from_adjacency(new)
    return None


def _dominates(terms: Sequence[int], pattern_degrees: Sequence[int]) -> bool:
    need = sorted(pattern_degrees, reverse=True)
    return len(need) <= len(terms) and all(d >= h for d, h in zip(terms, need))


def _validate_input(seq: DegreeSequence, target: TargetPattern, cap: int) -> None:
    _check_cap(len(seq), cap)
    if not is_graphic(seq):
        raise OracleError(f"{seq} is not graphic")
    if not seq.is_positive:
        raise OracleError(f"{seq} has a zero term")
    if target.order > len(seq):
        raise OracleError(f"target {target} has {target.order} vertices but n={len(seq)}")


def _has_k33(adj: Sequence[int]) -> bool:
    # three vertices with three common neighbours (automatically outside the triple)
    hubs = [v for v, a in enumerate(adj) if a.bit_count() >= 3]
    for a, b, c in combinations(hubs, 3):
        if (adj[a] & adj[b] & adj[c]).bit_count() >= 3:
            return True
    return False


def _has_k23(adj: Sequence[int]) -> bool:
    hubs = [v for v, a in enumerate(adj) if a.bit_count() >= 3]
    return any((adj[a] & adj[b]).bit_count() >= 3 for a, b in combinations(hubs, 2))


def _has_prism(adj: Sequence[int]) -> bool:
    # two vertex-disjoint triangles joined by a perfect matching
    n = len(adj)
    triangles = [
        (a, b, c)
        for a in range(n)
        for b in range(a + 1, n)
        if adj[a] >> b & 1
        for c in range(b + 1, n)
        if adj[a] >> c & 1 and adj[b] >> c & 1
    ]
    for i, (a, b, c) in enumerate(triangles):
        tri = 1 << a | 1 << b | 1 << c
        for x, y, z in triangles[i + 1 :]:
            if tri >> x & 1 or tri >> y & 1 or tri >> z & 1:
                continue
            for p, q, r in permutations((x, y, z)):
                if adj[a] >> p & 1 and adj[b] >> q & 1 and adj[c] >> r & 1:
                    return True
    return False


_FAST_TESTS = {"K33": _has_k33, "K23": _has_k23, "K6minusC6": _has_prism}


def _search_exhaustive(seq: DegreeSequence, target: TargetPattern) -> OracleResult:
    h = target.graph
    counter = _Counter()
    result = OracleResult(None, 0, "exhaustive", seq, target)
    if not _dominates(seq.terms, h.degrees()):
        return result
    quick = _FAST_TESTS.get(target.tag)
    for adj in _realizations(seq.terms, counter):
        if quick is not None and not quick(adj):
            continue
        phi = embed_adjacency(adj, h)
        if phi is not None:
            g = LabeledGraph.from_adjacency(adj)
            result.witness = RealizationWitness(g, phi, target, seq, "exhaustive")
            break
    result.states_explored = counter.states
    return result


def _placements(h: LabeledGraph) -> Iterator[tuple[tuple[int, ...], frozenset]]:
    # every assignment of pattern vertices to positions 0..k-1; assignments
    # giving the same edge set and degree profile are equivalent, so skip repeats
    seen = set()
    for phi in permutations(range(h.n)):
        edges = frozenset(tuple(sorted((phi[u], phi[v]))) for u, v in h.edges)
        if edges in seen:
            continue
        seen.add(edges)
        yield phi, edges


def _search_top_degree(seq: DegreeSequence, target: TargetPattern) -> OracleResult:
    h = target.graph
    n = len(seq)
    counter = _Counter()
    result = OracleResult(None, 0, "top_degree", seq, target)
    h_deg = h.degrees()
    for phi, edges in _placements(h):
        counter.states += 1
        residual = list(seq.terms)
        ok = True
        for x, pos in enumerate(phi):
            residual[pos] -= h_deg[x]
            if residual[pos] < 0:
                ok = False
        if not ok:
            continue
        placed = LabeledGraph(n, edges)
        if any(residual[i] + placed.degree(i) > n - 1 for i in range(n)):
            continue
        rest = complete_under_forbidden(residual, placed, counter)
        if rest is not None:
            g = LabeledGraph(n, [*edges, *rest.edges])
            result.witness = RealizationWitness(g, tuple(phi), target, seq, "top_degree")
            break
    result.states_explored = counter.states
    return result


def oracle_search(
    seq: DegreeSequence | Iterable[int],
    target: TargetPattern | str,
    mode: str = "exhaustive",
    cap: int = DEFAULT_CAP,
) -> OracleResult:
    """Like :func:`oracle_potential` but also reports search effort."""
    seq = _as_sequence(seq)
    target = target_pattern(target) if isinstance(target, str) else target
    _validate_input(seq, target, cap)
    mode = mode.replace("-", "_")
    if mode == "exhaustive":
        return _search_exhaustive(seq, target)
    if mode == "top_degree":
        return _search_top_degree(seq, target)
    raise ValueError(f"unknown oracle mode {mode!r}; expected one of {MODES}")


def oracle_potential(
    seq: DegreeSequence | Iterable[int],
    target: TargetPattern | str,
    mode: str = "exhaustive",
    cap: int = DEFAULT_CAP,
) -> RealizationWitness | None:
    """A realization of ``seq`` containing the target, or None if none exists.

    None is a proof by exhaustion: no realization contains the target.
    """
    return oracle_search(seq, target, mode, cap).witness
