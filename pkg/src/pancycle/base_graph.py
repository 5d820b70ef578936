"""The 9-vertex base graph K9 - C9 and classic Hamiltonicity conditions.

The deleted 9-cycle is fixed as 1-2-...-9-1, so the base graph is the
circulant on labels 1..9 with connection set {2, 3, 4}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple

LABELS = tuple(range(1, 10))
CONNECTION_SET = frozenset({2, 3, 4})


class NoOrderingFound(LookupError):
    """No Hamiltonian path of the base graph satisfies the chord constraints."""


def _check_label(u: int) -> None:
    if not (isinstance(u, int) and 1 <= u <= 9):
        raise ValueError(f"base label must be an integer in 1..9, got {u!r}")


def base_adjacent(u: int, v: int) -> bool:
    _check_label(u)
    _check_label(v)
    d = abs(u - v)
    return min(d, 9 - d) in CONNECTION_SET


def base_edges() -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(LABELS, 2) if base_adjacent(u, v)]


def base_edge_stats() -> tuple[int, int, int]:
    """Return (vertex_count, edge_count, regularity), counted by enumeration."""
    edges = base_edges()
    degree = dict.fromkeys(LABELS, 0)
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    degrees = set(degree.values())
    if len(degrees) != 1:
        raise AssertionError(f"base graph is not regular: {degree}")
    return len(LABELS), len(edges), degrees.pop()


# -- path orderings ---------------------------------------------------------


def is_path_ordering(perm: Iterable[int]) -> bool:
    perm = tuple(perm)
    if sorted(perm) != list(LABELS):
        return False
    return all(base_adjacent(a, b) for a, b in zip(perm, perm[1:]))


def satisfies_chords(perm: tuple[int, ...], constraints: Iterable[tuple[int, int]]) -> bool:
    return all(base_adjacent(perm[s - 1], perm[t - 1]) for s, t in constraints)


def _normalize_constraints(constraints) -> frozenset[tuple[int, int]]:
    pairs = set()
    for s, t in constraints:
        if s == t or not (1 <= s <= 9 and 1 <= t <= 9):
            raise ValueError(f"bad chord constraint {(s, t)}")
        pairs.add((min(s, t), max(s, t)))
    return frozenset(pairs)


def find_path_ordering(constraints: Iterable[tuple[int, int]] = ()) -> tuple[int, ...]:
    """Lexicographically first Hamiltonian path of the base graph obeying `constraints`.

    Each constraint ``(s, t)`` asks that the s-th and t-th entries of the
    path (1-based) be adjacent in the base graph. The search is a
    depth-first walk that extends prefixes in increasing label order, so
    the first complete hit is the lexicographic minimum over all 9!
    permutations. Raises NoOrderingFound if none exists.
    """
    pairs = _normalize_constraints(constraints)
    # constraints checked as soon as their later index is placed
    due: dict[int, list[int]] = {}
    for s, t in pairs:
        due.setdefault(t, []).append(s)

    perm: list[int] = []
    used = [False] * 10

    def extend() -> bool:
        pos = len(perm) + 1
        if pos == 10:
            return True
        for v in LABELS:
            if used[v]:
                continue
            if perm and not base_adjacent(perm[-1], v):
                continue
            if any(not base_adjacent(perm[s - 1], v) for s in due.get(pos, ())):
                continue
            used[v] = True
            perm.append(v)
            if extend():
                return True
            perm.pop()
            used[v] = False
        return False

    if not extend():
        raise NoOrderingFound(f"no Hamiltonian path satisfies {sorted(pairs)}")
    return tuple(perm)


# -- explicit graphs and sufficient conditions --------------------------------


@dataclass(frozen=True)
class ExplicitGraph:
    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {(u, v)} out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def base_explicit_graph() -> ExplicitGraph:
    """K9 - C9 with label l stored at index l - 1."""
    return ExplicitGraph(9, frozenset((u - 1, v - 1) for u, v in base_edges()))


def circulant_graph(n: int, jumps: Iterable[int]) -> ExplicitGraph:
    edges = set()
    for v in range(n):
        for s in jumps:
            w = (v + s) % n
            if w != v:
                edges.add((min(v, w), max(v, w)))
    return ExplicitGraph(n, frozenset(edges))


def complete_graph(n: int) -> ExplicitGraph:
    return ExplicitGraph(n, frozenset(combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> ExplicitGraph:
    return ExplicitGraph(a + b, frozenset((u, v) for u in range(a) for v in range(a, a + b)))


def path_graph(n: int) -> ExplicitGraph:
    return ExplicitGraph(n, frozenset((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> ExplicitGraph:
    return circulant_graph(n, [1])


def star_graph(leaves: int) -> ExplicitGraph:
    return ExplicitGraph(leaves + 1, frozenset((0, v) for v in range(1, leaves + 1)))


def _require_order(g: ExplicitGraph) -> None:
    if g.vertex_count < 3:
        raise ValueError(f"condition needs at least 3 vertices, got {g.vertex_count}")


def dirac_holds(g: ExplicitGraph) -> bool:
    """Minimum degree at least half the order."""
    _require_order(g)
    return 2 * min(g.degrees()) >= g.vertex_count


def ore_holds(g: ExplicitGraph) -> bool:
    """Every non-adjacent pair has degree sum at least the order."""
    _require_order(g)
    deg = g.degrees()
    return all(
        deg[u] + deg[v] >= g.vertex_count
        for u, v in combinations(range(g.vertex_count), 2)
        if not g.has_edge(u, v)
    )


def is_balanced_complete_bipartite(g: ExplicitGraph) -> bool:
    """True iff g is exactly K_{n/2,n/2}."""
    n = g.vertex_count
    if n % 2 or n == 0 or len(g.edges) != (n // 2) ** 2:
        return False
    # 2-colour by BFS; must be connected, balanced and complete across sides
    adj = g.adjacency()
    side = [-1] * n
    side[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if side[w] == -1:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return False
    if -1 in side or side.count(0) != n // 2:
        return False
    return all(len(adj[u]) == n // 2 for u in range(n))


class BondyVerdict(enum.Enum):
    PANCYCLIC_OR_BIPARTITE_EXCEPTION = "pancyclic-or-bipartite-exception"
    NO_CONCLUSION = "no-conclusion"


class BondyResult(NamedTuple):
    verdict: BondyVerdict
    is_bipartite_exception: bool


def bondy_classification(g: ExplicitGraph, is_hamiltonian: bool) -> BondyResult:
    """Apply the edge-density criterion for Hamiltonian graphs.

    A Hamiltonian graph with at least n^2/4 edges is pancyclic unless it is
    the balanced complete bipartite graph; the flag reports that exception.
    """
    n = g.vertex_count
    applies = is_hamiltonian and 4 * len(g.edges) >= n * n
    verdict = BondyVerdict.PANCYCLIC_OR_BIPARTITE_EXCEPTION if applies else BondyVerdict.NO_CONCLUSION
    return BondyResult(verdict, is_balanced_complete_bipartite(g))
