"""Implicit Cartesian power (K9 - C9)^n and its decomposition into 9x9 meshes.

Vertices are n-tuples of base labels. ``coords[0]`` is the mesh row
dimension, ``coords[1]`` the mesh column dimension and the remaining
coordinates select the mesh block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .base_graph import LABELS, base_adjacent, find_path_ordering, is_path_ordering

Vertex = tuple[int, ...]

# explicit enumeration above this dimension is refused
MAX_ENUMERATE_N = 3


def _check_vertex(u: Sequence[int]) -> None:
    if len(u) < 1 or any(not (isinstance(x, int) and 1 <= x <= 9) for x in u):
        raise ValueError(f"not a product vertex: {u!r}")


def product_adjacent(u: Sequence[int], v: Sequence[int]) -> bool:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    diff = -1
    for t, (a, b) in enumerate(zip(u, v)):
        if a != b:
            if diff >= 0:
                return False
            diff = t
    return diff >= 0 and base_adjacent(u[diff], v[diff])


def graph_stats(n: int) -> tuple[int, int, int]:
    """(vertex_count, edge_count, regularity) of (K9 - C9)^n from the closed form."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return 9**n, 3 * n * 9**n, 6 * n


@lru_cache(maxsize=None)
def _base_neighbors(a: int) -> tuple[int, ...]:
    return tuple(b for b in LABELS if base_adjacent(a, b))


def neighbors(u: Sequence[int]) -> list[Vertex]:
    """Neighbours of u, ordered by coordinate position and then label."""
    _check_vertex(u)
    u = tuple(u)
    out = []
    for t, a in enumerate(u):
        for b in _base_neighbors(a):
            out.append(u[:t] + (b,) + u[t + 1 :])
    return out


def vertices(n: int) -> Iterator[Vertex]:
    return product(LABELS, repeat=n)


def enumerate_edges(n: int) -> Iterator[tuple[Vertex, Vertex]]:
    """Every edge once, smaller endpoint first, in lexicographic order."""
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise ValueError(f"explicit enumeration supported for 1 <= n <= {MAX_ENUMERATE_N}, got {n}")
    for u in vertices(n):
        for v in sorted(neighbors(u)):
            if u < v:
                yield u, v


def count_edges(n: int) -> int:
    return sum(1 for _ in enumerate_edges(n))


# -- mesh decomposition -----------------------------------------------------


class MeshCoord(NamedTuple):
    i: int
    j: int
    k: int = 1


def snake_path(ordering: Sequence[int], dims: int) -> list[Vertex]:
    """Boustrophedon Hamiltonian path of (K9 - C9)^dims over a base path ordering.

    The last coordinate moves fastest and reverses direction every time
    an outer coordinate advances, so consecutive tuples differ in one
    position by consecutive entries of ``ordering``.
    """
    if dims == 0:
        return [()]
    inner = snake_path(ordering, dims - 1)
    out = []
    for idx, a in enumerate(ordering):
        block = inner if idx % 2 == 0 else inner[::-1]
        out.extend((a,) + tail for tail in block)
    return out


@dataclass(frozen=True)
class MeshChain:
    n: int
    row_order: tuple[int, ...]
    col_order: tuple[int, ...]
    chain_vertices: tuple[Vertex, ...]

    @property
    def mesh_count(self) -> int:
        return len(self.chain_vertices)


@lru_cache(maxsize=None)
def mesh_ordering() -> tuple[int, ...]:
    """Row/column ordering satisfying every chord the mesh cycles consume."""
    from .mesh_cycles import chord_constraints

    return find_path_ordering(chord_constraints())


def build_mesh_chain(n: int, row_order=None, col_order=None) -> MeshChain:
    if n < 2:
        raise ValueError(f"mesh decomposition needs n >= 2, got {n}")
    row_order = tuple(row_order) if row_order is not None else mesh_ordering()
    col_order = tuple(col_order) if col_order is not None else row_order
    for order in (row_order, col_order):
        if not is_path_ordering(order):
            raise ValueError(f"{order} is not a Hamiltonian path of the base graph")
    return MeshChain(n, row_order, col_order, tuple(snake_path(row_order, n - 2)))


@lru_cache(maxsize=16)
def default_mesh_chain(n: int) -> MeshChain:
    return build_mesh_chain(n)


def embed(c: MeshCoord, chain: MeshChain) -> Vertex:
    i, j, k = c
    if not (1 <= i <= 9 and 1 <= j <= 9):
        raise ValueError(f"mesh position out of range: {c}")
    if not 1 <= k <= chain.mesh_count:
        raise ValueError(f"mesh index {k} out of range 1..{chain.mesh_count}")
    return (chain.row_order[i - 1], chain.col_order[j - 1]) + chain.chain_vertices[k - 1]
