"""Cycles of every length 3..81 inside one 9x9 mesh block.

Even lengths use grid edges only: a comb made of a two-column spine
(columns 1-2) with two-row teeth growing to the right, plus bumps into
row 9. Odd lengths close a snake through the rows with one chord along
column 1, so they depend on the row ordering making those chords real
base-graph edges; `chord_constraints` lists every such requirement.

Cells are (row, column) pairs with 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .product_graph import MeshCoord

Cell = tuple[int, int]
Edge = tuple[Cell, Cell]

LEFT_PORT: Edge = ((1, 1), (1, 2))
RIGHT_PORT: Edge = ((1, 3), (1, 4))

EVEN_LENGTHS = frozenset(range(4, 81, 2))
ODD_LENGTHS = frozenset(range(3, 82, 2))


class InfeasiblePorts(ValueError):
    """No construction of the requested length contains the requested port edges."""


@dataclass(frozen=True)
class MeshCycle:
    cells: tuple[Cell, ...]
    k: int = 1
    step: str = ""

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def coords(self) -> tuple[MeshCoord, ...]:
        return tuple(MeshCoord(i, j, self.k) for i, j in self.cells)

    def edges(self) -> list[Edge]:
        c = self.cells
        return [(c[t], c[(t + 1) % len(c)]) for t in range(len(c))]

    def contains_edge(self, edge: Edge) -> bool:
        a, b = edge
        return any({x, y} == {a, b} for x, y in self.edges())


@dataclass(frozen=True)
class PortSpec:
    left_edge: Optional[Edge] = LEFT_PORT
    right_edge: Optional[Edge] = RIGHT_PORT

    def required(self) -> list[Edge]:
        return [e for e in (self.left_edge, self.right_edge) if e is not None]


# -- length schedules ---------------------------------------------------------


def even_schedule() -> dict[tuple, int]:
    """Map (step, i, j) -> cycle length for the even construction."""
    sched: dict[tuple, int] = {("seed", None, None): 4}
    for i in range(2, 9):
        sched[("1", i, None)] = 2 * (i + 1)
    for i in range(1, 5):
        for j in range(1, 8):
            sched[("2", i, j)] = 14 * i + 2 * j + 4
    for i in range(1, 4):
        sched[("3", i, None)] = 74 + 2 * i
    _check_schedule(sched, EVEN_LENGTHS)
    return sched


def odd_schedule() -> dict[tuple, int]:
    """Map (step, i, j) -> cycle length for the odd construction."""
    sched: dict[tuple, int] = {}
    for j in range(1, 4):
        sched[("1", None, j)] = 2 * j + 1
    for i in range(1, 4):
        for j in range(1, 9):
            sched[("2a", i, j)] = 16 * i + 2 * j - 9
    sched[("2b", None, None)] = 57
    for i in range(2, 9):
        sched[("2c", i, None)] = 55 + 2 * i
    for i in range(1, 5):
        sched[("2d", i, None)] = 71 + 2 * i
    sched[("2e", None, None)] = 81
    _check_schedule(sched, ODD_LENGTHS)
    return sched


def _check_schedule(sched: dict, expected: frozenset) -> None:
    lengths = list(sched.values())
    if len(set(lengths)) != len(lengths) or set(lengths) != expected:
        raise AssertionError(f"schedule does not tile {min(expected)}..{max(expected)}")


def _lookup(sched: dict[tuple, int], length: int) -> tuple:
    for key, value in sched.items():
        if value == length:
            return key
    raise KeyError(length)


def _step_label(kind: str, key: tuple) -> str:
    step, i, j = key
    parts = [f"{kind}/step{step}"]
    if i is not None:
        parts.append(f"i={i}")
    if j is not None:
        parts.append(f"j={j}")
    return ",".join(parts)


# -- even construction --------------------------------------------------------


def _comb(rows: int, reach: tuple[int, int, int, int], bumps: int) -> list[Cell]:
    """Spine down column 2 with teeth, back up column 1.

    reach[t] is the last column of the tooth on rows 2t+1, 2t+2 (2 means
    no tooth). `bumps` pulls pairs (9,3)(9,4), (9,5)(9,6), (9,7)(9,8) into
    the row-8 return leg.
    """
    seq: list[Cell] = [(1, 1)]
    r = 1
    while r <= rows:
        t = (r - 1) // 2
        if r % 2 == 1 and r + 1 <= rows and t < 4 and reach[t] > 2:
            c = reach[t]
            seq.extend((r, col) for col in range(2, c + 1))
            for col in range(c, 1, -1):
                seq.append((r + 1, col))
                if r + 1 == 8 and col % 2 == 0 and 4 <= col <= 2 * bumps + 2:
                    seq.extend([(9, col), (9, col - 1)])
            r += 2
        else:
            seq.append((r, 2))
            r += 1
    seq.extend((r, 1) for r in range(rows, 1, -1))
    return seq


def _even_cells(key: tuple) -> list[Cell]:
    step, i, j = key
    if step == "seed":
        return _comb(2, (2, 2, 2, 2), 0)
    if step == "1":
        return _comb(i + 1, (2, 2, 2, 2), 0)
    if step == "2":
        reach = tuple(9 if t < i - 1 else (j + 2 if t == i - 1 else 2) for t in range(4))
        return _comb(9, reach, 0)
    return _comb(9, (9, 9, 9, 9), i)


def even_cycle(length: int, k: int = 1) -> MeshCycle:
    if length not in EVEN_LENGTHS:
        raise ValueError(f"even cycle length must be even in 4..80, got {length}")
    key = _lookup(even_schedule(), length)
    return MeshCycle(tuple(_even_cells(key)), k, _step_label("even", key))


# -- odd construction ---------------------------------------------------------


def _odd_cells(key: tuple) -> list[Cell]:
    step, i, j = key
    if step == "1":
        return [(r, 1) for r in range(1, 2 * j + 2)]  # closed by chord (1,1)-(2j+1,1)

    seq: list[Cell] = []
    if step == "2a":
        for t in range(3):
            c = 9 if t < i - 1 else (j + 1 if t == i - 1 else 1)
            seq.extend((2 * t + 1, col) for col in range(1, c + 1))
            seq.extend((2 * t + 2, col) for col in range(c, 0, -1))
        seq.append((7, 1))  # chord (7,1)-(1,1) closes
        return seq

    # 2b..2e: rows 1-6 full except (6,1); tooth on rows 7-8; bumps into row 9
    c = {"2b": 2, "2c": (i or 0) + 1}.get(step, 9)
    bumps = {"2d": i, "2e": 4}.get(step, 0)
    for t in range(2):
        seq.extend((2 * t + 1, col) for col in range(1, 10))
        seq.extend((2 * t + 2, col) for col in range(9, 0, -1))
    seq.extend((5, col) for col in range(1, 10))
    seq.extend((6, col) for col in range(9, 1, -1))
    seq.extend((7, col) for col in range(2, c + 1))
    for col in range(c, 0, -1):
        seq.append((8, col))
        if col % 2 == 0 and col <= 2 * bumps:
            seq.extend([(9, col), (9, col - 1)])
    seq.append((7, 1))
    if step == "2e":
        # (6,1) via chord (4,1)-(6,1); (9,9) via chords (9,3)-(9,9), (9,4)-(9,9)
        seq.insert(seq.index((5, 1)), (6, 1))
        seq.insert(seq.index((9, 3)), (9, 9))
    return seq


def odd_cycle(length: int, k: int = 1) -> MeshCycle:
    if length not in ODD_LENGTHS:
        raise ValueError(f"odd cycle length must be odd in 3..81, got {length}")
    key = _lookup(odd_schedule(), length)
    return MeshCycle(tuple(_odd_cells(key)), k, _step_label("odd", key))


def mesh_cycle(length: int, k: int = 1) -> MeshCycle:
    return even_cycle(length, k) if length % 2 == 0 else odd_cycle(length, k)


# -- chords and ports ---------------------------------------------------------


def chord_constraints() -> frozenset[tuple[int, int]]:
    """Ordering-index pairs that must be base-adjacent for the odd and port cycles.

    Row and column share one ordering, so a chord along a column (rows s, t)
    and a chord along a row (columns s, t) both demand pair (s, t).
    """
    return frozenset({
        (1, 3), (1, 5), (1, 7),  # odd step 1; (1, 7) also closes steps 2a-2e
        (4, 6),                  # odd step 2e, re-inserting (6,1)
        (3, 9), (4, 9),          # odd step 2e, inserting (9,9)
        (1, 4),                  # row-1 port gadgets of length 4 and 6
    })


def chord_pairs(cycle: MeshCycle) -> set[tuple[int, int]]:
    """Ordering-index pairs of every non-grid edge in `cycle`."""
    pairs = set()
    for (a, b), (c, d) in cycle.edges():
        if abs(a - c) + abs(b - d) == 1:
            continue
        if b == d:
            pairs.add((min(a, c), max(a, c)))
        elif a == c:
            pairs.add((min(b, d), max(b, d)))
        else:
            raise ValueError(f"edge {(a, b)}-{(c, d)} changes both row and column")
    return pairs


def transpose(cycle: MeshCycle) -> MeshCycle:
    return MeshCycle(tuple((j, i) for i, j in cycle.cells), cycle.k, cycle.step + "+transpose")


def _port_gadgets(length: int, k: int) -> list[MeshCycle]:
    out = []
    if length == 4:
        out.append(MeshCycle(((1, 1), (1, 2), (1, 3), (1, 4)), k, "port/row-chord"))
    elif length == 6:
        cells = ((1, 1), (1, 2), (2, 2), (2, 3), (1, 3), (1, 4))
        out.append(MeshCycle(cells, k, "port/row-chord"))
    elif length % 2 == 1 and 5 <= length <= 19:
        c = (length - 1) // 2
        cells = [(1, col) for col in range(1, c + 1)] + [(2, col) for col in range(c, 0, -1)] + [(3, 1)]
        out.append(MeshCycle(tuple(cells), k, f"port/double-row,c={c}"))
    return out


def cycle_with_ports(length: int, k: int = 1, ports: Optional[PortSpec | Iterable[Edge]] = None) -> MeshCycle:
    """A cycle of `length` in mesh k containing every requested port edge.

    Tries the scheduled cycle, its transpose, then small chord gadgets, and
    returns the first that carries all ports.
    """
    if ports is None:
        ports = PortSpec()
    required = ports.required() if isinstance(ports, PortSpec) else list(ports)
    base = mesh_cycle(length, k)
    candidates = [base, transpose(base)] + _port_gadgets(length, k)
    for cand in candidates:
        if all(cand.contains_edge(e) for e in required):
            return cand
    raise InfeasiblePorts(f"no length-{length} cycle contains ports {required}")
