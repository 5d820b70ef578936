"""Construction-blind certificate checking, brute-force cycle search, coverage."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .base_graph import ExplicitGraph
from .certificate import CycleCertificate
from .product_graph import product_adjacent


class ErrorKind(enum.Enum):
    DUPLICATE_VERTEX = "DuplicateVertex"
    NON_ADJACENT_STEP = "NonAdjacentStep"
    LENGTH_MISMATCH = "LengthMismatch"
    BAD_WRAPAROUND = "BadWraparound"
    INVALID_VERTEX = "InvalidVertex"


class VerificationError(Exception):
    def __init__(self, kind: ErrorKind, detail: dict):
        self.kind = kind
        self.detail = detail
        super().__init__(f"{kind.value}: {detail}")


def verify_cycle(cert: CycleCertificate) -> None:
    """Raise VerificationError at the first defect; return None if `cert` is a cycle.

    Provenance is never read.
    """
    vs = cert.vertices
    for pos, v in enumerate(vs):
        if len(v) != cert.n or any(not (isinstance(x, int) and 1 <= x <= 9) for x in v):
            raise VerificationError(ErrorKind.INVALID_VERTEX, {"position": pos, "vertex": v, "n": cert.n})
    if len(vs) != cert.length or len(vs) < 3:
        raise VerificationError(ErrorKind.LENGTH_MISMATCH, {"claimed": cert.length, "actual": len(vs)})
    seen: dict[tuple, int] = {}
    for pos, v in enumerate(vs):
        if v in seen:
            raise VerificationError(ErrorKind.DUPLICATE_VERTEX, {"vertex": v, "positions": (seen[v], pos)})
        seen[v] = pos
    for pos in range(len(vs) - 1):
        if not product_adjacent(vs[pos], vs[pos + 1]):
            raise VerificationError(
                ErrorKind.NON_ADJACENT_STEP, {"position": pos, "from": vs[pos], "to": vs[pos + 1]}
            )
    if not product_adjacent(vs[-1], vs[0]):
        raise VerificationError(ErrorKind.BAD_WRAPAROUND, {"from": vs[-1], "to": vs[0]})


def is_valid_cycle(cert: CycleCertificate) -> bool:
    try:
        verify_cycle(cert)
    except VerificationError:
        return False
    return True


# -- brute force --------------------------------------------------------------


def brute_force_cycle(g: ExplicitGraph, length: int) -> Optional[list[int]]:
    """Exhaustive backtracking for a simple cycle of exactly `length` vertices.

    Each cycle is searched once: it starts at its smallest vertex s, uses
    only vertices above s, and its second vertex is smaller than its last.
    Returns None only when no such cycle exists.
    """
    n = g.vertex_count
    if not 3 <= length <= n:
        raise ValueError(f"cycle length must be in 3..{n}, got {length}")
    adj = [sorted(nb) for nb in g.adjacency()]
    on_path = [False] * n

    def extend(path: list[int], s: int) -> bool:
        u = path[-1]
        if len(path) == length:
            return s in adj[u] and path[1] < path[-1]
        for w in adj[u]:
            if w > s and not on_path[w]:
                on_path[w] = True
                path.append(w)
                if extend(path, s):
                    return True
                path.pop()
                on_path[w] = False
        return False

    for s in range(n - length + 1):
        on_path[s] = True
        path = [s]
        if extend(path, s):
            return path
        on_path[s] = False
    return None


def brute_force_pancyclic(g: ExplicitGraph) -> bool:
    return all(brute_force_cycle(g, L) is not None for L in range(3, g.vertex_count + 1))


# -- coverage -----------------------------------------------------------------


class Status(enum.Enum):
    VERIFIED = "Verified"
    FAILED = "Failed"
    MISSING = "Missing"


class LengthResult(NamedTuple):
    status: Status
    reason: str = ""


@dataclass
class CoverageReport:
    n: int
    results: dict[int, LengthResult] = field(default_factory=dict)

    @classmethod
    def build(cls, n: int, entries: Iterable[tuple[int, LengthResult]]) -> "CoverageReport":
        top = 9**n
        results: dict[int, LengthResult] = {}
        for length, res in entries:
            if not 3 <= length <= top:
                continue
            # a verified witness wins over a failed duplicate
            if length not in results or res.status is Status.VERIFIED:
                results[length] = res
        for length in range(3, top + 1):
            results.setdefault(length, LengthResult(Status.MISSING))
        return cls(n, dict(sorted(results.items())))

    @property
    def summary(self) -> dict[str, int]:
        counts = {s.value: 0 for s in Status}
        for res in self.results.values():
            counts[res.status.value] += 1
        return counts

    @property
    def pancyclic(self) -> bool:
        return all(r.status is Status.VERIFIED for r in self.results.values())

    def lengths_with(self, status: Status) -> list[int]:
        return [L for L, r in self.results.items() if r.status is status]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "verdict": "PANCYCLIC" if self.pancyclic else "NOT-PANCYCLIC",
            "summary": self.summary,
            "failed": {str(L): self.results[L].reason for L in self.lengths_with(Status.FAILED)},
            "missing": self.lengths_with(Status.MISSING),
        }


def check_one(cert: CycleCertificate) -> LengthResult:
    try:
        verify_cycle(cert)
    except VerificationError as exc:
        return LengthResult(Status.FAILED, str(exc))
    return LengthResult(Status.VERIFIED)


def coverage_check(n: int, certs: Iterable[CycleCertificate]) -> CoverageReport:
    return CoverageReport.build(n, ((c.length, check_one(c)) for c in certs))
