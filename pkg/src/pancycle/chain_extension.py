"""Cycles longer than one mesh, built by splicing mesh cycles along the mesh chain.

Consecutive meshes M_{k-1}, M_k are joined by the perfect matching
(i,j)_{k-1} -- (i,j)_k. Splicing removes the same row-1 port edge from
both cycles and adds the two matching edges between its endpoints.
Joints alternate between two port edges so a middle mesh never has to
give up the same edge twice; the last joint always uses LEFT_PORT.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from .base_graph import base_explicit_graph
from .certificate import CycleCertificate
from .mesh_cycles import LEFT_PORT, RIGHT_PORT, MeshCycle, PortSpec, cycle_with_ports, mesh_cycle
from .product_graph import MeshChain, MeshCoord, Vertex, default_mesh_chain, embed, product_adjacent
from .verifier import VerificationError, brute_force_cycle, verify_cycle

log = logging.getLogger(__name__)

MESH_SIZE = 81
MIN_PART = 4


class SpliceError(ValueError):
    pass


class CertificateError(RuntimeError):
    def __init__(self, length: int, cause: Exception):
        self.length = length
        self.cause = cause
        super().__init__(f"length {length}: {cause}")


@dataclass(frozen=True)
class ChainPlan:
    target_length: int
    per_mesh: tuple[tuple[int, int], ...]  # (mesh index k, cycle length in that mesh)

    @property
    def parts(self) -> list[int]:
        return [L for _, L in self.per_mesh]


def plan_chain(n: int, length: int) -> ChainPlan:
    """Split `length` into per-mesh cycle lengths, each in 4..81.

    All meshes but the last carry 81; a remainder below 4 is topped up
    from the second-to-last mesh.
    """
    if n < 3:
        raise ValueError(f"chained cycles need n >= 3, got {n}")
    if not MESH_SIZE < length <= 9**n:
        raise ValueError(f"chained length must be in {MESH_SIZE + 1}..{9**n}, got {length}")
    m = -(-length // MESH_SIZE)
    parts = [MESH_SIZE] * (m - 1) + [length - MESH_SIZE * (m - 1)]
    if parts[-1] < MIN_PART:
        short = MIN_PART - parts[-1]
        parts[-2] -= short
        parts[-1] = MIN_PART
    return ChainPlan(length, tuple((k, L) for k, L in enumerate(parts, start=1)))


def joint_port(joint: int, mesh_count: int):
    """Port edge used between mesh `joint` and mesh `joint + 1`."""
    return LEFT_PORT if (mesh_count - 1 - joint) % 2 == 0 else RIGHT_PORT


def _edge_position(vs: list, a, b) -> tuple[int, bool]:
    """Index t with {vs[t], vs[t+1]} == {a, b}; flag True when vs[t] == a."""
    size = len(vs)
    try:
        t = vs.index(a)
    except ValueError:
        raise SpliceError(f"port endpoint {a} not on cycle") from None
    if vs[(t + 1) % size] == b:
        return t, True
    if vs[(t - 1) % size] == b:
        return (t - 1) % size, False
    raise SpliceError(f"port edge {a}-{b} not on cycle")


def _open_at(vs: list, a, b) -> list:
    """Rotate/reverse the cycle into a path that starts at a and ends at b, dropping edge a-b."""
    t, forward = _edge_position(vs, a, b)
    if forward:
        # ... a=vs[t], b=vs[t+1] ...: walk backwards from a
        rot = vs[t + 1 :] + vs[: t + 1]  # starts at b, ends at a
        return rot[::-1]
    rot = vs[t + 1 :] + vs[: t + 1]  # starts at a (=vs[t+1]), ends at b (=vs[t])
    return rot


def splice(left: CycleCertificate, right: CycleCertificate, left_port, right_port) -> CycleCertificate:
    """Merge two vertex-disjoint cycles across matched port edges.

    left_port (a, b) must lie on `left`, right_port (a2, b2) on `right`,
    with a~a2 and b~b2. The result drops both ports and adds a-a2, b-b2.
    """
    a, b = left_port
    a2, b2 = right_port
    if left.n != right.n:
        raise SpliceError("cycles live in different dimensions")
    if not (product_adjacent(a, a2) and product_adjacent(b, b2)):
        raise SpliceError(f"ports {left_port} and {right_port} are not joined by matching edges")
    if set(left.vertices) & set(right.vertices):
        raise SpliceError("cycles share vertices")
    lpath = _open_at(list(left.vertices), b, a)  # b ... a
    rpath = _open_at(list(right.vertices), a2, b2)  # a2 ... b2
    vs = lpath + rpath
    prov = f"{left.provenance} + {right.provenance}"
    return CycleCertificate(left.n, len(vs), tuple(vs), prov)


def embed_cycle(cycle: MeshCycle, chain: MeshChain, provenance: str = "") -> CycleCertificate:
    vs = [embed(c, chain) for c in cycle.coords]
    return CycleCertificate.from_vertices(chain.n, vs, provenance or f"M{cycle.k}:{cycle.step}")


def _port_vertices(edge, k: int, chain: MeshChain) -> tuple[Vertex, Vertex]:
    (i1, j1), (i2, j2) = edge
    return embed(MeshCoord(i1, j1, k), chain), embed(MeshCoord(i2, j2, k), chain)


def long_cycle(n: int, length: int) -> CycleCertificate:
    plan = plan_chain(n, length)
    chain = default_mesh_chain(n)
    m = len(plan.per_mesh)
    acc = None
    steps = []
    for k, part in plan.per_mesh:
        left = joint_port(k - 1, m) if k > 1 else None
        right = joint_port(k, m) if k < m else None
        cyc = cycle_with_ports(part, k, PortSpec(left, right))
        steps.append(f"M{k}:{part}:{cyc.step}")
        cert = embed_cycle(cyc, chain)
        if acc is None:
            acc = cert
        else:
            acc = splice(acc, cert, _port_vertices(left, k - 1, chain), _port_vertices(left, k, chain))
    prov = f"chain/n={n},L={length}[" + "; ".join(steps) + "]"
    result = CycleCertificate(n, acc.length, acc.vertices, prov)
    verify_cycle(result)
    return result


def base_certificate(length: int) -> CycleCertificate:
    found = brute_force_cycle(base_explicit_graph(), length)
    if found is None:
        raise CertificateError(length, LookupError("brute-force search found no cycle"))
    return CycleCertificate.from_vertices(1, [(v + 1,) for v in found], f"base/brute-force,L={length}")


def certificate_for(n: int, length: int) -> CycleCertificate:
    """One verified certificate of a cycle of `length` in (K9 - C9)^n."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if not 3 <= length <= 9**n:
        raise ValueError(f"length must be in 3..{9**n}, got {length}")
    try:
        if n == 1:
            cert = base_certificate(length)
        elif length <= MESH_SIZE:
            cert = embed_cycle(mesh_cycle(length, 1), default_mesh_chain(n))
        else:
            cert = long_cycle(n, length)
        verify_cycle(cert)
    except (VerificationError, SpliceError, ValueError) as exc:
        raise CertificateError(length, exc) from exc
    return cert


def pancyclic_certificates(n: int) -> Iterator[CycleCertificate]:
    """Verified certificates for lengths 3..9^n in ascending order."""
    for length in range(3, 9**n + 1):
        cert = certificate_for(n, length)
        log.debug("length %d: %s", length, cert.provenance[:80])
        yield cert
