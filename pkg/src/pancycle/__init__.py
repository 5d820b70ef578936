"""Constructive, certificate-checked pancyclicity for (K9 - C9)^n."""

from .base_graph import base_adjacent, base_edge_stats, find_path_ordering
from .certificate import CycleCertificate
from .chain_extension import certificate_for, long_cycle, pancyclic_certificates, plan_chain, splice
from .mesh_cycles import cycle_with_ports, even_cycle, odd_cycle
from .product_graph import build_mesh_chain, embed, graph_stats, neighbors, product_adjacent
from .verifier import VerificationError, coverage_check, verify_cycle

__version__ = "0.1.0"
