"""Cycle certificates and their JSON document form."""

from __future__ import annotations

import json
from dataclasses import dataclass

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    """A certificate document could not be parsed."""


@dataclass(frozen=True)
class CycleCertificate:
    n: int
    length: int
    vertices: tuple[tuple[int, ...], ...]
    provenance: str = ""

    @classmethod
    def from_vertices(cls, n: int, vertices, provenance: str = "") -> "CycleCertificate":
        vs = tuple(tuple(v) for v in vertices)
        return cls(n, len(vs), vs, provenance)

    def to_document(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "length": self.length,
            "vertices": [list(v) for v in self.vertices],
            "provenance": self.provenance,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=None, separators=(",", ":")) + "\n"


def load_document(text: str) -> tuple[CycleCertificate, dict]:
    """Parse a certificate document; returns the certificate and the raw dict."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    missing = {"n", "length", "vertices"} - doc.keys()
    if missing:
        raise DocumentError(f"missing fields: {sorted(missing)}")
    n, length, verts = doc["n"], doc["length"], doc["vertices"]
    if not isinstance(n, int) or not isinstance(length, int) or not isinstance(verts, list):
        raise DocumentError("fields n/length must be integers and vertices a list")
    for v in verts:
        if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
            raise DocumentError(f"vertex {v!r} is not a list of integers")
    cert = CycleCertificate(n, length, tuple(tuple(v) for v in verts), str(doc.get("provenance", "")))
    return cert, doc
