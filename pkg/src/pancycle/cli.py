"""Command line: stats, gen, cover, verify, export-graph.

Exit codes: 0 success, 1 verification or coverage failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .certificate import SCHEMA_VERSION, DocumentError, load_document
from .chain_extension import CertificateError, certificate_for
from .product_graph import MAX_ENUMERATE_N, count_edges, enumerate_edges, graph_stats
from .verifier import CoverageReport, LengthResult, Status, VerificationError, check_one, verify_cycle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _render(v) -> str:
    return "-".join(str(x) for x in v)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("w", newline="\n") as fh:
        fh.write(text)


def cmd_stats(args) -> int:
    if args.n < 1:
        return _usage(f"--n must be >= 1, got {args.n}")
    if args.enumerate and args.n > MAX_ENUMERATE_N:
        return _usage(f"--enumerate is limited to n <= {MAX_ENUMERATE_N}")
    vertices, edges, reg = graph_stats(args.n)
    print(f"{vertices} vertices, {edges} edges, {reg}-regular")
    if args.enumerate:
        counted = count_edges(args.n)
        verdict = "MATCH" if counted == edges else "MISMATCH"
        print(f"enumerated edges: {counted} (formula {edges}) {verdict}")
        return EXIT_OK if counted == edges else EXIT_FAIL
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n < 1:
        return _usage(f"--n must be >= 1, got {args.n}")
    if not 3 <= args.length <= 9**args.n:
        return _usage(f"--length must be in 3..{9**args.n} for n={args.n}, got {args.length}")
    try:
        cert = certificate_for(args.n, args.length)
        verify_cycle(cert)
    except (CertificateError, VerificationError) as exc:
        print(f"internal verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        text = cert.dumps()
    else:
        vs = cert.vertices
        text = "".join(f"{_render(vs[t])} {_render(vs[(t + 1) % len(vs)])}\n" for t in range(len(vs)))
    _write(args.out, text)
    if args.out not in (None, "-"):
        print(f"wrote length-{cert.length} certificate to {args.out}")
    return EXIT_OK


def _certify(task: tuple[int, int]) -> tuple[int, LengthResult]:
    n, length = task
    try:
        cert = certificate_for(n, length)
    except CertificateError as exc:
        return length, LengthResult(Status.FAILED, str(exc))
    return length, check_one(cert)


def cmd_cover(args) -> int:
    if args.n < 1:
        return _usage(f"--n must be >= 1, got {args.n}")
    workers = args.parallel
    if workers is None:
        workers = int(os.environ.get("PANCYCLE_WORKERS", "1"))
    tasks = [(args.n, L) for L in range(3, 9**args.n + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_certify, tasks, chunksize=max(1, len(tasks) // (8 * workers))))
    else:
        entries = [_certify(t) for t in tasks]
    report = CoverageReport.build(args.n, entries)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"coverage_n{args.n}.json").write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    total = len(report.results)
    verified = report.summary[Status.VERIFIED.value]
    if report.pancyclic:
        print(f"PANCYCLIC, {verified}/{total}")
        return EXIT_OK
    bad = report.lengths_with(Status.FAILED) + report.lengths_with(Status.MISSING)
    first = min(bad)
    print(f"NOT PANCYCLIC, {verified}/{total}; first failing length {first}: {report.results[first].reason}")
    return EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        text = Path(args.cert).read_text()
        cert, doc = load_document(text)
    except (OSError, DocumentError) as exc:
        return _usage(f"cannot read certificate: {exc}")
    if args.strict:
        if doc.get("schema_version") != SCHEMA_VERSION:
            print(f"FAILED: schema_version {doc.get('schema_version')!r} != {SCHEMA_VERSION!r}")
            return EXIT_FAIL
    else:
        # lenient mode trusts the vertex list over the length field
        cert = type(cert)(cert.n, len(cert.vertices), cert.vertices, cert.provenance)
    try:
        verify_cycle(cert)
    except VerificationError as exc:
        print(f"FAILED: {exc.kind.value} {exc.detail}")
        return EXIT_FAIL
    print(f"Verified: cycle of length {cert.length} in (K9-C9)^{cert.n}")
    return EXIT_OK


def cmd_export_graph(args) -> int:
    if not 1 <= args.n <= MAX_ENUMERATE_N:
        return _usage(f"export-graph supports 1 <= n <= {MAX_ENUMERATE_N}, got {args.n}")
    lines = sorted(f"{_render(u)} {_render(v)}" for u, v in enumerate_edges(args.n))
    _write(args.out, "".join(line + "\n" for line in lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pancycle", description="Cycle certificates for (K9-C9)^n.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="vertex/edge counts and regularity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--enumerate", action="store_true", help="also count edges explicitly (n <= 3)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen", help="generate one verified cycle certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "edgelist-path"), default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cover", help="certify every length 3..9^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out-dir", default=None)
    p.add_argument("--parallel", type=int, default=None, help="worker processes (default $PANCYCLE_WORKERS or 1)")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="re-verify a certificate file")
    p.add_argument("cert")
    p.add_argument("--strict", action="store_true", help="also check the length field and schema version")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-graph", help="write the edge list of (K9-C9)^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_graph)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
