import json
import subprocess
import sys

import pytest

from pancycle.certificate import CycleCertificate, load_document
from pancycle.cli import main
from pancycle.verifier import verify_cycle


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--n", 2)
    assert code == 0 and "81 vertices, 486 edges, 12-regular" in out
    code, out, _ = run(capsys, "stats", "--n", 1, "--enumerate")
    assert code == 0 and "27 (formula 27) MATCH" in out


def test_stats_usage_errors(capsys):
    assert run(capsys, "stats", "--n", 0)[0] == 2
    code, _, err = run(capsys, "stats", "--n", 4, "--enumerate")
    assert code == 2 and "n <= 3" in err


def test_gen_and_verify(tmp_path, capsys):
    path = tmp_path / "c81.json"
    assert run(capsys, "gen", "--n", 2, "--length", 81, "--out", path)[0] == 0
    cert, doc = load_document(path.read_text())
    assert doc["schema_version"] == "1" and cert.length == 81
    verify_cycle(cert)
    code, out, _ = run(capsys, "verify", path, "--strict")
    assert code == 0 and "Verified" in out


def test_gen_82_n3(tmp_path, capsys):
    path = tmp_path / "c82.json"
    assert run(capsys, "gen", "--n", 3, "--length", 82, "--out", path)[0] == 0
    cert, _ = load_document(path.read_text())
    assert cert.length == 82
    assert len({v[2] for v in cert.vertices}) == 2  # spans two meshes


@pytest.mark.parametrize("argv", [["--n", 2, "--length", 2], ["--n", 2, "--length", 82], ["--n", 0, "--length", 3]])
def test_gen_range_errors(capsys, argv):
    assert run(capsys, "gen", *argv)[0] == 2


@pytest.mark.parametrize("n,length", [(2, 3), (2, 4), (2, 57), (2, 80), (3, 83), (3, 500), (3, 729)])
def test_gen_verify_round_trip(tmp_path, capsys, n, length):
    path = tmp_path / "c.json"
    assert run(capsys, "gen", "--n", n, "--length", length, "--out", path)[0] == 0
    assert run(capsys, "verify", path)[0] == 0
    assert run(capsys, "verify", path, "--strict")[0] == 0


def test_gen_is_byte_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "gen", "--n", 3, "--length", 401, "--out", a)
    run(capsys, "gen", "--n", 3, "--length", 401, "--out", b)
    assert a.read_bytes() == b.read_bytes()


def test_gen_edgelist_path(tmp_path, capsys):
    path = tmp_path / "c.txt"
    assert run(capsys, "gen", "--n", 2, "--length", 5, "--format", "edgelist-path", "--out", path)[0] == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 5
    assert lines[0].split()[1] == lines[1].split()[0]
    assert lines[-1].split()[1] == lines[0].split()[0]


def test_verify_injected_fault(tmp_path, capsys):
    path = tmp_path / "c.json"
    run(capsys, "gen", "--n", 2, "--length", 20, "--out", path)
    doc = json.loads(path.read_text())
    v = doc["vertices"][5]
    v[0] = next(x for x in range(1, 10) if x != v[0] and x != doc["vertices"][4][0] and x != doc["vertices"][6][0])
    v[1] = v[1] % 9 + 1
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", path)
    assert code == 1 and "NonAdjacentStep" in out


def test_verify_truncated(tmp_path, capsys):
    path = tmp_path / "c.json"
    run(capsys, "gen", "--n", 2, "--length", 20, "--out", path)
    path.write_text(path.read_text()[:40])
    assert run(capsys, "verify", path)[0] == 2
    assert run(capsys, "verify", tmp_path / "absent.json")[0] == 2


def test_verify_strict_checks_length_and_schema(tmp_path, capsys):
    path = tmp_path / "c.json"
    run(capsys, "gen", "--n", 2, "--length", 20, "--out", path)
    doc = json.loads(path.read_text())
    doc["length"] = 21
    path.write_text(json.dumps(doc))
    assert run(capsys, "verify", path)[0] == 0
    code, out, _ = run(capsys, "verify", path, "--strict")
    assert code == 1 and "LengthMismatch" in out
    doc["length"] = 20
    doc["schema_version"] = "0"
    path.write_text(json.dumps(doc))
    assert run(capsys, "verify", path)[0] == 0
    assert run(capsys, "verify", path, "--strict")[0] == 1


@pytest.mark.parametrize("n,expected", [(1, "PANCYCLIC, 7/7"), (2, "PANCYCLIC, 79/79")])
def test_cover(tmp_path, capsys, n, expected):
    code, out, _ = run(capsys, "cover", "--n", n, "--out-dir", tmp_path)
    assert code == 0 and expected in out
    report = json.loads((tmp_path / f"coverage_n{n}.json").read_text())
    assert report["verdict"] == "PANCYCLIC" and report["missing"] == []


def test_cover_parallel_n3(capsys, monkeypatch):
    monkeypatch.setenv("PANCYCLE_WORKERS", "2")
    code, out, _ = run(capsys, "cover", "--n", 3)
    assert code == 0 and "PANCYCLIC, 727/727" in out


def test_cover_failure_exit(capsys, monkeypatch):
    import pancycle.cli as cli

    real = cli.certificate_for

    def flaky(n, length):
        cert = real(n, length)
        if length == 40:
            return CycleCertificate(n, length, cert.vertices[:-1] + (cert.vertices[0],))
        return cert

    monkeypatch.setattr(cli, "certificate_for", flaky)
    code, out, _ = run(capsys, "cover", "--n", 2)
    assert code == 1 and "first failing length 40" in out


def test_export_graph(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "export-graph", "--n", 1, "--out", a)[0] == 0
    lines = a.read_text().splitlines()
    assert len(lines) == 27 and lines == sorted(lines)
    assert lines[0] == "1 3"
    run(capsys, "export-graph", "--n", 2, "--out", a)
    run(capsys, "export-graph", "--n", 2, "--out", b)
    text = a.read_bytes()
    assert text == b.read_bytes() and text.endswith(b"\n") and b"\r" not in text
    lines = text.decode().splitlines()
    assert len(lines) == 486
    for line in lines:
        u, v = line.split()
        assert u < v and u.count("-") == 1
    assert run(capsys, "export-graph", "--n", 4, "--out", a)[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "pancycle", "stats", "--n", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and "729 vertices, 6561 edges, 18-regular" in res.stdout


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
