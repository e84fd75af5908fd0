import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from conftest import session
from trivsource import cli, verify
from trivsource.serialize import ResultCache, cache_key, matrix_from_payload
from trivsource.tsring import matrix_N, matrix_Ninv


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_species_table_c2(capsys):
    code, out, _ = run(capsys, "species-table", "--group", "cyclic 2", "-p", "2", "--no-cache", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [[e["text"] for e in row] for row in data["matrix"]] == [["2", "1"], ["0", "1"]]
    assert [[e["text"] for e in row] for row in data["inverse"]] == [["1/2", "-1/2"], ["0", "1"]]
    assert data["schema"] == "trivsource/species-table/1"


def test_idempotents_c2(capsys):
    code, out, _ = run(capsys, "idempotents", "--group", "cyclic 2", "-p", "2", "--no-cache")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith("e(")]
    assert lines == [
        "e(1, [()]) = (1/2)*N[1, phi0 (dim 1)]",
        "e(<(0 1)>, [()]) = (-1/2)*N[1, phi0 (dim 1)] + (1)*N[<(0 1)>, phi0 (dim 1)]",
    ]


def test_brauer_table_c3(capsys):
    code, out, _ = run(capsys, "brauer-table", "--group", "cyclic 3", "-p", "3", "--no-cache", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["irreducibles"]) == 1 and data["projectives"][0][0]["text"] == "3"


def test_brauer_table_s3(capsys):
    code, out, _ = run(capsys, "brauer-table", "--group", "symmetric 3", "-p", "3", "--no-cache", "--format", "json")
    data = json.loads(out)
    assert [[v["text"] for v in chi["values"]] for chi in data["irreducibles"]] == [["1", "1"], ["1", "-1"]]
    assert [[e["text"] for e in row] for row in data["projectives"]] == [["3", "3"], ["1", "-1"]]


def test_brauer_table_of_local_subquotient(capsys):
    code, out, _ = run(capsys, "brauer-table", "-g", "S4", "-p", "2", "--subgroup", "1", "--no-cache", "--format", "json")
    assert code == 0
    assert json.loads(out)["quotient_order"] == 2


def test_trivial_group_outputs(capsys):
    for cmd in ("species-table", "idempotents", "linmap", "brauer-table"):
        code, out, _ = run(capsys, cmd, "-g", "trivial", "-p", "2", "--no-cache", "--format", "json")
        assert code == 0
        data = json.loads(out)
        key = {"species-table": "matrix", "linmap": "matrix", "brauer-table": "projectives"}.get(cmd)
        if key:
            assert [[e["text"] for e in row] for row in data[key]] == [["1"]]
        else:
            assert [c["text"] for c in data["idempotents"][0]["coeffs"]] == ["1"]


@pytest.mark.parametrize("group,p", [("klein4", 2), ("dihedral 8", 2), ("symmetric 3", 3)])
def test_verify_passes(capsys, group, p):
    code, out, _ = run(capsys, "verify", "-g", group, "-p", str(p), "--no-cache")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") == len(verify.CHECKS)


def test_verify_reports_failure(capsys, monkeypatch):
    monkeypatch.setattr(verify, "CHECKS", verify.CHECKS + [lambda S: verify.PropertyResult("planted", False, "x")])
    code, out, _ = run(capsys, "verify", "-g", "C2", "-p", "2", "--no-cache")
    assert code == cli.EXIT_VERIFY
    assert "FAIL  planted  (x)" in out


@pytest.mark.parametrize("argv", [
    ["species-table", "-g", "(0 1", "-p", "2"],
    ["species-table", "-g", "(0 1)(1 x)", "-p", "2"],
    ["species-table", "-g", "frobnicate 3", "-p", "2"],
    ["species-table", "-g", "S3", "-p", "4"],
    ["brauer-table", "-g", "S3", "-p", "3", "--subgroup", "9"],
])
def test_parse_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv, "--no-cache")
    assert code == cli.EXIT_PARSE
    assert err.startswith("error:")


def test_order_cap_exit_3(capsys):
    code, _, err = run(capsys, "species-table", "-g", "symmetric 5", "-p", "2", "--max-order", "100", "--no-cache")
    assert code == cli.EXIT_CAP
    assert "cap" in err


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_deterministic_output(capsys, tmp_path, fmt):
    args = ["linmap", "-g", "S4", "-p", "3", "--format", fmt]
    _, first, _ = run(capsys, *args, "--no-cache")
    _, second, _ = run(capsys, *args, "--no-cache")
    _, cached1, _ = run(capsys, *args, "--cache-dir", str(tmp_path))
    _, cached2, _ = run(capsys, *args, "--cache-dir", str(tmp_path))
    assert first == second == cached1 == cached2


def test_csv_headers(capsys):
    _, out, _ = run(capsys, "species-table", "-g", "S3", "-p", "3", "--format", "csv", "--no-cache")
    block = out.split("\n\n")[0]
    rows = list(csv.reader(io.StringIO(block)))
    assert rows[0][0] == "" and rows[0][1] == "N[1, phi0 (dim 1)]"
    assert rows[1] == ["(1, [()])", "3", "3", "1", "1"]


def test_cache_round_trip(capsys, tmp_path):
    code, _, _ = run(capsys, "species-table", "-g", "A4", "-p", "2", "--cache-dir", str(tmp_path))
    assert code == 0
    S = session("A4", 2)
    key = cache_key(S.G, 2, 0, "species-table")
    payload = ResultCache(tmp_path).load(key)
    assert payload is not None
    assert matrix_from_payload(payload["m"], payload["matrix"]) == matrix_N(S).N
    assert matrix_from_payload(payload["m"], payload["inverse"]) == matrix_Ninv(S)
    assert not list(tmp_path.glob("*.tmp"))


def test_brauer_cache_round_trip(capsys, tmp_path):
    run(capsys, "brauer-table", "-g", "A4", "-p", "2", "--cache-dir", str(tmp_path))
    S = session("A4", 2)
    t = S.local(S.psubs[0]).table
    payload = ResultCache(tmp_path).load(cache_key(S.G, 2, 0, "brauer-table", "0"))
    assert matrix_from_payload(payload["m"], payload["projectives"]) == t.projectives
    for chi, data in zip(t.irreducibles, payload["irreducibles"]):
        assert [str(v) for v in chi.values] == [v["text"] for v in data["values"]]


def test_cache_keys_distinguish_inputs():
    S = session("S3", 3)
    keys = {cache_key(S.G, 3, 0, "species-table"), cache_key(S.G, 3, 1, "species-table"),
            cache_key(S.G, 2, 0, "species-table"), cache_key(S.G, 3, 0, "linmap")}
    assert len(keys) == 4


def test_cache_ignores_corrupt_file(tmp_path):
    c = ResultCache(tmp_path)
    c.path("k").write_text("{not json")
    assert c.load("k") is None
    c.store("k", {"a": 1})
    assert c.load("k") == {"a": 1}


def test_values_are_strings(capsys):
    _, out, _ = run(capsys, "idempotents", "-g", "A4", "-p", "2", "--format", "json", "--no-cache")
    data = json.loads(out)
    for e in data["idempotents"]:
        for c in e["coeffs"]:
            assert all(isinstance(x, str) for x in c["coords"])
            [Fraction(x) for x in c["coords"]]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trivsource.cli", "species-table", "-g", "C3", "-p", "3",
                           "--no-cache"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "species table" in proc.stdout
