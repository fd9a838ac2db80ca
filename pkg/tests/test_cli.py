import json
import subprocess
import sys
from pathlib import Path

import pytest

from repkit.cli import check_schema, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(args, capsys):
    code = main([str(a) for a in args])
    out = capsys.readouterr().out
    return code, out


def test_quiver_check(capsys):
    code, out = run(["quiver", "check", DATA / "example_quiver.json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["left_rooted"] and len(doc["v_sequence"]) == 5
    code, out = run(["quiver", "check", DATA / "all_k.json"], capsys)
    assert code == 0


def test_filtrate_then_verify_fresh_process(tmp_path, capsys):
    cert = tmp_path / "c.json"
    code, out = run(["filtrate", DATA / "all_k.json", "--class", "all", "-o", cert], capsys)
    assert code == 0 and json.loads(out)["length"] == 3
    proc = subprocess.run(
        [sys.executable, "-m", "repkit", "cert", "verify", str(cert), "--rep", str(DATA / "all_k.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["ok"]


def test_corrupted_certificate(tmp_path, capsys):
    cert = tmp_path / "c.json"
    run(["filtrate", DATA / "all_k.json", "-o", cert], capsys)
    doc = json.loads(cert.read_text())
    m = doc["steps"][2]["iso"]["5"]
    m["entries"][0] = "2" if m["entries"][0] != "2" else "3"
    cert.write_text(json.dumps(doc))
    code, out = run(["cert", "verify", cert], capsys)
    assert code == 1 and json.loads(out)["failing_step"] == 2
    # a certificate for another representation
    code, out = run(["cert", "verify", cert, "--rep", DATA / "not_in_phi.json"], capsys)
    assert code == 1


def test_negative_exit_codes(capsys):
    assert run(["phi", "classify", DATA / "not_in_phi.json"], capsys)[0] == 1
    assert run(["filtrate", DATA / "not_in_phi.json"], capsys)[0] == 1
    assert run(["gproj", "check", DATA / "a2_negative.json"], capsys)[0] == 1
    assert run(["phi", "classify", DATA / "f3_k_nilmod.json", "--class", "proj"], capsys)[0] == 1
    assert run(["phi", "classify", DATA / "f3_k_nilmod.json", "--class", "gproj"], capsys)[0] == 0


def test_input_errors(tmp_path, capsys):
    assert run(["quiver", "check", tmp_path / "missing.json"], capsys)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["rep", "validate", bad], capsys)[0] == 2
    bad.write_text(json.dumps({"quiver": {"vertices": [1]}, "inner": {"kind": "Vect"}}))
    assert run(["rep", "validate", bad], capsys)[0] == 2
    assert run(["audit", "--theorem", "Q"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_rep_validate(tmp_path, capsys):
    code, out = run(["rep", "validate", DATA / "all_k.json"], capsys)
    assert code == 0 and json.loads(out)["valid"]


def test_dual_roundtrip(tmp_path, capsys):
    d = tmp_path / "d.json"
    assert run(["dual", DATA / "all_k.json", "-o", d], capsys)[0] == 0
    dd = tmp_path / "dd.json"
    assert run(["dual", d, "-o", dd], capsys)[0] == 0
    assert json.loads(dd.read_text()) == json.loads((DATA / "all_k.json").read_text())


def test_gproj_and_flat(capsys):
    code, out = run(["gproj", "check", DATA / "f3_k_nilmod.json", "--method", "ext"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["witness"]["verdicts"]["ok"] and doc["witness"]["period"] == 1
    check_schema(doc["witness"], "complete_resolution")
    for f in sorted((DATA / "nilmod").glob("*.json")):
        code, out = run(["flat", "check", f], capsys)
        assert code == 0 and json.loads(out)["gflat"]
    code, out = run(["flat", "check", DATA / "f3_k_nilmod.json"], capsys)
    assert code == 0 and json.loads(out) == {"flat": False, "wgflat": True, "phi_flat": False, "phi_wgflat": True}


def test_audit_output(tmp_path, capsys):
    out = tmp_path / "a.jsonl"
    code, summary = run(["audit", "--theorem", "A", "--samples", "5", "--seed", "2", "-o", out], capsys)
    assert code == 0 and json.loads(summary)["passed"]
    for line in out.read_text().splitlines():
        check_schema(json.loads(line), "audit_line")


def test_suite_manifests(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"version": 1, "entries": []}))
    code, out = run(["suite", "run", empty], capsys)
    assert code == 0 and json.loads(out)["passed"]

    cert = tmp_path / "c.json"
    run(["filtrate", DATA / "all_k.json", "-o", cert], capsys)
    doc = json.loads(cert.read_text())
    doc["steps"][0]["iso_inverse"]["3"]["entries"][0] = "5"
    cert.write_text(json.dumps(doc))
    manifest = tmp_path / "m.json"
    manifest.write_text(
        json.dumps(
            {
                "version": 1,
                "entries": [
                    {"name": "quiver", "argv": ["quiver", "check", str(DATA / "example_quiver.json")]},
                    {"name": "corrupted", "argv": ["cert", "verify", "{here}/c.json"]},
                    {"name": "negative-control", "argv": ["gproj", "check", str(DATA / "a2_negative.json")], "expect": 1},
                ],
            }
        )
    )
    code, out = run(["suite", "run", manifest], capsys)
    rep = json.loads(out)
    assert code == 1 and not rep["passed"]
    assert [e["passed"] for e in rep["entries"]] == [True, False, True]


def test_shipped_inputs_match_schemas():
    check_schema(json.loads((DATA / "example_quiver.json").read_text()), "quiver_input")
    check_schema(json.loads((DATA / "suite.json").read_text()), "manifest")
    for f in DATA.glob("*.json"):
        if f.name not in ("example_quiver.json", "suite.json"):
            check_schema(json.loads(f.read_text()), "object")


@pytest.mark.parametrize("name", ["matrix", "certificate", "representation"])
def test_schema_rejects_garbage(name):
    from repkit.cli import InputError

    with pytest.raises(InputError):
        check_schema({"bogus": True}, name)
