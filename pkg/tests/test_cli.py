import json
import subprocess
import sys
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def run_bol(*args, cwd=None):
    # module mode keeps the tests independent of console-script installation
    cmd = [sys.executable, "-m", "bolalg.cli", *args]
    return subprocess.run(cmd, text=True, capture_output=True, cwd=cwd)


def no_floats(obj):
    if isinstance(obj, float):
        return False
    if isinstance(obj, dict):
        return all(no_floats(v) for v in obj.values())
    if isinstance(obj, list):
        return all(no_floats(v) for v in obj)
    return True


def test_check_catalog_file_passes(tmp_path):
    f = tmp_path / "sl2bol.json"
    assert run_bol("examples", "sl2bol", "--emit", str(f)).returncode == 0
    r = run_bol("check", str(f))
    assert r.returncode == 0, r.stderr
    assert "PASS" in r.stdout


def test_check_mutated_file_fails_with_witness(tmp_path):
    f = tmp_path / "sl2bol.json"
    run_bol("examples", "sl2bol", "--emit", str(f))
    doc = json.loads(f.read_text())
    doc["ternary"][0][-1] = "5"  # bump one coefficient
    f.write_text(json.dumps(doc))
    r = run_bol("check", str(f))
    assert r.returncode == 1
    assert "FAIL" in r.stdout and "witness" not in r.stderr


def test_check_malformed_file_exit_3():
    r = run_bol("check", str(FIXTURES / "malformed.json"))
    assert r.returncode == 3
    assert "input error" in r.stderr


def test_check_non_bol_file_exit_1():
    r = run_bol("check", str(FIXTURES / "not_a_bol_algebra.json"))
    assert r.returncode == 1
    assert "A5" in r.stdout


def test_check_json_output(tmp_path):
    f = tmp_path / "so3bol.json"
    run_bol("examples", "so3bol", "--emit", str(f))
    r = run_bol("check", str(f), "--json")
    data = json.loads(r.stdout)
    assert data["pass"] is True
    assert set(data["identities"]) == {"A1", "A2", "A3", "A4", "A5"}
    assert no_floats(data)


def test_info_solv2(tmp_path):
    f = tmp_path / "solv2.json"
    run_bol("examples", "solv2", "--emit", str(f))
    r = run_bol("info", str(f), "--json")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["solvable"] is True
    assert data["series"]["bol"]["dims"] == [2, 1, 0]
    assert data["form_ranks"] == {"trace": 0, "envelope": 0}
    assert no_floats(data)


def test_info_abelian3(tmp_path):
    f = tmp_path / "abelian3.json"
    run_bol("examples", "abelian3", "--emit", str(f))
    r = run_bol("info", str(f), "--json")
    data = json.loads(r.stdout)
    assert data["center"]["dim"] == 3
    assert all(c == "0" for row in data["form_envelope"] for c in row)


def test_info_rejects_non_bol():
    r = run_bol("info", str(FIXTURES / "not_a_bol_algebra.json"))
    assert r.returncode == 1


def test_radical_mixed(tmp_path):
    f = tmp_path / "mixed.json"
    run_bol("examples", "mixed", "--emit", str(f))
    r = run_bol("radical", str(f), "--json")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["decided"] is True
    assert data["radical"]["dim"] == 2
    assert data["strategy"] == "agreement"


def test_radical_undecided_fixture_exit_2():
    r = run_bol("radical", str(FIXTURES / "undecided_radical.json"), "--json")
    assert r.returncode == 2
    data = json.loads(r.stdout)
    assert data["decided"] is False
    assert len(data["strategies"]) == 2
    assert all(s["candidate_dim"] is not None for s in data["strategies"])


def test_envelope_solv2_emits_lie_file(tmp_path):
    f = tmp_path / "solv2.json"
    out = tmp_path / "env.json"
    run_bol("examples", "solv2", "--emit", str(f))
    r = run_bol("envelope", str(f), "--emit", str(out), "--json")
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["total_dim"] == 3 and data["lie_solvable"] is True
    emitted = json.loads(out.read_text())
    assert emitted["dim"] == 3 and emitted["b_dim"] == 2
    assert len(emitted["h_basis"]) == 1


def test_envelope_round_trip_reparses(tmp_path):
    from bolalg.fileio import parse_lie_document

    f = tmp_path / "sl2bol.json"
    out = tmp_path / "env.json"
    run_bol("examples", "sl2bol", "--emit", str(f))
    run_bol("envelope", str(f), "--emit", str(out))
    L, name, b_dim, h_basis = parse_lie_document(out.read_text())
    assert L.m == 6 and b_dim == 3 and len(h_basis) == 3


def test_decompose_two_summands(tmp_path):
    from bolalg.catalog import catalog
    from bolalg.core import direct_sum
    from bolalg.fileio import emit_bol_document

    f = tmp_path / "two.json"
    f.write_text(emit_bol_document(direct_sum(catalog("sl2bol"), catalog("so3bol")), "two"))
    r = run_bol("decompose", str(f), "--json")
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["certified"] is True
    assert sorted(c["dim"] for c in data["components"]) == [3, 3]


def test_decompose_solv2_exit_2(tmp_path):
    f = tmp_path / "solv2.json"
    run_bol("examples", "solv2", "--emit", str(f))
    r = run_bol("decompose", str(f))
    assert r.returncode == 2
    assert "preconditions" in r.stderr


def test_examples_round_trip_byte_identical(tmp_path):
    from bolalg.catalog import catalog
    from bolalg.fileio import emit_bol_document, parse_bol_document

    for name in ("sl2bol", "mixed", "lts_sl2"):
        f = tmp_path / f"{name}.json"
        r = run_bol("examples", name, "--emit", str(f))
        assert r.returncode == 0
        text = f.read_text()
        B, parsed = parse_bol_document(text)
        assert emit_bol_document(B, parsed) == text
        assert text == emit_bol_document(catalog(name), name)


def test_examples_unknown_name_exit_3():
    r = run_bol("examples", "quux")
    assert r.returncode == 3


def test_examples_stdout_without_emit():
    r = run_bol("examples", "abelian2")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["dim"] == 2


def test_radical_prop1_form_flag(tmp_path):
    f = tmp_path / "sl2bol.json"
    run_bol("examples", "sl2bol", "--emit", str(f))
    r = run_bol("radical", str(f), "--form", "prop1", "--json")
    assert r.returncode == 0
    assert json.loads(r.stdout)["radical"]["dim"] == 0


def test_seed_flag_accepted(tmp_path):
    f = tmp_path / "sl2bol.json"
    run_bol("examples", "sl2bol", "--emit", str(f))
    r = run_bol("decompose", str(f), "--seed", "99", "--json")
    assert r.returncode == 0
