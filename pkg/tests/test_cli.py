import json

from qsl2.cli import main

TAFT_L5 = json.dumps({
    "parity": "odd", "ell": 5, "I_plus": [1], "I_minus": [],
    "gamma": {"kind": "catalog", "name": "G_a"}, "sigma": {"exponent": 1},
})

BAD_S0 = json.dumps({
    "parity": "even", "ell": 6, "I_plus": [1], "I_minus": [1],
    "N_generator": 2, "gamma": {"kind": "cyclic", "n": 2},
    "sigma": {"exponent": 1}, "delta_exponent": 1,
})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_construct_taft_report(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _ = run(capsys, "--format", "json", "--output", str(out_path),
                  "construct", "--datum-json", TAFT_L5)
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["schema"] == "qsl2-report/1"
    assert doc["h_dimension"] == "Finite(25)"
    assert doc["status"] == "pass"


def test_construct_inconsistent_exit_2(capsys):
    code, out = run(capsys, "--format", "json", "construct",
                    "--datum-json", BAD_S0)
    assert code == 2
    doc = json.loads(out)
    assert doc["status"] == "inconsistent-datum"
    assert "N must be trivial" in doc["detail"]


def test_construct_malformed_json_usage_error(capsys):
    code = main(["construct", "--datum-json", "{not json"])
    assert code == 64


def test_verify_axioms(capsys):
    code, out = run(capsys, "--format", "json", "verify", "axioms", "oq-sl2",
                    "--ell", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert any(r["check"] == "coassociativity" for r in doc["results"])


def test_verify_sequence(capsys):
    code, out = run(capsys, "--format", "json", "verify", "sequence", "cz2mn",
                    "--ell", "6", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    rows = {r["check"]: r for r in doc["results"]}
    assert rows["sequence-dimension"]["witness"] == "12 = 2 x 6"
    assert rows["coinvariant-product"]["witness"] == "12 = 2 x 6"


def test_catalog_list(capsys):
    code, out = run(capsys, "--format", "json", "catalog", "list")
    assert code == 0
    doc = json.loads(out)
    assert "taft" in doc["entries"]


def test_catalog_verify_entry(capsys):
    code, out = run(capsys, "--format", "json", "catalog", "verify", "cz2n",
                    "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"


def test_catalog_param_out_of_range_exit_2(capsys):
    code = main(["catalog", "verify", "taft", "--ell", "4"])
    assert code == 2


def test_dim_command(capsys):
    code, out = run(capsys, "--format", "json", "dim", "widehat", "--ell", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == "Finite(27)"
    assert doc["provisional"] is False


def test_grouplikes_command(capsys):
    code, out = run(capsys, "--format", "json", "grouplikes", "taft",
                    "--ell", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 3
    assert doc["complete"] is True


def test_equiv_command(capsys, tmp_path):
    d1 = tmp_path / "d1.json"
    d2 = tmp_path / "d2.json"
    d1.write_text(json.dumps({"parity": "even", "ell": 6,
                              "gamma": {"kind": "cyclic", "n": 5},
                              "sigma": {"exponent": 1}}))
    d2.write_text(json.dumps({"parity": "even", "ell": 6,
                              "gamma": {"kind": "cyclic", "n": 5},
                              "sigma": {"exponent": 4}}))
    code, out = run(capsys, "--format", "json", "equiv",
                    "--datum1", str(d1), "--datum2", str(d2))
    assert code == 0
    doc = json.loads(out)
    assert doc["equivalent"] is True
    assert doc["witness"] == 4


def test_catalog_grid_all_green(capsys):
    code, out = run(capsys, "--format", "json", "catalog", "verify",
                    "--grid", "default")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert all(e["status"] == "pass" for e in doc["entries"])
    assert len(doc["entries"]) >= 25


def test_reports_byte_stable(capsys):
    _, out1 = run(capsys, "--format", "json", "verify", "central", "L",
                  "--ell", "3")
    _, out2 = run(capsys, "--format", "json", "verify", "central", "L",
                  "--ell", "3")
    assert out1 == out2


def test_env_max_degree(capsys, monkeypatch):
    monkeypatch.setenv("QSL2_MAX_DEGREE", "11")
    code, out = run(capsys, "--format", "json", "catalog", "list")
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["max_degree"] == 11


def test_usage_error_exit_64():
    assert main(["frobnicate"]) == 64
    assert main([]) == 64


def test_common_flags_accepted_after_subcommand(capsys):
    # both positions work: qsl2 --format json dim ... and qsl2 dim ... --format json
    code, out1 = run(capsys, "--format", "json", "dim", "widehat", "--ell", "3")
    assert code == 0
    code, out2 = run(capsys, "dim", "widehat", "--ell", "3", "--format", "json")
    assert code == 0
    assert out1 == out2
