import json

import pytest

from narm.cli import main


@pytest.fixture()
def planted_csv(tmp_path):
    out = tmp_path / "planted.csv"
    assert main(["generate", "--attrs", "4", "--rows", "300", "--freq", "0.6", "--seed", "7", "--output", str(out)]) == 0
    return out


def mine_argv(csv, out, *extra):
    return ["mine", "--input", str(csv), "--output", str(out), "--pop", "10", "--evals", "300",
            "--mo", "pareto", *extra]


def test_generate_example(tmp_path, capsys):
    out = tmp_path / "d.csv"
    argv = ["generate", "--attrs", "4", "--rows", "500", "--freq", "0.6", "--seed", "7", "--output", str(out)]
    assert main(argv) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 501 and lines[0] == "a0,a1,a2,a3"
    sidecar = json.loads((tmp_path / "d.truth.json").read_text())
    assert len(sidecar["rules"]) == 1 and sidecar["generator"]["seed"] == 7
    first = out.read_bytes(), (tmp_path / "d.truth.json").read_bytes()
    assert main(argv) == 0
    assert (out.read_bytes(), (tmp_path / "d.truth.json").read_bytes()) == first


def test_generate_bad_freq(tmp_path, capsys):
    argv = ["generate", "--attrs", "4", "--rows", "500", "--freq", "1.5", "--seed", "7", "--output", str(tmp_path / "x.csv")]
    assert main(argv) == 1
    err = capsys.readouterr().err
    assert err.count("\n") == 1 and "usage error" in err


def test_mine_smoke(planted_csv, tmp_path, capsys):
    out = tmp_path / "rules.json"
    assert main(mine_argv(planted_csv, out, "--trace", str(tmp_path / "t.csv"))) == 0
    payload = json.loads(out.read_text())
    assert payload["rules"]
    stdout = capsys.readouterr().out
    assert stdout.startswith("rules: ") and "runtime:" in stdout and "best:" in stdout
    assert (tmp_path / "t.csv").read_text().startswith("generation,best_fitness,evaluations")


def test_mine_csv_format(planted_csv, tmp_path):
    out = tmp_path / "rules.csv"
    assert main(mine_argv(planted_csv, out, "--format", "csv")) == 0
    assert out.read_text().startswith("antecedent,consequent,support")


def test_weighted_requires_weights(planted_csv, tmp_path, capsys):
    argv = mine_argv(planted_csv, tmp_path / "o.json")
    argv[argv.index("pareto")] = "weighted"
    assert main(argv) == 1
    assert "--weights" in capsys.readouterr().err


def test_missing_input(tmp_path, capsys):
    assert main(mine_argv(tmp_path / "missing.csv", tmp_path / "o.json")) == 2
    assert capsys.readouterr().err.startswith("data error")


@pytest.mark.parametrize(
    "extra", [["--algorithm", "ga"], ["--objectives", "speed"], ["--min-supp", "2"], ["--threads", "0"]]
)
def test_mine_usage_errors(planted_csv, tmp_path, extra):
    assert main(mine_argv(planted_csv, tmp_path / "o.json", *extra)) == 1


def test_config_file_and_override(planted_csv, tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("# comment\nalgorithm = acor\nencoding=gaussian\nseed=3\n")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(mine_argv(planted_csv, a, "--config", str(conf))) == 0
    assert json.loads(a.read_text())["provenance"]["config"]["algorithm"] == "acor"
    assert main(mine_argv(planted_csv, b, "--config", str(conf), "--algorithm", "bat")) == 0
    prov = json.loads(b.read_text())["provenance"]["config"]
    assert prov["algorithm"] == "bat" and prov["encoding"] == "gaussian"


def test_evaluate_round_trip(planted_csv, tmp_path, capsys):
    out = tmp_path / "rules.json"
    assert main(mine_argv(planted_csv, out)) == 0
    capsys.readouterr()
    assert main(["evaluate", "--input", str(planted_csv), "--rules", str(out)]) == 0
    table = capsys.readouterr().out.splitlines()
    stored = json.loads(out.read_text())["rules"]
    assert len(table) == len(stored) + 1
    for row, rec in zip(table[1:], stored):
        cells = row.split("\t")
        values = [float(c) for c in cells[1:6]]
        assert values == [rec["metrics"][k] for k in
                          ("support", "confidence", "comprehensibility", "interestingness", "amplitude")]


def test_evaluate_truth_sidecar(planted_csv, capsys):
    sidecar = planted_csv.with_suffix(".truth.json")
    assert main(["evaluate", "--input", str(planted_csv), "--rules", str(sidecar)]) == 0


def test_evaluate_unknown_attribute(planted_csv, tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rules": [{
        "antecedent": [{"attribute": "nope", "type": "numeric", "lb": 0, "ub": 1}],
        "consequent": [{"attribute": "a1", "type": "numeric", "lb": 0, "ub": 1}],
    }]}))
    assert main(["evaluate", "--input", str(planted_csv), "--rules", str(bad)]) == 2
    assert "nope" in capsys.readouterr().err


def test_evaluate_empty_list(planted_csv, tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text('{"rules": []}')
    assert main(["evaluate", "--input", str(planted_csv), "--rules", str(empty)]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 1


def test_evaluate_malformed_json(planted_csv, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{\n  oops")
    assert main(["evaluate", "--input", str(planted_csv), "--rules", str(broken)]) == 2
