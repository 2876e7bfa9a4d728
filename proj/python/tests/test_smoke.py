import json
import math
import os
import subprocess

import pytest

import srgmcs


def test_worked_examples():
    assert srgmcs.mean_value("go", srgmcs.Params(100, 0.1), 10) == pytest.approx(63.21205588285577, rel=1e-12)
    assert srgmcs.mean_value(srgmcs.ModelKind.DSS, srgmcs.Params(100, 0.1), 10) == pytest.approx(26.42411176571154, rel=1e-12)
    assert srgmcs.intensity("mo", srgmcs.Params(50, 0.02), 50) == pytest.approx(0.5)


def test_domain_errors_map_to_python_exceptions():
    with pytest.raises(srgmcs.DomainError):
        srgmcs.mean_value("go", srgmcs.Params(100, 0.1), -1)
    with pytest.raises(srgmcs.Error):
        srgmcs.intensity("pow", srgmcs.Params(1, 0.5), 0)
    with pytest.raises(srgmcs.ValidationError):
        srgmcs.FailureDataset([(1, 1), (2, 0), (3, 4)])
    with pytest.raises(srgmcs.ParseError):
        srgmcs.load("1,2\n2,x\n3,4\n")
    with pytest.raises(srgmcs.ConfigError):
        srgmcs.fit("go", srgmcs.generate("go", srgmcs.Params(10, 0.1), [1, 2, 3, 4]),
                   config=srgmcs.CsConfig(n_nests=1))


def test_validate_reports_reason():
    ok, reason = srgmcs.validate(srgmcs.Params(3000, 0.5), srgmcs.default_bounds())
    assert not ok and "a" in reason


def test_text_round_trip_and_split():
    ds = srgmcs.generate("go", srgmcs.Params(500, 0.05), list(range(1, 11)), name="g")
    again = srgmcs.load(ds.to_text(), "g")
    assert again.records() == ds.records()
    train, test = srgmcs.split(ds, 0.7)
    assert len(train) == 7 and len(test) == 3
    assert train.records() + test.records() == ds.records()


def test_fit_recovers_noiseless_go():
    ds = srgmcs.generate("go", srgmcs.Params(500, 0.05), list(range(1, 51)))
    report = srgmcs.train_full("go", ds, srgmcs.CsConfig(max_generations=1000), n_seeds=10)
    assert report.test_rmse is None
    assert report.train_rmse <= 1.0
    assert report.params.a == pytest.approx(500, rel=0.05)
    assert report.params.b == pytest.approx(0.05, rel=0.05)
    assert srgmcs.parse_fit_report(report.to_json()) == report


def test_run_accepts_python_objective():
    calls = []

    def bowl(p):
        calls.append(p)
        return math.hypot(p.a - 10, 100 * (p.b - 0.3))

    cfg = srgmcs.CsConfig(max_generations=200, seed=3)
    out = srgmcs.run(bowl, cfg)
    assert out.evaluations == len(calls) == cfg.expected_evaluations()
    assert all(x >= y for x, y in zip(out.trace, out.trace[1:]))
    assert out.best.fitness == out.trace[-1]
    assert srgmcs.run(bowl, cfg).trace == out.trace


def test_split_study_and_compare():
    ds = srgmcs.generate("dss", srgmcs.Params(500, 0.05), list(range(1, 31)), noise_sd=5, seed=1)
    study = json.loads(srgmcs.split_study("dss", ds, config=srgmcs.CsConfig(max_generations=30)))
    assert [row["train_fraction"] for row in study["rows"]] == [0.9, 0.8, 0.7, 0.6, 0.5]
    cells = srgmcs.compare(["go", "mo"], [ds], srgmcs.CsConfig(max_generations=20))
    assert [c.model for c in cells] == ["go", "mo"]
    assert "model,dataset" in srgmcs.emit(cells, "csv")


@pytest.mark.skipif(not os.environ.get("SRGMCS_CLI"), reason="CLI path not provided")
def test_cli_gen_and_validate(tmp_path):
    cli = os.environ["SRGMCS_CLI"]
    data = tmp_path / "g.csv"
    subprocess.run([cli, "gen", "--model", "go", "--params", "100:0.1", "--times", "1:20",
                    "--out", str(data)], check=True)
    out = subprocess.run([cli, "validate", "--data", str(data)], check=True,
                         capture_output=True, text=True).stdout
    assert json.loads(out)["records"] == 20
    bad = subprocess.run([cli, "fit", "--model", "nope", "--data", str(data)], capture_output=True)
    assert bad.returncode == 1
