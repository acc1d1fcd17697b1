import io
import json
import math

import pytest

from trimq import __version__, beta_hdi, BetaParams, run_sim1, Sim1Config
from trimq.cli import main

SAMPLE = "\n".join(["-0.565", "-0.106", "-0.095", "0.363", "0.404", "0.633",
                    "1.371", "1.512", "2.018", "100000.0"]) + "\n"


@pytest.fixture
def sample_file(tmp_path):
    path = tmp_path / "values.txt"
    path.write_text(SAMPLE)
    return str(path)


def _sim1_config_file(tmp_path, **over):
    data = {"spec": "Normal(m=0, sd=1)", "sample_size": 5,
            "replications": 60, "p_estimated": 0.5, "seed": 4}
    data.update(over)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(data))
    return str(path)


# ---------------------------------------------------------------------------
# estimate

def test_estimate_default_is_trimmed_median(sample_file, capsys):
    assert main(["estimate", sample_file]) == 0
    p, v = capsys.readouterr().out.strip().split(",")
    assert p == "0.5"
    assert abs(float(v) - 0.6268) <= 1e-3


def test_estimate_untrimmed_follows_outlier(sample_file, capsys):
    assert main(["estimate", sample_file, "--method", "hd"]) == 0
    _, v = capsys.readouterr().out.strip().split(",")
    assert abs(float(v) - 51.9169) <= 1e-3


def test_estimate_multiple_probabilities_in_order(sample_file, capsys):
    assert main(["estimate", sample_file, "--method", "hf7",
                 "--p", "0,0.5,1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [ln.split(",")[0] for ln in lines] == ["0", "0.5", "1"]
    assert float(lines[0].split(",")[1]) == -0.565
    assert float(lines[2].split(",")[1]) == 100000.0


def test_estimate_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("1 2 3\n4\n"))
    assert main(["estimate", "--method", "hf7", "--p", "0.5"]) == 0
    assert capsys.readouterr().out == "0.5,2.5\n"


def test_estimate_integers_print_bare(sample_file, capsys):
    assert main(["estimate", sample_file, "--method", "hf7", "--p", "1"]) == 0
    assert capsys.readouterr().out == "1,100000\n"


def test_estimate_explicit_width(sample_file, capsys):
    assert main(["estimate", sample_file, "--width", "1.0"]) == 0
    _, v = capsys.readouterr().out.strip().split(",")
    assert abs(float(v) - 51.9169) <= 1e-3


def test_estimate_width_requires_thd(sample_file, capsys):
    assert main(["estimate", sample_file, "--method", "hf7",
                 "--width", "0.5"]) == 2
    assert "thd" in capsys.readouterr().err


def test_estimate_rejects_bad_width(sample_file, capsys):
    assert main(["estimate", sample_file, "--width", "1.5"]) == 2
    assert main(["estimate", sample_file, "--width", "x"]) == 2


def test_estimate_rejects_bad_p(sample_file, capsys):
    assert main(["estimate", sample_file, "--p", "0.5,1.5"]) == 2
    assert main(["estimate", sample_file, "--p", "abc"]) == 2
    assert main(["estimate", sample_file, "--p", ","]) == 2


def test_estimate_names_offending_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("1.0\ntwo\n3.0\n")
    assert main(["estimate", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err and "two" in err


def test_estimate_rejects_nonfinite_input(tmp_path, capsys):
    path = tmp_path / "inf.txt"
    path.write_text("1.0\ninf\n")
    assert main(["estimate", str(path)]) == 2


def test_estimate_empty_input(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("\n\n")
    assert main(["estimate", str(path)]) == 2
    assert "empty" in capsys.readouterr().err


def test_estimate_missing_file_is_io_error(capsys):
    assert main(["estimate", "/no/such/file.txt"]) == 3


# ---------------------------------------------------------------------------
# hdi

def test_hdi_middle_output(capsys):
    assert main(["hdi", "--alpha", "5.5", "--beta", "5.5",
                 "--width", "0.3162278"]) == 0
    lo, hi, case = capsys.readouterr().out.strip().split(",")
    want = beta_hdi(BetaParams(5.5, 5.5), 0.3162278)
    assert float(lo) == want.lower and float(hi) == want.upper
    assert case == "middle"


def test_hdi_border_and_degenerate_output(capsys):
    assert main(["hdi", "--alpha", "0.55", "--beta", "10.45",
                 "--width", "0.3"]) == 0
    assert capsys.readouterr().out == "0,0.3,left_border\n"

    assert main(["hdi", "--alpha", "0.5", "--beta", "0.5",
                 "--width", "0.3"]) == 0
    assert capsys.readouterr().out == "nan,nan,degenerate\n"

    assert main(["hdi", "--alpha", "2", "--beta", "2", "--width", "1"]) == 0
    assert capsys.readouterr().out == "0,1,full_range\n"


def test_hdi_validates_inputs(capsys):
    assert main(["hdi", "--alpha", "-1", "--beta", "2", "--width", "0.5"]) == 2
    assert main(["hdi", "--alpha", "2", "--beta", "2", "--width", "0"]) == 2
    assert main(["hdi", "--alpha", "2", "--beta", "2"]) == 2  # missing flag


# ---------------------------------------------------------------------------
# simulate

def test_simulate_sim1_writes_csv_and_summary(tmp_path, capsys):
    cfg = _sim1_config_file(tmp_path)
    out = tmp_path / "out.csv"
    assert main(["simulate", "--kind", "sim1", "--config", cfg,
                 "--out", str(out)]) == 0
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "wrote 30 rows" in captured.err
    text = out.read_text()
    assert text.splitlines()[0] == "report_quantile,estimator,value"
    want = run_sim1(Sim1Config.from_dict(json.loads(open(cfg).read())))
    assert text == want.to_csv()


def test_simulate_rerun_is_byte_identical(tmp_path, capsys):
    cfg = _sim1_config_file(tmp_path)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["simulate", "--kind", "sim1", "--config", cfg,
                 "--out", str(out1)]) == 0
    assert main(["simulate", "--kind", "sim1", "--config", cfg,
                 "--out", str(out2), "--threads", "4"]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_simulate_seed_flag_overrides_config(tmp_path, capsys):
    cfg = _sim1_config_file(tmp_path)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["simulate", "--kind", "sim1", "--config", cfg,
                 "--out", str(out1), "--seed", "99"]) == 0
    assert main(["simulate", "--kind", "sim1", "--config", cfg,
                 "--out", str(out2)]) == 0
    assert out1.read_bytes() != out2.read_bytes()


def test_simulate_sim2_runs(tmp_path, capsys):
    data = {"specs": ["Exp(rate=1)"], "sample_sizes": [5], "p_grid": [0.5],
            "samples_per_batch": 10, "batches": 3}
    cfg = tmp_path / "cfg2.json"
    cfg.write_text(json.dumps(data))
    out = tmp_path / "out2.csv"
    assert main(["simulate", "--kind", "sim2", "--config", str(cfg),
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("distribution,n,p,")
    assert len(lines) == 2


def test_simulate_config_errors(tmp_path, capsys):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    out = str(tmp_path / "x.csv")
    assert main(["simulate", "--kind", "sim1", "--config", str(bad_json),
                 "--out", out]) == 2

    bad_field = _sim1_config_file(tmp_path, sample_size=0)
    assert main(["simulate", "--kind", "sim1", "--config", bad_field,
                 "--out", out]) == 2
    assert "sample_size" in capsys.readouterr().err

    assert main(["simulate", "--kind", "sim1", "--config",
                 str(tmp_path / "missing.json"), "--out", out]) == 3


def test_simulate_unwritable_output(tmp_path, capsys):
    cfg = _sim1_config_file(tmp_path)
    assert main(["simulate", "--kind", "sim1", "--config", cfg,
                 "--out", str(tmp_path / "nodir" / "x.csv")]) == 3


# ---------------------------------------------------------------------------
# top level

def test_version_flag(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_usage_errors_return_two(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["estimate", "--no-such-flag"]) == 2
