import subprocess
import sys

import numpy as np
import pytest

from phimix.cli import CONFIG_DIR
from phimix.config import ConfigError, build_mixing, load_config, validate_config
from phimix.experiments import run_experiment
from phimix.reporting import Check, Report, format_value, write_csv


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "phimix.cli", *args],
                          capture_output=True, text=True)


def test_shipped_configs_load_and_validate():
    paths = sorted(CONFIG_DIR.glob("*.toml"))
    assert len(paths) == 11
    for path in paths:
        cfg, raw = load_config(path)
        assert cfg["kind"] in ("pgf", "lemma22", "converge-sum", "converge-max",
                               "mid-check", "subordinate", "classl", "ns-check")
        assert isinstance(cfg["seed"], int)


def test_unknown_key_rejected_with_path(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text('kind = "pgf"\n[counting]\ntheta = 1.0\nbogus = 2\n'
                    '[counting.mixing]\nkind = "exponential"\n')
    with pytest.raises(ConfigError) as err:
        load_config(path)
    assert "counting.'bogus'" in str(err.value)


def test_missing_required_key_rejected(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text('kind = "pgf"\n')
    with pytest.raises(ConfigError) as err:
        load_config(path)
    assert "counting" in str(err.value)


def test_wrong_type_rejected(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text('kind = "pgf"\nseed = "abc"\n[counting]\ntheta = 1.0\n'
                    '[counting.mixing]\nkind = "exponential"\n')
    with pytest.raises(ConfigError) as err:
        load_config(path)
    assert "seed" in str(err.value)


def test_bad_choice_rejected(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text('kind = "warp"\n')
    with pytest.raises(ConfigError):
        load_config(path)


def test_theta_sequence_must_decrease(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text(
        'kind = "lemma22"\ntheta = [0.01, 0.1]\n'
        '[counting.mixing]\nkind = "exponential"\n')
    with pytest.raises(ConfigError) as err:
        load_config(path)
    assert "decreasing" in str(err.value)


def test_build_mixing_requires_kind_parameters():
    def table(**slots):
        full = {"kind": None, "shape": None, "scale": None, "point": None}
        full.update(slots)
        return full

    assert build_mixing(table(kind="gamma", shape=2.0)).shape == 2.0
    with pytest.raises(ConfigError):
        build_mixing(table(kind="gamma"))
    with pytest.raises(ConfigError):
        build_mixing(table(kind="degenerate"))
    assert build_mixing(table(kind="exponential")).kind == "exponential"
    # constructor-level rejections surface as config errors too
    with pytest.raises(ConfigError):
        build_mixing(table(kind="gamma", shape=-1.0))


def test_format_value_forms():
    assert format_value(0.5) == "0.5"
    assert format_value("x") == "x"
    assert format_value(1.0 + 2.0j) == "1.0+2.0j"
    assert format_value(1.0 - 2.0j) == "1.0-2.0j"
    assert format_value((1.0, 2.5)) == "1.0;2.5"
    assert format_value(np.array([3.0, 4.0])) == "3.0;4.0"


def test_write_csv_layout(tmp_path):
    report = Report(kind="pgf", seed=7, samples=100, config_text='kind = "pgf"')
    report.add_rows(0.5, [0.0, 1.0], np.array([0.4, 0.6]), np.array([0.5, 0.5]), 0.1)
    report.checks.append(Check("demo", True, "fine"))
    out = tmp_path / "r.csv"
    write_csv(report, out)
    lines = out.read_text().splitlines()
    assert lines[0] == "# phimix pgf report"
    assert "# seed = 7" in lines
    assert "# samples = 100" in lines
    assert any(line.startswith("#   kind") for line in lines)
    assert "theta,grid_point,empirical,target,abs_error,sup_error" in lines
    assert lines[-1] == "# check: demo = pass (fine)"
    data = [line for line in lines if not line.startswith("#")][1:]
    assert data[0].split(",") == ["0.5", "0.0", "0.4", "0.5",
                                  format_value(abs(0.4 - 0.5)), "0.1"]


def test_cli_list_enumerates_configs():
    proc = run_cli("--list")
    assert proc.returncode == 0
    for i in range(1, 12):
        assert f"c{i:02d}" in proc.stdout


def test_cli_no_command_exits_2():
    proc = run_cli()
    assert proc.returncode == 2


def test_cli_kind_mismatch_exits_2(tmp_path):
    out = tmp_path / "r.csv"
    proc = run_cli("pgf", "--config", str(CONFIG_DIR / "c03_scaled_count_limit.toml"),
                   "--out", str(out))
    assert proc.returncode == 2
    assert "config error" in proc.stderr
    assert not out.exists()


def test_cli_malformed_config_exits_2_without_csv(tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text('kind = "pgf"\nwhat = 1\n')
    out = tmp_path / "r.csv"
    proc = run_cli("pgf", "--config", str(bad), "--out", str(out))
    assert proc.returncode == 2
    assert "config error" in proc.stderr
    assert not out.exists()


def test_cli_threshold_failure_exits_1_with_csv(tmp_path):
    # an unreachable tolerance flips the exit code but still writes the table
    cfg = tmp_path / "strict.toml"
    base = (CONFIG_DIR / "c03_scaled_count_limit.toml").read_text()
    cfg.write_text(base.replace("final = 0.01", "final = 1e-9"))
    out = tmp_path / "r.csv"
    proc = run_cli("lemma22", "--config", str(cfg), "--out", str(out))
    assert proc.returncode == 1
    assert out.exists()
    assert "FAIL" in out.read_text()


def test_cli_pass_run_writes_report(tmp_path):
    out = tmp_path / "r.csv"
    proc = run_cli("pgf", "--config", str(CONFIG_DIR / "c02_pgf_geometric.toml"),
                   "--samples", "20000", "--seed", "5", "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    text = out.read_text()
    assert "# seed = 5" in text
    assert "# samples = 20000" in text
    assert "# check: pmf_within_4_sigma" in text
    assert "report written" in proc.stdout


def test_cli_seed_override_changes_rows(tmp_path):
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    cfg = str(CONFIG_DIR / "c02_pgf_geometric.toml")
    run_cli("pgf", "--config", cfg, "--samples", "5000", "--seed", "1", "--out", str(out_a))
    run_cli("pgf", "--config", cfg, "--samples", "5000", "--seed", "2", "--out", str(out_b))
    assert out_a.read_text() != out_b.read_text()


def test_cli_classl_flag_mode(tmp_path):
    out = tmp_path / "r.csv"
    proc = run_cli("classl", "--subject", "linnik", "--alpha", "1.5", "--nu", "1.0",
                   "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    assert out.exists()


def test_run_experiment_rejects_bad_samples():
    cfg, _ = load_config(CONFIG_DIR / "c02_pgf_geometric.toml")
    with pytest.raises(ConfigError):
        run_experiment(cfg, samples=0)


def test_validate_config_requires_table():
    with pytest.raises(ConfigError):
        validate_config([1, 2])
    with pytest.raises(ConfigError):
        validate_config({"kind": "pgf", "counting": 3})
