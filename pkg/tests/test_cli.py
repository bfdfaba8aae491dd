import numpy as np
import pytest

from memfric.cli import main

FAST_CFG = """\
mode_count = 16
T = 1.5
dt = 1e-3
"""


@pytest.fixture
def fast_cfg(tmp_path):
    p = tmp_path / "fast.cfg"
    p.write_text(FAST_CFG)
    return str(p)


def read_csv(path):
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        rows = [line.strip().split(",") for line in fh if line.strip()]
    return header, rows


def test_kernel_subcommand(fast_cfg, tmp_path):
    out = tmp_path / "k"
    rc = main(["--config", fast_cfg, "--out", str(out), "kernel"])
    assert rc == 0
    header, rows = read_csv(out / "kernel.csv")
    assert header == ["tau", "L0_1", "L0_2", "L1_1", "L1_2"]
    assert len(rows) == 1501
    assert float(rows[0][0]) == 0.0
    assert float(rows[1][0]) == 1e-3
    assert all(float(r[1]) == 0.0 for r in rows[:50])
    assert float(rows[0][4]) == 0.0  # L1(0) = 0


def test_kernel_csv_roundtrips_exactly(fast_cfg, tmp_path):
    from memfric.config import load_config
    from memfric.kernel import build_kernel_table

    out = tmp_path / "k"
    main(["--config", fast_cfg, "--out", str(out), "kernel"])
    _, rows = read_csv(out / "kernel.csv")
    cfg = load_config(fast_cfg)
    table = build_kernel_table(cfg.structure(), cfg.dt, cfg.T)
    # 17 significant digits reproduce the doubles bit for bit
    for i in (1, 7, 500, 1500):
        assert float(rows[i][2]) == table.L0[i, 1]
        assert float(rows[i][4]) == table.L1[i, 1]


def test_simulate_reduced(fast_cfg, tmp_path):
    out = tmp_path / "s"
    rc = main(["--config", fast_cfg, "--out", str(out), "simulate",
               "--engine", "reduced"])
    assert rc == 0
    header, rows = read_csv(out / "trajectory.csv")
    assert header == ["t", "y1", "y2", "fc", "phase"]
    assert len(rows) == 1501
    phases = {r[4] for r in rows}
    assert phases <= {"0", "1"}
    assert "1" in phases  # the benchmark run sticks before t = 1.5


def test_simulate_both_engines(fast_cfg, tmp_path):
    out = tmp_path / "b"
    rc = main(["--config", fast_cfg, "--out", str(out), "simulate",
               "--engine", "both"])
    assert rc == 0
    assert (out / "trajectory_reduced.csv").exists()
    assert (out / "trajectory_full.csv").exists()


def test_compare_reports_errors(fast_cfg, tmp_path, capsys):
    rc = main(["--config", fast_cfg, "--out", str(tmp_path / "c"), "compare"])
    assert rc == 0
    text = capsys.readouterr().out
    assert "sup|y1_red - y1_full|" in text
    assert "events:" in text


def test_verify_expm_suite(capsys):
    rc = main(["verify", "--suite", "expm"])
    assert rc == 0
    assert "pass" in capsys.readouterr().out


def test_verify_gap_suite_fails_without_stick(tmp_path, capsys):
    p = tmp_path / "nostick.cfg"
    p.write_text("v0 = 1e6\nT = 0.05\ndt = 1e-3\ny0 = 0.01, 0.0\n")
    rc = main(["--config", str(p), "verify", "--suite", "gap"])
    assert rc == 1


def test_modes_override(fast_cfg, tmp_path):
    out = tmp_path / "m"
    rc = main(["--config", fast_cfg, "--out", str(out), "--modes", "4",
               "kernel"])
    assert rc == 0
    assert (out / "kernel.csv").exists()


def test_figure5_outputs(fast_cfg, tmp_path):
    out = tmp_path / "f"
    rc = main(["--config", fast_cfg, "--out", str(out), "figure5"])
    assert rc == 0
    for name in ("trajectory_reduced.csv", "trajectory_full.csv",
                 "gap_table.csv"):
        assert (out / name).exists()
    header, rows = read_csv(out / "gap_table.csv")
    assert header == ["N", "gap"]
    Ns = [int(r[0]) for r in rows]
    assert Ns == sorted(Ns)
    gaps = [float(r[1]) for r in rows]
    assert all(g > 0 for g in gaps)
