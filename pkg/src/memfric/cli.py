"""Command line front end.

Subcommands:
  kernel    tabulate the memory kernels and write kernel.csv
  simulate  run the reduced and/or full engine, write trajectory CSVs
  compare   run both engines and report trajectory/event differences
  verify    run one of the numerical verification suites
  figure5   reproduce the benchmark comparison run and the gap table

All CSV output keeps 17 significant digits so runs can be diffed exactly.
"""

import argparse
import os
import sys

import numpy as np

from . import verify as verify_mod
from .config import ExperimentConfig, load_config
from .fullmodel import simulate_full
from .kernel import build_kernel_table, holder_exponent
from .reduced import STICK_ON, simulate


def _fmt(x):
    return "%.17g" % x


def _write_trajectory(path, traj):
    with open(path, "w") as fh:
        fh.write("t,y1,y2,fc,phase\n")
        for q in range(len(traj.times)):
            fh.write("%s,%s,%s,%s,%d\n" % (_fmt(traj.times[q]),
                                           _fmt(traj.y[q, 0]),
                                           _fmt(traj.y[q, 1]),
                                           _fmt(traj.fc[q]),
                                           traj.phase[q]))


def _load(args):
    cfg = load_config(args.config) if args.config else ExperimentConfig()
    if args.modes is not None:
        cfg.mode_count = args.modes
    return cfg


def _outdir(args):
    out = args.out or "."
    os.makedirs(out, exist_ok=True)
    return out


def _run_full(cfg, s):
    y0 = cfg.initial_state()
    x0 = y0[0] * s.lift_coeffs
    v0 = y0[1] * s.lift_coeffs
    return simulate_full(s, cfg.law(), x0, v0, cfg.T, cfg.dt)


def cmd_kernel(args):
    cfg = _load(args)
    s = cfg.structure()
    table = build_kernel_table(s, cfg.dt, cfg.T)
    out = _outdir(args)
    path = os.path.join(out, "kernel.csv")
    tau = np.arange(table.L0.shape[0]) * table.dt
    with open(path, "w") as fh:
        fh.write("tau,L0_1,L0_2,L1_1,L1_2\n")
        for i in range(len(tau)):
            fh.write(",".join(_fmt(v) for v in (tau[i], table.L0[i, 0],
                                                table.L0[i, 1], table.L1[i, 0],
                                                table.L1[i, 1])) + "\n")
    print("wrote %s (%d rows, dt=%g)" % (path, len(tau), table.dt))
    if table.L1_jump is not None:
        print("L1 jump at 0+: %s" % _fmt(table.L1_jump))
    return 0


def cmd_simulate(args):
    cfg = _load(args)
    s = cfg.structure()
    out = _outdir(args)
    wrote = []
    if args.engine in ("reduced", "both"):
        traj = simulate(s, cfg.law(), cfg.initial_state(), cfg.T, cfg.dt)
        name = "trajectory_reduced.csv" if args.engine == "both" else "trajectory.csv"
        path = os.path.join(out, name)
        _write_trajectory(path, traj)
        wrote.append(path)
        for e in traj.events:
            print("reduced %s t=%.4f gap=%.6g"
                  % ("stick_on " if e.kind == STICK_ON else "stick_off",
                     e.step * cfg.dt, e.gap))
    if args.engine in ("full", "both"):
        traj = _run_full(cfg, s)
        name = "trajectory_full.csv" if args.engine == "both" else "trajectory.csv"
        path = os.path.join(out, name)
        _write_trajectory(path, traj)
        wrote.append(path)
        for e in traj.events:
            print("full    %s t=%.4f gap=%.6g"
                  % ("stick_on " if e.kind == STICK_ON else "stick_off",
                     e.step * cfg.dt, e.gap))
    for path in wrote:
        print("wrote %s" % path)
    return 0


def cmd_compare(args):
    cfg = _load(args)
    s = cfg.structure()
    out = _outdir(args)
    red = simulate(s, cfg.law(), cfg.initial_state(), cfg.T, cfg.dt)
    red_path = os.path.join(out, "trajectory_reduced.csv")
    _write_trajectory(red_path, red)
    full = _run_full(cfg, s)
    full_path = os.path.join(out, "trajectory_full.csv")
    _write_trajectory(full_path, full)
    scale = np.abs(full.y).max(axis=0)
    err = np.abs(red.y - full.y).max(axis=0)
    print("sup|y1_red - y1_full| = %.6g  (%.3g relative)" % (err[0], err[0] / scale[0]))
    print("sup|y2_red - y2_full| = %.6g  (%.3g relative)" % (err[1], err[1] / scale[1]))
    for label, traj in (("reduced", red), ("full", full)):
        marks = ["%s@%.4f" % ("on" if e.kind == STICK_ON else "off",
                              e.step * cfg.dt) for e in traj.events]
        print("%s events: %s" % (label, "  ".join(marks) if marks else "(none)"))
    print("wrote %s" % red_path)
    print("wrote %s" % full_path)
    return 0


def _suite_mz():
    worst = 0.0
    for seed in range(3):
        sysr = verify_mod.random_reducible(seed, N=4)
        worst = max(worst, verify_mod.mz_equivalence(sysr, T=5.0, dt=1e-4))
    print("mz: max sup-norm reduction error over 3 random 8-dim systems = %.3g"
          % worst)
    return worst < 1e-6


def _suite_expm():
    worst = 0.0
    for seed in range(20):
        sysr = verify_mod.random_reducible(seed + 100)
        worst = max(worst, verify_mod.expRQ_identity(sysr, (0.1, 1.0, 5.0)))
    print("expm: max identity residual over 20 random systems = %.3g" % worst)
    return worst < 1e-10


def _suite_holder(cfg):
    s = cfg.structure()
    traj = simulate(s, cfg.law(), cfg.initial_state(), cfg.T, cfg.dt)
    onsets = [e for e in traj.events if e.kind == STICK_ON]
    betas = []
    for e in onsets:
        try:
            betas.append(verify_mod.stick_force_holder(traj, e))
        except ValueError:
            continue
    if not betas:
        print("holder: no stick phase long enough to fit")
        return False
    table = build_kernel_table(s, cfg.dt, cfg.T)
    alpha = holder_exponent(table)
    print("holder: stick-force exponents %s (kernel alpha = %.4f)"
          % (", ".join("%.4f" % b for b in betas), alpha))
    return all(b > 0.8 for b in betas)


def _suite_gap(cfg):
    pairs = verify_mod.gap_convergence(lambda N: cfg.structure(mode_count=N),
                                       cfg.law(), cfg.initial_state(),
                                       (20, 40, 80, 160), T=cfg.T, dt=cfg.dt)
    for N, gap in pairs:
        print("gap: N=%-4d first-onset gap = %.6f" % (N, gap))
    if len(pairs) < 2:
        print("gap: not enough stick runs to compare")
        return False
    ratio = pairs[-1][1] / pairs[0][1]
    print("gap: ratio gap(N=%d)/gap(N=%d) = %.4f" % (pairs[-1][0], pairs[0][0], ratio))
    return ratio < 0.5


def cmd_verify(args):
    cfg = _load(args)
    if args.suite == "mz":
        ok = _suite_mz()
    elif args.suite == "expm":
        ok = _suite_expm()
    elif args.suite == "holder":
        ok = _suite_holder(cfg)
    else:
        ok = _suite_gap(cfg)
    print("suite %s: %s" % (args.suite, "pass" if ok else "FAIL"))
    return 0 if ok else 1


def cmd_figure5(args):
    cfg = _load(args)
    s = cfg.structure()
    out = _outdir(args)
    red = simulate(s, cfg.law(), cfg.initial_state(), cfg.T, cfg.dt)
    _write_trajectory(os.path.join(out, "trajectory_reduced.csv"), red)
    full = _run_full(cfg, s)
    _write_trajectory(os.path.join(out, "trajectory_full.csv"), full)
    pairs = verify_mod.gap_convergence(lambda N: cfg.structure(mode_count=N),
                                       cfg.law(), cfg.initial_state(),
                                       (20, 40, 80, 160), T=cfg.T, dt=cfg.dt)
    gap_path = os.path.join(out, "gap_table.csv")
    with open(gap_path, "w") as fh:
        fh.write("N,gap\n")
        for N, gap in pairs:
            fh.write("%d,%s\n" % (N, _fmt(gap)))
    print("wrote %s" % os.path.join(out, "trajectory_reduced.csv"))
    print("wrote %s" % os.path.join(out, "trajectory_full.csv"))
    print("wrote %s" % gap_path)
    return 0


def main(argv=None):
    p = argparse.ArgumentParser(prog="memfric",
                                description="memory-kernel reduction of "
                                            "modal structures with friction")
    p.add_argument("--config", metavar="PATH", help="key=value config file")
    p.add_argument("--out", metavar="DIR", help="output directory (default .)")
    p.add_argument("--modes", type=int, metavar="N",
                   help="override mode count from config")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("kernel", help="tabulate memory kernels")
    ps = sub.add_parser("simulate", help="run a friction simulation")
    ps.add_argument("--engine", choices=("reduced", "full", "both"),
                    default="reduced")
    sub.add_parser("compare", help="reduced vs full trajectory comparison")
    pv = sub.add_parser("verify", help="numerical verification suites")
    pv.add_argument("--suite", choices=("mz", "expm", "holder", "gap"),
                    required=True)
    sub.add_parser("figure5", help="benchmark run: both engines + gap table")

    args = p.parse_args(argv)
    handlers = {"kernel": cmd_kernel, "simulate": cmd_simulate,
                "compare": cmd_compare, "verify": cmd_verify,
                "figure5": cmd_figure5}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
