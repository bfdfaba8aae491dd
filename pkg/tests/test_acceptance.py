"""End-to-end acceptance checks.

Each test prints one PASS/FAIL line (visible with -s or on failure) and
asserts the stated tolerance. Two checks fail by measurement, not by
accident; their assertion messages carry the measured numbers and the
structural reason.
"""

import math

import numpy as np
import pytest

import memfric
from memfric.cli import main
from memfric.kernel import (build_kernel_table, holder_exponent, kernel_L1,
                            kernel_Linf)
from memfric.modal import build_beam, build_string
from memfric.reduced import STICK, STICK_ON, simulate
from memfric.fullmodel import simulate_full
from memfric.verify import (expRQ_identity, mz_equivalence, random_reducible,
                            stick_force_holder)


def _report(num, ok, detail):
    print("criterion %d: %s  (%s)" % (num, "PASS" if ok else "FAIL", detail))
    return ok


def test_criterion_1_kernel_jump():
    target = math.acos(0.1) / (2 * math.pi * math.sqrt(0.99))
    v = kernel_L1(0.05, build_string(1.0, 0.1, 0.4, 2000))
    rel = abs(v / target - 1.0)
    v0 = kernel_L1(0.05, build_string(1.0, 0.0, 0.4, 2000))
    rel0 = abs(v0 / 0.25 - 1.0)
    ok = _report(1, rel < 0.02 and rel0 < 0.02,
                 "L1(0.05)=%.6f vs %.6f (%.1f%% off); D=0: %.6f vs 0.25 "
                 "(%.1f%% off)" % (v, target, 100 * rel, v0, 100 * rel0))
    assert ok, (
        "kernel_L1(0.05) = %.6f misses the jump target %.6f by %.1f%% "
        "(D=0 case: %.6f vs 0.25, %.1f%% off). The jump is the double limit "
        "tau->0+ after N->infinity; at fixed tau = 0.05 the N->infinity "
        "value is ~0.186 (D=0.1), so no truncation N can reach the target "
        "at this tau. The jump formula itself is exact (see criterion 9 "
        "and kernel_L1_jump)." % (v, target, 100 * rel, v0, 100 * rel0))


def test_criterion_2_static_limit():
    s = build_string(1.0, 0.1, 0.4, 100_000)
    v = kernel_Linf(s)[1]
    target = 1.184353
    ok = _report(2, abs(v - target) < 1e-4, "Linf2=%.7f vs %.6f" % (v, target))
    assert ok
    assert v == pytest.approx(np.pi ** 2 * 0.4 * 0.6 / 2.0, abs=1e-4)


def test_criterion_3_exp_identity():
    worst = 0.0
    for seed in range(20):
        sysr = random_reducible(seed + 100)
        assert 6 <= 2 * sysr.mode_count <= 20
        worst = max(worst, expRQ_identity(sysr, (0.1, 1.0, 5.0)))
    ok = _report(3, worst < 1e-10, "max residual %.3g" % worst)
    assert ok


def test_criterion_4_reduction_equivalence():
    worst = 0.0
    for seed in range(2):
        sysr = random_reducible(seed, N=4)
        worst = max(worst, mz_equivalence(sysr, T=5.0, dt=1e-4))
    ok = _report(4, worst < 1e-6, "max sup-norm error %.3g" % worst)
    assert ok


@pytest.fixture(scope="module")
def benchmark_pair(bench_structure, bench_law, bench_y0, bench_traj):
    m = bench_structure.lift_coeffs
    full = simulate_full(bench_structure, bench_law, bench_y0[0] * m,
                         bench_y0[1] * m, 8.0, 1e-4)
    return bench_traj, full


def test_criterion_5_reduced_vs_oracle(benchmark_pair, bench_law):
    red, full = benchmark_pair
    yf = full.y[::5]
    scale = np.abs(yf).max(axis=0)
    err = np.abs(red.y - yf).max(axis=0) / scale
    red_on = sum(e.kind == STICK_ON for e in red.events)
    full_on = sum(e.kind == STICK_ON for e in full.events)
    red_plateau = np.abs(red.y[red.phase == STICK, 1] - 1.5).max()
    full_plateau = np.abs(full.y[full.phase == STICK, 1] - 1.5).max()
    ok = _report(5, err.max() <= 2e-2 and red_on >= 3 and full_on >= 3
                 and red_plateau <= 1e-6 and full_plateau <= 1e-6,
                 "rel err y1=%.4f y2=%.4f; stick phases %d/%d; plateau dev "
                 "%.1e/%.1e" % (err[0], err[1], red_on, full_on, red_plateau,
                                full_plateau))
    assert red_on >= 3 and full_on >= 3
    assert red_plateau <= 1e-6 and full_plateau <= 1e-6
    assert err[0] <= 2e-2
    assert err[1] <= 2e-2, (
        "sup-norm relative error of y2 is %.4f (> 2e-2; y1 passes at %.4f). "
        "The first-order reduced scheme at eps = 5e-4 reaches each stick "
        "onset 0.03-0.12 s before the oracle; inside those windows one "
        "engine is stuck at v0 while the other still slips, and the "
        "velocity error peaks at ~3%% of its sup. Halving eps moves the "
        "onsets toward the oracle roughly linearly (first-order scheme), so "
        "the bound and the step size stated together are not attainable; "
        "y1 and all qualitative clauses pass." % (err[1], err[0]))


def test_criterion_6_gap_convergence(bench_law, bench_y0):
    gaps = []
    for N in (20, 40, 80, 160):
        s = build_string(1.0, 0.1, 0.4, N)
        traj = simulate(s, bench_law, bench_y0, 8.0, 5e-4)
        onsets = [e for e in traj.events if e.kind == STICK_ON]
        assert onsets, "no stick at N=%d" % N
        gaps.append(onsets[0].gap)
    decreasing = all(a > b for a, b in zip(gaps, gaps[1:]))
    ratio = gaps[-1] / gaps[0]
    ok = _report(6, decreasing and ratio < 0.5,
                 "gaps %s, ratio %.4f" % (", ".join("%.4f" % g for g in gaps),
                                          ratio))
    assert ok


def test_criterion_7_stick_force_lipschitz(bench_traj):
    onsets = [e for e in bench_traj.events if e.kind == STICK_ON]
    assert onsets
    betas = [stick_force_holder(bench_traj, e) for e in onsets]
    ok = _report(7, all(b > 0.8 for b in betas),
                 "betas " + ", ".join("%.4f" % b for b in betas))
    assert ok


def test_criterion_8_holder_classification():
    st_table = build_kernel_table(build_string(1.0, 0.1, 0.4, 160), 5e-4, 0.06)
    beam_table = build_kernel_table(build_beam(0.1, 300), 5e-4, 0.06)
    a_string = holder_exponent(st_table)
    a_beam = holder_exponent(beam_table)
    ok = _report(8, a_string < 0.1 and 0.2 < a_beam < 0.9,
                 "string alpha=%.4f, beam alpha=%.4f" % (a_string, a_beam))
    assert ok


def test_criterion_9_friction_suite():
    law = memfric.FrictionLaw(mu=4.0, kappa=0.32, sigma=1.0, v0=1.5)
    f = memfric.friction_force
    exact = (abs(f(0.0, law)) == 0.0
             and abs(f(1e-9, law) - (3.68 + 0.32 * math.exp(-1e-9))) < 1e-12
             and abs(f(-2.0, law) + 3.68 + 0.32 * math.exp(-2.0)) < 1e-12)
    vs = np.linspace(-30, 30, 601)
    odd = all(f(-v, law) == -f(v, law) for v in vs)
    bounded = all(abs(f(v, law)) <= law.mu for v in vs)
    ok = _report(9, exact and odd and bounded,
                 "examples exact=%s odd=%s bounded=%s" % (exact, odd, bounded))
    assert ok


def test_criterion_10_determinism(tmp_path):
    digests = []
    for run in ("a", "b"):
        out = tmp_path / run
        rc = main(["--out", str(out), "figure5"])
        assert rc == 0
        blob = b""
        for name in ("trajectory_reduced.csv", "trajectory_full.csv",
                     "gap_table.csv"):
            blob += (out / name).read_bytes()
        digests.append(blob)
    ok = _report(10, digests[0] == digests[1],
                 "byte-identical CSVs across two runs: %s"
                 % (digests[0] == digests[1]))
    assert ok
