"""Compare the compiled convolution kernels against the pure-python fallback.

Run:  python3 benchmarks/bench_backends.py
The fallback is selected with MEMFRIC_PURE=1 in a subprocess, so both
timings use whatever the current build provides. Outputs are hashed to show
that the two backends produce bit-identical trajectories.
"""

import hashlib
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import hashlib
import json
import sys
import time

import numpy as np

import memfric

T = float(sys.argv[1])

t0 = time.time()
s = memfric.build_string(1.0, 0.1, 0.4, 160)
table = memfric.build_kernel_table(s, 5e-4, T)
t_table = time.time() - t0

law = memfric.FrictionLaw(mu=4.0, kappa=0.32, sigma=1.0, v0=1.5)
t0 = time.time()
traj = memfric.simulate(s, law, np.array([-2.9224, -2.7668]), T, 5e-4)
t_sim = time.time() - t0

digest = hashlib.sha256(traj.y.tobytes() + traj.fc.tobytes()).hexdigest()
print(json.dumps({"compiled": memfric.HAVE_COMPILED, "table_s": t_table,
                  "sim_s": t_sim, "sha256": digest}))
"""


def run(pure, T):
    env = dict(os.environ, MEMFRIC_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, str(T)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    T = float(sys.argv[1]) if len(sys.argv) > 1 else 4.0
    print("benchmark: 160-mode string, dt = 5e-4, T = %g" % T)
    rows = []
    for pure in (False, True):
        r = run(pure, T)
        rows.append(r)
        label = "compiled" if r["compiled"] else "pure"
        print("%-8s  table %6.2fs   simulate %6.2fs" % (label, r["table_s"],
                                                        r["sim_s"]))
    if rows[0]["sha256"] == rows[1]["sha256"]:
        print("trajectories bit-identical across backends")
    else:
        print("WARNING: backend outputs differ!")
        return 1
    speedup = rows[1]["sim_s"] / rows[0]["sim_s"]
    print("simulate speedup: %.1fx" % speedup)
    return 0


if __name__ == "__main__":
    sys.exit(main())
