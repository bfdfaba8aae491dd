"""Numerical verification of the structural identities behind the reduction.

Small random systems are generated in modal block form with a single-window
lift vector, so the range condition RW = WA holds exactly by construction
(it is a constraint, not a generic property of random matrices).

mz_equivalence integrates the reduced equation in an exactly equivalent
augmented form: with S = WV, Q = I - S and the memory state
w(t) = e^{Qt R...} the convolution and noise terms of the reduced equation
satisfy

    y' = A y + Vv f(t) + VRQ w,      y(0) = V z(0)
    w' = RQ w + RW y + v f(t),       w(0) = Q z(0)

which is the variation-of-parameters identity the reduction rests on,
evaluated without quadrature error; the state-coupling kernel contributes
nothing because RW = WA makes it constant. The dense-exponential kernel
expressions themselves (K(t) = V e^{RQt} R W, L(t) = V e^{RQt} v,
H(t) = V R Q e^{RQt}) are exposed by mz_kernels for direct identity checks.
"""

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .friction import FrictionLaw  # noqa: F401  (re-export convenience)
from .reduced import STICK, STICK_ON, simulate


@dataclass
class RandomReducibleSystem:
    R: np.ndarray
    V: np.ndarray
    W: np.ndarray
    A: np.ndarray
    v: np.ndarray
    z0: np.ndarray
    forcing: object
    seed: int
    mode_count: int


def random_reducible(seed, N=None):
    """Random stable modal-block system with VW = I and RW = WA exact."""
    rng = np.random.default_rng(seed)
    if N is None:
        N = int(rng.integers(3, 11))
    omega = np.sort(rng.uniform(0.5, 5.0, N))
    omega += 0.05 * np.arange(N)  # enforce strict separation
    damping = rng.uniform(0.0, 0.9, N)
    n = rng.uniform(-2.0, 2.0, N)
    lead = int(rng.integers(0, N))
    while abs(n[lead]) < 0.2:
        n[lead] = rng.uniform(-2.0, 2.0)
    m = np.zeros(N)
    m[lead] = 1.0 / n[lead]

    R = np.zeros((2 * N, 2 * N))
    R[:N, N:] = np.eye(N)
    R[N:, :N] = -np.diag(omega ** 2)
    R[N:, N:] = -np.diag(2.0 * damping * omega)
    V = np.zeros((2, 2 * N))
    V[0, :N] = n
    V[1, N:] = n
    W = np.zeros((2 * N, 2))
    W[:N, 0] = m
    W[N:, 1] = m
    w1, d1 = omega[lead], damping[lead]
    A = np.array([[0.0, 1.0], [-w1 * w1, -2.0 * d1 * w1]])

    ev = np.linalg.eigvals(R)
    if ev.real.max() > 1e-12:
        raise AssertionError("generated spectrum not in the left half plane")

    v = np.zeros(2 * N)
    v[N:] = n
    z0 = rng.uniform(-1.0, 1.0, 2 * N)
    amp = rng.uniform(0.2, 1.0, 3)
    freq = rng.uniform(0.3, 3.0, 3)
    phs = rng.uniform(0.0, 2 * np.pi, 3)

    def forcing(t):
        return float(np.sum(amp * np.sin(freq * t + phs)))

    return RandomReducibleSystem(R=R, V=V, W=W, A=A, v=v, z0=z0,
                                 forcing=forcing, seed=seed, mode_count=N)


def mz_kernels(sys, t):
    """Dense-exponential kernel matrices K(t), L(t), H(t) of the reduction."""
    S = sys.W @ sys.V
    Q = np.eye(len(sys.R)) - S
    E = expm(sys.R @ Q * t)
    return {
        "K": sys.V @ E @ sys.R @ sys.W,
        "L": sys.V @ E @ sys.v,
        "H": sys.V @ sys.R @ Q @ E,
    }


def _rk4_path(deriv, u0, T, dt):
    Q = int(round(T / dt))
    u = np.asarray(u0, dtype=float).copy()
    out = np.empty((Q + 1, len(u)))
    out[0] = u
    t = 0.0
    for q in range(Q):
        k1 = deriv(t, u)
        k2 = deriv(t + 0.5 * dt, u + 0.5 * dt * k1)
        k3 = deriv(t + 0.5 * dt, u + 0.5 * dt * k2)
        k4 = deriv(t + dt, u + dt * k3)
        u = u + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t = (q + 1) * dt
        out[q + 1] = u
    return out


def mz_equivalence(sys, T, dt):
    """Sup-norm difference between the direct projection y = Vz and the
    reduced equation integrated in the exact augmented form; both sides RK4."""
    R, V, W, A, v = sys.R, sys.V, sys.W, sys.A, sys.v
    f = sys.forcing
    S = W @ V
    Qm = np.eye(len(R)) - S
    RQ = R @ Qm
    RW = R @ W
    VRQ = V @ RQ
    Vv = V @ v

    def d_direct(t, z):
        return R @ z + v * f(t)

    zpath = _rk4_path(d_direct, sys.z0, T, dt)
    y_direct = zpath @ V.T

    ny = 2

    def d_reduced(t, u):
        y, w = u[:ny], u[ny:]
        ft = f(t)
        dy = A @ y + Vv * ft + VRQ @ w
        dw = RQ @ w + RW @ y + v * ft
        return np.concatenate([dy, dw])

    u0 = np.concatenate([V @ sys.z0, Qm @ sys.z0])
    upath = _rk4_path(d_reduced, u0, T, dt)
    y_reduced = upath[:, :ny]

    return float(np.max(np.abs(y_direct - y_reduced)))


def expRQ_identity(sys, t_samples):
    """Max residual of e^{RQ t} = e^{R t} - R S int_0^t e^{R tau} dtau."""
    R = sys.R
    S = sys.W @ sys.V
    RQ = R @ (np.eye(len(R)) - S)
    worst = 0.0
    for t in t_samples:
        lhs = expm(RQ * t)
        eRt = expm(R * t)
        try:
            integral = np.linalg.solve(R, eRt - np.eye(len(R)))
        except np.linalg.LinAlgError:
            # singular R: fixed-order Gauss-Legendre quadrature
            nodes, weights = np.polynomial.legendre.leggauss(24)
            integral = sum(w * expm(R * (0.5 * t * (x + 1.0)))
                           for x, w in zip(nodes, weights)) * 0.5 * t
        rhs = eRt - R @ S @ integral
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def stick_force_holder(traj, onset, max_samples=500):
    """Exponent beta of |F(t) - F(t*)| ~ C (t - t*)^beta after a stick onset.

    Uses up to max_samples stick samples following the onset event; needs at
    least 100. A constant force trace (all increments below rounding) is
    exact continuity and reports beta = 1.
    """
    q0 = onset.step
    if traj.phase[q0] != STICK:
        raise ValueError("event step is not a stick sample")
    end = q0 + 1
    while end < len(traj.phase) and traj.phase[end] == STICK:
        end += 1
    avail = end - q0 - 1
    if avail < 100:
        raise ValueError("need at least 100 stick samples after onset, have %d"
                         % avail)
    k = min(max_samples, avail)
    dF = np.abs(traj.fc[q0 + 1:q0 + 1 + k] - traj.fc[q0])
    dts = traj.times[q0 + 1:q0 + 1 + k] - traj.times[q0]
    if dF.max() < 1e-14:
        return 1.0
    mask = dF > 0
    beta = np.polyfit(np.log(dts[mask]), np.log(dF[mask]), 1)[0]
    return float(beta)


def gap_convergence(s_builder, law, y0, N_list, T=8.0, dt=5e-4):
    """First stick-onset force gap per mode count; no-stick runs excluded."""
    out = []
    for N in N_list:
        traj = simulate(s_builder(N), law, y0, T, dt)
        onsets = [e for e in traj.events if e.kind == STICK_ON]
        if not onsets:
            warnings.warn("no stick event at N=%d; excluded" % N)
            continue
        out.append((N, onsets[0].gap))
    return out
