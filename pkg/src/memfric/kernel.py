"""Memory kernels of the reduced contact-point equation.

Only the second (velocity) component of the 2-vector kernels is nonzero for
the single-window lift vectors used here; the first component is carried as
an exact zero so downstream code can stay in vector form.

Per mode k, with a = D_k w_k, b = sqrt(1 - D_k^2) w_k and w1, D1 the lead
mode data, the closed forms are

    [L]_2(tau)   = sum_k n_k^2 [ e^{-a tau}(S2 sin b tau + C2 cos b tau) + w1^2/w_k^2 ]
    [L^0]_2(tau) = [L]_2(tau) - [L^inf]_2
    [L^1]_2(tau) = sum_k n_k^2 [ e^{-a tau}(S1 sin b tau + C1 cos b tau) - C1 ]

with

    S2 = -a/b + 2 D1 w1 / b - w1^2 a / (b w_k^2)
    C2 = 1 - w1^2 / w_k^2
    S1 = 1/b - 2 D1 w1 a / (b w_k^2) - w1^2 (b^2 - a^2) / (b w_k^4)
    C1 = -2 D1 w1 / w_k^2 + 2 a w1^2 / w_k^4

obtained by integrating the per-mode impulse response symbolically; they
satisfy -a S1 - b C1 = S2 and b S1 - a C1 = C2 exactly, i.e. d[L^1]/dtau =
[L^0] mode by mode. Sums are Kahan-compensated in descending k so tables are
bit-reproducible.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kahan_ordered, kahan_ordered_2d


def _mode_coeffs(s):
    """Per-mode closed-form coefficients (arrays over k)."""
    if np.any(s.damping >= 1.0):
        raise ValueError("critically damped mode: closed form singular")
    w = s.omega
    d = s.damping
    i = s.lead_index
    w1, d1 = w[i], d[i]
    a = d * w
    b = np.sqrt(1.0 - d * d) * w
    w2 = w * w
    n2 = s.contact_coeffs ** 2
    S2 = -a / b + 2.0 * d1 * w1 / b - w1 * w1 * a / (b * w2)
    C2 = 1.0 - w1 * w1 / w2
    S1 = 1.0 / b - 2.0 * d1 * w1 * a / (b * w2) - w1 * w1 * (b * b - a * a) / (b * w2 * w2)
    C1 = -2.0 * d1 * w1 / w2 + 2.0 * a * w1 * w1 / (w2 * w2)
    return a, b, S1, C1, S2, C2, n2, w1 * w1 / w2


def kernel_L2(tau, s):
    """[L(tau)]_2: velocity response of the contact point to the unit force
    history, truncated at N modes. At tau = 0 this is sum n_k^2."""
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    a, b, S1, C1, S2, C2, n2, linf_terms = _mode_coeffs(s)
    E = np.exp(-a * tau)
    terms = n2 * (E * (S2 * np.sin(b * tau) + C2 * np.cos(b * tau)) + linf_terms)
    return kahan_ordered(np.ascontiguousarray(terms[::-1]))


def kernel_Linf(s):
    """Static kernel component: (0, sum n_k^2 w1^2 / w_k^2)."""
    _, _, _, _, _, _, n2, linf_terms = _mode_coeffs(s)
    val = kahan_ordered(np.ascontiguousarray((n2 * linf_terms)[::-1]))
    return np.array([0.0, val])


def kernel_L1(tau, s):
    """[L^1(tau)]_2, the running integral of [L^0]; exactly 0 at tau = 0."""
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    a, b, S1, C1, S2, C2, n2, _ = _mode_coeffs(s)
    E = np.exp(-a * tau)
    terms = n2 * (E * (S1 * np.sin(b * tau) + C1 * np.cos(b * tau)) - C1)
    return kahan_ordered(np.ascontiguousarray(terms[::-1]))


def kernel_L1_jump(c, D):
    """Analytic right limit of [L^1]_2 at tau -> 0+ for the string:
    arccos(D) / (2 pi c sqrt(1 - D^2))."""
    if not (0 <= D < 1):
        raise ValueError("need 0 <= D < 1")
    if c <= 0:
        raise ValueError("need c > 0")
    return math.acos(D) / (2.0 * math.pi * c * math.sqrt(1.0 - D * D))


@dataclass(frozen=True)
class KernelTable:
    """Kernels sampled on the simulation grid q*dt, q = 0..horizon."""
    dt: float
    horizon: int
    L0: np.ndarray      # (horizon+1, 2)
    L1: np.ndarray      # (horizon+1, 2)
    Linf: np.ndarray    # (2,)
    L1_jump: float      # None for kernels continuous at 0 (beam)
    mode_count: int

    def __post_init__(self):
        # contiguous second-component views for the compiled convolution
        object.__setattr__(self, "L0_2", np.ascontiguousarray(self.L0[:, 1]))
        object.__setattr__(self, "L1_2", np.ascontiguousarray(self.L1[:, 1]))


def build_kernel_table(s, dt, horizon_time, chunk=4096):
    """Tabulate L^0, L^1 on the grid q*dt covering [0, horizon_time].

    L0[q] = kernel_L2(q dt) - [L^inf]_2 and L1[q] = kernel_L1(q dt),
    evaluated by the same compensated mode sums as the pointwise ops.
    """
    if dt <= 0 or horizon_time <= 0:
        raise ValueError("dt and horizon_time must be positive")
    Q = int(round(horizon_time / dt))
    taus = np.arange(Q + 1) * dt
    a, b, S1, C1, S2, C2, n2, linf_terms = _mode_coeffs(s)
    linf2 = kahan_ordered(np.ascontiguousarray((n2 * linf_terms)[::-1]))

    L2v = np.empty(Q + 1)
    L1v = np.empty(Q + 1)
    # descending-k term matrices, chunked over tau to bound memory
    rev = slice(None, None, -1)
    for lo in range(0, Q + 1, chunk):
        hi = min(lo + chunk, Q + 1)
        t = taus[lo:hi][None, :]
        E = np.exp(-a[:, None] * t)
        sn = np.sin(b[:, None] * t)
        cs = np.cos(b[:, None] * t)
        t2 = n2[:, None] * (E * (S2[:, None] * sn + C2[:, None] * cs)
                            + linf_terms[:, None])
        t1 = n2[:, None] * (E * (S1[:, None] * sn + C1[:, None] * cs)
                            - C1[:, None])
        L2v[lo:hi] = kahan_ordered_2d(np.ascontiguousarray(t2[rev]))
        L1v[lo:hi] = kahan_ordered_2d(np.ascontiguousarray(t1[rev]))

    L0 = np.zeros((Q + 1, 2))
    L1 = np.zeros((Q + 1, 2))
    L0[:, 1] = L2v - linf2
    L1[:, 1] = L1v
    jump = None
    if s.wave_speed is not None:
        jump = kernel_L1_jump(s.wave_speed, s.damping[s.lead_index])
    return KernelTable(dt=float(dt), horizon=Q, L0=L0, L1=L1,
                       Linf=np.array([0.0, linf2]), L1_jump=jump,
                       mode_count=s.mode_count)


def holder_exponent(table, fit_window=None):
    """Least-squares slope of log |[L^1]_2| vs log tau, clamped to [0, 1].

    Default window: indices 2..100 (tau in [2 dt, 100 dt]); the first sample
    is excluded because L1[0] = 0 exactly.
    """
    if fit_window is None:
        fit_window = range(2, min(101, table.horizon + 1))
    idx = np.asarray(list(fit_window), dtype=int)
    if idx.min() < 0 or idx.max() > table.horizon:
        raise ValueError("fit window outside table")
    vals = table.L1[idx, 1]
    if np.any(vals <= 0):
        raise ValueError("kernel values must be positive on the fit window")
    taus = idx * table.dt
    slope = np.polyfit(np.log(taus), np.log(vals), 1)[0]
    return float(min(1.0, max(0.0, slope)))


def resolvent_scan(s, gamma, omega_max, samples):
    """Max of |lambda sum_k n_k^2 / (w_k^2 + 2 D_k w_k lambda + lambda^2)|
    on the vertical line lambda = gamma + i omega, omega in [0, omega_max]."""
    if gamma <= 0:
        raise ValueError("need gamma > 0")
    lam = gamma + 1j * np.linspace(0.0, omega_max, samples)
    w = s.omega[None, :]
    d = s.damping[None, :]
    n2 = (s.contact_coeffs ** 2)[None, :]
    den = w * w + 2.0 * d * w * lam[:, None] + lam[:, None] ** 2
    if np.any(np.abs(den) < 1e-12):
        return math.inf
    vals = np.abs(lam * np.sum(n2 / den, axis=1))
    return float(np.max(vals))
