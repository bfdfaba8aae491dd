"""Truncated modal models: string, cantilever beam, and the 2x2 reduction.

A structure is a list of modes (omega_k, D_k) plus two coefficient vectors:
n_k samples the mode shapes at the contact point, m_k lifts the resolved
contact-point state back into modal space. m has a single nonzero entry and
m . n = 1, which makes the reduced state matrix A collapse to first-mode
data exactly.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect


@dataclass(frozen=True)
class ModalStructure:
    omega: np.ndarray
    damping: np.ndarray
    contact_coeffs: np.ndarray
    lift_coeffs: np.ndarray
    wave_speed: float = None
    contact_position: float = None

    def __post_init__(self):
        for name in ("omega", "damping", "contact_coeffs", "lift_coeffs"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        if self.omega.ndim != 1 or len({a.shape for a in
                                        (self.omega, self.damping,
                                         self.contact_coeffs, self.lift_coeffs)}) != 1:
            raise ValueError("modal arrays must share one 1d shape")
        if not np.all(self.omega > 0) or not np.all(np.diff(self.omega) > 0):
            raise ValueError("omega must be strictly increasing and positive")
        if np.any(self.damping < 0) or np.any(self.damping >= 1):
            raise ValueError("damping ratios must lie in [0, 1)")
        nz = np.nonzero(self.lift_coeffs)[0]
        if len(nz) != 1:
            raise ValueError("lift vector must have exactly one nonzero entry")
        if abs(self.lift_coeffs @ self.contact_coeffs - 1.0) > 1e-12:
            raise ValueError("lift and contact vectors must satisfy m . n = 1")

    @property
    def mode_count(self):
        return len(self.omega)

    @property
    def lead_index(self):
        """Index of the mode selected by the nonzero lift entry."""
        return int(np.nonzero(self.lift_coeffs)[0][0])


def build_string(c, D, xi_star, N):
    """Pre-tensed string without bending stiffness, N modes.

    omega_k = c k pi, n_k = sin(k pi xi_star), m = (1/sin(pi xi_star), 0, ...).
    """
    if not (c > 0 and 0 < xi_star < 1 and 0 <= D < 1 and N >= 1):
        raise ValueError("need c > 0, xi_star in (0,1), 0 <= D < 1, N >= 1")
    s1 = np.sin(np.pi * xi_star)
    if abs(s1) < 1e-12:
        raise ValueError("sin(pi xi_star) = 0: lift vector undefined")
    k = np.arange(1, N + 1)
    omega = c * k * np.pi
    n = np.sin(k * np.pi * xi_star)
    m = np.zeros(N)
    m[0] = 1.0 / s1
    return ModalStructure(omega, np.full(N, float(D)), n, m,
                          wave_speed=float(c), contact_position=float(xi_star))


def _beam_char(u):
    # scaled characteristic function: same roots as 1 + cos(u) cosh(u),
    # bounded for large u where the raw form overflows
    return np.cos(u) + 1.0 / np.cosh(u)


def beam_sqrt_omega(k):
    """k-th root u_k of 1 + cos(u) cosh(u) = 0 (u = sqrt(omega))."""
    seed = k * np.pi - np.pi / 2
    if seed > 30.0:
        # 1/cosh(u) < 1e-13: the asymptotic root cos(u) = 0 is exact to
        # double precision
        return seed
    lo, hi = seed - 0.7, seed + 0.7
    flo, fhi = _beam_char(lo), _beam_char(hi)
    if flo * fhi >= 0:
        raise RuntimeError("beam root bracket lost sign change at k=%d" % k)
    u = bisect(_beam_char, lo, hi, xtol=1e-12)
    if abs(_beam_char(u)) > 1e-9:
        raise RuntimeError("beam root refinement failed at k=%d" % k)
    return u


def build_beam(D, N):
    """Cantilever beam, N modes; frequencies from the clamped-free
    characteristic equation, mode shapes sampled at the free end."""
    if not (0 <= D < 1 and N >= 1):
        raise ValueError("need 0 <= D < 1, N >= 1")
    u = np.array([beam_sqrt_omega(k) for k in range(1, N + 1)])
    omega = u * u
    n = 2.0 * (-1.0) ** np.arange(N)
    m = np.zeros(N)
    m[0] = 0.5
    return ModalStructure(omega, np.full(N, float(D)), n, m)


def reduced_A(s):
    """2x2 reduced state matrix [[0, 1], [-w1^2, -2 D1 w1]] from the mode
    selected by the lift window."""
    i = s.lead_index
    w1 = s.omega[i]
    d1 = s.damping[i]
    return np.array([[0.0, 1.0], [-w1 * w1, -2.0 * d1 * w1]])


def build_R(s):
    """Block first-order system matrix [[0, I], [-K, -C]], 2N x 2N."""
    N = s.mode_count
    K = np.diag(s.omega ** 2)
    C = np.diag(2.0 * s.damping * s.omega)
    R = np.zeros((2 * N, 2 * N))
    R[:N, N:] = np.eye(N)
    R[N:, :N] = -K
    R[N:, N:] = -C
    return R


def build_V(s):
    """Projection to resolved variables: rows (n, 0) and (0, n)."""
    N = s.mode_count
    V = np.zeros((2, 2 * N))
    V[0, :N] = s.contact_coeffs
    V[1, N:] = s.contact_coeffs
    return V


def build_W(s):
    """Lifting: columns (m, 0) and (0, m)."""
    N = s.mode_count
    W = np.zeros((2 * N, 2))
    W[:N, 0] = s.lift_coeffs
    W[N:, 1] = s.lift_coeffs
    return W


def check_projection_identities(s):
    """Max absolute residuals of VW = I, QW = 0 and RW = WA at truncation N."""
    R, V, W = build_R(s), build_V(s), build_W(s)
    A = reduced_A(s)
    VW = V @ W
    Q = np.eye(2 * s.mode_count) - W @ V
    return {
        "VW_minus_I": float(np.max(np.abs(VW - np.eye(2)))),
        "QW": float(np.max(np.abs(Q @ W))),
        "RW_minus_WA": float(np.max(np.abs(R @ W - W @ A))),
    }
