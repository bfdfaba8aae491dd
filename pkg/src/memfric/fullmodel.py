"""Finite-N oracle: event-driven Filippov integration of the modal system.

Slip dynamics per mode: x_k'' = -2 D_k w_k x_k' - w_k^2 x_k + n_k f with
f = friction_force(v0 - n.x') (same dissipative orientation as the reduced
simulator). The switching surface h = n.x' - v0 = 0 is located by bisecting
the RK4 step; on the surface the sliding force from d/dt(n.x') = 0 is

    f* = n . (2 D W x' + W^2 x) / (n . n)

and stick holds while |f*| <= mu, integrating with f = f* re-evaluated per
RK4 stage plus a velocity re-projection onto n.x' = v0 after each step.
Returns a resolved-variable Trajectory (y1 = n.x, y2 = n.x') on the grid.
"""

from dataclasses import dataclass

import numpy as np

from .friction import friction_force, stick_admissible
from .reduced import Event, SLIP, STICK, STICK_OFF, STICK_ON, Trajectory


@dataclass
class FullModalState:
    x: np.ndarray
    v: np.ndarray
    t: float
    phase: int


def sliding_force(state, s):
    """Filippov sliding force on the switching surface."""
    n = s.contact_coeffs
    w = s.omega
    num = n @ (2.0 * s.damping * w * state.v + w * w * state.x)
    return num / (n @ n)


def _slide(x, v, s):
    n = s.contact_coeffs
    w = s.omega
    return (n @ (2.0 * s.damping * w * v + w * w * x)) / (n @ n)


def _rk4(x, v, dt, accel):
    k1x, k1v = v, accel(x, v)
    x2, v2 = x + 0.5 * dt * k1x, v + 0.5 * dt * k1v
    k2x, k2v = v2, accel(x2, v2)
    x3, v3 = x + 0.5 * dt * k2x, v + 0.5 * dt * k2v
    k3x, k3v = v3, accel(x3, v3)
    x4, v4 = x + dt * k3x, v + dt * k3v
    k4x, k4v = v4, accel(x4, v4)
    xn = x + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
    vn = v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
    return xn, vn


def simulate_full(s, law, x0, v0_state, T, dt):
    """Integrate the N-mode system and return the resolved Trajectory."""
    n = s.contact_coeffs
    w = s.omega
    two_dw = 2.0 * s.damping * w
    w2 = w * w
    nn = n @ n
    v0 = law.v0

    def accel_slip(x, v):
        f = friction_force(v0 - n @ v, law)
        return -two_dw * v - w2 * x + n * f

    def accel_stick(x, v):
        f = _slide(x, v, s)
        return -two_dw * v - w2 * x + n * f

    x = np.asarray(x0, dtype=float).copy()
    v = np.asarray(v0_state, dtype=float).copy()
    if x.shape != (s.mode_count,) or v.shape != (s.mode_count,):
        raise ValueError("modal state arrays must have length N")

    Q = int(round(T / dt))
    times = np.arange(Q + 1) * dt
    y = np.zeros((Q + 1, 2))
    fc = np.zeros(Q + 1)
    phase = np.zeros(Q + 1, dtype=np.int8)
    events = []

    stuck = False
    h = n @ v - v0
    side = 1.0 if h > 0 else -1.0
    y[0] = (n @ x, n @ v)

    for q in range(Q):
        if stuck:
            fstar = _slide(x, v, s)
            if not stick_admissible(fstar, law):
                events.append(Event(q, STICK_OFF, abs(fstar) - law.mu))
                stuck = False
                # exit through the band edge, as in the reduced engine
                fc[q] = np.copysign(law.mu, fstar)
                phase[q] = SLIP
                x, v = _rk4(x, v, dt, accel_slip)
            else:
                fc[q] = fstar
                phase[q] = STICK
                x, v = _rk4(x, v, dt, accel_stick)
                v += n * ((v0 - n @ v) / nn)  # kill constraint drift
        else:
            h_prev = n @ v - v0
            if abs(h_prev) >= 1e-12:
                side = 1.0 if h_prev > 0 else -1.0
            fc[q] = friction_force(v0 - n @ v, law)
            phase[q] = SLIP
            xn, vn = _rk4(x, v, dt, accel_slip)
            h_new = n @ vn - v0
            if h_prev * h_new < 0 or abs(h_new) < 1e-12:
                # bisect the crossing inside [t_q, t_q + dt]
                lo, hi = 0.0, dt
                for _ in range(60):
                    mid = 0.5 * (lo + hi)
                    xm, vm = _rk4(x, v, mid, accel_slip)
                    hm = n @ vm - v0
                    if h_prev * hm <= 0:
                        hi = mid
                    else:
                        lo = mid
                xc, vc = _rk4(x, v, hi, accel_slip)
                fstar = _slide(xc, vc, s)
                if stick_admissible(fstar, law):
                    stuck = True
                    events.append(Event(q + 1, STICK_ON,
                                        abs(fstar + side * law.mu)))
                    vc += n * ((v0 - n @ vc) / nn)
                    x, v = _rk4(xc, vc, dt - hi, accel_stick)
                    v += n * ((v0 - n @ v) / nn)
                else:
                    x, v = xn, vn  # inadmissible: cross and keep slipping
            else:
                x, v = xn, vn
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(v))):
            raise FloatingPointError("modal state diverged at step %d" % (q + 1))
        y[q + 1] = (n @ x, n @ v)
        if stuck:
            phase[q + 1] = STICK
            fc[q + 1] = _slide(x, v, s)
        else:
            phase[q + 1] = SLIP
            fc[q + 1] = friction_force(v0 - n @ v, law)

    return Trajectory(dt=float(dt), times=times, y=y, fc=fc, phase=phase,
                      events=events)
