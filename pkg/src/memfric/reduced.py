"""Explicit Euler integration of the reduced delay equation with stick-slip.

State update (slip), with eps the step and f the contact-force history:

    y_{q+1} = y_q + eps ( A y_q + Linf f_q
              + sum_{j=0}^{q-1} L0(j eps) (f_{q-j} - f_{q-j-1})
              + L0(q eps) f_0 )

The noise term is identically zero for initial conditions lifted from the
resolved state (the only kind the simulator produces). The stick force is
the exact tangency solution of this update (set [y_{q+1}]_2 = v0); its
denominator [Linf + L0(0)]_2 telescopes to n . n.

Orientation note: the slip force applied to the structure is
friction_force(v0 - y2), i.e. the friction law is evaluated at the bow
velocity relative to the contact point. This is the dissipative orientation:
it is what lets trajectories reach the switching surface with a constrained
force inside the static band, so stick phases exist. Evaluating the law at
y2 - v0 instead makes every surface approach arrive with |force| > mu and
no stick ever engages (the sign of the surface drift forces it), while the
switching surface itself stays h = y2 - v0.
"""

from dataclasses import dataclass, field

import numpy as np

from ._backend import conv_tail
from .friction import friction_force, stick_admissible, switching_h
from .kernel import build_kernel_table
from .modal import reduced_A

SLIP = 0
STICK = 1

STICK_ON = "STICK_ON"
STICK_OFF = "STICK_OFF"


class SingularityError(RuntimeError):
    """Vanishing tangency denominator (two-fold-type degeneracy)."""


@dataclass
class Event:
    step: int
    kind: str
    gap: float


@dataclass
class Trajectory:
    """Resolved-variable time series with phase flags and onset events.

    fc[q] is the force acting over [t_q, t_{q+1}); phase[q] flags the state
    sample at t_q, so a STICK sample always carries y2 = v0 exactly. The gap
    on a STICK_ON event is |stick force - slip-side force limit| at onset;
    on a STICK_OFF event it is the band overshoot |f| - mu that ended the
    phase.
    """
    dt: float
    times: np.ndarray
    y: np.ndarray
    fc: np.ndarray
    phase: np.ndarray
    events: list = field(default_factory=list)

    def stick_spans(self):
        """Contiguous index ranges [i, j) where phase == STICK."""
        spans = []
        flags = np.concatenate([[0], (self.phase == STICK).astype(int), [0]])
        d = np.diff(flags)
        for i, j in zip(np.nonzero(d == 1)[0], np.nonzero(d == -1)[0]):
            spans.append((int(i), int(j)))
        return spans


def _tail2(q, hist, table):
    """sum_{j=1}^{q-1} [L0(j eps)]_2 (f_{q-j} - f_{q-j-1}) + [L0(q eps)]_2 f_0."""
    if q > table.horizon:
        raise ValueError("kernel table horizon exceeded at step %d" % q)
    df = np.empty(q + 1) if q else None
    if q:
        df[0] = 0.0
        np.subtract(hist[1:q + 1], hist[:q], out=df[1:])
        return conv_tail(table.L0_2, df, q) + table.L0_2[q] * hist[0]
    return table.L0_2[0] * hist[0]


def step_slip(q, hist, y_q, table, A):
    """One explicit Euler step of the reduced equation; hist holds
    f_{c,0..q} with hist[q] the force acting over this step."""
    fq = hist[q]
    k2 = _tail2(q, hist, table)
    if q:
        k2 += table.L0_2[0] * (fq - hist[q - 1])
    rhs = A @ y_q
    rhs[1] += table.Linf[1] * fq + k2
    return y_q + table.dt * rhs


def stick_force(q, hist, y_q, table, A, law):
    """Constrained force holding y2 at v0 across the next step: the exact
    solution of the tangency condition applied to step_slip."""
    den = table.Linf[1] + table.L0_2[0]
    if abs(den) < 1e-12:
        raise SingularityError("vanishing tangency denominator")
    num = (A @ y_q)[1]
    if q:
        num += _tail2(q, hist, table) - table.L0_2[0] * hist[q - 1]
    return -num / den


def stick_force_rate(q, hist, y_q, table, A):
    """Stick-force time derivative from the delay form that divides by the
    analytic kernel jump; cross-check integrator for the stick phase.
    hist[q] must hold the current constrained-force value."""
    if table.L1_jump is None:
        raise ValueError("kernel has no jump at 0: rate form not applicable")
    num = (A @ y_q)[1] + table.Linf[1] * hist[q]
    if q:
        df = np.empty(q + 1)
        df[0] = 0.0
        np.subtract(hist[1:q + 1], hist[:q], out=df[1:])
        num += conv_tail(table.L0_2, df, q) + table.L0_2[q] * hist[0]
    return -num / table.L1_jump


def simulate(s, law, y0, T, dt):
    """March the reduced equation with stick-slip switching.

    Each step: tentative slip force and Euler step; if h = y2 - v0 changes
    sign across the step or |h| < tol_h, solve the tangency force at the
    snapped state; if it is admissible the step is a stick step (y2 := v0),
    otherwise the crossing proceeds as slip. Stick persists while the
    constrained force stays inside [-mu, mu]; on violation the force is
    clamped to the band edge for the exit step, which keeps the recorded
    force continuous through the transition.
    """
    table = build_kernel_table(s, dt, T)
    A = reduced_A(s)
    Q = table.horizon
    times = np.arange(Q + 1) * dt
    y = np.zeros((Q + 1, 2))
    fc = np.zeros(Q + 1)
    phase = np.zeros(Q + 1, dtype=np.int8)
    events = []
    y[0] = np.asarray(y0, dtype=float)
    if not np.all(np.isfinite(y[0])):
        raise ValueError("initial state must be finite")

    tol_h = 1e-9 * max(1.0, abs(law.v0))
    stuck = False
    h0 = switching_h(y[0], law)
    side = 1.0 if h0 > 0 else -1.0  # last resolved approach side

    for q in range(Q):
        if stuck:
            f = stick_force(q, fc, y[q], table, A, law)
            if stick_admissible(f, law):
                fc[q] = f
                phase[q] = STICK
                y[q + 1, 0] = y[q, 0] + dt * law.v0
                y[q + 1, 1] = law.v0
                continue
            events.append(Event(q, STICK_OFF, abs(f) - law.mu))
            stuck = False
            # exit through the band edge the constrained force violated
            fc[q] = np.copysign(law.mu, f)
            phase[q] = SLIP
            y[q + 1] = step_slip(q, fc, y[q], table, A)
            continue

        h = switching_h(y[q], law)
        if abs(h) >= tol_h:
            side = 1.0 if h > 0 else -1.0
        fc[q] = friction_force(law.v0 - y[q, 1], law)
        phase[q] = SLIP
        y_next = step_slip(q, fc, y[q], table, A)
        crossed = h * switching_h(y_next, law) < 0 or abs(h) < tol_h
        if crossed:
            y_snap = np.array([y[q, 0], law.v0])
            f = stick_force(q, fc, y_snap, table, A, law)
            if stick_admissible(f, law):
                stuck = True
                y[q] = y_snap
                fc[q] = f
                phase[q] = STICK
                # slip-side force limit on the approach side: -side * mu
                events.append(Event(q, STICK_ON, abs(f + side * law.mu)))
                y[q + 1, 0] = y[q, 0] + dt * law.v0
                y[q + 1, 1] = law.v0
                continue
        y[q + 1] = y_next
        if not np.all(np.isfinite(y[q + 1])):
            raise FloatingPointError("state diverged at step %d" % (q + 1))

    # label the final sample
    if stuck:
        f = stick_force(Q, fc, y[Q], table, A, law)
        if stick_admissible(f, law):
            fc[Q] = f
            phase[Q] = STICK
        else:
            fc[Q] = np.copysign(law.mu, f)
            events.append(Event(Q, STICK_OFF, abs(f) - law.mu))
    else:
        fc[Q] = friction_force(law.v0 - y[Q, 1], law)

    return Trajectory(dt=float(dt), times=times, y=y, fc=fc, phase=phase,
                      events=events)
