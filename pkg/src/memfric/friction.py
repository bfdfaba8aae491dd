"""Coulomb-like friction law, switching surface, stick admissibility."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class FrictionLaw:
    """Parameters of f(v) = sign(v) (mu - kappa + kappa exp(-sigma |v|)).

    mu: peak force level, kappa: dynamic drop, sigma: velocity decay rate,
    v0: bow speed defining the switching surface. kappa = mu = 0 is allowed
    so the zero law can drive free-decay runs.
    """
    mu: float
    kappa: float
    sigma: float
    v0: float

    def __post_init__(self):
        if self.mu < 0 or not (0 <= self.kappa <= self.mu) or self.sigma < 0:
            raise ValueError("need mu >= 0, 0 <= kappa <= mu, sigma >= 0")


def friction_force(v_rel, law):
    """Slip-branch force at relative velocity v_rel; sign(0) = 0."""
    if v_rel == 0:
        return 0.0
    mag = law.mu - law.kappa + law.kappa * math.exp(-law.sigma * abs(v_rel))
    return math.copysign(mag, v_rel)


def switching_h(y, law):
    """Signed distance to the switching surface: h = y2 - v0."""
    return y[1] - law.v0


def stick_admissible(f, law):
    """True iff the constrained force lies in the static band [-mu, mu]."""
    return -law.mu <= f <= law.mu
