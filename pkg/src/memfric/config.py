"""Run configuration: a flat key=value file format and defaults.

The defaults reproduce the damped string benchmark run: 160 modes,
contact at xi* = 0.4, belt speed 1.5, exponentially weakening friction.
"""

from dataclasses import dataclass, fields

import numpy as np

from .friction import FrictionLaw
from .modal import build_beam, build_string


@dataclass
class ExperimentConfig:
    kind: str = "string"          # string | beam
    c: float = 1.0                # wave speed (string only)
    damping: float = 0.1
    xi_star: float = 0.4          # contact point (string only)
    mode_count: int = 160
    mu: float = 4.0
    kappa: float = 0.32
    sigma: float = 1.0
    v0: float = 1.5
    y0: tuple = (-2.9224, -2.7668)
    T: float = 8.0
    dt: float = 5e-4

    def structure(self, mode_count=None):
        N = self.mode_count if mode_count is None else mode_count
        if self.kind == "string":
            return build_string(self.c, self.damping, self.xi_star, N)
        if self.kind == "beam":
            return build_beam(self.damping, N)
        raise ValueError("unknown structure kind %r" % self.kind)

    def law(self):
        return FrictionLaw(mu=self.mu, kappa=self.kappa, sigma=self.sigma,
                           v0=self.v0)

    def initial_state(self):
        return np.array(self.y0, dtype=float)


def load_config(path):
    """Parse a flat key=value file ('#' comments, blank lines ignored)."""
    cfg = ExperimentConfig()
    types = {f.name: f.type for f in fields(ExperimentConfig)}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError("%s:%d: expected key=value, got %r"
                                 % (path, lineno, raw.rstrip()))
            key, val = (part.strip() for part in line.split("=", 1))
            if key not in types:
                raise ValueError("%s:%d: unknown key %r" % (path, lineno, key))
            if key == "kind":
                cfg.kind = val
            elif key == "mode_count":
                cfg.mode_count = int(val)
            elif key == "y0":
                parts = val.replace(",", " ").split()
                if len(parts) != 2:
                    raise ValueError("%s:%d: y0 needs two numbers"
                                     % (path, lineno))
                cfg.y0 = (float(parts[0]), float(parts[1]))
            else:
                setattr(cfg, key, float(val))
    return cfg
