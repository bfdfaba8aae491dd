"""Memory-kernel reduction of modal structures with point friction.

The package projects a damped modal structure onto the two observable
coordinates at a contact point. The exact reduced dynamics is a delay
equation whose convolution kernel is tabulated from the modal data; a
stick-slip switching integrator then runs entirely in the two reduced
coordinates. A direct finite-mode integrator is kept alongside for
cross-checking.
"""

from ._backend import HAVE_COMPILED
from .config import ExperimentConfig, load_config
from .friction import FrictionLaw, friction_force, stick_admissible, switching_h
from .fullmodel import simulate_full, sliding_force
from .kernel import (KernelTable, build_kernel_table, holder_exponent,
                     kernel_L1, kernel_L1_jump, kernel_L2, kernel_Linf,
                     resolvent_scan)
from .modal import (ModalStructure, build_beam, build_string,
                    check_projection_identities, reduced_A)
from .reduced import (SLIP, STICK, SingularityError, Trajectory, simulate,
                      stick_force, stick_force_rate, step_slip)
from .verify import (RandomReducibleSystem, expRQ_identity, gap_convergence,
                     mz_equivalence, random_reducible, stick_force_holder)

__version__ = "0.1.0"

__all__ = [
    "HAVE_COMPILED",
    "ExperimentConfig", "load_config",
    "FrictionLaw", "friction_force", "stick_admissible", "switching_h",
    "simulate_full", "sliding_force",
    "KernelTable", "build_kernel_table", "holder_exponent",
    "kernel_L1", "kernel_L1_jump", "kernel_L2", "kernel_Linf",
    "resolvent_scan",
    "ModalStructure", "build_beam", "build_string",
    "check_projection_identities", "reduced_A",
    "SLIP", "STICK", "SingularityError", "Trajectory", "simulate",
    "stick_force", "stick_force_rate", "step_slip",
    "RandomReducibleSystem", "expRQ_identity", "gap_convergence",
    "mz_equivalence", "random_reducible", "stick_force_holder",
    "__version__",
]
