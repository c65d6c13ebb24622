"""Physical limits on the energy efficiency (bit/Joule) of wireless links."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConvergenceError,
    DegenerateOptimumError,
    DomainError,
    InvalidArgumentError,
)
from .quantities import *  # noqa: E402,F401,F403
from .special import LOG2_E, SolverConfig, lambert_w0, spectral_efficiency  # noqa: E402,F401
from .link_limits import *  # noqa: E402,F401,F403
from .circuit_models import *  # noqa: E402,F401,F403
