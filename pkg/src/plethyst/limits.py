"""Size bounds that keep the exhaustive enumerations tractable.

Everything here is exact combinatorics, so the only runaway failure mode is
asking for a degree whose tableau count explodes.  The hard cap on the
plethysm degree m*n can be raised or lowered through the PLETHYST_MAX_N
environment variable.
"""

import os
import warnings

from .errors import BoundExceededError

# Largest n for which partitions_of / kostka_matrix will enumerate.
MAX_PARTITION_SIZE = 30

# Default hard cap on the plethysm degree m*n.
DEFAULT_MAX_DEGREE = 16

# Above this degree the expansion still runs but emits a warning.
SOFT_WARN_DEGREE = 12

# Default cap on l(nu) for the factorial-size Jacobi-Trudi signed sum.
MAX_JACOBI_TRUDI_LENGTH = 7

ENV_MAX_DEGREE = "PLETHYST_MAX_N"


def max_degree() -> int:
    """Hard cap on the plethysm degree, honouring PLETHYST_MAX_N."""
    raw = os.environ.get(ENV_MAX_DEGREE)
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_DEGREE} must be an integer, got {raw!r}") from None


def check_degree(degree: int) -> None:
    """Reject degrees above the hard cap; warn above the soft threshold."""
    cap = max_degree()
    if degree > cap:
        raise BoundExceededError(
            f"plethysm degree {degree} exceeds the cap {cap} "
            f"(set {ENV_MAX_DEGREE} to override)"
        )
    if degree > SOFT_WARN_DEGREE:
        warnings.warn(
            f"plethysm degree {degree} is above {SOFT_WARN_DEGREE}; "
            "expect the enumeration to take a while",
            stacklevel=3,
        )


def check_partition_size(n: int) -> None:
    if n > MAX_PARTITION_SIZE:
        raise BoundExceededError(
            f"partition size {n} exceeds the enumeration bound {MAX_PARTITION_SIZE}"
        )
