"""Run-time settings shared by the library defaults and the CLI."""

from dataclasses import dataclass, replace
from typing import Literal

BackendName = Literal["exact", "float"]

DEFAULT_TOLERANCE = 1e-10
DEFAULT_ORDER = 8
MAX_OBSTRUCTION_ORDER = 8
DEFAULT_SAMPLES = 100


@dataclass(frozen=True)
class Settings:
    """
    Tunables for one invocation.

    Args:
        backend: Coefficient field, exact complex rationals or machine complex
        float_tolerance: Relative tolerance of the float backend
        order: Truncation order used where the caller does not pin one
        max_obstruction_order: Largest n accepted by obstruction_polynomial
        seed: Seed for the deterministic generators of the verify suites
        samples: Random cases per property in the verify suites
    """

    backend: BackendName = "exact"
    float_tolerance: float = DEFAULT_TOLERANCE
    order: int = DEFAULT_ORDER
    max_obstruction_order: int = MAX_OBSTRUCTION_ORDER
    seed: int = 0
    samples: int = DEFAULT_SAMPLES

    def with_overrides(self, **overrides) -> "Settings":
        """Copy with every non-None override applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})
