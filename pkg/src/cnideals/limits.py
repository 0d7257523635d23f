"""Resource caps for the exponential ideal computations.

Every potentially explosive search (power expansion, witness enumeration,
colon/intersection product grids) is bounded and aborts loudly with
:class:`CapExceeded` instead of hanging.  Caps are configurable per call.
"""

from __future__ import annotations

from dataclasses import dataclass


class CapExceeded(RuntimeError):
    """A configured resource cap was exceeded; the result was not computed."""


@dataclass(frozen=True)
class Caps:
    """Per-computation resource limits.

    products: intermediate products allowed in one power expansion.
    witness_candidates: monomials allowed in one witness enumeration.
    intersection_products: pairwise lcm products allowed in one
        intersection (and in one colon-by-all-variables fold step).
    """

    products: int = 5_000_000
    witness_candidates: int = 10_000_000
    intersection_products: int = 200_000_000

    def __post_init__(self) -> None:
        if self.products < 1 or self.witness_candidates < 1 or self.intersection_products < 1:
            raise ValueError("caps must be positive")


DEFAULT_CAPS = Caps()
