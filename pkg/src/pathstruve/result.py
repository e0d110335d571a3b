from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalResult:
    """Value of a series or quadrature together with its error bookkeeping.

    ``err_estimate`` bounds the absolute truncation/quadrature error and
    ``work`` counts summed terms or integrand evaluations.
    """

    value: float
    err_estimate: float
    work: int

    def __post_init__(self):
        if not self.err_estimate >= 0:
            raise ValueError(f"err_estimate must be >= 0, got {self.err_estimate!r}")
        if self.work < 1:
            raise ValueError(f"work must be >= 1, got {self.work!r}")
