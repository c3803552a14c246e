"""Exception types shared across the package."""

from __future__ import annotations


class MeanLabError(Exception):
    """Base class for all meanlab errors."""


class DomainError(MeanLabError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnknownMeanError(MeanLabError, KeyError):
    """A mean id is not present in the catalog."""

    def __init__(self, mean_id: object):
        super().__init__(mean_id)
        self.mean_id = mean_id

    def __str__(self) -> str:
        return f"unknown mean id {self.mean_id!r}"


class SeiffertBoundError(MeanLabError):
    """A function leaves the admissible band z/(1+z) <= f(z) <= z/(1-z).

    Carries the witness abscissa and the offending value, so callers can
    report where a would-be Seiffert function breaks down.
    """

    def __init__(self, z: float, value: float, lower: float, upper: float):
        self.z = z
        self.value = value
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"Seiffert bounds violated at z={z!r}: f(z)={value!r} "
            f"outside [{lower!r}, {upper!r}]"
        )


class NonConvergenceError(MeanLabError):
    """An iterative routine stopped before reaching its tolerance.

    ``best`` holds the last estimate, ``error_bound`` the final error
    estimate, so partial results stay inspectable.
    """

    def __init__(self, message: str, best: float | None = None,
                 error_bound: float | None = None):
        super().__init__(message)
        self.best = best
        self.error_bound = error_bound
