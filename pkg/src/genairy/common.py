"""Shared result container and error types.

Every evaluation routine in this package returns an :class:`EvalResult`
so that callers (and the command line tool) can treat the three methods
uniformly.  The exceptions map onto the CLI exit codes: ``DomainError``
means the request itself is invalid (exit 2), ``ConvergenceError`` means
the request was valid but the numerics could not meet the tolerance
(exit 3).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "EvalResult",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "check_even_order",
]


@dataclass(frozen=True)
class EvalResult:
    """A numeric value, a one-sided error estimate, and what produced it.

    ``error_estimate`` is an a posteriori bound or heuristic, never a
    guarantee; ``method`` is one of ``"series"``, ``"quadrature"``,
    ``"asymptotic"``.
    """

    value: float
    error_estimate: float
    method: str


class DomainError(ValueError):
    """Arguments outside the supported domain (odd order, bad range, ...)."""


class PoleError(DomainError):
    """Evaluation point sits on (or numerically too close to) a pole."""


class ConvergenceError(RuntimeError):
    """A valid request whose numerics failed to reach the tolerance."""


def check_even_order(n) -> int:
    """Validate the equation order n of u^(n) = x u; only even n >= 2 work."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"order must be an integer, got {n!r}")
    if n < 2:
        raise DomainError(f"order must be at least 2, got {n}")
    if n % 2:
        raise DomainError(f"odd order unsupported, got {n}")
    return n
