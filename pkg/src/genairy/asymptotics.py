"""Large-|x| asymptotic forms for the solution of u^(2m) = x u.

The order parameter here is m, with n = 2m the equation order; m = 1
reduces both formulas to the classical leading-order Airy behavior
(exponential decay on one side, a single damped sine on the other).

For m >= 2 the oscillatory-side sum contains terms whose exponential
factors grow with |x|, which cannot match a bounded solution at fixed
leading order; comparisons there are reported, never asserted, and the
CLI labels them report-only.  The m = 1 case is the anchored, tested
regime.

Error estimates are heuristics (next-order-correction guesses), not
bounds.
"""

from __future__ import annotations

import math

from .common import DomainError, EvalResult

__all__ = ["m_for_order", "growth_exponent", "asympt_pos", "asympt_neg"]


def _check_m(m) -> int:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    return m


def m_for_order(n: int) -> int:
    """Half the (even) equation order: u^(n) = x u corresponds to m = n/2."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 2 or n % 2:
        raise DomainError(f"order must be an even integer >= 2, got {n!r}")
    return n // 2


def growth_exponent(m: int, x: float) -> float:
    """alpha = (2m/(2m+1)) |x|^((2m+1)/(2m)), the phase/decay scale."""
    m = _check_m(m)
    return 2 * m / (2 * m + 1) * abs(x) ** ((2 * m + 1) / (2 * m))


def _exp(a: float) -> float:
    try:
        return math.exp(a)
    except OverflowError:
        return math.inf


def asympt_pos(m: int, x: float) -> EvalResult:
    """Decaying-side form, x > 0:

        exp(-alpha) / (sqrt(pi) sqrt(4m) x^((2m-1)/(4m))).
    """
    m = _check_m(m)
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"decaying-side form needs x > 0, got {x!r}")
    alpha = growth_exponent(m, x)
    value = _exp(-alpha) / (math.sqrt(math.pi) * math.sqrt(4.0 * m) * x ** ((2 * m - 1) / (4 * m)))
    # heuristic: the first neglected correction is O(x^-(2m+1)/(2m)) relative
    return EvalResult(
        value=value,
        error_estimate=abs(value) * x ** (-(2 * m + 1) / (2 * m)),
        method="asymptotic",
    )


def asympt_neg(m: int, x: float) -> EvalResult:
    """Oscillatory-side form, x < 0:

        (1 / (sqrt(pi) sqrt(m) (-x)^((2m-1)/(4m))))
          * sum_{k=0}^{m-1} exp(alpha cos((1+2k)pi/(2m)))
                          * sin(alpha sin((1+2k)pi/(2m)) + (1+2k)pi/(4m)).

    For m = 1 this is the damped sine sin(alpha + pi/4) / (sqrt(pi)
    (-x)^(1/4)); for m >= 2 some summands grow exponentially (see module
    docstring) and the result is for inspection only.
    """
    m = _check_m(m)
    x = float(x)
    if not x < 0.0:
        raise DomainError(f"oscillatory-side form needs x < 0, got {x!r}")
    alpha = growth_exponent(m, x)
    pref = 1.0 / (math.sqrt(math.pi) * math.sqrt(float(m)) * (-x) ** ((2 * m - 1) / (4 * m)))
    total = 0.0
    envelope = 0.0
    for k in range(m):
        theta = (1 + 2 * k) * math.pi / (2 * m)
        grow = _exp(alpha * math.cos(theta))
        total += grow * math.sin(alpha * math.sin(theta) + (1 + 2 * k) * math.pi / (4 * m))
        envelope += grow
    # heuristic: one inverse power of the phase scale off the envelope
    return EvalResult(
        value=pref * total,
        error_estimate=pref * envelope / max(alpha, 1.0),
        method="asymptotic",
    )
