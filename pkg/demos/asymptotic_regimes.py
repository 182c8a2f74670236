"""Large-|x| behavior for n = 2m: exponential decay on one side, an
m-term interference pattern on the other."""

import math

from genairy import (
    asympt_neg,
    asympt_pos,
    eval_series,
    growth_exponent,
    sign_for,
    taylor_model,
    v_pm,
)


def reference(n, x):
    # series while its own estimate says the digits are clean, else quadrature
    try:
        res = eval_series(taylor_model(n), x)
        if res.error_estimate <= 1e-3 * abs(res.value):
            return res.value
    except Exception:
        pass
    return v_pm(n, sign_for(n), x).value


# m = 1 (classical Airy): the one-term decaying form closes in as x grows.
print("m = 1, decaying side")
print(f"{'x':>4} {'asymptotic':>20} {'reference':>20} {'rel dev':>9}")
for x in (6.0, 8.0, 10.0, 12.0):
    a = asympt_pos(1, x).value
    r = reference(2, x)
    print(f"{x:>4} {a:>20.10e} {r:>20.10e} {abs(a - r) / abs(r):>9.4f}")

# Oscillatory side: one sinusoid with an algebraic envelope; deviations
# are judged against the amplitude, not pointwise (zeros drift).
print()
print("m = 1, oscillatory side")
refs = {x: reference(2, x) for x in (-4.0, -6.0, -8.0, -10.0)}
scale = max(abs(r) for r in refs.values())
for x, r in refs.items():
    a = asympt_neg(1, x).value
    print(f"{x:>5} {a:>20.10e} {r:>20.10e} {abs(a - r) / scale:>9.4f}")

# For m >= 2 the oscillatory-side sum mixes exponentially growing and
# decaying pieces; the growth exponent alpha*cos(theta_0) below shows how
# fast the dominant term runs away.  Numbers are printed for inspection
# only, mirroring the CLI's REPORT-ONLY table.
print()
print("m = 2, report only")
m = 2
n = 2 * m
for x in (-4.0, -6.0):
    a = asympt_neg(m, x).value
    r = reference(n, x)
    alpha = growth_exponent(m, abs(x))
    theta0 = math.pi / (2 * m)
    print(f"  x = {x}: asympt {a:.6e}, reference {r:.6e}, "
          f"dominant exp factor e^{alpha * math.cos(theta0):.2f}")

print()
print("m = 2, decaying side, report only")
for x in (6.0, 10.0):
    a = asympt_pos(m, x).value
    r = reference(n, x)
    print(f"  x = {x}: asympt {a:.6e}, reference {r:.6e}, "
          f"rel dev {abs(a - r) / abs(r):.4f}")
