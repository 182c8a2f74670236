"""Walk the differential-polynomial chain f_1, f_2, ... and check its
two defining identities on a concrete smooth function."""

import math

import numpy as np

from genairy import (
    DiffPolynomial,
    apply_lift,
    evaluate,
    exp_jet,
    f_n,
    log_derivative_jet,
    monomial_weight,
    render,
)

# The chain: f_1 = y, f_{n+1} = (d/dx + y) f_n.  Coefficients are exact
# integers, so everything below is reproducible to the last digit.
print("the chain up to n = 6")
for n in range(1, 7):
    print(f"  f_{n} = {render(f_n(n))}")

# Term counts follow the partition numbers, and every monomial has
# isobaric weight n when y^(i) weighs i + 1.
print()
print("n, number of terms, weights seen")
for n in range(1, 9):
    poly = f_n(n)
    weights = {monomial_weight(exps) for exps in poly.terms}
    print(f"  {n}, {len(poly)}, {sorted(weights)}")

# Identity 1: f_n evaluated on the jet of y = u'/u returns u^(n)/u.
# Take u = exp(x^2/2), so y = x and the jet of y is (x, 1, 0, 0, ...).
x0 = 0.7
n = 6
yjet = (x0, 1.0) + (0.0,) * (n - 1)
u_ratio_jet = exp_jet(tuple(
    [x0 * x0 / 2.0, x0, 1.0] + [0.0] * (n - 2)
))
lhs = evaluate(f_n(n), yjet)
rhs = u_ratio_jet[n] / u_ratio_jet[0]
print()
print(f"u = exp(x^2/2) at x = {x0}: f_{n}(jet of u'/u) = {lhs!r}")
print(f"                          u^({n})/u          = {rhs!r}")
print(f"                          difference         = {abs(lhs - rhs):.3e}")

# Identity 2 in the other direction: start from derivative values of u
# and recover the y-jet numerically.
ujet = u_ratio_jet
yjet_num = log_derivative_jet(ujet)
print(f"log_derivative_jet recovers y-jet: "
      f"{max(abs(a - b) for a, b in zip(yjet, yjet_num)):.3e} max dev")

# The same machinery on 5 random u = exp(p), p a quintic; the scaled
# residual should sit at rounding level whatever the draw.
rng = np.random.default_rng(1)
print()
print("random u = exp(quintic), n = 8, scaled residuals")
for trial in range(5):
    coeffs = rng.uniform(-1.0, 1.0, size=6)
    x0 = rng.uniform(-2.0, 2.0)
    pjet = tuple(
        sum(coeffs[d] * math.factorial(d) / math.factorial(d - k) * x0 ** (d - k)
            for d in range(k, 6))
        for k in range(9)
    )
    ujet = exp_jet(pjet)
    y = log_derivative_jet(ujet)
    ref = ujet[8] / ujet[0]
    resid = abs(evaluate(f_n(8), y) - ref) / (1.0 + abs(ref))
    print(f"  trial {trial}: {resid:.3e}")

# The recurrence is literally one lift application per step.
print()
print("f_5 == apply_lift(f_4):", f_n(5) == apply_lift(f_n(4)))
