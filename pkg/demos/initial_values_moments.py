"""The closed-form scaffolding: initial values at the origin and the
moment identity that produces them."""

from genairy import (
    gamma,
    initial_values,
    moment_integral,
    moment_integral_numeric,
    sign_for,
)

# Every even order gets its Taylor seed from one closed form built out
# of Gamma values; no ODE solve, no quadrature.
print("initial values v^(k)(0), sigma chosen so the solution decays")
for n in (2, 4, 6, 8):
    sigma = sign_for(n)
    iv = initial_values(n, sigma)
    print(f"  n = {n} (sigma = {sigma:+d})")
    for k, v in enumerate(iv.values):
        print(f"    k = {k}: {v!r}")

# n = 2 sanity check against the textbook constants
# Ai(0) = 1/(3^(2/3) Gamma(2/3)) and Ai'(0) = -1/(3^(1/3) Gamma(1/3)).
iv = initial_values(2, 1)
ai0 = 1.0 / (3.0 ** (2.0 / 3.0) * gamma(2.0 / 3.0))
aip0 = -1.0 / (3.0 ** (1.0 / 3.0) * gamma(1.0 / 3.0))
print()
print(f"Ai(0)  closed form {ai0!r} vs seed {iv.values[0]!r}")
print(f"Ai'(0) closed form {aip0!r} vs seed {iv.values[1]!r}")

# Behind the seed sits one integral:
#   I(n, k) = integral_0^inf t^k cos(t^(n+1)/(n+1) + k pi/2) dt,
# which has a Gamma closed form.  The quadrature module can also compute
# it numerically, so the identity doubles as a self-test.
print()
print("moment identity, closed form vs accelerated quadrature")
print(f"{'n':>3} {'k':>3} {'closed form':>24} {'numeric':>24} {'diff':>10}")
for n in (2, 4, 6):
    for k in range(n):
        exact = moment_integral(n, k)
        numeric, resid = moment_integral_numeric(n, k)
        print(f"{n:>3} {k:>3} {exact:>24.16e} {numeric:>24.16e} "
              f"{abs(exact - numeric):>10.2e}")
