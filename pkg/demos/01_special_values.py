# Special critical values on Z/dZ: constant tails and quadratic gaussians.
#
# A function f on Z/dZ is lam-critical when sum_l f(k+l) f(k-l) = lam f(k)^2
# for every k. The cheapest solutions are closed forms.

import numpy as np

from thetacrit import constant_tail, dft, gaussian_function, is_critical, quadratic_gaussian, residual
from thetacrit.exact import pretty

# %% the four constant-tail solutions f = (1, alpha, ..., alpha)
for d in (3, 9, 11, 13):
    vals = [pretty(constant_tail(d, v).lambda_exact) for v in ("zero", "one", "plus", "minus")]
    print(f"d={d:2d}  constant tails give {vals}")

# %% the gaussian (-1)^k exp(i pi k^2/d) gives sqrt(d) or i sqrt(d)
for d in (3, 5, 7, 9):
    g = gaussian_function(d)
    print(f"d={d}  lam = {pretty(g.lambda_exact):6s}  residual {g.relative_residual:.1e}")

# %% a non-residue multiplier flips the sign when d is not a square
for u in (1, 2):
    g = quadratic_gaussian(5, u)
    print(f"u={u}: f(k) = exp(2 pi i {u} k^2 / 5) is {pretty(g.lambda_exact)}-critical")

# %% the Fourier transform of a lam-critical function is (d/lam)-critical
g = quadratic_gaussian(7, 3)
print("dual value check:", is_critical(dft(g.f), 7 / g.lam, 1e-9))
print("residual of the dual:", residual(dft(g.f), 7 / g.lam).relative)
print("|lam| <= d:", abs(g.lam) <= 7, np.round(abs(g.lam), 6))
