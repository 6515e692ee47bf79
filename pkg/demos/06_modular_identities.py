# Modular behaviour of the theta constants and of Phi = theta1(0)/theta0(0).

import cmath
import random

from thetacrit import hecke_sign, phi, psi, theta, transform_theta_constant
from thetacrit.modular import random_level_matrix

tau = 0.21 + 0.83j
f = phi(tau)
print("Phi(tau+1) / Phi(tau) =", phi(tau + 1) / f)
print("Phi(tau+4) - Phi(tau) =", abs(phi(tau + 4) - f))
print("Phi(-1/tau) vs (1-Phi)/(1+Phi):", abs(phi(-1 / tau) - (1 - f) / (1 + f)))
print("Phi(-conj tau) vs conj Phi:", abs(phi(-tau.conjugate()) - f.conjugate()))

# %% Psi lands on the conic x0^2 = x1^2 + x2^2
x0, x1, x2 = psi(tau)
print("conic residual:", abs(x0 ** 2 - x1 ** 2 - x2 ** 2))

# %% transformation law with its eighth-root sign
rng = random.Random(3)
for _ in range(5):
    s = random_level_matrix(rng, 2, max_len=3)
    pred, act = transform_theta_constant(s, tau)
    ratio = act / (cmath.sqrt(s.cocycle(tau)) * theta(0, tau))
    print(f"{s.rows()!s:28s} sign {hecke_sign(s)!s:6s} measured {ratio:.6f}  |pred - act| {abs(pred - act):.1e}")
