# The theta family l -> theta(z + l/d, tau) at a CM point.
#
# At tau = (-7 + i)/25 the family on Z/5Z is critical for 1 + 2i, whatever z is.

import numpy as np

from thetacrit import CMDescriptor, critical_family, estimate_lambda, residual, theta, theta_mass

desc = CMDescriptor.build(5, 1, 4)
print("tau =", desc.tau_string(), "  predicted lambda =", desc.lam)

for z in (0.0, 0.13 + 0.07j, 0.4 - 0.2j):
    f = critical_family(5, desc.tau, z)
    lam = estimate_lambda(f)
    print(f"z={z!s:12s} estimated {lam:.12f}  residual {residual(f, complex(desc.lam)).relative:.1e}")

# %% a generic tau gives nothing critical
f = critical_family(5, 0.1 + 0.8j, 0.2)
lam = estimate_lambda(f)
print(f"generic tau: best guess {lam:.4f}, residual {residual(f, lam).relative:.2e}")

# %% theta itself, against the series mass that sets the rounding scale
tau = 0.37 + 0.01j
z = 0.2 + 0.25j
print("theta =", theta(z, tau))
print("sum of |terms| =", theta_mass(z, tau), "(cancellation factor",
      f"{theta_mass(z, tau) / abs(theta(z, tau)):.1e})")

# %% large |Im z| / Im tau overflows without rescaling; criticality is scale free
far = CMDescriptor.build(25, 1, 24, 1, 49)
g = critical_family(25, far.tau, 0.3j, rescale=True)
print(f"d=25, Im tau={far.tau.im:.2e}: lam {estimate_lambda(g):.10f}, want {far.lam}")
print("largest |value| after rescaling:", np.abs(g.values).max())
