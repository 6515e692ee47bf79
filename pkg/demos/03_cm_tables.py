# Integer data at the associated parameters tau_{k,p} = (k + tau0)/p.

from thetacrit import CMDescriptor, associated_parameters, enumerate_pairs, m0, nk, nk_polynomial, tau_string

for d in (5, 7, 9):
    for a, b in enumerate_pairs(d):
        c2, c1, c0 = nk_polynomial(d, a, b)
        print(f"d={d} (a,b)=({a},{b})  tau0 = {tau_string(d, a, b, 0, 1):16s} N_k = {c2}k^2 {c1:+d}k {c0:+d}")

# %% every p | N_k gives a parameter; the sign is the Jacobi symbol (p / 4k-1)
print()
print(" k  p   N_k  eps  tau                   sigma")
for k, p in associated_parameters(7, 4, 3, (-1, 2), 30):
    desc = CMDescriptor.build(7, 4, 3, k, p)
    print(f"{k:2d} {p:2d} {desc.n_k:5d}  {desc.epsilon:+d}   {desc.tau_string():20s}  {desc.sigma.rows()}")

# %% sigma really maps tau to d^2 tau
desc = CMDescriptor.build(9, 5, 4, 1, 2)
t = complex(desc.tau)
print()
print("sigma(tau) - 81 tau =", abs(desc.sigma.act(t) - 81 * t))
print("N_1 for (9,5,4):", nk(9, 5, 4, 1), " m0:", m0(9, 5, 4))
