# When does -sqrt(a) - i sqrt(b) occur?
#
# It occurs unless a is a square and -b is a square modulo 4 sqrt(a).
# Bounded searches over (k, p) find the witnesses.

from thetacrit import CMDescriptor, enumerate_pairs, negative_sign_exists, search_negative_sign
from thetacrit.acceptance import BULLETS, bullet_b

for d in (7, 9, 11, 13, 17):
    for a, b in enumerate_pairs(d):
        hit = search_negative_sign(d, a, b)
        where = CMDescriptor.build(d, a, b, *hit).tau_string() if hit else "-"
        print(f"d={d:2d} a={a:2d} b={b:2d}  criterion {negative_sign_exists(a, b)!s:5s}  witness {hit!s:8s} {where}")

# %% the six families with a square
print()
for a in BULLETS:
    ls = [l for l in range(1, 31) if negative_sign_exists(a, bullet_b(a, l))]
    print(f"a={a:2d}, b={BULLETS[a][0]:5s}: l <= 30 with a negative sign: {ls}")
