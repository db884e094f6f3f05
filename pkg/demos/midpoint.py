"""A Kronecker product whose support is not convex, and what doubling does to it.

Run: python3 demos/midpoint.py
"""

from kronsnp.core import kron_product
from kronsnp.kronecker import kron_coeff
from kronsnp.snp import kron_scaling_absorbed

lam = (8, 8)
mu = (5, 3) + (1,) * 8
alpha, beta = (7, 3, 2, 2, 2), (5, 5, 2, 2, 2)
mid = tuple((a + b) // 2 for a, b in zip(alpha, beta))

exp = kron_product(lam, mu)
print(f"s_{lam} * s_{mu} has {len(exp)} terms")
for nu in (alpha, beta, mid):
    print(f"  g({nu}) = {exp[nu]}")

# scaling everything by 2 puts the midpoint back in
g2 = kron_coeff(tuple(2 * x for x in lam), tuple(2 * x for x in mu), tuple(2 * x for x in mid))
print(f"g(2 lam, 2 mu, 2 mid) = {g2}")
print(f"first scale that absorbs the midpoint: {kron_scaling_absorbed(lam, mu, mid, p_max=3)}")
