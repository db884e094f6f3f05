"""Check the monomial support of a few Kronecker products for saturation.

Run: python3 demos/saturation.py
"""

from kronsnp.kronecker import MonomialSupport, monomial_support
from kronsnp.snp import snp_check_kron, snp_verdict

for lam, mu, k in [((5, 4, 4), (7, 6), 3), ((4, 4), (4, 4), 4), ((6, 3), (4, 3, 2), 3), ((3, 3), (2, 2, 2), 3)]:
    U = monomial_support(lam, mu, k)
    rep = snp_check_kron(lam, mu, k)
    print(f"{lam} * {mu} in {k} variables: {len(U.points())} exponents, "
          f"{len(U)} up to order, saturated={rep.saturated}")

# a support that is not saturated, for contrast
U = MonomialSupport(2, 2, frozenset({(2, 0)}))
rep = snp_verdict(U)
print("{x^2, y^2}: saturated =", rep.saturated, "missing", rep.missing)
