"""Count LR-consistent triples and spot check the Horn test against LR numbers.

Run: python3 demos/horn_table.py
"""

import itertools

from kronsnp.core import partitions
from kronsnp.horn import horn_positive, lr_consistent_triples
from kronsnp.lr import lr_coeff

for r in range(1, 7):
    print(f"r={r}: {len(lr_consistent_triples(r))} triples")

n = 8
agree = total = 0
for lam in partitions(n, max_len=4):
    for a in range(n + 1):
        for mu, nu in itertools.product(partitions(a, max_len=4), partitions(n - a, max_len=4)):
            total += 1
            agree += horn_positive(lam, mu, nu) == (lr_coeff(lam, mu, nu) > 0)
print(f"|lam| = {n}: Horn test agrees with LR positivity on {agree}/{total} triples")
