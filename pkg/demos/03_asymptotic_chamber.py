"""Far apart chi entries collapse everything to partial-sum dominance.

When consecutive entries of chi differ by more than n - 1, both orders agree
with a simple test: flatten all row lengths (n slots per component) and ask
for non-negative partial sums of the difference.  Each strict comparison is
then witnessed by dropping a single box.
"""
from multiorder import (
    asymptotic_geq,
    asymptotic_representative,
    build_order_matrix,
    enumerate_multipartitions,
    find_drop_witness,
    geq,
    is_asymptotic,
    multipartition,
)

n, r = 4, 2
chi = asymptotic_representative(n, r)
print("representative:", tuple(str(x) for x in chi))
print("inside the asymptotic chamber:", is_asymptotic(chi, n))
print()

universe = enumerate_multipartitions(n, r)
g = build_order_matrix(n, r, chi, "geq").rel
t = build_order_matrix(n, r, chi, "triangle").rel
agree = all(
    g[a, b] == t[a, b] == asymptotic_geq(universe[a], universe[b])
    for a in range(len(universe))
    for b in range(len(universe))
)
print(f"all {len(universe)}^2 pairs agree across the three tests:", agree)
print()

lam = multipartition((3, 1), 0)
mu = multipartition(1, (2, 1))
print(f"walking down from {lam} to {mu}:")
cur = lam
while cur != mu:
    cur = find_drop_witness(cur, mu, chi)
    print("  ->", cur)
