"""Chamber enumeration and the dominance-vs-closure search.

The orders only change when some difference chi_i - chi_j crosses an integer
in range, so finitely many chambers cover all behaviors.  The search walks
every order-distinct chamber looking for pairs where dominance holds but no
move chain exists.  Small sizes come back clean; four components first split
at n = 5.
"""
from multiorder import (
    ChamberSpec,
    build_order_matrix,
    chamber_representative,
    counterexample_search,
    enumerate_chamber_reps,
)

spec = ChamberSpec(r=2, constraints=((0, 1, 3, 4),))
print("a point with chi_1 - chi_2 in (3, 4):", chamber_representative(spec))
print()

reps = enumerate_chamber_reps(2, 2)
print(f"{len(reps)} order-distinct chambers at n=2, r=2:")
for chi in reps:
    sig = build_order_matrix(2, 2, chi, "geq").signature()
    print(f"  chi = ({str(chi[0]):>5}, {chi[1]}), signature {sig}")
print()

for n, r in [(2, 2), (3, 2), (3, 3)]:
    found = counterexample_search(n, r)
    print(f"search at (n={n}, r={r}): {len(found)} pairs where the orders differ")

print()
print("(n=5, r=4) is the first four-component size where the search finds one;")
print("run it with: multiorder search --n 5 --r 4   (about two minutes)")
