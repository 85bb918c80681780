"""Skew-shape moves, the move-closure order, and where the two orders split.

Two multipartitions are adjacent when one skew shape slides, as a translate,
to another spot (possibly another component).  Chaining adjacent dominance
steps gives a second, finer order.  Dominance always contains it; this script
shows the smallest instance with four components where the containment is
strict.
"""
from fractions import Fraction as F

from multiorder import (
    are_adjacent,
    enumerate_multipartitions,
    geq,
    multipartition,
    sandwich_classify,
    triangle,
)

a = multipartition((2,))
b = multipartition((1, 1))
w = are_adjacent(a, b, (F(0),))
print(f"{a} and {b} are adjacent: moved {sorted(w.removed)} -> {sorted(w.added)}")
print("content drop of the move:", w.shift)
print()

chi = (F(0), F(1, 2), F(17, 8), F(9, 4))
lam = multipartition(0, (3,), (1, 1), 1)
mu = multipartition((3,), 0, 1, (1, 1))
print("lam =", lam)
print("mu  =", mu)
print("lam >= mu:", geq(lam, mu, chi))
print("lam |> mu:", triangle(lam, mu, chi))
print("what the bounds say about the geometric order:", sandwich_classify(lam, mu, chi))
print()

print("why no move chain can start:")
for cand in enumerate_multipartitions(6, 4):
    if cand == lam or are_adjacent(lam, cand) is None:
        continue
    if not geq(lam, cand, chi):
        continue
    rel = "below mu" if geq(mu, cand, chi) else "incomparable to mu"
    print(f"  one step down to {cand}: {rel}")
