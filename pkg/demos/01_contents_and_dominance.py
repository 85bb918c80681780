"""Shifted contents and the dominance order.

Every box of a multipartition gets the value chi_l + col - row; sorting the
values descending gives a fingerprint of the multipartition, and comparing
fingerprints slot by slot is the dominance order.
"""
from fractions import Fraction as F

from multiorder import geq, is_generic, multipartition, shifted_contents

lam = multipartition((2, 1), 0, (1, 1, 1), (2,))
chi = (F(5), F(2), F(3, 2), F(-2))

print("multipartition:", lam)
print("chi:", tuple(str(x) for x in chi))
print("contents:", [str(c) for c in shifted_contents(lam, chi)])
print()

print("chi is generic for n=2?", is_generic(chi, 2))
print("chi is generic for n=8?", is_generic(chi, 8), "(the gap chi_1 - chi_2 = 3 now matters)")
print()

bigger = multipartition((2, 2), 0, (1, 1), (2,))
print(f"{bigger}  >=  {lam} :", geq(bigger, lam, chi))
print(f"{lam}  >=  {bigger} :", geq(lam, bigger, chi))
