"""Fixed quadruples, their weights, and the one-parameter orbits.

A multipartition pins down a quadruple (b1, b2, i, j): boxes are basis
vectors, b1 pushes right, b2 pushes down, i hits each component's corner.
The script checks the moment-map equation and stability, shows the torus
weights, evaluates the determinant sections that tell fixed points apart, and
builds the explicit perturbation connecting an adjacent pair.
"""
from fractions import Fraction as F

from multiorder import (
    build_connecting_orbit,
    build_fixed_point,
    check_adhm,
    check_orbit,
    check_stability,
    det_section,
    multipartition,
    torus_weights,
)

lam = multipartition((2, 1), 0, (1, 1, 1), (2,))
p = build_fixed_point(lam)
print("point for", lam)
print("  b1 units:", [(u, v) for v, u, _ in p.b1.nonzero_entries()])
print("  b2 units:", [(u, v) for v, u, _ in p.b2.nonzero_entries()])
print("  i units:", [(w, v) for v, w, _ in p.i.nonzero_entries()])
print("  moment map holds:", check_adhm(p), " stable:", check_stability(p))
print()

chi = (F(5), F(2), F(3, 2), F(-2))
table = torus_weights(lam, chi, 1)
for entry in table.entries:
    parts = [f"chi_{entry.framing + 1}"]
    if entry.phi1:
        parts.append(f"{entry.phi1}*phi1" if entry.phi1 > 1 else "phi1")
    if entry.phi2:
        parts.append(f"{entry.phi2}*phi2" if entry.phi2 > 1 else "phi2")
    print(f"  box {tuple(entry.box)}: {' + '.join(parts)} = {entry.collapsed}")
print()

other = multipartition((2, 2), 0, (1, 1), (2,))
print("det section of", lam, "at its own point:", det_section(lam, lam))
print("det section of", lam, "at", other, ":", det_section(lam, other))
print()

a, b = multipartition((2,)), multipartition((1, 1))
orbit = build_connecting_orbit(a, b, (F(0),))
report = check_orbit(orbit, a, b, (F(0),))
print(f"orbit {a} -> {b}: content drop {orbit.shift}")
print("  perturbation units in b2:", [(u, v) for v, u, _ in orbit.perturbation.b2.nonzero_entries()])
print("  all checks pass:", report.passed)
