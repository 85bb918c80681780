"""Exact verifier for torus-fixed quadruples on the framed-sheaf moduli space.

A point is a quadruple ``(b1, b2, i, j)`` with ``b1, b2`` endomorphisms of an
n-dimensional space V, ``i`` a map from the r-dimensional framing W into V and
``j`` back, subject to the moment-map equation ``[b1, b2] + i j = 0`` and the
stability condition that the smallest b1,b2-invariant subspace containing
``Im(i)`` is all of V.

``build_fixed_point`` realizes the standard fixed quadruple of a
multipartition in the box basis: b1 moves boxes right, b2 moves them down,
``i`` hits each component's corner box, ``j = 0``.  Everything downstream
(weights, determinant sections, connecting-orbit perturbations) is written in
that basis so every check is exact rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .orders import are_adjacent, as_char_vector, content_offsets
from .partitions import Box, Multipartition, boxes
from .ratmat import RatMatrix


@dataclass(frozen=True)
class QuiverPoint:
    """A quadruple of exact matrices, optionally labeled by a box basis."""

    b1: RatMatrix
    b2: RatMatrix
    i: RatMatrix
    j: RatMatrix
    basis: tuple[Box, ...] | None = None

    @property
    def n(self) -> int:
        return self.b1.nrows

    @property
    def r(self) -> int:
        return self.j.nrows

    def __add__(self, other: "QuiverPoint") -> "QuiverPoint":
        return QuiverPoint(
            b1=self.b1 + other.b1,
            b2=self.b2 + other.b2,
            i=self.i + other.i,
            j=self.j + other.j,
            basis=self.basis,
        )

    def is_zero(self) -> bool:
        return (
            self.b1.is_zero()
            and self.b2.is_zero()
            and self.i.is_zero()
            and self.j.is_zero()
        )


def _check_shapes(p: QuiverPoint):
    n = p.b1.nrows
    if p.b1.shape != (n, n) or p.b2.shape != (n, n):
        raise ValueError("b1 and b2 must be square of the same size")
    if n and p.i.nrows != n:
        raise ValueError("i must map the framing into V")
    if p.j.ncols != n:
        raise ValueError("j must map V into the framing")
    if n and p.i.ncols != p.j.nrows:
        raise ValueError("i and j must use the same framing dimension")


def build_fixed_point(mp: Multipartition) -> QuiverPoint:
    """The fixed quadruple of a multipartition in its box basis.

    Basis vectors are the boxes in enumeration order; b1 sends a box to its
    right neighbour when present (else 0), b2 to its lower neighbour; column l
    of i is the unit vector of the corner box of component l (zero if the
    component is empty); j is zero.
    """
    basis = boxes(mp)
    index = {b: k for k, b in enumerate(basis)}
    n, r = len(basis), mp.r
    b1_units = []
    b2_units = []
    for b in basis:
        right = Box(b.component, b.col + 1, b.row)
        down = Box(b.component, b.col, b.row + 1)
        if right in index:
            b1_units.append((index[right], index[b]))
        if down in index:
            b2_units.append((index[down], index[b]))
    i_units = [
        (index[Box(l, 0, 0)], l) for l in range(r) if mp.components[l].size > 0
    ]
    return QuiverPoint(
        b1=RatMatrix.from_units(n, n, b1_units),
        b2=RatMatrix.from_units(n, n, b2_units),
        i=RatMatrix.from_units(n, r, i_units),
        j=RatMatrix.zeros(r, n),
        basis=basis,
    )


def check_adhm(p: QuiverPoint) -> bool:
    """Exact test of the moment-map equation [b1, b2] + i j = 0."""
    _check_shapes(p)
    if p.n == 0:
        return True
    return (p.b1 @ p.b2 - p.b2 @ p.b1 + p.i @ p.j).is_zero()


def check_stability(p: QuiverPoint) -> bool:
    """Does Im(i) generate V under b1 and b2?

    Iterates S <- S + b1 S + b2 S from the column space of i until the rank
    stops growing; ranks via fraction-free elimination.
    """
    _check_shapes(p)
    n = p.n
    if n == 0:
        return True
    span = RatMatrix(tuple(p.i.column(l) for l in range(p.i.ncols))).echelon_rows()
    while True:
        images = [p.b1.apply(v) for v in span.entries]
        images += [p.b2.apply(v) for v in span.entries]
        grown = RatMatrix(span.entries + tuple(images)).echelon_rows()
        if grown.nrows == span.nrows:
            return span.nrows == n
        span = grown


@dataclass(frozen=True)
class WeightEntry:
    """Scaling data of one basis vector.

    The two-parameter grading assigns the vector of box ``(l, x, y)`` the
    framing character l plus x copies of the first scaling character and y of
    the second; collapsing onto the one-parameter subgroup with speed k gives
    ``chi_l + k*(x - y)``.
    """

    box: Box
    framing: int
    phi1: int
    phi2: int
    collapsed: Fraction


@dataclass(frozen=True)
class WeightTable:
    k: Fraction
    entries: tuple[WeightEntry, ...]

    def collapsed_multiset(self) -> tuple[Fraction, ...]:
        return tuple(sorted((e.collapsed for e in self.entries), reverse=True))

    def graded(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((e.framing, e.phi1, e.phi2) for e in self.entries)


def torus_weights(mp: Multipartition, chi, k=1) -> WeightTable:
    """Weight of every basis vector of the fixed point of ``mp``.

    With k = 1 the collapsed weights reproduce the shifted contents.
    """
    chi = as_char_vector(chi)
    if len(chi) != mp.r:
        raise ValueError("character vector length must match component count")
    k = Fraction(k)
    if k == 0:
        raise ValueError("k must be nonzero")
    entries = tuple(
        WeightEntry(
            box=b,
            framing=b.component,
            phi1=b.col,
            phi2=b.row,
            collapsed=chi[b.component] + k * (b.col - b.row),
        )
        for b in boxes(mp)
    )
    return WeightTable(k=k, entries=entries)


def section_matrix(of_mp: Multipartition, at_mp: Multipartition) -> RatMatrix:
    """Columns b1^x b2^y i(w_l) over the boxes of ``of_mp``, at the fixed
    point of ``at_mp``.

    Powers are applied to single columns, never formed as dense matrix
    powers.  At a fixed point b1 and b2 commute, so the application order is
    immaterial.
    """
    if of_mp.r != at_mp.r or of_mp.n != at_mp.n:
        raise ValueError("multipartitions must share (n, r)")
    p = build_fixed_point(at_mp)
    columns = []
    for b in boxes(of_mp):
        v = p.i.column(b.component)
        for _ in range(b.row):
            v = p.b2.apply(v)
        for _ in range(b.col):
            v = p.b1.apply(v)
        columns.append(v)
    if not columns:
        return RatMatrix(())
    return RatMatrix.from_columns(columns)


def det_section(of_mp: Multipartition, at_mp: Multipartition) -> Fraction:
    """Determinant of ``section_matrix``; nonzero exactly on the own point."""
    return section_matrix(of_mp, at_mp).det()


@dataclass(frozen=True)
class ConnectingOrbit:
    """Fixed quadruple plus the rank-one-per-box perturbation toward a
    neighbour.

    ``uncovered_border`` lists moved border boxes that contributed no matrix
    unit because neither relevant neighbour cell is fixed; they are surfaced
    for reporting rather than rejected.
    """

    base: QuiverPoint
    perturbation: QuiverPoint
    shift: Fraction
    uncovered_border: tuple[Box, ...]

    @property
    def perturbed(self) -> QuiverPoint:
        return self.base + self.perturbation


def build_connecting_orbit(
    lam: Multipartition, mu: Multipartition, chi, require_positive_shift: bool = True
) -> ConnectingOrbit:
    """Perturbation of the fixed point of ``lam`` flowing toward ``mu``.

    The pair must be adjacent and oriented so the moved boxes drop in shifted
    content (shift d > 0).  If the moved boxes of ``mu`` make up a whole
    component, the perturbation adds one unit to the corresponding framing
    column of i at the top-left moved box of ``lam``.  Otherwise each moved
    border box b of ``lam`` contributes the matrix units that are present in
    the fixed point of ``mu`` but missing here: a b1 unit from the fixed box
    left of b's counterpart in ``mu``, and a b2 unit from the fixed box above
    it, whenever those cells are fixed.
    """
    chi = as_char_vector(chi)
    witness = are_adjacent(lam, mu, chi)
    if witness is None:
        raise ValueError("multipartitions are not adjacent")
    d = witness.shift
    if require_positive_shift and d <= 0:
        raise ValueError(
            "pair must be oriented so the first argument's moved boxes have "
            f"larger shifted content (shift was {d})"
        )
    base = build_fixed_point(lam)
    index = {b: k for k, b in enumerate(base.basis)}
    n, r = base.n, lam.r
    dx, dy = witness.offset
    to_comp = witness.to_component
    removed = witness.removed
    uncovered: list[Box] = []

    whole_component = len(witness.added) == mu.components[to_comp].size
    if whole_component:
        corner = Box(witness.from_component, -dx, -dy)
        assert corner in removed
        perturbation = QuiverPoint(
            b1=RatMatrix.zeros(n, n),
            b2=RatMatrix.zeros(n, n),
            i=RatMatrix.from_units(n, r, [(index[corner], to_comp)]),
            j=RatMatrix.zeros(r, n),
            basis=base.basis,
        )
        return ConnectingOrbit(base, perturbation, d, ())

    moved_planar = {(b.col, b.row) for b in removed}
    b1_units = []
    b2_units = []
    for b in sorted(removed):
        inner = (b.col - 1, b.row) in moved_planar and (
            b.col,
            b.row - 1,
        ) in moved_planar
        if inner:
            continue
        target_col, target_row = b.col + dx, b.row + dy
        covered = False
        left = Box(to_comp, target_col - 1, target_row)
        if target_col >= 1 and lam.has_box(left) and mu.has_box(left):
            b1_units.append((index[b], index[left]))
            covered = True
        above = Box(to_comp, target_col, target_row - 1)
        if target_row >= 1 and lam.has_box(above) and mu.has_box(above):
            b2_units.append((index[b], index[above]))
            covered = True
        if not covered:
            uncovered.append(b)
    perturbation = QuiverPoint(
        b1=RatMatrix.from_units(n, n, b1_units),
        b2=RatMatrix.from_units(n, n, b2_units),
        i=RatMatrix.zeros(n, r),
        j=RatMatrix.zeros(r, n),
        basis=base.basis,
    )
    return ConnectingOrbit(base, perturbation, d, tuple(uncovered))


@dataclass(frozen=True)
class OrbitReport:
    """Outcome of the orbit checks; failed entries are findings, not crashes."""

    adhm_ok: bool
    stability_ok: bool
    weights_ok: bool
    shift_positive: bool
    shift: Fraction
    findings: tuple[str, ...]
    uncovered_border: tuple[Box, ...]

    @property
    def passed(self) -> bool:
        return (
            self.adhm_ok and self.stability_ok and self.weights_ok and self.shift_positive
        )


def check_orbit(orbit: ConnectingOrbit, lam: Multipartition, mu: Multipartition, chi) -> OrbitReport:
    """Verify the perturbed quadruple and the scaling of the perturbation.

    Checks that base + C satisfies the moment-map equation and stability,
    that every nonzero entry of C rescales with uniform exponent -d under the
    one-parameter subgroup (so the perturbation dies at t -> infinity and
    blows up at t -> 0), and that d > 0.

    A matrix unit from basis vector u to v inside b1 rescales with exponent
    k + wt(u) - wt(v), inside b2 with -k + wt(u) - wt(v); a unit hitting v
    from framing vector w_l inside i rescales with chi_l - wt(v).  Entries
    actually present in a fixed quadruple all have exponent 0 under this rule,
    which is what makes the point fixed.
    """
    chi = as_char_vector(chi)
    C = orbit.perturbation
    if C.is_zero():
        raise ValueError("zero perturbation rejected upstream")
    d = orbit.shift
    findings: list[str] = []

    perturbed = orbit.perturbed
    adhm_ok = check_adhm(perturbed)
    if not adhm_ok:
        findings.append("moment-map equation fails for base + C")
    stability_ok = check_stability(perturbed)
    if not stability_ok:
        findings.append("stability fails for base + C")

    wt = [chi[l] + off for l, off in content_offsets(lam)]
    expected = -d
    weights_ok = True
    for name, matrix, op_weight in (("b1", C.b1, 1), ("b2", C.b2, -1)):
        for row, col, _ in matrix.nonzero_entries():
            expo = op_weight + wt[col] - wt[row]
            if expo != expected:
                weights_ok = False
                findings.append(
                    f"{name} unit {col}->{row} has exponent {expo}, expected {expected}"
                )
    for row, col, _ in C.i.nonzero_entries():
        expo = chi[col] - wt[row]
        if expo != expected:
            weights_ok = False
            findings.append(
                f"i unit w_{col + 1}->{row} has exponent {expo}, expected {expected}"
            )
    if not C.j.is_zero():
        weights_ok = False
        findings.append("perturbation touches j")

    shift_positive = d > 0
    if not shift_positive:
        findings.append(f"shift {d} is not positive")
    return OrbitReport(
        adhm_ok=adhm_ok,
        stability_ok=stability_ok,
        weights_ok=weights_ok,
        shift_positive=shift_positive,
        shift=d,
        findings=tuple(findings),
        uncovered_border=orbit.uncovered_border,
    )
