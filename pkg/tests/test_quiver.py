from fractions import Fraction

import pytest

from multiorder import (
    Box,
    QuiverPoint,
    RatMatrix,
    are_adjacent,
    boxes,
    build_connecting_orbit,
    build_fixed_point,
    check_adhm,
    check_orbit,
    check_stability,
    det_section,
    enumerate_multipartitions,
    multipartition,
    sample_generic_chi,
    section_matrix,
    shifted_contents,
    torus_weights,
)
from oracles import det_by_permutations, rank_by_minors

F = Fraction


# ---------------------------------------------------------------- ratmat


def test_ratmat_det_against_permutation_expansion():
    samples = [
        [[F(1)]],
        [[F(0), F(1)], [F(1), F(0)]],
        [[F(1, 2), F(3)], [F(-2), F(5, 7)]],
        [[F(1), F(2), F(3)], [F(0), F(1, 3), F(4)], [F(-1), F(0), F(2)]],
        [
            [F(1), F(0), F(2), F(-1)],
            [F(3), F(1, 2), F(0), F(1)],
            [F(0), F(2), F(1), F(0)],
            [F(1), F(1), F(1), F(1)],
        ],
    ]
    for rows in samples:
        assert RatMatrix(rows).det() == det_by_permutations(rows)


def test_ratmat_det_empty_and_singular():
    assert RatMatrix(()).det() == 1
    assert RatMatrix([[F(1), F(2)], [F(2), F(4)]]).det() == 0


def test_ratmat_rank_against_minors():
    samples = [
        [[F(0), F(0)], [F(0), F(0)]],
        [[F(1), F(2)], [F(2), F(4)]],
        [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]],
        [[F(1, 2), F(0)], [F(0), F(1, 3)], [F(1), F(1)]],
    ]
    for rows in samples:
        assert RatMatrix(rows).rank() == rank_by_minors(rows)


def test_ratmat_echelon_preserves_row_space():
    m = RatMatrix([[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]])
    e = m.echelon_rows()
    assert e.nrows == m.rank()
    stacked = RatMatrix(m.entries + e.entries)
    assert stacked.rank() == m.rank()


def test_ratmat_ops():
    a = RatMatrix([[F(1), F(2)], [F(3), F(4)]])
    b = RatMatrix.identity(2)
    assert a @ b == a
    assert (a - a).is_zero()
    assert (a + (-a)).is_zero()
    assert a.apply((F(1), F(0))) == (F(1), F(3))
    with pytest.raises(ValueError):
        a @ RatMatrix.zeros(3, 3)


# ---------------------------------------------------------------- fixed points


def test_worked_fixed_point(worked_mp):
    p = build_fixed_point(worked_mp)
    assert p.b1 == RatMatrix.from_units(8, 8, [(1, 0), (7, 6)])
    assert p.b2 == RatMatrix.from_units(8, 8, [(2, 0), (4, 3), (5, 4)])
    assert p.i == RatMatrix.from_units(8, 4, [(0, 0), (3, 2), (6, 3)])
    assert p.j.is_zero()
    assert check_adhm(p) and check_stability(p)


def test_single_box_fixed_point():
    p = build_fixed_point(multipartition(1))
    assert p.b1 == RatMatrix.zeros(1, 1)
    assert p.b2 == RatMatrix.zeros(1, 1)
    assert p.i == RatMatrix([[F(1)]])
    assert p.j == RatMatrix.zeros(1, 1)


def test_empty_fixed_point():
    p = build_fixed_point(multipartition(0, 0))
    assert p.n == 0 and p.r == 2
    assert check_adhm(p) and check_stability(p)


def test_fixed_points_exhaustive_small():
    for n in range(5):
        for r in (1, 2):
            for mp in enumerate_multipartitions(n, r):
                p = build_fixed_point(mp)
                assert check_adhm(p)
                assert check_stability(p)
                assert p.j.is_zero()
                assert (p.b1 @ p.b2 - p.b2 @ p.b1).is_zero()


def test_adhm_failure_example():
    p = QuiverPoint(
        b1=RatMatrix([[F(0), F(1)], [F(0), F(0)]]),
        b2=RatMatrix([[F(0), F(0)], [F(1), F(0)]]),
        i=RatMatrix.zeros(2, 1),
        j=RatMatrix.zeros(1, 2),
    )
    assert not check_adhm(p)


def test_stability_failure_without_framing():
    p = QuiverPoint(
        b1=RatMatrix.zeros(1, 1),
        b2=RatMatrix.zeros(1, 1),
        i=RatMatrix.zeros(1, 1),
        j=RatMatrix.zeros(1, 1),
    )
    assert check_adhm(p)
    assert not check_stability(p)


def test_adhm_shape_mismatch():
    p = QuiverPoint(
        b1=RatMatrix.zeros(2, 2),
        b2=RatMatrix.zeros(2, 2),
        i=RatMatrix.zeros(1, 1),
        j=RatMatrix.zeros(1, 2),
    )
    with pytest.raises(ValueError):
        check_adhm(p)


# ---------------------------------------------------------------- weights


def test_worked_weight_grid(worked_mp, worked_chi):
    table = torus_weights(worked_mp, worked_chi, 1)
    assert table.graded() == (
        (0, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (2, 0, 0),
        (2, 0, 1),
        (2, 0, 2),
        (3, 0, 0),
        (3, 1, 0),
    )
    assert table.collapsed_multiset() == shifted_contents(worked_mp, worked_chi)


def test_weights_collapse_general_k():
    mp = multipartition((2, 1))
    chi = (F(1, 3),)
    table = torus_weights(mp, chi, F(2))
    by_box = {e.box: e.collapsed for e in table.entries}
    assert by_box[Box(0, 1, 0)] == F(1, 3) + 2
    assert by_box[Box(0, 0, 1)] == F(1, 3) - 2
    with pytest.raises(ValueError):
        torus_weights(mp, chi, 0)


def test_weights_match_contents_many_chi():
    for n, r in [(3, 2), (4, 3)]:
        for chi in sample_generic_chi(n, r, 5, seed=3):
            for mp in enumerate_multipartitions(n, r):
                assert torus_weights(mp, chi, 1).collapsed_multiset() == shifted_contents(mp, chi)


# ---------------------------------------------------------------- det sections


def test_det_section_identity_at_own_point():
    for n in range(4):
        for r in (1, 2):
            for mp in enumerate_multipartitions(n, r):
                assert det_section(mp, mp) == 1


def test_det_section_vanishes_elsewhere():
    universe = enumerate_multipartitions(3, 2)
    for a in universe:
        for b in universe:
            value = det_section(a, b)
            assert (value != 0) == (a == b)


def test_det_section_trivial():
    one = multipartition(1)
    assert det_section(one, one) == 1


def test_transition_units_at_fixed_point():
    universe = enumerate_multipartitions(3, 2)
    for at in universe:
        basis = boxes(at)
        for of in universe:
            m = section_matrix(of, at)
            for col, b in enumerate(boxes(of)):
                for row in range(len(basis)):
                    expected = F(1) if basis[row] == b else F(0)
                    assert m[row, col] == expected


def test_section_matrix_size_mismatch():
    with pytest.raises(ValueError):
        section_matrix(multipartition(1), multipartition((2,)))


# ---------------------------------------------------------------- orbits


def test_orbit_single_component_drop():
    lam, mu = multipartition((2,)), multipartition((1, 1))
    chi = (F(0),)
    orbit = build_connecting_orbit(lam, mu, chi)
    assert orbit.shift == 2
    assert orbit.perturbation.b1.is_zero()
    assert list(orbit.perturbation.b2.nonzero_entries()) == [(1, 0, F(1))]
    assert orbit.perturbation.i.is_zero()
    report = check_orbit(orbit, lam, mu, chi)
    assert report.passed and not report.findings


def test_orbit_whole_component():
    lam, mu = multipartition(1, 0), multipartition(0, 1)
    chi = (F(0), F(-1))
    orbit = build_connecting_orbit(lam, mu, chi)
    assert orbit.shift == 1
    assert list(orbit.perturbation.i.nonzero_entries()) == [(0, 1, F(1))]
    assert orbit.perturbation.b1.is_zero() and orbit.perturbation.b2.is_zero()
    report = check_orbit(orbit, lam, mu, chi)
    assert report.passed


def test_orbit_orientation_required():
    lam, mu = multipartition((2,)), multipartition((1, 1))
    with pytest.raises(ValueError):
        build_connecting_orbit(mu, lam, (F(0),))
    with pytest.raises(ValueError):
        build_connecting_orbit(lam, lam, (F(0),))
    with pytest.raises(ValueError):
        build_connecting_orbit(
            multipartition((2,), 0), multipartition(0, (1, 1)), (F(0), F(-9))
        )


def test_orbit_zero_perturbation_rejected():
    lam, mu = multipartition((2,)), multipartition((1, 1))
    chi = (F(0),)
    orbit = build_connecting_orbit(lam, mu, chi)
    hollow = type(orbit)(
        base=orbit.base,
        perturbation=QuiverPoint(
            b1=RatMatrix.zeros(2, 2),
            b2=RatMatrix.zeros(2, 2),
            i=RatMatrix.zeros(2, 1),
            j=RatMatrix.zeros(1, 2),
        ),
        shift=orbit.shift,
        uncovered_border=(),
    )
    with pytest.raises(ValueError):
        check_orbit(hollow, lam, mu, chi)


def test_orbit_every_entry_single_unit():
    chis = sample_generic_chi(4, 2, 3, seed=9)
    universe = enumerate_multipartitions(4, 2)
    for chi in chis:
        for a in universe:
            for b in universe:
                if a == b or are_adjacent(a, b) is None:
                    continue
                w = are_adjacent(a, b, chi)
                if w.shift <= 0:
                    continue
                orbit = build_connecting_orbit(a, b, chi)
                for matrix in (
                    orbit.perturbation.b1,
                    orbit.perturbation.b2,
                    orbit.perturbation.i,
                ):
                    for _, _, value in matrix.nonzero_entries():
                        assert value == 1


def _relabeling_permutation(lam, mu, chi):
    """Map each basis box of mu's fixed point to the matching box of lam's."""
    w = are_adjacent(mu, lam, chi)
    dx, dy = w.offset
    mapping = {}
    for b in boxes(mu):
        if b in w.removed:
            mapping[b] = Box(w.to_component, b.col + dx, b.row + dy)
        else:
            mapping[b] = b
    return mapping


def test_orbit_swap_gives_same_point():
    chi = (F(0), F(-5))
    pairs = [
        (multipartition((3,), 1), multipartition(1, (3,))),
        (multipartition((2,)), multipartition((1, 1))),
        (multipartition((2, 1)), multipartition((1, 1, 1))),
    ]
    for lam, mu in pairs:
        chi_here = chi[: lam.r]
        forward = build_connecting_orbit(lam, mu, chi_here)
        backward = build_connecting_orbit(
            mu, lam, chi_here, require_positive_shift=False
        )
        mapping = _relabeling_permutation(lam, mu, chi_here)
        lam_basis = {b: k for k, b in enumerate(boxes(lam))}
        mu_basis = list(boxes(mu))
        perm = [lam_basis[mapping[b]] for b in mu_basis]
        n = len(mu_basis)
        pi = RatMatrix.from_units(n, n, [(perm[k], k) for k in range(n)])
        pi_inv = RatMatrix.from_units(n, n, [(k, perm[k]) for k in range(n)])
        fw = forward.perturbed
        bw = backward.perturbed
        assert pi @ bw.b1 @ pi_inv == fw.b1
        assert pi @ bw.b2 @ pi_inv == fw.b2
        assert pi @ bw.i == fw.i
        assert backward.shift == -forward.shift


def test_orbit_exhaustive_core_checks():
    for chi in sample_generic_chi(3, 2, 3, seed=21):
        universe = enumerate_multipartitions(3, 2)
        for a in universe:
            for b in universe:
                if a == b or are_adjacent(a, b) is None:
                    continue
                w = are_adjacent(a, b, chi)
                assert w.shift != 0
                if w.shift < 0:
                    continue
                orbit = build_connecting_orbit(a, b, chi)
                report = check_orbit(orbit, a, b, chi)
                assert report.passed, report.findings
