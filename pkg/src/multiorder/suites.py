"""Exhaustive verification suites over a full (n, r) universe.

Each suite returns a ``SuiteResult`` whose ``failures`` list is machine
readable; an empty list means every check passed.  The CLI ``verify`` command
and the acceptance tests both run these.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BudgetExceededError
from .chambers import sample_generic_chi
from .orders import (
    KIND_GEQ,
    KIND_TRIANGLE,
    adjacency_matrix,
    as_char_vector,
    asymptotic_geq,
    asymptotic_representative,
    bool_closure,
    build_order_matrix,
    find_drop_witness,
    geq,
    geq_oracle,
    are_adjacent,
    shifted_contents,
)
from .partitions import boxes, enumerate_multipartitions
from .quiver import (
    build_connecting_orbit,
    build_fixed_point,
    check_adhm,
    check_orbit,
    check_stability,
    det_section,
    torus_weights,
)

SUITE_NAMES = ("axioms", "asymptotic", "quiver", "orbit", "oracle")


@dataclass
class SuiteResult:
    suite: str
    n: int
    r: int
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "r": self.r,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures,
            "notes": self.notes,
        }


def _check_budget(n: int, r: int, budget: int | None):
    if budget is None:
        return
    size = len(enumerate_multipartitions(n, r))
    if size * size > budget:
        raise BudgetExceededError(
            f"universe of {size} multipartitions needs {size * size} pair checks, "
            f"budget is {budget}"
        )


def _default_chis(n: int, r: int, seed: int, count: int = 5):
    return [asymptotic_representative(n, r)] + sample_generic_chi(
        n, r, count - 1, seed=seed
    )


def axioms_suite(n: int, r: int, chis=None, seed: int = 0, budget=None) -> SuiteResult:
    """Reflexivity, transitivity, containment, adjacency symmetry, shift
    invariance."""
    _check_budget(n, r, budget)
    result = SuiteResult("axioms", n, r)
    chis = chis or _default_chis(n, r, seed)
    adj = adjacency_matrix(n, r)
    if (adj != adj.T).any():
        result.failures.append({"check": "adjacency-symmetric"})
    if adj.diagonal().any():
        result.failures.append({"check": "adjacency-irreflexive"})
    result.checked += 2
    for chi in chis:
        chi = as_char_vector(chi)
        g = build_order_matrix(n, r, chi, KIND_GEQ)
        t = build_order_matrix(n, r, chi, KIND_TRIANGLE)
        shifted = tuple(x + Fraction(1, 3) for x in chi)
        g2 = build_order_matrix(n, r, shifted, KIND_GEQ)
        t2 = build_order_matrix(n, r, shifted, KIND_TRIANGLE)
        for name, ok in (
            ("geq-reflexive", bool(g.rel.diagonal().all())),
            ("geq-transitive", np.array_equal(bool_closure(g.rel), g.rel)),
            ("triangle-reflexive", bool(t.rel.diagonal().all())),
            ("triangle-transitive", np.array_equal(bool_closure(t.rel), t.rel)),
            ("triangle-implies-geq", bool((~t.rel | g.rel).all())),
            ("geq-shift-invariant", np.array_equal(g.rel, g2.rel)),
            ("triangle-shift-invariant", np.array_equal(t.rel, t2.rel)),
        ):
            result.checked += 1
            if not ok:
                result.failures.append({"check": name, "chi": [str(x) for x in chi]})
    return result


def asymptotic_suite(n: int, r: int, budget=None) -> SuiteResult:
    """In the asymptotic chamber all three order tests agree, and every strict
    comparable pair admits a one-box drop witness."""
    _check_budget(n, r, budget)
    result = SuiteResult("asymptotic", n, r)
    chi = asymptotic_representative(n, r)
    universe = enumerate_multipartitions(n, r)
    g = build_order_matrix(n, r, chi, KIND_GEQ).rel
    t = build_order_matrix(n, r, chi, KIND_TRIANGLE).rel
    for a, lam in enumerate(universe):
        for b, mu in enumerate(universe):
            result.checked += 1
            flat = asymptotic_geq(lam, mu)
            if not (g[a, b] == t[a, b] == flat):
                result.failures.append(
                    {
                        "check": "three-way-agreement",
                        "lam": str(lam),
                        "mu": str(mu),
                        "geq": bool(g[a, b]),
                        "triangle": bool(t[a, b]),
                        "partial-sums": flat,
                    }
                )
                continue
            if g[a, b] and a != b:
                if find_drop_witness(lam, mu, chi) is None:
                    result.failures.append(
                        {"check": "drop-witness", "lam": str(lam), "mu": str(mu)}
                    )
    return result


def quiver_suite(
    n: int, r: int, seed: int = 0, budget=None, det_sections: bool = True
) -> SuiteResult:
    """Fixed-point checks for every multipartition of (n, r), plus the
    determinant-section vanishing pattern over all ordered pairs.

    ``det_sections=False`` skips the quadratic determinant scan, for callers
    that run it separately at a smaller size.
    """
    _check_budget(n, r, budget)
    result = SuiteResult("quiver", n, r)
    universe = enumerate_multipartitions(n, r)
    chis = _default_chis(n, r, seed, count=3)
    for mp in universe:
        p = build_fixed_point(mp)
        checks = {
            "adhm": check_adhm(p),
            "stability": check_stability(p),
            "j-zero": p.j.is_zero(),
            "commutator-zero": (p.b1 @ p.b2 - p.b2 @ p.b1).is_zero(),
        }
        for chi in chis:
            table = torus_weights(mp, chi, 1)
            checks["weights-match-contents"] = (
                table.collapsed_multiset() == shifted_contents(mp, chi)
            )
            if not checks["weights-match-contents"]:
                break
        result.checked += len(checks)
        for name, ok in checks.items():
            if not ok:
                result.failures.append({"check": name, "mp": str(mp)})
    if det_sections:
        for of_mp in universe:
            for at_mp in universe:
                result.checked += 1
                value = det_section(of_mp, at_mp)
                if (value != 0) != (of_mp == at_mp):
                    result.failures.append(
                        {
                            "check": "det-section-support",
                            "of": str(of_mp),
                            "at": str(at_mp),
                            "det": str(value),
                        }
                    )
    return result


def orbit_suite(n: int, r: int, chis=None, seed: int = 0, budget=None) -> SuiteResult:
    """Connecting-orbit checks over every adjacent pair, oriented per chi."""
    _check_budget(n, r, budget)
    result = SuiteResult("orbit", n, r)
    universe = enumerate_multipartitions(n, r)
    adj = adjacency_matrix(n, r)
    chis = [as_char_vector(c) for c in (chis or _default_chis(n, r, seed))]
    pairs = [
        (universe[a], universe[b])
        for a in range(len(universe))
        for b in range(a + 1, len(universe))
        if adj[a, b]
    ]
    for chi in chis:
        for lam, mu in pairs:
            witness = are_adjacent(lam, mu, chi)
            if witness.shift == 0:
                result.failures.append(
                    {"check": "zero-shift", "lam": str(lam), "mu": str(mu)}
                )
                continue
            hi, lo = (lam, mu) if witness.shift > 0 else (mu, lam)
            orbit = build_connecting_orbit(hi, lo, chi)
            report = check_orbit(orbit, hi, lo, chi)
            result.checked += 1
            if not report.passed:
                result.failures.append(
                    {
                        "check": "orbit",
                        "lam": str(hi),
                        "mu": str(lo),
                        "chi": [str(x) for x in chi],
                        "findings": list(report.findings),
                    }
                )
            if report.uncovered_border:
                result.notes.append(
                    {
                        "note": "uncovered-border-boxes",
                        "lam": str(hi),
                        "mu": str(lo),
                        "boxes": [tuple(b) for b in report.uncovered_border],
                    }
                )
    return result


def oracle_suite(n: int, r: int, chis=None, seed: int = 0, budget=None) -> SuiteResult:
    """Sorted-vector dominance against the matching-based oracle."""
    _check_budget(n, r, budget)
    result = SuiteResult("oracle", n, r)
    universe = enumerate_multipartitions(n, r)
    chis = chis or _default_chis(n, r, seed)
    for chi in chis:
        for lam in universe:
            for mu in universe:
                result.checked += 1
                fast = geq(lam, mu, chi)
                slow = geq_oracle(lam, mu, chi, cap=max(6, n))
                if fast != slow:
                    result.failures.append(
                        {
                            "check": "oracle-agreement",
                            "lam": str(lam),
                            "mu": str(mu),
                            "chi": [str(x) for x in chi],
                            "sorted": fast,
                            "matching": slow,
                        }
                    )
    return result


def run_suite(name: str, n: int, r: int, seed: int = 0, chis=None, budget=None) -> SuiteResult:
    if name == "axioms":
        return axioms_suite(n, r, chis=chis, seed=seed, budget=budget)
    if name == "asymptotic":
        return asymptotic_suite(n, r, budget=budget)
    if name == "quiver":
        return quiver_suite(n, r, seed=seed, budget=budget)
    if name == "orbit":
        return orbit_suite(n, r, chis=chis, seed=seed, budget=budget)
    if name == "oracle":
        return oracle_suite(n, r, chis=chis, seed=seed, budget=budget)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
