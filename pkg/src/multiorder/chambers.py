"""Chambers of the character-vector parameter space.

The content orders change only when some difference chi_i - chi_j crosses an
integer between -2(n-1) and 2(n-1) (the largest possible gap between two box
offsets), so the parameter space splits into finitely many open cells, plus
two saturated tails per pair beyond that range.  A cell is pinned down by the
saturated floors of all pairwise differences; every cell contains a
representative whose last entry is 0 and whose entries have pairwise distinct
fractional parts, which is how ``enumerate_chamber_reps`` constructs them.

``counterexample_search`` scans each order-distinct chamber for ordered pairs
that content dominance accepts but the move-closure order rejects.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

import numpy as np

from .errors import BudgetExceededError
from .orders import (
    KIND_GEQ,
    adjacency_matrix,
    as_char_vector,
    build_order_matrix,
    content_rank_vectors,
    is_generic,
)
from .partitions import Multipartition, enumerate_multipartitions


@dataclass(frozen=True)
class ChamberSpec:
    """Open-interval difference constraints ``chi_i - chi_j in (lo, hi)``.

    ``constraints`` holds ``(i, j, lo, hi)`` entries with 0-based ``i < j``
    and integer or None (unbounded) endpoints.  Repeated pairs are allowed and
    intersect.
    """

    r: int
    constraints: tuple[tuple[int, int, int | None, int | None], ...] = ()

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        constraints = tuple(tuple(c) for c in self.constraints)
        for i, j, lo, hi in constraints:
            if not (0 <= i < j < self.r):
                raise ValueError(f"constraint indices out of range: ({i}, {j})")
            if lo is not None and hi is not None and lo >= hi:
                raise ValueError(f"empty interval ({lo}, {hi}) for pair ({i}, {j})")
        object.__setattr__(self, "constraints", constraints)


def chamber_representative(spec: ChamberSpec):
    """An exact rational point satisfying every constraint strictly, or None.

    Runs Bellman-Ford on the difference-constraint graph with every strict
    bound tightened by a uniform margin small enough not to cut off any
    feasible cell (integer endpoints guarantee slack at least 1 on every
    non-violating cycle), then recenters each coordinate in its locally
    feasible interval; the last coordinate is pinned at 0.
    """
    r = spec.r
    if r == 1:
        return (Fraction(0),)
    edges = []
    for i, j, lo, hi in spec.constraints:
        if hi is not None:
            edges.append((j, i, Fraction(hi)))  # chi_i - chi_j < hi
        if lo is not None:
            edges.append((i, j, Fraction(-lo)))  # chi_j - chi_i < -lo
    margin = Fraction(1, 2 * (len(edges) + 1))
    dist = [Fraction(0)] * r
    for _ in range(r - 1):
        changed = False
        for u, v, w in edges:
            if dist[u] + w - margin < dist[v]:
                dist[v] = dist[u] + w - margin
                changed = True
        if not changed:
            break
    for u, v, w in edges:
        if dist[u] + w - margin < dist[v]:
            return None
    chi = [x - dist[r - 1] for x in dist]

    for v in range(r - 1):
        lower = None
        upper = None
        for i, j, lo, hi in spec.constraints:
            if i == v:
                if lo is not None:
                    cand = chi[j] + lo
                    lower = cand if lower is None else max(lower, cand)
                if hi is not None:
                    cand = chi[j] + hi
                    upper = cand if upper is None else min(upper, cand)
            elif j == v:
                if hi is not None:
                    cand = chi[i] - hi
                    lower = cand if lower is None else max(lower, cand)
                if lo is not None:
                    cand = chi[i] - lo
                    upper = cand if upper is None else min(upper, cand)
        if lower is not None and upper is not None:
            chi[v] = (lower + upper) / 2
        elif lower is not None:
            chi[v] = lower + Fraction(1, 2)
        elif upper is not None:
            chi[v] = upper - Fraction(1, 2)
    return tuple(chi)


def default_clamp(n: int) -> int:
    """Largest offset gap between two box contents of multipartitions of n."""
    return max(2 * (n - 1), 1)


def _saturate(floor_value: int, clamp: int) -> int:
    return min(max(floor_value, -clamp - 1), clamp)


def _floor_key_builder(r: int, clamp: int):
    """Per fractional-order permutation, a fast integer floor-key function.

    With chi_i = a_i + f_i, all fractional parts distinct and f_{r-1} = 0,
    floor(chi_i - chi_j) is a_i - a_j minus 1 exactly when f_i < f_j.
    """
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]

    def builder(ranks):
        # ranks[i]: fractional rank of component i; the last component is 0.
        full = tuple(ranks) + (0,)

        def key(ints):
            a = tuple(ints) + (0,)
            return tuple(
                _saturate(a[i] - a[j] - (1 if full[i] < full[j] else 0), clamp)
                for i, j in pairs
            )

        return key

    return builder


def _chamber_candidates(r: int, clamp: int):
    """Yield (chi, floor_key) for every candidate cell representative.

    Integer parts range over a window wide enough that after collapsing
    consecutive gaps larger than clamp + 1 (which cannot change any saturated
    floor) every cell still has a representative inside.
    """
    if r == 1:
        yield (Fraction(0),), ()
        return
    window = (r - 1) * (clamp + 2)
    builder = _floor_key_builder(r, clamp)
    for ranks in permutations(range(1, r)):
        key_of = builder(ranks)
        fracs = tuple(Fraction(t, r) for t in ranks)
        for ints in product(range(-window, window + 1), repeat=r - 1):
            chi = tuple(a + f for a, f in zip(ints, fracs)) + (Fraction(0),)
            yield chi, key_of(ints)


def enumerate_chamber_reps(n: int, r: int, clamp: int | None = None):
    """Generic representatives of the order-distinct chambers, in a fixed order.

    Candidates are deduplicated first by their saturated floor pattern and
    then by the signature of their content-dominance table, so two
    representatives are kept only if they induce different relations.
    """
    if clamp is None:
        clamp = default_clamp(n)
    if clamp < 2 * (n - 1):
        raise ValueError(f"clamp {clamp} is below the largest offset gap {2 * (n - 1)}")
    reps = []
    seen_floor = set()
    seen_sig = set()
    for chi, key in _chamber_candidates(r, clamp):
        if key in seen_floor:
            continue
        seen_floor.add(key)
        assert is_generic(chi, n)
        sig = build_order_matrix(n, r, chi, KIND_GEQ).signature()
        if sig in seen_sig:
            continue
        seen_sig.add(sig)
        reps.append(chi)
    return reps


@dataclass(frozen=True)
class CounterexampleReport:
    """An ordered pair accepted by content dominance but not by move closure.

    ``adjacent_below`` lists every one-step move below ``lam`` together with
    its relation to ``mu`` ("below", "above", "incomparable", "equal"), which
    is what shows no move chain can begin.
    """

    n: int
    r: int
    chi: tuple[Fraction, ...]
    lam: Multipartition
    mu: Multipartition
    adjacent_below: tuple[tuple[Multipartition, str], ...]


def _relation_name(forward: bool, backward: bool) -> str:
    if forward and backward:
        return "equal"
    if forward:
        return "above"
    if backward:
        return "below"
    return "incomparable"


def _geq_bitrows(matrix: np.ndarray) -> list[int]:
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _closure_bitrows(order: np.ndarray, succ: list[list[int]]) -> list[int]:
    reach = [0] * len(succ)
    for v in order:
        mask = 1 << int(v)
        for w in succ[v]:
            mask |= reach[w]
        reach[int(v)] = mask
    return reach


def counterexample_search(
    n: int,
    r: int,
    clamp: int | None = None,
    budget: int | None = None,
    symmetry_reduce: bool = False,
) -> list[CounterexampleReport]:
    """Scan every order-distinct chamber for dominance-without-move-closure.

    An empty result certifies that the two combinatorial orders agree on all
    ordered pairs at this (n, r) in every enumerated chamber.  With
    ``symmetry_reduce`` chambers are scanned once per component-relabeling
    orbit; relabeling components is an isomorphism of both orders, so
    emptiness of the reduced scan certifies all chambers.

    ``budget`` caps the number of distinct chambers scanned; crossing it
    raises instead of silently truncating.
    """
    if clamp is None:
        clamp = default_clamp(n)
    if clamp < 2 * (n - 1):
        raise ValueError(f"clamp {clamp} is below the largest offset gap {2 * (n - 1)}")
    universe = enumerate_multipartitions(n, r)
    size = len(universe)
    adj = adjacency_matrix(n, r)
    adj_a, adj_b = np.nonzero(adj)
    neighbors = [np.nonzero(adj[a])[0] for a in range(size)]

    perms = list(permutations(range(r))) if symmetry_reduce else None
    pair_index = {
        (i, j): k
        for k, (i, j) in enumerate(
            (i, j) for i in range(r) for j in range(i + 1, r)
        )
    }

    def canonical(key):
        best = None
        for sigma in perms:
            relabeled = []
            for i in range(r):
                for j in range(i + 1, r):
                    a, b = sigma[i], sigma[j]
                    if a < b:
                        val = key[pair_index[(a, b)]]
                    else:
                        # floor of the negated difference of a generic point
                        val = _saturate(-key[pair_index[(b, a)]] - 1, clamp)
                    relabeled.append(val)
            t = tuple(relabeled)
            if best is None or t < best:
                best = t
        return best

    reports: list[CounterexampleReport] = []
    seen_floor = set()
    seen_sig = set()
    scanned = 0
    for chi, key in _chamber_candidates(r, clamp):
        if symmetry_reduce:
            key = canonical(key)
        if key in seen_floor:
            continue
        seen_floor.add(key)
        ranks = content_rank_vectors(universe, chi, n)
        geq_mat = (ranks[:, None, :] >= ranks[None, :, :]).all(axis=2)
        sig = geq_mat.tobytes()
        if sig in seen_sig:
            continue
        seen_sig.add(sig)
        scanned += 1
        if budget is not None and scanned > budget:
            raise BudgetExceededError(
                f"chamber budget {budget} exceeded at (n={n}, r={r})"
            )
        geq_bits = _geq_bitrows(geq_mat)
        edge_ok = (ranks[adj_a] >= ranks[adj_b]).all(axis=1)
        succ: list[list[int]] = [[] for _ in range(size)]
        for a, b in zip(adj_a[edge_ok], adj_b[edge_ok]):
            succ[int(a)].append(int(b))
        # Strict dominance lowers the rank sum, so ascending sums are a
        # topological order with all edge targets already processed.
        order = np.argsort(ranks.sum(axis=1), kind="stable")
        reach = _closure_bitrows(order, succ)
        for a in range(size):
            viol = geq_bits[a] & ~reach[a]
            while viol:
                low = viol & -viol
                b = low.bit_length() - 1
                viol ^= low
                below = []
                for c in map(int, neighbors[a]):
                    if not (geq_bits[a] >> c) & 1:
                        continue
                    below.append(
                        (
                            universe[c],
                            _relation_name(
                                bool((geq_bits[c] >> b) & 1),
                                bool((geq_bits[b] >> c) & 1),
                            ),
                        )
                    )
                reports.append(
                    CounterexampleReport(
                        n=n,
                        r=r,
                        chi=chi,
                        lam=universe[a],
                        mu=universe[b],
                        adjacent_below=tuple(below),
                    )
                )
    return reports


def sample_generic_chi(n: int, r: int, count: int, seed: int = 0):
    """Deterministic rejection-sampled generic character vectors."""
    import random

    rng = random.Random(seed)
    out = []
    seen = set()
    bound = 3 * max(n, 1)
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10000 * count:
            raise RuntimeError("could not sample enough generic vectors")
        chi = tuple(
            Fraction(rng.randint(-bound, bound), rng.randint(1, 8)) for _ in range(r)
        )
        if chi in seen or not is_generic(chi, n):
            continue
        seen.add(chi)
        out.append(chi)
    return out


def floor_key_of(chi, clamp: int):
    """Saturated floors of all pairwise differences; the cell fingerprint."""
    chi = as_char_vector(chi)
    r = len(chi)
    return tuple(
        _saturate(math.floor(chi[i] - chi[j]), clamp)
        for i in range(r)
        for j in range(i + 1, r)
    )
