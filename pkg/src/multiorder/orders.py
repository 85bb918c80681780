"""Content orders on multipartitions.

Everything is parametrized by a character vector chi of exact rationals, one
entry per component.  The shifted content of a box ``(l, x, y)`` is
``chi[l] + x - y``.  Three relations are provided:

* ``geq`` -- content dominance: the descending content vectors compare
  pointwise (equivalently, a box bijection exists that dominates contents
  pairwise; ``geq_oracle`` keeps the matching formulation for cross-checks);
* ``are_adjacent`` -- the two multipartitions differ by a single skew shape
  moved, as a planar translate, between or within components;
* ``triangle`` -- the transitive closure of "adjacent and geq", reflexive by
  convention.

``sandwich_classify`` reports what the two computable relations force about
the geometric order they bound: ``triangle`` from below, ``geq`` from above.

No floating point is used anywhere; chi entries and contents are
``fractions.Fraction`` values and relation tables hold booleans.
"""
from __future__ import annotations

import base64
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NonGenericChiError
from .partitions import (
    Box,
    Multipartition,
    boxes,
    component_box_sets,
    enumerate_multipartitions,
)

KIND_GEQ = "geq"
KIND_TRIANGLE = "triangle"
KIND_ADJACENCY = "adjacency"
KIND_SANDWICH = "sandwich"
ORDER_KINDS = (KIND_GEQ, KIND_TRIANGLE, KIND_ADJACENCY, KIND_SANDWICH)

FORCED_ABOVE = "forced-above"
FORCED_INCOMPARABLE = "forced-incomparable"
UNDETERMINED = "undetermined"
_TAG_CODES = {FORCED_ABOVE: 1, FORCED_INCOMPARABLE: 2, UNDETERMINED: 3}
_TAG_NAMES = {v: k for k, v in _TAG_CODES.items()}

ContentVector = tuple  # n Fractions, sorted descending


def as_char_vector(chi) -> tuple[Fraction, ...]:
    """Normalize a sequence of ints/Fractions to an exact character vector."""
    out = tuple(Fraction(x) for x in chi)
    if not out:
        raise ValueError("character vector must have at least one entry")
    return out


def _check_pair(lam: Multipartition, mu: Multipartition):
    if lam.r != mu.r:
        raise ValueError(f"component counts differ: {lam.r} vs {mu.r}")
    if lam.n != mu.n:
        raise ValueError(f"sizes differ: {lam.n} vs {mu.n}")


def _check_chi(mp: Multipartition, chi: tuple[Fraction, ...]):
    if len(chi) != mp.r:
        raise ValueError(
            f"character vector has {len(chi)} entries but multipartition has "
            f"{mp.r} components"
        )


@lru_cache(maxsize=None)
def content_offsets(mp: Multipartition) -> tuple[tuple[int, int], ...]:
    """Per box, the pair (component, col - row); chi-independent."""
    return tuple((b.component, b.col - b.row) for b in boxes(mp))


@lru_cache(maxsize=1 << 15)
def _sorted_contents(mp: Multipartition, chi: tuple[Fraction, ...]) -> ContentVector:
    return tuple(sorted((chi[l] + d for l, d in content_offsets(mp)), reverse=True))


def shifted_contents(mp: Multipartition, chi) -> ContentVector:
    """Multiset of shifted contents of all boxes, sorted descending."""
    chi = as_char_vector(chi)
    _check_chi(mp, chi)
    return _sorted_contents(mp, chi)


def is_generic(chi, n: int) -> bool:
    """True iff no difference chi_i - chi_j is an integer in [0, n-1].

    This is exactly the condition under which distinct multipartitions of n
    have distinct content multisets, so the content orders are non-degenerate.
    """
    chi = as_char_vector(chi)
    for i in range(len(chi)):
        for j in range(len(chi)):
            if i == j:
                continue
            d = chi[i] - chi[j]
            if d.denominator == 1 and 0 <= d <= n - 1:
                return False
    return True


def geq(lam: Multipartition, mu: Multipartition, chi) -> bool:
    """Content dominance: descending content vectors compare pointwise."""
    _check_pair(lam, mu)
    chi = as_char_vector(chi)
    _check_chi(lam, chi)
    a = _sorted_contents(lam, chi)
    b = _sorted_contents(mu, chi)
    return all(x >= y for x, y in zip(a, b))


def geq_oracle(lam: Multipartition, mu: Multipartition, chi, cap: int = 6) -> bool:
    """Decide content dominance by bipartite matching instead of sorting.

    A box of ``lam`` may be matched to a box of ``mu`` with content less than
    or equal to its own; dominance holds iff a perfect matching exists.  Kept
    deliberately independent of ``geq`` so the two can guard each other.
    """
    _check_pair(lam, mu)
    chi = as_char_vector(chi)
    _check_chi(lam, chi)
    n = lam.n
    if n > cap:
        raise ValueError(f"oracle size cap exceeded: n={n} > cap={cap}")
    left = [chi[l] + d for l, d in content_offsets(lam)]
    right = [chi[l] + d for l, d in content_offsets(mu)]
    compatible = [[j for j in range(n) if left[i] >= right[j]] for i in range(n)]
    match_of_right = [-1] * n

    def try_assign(i, seen):
        for j in compatible[i]:
            if seen[j]:
                continue
            seen[j] = True
            if match_of_right[j] == -1 or try_assign(match_of_right[j], seen):
                match_of_right[j] = i
                return True
        return False

    matched = 0
    for i in range(n):
        if try_assign(i, [False] * n):
            matched += 1
    return matched == n


@dataclass(frozen=True)
class AdjacencyWitness:
    """The moved skew shape connecting two adjacent multipartitions.

    ``removed`` are the boxes only in the first multipartition, ``added``
    those only in the second; ``offset`` is the planar translation carrying
    removed cells onto added cells.  ``shift`` (present when a chi was
    supplied) is the common drop in shifted content from a removed box to its
    translate; it is the same for every moved box.
    """

    removed: frozenset
    added: frozenset
    offset: tuple[int, int]
    shift: Fraction | None = None

    @property
    def from_component(self) -> int:
        return next(iter(self.removed)).component

    @property
    def to_component(self) -> int:
        return next(iter(self.added)).component

    def reversed(self) -> "AdjacencyWitness":
        dx, dy = self.offset
        return AdjacencyWitness(
            removed=self.added,
            added=self.removed,
            offset=(-dx, -dy),
            shift=None if self.shift is None else -self.shift,
        )


def are_adjacent(lam: Multipartition, mu: Multipartition, chi=None):
    """Witness that lam and mu differ by one translated skew shape, else None.

    Within a single component the difference ``lam minus mu`` is automatically
    a skew shape: it equals the component diagram minus the rowwise minimum of
    the two diagrams, and the rowwise minimum is itself a Young diagram
    contained in both.  So only two things need checking: each side of the
    difference sits in one component, and the two planar cell sets are
    translates of each other.
    """
    _check_pair(lam, mu)
    if lam == mu:
        raise ValueError("adjacency requires two distinct multipartitions")
    removed = added = None
    rem_comp = add_comp = None
    for c in range(lam.r):
        if lam.components[c] == mu.components[c]:
            continue
        sl = component_box_sets(lam)[c]
        sm = component_box_sets(mu)[c]
        only_l = sl - sm
        only_m = sm - sl
        if only_l:
            if removed is not None:
                return None
            removed, rem_comp = only_l, c
        if only_m:
            if added is not None:
                return None
            added, add_comp = only_m, c
    if removed is None or added is None:
        return None
    min_rx = min(x for x, _ in removed)
    min_ry = min(y for _, y in removed)
    min_ax = min(x for x, _ in added)
    min_ay = min(y for _, y in added)
    if {(x - min_rx, y - min_ry) for x, y in removed} != {
        (x - min_ax, y - min_ay) for x, y in added
    }:
        return None
    dx, dy = min_ax - min_rx, min_ay - min_ry
    shift = None
    if chi is not None:
        chi = as_char_vector(chi)
        _check_chi(lam, chi)
        shift = chi[rem_comp] - chi[add_comp] - dx + dy
        # The drop is uniform over the moved cells by the formula above;
        # keep the per-cell assertion as a guard on the witness invariant.
        assert all(
            (chi[rem_comp] + x - y) - (chi[add_comp] + (x + dx) - (y + dy)) == shift
            for x, y in removed
        )
    return AdjacencyWitness(
        removed=frozenset(Box(rem_comp, x, y) for x, y in removed),
        added=frozenset(Box(add_comp, x, y) for x, y in added),
        offset=(dx, dy),
        shift=shift,
    )


def triangle(lam: Multipartition, mu: Multipartition, chi) -> bool:
    """Reachability through single skew-shape moves that each preserve geq.

    Reflexive by convention (the one-step relation is defined only for
    distinct multipartitions, so reflexivity enters only here, through the
    closure).  Any intermediate stop of a chain from lam to mu dominates mu
    and is dominated by lam, so the search is restricted to that interval.
    """
    _check_pair(lam, mu)
    chi = as_char_vector(chi)
    _check_chi(lam, chi)
    if lam == mu:
        return True
    if not geq(lam, mu, chi):
        return False
    universe = enumerate_multipartitions(lam.n, lam.r)
    interval = [
        x for x in universe if geq(lam, x, chi) and geq(x, mu, chi)
    ]
    seen = {lam}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        for cand in interval:
            if cand in seen or not geq(cur, cand, chi):
                continue
            if are_adjacent(cur, cand) is None:
                continue
            if cand == mu:
                return True
            seen.add(cand)
            queue.append(cand)
    return False


def is_asymptotic(chi, n: int) -> bool:
    """True iff consecutive differences chi_i - chi_{i+1} all exceed n - 1."""
    chi = as_char_vector(chi)
    return all(chi[i] - chi[i + 1] > n - 1 for i in range(len(chi) - 1))


def asymptotic_representative(n: int, r: int) -> tuple[Fraction, ...]:
    """A canonical generic vector deep inside the asymptotic chamber."""
    return tuple(
        Fraction((r - i) * (n + 1)) + Fraction(r - i, r) for i in range(1, r + 1)
    )


@lru_cache(maxsize=None)
def _flattened_rows(mp: Multipartition) -> tuple[int, ...]:
    """Row lengths, each component padded with zeros to n slots."""
    n = mp.n
    out = []
    for part in mp.components:
        out.extend(part.rows)
        out.extend([0] * (n - len(part.rows)))
    return tuple(out)


def asymptotic_geq(lam: Multipartition, mu: Multipartition) -> bool:
    """Partial-sum dominance of the flattened row-length vectors.

    Characterizes content dominance whenever chi lies in the asymptotic
    chamber; defined for any pair regardless of chi.
    """
    _check_pair(lam, mu)
    total = 0
    for a, b in zip(_flattened_rows(lam), _flattened_rows(mu)):
        total += a - b
        if total < 0:
            return False
    return True


def _one_box_moves(lam: Multipartition):
    """All multipartitions obtained from lam by moving a single box."""
    for c_from in range(lam.r):
        src = lam.components[c_from]
        for col, row in src.removable_cells():
            reduced = src.remove_cell(col, row)
            for c_to in range(lam.r):
                target = reduced if c_to == c_from else lam.components[c_to]
                for acol, arow in target.addable_cells():
                    if c_to == c_from and (acol, arow) == (col, row):
                        continue
                    comps = list(lam.components)
                    comps[c_from] = reduced
                    comps[c_to] = target.add_cell(acol, arow)
                    yield Multipartition(tuple(comps))


def find_drop_witness(lam: Multipartition, mu: Multipartition, chi):
    """One box move lam -> lam' with lam |> lam' (one step) and lam' >= mu.

    Requires chi in the asymptotic chamber, lam >= mu and lam != mu.  The
    lowermost-removable-box drop into the next component is tried first when
    some component of lam is strictly larger than in mu (sizes equal before
    it); otherwise all one-box moves are scanned in enumeration order.  May
    return None: a missing witness is a reportable finding, not an error.
    """
    _check_pair(lam, mu)
    chi = as_char_vector(chi)
    _check_chi(lam, chi)
    n = lam.n
    if not is_asymptotic(chi, n):
        raise ValueError("chi must lie in the asymptotic chamber")
    if lam == mu:
        raise ValueError("lam and mu must differ")
    if not geq(lam, mu, chi):
        raise ValueError("lam must dominate mu")

    def qualifies(cand):
        return geq(lam, cand, chi) and geq(cand, mu, chi)

    witness = are_adjacent(lam, mu)
    if witness is not None and len(witness.removed) == 1:
        return mu

    drop_component = None
    for k in range(lam.r):
        a, b = lam.components[k].size, mu.components[k].size
        if a == b:
            continue
        if a > b:
            drop_component = k
        break
    if drop_component is not None and drop_component + 1 < lam.r:
        src = lam.components[drop_component]
        col, row = max(src.removable_cells(), key=lambda cr: cr[1])
        comps = list(lam.components)
        comps[drop_component] = src.remove_cell(col, row)
        nxt = comps[drop_component + 1]
        comps[drop_component + 1] = nxt.add_cell(nxt.row_length(0), 0)
        cand = Multipartition(tuple(comps))
        if qualifies(cand):
            return cand

    for cand in _one_box_moves(lam):
        if qualifies(cand):
            return cand
    return None


def sandwich_classify(lam: Multipartition, mu: Multipartition, chi) -> str:
    """What the computable bounds force about the geometric order.

    ``forced-above`` when the lower bound already holds, ``forced-incomparable``
    when even the upper bound fails, ``undetermined`` in between.
    """
    _check_pair(lam, mu)
    chi = as_char_vector(chi)
    _check_chi(lam, chi)
    if not is_generic(chi, lam.n):
        raise NonGenericChiError(
            "sandwich classification needs a generic character vector"
        )
    if triangle(lam, mu, chi):
        return FORCED_ABOVE
    if not geq(lam, mu, chi):
        return FORCED_INCOMPARABLE
    return UNDETERMINED


# ---------------------------------------------------------------------------
# relation tables


def bool_closure(rel: np.ndarray) -> np.ndarray:
    """Transitive closure of a boolean relation by repeated squaring."""
    closed = rel.copy()
    while True:
        nxt = closed | (closed @ closed)
        if np.array_equal(nxt, closed):
            return closed
        closed = nxt


def bool_reduction(rel: np.ndarray) -> np.ndarray:
    """Covering edges of a finite partial order given as a closed relation."""
    strict = rel & ~np.eye(rel.shape[0], dtype=bool)
    return strict & ~(strict @ strict)


@dataclass(frozen=True, eq=False)
class OrderMatrix:
    """A pairwise relation table over every multipartition of fixed (n, r).

    ``rel[a, b]`` says whether universe[a] relates to universe[b].  For the
    sandwich kind ``rel`` holds the forced-above part and ``tags`` the full
    three-way classification.
    """

    universe: tuple[Multipartition, ...]
    kind: str
    rel: np.ndarray
    chi: tuple[Fraction, ...] | None = None
    tags: np.ndarray | None = None

    @property
    def size(self) -> int:
        return len(self.universe)

    def closure(self) -> "OrderMatrix":
        return OrderMatrix(
            universe=self.universe,
            kind=self.kind,
            rel=bool_closure(self.rel),
            chi=self.chi,
            tags=self.tags,
        )

    def reduction(self) -> np.ndarray:
        return bool_reduction(self.rel)

    def signature(self) -> str:
        """Canonical bit string of the table, for chamber deduplication."""
        if self.kind == KIND_SANDWICH:
            data = self.tags.tobytes()
        else:
            data = np.packbits(self.rel, axis=None).tobytes()
        return base64.b64encode(data).decode("ascii")

    def tag_name(self, a: int, b: int) -> str:
        if self.tags is None:
            raise ValueError("this table carries no sandwich tags")
        return _TAG_NAMES[int(self.tags[a, b])]


def content_rank_vectors(
    universe, chi: tuple[Fraction, ...], n: int
) -> np.ndarray:
    """Integer ranks of each content vector inside the chi-ladder.

    Every content is chi_l + d with d an integer in [-(n-1), n-1]; ranking the
    finite ladder of all such values turns content comparisons into integer
    comparisons without losing exactness.
    """
    if n == 0:
        return np.zeros((len(universe), 0), dtype=np.int32)
    ladder = sorted(
        {chi[l] + d for l in range(len(chi)) for d in range(-(n - 1), n)}
    )
    rank = {v: i for i, v in enumerate(ladder)}
    arr = np.empty((len(universe), n), dtype=np.int32)
    for i, mp in enumerate(universe):
        vals = sorted((chi[l] + d for l, d in content_offsets(mp)), reverse=True)
        arr[i] = [rank[v] for v in vals]
    return arr


def geq_matrix_from_ranks(ranks: np.ndarray) -> np.ndarray:
    return (ranks[:, None, :] >= ranks[None, :, :]).all(axis=2)


@lru_cache(maxsize=8)
def adjacency_matrix(n: int, r: int) -> np.ndarray:
    """Symmetric irreflexive table of the adjacency relation; chi-free."""
    universe = enumerate_multipartitions(n, r)
    size = len(universe)
    rel = np.zeros((size, size), dtype=bool)
    for a in range(size):
        for b in range(a + 1, size):
            if are_adjacent(universe[a], universe[b]) is not None:
                rel[a, b] = rel[b, a] = True
    rel.setflags(write=False)
    return rel


def build_order_matrix(n: int, r: int, chi, kind: str) -> OrderMatrix:
    """Tabulate one relation over all multipartitions of (n, r).

    Order kinds (geq, triangle, sandwich) require a generic chi; the
    adjacency kind ignores chi entirely.
    """
    if kind not in ORDER_KINDS:
        raise ValueError(f"unknown order kind: {kind!r}")
    universe = enumerate_multipartitions(n, r)
    if kind == KIND_ADJACENCY:
        return OrderMatrix(universe=universe, kind=kind, rel=adjacency_matrix(n, r))
    chi = as_char_vector(chi)
    if len(chi) != r:
        raise ValueError(f"character vector has {len(chi)} entries, expected {r}")
    if not is_generic(chi, n):
        raise NonGenericChiError(
            f"chi={chi} is not generic for n={n}; order tables need genericity"
        )
    g = geq_matrix_from_ranks(content_rank_vectors(universe, chi, n))
    if kind == KIND_GEQ:
        return OrderMatrix(universe=universe, kind=kind, rel=g, chi=chi)
    edges = adjacency_matrix(n, r) & g
    tri = bool_closure(edges) | np.eye(len(universe), dtype=bool)
    if kind == KIND_TRIANGLE:
        return OrderMatrix(universe=universe, kind=kind, rel=tri, chi=chi)
    tags = np.where(
        tri, _TAG_CODES[FORCED_ABOVE], np.where(~g, _TAG_CODES[FORCED_INCOMPARABLE], _TAG_CODES[UNDETERMINED])
    ).astype(np.uint8)
    return OrderMatrix(universe=universe, kind=kind, rel=tri, chi=chi, tags=tags)
