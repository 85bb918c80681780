"""Partitions, boxes, and multipartitions with deterministic enumeration.

Conventions used throughout the package:

* a partition stores its weakly decreasing row lengths, trailing zeros
  stripped, so ``()`` is the empty partition;
* a box address is ``(component, col, row)`` with the top-left cell of a
  component at ``(col, row) = (0, 0)``, columns growing rightwards and rows
  growing downwards;
* component indices are 0-based in code and 1-based in human-facing text.

All enumeration orders are fixed: relation tables indexed against
``enumerate_multipartitions`` stay stable across runs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple


class Box(NamedTuple):
    """Address of one cell of a multipartition."""

    component: int
    col: int
    row: int


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive row lengths.

    Accepts trailing zeros on input (``Partition((0,))`` is the empty
    partition) but never stores them.
    """

    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(x) for x in self.rows)
        if any(x < 0 for x in rows):
            raise ValueError(f"negative row length in {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def height(self) -> int:
        return len(self.rows)

    def row_length(self, row: int) -> int:
        """Length of the given 0-based row, 0 beyond the last row."""
        return self.rows[row] if 0 <= row < len(self.rows) else 0

    def contains(self, col: int, row: int) -> bool:
        return col >= 0 and row >= 0 and col < self.row_length(row)

    def cells(self) -> Iterator[tuple[int, int]]:
        """All (col, row) cells, row by row."""
        for row, length in enumerate(self.rows):
            for col in range(length):
                yield (col, row)

    def removable_cells(self) -> list[tuple[int, int]]:
        """End-of-row cells whose removal leaves a Young diagram."""
        out = []
        for row, length in enumerate(self.rows):
            if length > self.row_length(row + 1):
                out.append((length - 1, row))
        return out

    def addable_cells(self) -> list[tuple[int, int]]:
        """Cells that can be appended while keeping rows weakly decreasing."""
        out = []
        for row in range(self.height + 1):
            length = self.row_length(row)
            if row == 0 or length < self.row_length(row - 1):
                out.append((length, row))
        return out

    def remove_cell(self, col: int, row: int) -> "Partition":
        if (col, row) not in self.removable_cells():
            raise ValueError(f"cell ({col}, {row}) is not removable from {self.rows}")
        rows = list(self.rows)
        rows[row] -= 1
        return Partition(tuple(rows))

    def add_cell(self, col: int, row: int) -> "Partition":
        if (col, row) not in self.addable_cells():
            raise ValueError(f"cell ({col}, {row}) is not addable to {self.rows}")
        rows = list(self.rows)
        if row == len(rows):
            rows.append(1)
        else:
            rows[row] += 1
        return Partition(tuple(rows))

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.rows) + ")"


@dataclass(frozen=True)
class Multipartition:
    """An ordered tuple of partitions; equality is componentwise."""

    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(
            c if isinstance(c, Partition) else Partition(tuple(c))
            for c in self.components
        )
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(c.size for c in self.components)

    def has_box(self, box: Box) -> bool:
        return 0 <= box.component < self.r and self.components[box.component].contains(
            box.col, box.row
        )

    def __str__(self):
        return "|".join(str(c) for c in self.components)


def multipartition(*components) -> Multipartition:
    """Convenience constructor from row tuples, one per component.

    A bare int is a one-row component (0 meaning empty), so
    ``multipartition(0, (3,), (1, 1), 1)`` spells ((0), (3), (1,1), (1)).
    """
    comps = []
    for rows in components:
        if isinstance(rows, int):
            rows = (rows,) if rows else ()
        comps.append(Partition(tuple(rows)))
    return Multipartition(tuple(comps))


@lru_cache(maxsize=None)
def _partition_rows(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_rows(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse-lexicographic order on row sequences.

    The order starts at ``(n)`` and ends at ``(1, 1, ..., 1)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition(rows) for rows in _partition_rows(n, n))


def _compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_multipartitions(n: int, r: int) -> tuple[Multipartition, ...]:
    """All r-component multipartitions of n.

    Ordered by the size composition (first component size descending, then
    recursively), then by the per-component partition order of
    ``enumerate_partitions``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if r < 1:
        raise ValueError("r must be positive")
    out = []
    for sizes in _compositions(n, r):
        for parts in product(*(enumerate_partitions(k) for k in sizes)):
            out.append(Multipartition(parts))
    return tuple(out)


@lru_cache(maxsize=None)
def multipartition_index(n: int, r: int) -> dict:
    """Index of each multipartition inside ``enumerate_multipartitions(n, r)``."""
    return {m: i for i, m in enumerate(enumerate_multipartitions(n, r))}


@lru_cache(maxsize=None)
def boxes(mp: Multipartition) -> tuple[Box, ...]:
    """All boxes of a multipartition: by component, then row, then column."""
    out = []
    for l, part in enumerate(mp.components):
        for row, length in enumerate(part.rows):
            for col in range(length):
                out.append(Box(l, col, row))
    return tuple(out)


def removable_boxes(part: Partition) -> list[tuple[int, int]]:
    """(col, row) cells of a single partition whose removal leaves a diagram."""
    return part.removable_cells()


@lru_cache(maxsize=None)
def component_box_sets(mp: Multipartition) -> tuple[frozenset, ...]:
    """Per component, the planar (col, row) cell set. Cached; inputs immutable."""
    return tuple(frozenset(part.cells()) for part in mp.components)
