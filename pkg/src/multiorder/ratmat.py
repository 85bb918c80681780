"""Small exact-rational matrices.

Sized for the verifier's needs (dimensions up to a few dozen): entries are
``fractions.Fraction``, equality is entrywise, and rank/determinant go through
fraction-free integer elimination after clearing denominators, which keeps
intermediate values small without ever leaving exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    assert rem == 0, "fraction-free elimination produced a non-exact division"
    return q


def _ff_echelon(m: list[list[int]]) -> list[list[int]]:
    """Fraction-free row echelon form; returns the nonzero (pivot) rows.

    Row operations only, so the returned rows span the input row space.
    """
    nrows, ncols = len(m), (len(m[0]) if m else 0)
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for i in range(row + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = _exact_div(
                    m[i][j] * m[row][col] - m[i][col] * m[row][j], prev
                )
            m[i][col] = 0
        prev = m[row][col]
        row += 1
        if row == nrows:
            break
    return m[:row]


def _as_fraction_rows(entries) -> tuple[tuple[Fraction, ...], ...]:
    rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("ragged rows")
    return rows


@dataclass(frozen=True)
class RatMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_fraction_rows(self.entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(n))
                for i in range(n)
            )
        )

    @classmethod
    def from_units(cls, rows: int, cols: int, units) -> "RatMatrix":
        """Matrix with entry 1 at each (row, col) of ``units``, 0 elsewhere."""
        data = [[Fraction(0)] * cols for _ in range(rows)]
        for i, j in units:
            data[i][j] += 1
        return cls(tuple(tuple(row) for row in data))

    @classmethod
    def from_columns(cls, columns) -> "RatMatrix":
        cols = [tuple(Fraction(x) for x in col) for col in columns]
        if not cols:
            return cls(())
        rows = len(cols[0])
        return cls(tuple(tuple(col[i] for col in cols) for i in range(rows)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(tuple(tuple(-a for a in row) for row in self.entries))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch for product: {self.shape} @ {other.shape}"
            )
        cols = list(zip(*other.entries)) if other.entries else []
        return RatMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def _check_same_shape(self, other: "RatMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def apply(self, vec) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * v for a, v in zip(row, vec)) for row in self.entries)

    def nonzero_entries(self):
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                if a != 0:
                    yield (i, j, a)

    def _integer_rows(self) -> list[list[int]]:
        """Rows scaled by their denominator lcm; rank-preserving."""
        out = []
        for row in self.entries:
            scale = lcm(*(a.denominator for a in row)) if row else 1
            out.append([int(a * scale) for a in row])
        return out

    def rank(self) -> int:
        """Rank by fraction-free (Bareiss-style) integer elimination."""
        return len(_ff_echelon(self._integer_rows()))

    def echelon_rows(self) -> "RatMatrix":
        """A fraction-free echelon basis of the row space (integer entries)."""
        return RatMatrix(tuple(tuple(map(Fraction, row)) for row in _ff_echelon(self._integer_rows())))

    def det(self) -> Fraction:
        """Determinant via Bareiss elimination on a denominator-cleared copy."""
        if self.nrows != self.ncols:
            raise ValueError("determinant needs a square matrix")
        n = self.nrows
        if n == 0:
            return Fraction(1)
        m = []
        cleared = Fraction(1)
        for row in self.entries:
            scale = lcm(*(a.denominator for a in row))
            cleared *= scale
            m.append([int(a * scale) for a in row])
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if pivot is None:
                    return Fraction(0)
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = _exact_div(
                        m[i][j] * m[k][k] - m[i][k] * m[k][j], prev
                    )
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1], 1) / cleared
