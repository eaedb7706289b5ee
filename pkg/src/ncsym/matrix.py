"""Dense exact matrices: fraction-free determinants and rational kernels."""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["ExactMatrix", "det_exact", "rank", "kernel_basis", "row_reduce"]


class ExactMatrix:
    """Rectangular matrix of ``int`` or ``Fraction`` entries."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        self.entries = [[_exact(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("matrix rows have different lengths")
        self.cols = widths.pop() if widths else (cols or 0)

    @classmethod
    def identity(cls, k: int) -> ExactMatrix:
        return cls([[int(i == j) for j in range(k)] for i in range(k)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> ExactMatrix:
        k = len(values)
        return cls([[values[i] if i == j else 0 for j in range(k)] for i in range(k)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries],
            other.cols,
        )

    def apply(self, v: Sequence) -> list:
        return [sum(a * b for a, b in zip(row, v)) for row in self.entries]

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix([list(col) for col in zip(*self.entries)], self.rows)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self.entries for x in row)

    def to_json(self) -> str:
        return json.dumps([[str(x) for x in row] for row in self.entries])

    @classmethod
    def from_json(cls, text: str) -> ExactMatrix:
        return cls([[Fraction(x) for x in row] for row in json.loads(text)])

    def __repr__(self):
        return f"ExactMatrix({[[str(x) for x in r] for r in self.entries]})"


def _exact(x):
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


def _as_matrix(M) -> ExactMatrix:
    return M if isinstance(M, ExactMatrix) else ExactMatrix(M)


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_exact(M) -> int | Fraction:
    """Exact determinant.  Integral input uses fraction-free Bareiss elimination."""
    M = _as_matrix(M)
    if M.rows != M.cols:
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return 1
    if M.is_integral():
        return _bareiss([row[:] for row in M.entries])
    # clear denominators row by row, then stay in integers
    scale = Fraction(1)
    rows = []
    for row in M.entries:
        d = math.lcm(*(x.denominator for x in row if isinstance(x, Fraction)), 1)
        rows.append([int(x * d) for x in row])
        scale /= d
    value = _bareiss(rows) * scale
    return value.numerator if value.denominator == 1 else value


def row_reduce(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    M = _as_matrix(M)
    a = [[Fraction(x) for x in row] for row in M.entries]
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        p = next((i for i in range(r, M.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pivot_row = a[r]
        nz = [j for j in range(c, M.cols) if pivot_row[j]]
        for i in range(M.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                row = a[i]
                for j in nz:
                    row[j] -= f * pivot_row[j]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return a[:r], pivots


def rank(M) -> int:
    return len(row_reduce(M)[1])


def kernel_basis(M) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column."""
    M = _as_matrix(M)
    reduced, pivots = row_reduce(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * M.cols
        v[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis
