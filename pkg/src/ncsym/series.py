"""Truncated power series with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

__all__ = ["PowerSeriesTable"]


class PowerSeriesTable:
    """``sum_k coeffs[k] q^k`` known up to and including degree ``precision``."""

    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs: Iterable, precision: int | None = None):
        coeffs = [_exact(c) for c in coeffs]
        if precision is None:
            precision = len(coeffs) - 1
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        coeffs = coeffs[: precision + 1]
        coeffs += [0] * (precision + 1 - len(coeffs))
        self.coeffs = coeffs
        self.precision = precision

    @classmethod
    def geometric(cls, ratio: int, precision: int) -> PowerSeriesTable:
        """``1/(1 - ratio q)``."""
        return cls([ratio**k for k in range(precision + 1)], precision)

    @classmethod
    def one(cls, precision: int) -> PowerSeriesTable:
        return cls([1], precision)

    def __getitem__(self, k: int):
        if not 0 <= k <= self.precision:
            raise IndexError(f"degree {k} is beyond the precision {self.precision}")
        return self.coeffs[k]

    def __len__(self):
        return self.precision + 1

    def __iter__(self):
        return iter(self.coeffs)

    def _common(self, other: PowerSeriesTable) -> int:
        return min(self.precision, other.precision)

    def __add__(self, other):
        if not isinstance(other, PowerSeriesTable):
            other = PowerSeriesTable([other], self.precision)
        p = self._common(other)
        return PowerSeriesTable([self.coeffs[k] + other.coeffs[k] for k in range(p + 1)], p)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeriesTable([-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeriesTable):
            return PowerSeriesTable([c * other for c in self.coeffs], self.precision)
        p = self._common(other)
        a, b = self.coeffs, other.coeffs
        return PowerSeriesTable([sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(p + 1)], p)

    __rmul__ = __mul__

    def reciprocal(self) -> PowerSeriesTable:
        """``1/f`` by the coefficient recurrence; needs a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = Fraction(1, 1) / a[0]
        out = [inv0]
        for k in range(1, self.precision + 1):
            out.append(-inv0 * sum(a[i] * out[k - i] for i in range(1, k + 1)))
        return PowerSeriesTable(out, self.precision)

    def __eq__(self, other):
        if not isinstance(other, PowerSeriesTable):
            return NotImplemented
        p = self._common(other)
        return self.coeffs[: p + 1] == other.coeffs[: p + 1]

    def __repr__(self):
        return f"PowerSeriesTable({[str(c) for c in self.coeffs]}, precision={self.precision})"


def _exact(c):
    if isinstance(c, float):
        raise TypeError("power series coefficients must be exact")
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c
