"""Invariants and coinvariants of the symmetric group acting on words.

Hilbert series of NCSym_n, of its free generators and of the coinvariant
quotient, the suffix-set basis of that quotient, and graded dimensions of
the two harmonic spaces computed as exact kernels.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    SetPartition,
    count_nonsplitable,
    is_nonsplitable,
    set_partitions,
    split_decompose,
    stirling2,
)
from .hopf import NCSYM
from .lincomb import LinComb
from .series import PowerSeriesTable
from .words import NCPolynomial, apply_operator, expand_m, power_sum, words

__all__ = [
    "hilbert_B",
    "hilbert_W",
    "hilbert_C",
    "hilbert_T",
    "chevalley_series_check",
    "wolf_table",
    "wolf_basis_expand",
    "leading_word",
    "suffix_set",
    "is_suffix_set",
    "coinvariant_basis",
    "suffix_decompositions",
    "mhar_dimension",
    "nchar_dimension",
    "MHAR_BOUNDS",
    "NCHAR_BOUNDS",
]

Word = tuple[int, ...]

# largest (n, d) accepted by the kernel computations
MHAR_BOUNDS = (3, 6)
NCHAR_BOUNDS = (3, 5)


def _check_n(n: int):
    if n < 1:
        raise ValueError("the alphabet size must be at least 1")


def hilbert_B(n: int, max_degree: int) -> PowerSeriesTable:
    """``dim NCSym_n`` by degree: set partitions with at most ``n`` blocks."""
    _check_n(n)
    return PowerSeriesTable(
        [sum(stirling2(m, i) for i in range(min(n, m) + 1)) if m else 1 for m in range(max_degree + 1)],
        max_degree,
    )


def hilbert_W(n: int, max_degree: int) -> PowerSeriesTable:
    """Generating series of the free generators, ``1 - 1/B_n``."""
    return 1 - hilbert_B(n, max_degree).reciprocal()


def hilbert_T(n: int, max_degree: int) -> PowerSeriesTable:
    """``1/(1 - nq)``, the Hilbert series of all words."""
    return PowerSeriesTable.geometric(n, max_degree)


@lru_cache(maxsize=None)
def wolf_table(max_m: int, max_n: int) -> tuple[tuple[int, ...], ...]:
    """``w_{m,n}`` for ``1 <= m <= max_m``, ``1 <= n <= max_n`` by direct enumeration."""
    return tuple(tuple(count_nonsplitable(m, n) for n in range(1, max_n + 1)) for m in range(1, max_m + 1))


def hilbert_C(n: int, max_degree: int) -> PowerSeriesTable:
    """Coinvariant dimensions ``n^k - sum_{1<=i<=k} w_{i,n} n^(k-i)``."""
    _check_n(n)
    w = hilbert_W(n, max_degree)
    return PowerSeriesTable(
        [n**k - sum(w[i] * n ** (k - i) for i in range(1, k + 1)) for k in range(max_degree + 1)],
        max_degree,
    )


def chevalley_series_check(n: int, max_degree: int) -> bool:
    """``B_n C_n = T_n`` coefficientwise through ``max_degree``."""
    return hilbert_B(n, max_degree) * hilbert_C(n, max_degree) == hilbert_T(n, max_degree)


# ---------------------------------------------------------------------------
# Wolf generators and the suffix set


def _truncate(x: LinComb, n: int) -> LinComb:
    return x.filter(lambda A: A.length <= n)


def wolf_basis_expand(B: SetPartition, n: int) -> LinComb:
    """``W_B``: product of the nonsplitable factors of ``B``, keeping ``l(D) <= n``."""
    if B.length > n:
        raise ValueError(f"{B} has more than {n} blocks")
    out = NCSYM.one()
    if B.size == 0:
        return out
    for factor in split_decompose(B):
        out = _truncate(NCSYM.mul(out, NCSYM.basis_element(factor)), n)
    return out


def leading_word(A: SetPartition) -> Word:
    """``LT(m_A[X_n])`` for ``n >= l(A)``: label each block by its rank."""
    return tuple(label + 1 for label in A.rgs)


def is_suffix_set(C) -> bool:
    """No element is a proper suffix of another."""
    C = set(C)
    return not any(w[i:] in C for w in C for i in range(1, len(w)))


def suffix_set(n: int, max_degree: int) -> set[Word]:
    """Leading words of the nonsplitable ``A`` with ``l(A) <= n`` and ``|A| <= max_degree``."""
    _check_n(n)
    C = {
        leading_word(A)
        for m in range(1, max_degree + 1)
        for A in set_partitions(m, n)
        if is_nonsplitable(A)
    }
    if not is_suffix_set(C):
        raise AssertionError(f"leading words for n={n} do not form a suffix set")
    return C


def suffix_decompositions(w: Word, C) -> list[tuple[Word, Word]]:
    """All ways to write ``w = u v`` with ``v`` in ``C``."""
    return [(w[:i], w[i:]) for i in range(len(w)) if w[i:] in C]


def coinvariant_basis(n: int, k: int) -> list[Word]:
    """Degree ``k`` words over ``n`` letters not ending in an element of the suffix set."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    C = suffix_set(n, k) if k else set()
    return [w for w in words(n, k) if not suffix_decompositions(w, C)]


# ---------------------------------------------------------------------------
# harmonic spaces


def _kernel_dimension(operators, n: int, d: int, mode: str) -> int:
    """Dimension of the joint kernel of ``operators`` on degree ``d`` words.

    Each column is the stacked image of one word; the rank is found by
    exact elimination on sparse rows.
    """
    columns = []
    for w in words(n, d):
        image = {}
        for idx, f in enumerate(operators):
            for v, c in apply_operator(f, mode, NCPolynomial.word(w, n)).items():
                image[(idx, v)] = c
        columns.append(image)
    return len(columns) - _sparse_rank(columns)


def _sparse_rank(vectors: list[dict]) -> int:
    """Rank over Q of vectors given as ``{coordinate: value}`` dictionaries."""
    pivots: dict = {}
    r = 0
    for vec in vectors:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            lead = min(v)
            if lead not in pivots:
                inv = 1 / v[lead]
                pivots[lead] = {k: c * inv for k, c in v.items()}
                r += 1
                break
            p = pivots[lead]
            f = v[lead]
            for k, c in p.items():
                new = v.get(k, 0) - f * c
                if new:
                    v[k] = new
                else:
                    v.pop(k, None)
    return r


def mhar_dimension(n: int, d: int) -> int:
    """Dimension of the degree ``d`` part of ``{P : p_k(D) P = 0, 1 <= k <= n}`` (Hausdorff D)."""
    _check_n(n)
    if n > MHAR_BOUNDS[0] or d > MHAR_BOUNDS[1] or d < 0:
        raise ValueError(f"mhar_dimension supports n <= {MHAR_BOUNDS[0]}, 0 <= d <= {MHAR_BOUNDS[1]}")
    ops = [power_sum(k, n) for k in range(1, min(n, d) + 1)]
    return _kernel_dimension(ops, n, d, "hausdorff")


def nchar_dimension(n: int, d: int, generators_only: bool = False) -> int:
    """Dimension of the degree ``d`` part of the joint kernel of all ``m_A(d)`` (twisted d).

    With ``generators_only`` only nonsplitable ``A`` are used; the kernel is
    the same because the remaining ``m_A`` lie in the ideal they generate.
    """
    _check_n(n)
    if n > NCHAR_BOUNDS[0] or d > NCHAR_BOUNDS[1] or d < 0:
        raise ValueError(f"nchar_dimension supports n <= {NCHAR_BOUNDS[0]}, 0 <= d <= {NCHAR_BOUNDS[1]}")
    ops = [
        expand_m(A, n)
        for m in range(1, d + 1)
        for A in set_partitions(m, n)
        if not generators_only or is_nonsplitable(A)
    ]
    return _kernel_dimension(ops, n, d, "twisted")
