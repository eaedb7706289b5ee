"""Polynomials in noncommuting variables ``x_1, ..., x_n``.

Words are tuples of 1-based letter indices; the empty tuple is the constant 1.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

from .combinatorics import SetPartition
from .lincomb import LinComb
from .textio import format_word

__all__ = [
    "NCPolynomial",
    "word_type",
    "words",
    "expand_m",
    "expand",
    "sigma_act",
    "leading_term",
    "shuffle",
    "hausdorff_derivative",
    "twisted_derivative",
    "apply_operator",
    "scalar_product",
    "vandermonde",
    "power_sum",
    "biword_expand",
    "biword_from_coproduct",
    "biword_mul",
]

Word = tuple[int, ...]


class NCPolynomial(LinComb):
    """A rational linear combination of words over an alphabet of ``n`` letters.

    ``*`` with another polynomial is concatenation; with a number it scales.
    """

    __slots__ = ("n",)

    def __init__(self, terms=(), n: int = 0):
        super().__init__(terms, "x")
        self.n = n
        for w in self.terms:
            if any(not 1 <= i <= n for i in w):
                raise ValueError(f"word {w} uses letters outside 1..{n}")

    @classmethod
    def word(cls, w: Iterable[int], n: int, coeff=1) -> NCPolynomial:
        return cls({tuple(w): coeff}, n)

    @classmethod
    def one(cls, n: int) -> NCPolynomial:
        return cls({(): 1}, n)

    @classmethod
    def _from_terms(cls, template, terms):
        out = super()._from_terms(template, terms)
        out.n = template.n
        return out

    def _merge_basis(self, other):
        if isinstance(other, NCPolynomial) and other.n != self.n and self.terms and other.terms:
            raise ValueError(f"alphabet size mismatch: {self.n} vs {other.n}")
        return "x"

    def __add__(self, other):
        out = super().__add__(other)
        if isinstance(out, NCPolynomial) and isinstance(other, NCPolynomial):
            out.n = max(self.n, other.n)
        return out

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            self._merge_basis(other)
            acc: dict = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    acc[u + v] = acc.get(u + v, 0) + a * b
            return NCPolynomial(acc, max(self.n, other.n))
        return super().__mul__(other)

    def degree_part(self, d: int) -> NCPolynomial:
        return self.filter(lambda w: len(w) == d)

    def __str__(self):
        return self.format(format_word)

    def __repr__(self):
        return f"NCPolynomial({str(self)!r}, n={self.n})"


def words(n: int, d: int) -> list[Word]:
    """All words of length ``d`` over ``1..n`` in lexicographic order."""
    return list(product(range(1, n + 1), repeat=d))


def word_type(w: Sequence[int]) -> SetPartition:
    """The set partition grouping positions that carry equal letters."""
    positions: dict[int, list[int]] = {}
    for p, letter in enumerate(w, start=1):
        positions.setdefault(letter, []).append(p)
    return SetPartition(positions.values())


@lru_cache(maxsize=None)
def _expand_m_terms(A: SetPartition, n: int) -> tuple[Word, ...]:
    label = A.rgs
    return tuple(sorted(tuple(letters[i] for i in label) for letters in permutations(range(1, n + 1), A.length)))


def expand_m(A: SetPartition, n: int) -> NCPolynomial:
    """``m_A[X_n]``: the sum of all words of type ``A`` over ``n`` letters."""
    return NCPolynomial(((w, 1) for w in _expand_m_terms(A, n)), n)


def expand(F: LinComb, n: int) -> NCPolynomial:
    """Realize an NCSym element in ``n`` noncommuting variables."""
    acc: dict = {}
    for A, c in F.items():
        for w in _expand_m_terms(A, n):
            acc[w] = acc.get(w, 0) + c
    return NCPolynomial(acc, n)


def sigma_act(sigma: Sequence[int], P: NCPolynomial) -> NCPolynomial:
    """Relabel letters by the permutation ``i -> sigma[i-1]``."""
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{n}")
    if P.n > n:
        raise ValueError("permutation is smaller than the alphabet")
    return NCPolynomial(((tuple(sigma[i - 1] for i in w), c) for w, c in P.items()), max(P.n, n))


def leading_term(P: LinComb) -> Word:
    """The lexicographically smallest word with nonzero coefficient.

    This follows the convention used for noncommutative symmetric
    functions: the "leading" word is the smallest one, not the largest.
    """
    if not P:
        raise ValueError("the zero polynomial has no leading term")
    return min(P.keys())


@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word) -> dict:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    acc: dict = {}
    for w, c in _shuffle_words(u[1:], v).items():
        key = (u[0],) + w
        acc[key] = acc.get(key, 0) + c
    for w, c in _shuffle_words(u, v[1:]).items():
        key = (v[0],) + w
        acc[key] = acc.get(key, 0) + c
    return acc


def shuffle(u, v, n: int | None = None) -> NCPolynomial:
    """Shuffle product of two words, or bilinearly of two polynomials."""
    if isinstance(u, NCPolynomial) or isinstance(v, NCPolynomial):
        P = u if isinstance(u, NCPolynomial) else NCPolynomial.word(u, n or max(u, default=0))
        Q = v if isinstance(v, NCPolynomial) else NCPolynomial.word(v, n or max(v, default=0))
        acc: dict = {}
        for a, ca in P.items():
            for b, cb in Q.items():
                for w, c in _shuffle_words(a, b).items():
                    acc[w] = acc.get(w, 0) + ca * cb * c
        return NCPolynomial(acc, max(P.n, Q.n))
    u, v = tuple(u), tuple(v)
    n = n if n is not None else max(u + v, default=0)
    return NCPolynomial(_shuffle_words(u, v), n)


def _hausdorff_word(a: int, w: Word) -> dict:
    acc: dict = {}
    for i, letter in enumerate(w):
        if letter == a:
            key = w[:i] + w[i + 1:]
            acc[key] = acc.get(key, 0) + 1
    return acc


def hausdorff_derivative(a: int, P: NCPolynomial) -> NCPolynomial:
    """Delete one occurrence of letter ``a`` in every possible way."""
    acc: dict = {}
    for w, c in P.items():
        for k, v in _hausdorff_word(a, w).items():
            acc[k] = acc.get(k, 0) + c * v
    return NCPolynomial(acc, P.n)


def twisted_derivative(a: int, P: NCPolynomial) -> NCPolynomial:
    """Strip a leading ``a``; words starting with another letter are killed."""
    return NCPolynomial(((w[1:], c) for w, c in P.items() if w and w[0] == a), P.n)


def apply_operator(f: NCPolynomial, mode: str, P: NCPolynomial) -> NCPolynomial:
    """Act on ``P`` by ``f(D)``, where a word ``x_i1 ... x_ik`` becomes ``D_i1 o ... o D_ik``.

    ``mode`` is ``"hausdorff"`` or ``"twisted"``.  The composition applies
    the rightmost letter first, which makes ``<P, Q> = P(d) rev(Q)`` at zero
    hold for the twisted derivative.
    """
    if mode == "hausdorff":
        op = hausdorff_derivative
    elif mode == "twisted":
        op = twisted_derivative
    else:
        raise ValueError(f"unknown derivative mode {mode!r}")
    out = NCPolynomial({}, P.n)
    for w, c in f.items():
        image = P
        for letter in reversed(w):
            image = op(letter, image)
            if not image:
                break
        out = out + image.scale(c)
    return out


def scalar_product(P: LinComb, Q: LinComb) -> Fraction:
    """Pairing for which words are orthonormal."""
    small, big = (P, Q) if len(P) <= len(Q) else (Q, P)
    return sum((c * big[w] for w, c in small.items()), Fraction(0))


def vandermonde(n: int) -> NCPolynomial:
    """``sum_pi sgn(pi) x_n^(pi_n - 1) x_(n-1)^(pi_(n-1) - 1) ... x_1^(pi_1 - 1)``.

    Each variable x_i is raised to ``pi_i - 1``, read from x_n down to x_1, so
    that ``vandermonde(2) == x2 - x1``.
    """
    if n < 1:
        raise ValueError("vandermonde needs n >= 1")
    acc: dict = {}
    for pi in permutations(range(1, n + 1)):
        w: tuple[int, ...] = ()
        for i in range(n, 0, -1):
            w += (i,) * (pi[i - 1] - 1)
        acc[w] = acc.get(w, 0) + _sign(pi)
    return NCPolynomial(acc, n)


def _sign(pi: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(pi)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = pi[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def power_sum(k: int, n: int) -> NCPolynomial:
    """``sum_i x_i^k``, whose Hausdorff operator is the classical ``p_k(d)``."""
    return NCPolynomial((((i,) * k, 1) for i in range(1, n + 1)), n)


# ---------------------------------------------------------------------------
# two commuting alphabets X and Y; a biword is the pair (X-subword, Y-subword)


def biword_expand(F: LinComb, n: int) -> LinComb:
    """``F[X_n, Y_n]`` with ``x_i y_j = y_j x_i``, keyed by ``(x-word, y-word)``.

    Letters ``1..n`` are read as ``x`` and ``n+1..2n`` as ``y``; each word of
    the doubled alphabet is normalized by splitting it into its projections.
    """
    acc: dict = {}
    for A, c in F.items():
        for w in _expand_m_terms(A, 2 * n):
            key = (tuple(i for i in w if i <= n), tuple(i - n for i in w if i > n))
            acc[key] = acc.get(key, 0) + c
    return LinComb(acc, "x⊗y")


def biword_from_coproduct(D: LinComb, n: int) -> LinComb:
    """Realize ``sum c m_A (x) m_B`` as ``sum c m_A[X_n] m_B[Y_n]`` on biwords."""
    acc: dict = {}
    for (A, B), c in D.items():
        for u in _expand_m_terms(A, n):
            for v in _expand_m_terms(B, n):
                acc[(u, v)] = acc.get((u, v), 0) + c
    return LinComb(acc, "x⊗y")


def biword_mul(P: LinComb, Q: LinComb) -> LinComb:
    """Product of biword combinations: concatenate both projections."""
    acc: dict = {}
    for (u1, v1), a in P.items():
        for (u2, v2), b in Q.items():
            key = (u1 + u2, v1 + v2)
            acc[key] = acc.get(key, 0) + a * b
    return LinComb(acc, "x⊗y")
