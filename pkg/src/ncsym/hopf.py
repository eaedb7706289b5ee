"""Graded connected Hopf algebras on a basis, and NCSym on the monomial basis."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Hashable

from .combinatorics import SetPartition, restrict, shift_concat
from .lincomb import LinComb, bilinear, linear

__all__ = [
    "HopfAlgebra",
    "NCSYM",
    "ncsym_product",
    "ncsym_coproduct",
    "counit",
    "antipode",
    "m",
    "cut",
]


class HopfAlgebra:
    """A graded connected Hopf algebra given by its basis-level structure maps.

    ``product(a, b)`` and ``coproduct(a)`` act on basis keys and return
    :class:`LinComb` values; the latter is keyed by pairs.  The antipode is
    derived from the coproduct through the recursion
    ``S(x) = -sum x' S(x'')`` over all coproduct terms except ``1 (x) x``.
    """

    def __init__(
        self,
        name: str,
        basis: str,
        unit: Hashable,
        product: Callable[[Hashable, Hashable], LinComb],
        coproduct: Callable[[Hashable], LinComb],
    ):
        self.name = name
        self.basis = basis
        self.unit = unit
        self._product = lru_cache(maxsize=None)(product)
        self._coproduct = lru_cache(maxsize=None)(coproduct)
        self._antipode = lru_cache(maxsize=None)(self._antipode_key)

    def __repr__(self):
        return f"HopfAlgebra({self.name!r}, basis={self.basis!r})"

    def one(self) -> LinComb:
        return LinComb.monomial(self.unit, basis=self.basis)

    def basis_element(self, key, coeff=1) -> LinComb:
        return LinComb.monomial(key, coeff, self.basis)

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        return bilinear(self._product, x, y, self.basis)

    def prod(self, *xs: LinComb) -> LinComb:
        out = self.one()
        for x in xs:
            out = self.mul(out, x)
        return out

    def coproduct(self, x: LinComb) -> LinComb:
        return linear(self._coproduct, x, f"{self.basis}⊗{self.basis}")

    def counit(self, x: LinComb):
        return x[self.unit]

    def antipode(self, x: LinComb) -> LinComb:
        return linear(self._antipode, x, self.basis)

    def _antipode_key(self, key) -> LinComb:
        if key == self.unit:
            return self.one()
        out = LinComb(basis=self.basis)
        for (left, right), c in self._coproduct(key).items():
            if left == self.unit:
                continue
            tail = self._antipode(right) if right != self.unit else self.one()
            out = out - self.mul(self.basis_element(left), tail).scale(c)
        return out

    # operations on the tensor square, keyed by pairs

    def tensor_mul(self, X: LinComb, Y: LinComb) -> LinComb:
        """Product in ``A (x) A``: ``(a (x) b)(c (x) d) = ac (x) bd``."""
        acc: dict = {}
        for (a, b), cx in X.items():
            for (c, d), cy in Y.items():
                left = self._product(a, c)
                right = self._product(b, d)
                for k1, v1 in left.items():
                    for k2, v2 in right.items():
                        acc[(k1, k2)] = acc.get((k1, k2), 0) + cx * cy * v1 * v2
        return LinComb(acc, f"{self.basis}⊗{self.basis}")

    def mul_tensor(self, X: LinComb, left: Callable | None = None, right: Callable | None = None) -> LinComb:
        """``mu o (f (x) g)`` applied to a tensor ``X``; ``f``, ``g`` act on elements."""
        out = LinComb(basis=self.basis)
        for (a, b), c in X.items():
            xa = self.basis_element(a)
            xb = self.basis_element(b)
            if left is not None:
                xa = left(xa)
            if right is not None:
                xb = right(xb)
            out = out + self.mul(xa, xb).scale(c)
        return out

    def map_tensor_factor(self, X: LinComb, factor: int, f: Callable[[Hashable], LinComb]) -> LinComb:
        """Apply a key-level map ``f`` (returning a ``LinComb``) to one factor of every key tuple."""
        acc: dict = {}
        for key, c in X.items():
            for k, v in f(key[factor]).items():
                new = key[:factor] + (k,) + key[factor + 1:]
                acc[new] = acc.get(new, 0) + c * v
        return LinComb(acc)

    def coassociativity_sides(self, key) -> tuple[LinComb, LinComb]:
        """Return ``((D (x) id) D(key), (id (x) D) D(key))`` keyed by triples."""
        d = self._coproduct(key)
        lhs: dict = {}
        rhs: dict = {}
        for (a, b), c in d.items():
            for (a1, a2), c1 in self._coproduct(a).items():
                k = (a1, a2, b)
                lhs[k] = lhs.get(k, 0) + c * c1
            for (b1, b2), c2 in self._coproduct(b).items():
                k = (a, b1, b2)
                rhs[k] = rhs.get(k, 0) + c * c2
        return LinComb(lhs), LinComb(rhs)


# ---------------------------------------------------------------------------
# NCSym


def ncsym_product(A: SetPartition, B: SetPartition) -> LinComb:
    """``m_A m_B``: sum of ``m_C`` over all ``C`` whose meet with the cut is ``A|B``.

    Such ``C`` are exactly the partitions obtained from ``A|B`` by merging
    each block of ``A`` with at most one block of the shifted ``B``.
    """
    n = A.size
    right = [tuple(x + n for x in b) for b in B.blocks]
    left = list(A.blocks)
    terms = []

    def assign(i, used, merged):
        if i == len(left):
            rest = [right[j] for j in range(len(right)) if j not in used]
            terms.append(SetPartition(merged + rest))
            return
        assign(i + 1, used, merged + [left[i]])
        for j in range(len(right)):
            if j not in used:
                assign(i + 1, used | {j}, merged + [left[i] + right[j]])

    assign(0, frozenset(), [])
    return LinComb(((C, 1) for C in terms), "m")


def ncsym_coproduct(A: SetPartition) -> LinComb:
    """``sum over block subsets S`` of ``m_{A_S} (x) m_{A_{S^c}}``."""
    idx = range(1, A.length + 1)
    acc: dict = {}
    for k in range(A.length + 1):
        for S in combinations(idx, k):
            Sc = [i for i in idx if i not in S]
            key = (restrict(A, S), restrict(A, Sc))
            acc[key] = acc.get(key, 0) + 1
    return LinComb(acc, "m⊗m")


NCSYM = HopfAlgebra("NCSym", "m", SetPartition(), ncsym_product, ncsym_coproduct)


def m(text_or_partition) -> LinComb:
    """The basis element ``m_A``; accepts a :class:`SetPartition` or its text form."""
    A = text_or_partition
    if not isinstance(A, SetPartition):
        A = SetPartition.parse(str(A))
    return NCSYM.basis_element(A)


def counit(x: LinComb):
    return NCSYM.counit(x)


def antipode(x: LinComb) -> LinComb:
    return NCSYM.antipode(x)


def cut(n: int, k: int) -> SetPartition:
    """The two-block partition ``{1..n | n+1..n+k}`` (blocks dropped when empty)."""
    return shift_concat(SetPartition.one_block(n), SetPartition.one_block(k))
