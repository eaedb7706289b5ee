"""Sym on the monomial and complete bases, NSym on the complete and ribbon bases."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations, product

from .combinatorics import (
    Composition,
    IntegerPartition,
    composition_from_descents,
    descent_set,
    integer_partitions,
)
from .hopf import HopfAlgebra
from .lincomb import LinComb, linear

__all__ = [
    "SYM_M",
    "SYM_H",
    "NSYM_H",
    "NSYM_R",
    "sym_m_product",
    "sym_m_coproduct",
    "sym_h_product",
    "sym_h_coproduct",
    "sym_h_to_m",
    "nsym_h_product",
    "nsym_h_coproduct",
    "ribbon_to_h",
    "h_to_ribbon",
    "ribbon_product",
    "ribbon_coproduct",
    "nsym_e",
]


# ---------------------------------------------------------------------------
# Sym, monomial basis


def _arrangements(parts: tuple[int, ...], length: int) -> set[tuple[int, ...]]:
    padded = parts + (0,) * (length - len(parts))
    return set(permutations(padded))


@lru_cache(maxsize=None)
def sym_m_product(lam: IntegerPartition, mu: IntegerPartition) -> LinComb:
    """``m_lam m_mu = sum r^nu m_nu`` with ``r^nu`` counted over vector pairs."""
    length = len(lam) + len(mu)
    targets = {
        IntegerPartition.from_parts(a + b for a, b in zip(alpha, beta))
        for alpha in _arrangements(tuple(lam), length)
        for beta in _arrangements(tuple(mu), length)
    }
    out = {}
    for nu in targets:
        # count alpha ~ lam supported on the positions of nu with nu - alpha ~ mu
        k = len(nu)
        if len(lam) > k or len(mu) > k:
            continue
        count = 0
        target_mu = sorted(mu, reverse=True)
        for alpha in _arrangements(tuple(lam), k):
            beta = [n - a for n, a in zip(nu, alpha)]
            if min(beta, default=0) >= 0 and sorted((b for b in beta if b), reverse=True) == target_mu:
                count += 1
        if count:
            out[nu] = count
    return LinComb(out, "m")


def sym_m_coproduct(lam: IntegerPartition) -> LinComb:
    """``sum m_mu (x) m_nu`` over multiset splittings ``mu + nu = lam``."""
    counts = sorted(Counter(lam).items(), reverse=True)
    acc = {}
    for taken in product(*(range(c + 1) for _, c in counts)):
        mu = IntegerPartition([p for (p, _), t in zip(counts, taken) for _ in range(t)])
        nu = IntegerPartition([p for (p, c), t in zip(counts, taken) for _ in range(c - t)])
        acc[(mu, nu)] = 1
    return LinComb(acc, "m⊗m")


SYM_M = HopfAlgebra("Sym", "m", IntegerPartition(), sym_m_product, sym_m_coproduct)


# ---------------------------------------------------------------------------
# Sym, complete basis


def sym_h_product(lam: IntegerPartition, mu: IntegerPartition) -> LinComb:
    return LinComb.monomial(IntegerPartition.from_parts(tuple(lam) + tuple(mu)), basis="h")


def sym_h_coproduct(lam: IntegerPartition) -> LinComb:
    acc = {(IntegerPartition(), IntegerPartition()): 1}
    for part in lam:
        new = {}
        for (a, b), c in acc.items():
            for k in range(part + 1):
                key = (IntegerPartition.from_parts(tuple(a) + (k,)),
                       IntegerPartition.from_parts(tuple(b) + (part - k,)))
                new[key] = new.get(key, 0) + c
        acc = new
    return LinComb(acc, "h⊗h")


SYM_H = HopfAlgebra("Sym", "h", IntegerPartition(), sym_h_product, sym_h_coproduct)


@lru_cache(maxsize=None)
def _h_single_in_m(n: int) -> LinComb:
    return LinComb(((lam, 1) for lam in integer_partitions(n)), "m")


def sym_h_to_m(x: LinComb) -> LinComb:
    """Expand an element of the complete basis into monomials."""

    def expand(lam):
        return SYM_M.prod(*(_h_single_in_m(p) for p in lam))

    return linear(expand, x, "m")


# ---------------------------------------------------------------------------
# NSym, complete basis


def nsym_h_product(alpha: Composition, beta: Composition) -> LinComb:
    return LinComb.monomial(alpha + beta, basis="h")


def nsym_h_coproduct(alpha: Composition) -> LinComb:
    acc = {(Composition(), Composition()): 1}
    for part in alpha:
        new = {}
        for (a, b), c in acc.items():
            for k in range(part + 1):
                key = (a + ((k,) if k else ()), b + ((part - k,) if part - k else ()))
                new[key] = new.get(key, 0) + c
        acc = new
    return LinComb(acc, "h⊗h")


NSYM_H = HopfAlgebra("NSym", "h", Composition(), nsym_h_product, nsym_h_coproduct)


# ---------------------------------------------------------------------------
# NSym, ribbon basis


@lru_cache(maxsize=None)
def _ribbon_to_h_key(alpha: Composition) -> LinComb:
    n, D = sum(alpha), sorted(descent_set(alpha))
    acc = {}
    for k in range(len(D) + 1):
        for sub in combinations(D, k):
            beta = composition_from_descents(sub, n)
            acc[beta] = (-1) ** (len(alpha) - len(beta))
    return LinComb(acc, "h")


@lru_cache(maxsize=None)
def _h_to_ribbon_key(alpha: Composition) -> LinComb:
    n, D = sum(alpha), sorted(descent_set(alpha))
    return LinComb(
        ((composition_from_descents(sub, n), 1) for k in range(len(D) + 1) for sub in combinations(D, k)),
        "R",
    )


def ribbon_to_h(x: LinComb | Composition) -> LinComb:
    """``R_alpha = sum over beta coarser than alpha of (-1)^(l(alpha)-l(beta)) h_beta``."""
    if isinstance(x, Composition):
        return _ribbon_to_h_key(x)
    return linear(_ribbon_to_h_key, x, "h")


def h_to_ribbon(x: LinComb | Composition) -> LinComb:
    """Inverse change of basis: ``h_alpha = sum over beta coarser than alpha of R_beta``."""
    if isinstance(x, Composition):
        return _h_to_ribbon_key(x)
    return linear(_h_to_ribbon_key, x, "R")


def ribbon_product(alpha: Composition, beta: Composition) -> LinComb:
    """``R_alpha R_beta = R_(alpha |> beta) + R_(alpha . beta)`` for nonempty compositions."""
    if not alpha or not beta:
        raise ValueError("the ribbon product rule needs nonempty compositions")
    near = Composition(alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:])
    return LinComb({near: 1, alpha + beta: 1}, "R")


def _ribbon_product_with_unit(alpha: Composition, beta: Composition) -> LinComb:
    if not alpha or not beta:
        return LinComb.monomial(alpha + beta, basis="R")
    return ribbon_product(alpha, beta)


def ribbon_coproduct(alpha: Composition) -> LinComb:
    acc = {}
    for (a, b), c in NSYM_H.coproduct(ribbon_to_h(alpha)).items():
        for ka, va in _h_to_ribbon_key(a).items():
            for kb, vb in _h_to_ribbon_key(b).items():
                acc[(ka, kb)] = acc.get((ka, kb), 0) + c * va * vb
    return LinComb(acc, "R⊗R")


NSYM_R = HopfAlgebra("NSym", "R", Composition(), _ribbon_product_with_unit, ribbon_coproduct)


def nsym_e(n: int) -> LinComb:
    """The elementary generator ``e_n = R_(1^n)`` in the complete basis."""
    return ribbon_to_h(Composition([1] * n))
