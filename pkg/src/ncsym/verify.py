"""Exhaustive verification suites behind ``ncsym verify``.

Every suite returns a report ``{"suite", "status", "checks"}`` where each check
is ``{"check", "degree", "status"}`` plus ``"counterexample"`` on failure and
``"value"`` when a number is worth showing.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Iterable

from .classical import NSYM_H, NSYM_R, SYM_M, ribbon_product
from .combinatorics import (
    Composition,
    IntegerPartition,
    SetPartition,
    canonical_from_composition,
    compositions,
    from_ribbon_composition,
    has_crossings,
    ribbon_composition,
    set_partitions,
)
from .hopf import NCSYM
from .invariants import (
    chevalley_series_check,
    hilbert_C,
    hilbert_W,
    mhar_dimension,
    nchar_dimension,
    wolf_table,
)
from .lincomb import LinComb
from .morphisms import (
    canonical_coefficient,
    chi_ncsym,
    diagram_report,
    inclusion_I,
    inclusion_of_e,
    iota,
    lift,
    magic_determinant,
    ncsym2_product,
    rho_quotient,
    zeta,
    zeta_support,
)
from .series import PowerSeriesTable
from .words import apply_operator, power_sum, vandermonde

__all__ = ["SUITES", "run_suite", "Report"]

Report = dict


class _Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks: list[dict] = []

    def first_failure(self, name: str, degree, cases: Iterable, test: Callable, show=str):
        """Run ``test`` on every case; record the first failing case, if any."""
        for case in cases:
            if not test(case):
                self.add(name, degree, False, show(case))
                return
        self.add(name, degree, True)

    def add(self, name: str, degree, ok: bool, counterexample=None, value=None):
        entry = {"check": name, "degree": degree, "status": "pass" if ok else "fail"}
        if value is not None:
            entry["value"] = value
        if not ok and counterexample is not None:
            entry["counterexample"] = counterexample
        self.checks.append(entry)

    def report(self) -> Report:
        ok = all(c["status"] == "pass" for c in self.checks)
        return {"suite": self.suite, "status": "pass" if ok else "fail", "checks": self.checks}


def _partitions_of(m: int) -> list[SetPartition]:
    return list(set_partitions(m))


def _size_tuples(total: int, parts: int) -> list[tuple[int, ...]]:
    """Tuples of ``parts`` positive sizes summing to at most ``total``."""
    return [t for t in cartesian(range(1, total + 1), repeat=parts) if sum(t) <= total]


# ---------------------------------------------------------------------------
# NCSym Hopf axioms


def _basis_tuples(total: int, parts: int):
    for sizes in _size_tuples(total, parts):
        yield from cartesian(*(_partitions_of(s) for s in sizes))


def _show(keys) -> str:
    return " , ".join(f"m{{{k}}}" for k in keys)


def hopf_suite(degree: int = 5) -> Report:
    """Associativity and coassociativity through ``degree + 1``, compatibility and antipode through ``degree``."""
    rec = _Recorder("hopf")
    m = NCSYM.basis_element

    def associative(t):
        a, b, c = (m(x) for x in t)
        return NCSYM.mul(NCSYM.mul(a, b), c) == NCSYM.mul(a, NCSYM.mul(b, c))

    rec.first_failure("associativity", degree + 1, _basis_tuples(degree + 1, 3), associative, _show)

    def coassociative(A):
        lhs, rhs = NCSYM.coassociativity_sides(A)
        return lhs == rhs

    every = [A for s in range(degree + 2) for A in _partitions_of(s)]
    rec.first_failure("coassociativity", degree + 1, every, coassociative, lambda A: f"m{{{A}}}")

    def compatible(t):
        a, b = (m(x) for x in t)
        return NCSYM.coproduct(NCSYM.mul(a, b)) == NCSYM.tensor_mul(NCSYM.coproduct(a), NCSYM.coproduct(b))

    rec.first_failure("coproduct is multiplicative", degree, _basis_tuples(degree, 2), compatible, _show)

    def product_constants(t):
        return all(c == 1 for c in NCSYM.mul(m(t[0]), m(t[1])).terms.values())

    rec.first_failure("product coefficients are 0/1", degree, _basis_tuples(degree, 2), product_constants, _show)

    smaller = [A for s in range(degree + 1) for A in _partitions_of(s)]

    def coproduct_constants(A):
        return all(c > 0 and c.denominator == 1 for c in NCSYM.coproduct(m(A)).terms.values())

    rec.first_failure("coproduct coefficients are positive integers", degree, smaller, coproduct_constants,
                      lambda A: f"m{{{A}}}")

    def antipode_law(side):
        def test(A):
            x = m(A)
            if side == "left":
                lhs = NCSYM.mul_tensor(NCSYM.coproduct(x), left=NCSYM.antipode)
            else:
                lhs = NCSYM.mul_tensor(NCSYM.coproduct(x), right=NCSYM.antipode)
            return lhs == NCSYM.one().scale(NCSYM.counit(x))

        return test

    rec.first_failure("mu (S x id) Delta = u epsilon", degree, smaller, antipode_law("left"), lambda A: f"m{{{A}}}")
    rec.first_failure("mu (id x S) Delta = u epsilon", degree, smaller, antipode_law("right"), lambda A: f"m{{{A}}}")
    return rec.report()


# ---------------------------------------------------------------------------
# morphism diagram


def diagram_suite(degree: int = 5) -> Report:
    rec = _Recorder("diagram")
    for entry in diagram_report(degree):
        rec.checks.append(entry)

    def inclusion_multiplicative(t):
        a, b = (NSYM_H.basis_element(x) for x in t)
        return inclusion_I(NSYM_H.mul(a, b)) == NCSYM.mul(inclusion_I(a), inclusion_I(b))

    pairs = [(a, b) for i, j in _size_tuples(degree, 2) for a in compositions(i) for b in compositions(j)]
    rec.first_failure("I is multiplicative on h_alpha h_beta", degree, pairs, inclusion_multiplicative,
                      lambda t: f"h{t[0]} h{t[1]}")

    def inclusion_comultiplicative(alpha):
        x = NSYM_H.basis_element(alpha)
        image = NSYM_H.coproduct(x)
        acc: dict = {}
        for (a, b), c in image.items():
            for ka, va in inclusion_I(NSYM_H.basis_element(a)).items():
                for kb, vb in inclusion_I(NSYM_H.basis_element(b)).items():
                    acc[(ka, kb)] = acc.get((ka, kb), 0) + c * va * vb
        return NCSYM.coproduct(inclusion_I(x)) == LinComb(acc, "m⊗m")

    comps = [a for n in range(1, degree + 1) for a in compositions(n)]
    rec.first_failure("Delta o I = (I x I) o Delta on h_alpha", degree, comps, inclusion_comultiplicative,
                      lambda a: f"h{a}")

    def coefficient_lemma(alpha):
        image = inclusion_I(NSYM_H.basis_element(alpha))
        return all(
            image[canonical_from_composition(beta)] == canonical_coefficient(alpha, beta)
            for beta in compositions(sum(alpha))
        )

    rec.first_failure("coefficient of m_A(beta) in I(h_alpha) is (alpha u beta)!/alpha!", degree, comps,
                      coefficient_lemma, lambda a: f"h{a}")

    def chi_hopf(t):
        a, b = (NCSYM.basis_element(x) for x in t)
        return chi_ncsym(NCSYM.mul(a, b)) == SYM_M.mul(chi_ncsym(a), chi_ncsym(b))

    rec.first_failure("chi is multiplicative on NCSym", degree, _basis_tuples(degree, 2), chi_hopf, _show)

    def chi_comultiplicative(A):
        x = NCSYM.basis_element(A)
        acc: dict = {}
        for (a, b), c in NCSYM.coproduct(x).items():
            for ka, va in chi_ncsym(NCSYM.basis_element(a)).items():
                for kb, vb in chi_ncsym(NCSYM.basis_element(b)).items():
                    acc[(ka, kb)] = acc.get((ka, kb), 0) + c * va * vb
        return SYM_M.coproduct(chi_ncsym(x)) == LinComb(acc, "m⊗m")

    every = [A for s in range(1, degree + 1) for A in _partitions_of(s)]
    rec.first_failure("(chi x chi) o Delta = Delta o chi on NCSym", degree, every, chi_comultiplicative,
                      lambda A: f"m{{{A}}}")

    if degree >= 3:
        expected = LinComb(
            {
                SetPartition.parse("1|2|3"): Fraction(1, 6),
                SetPartition.parse("13|2"): Fraction(1, 3),
                SetPartition.parse("12|3"): Fraction(-1, 6),
                SetPartition.parse("1|23"): Fraction(-1, 6),
            },
            "m",
        )
        got = inclusion_of_e(3)
        rec.add("I(e_3) expansion", 3, got == expected, str(got))
        lifted = lift(SYM_M.basis_element(IntegerPartition((1, 1, 1))))
        rec.add("I(e_3) differs from the lift of e_3", 3, got != lifted, str(lifted))
        rho_ok, witness = rho_coalgebra_witness()
        rec.add("rho is not a coalgebra morphism on I(h_3)", 3, rho_ok, witness)
    return rec.report()


def rho_coalgebra_witness(n: int = 3) -> tuple[bool, str]:
    """Return whether ``Delta rho I(h_n)`` and ``(rho x rho) Delta I(h_n)`` differ, and the difference."""
    x = inclusion_I(NSYM_H.basis_element(Composition([n])))
    lhs = NCSYM.coproduct(rho_quotient(x))
    rhs = NCSYM.coproduct(x).filter(lambda k: not any(has_crossings(p) for p in k))
    diff = lhs - rhs
    return diff != 0, str(diff)


# ---------------------------------------------------------------------------
# iota and zeta


def iota_suite(degree: int = 8) -> Report:
    """Dimensions and bijectivity through ``degree``; products through ``degree - 1``."""
    rec = _Recorder("iota")
    for n in range(1, degree + 1):
        two_block = list(set_partitions(n, 2))
        images = {ribbon_composition(A) for A in two_block}
        ok = len(two_block) == 2 ** (n - 1) == len(compositions(n)) and images == set(compositions(n))
        rec.add("dim NCSym_2 = dim NSym = 2^(n-1) and iota is a bijection", n, ok, value=len(two_block))
        back = all(from_ribbon_composition(ribbon_composition(A)) == A for A in two_block)
        rec.add("c(A) inverts to A", n, back)

    cap = max(degree - 1, 1)
    pairs = [
        (A, B)
        for i, j in _size_tuples(cap, 2)
        for A in set_partitions(i, 2)
        for B in set_partitions(j, 2)
    ]

    def morphism(t):
        A, B = t
        return iota(ncsym2_product(A, B)) == ribbon_product(ribbon_composition(A), ribbon_composition(B))

    rec.first_failure("iota(m_A m_B) = R_c(A) R_c(B)", cap, pairs, morphism, _show)

    def specialization(t):
        A, B = t
        full = NCSYM.mul(NCSYM.basis_element(A), NCSYM.basis_element(B)).filter(lambda C: C.length <= 2)
        return full == ncsym2_product(A, B)

    rec.first_failure("two-variable product = NCSym product truncated to 2 blocks", cap, pairs, specialization, _show)
    return rec.report()


def zeta_suite(degree: int = 5) -> Report:
    rec = _Recorder("zeta")
    pairs = [(a, b) for i, j in _size_tuples(degree, 2) for a in compositions(i) for b in compositions(j)]

    def morphism(t):
        a, b = t
        left = zeta(NSYM_R.mul(NSYM_R.basis_element(a), NSYM_R.basis_element(b)))
        right = NCSYM.mul(zeta(NSYM_R.basis_element(a)), zeta(NSYM_R.basis_element(b)))
        return left == right

    rec.first_failure("zeta(R_a R_b) = zeta(R_a) zeta(R_b)", degree, pairs, morphism, lambda t: f"R{t[0]} R{t[1]}")

    for n in range(1, degree + 1):
        supports = [frozenset(zeta_support(a)) for a in compositions(n)]
        disjoint = sum(len(s) for s in supports) == len(frozenset().union(*supports))
        rec.add("zeta has disjoint supports, hence is injective", n, disjoint)

    expected = sorted(SetPartition.parse(t) for t in ("12|3|456|78", "12456|3|78", "12|378|456", "12456|378", "1278|3|456"))
    got = zeta_support((2, 1, 3, 2))
    rec.add("support of M_(2,1,3,2)", 8, got == expected, [str(A) for A in got])
    return rec.report()


# ---------------------------------------------------------------------------
# determinant, series and harmonics


def determinant_suite(n: int = 6) -> Report:
    """Determinant theorem for compositions of ``2..n``."""
    rec = _Recorder("determinant")
    for k in range(2, n + 1):
        value, ok = magic_determinant(k)
        rec.add("det[(a u b)!] = prod a_alpha and C D C^T factorization", k, ok, value=str(value))
    return rec.report()


def chevalley_suite(n: int = 8, degree: int = 10) -> Report:
    rec = _Recorder("chevalley")
    for k in range(1, n + 1):
        rec.add(f"B_{k} C_{k} = 1/(1-{k}q)", degree, chevalley_series_check(k, degree))
    m_cap = min(degree, 8)
    table = wolf_table(m_cap, n)
    for k in range(1, n + 1):
        series = hilbert_W(k, m_cap)
        column = [row[k - 1] for row in table]
        rec.add(f"W_{k} = 1 - 1/B_{k} matches nonsplitable counts", m_cap, list(series)[1:] == column)
    return rec.report()


def harmonics_suite(degree: int = 4) -> Report:
    rec = _Recorder("harmonics")
    for n in range(1, 5):
        V = vandermonde(n)
        for k in range(1, n + 1):
            ok = not apply_operator(power_sum(k, n), "hausdorff", V)
            rec.add(f"p_{k}(D) kills the Vandermonde in {n} variables", n * (n - 1) // 2, ok)
    for n in range(1, 4):
        C = hilbert_C(n, degree)
        for d in range(degree + 1):
            dim = nchar_dimension(n, d)
            rec.add(f"dim NCHar_{n} = C_{n} coefficient", d, dim == C[d], counterexample=f"{dim} != {C[d]}", value=dim)
    mdeg = max(degree, 6)
    for n in (1, 2):
        dims = PowerSeriesTable([mhar_dimension(n, d) for d in range(mdeg + 1)], mdeg)
        sym = PowerSeriesTable([1], mdeg)
        for i in range(1, n + 1):
            sym = sym * PowerSeriesTable([1 if j % i == 0 else 0 for j in range(mdeg + 1)], mdeg)
        ok = dims * sym == PowerSeriesTable.geometric(n, mdeg)
        rec.add(f"MHar_{n} series times Sym_{n} series = 1/(1-{n}q)", mdeg, ok,
                counterexample=[str(c) for c in dims])
    return rec.report()


SUITES: dict[str, Callable[..., Report]] = {
    "hopf": hopf_suite,
    "diagram": diagram_suite,
    "iota": iota_suite,
    "zeta": zeta_suite,
    "determinant": determinant_suite,
    "chevalley": chevalley_suite,
    "harmonics": harmonics_suite,
}


def run_suite(name: str, **kwargs) -> Report:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite(**kwargs)
