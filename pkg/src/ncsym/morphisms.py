"""Maps between NSym, NCSym and Sym, and the determinant behind injectivity of the inclusion."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .classical import NSYM_H, SYM_M, nsym_e, ribbon_to_h, sym_h_to_m
from .combinatorics import (
    Composition,
    IntegerPartition,
    SetPartition,
    canonical_from_composition,
    compositions,
    factorials,
    has_crossings,
    no_global_descent_count,
    refines_composition,
    ribbon_composition,
    set_partitions,
    shape,
    union_composition,
    integer_partitions,
)
from .hopf import NCSYM
from .lincomb import LinComb, linear
from .matrix import ExactMatrix, det_exact

__all__ = [
    "chi_nsym",
    "chi_ncsym",
    "lift",
    "inclusion_I",
    "canonical_coefficient",
    "union_factorial_matrix",
    "refinement_matrix",
    "magic_determinant",
    "rho_quotient",
    "iota",
    "ncsym2_product",
    "zeta",
    "zeta_support",
    "diagram_check",
    "diagram_report",
    "inclusion_of_e",
]


def chi_nsym(x: LinComb) -> LinComb:
    """``h_alpha -> h_sort(alpha)``."""
    out = x.map_keys(IntegerPartition.from_parts)
    out.basis = "h"
    return out


def chi_ncsym(x: LinComb) -> LinComb:
    """``m_A -> lambda(A)^! m_lambda(A)``, landing in the monomial basis of Sym."""
    acc: dict = {}
    for A, c in x.items():
        lam = shape(A)
        acc[lam] = acc.get(lam, 0) + c * factorials(lam)[1]
    return LinComb(acc, "m")


@lru_cache(maxsize=None)
def _shape_classes(n: int) -> dict[IntegerPartition, list[SetPartition]]:
    classes: dict = {}
    for A in set_partitions(n):
        classes.setdefault(shape(A), []).append(A)
    return classes


@lru_cache(maxsize=None)
def _lift_key(lam: IntegerPartition) -> LinComb:
    n = sum(lam)
    c = Fraction(factorials(lam)[0], math.factorial(n))
    return LinComb(((A, c) for A in _shape_classes(n).get(lam, [])), "m")


def lift(x: LinComb) -> LinComb:
    """The lifting map ``m_lam -> (lam!/|lam|!) sum_{lambda(A)=lam} m_A``."""
    return linear(_lift_key, x, "m")


@lru_cache(maxsize=None)
def _complete_lift(n: int) -> LinComb:
    # lift(h_n) = sum over A of lambda(A)!/n! m_A
    return LinComb(
        ((A, Fraction(factorials(shape(A))[0], math.factorial(n))) for A in set_partitions(n)),
        "m",
    )


@lru_cache(maxsize=None)
def _inclusion_key(alpha: Composition) -> LinComb:
    return NCSYM.prod(*(_complete_lift(p) for p in alpha))


def inclusion_I(x: LinComb) -> LinComb:
    """Algebra map NSym -> NCSym sending ``h_n`` to the lift of ``h_n``; input in the complete basis."""
    if x.basis == "R":
        x = ribbon_to_h(x)
    return linear(_inclusion_key, x, "m")


def canonical_coefficient(alpha, beta) -> Fraction:
    """Coefficient of ``m_A(beta)`` in the image of ``h_alpha``: ``(alpha u beta)!/alpha!``."""
    alpha, beta = Composition(alpha), Composition(beta)
    return Fraction(factorials(union_composition(alpha, beta))[0], factorials(alpha)[0])


def union_factorial_matrix(n: int) -> ExactMatrix:
    comps = compositions(n)
    return ExactMatrix([[factorials(union_composition(a, b))[0] for b in comps] for a in comps])


def refinement_matrix(n: int) -> ExactMatrix:
    """0/1 matrix with entry 1 at ``(alpha, beta)`` when ``beta <= alpha`` (``beta`` finer)."""
    comps = compositions(n)
    return ExactMatrix([[int(refines_composition(b, a)) for b in comps] for a in comps])


def _a_product(alpha) -> int:
    return math.prod(no_global_descent_count(p) for p in alpha)


def magic_determinant(n: int) -> tuple[int, bool]:
    """Determinant of ``[(alpha u beta)!]`` over compositions of ``n`` in lex order.

    The flag is true when the value equals ``prod_alpha prod_i a_{alpha_i}``
    and the matrix factors as ``C D C^T`` with ``C`` the refinement matrix
    and ``D = diag(a_eta)``.
    """
    if not 1 <= n <= 7:
        raise ValueError("magic_determinant supports 1 <= n <= 7")
    comps = compositions(n)
    M = union_factorial_matrix(n)
    value = det_exact(M)
    C = refinement_matrix(n)
    D = ExactMatrix.diagonal([_a_product(eta) for eta in comps])
    expected = math.prod(_a_product(alpha) for alpha in comps)
    return value, value == expected and C @ D @ C.T == M


def rho_quotient(x: LinComb) -> LinComb:
    """Kill every ``m_A`` whose set partition has crossings."""
    return x.filter(lambda A: not has_crossings(A))


def iota(x: LinComb) -> LinComb:
    """``m_A -> R_c(A)`` on elements supported on set partitions with at most two blocks."""
    acc: dict = {}
    for A, c in x.items():
        if A.length > 2:
            raise ValueError(f"iota is only defined on at most two blocks, got m{{{A}}}")
        key = Composition() if A.size == 0 else ribbon_composition(A)
        acc[key] = acc.get(key, 0) + c
    return LinComb(acc, "R")


def ncsym2_product(A: SetPartition, B: SetPartition) -> LinComb:
    """Product of ``m_A m_B`` in two variables: glue blocks straight or crossed."""
    if A.length > 2 or B.length > 2:
        raise ValueError("ncsym2_product needs set partitions with at most two blocks")
    n = A.size
    a1, a2 = (list(A.blocks) + [(), ()])[:2]
    b1, b2 = ([[x + n for x in b] for b in B.blocks] + [[], []])[:2]
    terms = set()
    for x, y in ((b1, b2), (b2, b1)):
        blocks = [list(a1) + x, list(a2) + y]
        terms.add(SetPartition(b for b in blocks if b))
    return LinComb(((C, 1) for C in terms), "m")


def zeta_support(alpha) -> list[SetPartition]:
    """Set partitions obtained from ``A(alpha)`` by gluing blocks that are not adjacent."""
    alpha = Composition(alpha)
    base = canonical_from_composition(alpha)
    k = base.length
    out = []
    # assign each interval a label so that adjacent intervals get different labels
    for labels in _proper_labelings(k):
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).extend(base.blocks[i])
        out.append(SetPartition(groups.values()))
    return sorted(out)


def _proper_labelings(k: int):
    # restricted growth strings with no two consecutive equal labels
    def gen(prefix, used):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for lab in range(used + 1):
            if prefix and prefix[-1] == lab:
                continue
            yield from gen(prefix + [lab], max(used, lab + 1))

    if k == 0:
        yield ()
        return
    yield from gen([0], 1)


def zeta(x: LinComb) -> LinComb:
    """``R_alpha -> M_alpha``, the sum of ``m_B`` over :func:`zeta_support`."""
    if x.basis == "h":
        raise ValueError("zeta expects an element in the ribbon basis")
    return linear(lambda a: LinComb(((B, 1) for B in zeta_support(a)), "m"), x, "m")


def diagram_check(d: int) -> bool:
    """Check the commuting square NSym -> NCSym -> Sym and the lift identities through degree ``d``."""
    return all(check["status"] == "pass" for check in diagram_report(d))


def diagram_report(d: int) -> list[dict]:
    report = []

    def record(check, degree, ok, witness=None):
        entry = {"check": check, "degree": degree, "status": "pass" if ok else "fail"}
        if not ok:
            entry["counterexample"] = witness
        report.append(entry)

    for n in range(1, d + 1):
        bad = None
        for alpha in compositions(n):
            h = NSYM_H.basis_element(alpha)
            lhs = chi_ncsym(inclusion_I(h))
            rhs = sym_h_to_m(chi_nsym(h))
            if lhs != rhs:
                bad = str(alpha)
                break
        record("chi o I = chi on h_alpha", n, bad is None, bad)

        bad = None
        for lam in integer_partitions(n):
            x = SYM_M.basis_element(lam)
            if chi_ncsym(lift(x)) != x:
                bad = str(lam)
                break
        record("chi o lift = id on m_lambda", n, bad is None, bad)

        bad = None
        for lam in integer_partitions(n):
            x = SYM_M.basis_element(lam)
            lhs = NCSYM.coproduct(lift(x))
            rhs = _lift_tensor(SYM_M.coproduct(x))
            if lhs != rhs:
                bad = str(lam)
                break
        record("coproduct o lift = (lift x lift) o coproduct", n, bad is None, bad)
    return report


def _lift_tensor(X: LinComb) -> LinComb:
    acc: dict = {}
    for (a, b), c in X.items():
        for ka, va in _lift_key(a).items():
            for kb, vb in _lift_key(b).items():
                acc[(ka, kb)] = acc.get((ka, kb), 0) + c * va * vb
    return LinComb(acc, "m⊗m")


def inclusion_of_e(n: int) -> LinComb:
    """Image of the elementary generator ``e_n`` under the inclusion."""
    return inclusion_I(nsym_e(n))
