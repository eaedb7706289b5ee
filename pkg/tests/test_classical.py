from itertools import product

import pytest
from hypothesis import given

from ncsym.classical import (
    NSYM_H,
    NSYM_R,
    SYM_M,
    h_to_ribbon,
    nsym_h_coproduct,
    nsym_h_product,
    ribbon_product,
    ribbon_to_h,
    sym_h_to_m,
    sym_m_coproduct,
    sym_m_product,
)
from ncsym.combinatorics import Composition, IntegerPartition, compositions, integer_partitions
from ncsym.lincomb import LinComb
from oracles import sym_m_product_oracle
from strategies import compositions_st

C = Composition
L = IntegerPartition


def sym(terms, basis="m"):
    return LinComb({L(k): v for k, v in terms.items()}, basis)


def nsym(terms, basis="h"):
    return LinComb({C(k): v for k, v in terms.items()}, basis)


# --- Sym -------------------------------------------------------------------------


def test_m_product_examples():
    assert sym_m_product(L([1]), L([1])) == sym({(1, 1): 2, (2,): 1})
    assert sym_m_product(L(), L([2, 1])) == sym({(2, 1): 1})
    assert sym_m_product(L([1]), L([2])) == sym({(2, 1): 1, (3,): 1})


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 5) for b in range(1, 5) if a + b <= 6])
def test_m_product_matches_polynomial_expansion(a, b):
    for lam, mu in product(integer_partitions(a), integer_partitions(b)):
        got = {tuple(k): v for k, v in sym_m_product(lam, mu).items()}
        assert got == sym_m_product_oracle(lam, mu)


def test_m_product_commutative_and_associative():
    parts = [lam for n in range(1, 4) for lam in integer_partitions(n)]
    for x, y in product(parts, repeat=2):
        assert sym_m_product(x, y) == sym_m_product(y, x)
    for x, y, z in product(parts, repeat=3):
        if sum(x) + sum(y) + sum(z) <= 6:
            a, b, c = (SYM_M.basis_element(t) for t in (x, y, z))
            assert SYM_M.mul(SYM_M.mul(a, b), c) == SYM_M.mul(a, SYM_M.mul(b, c))


def _mm(a, b):
    return LinComb({(L(a), L(b)): 1}, "m⊗m")


def test_m_coproduct_examples():
    assert sym_m_coproduct(L([1])) == _mm((), (1,)) + _mm((1,), ())
    assert sym_m_coproduct(L([2, 1])) == _mm((), (2, 1)) + _mm((2,), (1,)) + _mm((1,), (2,)) + _mm((2, 1), ())
    assert sym_m_coproduct(L([1, 1])) == _mm((), (1, 1)) + _mm((1,), (1,)) + _mm((1, 1), ())


@pytest.mark.parametrize("total", range(1, 6))
def test_sym_coproduct_is_multiplicative_and_coassociative(total):
    for a in range(1, total):
        for lam, mu in product(integer_partitions(a), integer_partitions(total - a)):
            x, y = SYM_M.basis_element(lam), SYM_M.basis_element(mu)
            assert SYM_M.coproduct(SYM_M.mul(x, y)) == SYM_M.tensor_mul(SYM_M.coproduct(x), SYM_M.coproduct(y))
    for lam in integer_partitions(total):
        lhs, rhs = SYM_M.coassociativity_sides(lam)
        assert lhs == rhs


def test_h_to_m():
    assert sym_h_to_m(sym({(2,): 1}, "h")) == sym({(2,): 1, (1, 1): 1})
    assert sym_h_to_m(sym({(): 1}, "h")) == sym({(): 1})
    assert sym_h_to_m(sym({(1, 1): 1}, "h")) == sym({(2,): 1, (1, 1): 2})


# --- NSym ------------------------------------------------------------------------


def test_h_product_is_concatenation():
    assert nsym_h_product(C([2]), C([1, 1])) == nsym({(2, 1, 1): 1})
    assert nsym_h_product(C(), C([3, 1])) == nsym({(3, 1): 1})
    assert nsym_h_product(C([1, 2]), C([3])) == nsym({(1, 2, 3): 1})


def _hh(a, b, c=1):
    return LinComb({(C(a), C(b)): c}, "h⊗h")


def test_h_coproduct_examples():
    assert nsym_h_coproduct(C([2])) == _hh((), (2,)) + _hh((1,), (1,)) + _hh((2,), ())
    assert nsym_h_coproduct(C()) == _hh((), ())
    assert nsym_h_coproduct(C([1, 1])) == _hh((), (1, 1)) + _hh((1,), (1,), 2) + _hh((1, 1), ())


@pytest.mark.parametrize("n", range(1, 6))
def test_nsym_axioms(n):
    for alpha in compositions(n):
        lhs, rhs = NSYM_H.coassociativity_sides(alpha)
        assert lhs == rhs
        x = NSYM_H.basis_element(alpha)
        assert NSYM_H.mul_tensor(NSYM_H.coproduct(x), right=NSYM_H.antipode) == 0
        assert NSYM_H.mul_tensor(NSYM_H.coproduct(x), left=NSYM_H.antipode) == 0


def test_nsym_antipode_small():
    assert NSYM_H.antipode(nsym({(2,): 1})) == nsym({(1, 1): 1, (2,): -1})


def test_ribbon_to_h_examples():
    assert ribbon_to_h(C([1, 1, 1])) == nsym({(1, 1, 1): 1, (1, 2): -1, (2, 1): -1, (3,): 1})
    assert ribbon_to_h(C([4])) == nsym({(4,): 1})
    assert ribbon_to_h(C([1, 1])) == nsym({(1, 1): 1, (2,): -1})


@given(compositions_st(max_size=7))
def test_ribbon_change_of_basis_is_invertible(alpha):
    assert h_to_ribbon(ribbon_to_h(nsym({alpha: 1}, "R"))) == nsym({alpha: 1}, "R")
    assert ribbon_to_h(h_to_ribbon(nsym({alpha: 1}))) == nsym({alpha: 1})


def test_ribbon_product_examples():
    assert ribbon_product(C([2, 1]), C([1, 3])) == nsym({(2, 2, 3): 1, (2, 1, 1, 3): 1}, "R")
    assert ribbon_product(C([1]), C([1])) == nsym({(2,): 1, (1, 1): 1}, "R")
    assert ribbon_product(C([3]), C([2])) == nsym({(5,): 1, (3, 2): 1}, "R")
    with pytest.raises(ValueError):
        ribbon_product(C(), C([1]))


@pytest.mark.parametrize("total", range(2, 7))
def test_ribbon_product_agrees_with_h_product(total):
    for a in range(1, total):
        for alpha, beta in product(compositions(a), compositions(total - a)):
            via_h = NSYM_H.mul(ribbon_to_h(alpha), ribbon_to_h(beta))
            assert h_to_ribbon(via_h) == ribbon_product(alpha, beta)


def test_r1_squared_is_h11():
    r1 = nsym({(1,): 1}, "R")
    assert ribbon_to_h(NSYM_R.mul(r1, r1)) == nsym({(1, 1): 1})


@pytest.mark.parametrize("n", range(1, 9))
def test_nsym_dimension(n):
    assert len(compositions(n)) == 2 ** (n - 1)
