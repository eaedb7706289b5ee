"""Exact computations with symmetric functions in noncommuting variables.

NCSym on the monomial basis ``m_A`` indexed by set partitions, its maps to
and from NSym and Sym, its realization as polynomials in noncommuting
variables, and the invariant and coinvariant theory of the symmetric group
acting on words.
"""
from .combinatorics import (
    Composition,
    IntegerPartition,
    SetPartition,
    canonical_from_composition,
    compose,
    has_crossings,
    join,
    meet,
    refines,
    restrict,
    set_partitions,
    shape,
    shift_concat,
    split_decompose,
    standardize,
)
from .classical import NSYM_H, NSYM_R, SYM_H, SYM_M
from .hopf import NCSYM, HopfAlgebra, m
from .lincomb import LinComb
from .matrix import ExactMatrix, det_exact, kernel_basis
from .series import PowerSeriesTable
from .textio import ParseError, format_element, parse_element
from .words import NCPolynomial

__all__ = [
    "Composition",
    "IntegerPartition",
    "SetPartition",
    "canonical_from_composition",
    "compose",
    "has_crossings",
    "join",
    "meet",
    "refines",
    "restrict",
    "set_partitions",
    "shape",
    "shift_concat",
    "split_decompose",
    "standardize",
    "NSYM_H",
    "NSYM_R",
    "SYM_H",
    "SYM_M",
    "NCSYM",
    "HopfAlgebra",
    "m",
    "LinComb",
    "ExactMatrix",
    "det_exact",
    "kernel_basis",
    "PowerSeriesTable",
    "ParseError",
    "format_element",
    "parse_element",
    "NCPolynomial",
]
