"""Finite linear combinations with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping

__all__ = ["LinComb", "tensor", "linear", "bilinear", "order_key", "format_coeff"]


def order_key(key):
    """Deterministic sort key for basis keys, words and tensor pairs."""
    sort_key = getattr(key, "sort_key", None)
    if sort_key is not None:
        return (0, sort_key)
    if isinstance(key, tuple):
        if all(isinstance(k, int) for k in key):
            return (1, key)
        return (2, tuple(order_key(k) for k in key))
    return (3, key)


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LinComb:
    """A map from hashable basis keys to nonzero ``Fraction`` coefficients.

    ``basis`` is a free-form tag (e.g. ``"m"``, ``"h"``, ``"R"``) that stops
    elements written in different bases from being added by accident.
    """

    __slots__ = ("terms", "basis")

    def __init__(self, terms: Mapping | Iterable[tuple[Hashable, Any]] = (), basis: str | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, c in items:
            if isinstance(c, float):
                raise TypeError(f"coefficient {c!r} is not exact")
            c = Fraction(c)
            if c:
                acc[key] = acc.get(key, 0) + c
        self.terms: dict = {k: v for k, v in acc.items() if v}
        self.basis = basis

    @classmethod
    def monomial(cls, key, coeff=1, basis: str | None = None) -> LinComb:
        return cls({key: coeff}, basis)

    def _like(self, terms) -> LinComb:
        return type(self)._from_terms(self, terms)

    @classmethod
    def _from_terms(cls, template: LinComb, terms) -> LinComb:
        out = object.__new__(cls)
        out.terms = {k: v for k, v in terms.items() if v}
        out.basis = template.basis
        return out

    def _merge_basis(self, other: LinComb) -> str | None:
        if self.basis and other.basis and self.basis != other.basis and self.terms and other.terms:
            raise ValueError(f"cannot combine basis {self.basis!r} with {other.basis!r}")
        return self.basis or other.basis

    # container protocol

    def __getitem__(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __iter__(self) -> Iterator:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def keys(self):
        return self.terms.keys()

    def sorted_items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: order_key(kv[0]))

    # vector space operations

    def __add__(self, other):
        if isinstance(other, (int, Rational)) and other == 0:
            return self
        if not isinstance(other, LinComb):
            return NotImplemented
        basis = self._merge_basis(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        out = self._like(acc)
        out.basis = basis
        return out

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Rational)) and other == 0:
            return self
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> LinComb:
        if isinstance(c, float):
            raise TypeError(f"scalar {c!r} is not exact")
        c = Fraction(c)
        return self._like({k: c * v for k, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Rational)):
            return self.scale(c)
        return NotImplemented

    def __rmul__(self, c):
        if isinstance(c, (int, Rational)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Rational)) and other == 0:
            return not self.terms
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_keys(self, f: Callable[[Any], Any]) -> LinComb:
        out = type(self)._from_terms(self, {})
        acc: dict = {}
        for k, v in self.terms.items():
            nk = f(k)
            acc[nk] = acc.get(nk, 0) + v
        out.terms = {k: v for k, v in acc.items() if v}
        return out

    def filter(self, keep: Callable[[Any], bool]) -> LinComb:
        return self._like({k: v for k, v in self.terms.items() if keep(k)})

    # text and JSON

    def format(self, key_str: Callable[[Any], str] = str, one: str = "1") -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_items():
            label = key_str(key)
            if label == one:
                body = format_coeff(abs(c))
            elif abs(c) == 1:
                body = label
            else:
                body = f"{format_coeff(abs(c))}*{label}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        tag = f", basis={self.basis!r}" if self.basis else ""
        return f"{type(self).__name__}({self.format()!r}{tag})"

    def to_json(self, encode_key: Callable[[Any], dict]) -> list[dict]:
        return [{"coeff": format_coeff(c), **encode_key(k)} for k, c in self.sorted_items()]

    @classmethod
    def from_json(cls, records: list[dict], decode_key: Callable[[dict], Any], basis: str | None = None) -> LinComb:
        return cls(((decode_key(r), Fraction(r["coeff"])) for r in records), basis)


def linear(f: Callable[[Any], LinComb], x: LinComb, basis: str | None = None) -> LinComb:
    """Extend a basis-level map ``f`` linearly to ``x``."""
    acc: dict = {}
    out_basis = basis
    for k, c in x.items():
        image = f(k)
        out_basis = out_basis or image.basis
        for k2, c2 in image.items():
            acc[k2] = acc.get(k2, 0) + c * c2
    return LinComb(acc, out_basis)


def bilinear(f: Callable[[Any, Any], LinComb], x: LinComb, y: LinComb, basis: str | None = None) -> LinComb:
    """Extend a basis-level product ``f(a, b)`` bilinearly to ``x`` and ``y``."""
    acc: dict = {}
    out_basis = basis
    for a, ca in x.items():
        for b, cb in y.items():
            image = f(a, b)
            out_basis = out_basis or image.basis
            for k, c in image.items():
                acc[k] = acc.get(k, 0) + ca * cb * c
    return LinComb(acc, out_basis)


def tensor(x: LinComb, y: LinComb) -> LinComb:
    """``x (x) y`` with pair keys."""
    basis = None
    if x.basis or y.basis:
        basis = f"{x.basis}⊗{y.basis}"
    return LinComb((((a, b), ca * cb) for a, ca in x.items() for b, cb in y.items()), basis)
