"""Text and JSON formats for algebra elements.

Element grammar (whitespace is ignored between tokens)::

    element := term (("+" | "-") term)*  |  "0"
    term    := ["-"] [coeff ["*"]] symbol  |  ["-"] coeff
    coeff   := INT ["/" INT]
    symbol  := "1"
             | "m{" setpartition "}"        NCSym monomial      m{13|2}
             | "h(" parts ")" | "R(" parts ")"   NSym complete / ribbon   h(2,1)
             | "h[" parts "]" | "m[" parts "]"   Sym complete / monomial  m[2,1]
             | "x" INT ("." "x" INT)*        noncommutative word  x1.x2.x1

Tensor keys print as ``a⊗b`` and the unit of every algebra prints as ``1``.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .combinatorics import Composition, IntegerPartition, SetPartition
from .lincomb import LinComb

__all__ = [
    "ParseError",
    "format_key",
    "format_element",
    "parse_element",
    "element_to_json",
    "element_from_json",
    "format_word",
    "parse_word",
]


class ParseError(ValueError):
    """Malformed element text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def format_word(word: tuple[int, ...]) -> str:
    return ".".join(f"x{i}" for i in word) if word else "1"


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for piece in text.split("."):
        piece = piece.strip()
        if not re.fullmatch(r"x\d+", piece):
            raise ValueError(f"bad word letter {piece!r} in {text!r}")
        out.append(int(piece[1:]))
    return tuple(out)


def format_key(key, basis: str | None = None) -> str:
    """Render one basis key; ``basis`` disambiguates h/m/R for tuple keys."""
    if isinstance(key, SetPartition):
        return "1" if key.size == 0 else f"m{{{key}}}"
    if isinstance(key, Composition):
        return "1" if not key else f"{basis or 'h'}{key}"
    if isinstance(key, IntegerPartition):
        return "1" if not key else f"{basis or 'm'}{key}"
    if isinstance(key, tuple) and all(isinstance(k, int) for k in key):
        return format_word(key)
    if isinstance(key, tuple):
        bases = (basis or "").split("⊗")
        if len(bases) != len(key):
            bases = [bases[0] if bases and bases[0] else None] * len(key)
        return "⊗".join(format_key(k, b) for k, b in zip(key, bases))
    return str(key)


def format_element(x: LinComb) -> str:
    return x.format(lambda k: format_key(k, x.basis))


_SYMBOL = re.compile(
    r"""
    (?P<ncsym>m\{(?P<sp>[^}]*)\})
  | (?P<nsym>(?P<nb>[hR])\((?P<comp>[^)]*)\))
  | (?P<sym>(?P<sb>[hm])\[(?P<part>[^\]]*)\])
  | (?P<word>x\d+(?:\s*\.\s*x\d+)*)
    """,
    re.VERBOSE,
)
_COEFF = re.compile(r"(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?")


def parse_element(text: str, algebra: str | None = None) -> LinComb:
    """Parse an element.  ``algebra`` (ncsym|nsym|sym|words) fixes the meaning of ``1``."""
    pos, n = 0, len(text)
    terms: list[tuple[object, Fraction]] = []
    basis: str | None = None
    kind: str | None = None

    def skip(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip(pos)
    if text.strip() == "0":
        return LinComb(basis=_default_basis(algebra))
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        first = False
        coeff = Fraction(1)
        cm = _COEFF.match(text, pos)
        sm = _SYMBOL.match(text, pos)
        key = None
        if cm and not (sm and sm.start() == pos):
            coeff = Fraction(int(cm["num"]), int(cm["den"] or 1))
            pos = skip(cm.end())
            if pos < n and text[pos] == "*":
                pos = skip(pos + 1)
                sm = _SYMBOL.match(text, pos)
                if not sm:
                    raise ParseError("expected a basis symbol after '*'", text, pos)
            else:
                sm = _SYMBOL.match(text, pos)
                if not sm:
                    key = "unit"
        if key is None:
            if not sm:
                raise ParseError("expected a coefficient or basis symbol", text, pos)
            try:
                key, term_kind, term_basis = _decode_symbol(sm)
            except ValueError as exc:
                raise ParseError(str(exc), text, pos) from None
            if kind and term_kind != kind:
                raise ParseError(f"mixed algebras {kind} and {term_kind}", text, pos)
            if basis and term_basis != basis:
                raise ParseError(f"mixed bases {basis} and {term_basis}", text, pos)
            kind, basis = term_kind, term_basis
            pos = skip(sm.end())
        terms.append((key, sign * coeff))
    if not terms:
        raise ParseError("empty element", text, 0)
    kind = kind or algebra
    if algebra and kind != algebra:
        raise ParseError(f"element belongs to {kind}, expected {algebra}", text, 0)
    basis = basis or _default_basis(kind)
    unit = _unit(kind)
    return LinComb(((unit if k == "unit" else k, c) for k, c in terms), basis)


def _decode_symbol(sm) -> tuple[object, str, str]:
    if sm["ncsym"]:
        return SetPartition.parse(sm["sp"]), "ncsym", "m"
    if sm["nsym"]:
        return Composition.parse(sm["comp"]), "nsym", sm["nb"]
    if sm["sym"]:
        return IntegerPartition.parse(sm["part"]), "sym", sm["sb"]
    return parse_word(re.sub(r"\s+", "", sm["word"])), "words", "x"


def _default_basis(algebra: str | None) -> str | None:
    return {"ncsym": "m", "nsym": "h", "sym": "m", "words": "x"}.get(algebra or "")


def _unit(algebra: str | None):
    if algebra == "ncsym":
        return SetPartition()
    if algebra == "nsym":
        return Composition()
    if algebra == "sym":
        return IntegerPartition()
    if algebra == "words":
        return ()
    raise ValueError("the algebra of a bare constant is ambiguous; pass algebra=")


# ---------------------------------------------------------------------------
# JSON


def _encode_key(key, basis: str | None):
    if isinstance(key, SetPartition):
        return {"partition": str(key)}
    if isinstance(key, Composition):
        return {"composition": list(key), "basis": basis}
    if isinstance(key, IntegerPartition):
        return {"partition": list(key), "basis": basis}
    if isinstance(key, tuple) and all(isinstance(k, int) for k in key):
        return {"word": list(key)}
    if isinstance(key, tuple):
        bases = (basis or "").split("⊗")
        if len(bases) != len(key):
            bases = [None] * len(key)
        return {"tensor": [_encode_key(k, b) for k, b in zip(key, bases)]}
    raise TypeError(f"cannot encode key {key!r}")


def _decode_key(record: dict):
    if "tensor" in record:
        return tuple(_decode_key(r) for r in record["tensor"])
    if "word" in record:
        return tuple(record["word"])
    if "composition" in record:
        return Composition(record["composition"])
    if isinstance(record.get("partition"), str):
        return SetPartition.parse(record["partition"])
    return IntegerPartition(record["partition"])


def element_to_json(x: LinComb) -> dict:
    return {
        "basis": x.basis,
        "terms": [{"coeff": str(c), **_encode_key(k, x.basis)} for k, c in x.sorted_items()],
    }


def element_from_json(data: dict | str) -> LinComb:
    if isinstance(data, str):
        data = json.loads(data)
    return LinComb(((_decode_key(r), Fraction(r["coeff"])) for r in data["terms"]), data.get("basis"))
