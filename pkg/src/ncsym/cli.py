"""Command line interface: ``ncsym <command> ...``.

Exit status is 0 on success, 1 when a verification suite fails and 2 for
usage or parse errors.  All output is deterministic.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter

from . import classical, morphisms
from .combinatorics import bell, compositions, no_global_descent_count, stirling2
from .hopf import NCSYM
from .invariants import hilbert_C, wolf_table
from .lincomb import LinComb
from .textio import ParseError, element_to_json, format_element, parse_element
from .verify import SUITES, run_suite
from .words import expand

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

LIMITS = {"bell": 30, "wolf": 9, "coinv_n": 20, "coinv_k": 30, "det": 6, "a_n": 30}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# algebra dispatch


def _algebra_for(kind: str, basis: str):
    table = {
        ("ncsym", "m"): NCSYM,
        ("nsym", "h"): classical.NSYM_H,
        ("nsym", "R"): classical.NSYM_R,
        ("sym", "m"): classical.SYM_M,
        ("sym", "h"): classical.SYM_H,
    }
    try:
        return table[(kind, basis)]
    except KeyError:
        raise UsageError(f"unknown basis {basis!r} for {kind}") from None


def _to_common_basis(kind: str, xs: list[LinComb]) -> list[LinComb]:
    bases = {x.basis for x in xs}
    if len(bases) <= 1:
        return xs
    if kind == "nsym":
        return [classical.ribbon_to_h(x) if x.basis == "R" else x for x in xs]
    if kind == "sym":
        return [classical.sym_h_to_m(x) if x.basis == "h" else x for x in xs]
    raise UsageError(f"mixed bases {sorted(bases)}")


def _degree(x: LinComb) -> int:
    return max((k.size if hasattr(k, "size") else len(k) for k in x.keys()), default=0)


def _parse_inputs(kind: str, texts: list[str], max_degree: int) -> list[LinComb]:
    xs = [parse_element(t, kind) for t in texts]
    for t, x in zip(texts, xs):
        if _degree(x) > max_degree:
            raise UsageError(f"{t!r} has degree {_degree(x)} > --max-degree {max_degree}")
    return _to_common_basis(kind, xs)


def _emit_element(x: LinComb, as_json: bool):
    if as_json:
        print(json.dumps(element_to_json(x), ensure_ascii=False, sort_keys=True))
    else:
        print(format_element(x))


def cmd_multiply(args) -> int:
    xs = _parse_inputs(args.algebra, args.elements, args.max_degree)
    alg = _algebra_for(args.algebra, xs[0].basis)
    _emit_element(alg.prod(*xs), args.json)
    return EXIT_OK


def cmd_coproduct(args) -> int:
    (x,) = _parse_inputs(args.algebra, [args.element], args.max_degree)
    alg = _algebra_for(args.algebra, x.basis)
    _emit_element(alg.coproduct(x), args.json)
    return EXIT_OK


def cmd_antipode(args) -> int:
    (x,) = _parse_inputs(args.algebra, [args.element], args.max_degree)
    alg = _algebra_for(args.algebra, x.basis)
    _emit_element(alg.antipode(x), args.json)
    return EXIT_OK


def cmd_expand(args) -> int:
    """Realize an NCSym element as a polynomial in ``--alphabet-size`` variables."""
    (x,) = _parse_inputs("ncsym", [args.element], args.max_degree)
    n = _bound(args.alphabet_size, "--alphabet-size", 9)
    P = expand(x, n)
    if args.json:
        terms = [{"coeff": str(c), "word": list(w)} for w, c in P.sorted_items()]
        print(json.dumps({"alphabet_size": n, "terms": terms}, sort_keys=True))
    else:
        print(P)
    return EXIT_OK


# ---------------------------------------------------------------------------
# tables


def _grid(corner: str, cols: list, rows: list[tuple[object, list]]) -> str:
    cells = [[corner] + [str(c) for c in cols]] + [[str(r)] + [str(v) for v in vals] for r, vals in rows]
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return "\n".join(" ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in cells)


def _bound(value: int, name: str, limit: int, low: int = 1) -> int:
    if not low <= value <= limit:
        raise UsageError(f"{name} must be between {low} and {limit}, got {value}")
    return value


def determinant_factorization(n: int) -> str:
    """``prod_{alpha |= n} prod_i a_{alpha_i}`` grouped by distinct values of ``a``."""
    powers: Counter = Counter()
    for alpha in compositions(n):
        for part in alpha:
            a = no_global_descent_count(part)
            if a > 1:
                powers[a] += 1
    if not powers:
        return "1"
    return "·".join(f"{a}^{e}" if e > 1 else str(a) for a, e in sorted(powers.items()))


def cmd_table(args) -> int:
    name = args.name
    if name == "bell":
        top = _bound(args.max, "--max", LIMITS["bell"])
        rows = [(m, [bell(m)] + [stirling2(m, k) for k in range(1, top + 1)]) for m in range(1, top + 1)]
        data = {"table": "bell", "rows": [{"m": m, "bell": v[0], "stirling": v[1:m + 1]} for m, v in rows]}
        text = _grid("m", ["Bell"] + [f"S(m,{k})" for k in range(1, top + 1)],
                     [(m, v[: m + 1] + [""] * (top - m)) for m, v in rows])
    elif name == "wolf":
        top = _bound(args.max, "--max", LIMITS["wolf"])
        table = wolf_table(top, top)
        data = {"table": "wolf", "rows": [{"m": m, "w": list(row)} for m, row in enumerate(table, start=1)]}
        text = _grid("m\\n", list(range(1, top + 1)), [(m, list(row)) for m, row in enumerate(table, start=1)])
    elif name == "coinv":
        top_n = _bound(args.max_n, "--max-n", LIMITS["coinv_n"])
        top_k = _bound(args.max_k, "--max-k", LIMITS["coinv_k"], low=0)
        rows = [(n, list(hilbert_C(n, top_k))) for n in range(1, top_n + 1)]
        data = {"table": "coinv", "rows": [{"n": n, "C": [str(c) for c in v]} for n, v in rows]}
        text = _grid("n\\k", list(range(top_k + 1)), rows)
    elif name == "det":
        top = _bound(args.n, "--n", LIMITS["det"])
        entries = []
        for k in range(1, top + 1):
            value, ok = morphisms.magic_determinant(k + 1)
            entries.append({"size": 2**k, "compositions_of": k + 1, "det": str(value),
                            "factorization": determinant_factorization(k + 1), "verified": ok})
        data = {"table": "det", "rows": entries}
        text = "\n".join(f"{e['size']:>3}x{e['size']:<3} {e['det']} = {e['factorization']}" for e in entries)
    elif name == "a_n":
        top = _bound(args.max, "--max", LIMITS["a_n"])
        values = [no_global_descent_count(n) for n in range(1, top + 1)]
        data = {"table": "a_n", "rows": [{"n": n, "a": v} for n, v in enumerate(values, start=1)]}
        text = _grid("n", ["a_n", "n!"], [(n, [v, math.factorial(n)]) for n, v in enumerate(values, start=1)])
    else:  # argparse restricts the choices
        raise UsageError(f"unknown table {name!r}")
    print(json.dumps(data, sort_keys=True) if args.json else text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification

SUITE_DEFAULTS = {
    "hopf": {"degree": 5},
    "diagram": {"degree": 5},
    "iota": {"degree": 8},
    "zeta": {"degree": 5},
    "determinant": {"n": 5},
    "chevalley": {"n": 8, "degree": 10},
    "harmonics": {"degree": 4},
}

SUITE_CAPS = {"hopf": 6, "diagram": 6, "iota": 9, "zeta": 6, "chevalley": 30, "harmonics": 5}


def cmd_verify(args) -> int:
    kwargs = dict(SUITE_DEFAULTS[args.suite])
    if args.degree is not None:
        if "degree" not in kwargs:
            raise UsageError(f"suite {args.suite} takes --n, not --degree")
        kwargs["degree"] = _bound(args.degree, "--degree", SUITE_CAPS[args.suite])
    if args.n is not None:
        if "n" not in kwargs:
            raise UsageError(f"suite {args.suite} takes --degree, not --n")
        limit = LIMITS["det"] if args.suite == "determinant" else 20
        kwargs["n"] = _bound(args.n, "--n", limit)
    if args.suite == "determinant":
        # --n K covers the matrices of size 2, 4, ..., 2^K
        kwargs["n"] += 1
    report = run_suite(args.suite, **kwargs)
    report["checks"].sort(key=lambda c: (c["check"], c["degree"]))
    print(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False))
    return EXIT_OK if report["status"] == "pass" else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--max-degree", type=int, default=argparse.SUPPRESS,
                        help="reject input elements above this degree (default 12)")
    common.add_argument("--alphabet-size", type=int, default=argparse.SUPPRESS,
                        help="number of noncommuting variables for word computations (default 3)")

    parser = argparse.ArgumentParser(prog="ncsym", parents=[common],
                                     description="Exact computations in NCSym, NSym and Sym.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, nargs, helptext in (
        ("multiply", cmd_multiply, "+", "product of one or more elements"),
        ("coproduct", cmd_coproduct, None, "coproduct of an element"),
        ("antipode", cmd_antipode, None, "antipode of an element"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("algebra", choices=["ncsym", "nsym", "sym"])
        if nargs:
            p.add_argument("elements", nargs=nargs, metavar="element")
        else:
            p.add_argument("element")
        p.set_defaults(func=func)

    p = sub.add_parser("expand", parents=[common], help="realize an NCSym element in --alphabet-size variables")
    p.add_argument("element")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("table", parents=[common], help="print a table of numbers")
    p.add_argument("name", choices=["bell", "wolf", "coinv", "det", "a_n"])
    p.add_argument("--max", type=int, default=8, help="largest m (bell, wolf, a_n)")
    p.add_argument("--max-n", type=int, default=8, help="largest alphabet size (coinv)")
    p.add_argument("--max-k", type=int, default=7, help="largest degree (coinv)")
    p.add_argument("--n", type=int, default=5, help="det: matrices of size 2, 4, ..., 2^N")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--n", type=int, default=None,
                   help="determinant: matrices up to size 2^N; chevalley: alphabet sizes 1..N")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    args.max_degree = getattr(args, "max_degree", 12)
    args.alphabet_size = getattr(args, "alphabet_size", 3)
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError) as exc:
        print(f"ncsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
