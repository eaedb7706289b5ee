"""Set partitions, compositions and integer partitions.

Everything here is 1-based: a set partition of size ``n`` partitions
``{1, ..., n}``.  Blocks are always stored sorted internally and listed in
order of their minimum element, which is the order that block-indexed
operations (:func:`restrict`, :func:`compose`, :func:`ribbon_composition`)
rely on.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "SetPartition",
    "Composition",
    "IntegerPartition",
    "shape",
    "meet",
    "join",
    "refines",
    "shift_concat",
    "restrict",
    "standardize",
    "canonical_from_composition",
    "has_crossings",
    "compose",
    "split_decompose",
    "is_nonsplitable",
    "set_partitions",
    "bell",
    "stirling2",
    "count_nonsplitable",
    "compositions",
    "integer_partitions",
    "descent_set",
    "composition_from_descents",
    "refines_composition",
    "union_composition",
    "no_global_descent_count",
    "factorials",
    "ribbon_composition",
    "from_ribbon_composition",
]


class SetPartition:
    """A set partition of ``{1, ..., n}`` with blocks ordered by minimum.

    >>> SetPartition([[5, 1], [3], [2, 4]])
    SetPartition('15|24|3')
    """

    __slots__ = ("blocks", "size", "_hash")

    def __init__(self, blocks: Iterable[Iterable[int]] = ()):
        normalized = []
        for block in blocks:
            b = tuple(sorted(block))
            if not b:
                raise ValueError("set partition blocks must be nonempty")
            normalized.append(b)
        normalized.sort(key=lambda b: b[0])
        elements = sorted(x for b in normalized for x in b)
        if elements != list(range(1, len(elements) + 1)):
            raise ValueError(f"blocks {normalized} do not partition {{1..{len(elements)}}}")
        self.blocks: tuple[tuple[int, ...], ...] = tuple(normalized)
        self.size: int = len(elements)
        self._hash = hash(self.blocks)

    @classmethod
    def parse(cls, text: str) -> SetPartition:
        """Parse ``"138|24|5|67"``, ``"1,3,10|2"`` or ``"1 3 10|2"``."""
        text = text.strip().strip("{}").strip()
        if not text:
            return cls()
        tokens = [t.strip() for t in text.split("|")]
        if any(not t for t in tokens):
            raise ValueError(f"empty block in {text!r}")
        separated = bool(re.search(r"[,\s]", text))
        if not separated:
            try:
                return cls([int(c) for c in t] for t in tokens)
            except ValueError:
                # digit-by-digit reading failed (e.g. "1|2|...|10"); fall back to one integer per block
                pass
            return cls([int(t)] for t in tokens)
        return cls([int(x) for x in re.split(r"[,\s]+", t)] for t in tokens)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> SetPartition:
        """Build from a restricted growth string (0-based block labels)."""
        blocks: dict[int, list[int]] = {}
        for position, label in enumerate(rgs, start=1):
            blocks.setdefault(label, []).append(position)
        return cls(blocks.values())

    @classmethod
    def one_block(cls, n: int) -> SetPartition:
        return cls([range(1, n + 1)] if n else [])

    @classmethod
    def singletons(cls, n: int) -> SetPartition:
        return cls([i] for i in range(1, n + 1))

    @property
    def length(self) -> int:
        """Number of blocks, written l(A)."""
        return len(self.blocks)

    @property
    def rgs(self) -> tuple[int, ...]:
        labels = [0] * self.size
        for i, block in enumerate(self.blocks):
            for x in block:
                labels[x - 1] = i
        return tuple(labels)

    def block_of(self, x: int) -> int:
        """0-based index of the block containing ``x``."""
        for i, block in enumerate(self.blocks):
            if x in block:
                return i
        raise ValueError(f"{x} is not in a set partition of size {self.size}")

    @property
    def sort_key(self):
        return (self.size, self.rgs)

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __lt__(self, other: SetPartition):
        return self.sort_key < other.sort_key

    def __le__(self, other: SetPartition):
        return self.sort_key <= other.sort_key

    def __str__(self):
        sep = "," if self.size >= 10 else ""
        return "|".join(sep.join(map(str, b)) for b in self.blocks)

    def __repr__(self):
        return f"SetPartition({str(self)!r})"


class Composition(tuple):
    """An ordered tuple of positive parts.  Ordering is lexicographic."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(_parse_parts(text, "()"))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def sort_key(self):
        return (self.size, tuple(self))

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self):
        return f"Composition({tuple(self)})"

    def __add__(self, other):
        return Composition(tuple(self) + tuple(other))


class IntegerPartition(tuple):
    """A weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> IntegerPartition:
        """Sort arbitrary positive parts into a partition; zeros are dropped."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> IntegerPartition:
        return cls.from_parts(_parse_parts(text, "[]"))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def sort_key(self):
        return (self.size, tuple(self))

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self):
        return f"IntegerPartition({tuple(self)})"


def _parse_parts(text: str, brackets: str) -> list[int]:
    body = text.strip()
    if body[:1] in "([" and body[-1:] in ")]":
        body = body[1:-1]
    body = body.strip()
    if not body:
        return []
    if "," in body:
        return [int(p) for p in body.split(",")]
    return [int(c) for c in body if not c.isspace()]


# ---------------------------------------------------------------------------
# lattice and monoid structure


def shape(A: SetPartition) -> IntegerPartition:
    return IntegerPartition.from_parts(len(b) for b in A.blocks)


def _check_same_size(A: SetPartition, B: SetPartition):
    if A.size != B.size:
        raise ValueError(f"size mismatch: |A|={A.size}, |B|={B.size}")


def meet(A: SetPartition, B: SetPartition) -> SetPartition:
    _check_same_size(A, B)
    pieces = (set(a) & set(b) for a in A.blocks for b in B.blocks)
    return SetPartition(p for p in pieces if p)


def join(A: SetPartition, B: SetPartition) -> SetPartition:
    _check_same_size(A, B)
    parent = list(range(A.size + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in A.blocks + B.blocks:
        root = find(block[0])
        for x in block[1:]:
            parent[find(x)] = root
    groups: dict[int, list[int]] = {}
    for x in range(1, A.size + 1):
        groups.setdefault(find(x), []).append(x)
    return SetPartition(groups.values())


def refines(A: SetPartition, B: SetPartition) -> bool:
    """True iff every block of ``A`` lies inside a block of ``B``."""
    _check_same_size(A, B)
    label = B.rgs
    return all(len({label[x - 1] for x in a}) == 1 for a in A.blocks)


def shift_concat(A: SetPartition, B: SetPartition) -> SetPartition:
    """``A|B``: blocks of ``A`` then blocks of ``B`` shifted by ``|A|``."""
    m = A.size
    return SetPartition(list(A.blocks) + [[x + m for x in b] for b in B.blocks])


def standardize(sets: Iterable[Iterable[int]]) -> SetPartition:
    """Relabel disjoint sets order-isomorphically onto ``1..m``."""
    sets = [tuple(s) for s in sets]
    values = sorted(x for s in sets for x in s)
    if len(set(values)) != len(values):
        raise ValueError("sets to standardize must be pairwise disjoint")
    rank = {v: i for i, v in enumerate(values, start=1)}
    return SetPartition([rank[x] for x in s] for s in sets)


def restrict(A: SetPartition, S: Iterable[int]) -> SetPartition:
    """``A_S``: standardization of the blocks with 1-based indices in ``S``."""
    S = sorted(set(S))
    if S and (S[0] < 1 or S[-1] > A.length):
        raise IndexError(f"block indices {S} out of range 1..{A.length}")
    return standardize(A.blocks[i - 1] for i in S)


def canonical_from_composition(alpha: Sequence[int]) -> SetPartition:
    """``A(alpha)``: consecutive intervals of lengths ``alpha_1, alpha_2, ...``."""
    blocks, start = [], 1
    for part in alpha:
        blocks.append(range(start, start + part))
        start += part
    return SetPartition(blocks)


def has_crossings(A: SetPartition) -> bool:
    return any(b[-1] - b[0] + 1 != len(b) for b in A.blocks)


def compose(A: SetPartition, B: SetPartition) -> SetPartition:
    """The splitting product ``A o B``: block ``i`` of ``A`` absorbs block ``i`` of shifted ``B``."""
    n = A.size
    shifted = [[x + n for x in b] for b in B.blocks]
    k = max(A.length, B.length)
    blocks = []
    for i in range(k):
        block = list(A.blocks[i]) if i < A.length else []
        if i < B.length:
            block += shifted[i]
        blocks.append(block)
    return SetPartition(blocks)


def _first_cut(A: SetPartition) -> int:
    # smallest k with min(A_i minus [k]) nondecreasing in i (empty -> infinity)
    m = A.size
    for k in range(1, m + 1):
        tails = [min((x for x in b if x > k), default=math.inf) for b in A.blocks]
        if all(s <= t for s, t in zip(tails, tails[1:])):
            return k
    return m


def split_decompose(A: SetPartition) -> list[SetPartition]:
    """Unique factorization of ``A`` into nonsplitable set partitions under ``compose``."""
    if A.size == 0:
        raise ValueError("the empty set partition has no nonsplitable decomposition")
    factors = []
    while A.size:
        k = _first_cut(A)
        head = [[x for x in b if x <= k] for b in A.blocks]
        tail = [[x - k for x in b if x > k] for b in A.blocks]
        factors.append(SetPartition(b for b in head if b))
        A = SetPartition(b for b in tail if b)
    return factors


def is_nonsplitable(A: SetPartition) -> bool:
    return A.size > 0 and _first_cut(A) == A.size


# ---------------------------------------------------------------------------
# enumeration and counting


def set_partitions(m: int, max_blocks: int | None = None) -> Iterator[SetPartition]:
    """All set partitions of ``[m]``, by restricted growth string in lex order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    bound = m if max_blocks is None else max_blocks
    if m == 0:
        yield SetPartition()
        return
    rgs = [0] * m

    def extend(pos, used):
        if pos == m:
            yield SetPartition.from_rgs(rgs)
            return
        for label in range(min(used + 1, bound)):
            rgs[pos] = label
            yield from extend(pos + 1, max(used, label + 1))

    if bound >= 1:
        yield from extend(1, 1)


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Number of set partitions of ``[m]`` with exactly ``k`` blocks."""
    if m == k:
        return 1
    if k <= 0 or k > m:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


def bell(m: int) -> int:
    return sum(stirling2(m, k) for k in range(m + 1))


def count_nonsplitable(m: int, n: int) -> int:
    """``w_{m,n}``: nonsplitable set partitions of ``[m]`` with at most ``n`` blocks."""
    if m < 1 or n < 1:
        raise ValueError("count_nonsplitable needs m >= 1 and n >= 1")
    return sum(1 for A in set_partitions(m, n) if len(split_decompose(A)) == 1)


def compositions(n: int) -> list[Composition]:
    """All compositions of ``n`` in lexicographic order."""
    if n == 0:
        return [Composition()]
    out = [
        composition_from_descents(D, n)
        for k in range(n)
        for D in combinations(range(1, n), k)
    ]
    return sorted(out)


def integer_partitions(n: int, max_part: int | None = None) -> list[IntegerPartition]:
    """Partitions of ``n`` in lexicographic order."""
    max_part = n if max_part is None else max_part

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return sorted(IntegerPartition(p) for p in gen(n, max_part))


def descent_set(alpha: Sequence[int]) -> frozenset[int]:
    total, out = 0, set()
    for part in alpha[:-1]:
        total += part
        out.add(total)
    return frozenset(out)


def composition_from_descents(D: Iterable[int], n: int) -> Composition:
    cuts = sorted(set(D))
    if cuts and (cuts[0] < 1 or cuts[-1] >= n):
        raise ValueError(f"descent set {cuts} is not a subset of 1..{n - 1}")
    points = [0] + cuts + [n]
    return Composition(b - a for a, b in zip(points, points[1:]) if n)


def refines_composition(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """``beta <= alpha``: ``beta`` is finer, i.e. ``D(alpha)`` is a subset of ``D(beta)``."""
    if sum(alpha) != sum(beta):
        raise ValueError("compositions of different sizes")
    return descent_set(alpha) <= descent_set(beta)


def union_composition(alpha: Sequence[int], beta: Sequence[int]) -> Composition:
    """The composition whose descent set is ``D(alpha) | D(beta)``."""
    n = sum(alpha)
    if n != sum(beta):
        raise ValueError(f"size mismatch: |alpha|={n}, |beta|={sum(beta)}")
    return composition_from_descents(descent_set(alpha) | descent_set(beta), n)


@lru_cache(maxsize=None)
def no_global_descent_count(n: int) -> int:
    """``a_n``, permutations of ``n`` with no global descent (1, 1, 3, 13, 71, 461, ...)."""
    if n < 1:
        raise ValueError("a_n is defined for n >= 1")
    return math.factorial(n) - sum(
        no_global_descent_count(i) * math.factorial(n - i) for i in range(1, n)
    )


def factorials(parts: Sequence[int]) -> tuple[int, int]:
    """Return ``(prod parts_i!, prod n_i!)`` where ``n_i`` counts parts equal to ``i``."""
    plain = math.prod(math.factorial(p) for p in parts)
    multiplicity = math.prod(math.factorial(c) for c in Counter(parts).values())
    return plain, multiplicity


def ribbon_composition(A: SetPartition) -> Composition:
    """``c(A)`` for a set partition with at most two blocks: lengths of same-block runs."""
    if A.length > 2:
        raise ValueError(f"ribbon composition needs at most two blocks, got {A}")
    if A.size == 0:
        raise ValueError("ribbon composition of the empty set partition")
    label = A.rgs
    parts, run = [], 1
    for a, b in zip(label, label[1:]):
        if a == b:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return Composition(parts)


def from_ribbon_composition(alpha: Sequence[int]) -> SetPartition:
    """Inverse of :func:`ribbon_composition`: runs alternate between the two blocks."""
    rgs = []
    for i, part in enumerate(alpha):
        rgs += [i % 2] * part
    return SetPartition.from_rgs(rgs)
