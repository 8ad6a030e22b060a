"""
Bi-partitions, standard bi-tableaux and the node data (content, spin,
principal hook) that parameterise the fusion product.

Components are numbered 1 and 2; rows and columns are 1-based, so the content
of the node in row i, column j is j - i.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Optional, Sequence

from .algebra import XI_1, XI_2
from .errors import IndexRangeError, InvalidRankError, NonStandardTableauError

Partition = tuple[int, ...]
Position = tuple[int, int, int]  # (component, row, column)
HookId = tuple[int, int]  # (component, principal hook index)


@cache
def partitions(m: int) -> tuple[Partition, ...]:
    """Partitions of m, largest first: (3,), (2, 1), (1, 1, 1)."""
    if m == 0:
        return ((),)

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, cap), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail

    return tuple(gen(m, m))


def conjugate(la: Partition) -> Partition:
    return tuple(sum(1 for r in la if r > j) for j in range(la[0])) if la else ()


def hook_lengths(la: Partition) -> list[int]:
    cols = conjugate(la)
    return [la[i] - j + cols[j] - i - 1 for i in range(len(la)) for j in range(la[i])]


def count_standard_tableaux(la: Partition) -> int:
    """Hook-length formula."""
    return math.factorial(sum(la)) // math.prod(hook_lengths(la))


def durfee(la: Partition) -> int:
    """Number of principal hooks (side of the Durfee square)."""
    return sum(1 for i, r in enumerate(la) if r > i)


@dataclass(frozen=True)
class BiPartition:
    first: Partition
    second: Partition

    def __post_init__(self):
        for la in (self.first, self.second):
            if any(p <= 0 for p in la) or any(a < b for a, b in zip(la, la[1:])):
                raise ValueError(f"{la} is not a partition")
        if self.n < 1:
            raise InvalidRankError("bi-partition must have at least one node")

    @property
    def n(self) -> int:
        return sum(self.first) + sum(self.second)

    def component(self, k: int) -> Partition:
        return self.first if k == 1 else self.second

    def nodes(self) -> list[Position]:
        return [(k, i, j) for k in (1, 2) for i, r in enumerate(self.component(k), 1) for j in range(1, r + 1)]

    def hook_ids(self) -> list[HookId]:
        """Principal hooks, component 1 first."""
        return [(k, h) for k in (1, 2) for h in range(1, durfee(self.component(k)) + 1)]

    def to_json(self) -> list:
        return [list(self.first), list(self.second)]

    @classmethod
    def from_json(cls, data) -> BiPartition:
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise ValueError(f"a shape is a pair of partitions, got {data!r}")
        return cls(tuple(int(x) for x in data[0]), tuple(int(x) for x in data[1]))

    def __str__(self):
        return f"({self.first}, {self.second})"


def bipartitions(n: int) -> list[BiPartition]:
    """All bi-partitions of n: larger first component first, then partitions largest first."""
    if n < 1:
        raise InvalidRankError(f"n must be >= 1, got {n}")
    return [BiPartition(a, b) for m in range(n, -1, -1) for a in partitions(m) for b in partitions(n - m)]


@dataclass(frozen=True)
class BiTableau:
    shape: BiPartition
    rows: tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]

    def __post_init__(self):
        for k in (1, 2):
            if tuple(len(r) for r in self.rows[k - 1]) != self.shape.component(k):
                raise ValueError(f"rows {self.rows[k - 1]} do not fit {self.shape.component(k)}")
        if sorted(self.reading_word()) != list(range(1, self.shape.n + 1)):
            raise ValueError("entries must be a bijection onto 1..n")

    @property
    def n(self) -> int:
        return self.shape.n

    def reading_word(self) -> tuple[int, ...]:
        return tuple(m for comp in self.rows for row in comp for m in row)

    def positions(self) -> dict[int, Position]:
        return {m: (k, i, j) for k, comp in enumerate(self.rows, 1)
                for i, row in enumerate(comp, 1) for j, m in enumerate(row, 1)}

    def is_standard(self) -> bool:
        for comp in self.rows:
            for i, row in enumerate(comp):
                if any(a >= b for a, b in zip(row, row[1:])):
                    return False
                if i and any(comp[i - 1][j] >= row[j] for j in range(len(row))):
                    return False
        return True

    def swap(self, i: int) -> BiTableau:
        """Exchange the entries i and i+1."""
        def f(m):
            return i + 1 if m == i else i if m == i + 1 else m
        return BiTableau(self.shape, tuple(tuple(tuple(f(m) for m in row) for row in comp) for comp in self.rows))

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": [[list(r) for r in comp] for comp in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> BiTableau:
        shape = BiPartition.from_json(data["shape"])
        rows = tuple(tuple(tuple(int(m) for m in r) for r in comp) for comp in data["rows"])
        return cls(shape, rows)

    @classmethod
    def from_rows(cls, first: Sequence[Sequence[int]], second: Sequence[Sequence[int]]) -> BiTableau:
        rows = (tuple(tuple(r) for r in first), tuple(tuple(r) for r in second))
        shape = BiPartition(tuple(len(r) for r in rows[0]), tuple(len(r) for r in rows[1]))
        return cls(shape, rows)

    def __str__(self):
        return " | ".join("/".join(" ".join(map(str, r)) for r in comp) or "-" for comp in self.rows)


def _fill(la: Partition, positions: dict[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(positions[(i, j)] for j in range(1, r + 1)) for i, r in enumerate(la, 1))


def _standard_fillings(la: Partition, labels: Sequence[int]) -> list[dict[tuple[int, int], int]]:
    # place the largest label in every removable corner, recursively
    if not la:
        return [{}]
    out = []
    top = labels[-1]
    for i, r in enumerate(la):
        if i + 1 < len(la) and la[i + 1] == r:
            continue
        smaller = list(la)
        smaller[i] -= 1
        if smaller[i] == 0:
            smaller.pop()
        for filling in _standard_fillings(tuple(smaller), labels[:-1]):
            filling = dict(filling)
            filling[(i + 1, r)] = top
            out.append(filling)
    return out


def standard_bitableaux(shape: BiPartition) -> list[BiTableau]:
    """All standard bi-tableaux of the shape, sorted by reading word."""
    n = shape.n
    m = sum(shape.first)
    out = []
    for subset in itertools.combinations(range(1, n + 1), m):
        rest = [x for x in range(1, n + 1) if x not in subset]
        for f1 in _standard_fillings(shape.first, subset):
            for f2 in _standard_fillings(shape.second, rest):
                out.append(BiTableau(shape, (_fill(shape.first, f1), _fill(shape.second, f2))))
    out.sort(key=BiTableau.reading_word)
    return out


def hook_bitableau(shape: BiPartition) -> BiTableau:
    """
    Fill principal hooks in order, each down its column and then along its row,
    component 1 before component 2.
    """
    positions = {}
    m = 0
    for k in (1, 2):
        la = shape.component(k)
        cols = conjugate(la)
        for h in range(1, durfee(la) + 1):
            for i in range(h, cols[h - 1] + 1):
                m += 1
                positions[(k, i, h)] = m
            for j in range(h + 1, la[h - 1] + 1):
                m += 1
                positions[(k, h, j)] = m
    rows = tuple(
        tuple(tuple(positions[(k, i, j)] for j in range(1, r + 1)) for i, r in enumerate(shape.component(k), 1))
        for k in (1, 2)
    )
    return BiTableau(shape, rows)


@dataclass(frozen=True)
class NodeData:
    """Per-entry data, indexed by entry - 1."""
    contents: tuple[int, ...]
    spins: tuple[int, ...]
    hooks: tuple[HookId, ...]

    def content(self, m: int) -> int:
        return self.contents[m - 1]

    def spin(self, m: int) -> int:
        return self.spins[m - 1]

    def hook(self, m: int) -> HookId:
        return self.hooks[m - 1]


@cache
def node_data(T: BiTableau) -> NodeData:
    if not T.is_standard():
        raise NonStandardTableauError(f"{T} is not standard")
    pos = T.positions()
    entries = range(1, T.n + 1)
    return NodeData(
        contents=tuple(pos[m][2] - pos[m][1] for m in entries),
        spins=tuple(XI_1 if pos[m][0] == 1 else XI_2 for m in entries),
        hooks=tuple((pos[m][0], min(pos[m][1], pos[m][2])) for m in entries),
    )


def f_lambda(shape: BiPartition) -> Fraction:
    """Reciprocal of the product of all hook lengths in both diagrams."""
    return Fraction(1, math.prod(hook_lengths(shape.first)) * math.prod(hook_lengths(shape.second)))


def dimension(shape: BiPartition) -> int:
    m = sum(shape.first)
    return math.comb(shape.n, m) * count_standard_tableaux(shape.first) * count_standard_tableaux(shape.second)


@dataclass(frozen=True)
class Transposition:
    result: BiTableau
    standard: bool
    d: Optional[Fraction]


def apply_transposition(T: BiTableau, i: int) -> Transposition:
    """
    Swap entries i and i+1.  ``d`` is 1/(c_{i+1} - c_i) when both entries lie
    in the same component and None otherwise.
    """
    if not 1 <= i <= T.n - 1:
        raise IndexRangeError(f"s_{i} out of range for n={T.n}")
    pos = T.positions()
    (k1, r1, c1), (k2, r2, c2) = pos[i], pos[i + 1]
    result = T.swap(i)
    d = Fraction(1, (c2 - r2) - (c1 - r1)) if k1 == k2 else None
    return Transposition(result, result.is_standard(), d)


def chain_to_hook(T: BiTableau) -> list[int]:
    """
    Adjacent transpositions carrying T to the hook bi-tableau through standard
    bi-tableaux only.

    Works from the largest entry down: the node holding m in the target is
    bubbled up to entry m.  Every entry it passes is incomparable with it, so
    each swap keeps the tableau standard.
    """
    if not T.is_standard():
        raise NonStandardTableauError(f"{T} is not standard")
    target = hook_bitableau(T.shape).positions()
    current = T
    chain = []
    for m in range(T.n, 0, -1):
        pos = current.positions()
        where = next(e for e, p in pos.items() if p == target[m])
        for i in range(where, m):
            current = current.swap(i)
            chain.append(i)
    return chain


def apply_chain(T: BiTableau, chain: Sequence[int]) -> list[BiTableau]:
    """Every bi-tableau visited along ``chain``, starting with T."""
    seq = [T]
    for i in chain:
        seq.append(seq[-1].swap(i))
    return seq
