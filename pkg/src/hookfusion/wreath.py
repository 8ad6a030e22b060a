"""
The hyperoctahedral group Z2 wr S_n as signed permutations of {1..n}.

An element maps i to signs[i] * images[i] and is extended to negative points
by oddness, g(-i) = -g(i).  Products act right to left: ``compose(g, h)``
applies ``h`` first.

Generators are labelled ``"t"`` (negate the first coordinate) and the integer
``i`` for the adjacent transposition s_i, 1 <= i <= n-1.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import IndexRangeError, InvalidRankError, RankMismatchError, ResourceLimitError

Generator = Union[int, str]

MAX_RANK = 6


@dataclass(frozen=True)
class GroupElement:
    n: int
    images: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidRankError(f"rank must be >= 1, got {self.n}")
        if len(self.images) != self.n or len(self.signs) != self.n:
            raise InvalidRankError("images and signs must have length n")
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"images {self.images} is not a permutation of 1..{self.n}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1/-1, got {self.signs}")

    def __call__(self, x: int) -> int:
        """Image of the signed point x (x != 0)."""
        i = abs(x) - 1
        y = self.signs[i] * self.images[i]
        return y if x > 0 else -y

    def __mul__(self, other: GroupElement) -> GroupElement:
        return compose(self, other)

    def sort_key(self) -> tuple:
        return (self.images, tuple(0 if s > 0 else 1 for s in self.signs))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1)) and all(s == 1 for s in self.signs)

    def __repr__(self):
        parts = [("-" if s < 0 else "") + str(m) for m, s in zip(self.images, self.signs)]
        return f"GroupElement[{' '.join(parts)}]"


def _make(n: int, images: tuple[int, ...], signs: tuple[int, ...]) -> GroupElement:
    # skips validation; callers guarantee a valid signed permutation
    g = object.__new__(GroupElement)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "images", images)
    object.__setattr__(g, "signs", signs)
    return g


def identity(n: int) -> GroupElement:
    if n < 1:
        raise InvalidRankError(f"rank must be >= 1, got {n}")
    return _make(n, tuple(range(1, n + 1)), (1,) * n)


def generator(n: int, which: Generator) -> GroupElement:
    """The Coxeter generator ``t`` or ``s_i`` (given as the integer i)."""
    e = identity(n)
    if which == "t":
        return _make(n, e.images, (-1,) + e.signs[1:])
    if isinstance(which, int) and not isinstance(which, bool):
        if not 1 <= which <= n - 1:
            raise IndexRangeError(f"s_{which} is not a generator for n={n}")
        images = list(e.images)
        images[which - 1], images[which] = images[which], images[which - 1]
        return _make(n, tuple(images), e.signs)
    raise IndexRangeError(f"unknown generator label {which!r}")


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """The product g*h: apply h, then g."""
    if g.n != h.n:
        raise RankMismatchError(f"rank mismatch: {g.n} vs {h.n}")
    gi, gs = g.images, g.signs
    images = tuple(gi[m - 1] for m in h.images)
    signs = tuple(s * gs[m - 1] for m, s in zip(h.images, h.signs))
    return _make(g.n, images, signs)


def inverse(g: GroupElement) -> GroupElement:
    images = [0] * g.n
    signs = [0] * g.n
    for i, (m, s) in enumerate(zip(g.images, g.signs), start=1):
        images[m - 1] = i
        signs[m - 1] = s
    return _make(g.n, tuple(images), tuple(signs))


def group_order(n: int) -> int:
    return 2**n * math.factorial(n)


def enumerate_group(n: int, bound: int = MAX_RANK) -> Iterator[GroupElement]:
    """All 2^n n! elements, lexicographic on images and then on signs (+ before -)."""
    if n < 1:
        raise InvalidRankError(f"rank must be >= 1, got {n}")
    if n > bound:
        raise ResourceLimitError(f"n={n} exceeds enumeration bound {bound}")
    sign_patterns = list(itertools.product((1, -1), repeat=n))
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in sign_patterns:
            yield _make(n, perm, signs)


def word_product(n: int, word: Sequence[Generator]) -> GroupElement:
    """Compose the generators of ``word`` left to right: word[0] * word[1] * ..."""
    g = identity(n)
    for label in word:
        g = compose(g, generator(n, label))
    return g


def to_word(g: GroupElement) -> list[Generator]:
    """
    A word in the generators whose product is g.

    g is split as (product of coordinate flips) * (unsigned permutation); the
    flip of coordinate j is s_{j-1}...s_1 t s_1...s_{j-1}, and the permutation
    is written out by bubble sort.  Not a reduced word.
    """
    word: list[Generator] = []
    for m, s in zip(g.images, g.signs):
        if s < 0:
            down = list(range(m - 1, 0, -1))
            word.extend(down + ["t"] + down[::-1])
    images = list(g.images)
    swaps = []
    changed = True
    while changed:
        changed = False
        for b in range(len(images) - 1):
            if images[b] > images[b + 1]:
                images[b], images[b + 1] = images[b + 1], images[b]
                swaps.append(b + 1)
                changed = True
    word.extend(reversed(swaps))
    return word


def random_element(n: int, rng: random.Random) -> GroupElement:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    signs = tuple(rng.choice((1, -1)) for _ in range(n))
    return _make(n, tuple(images), signs)


def to_json(g: GroupElement) -> dict:
    return {"images": list(g.images), "signs": list(g.signs)}


def from_json(data: dict) -> GroupElement:
    images = tuple(int(x) for x in data["images"])
    return GroupElement(len(images), images, tuple(int(s) for s in data["signs"]))
