"""
Sparse group algebra Q[Z2 wr S_n] with exact rational coefficients.

Coefficients are ``fractions.Fraction``.  Elements are immutable maps from
group elements to nonzero coefficients; zero terms are pruned eagerly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import wreath
from .errors import IndexRangeError, RankMismatchError, SingularParameterError
from .wreath import GroupElement

Scalar = Union[int, Fraction]

# the two spins; the first component of a bi-tableau carries +1
XI_1 = 1
XI_2 = -1
SPINS = (XI_1, XI_2)


class AlgebraElement:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[GroupElement, Scalar] | None = None):
        self.n = n
        clean: dict[GroupElement, Fraction] = {}
        for g, c in (terms or {}).items():
            if g.n != n:
                raise RankMismatchError(f"term of rank {g.n} in element of rank {n}")
            c = Fraction(c)
            if c:
                clean[g] = c
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict[GroupElement, Fraction]) -> AlgebraElement:
        x = object.__new__(cls)
        x.n = n
        x._terms = terms
        return x

    @property
    def terms(self) -> Mapping[GroupElement, Fraction]:
        return self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.n == other.n and self._terms == other._terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __getitem__(self, g: GroupElement) -> Fraction:
        return coefficient(self, g)

    def sorted_terms(self) -> list[tuple[GroupElement, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self._terms:
            return f"AlgebraElement(n={self.n}, 0)"
        body = " + ".join(f"{c}*{g!r}" for g, c in self.sorted_terms())
        return f"AlgebraElement(n={self.n}, {body})"


def zero(n: int) -> AlgebraElement:
    return AlgebraElement._raw(n, {})


def unit(n: int) -> AlgebraElement:
    return AlgebraElement._raw(n, {wreath.identity(n): Fraction(1)})


def from_group(g: GroupElement, c: Scalar = 1) -> AlgebraElement:
    return AlgebraElement(g.n, {g: c})


def _check_rank(x: AlgebraElement, y: AlgebraElement):
    if x.n != y.n:
        raise RankMismatchError(f"rank mismatch: {x.n} vs {y.n}")


def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check_rank(x, y)
    out = dict(x._terms)
    for g, c in y._terms.items():
        s = out.get(g, 0) + c
        if s:
            out[g] = s
        else:
            out.pop(g, None)
    return AlgebraElement._raw(x.n, out)


def scale(x: AlgebraElement, c: Scalar) -> AlgebraElement:
    c = Fraction(c)
    if not c:
        return zero(x.n)
    return AlgebraElement._raw(x.n, {g: a * c for g, a in x._terms.items()})


def linear_combination(n: int, pairs: Iterable[tuple[Scalar, AlgebraElement]]) -> AlgebraElement:
    out: dict[GroupElement, Fraction] = {}
    for c, x in pairs:
        if x.n != n:
            raise RankMismatchError(f"rank mismatch: {x.n} vs {n}")
        for g, a in x._terms.items():
            out[g] = out.get(g, 0) + c * a
    return AlgebraElement(n, out)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check_rank(x, y)
    compose = wreath.compose
    out: dict[GroupElement, Fraction] = {}
    get = out.get
    for h, b in y._terms.items():
        for g, a in x._terms.items():
            gh = compose(g, h)
            out[gh] = get(gh, 0) + a * b
    return AlgebraElement._raw(x.n, {g: c for g, c in out.items() if c})


def product(n: int, factors: Iterable[AlgebraElement]) -> AlgebraElement:
    out = unit(n)
    for f in factors:
        out = multiply(out, f)
    return out


def coefficient(x: AlgebraElement, g: GroupElement) -> Fraction:
    return x._terms.get(g, Fraction(0))


def adjoint(x: AlgebraElement) -> AlgebraElement:
    """Image under the anti-automorphism g -> g^{-1}."""
    return AlgebraElement._raw(x.n, {wreath.inverse(g): c for g, c in x._terms.items()})


def _check_spin(p: int):
    if p not in SPINS:
        raise ValueError(f"spin must be +1 or -1, got {p!r}")


def t_projector(n: int, p: int) -> AlgebraElement:
    """(1 + p t) / 2."""
    _check_spin(p)
    half = Fraction(1, 2)
    return AlgebraElement(n, {wreath.identity(n): half, wreath.generator(n, "t"): p * half})


def baxterized(n: int, i: int, a: Scalar, a2: Scalar, p: int, p2: int) -> AlgebraElement:
    """s_i + delta(p, p2) / (a - a2)."""
    _check_spin(p)
    _check_spin(p2)
    s = wreath.generator(n, i)
    if p != p2:
        return from_group(s)
    if a == a2:
        raise SingularParameterError(f"S_{i}({a}, {a2}) with equal spins is undefined")
    return AlgebraElement(n, {s: 1, wreath.identity(n): 1 / (Fraction(a) - Fraction(a2))})


def jucys_murphy_element(n: int, i: int) -> GroupElement:
    """The group element j_i, which negates coordinate i."""
    if not 1 <= i <= n:
        raise IndexRangeError(f"j_{i} undefined for n={n}")
    signs = tuple(-1 if k == i else 1 for k in range(1, n + 1))
    return wreath.GroupElement(n, tuple(range(1, n + 1)), signs)


def jucys_murphy(n: int, i: int) -> AlgebraElement:
    return from_group(jucys_murphy_element(n, i))


def jm_projector(n: int, i: int, p: int) -> AlgebraElement:
    """(1 + p j_i) / 2."""
    _check_spin(p)
    half = Fraction(1, 2)
    return AlgebraElement(n, {wreath.identity(n): half, jucys_murphy_element(n, i): p * half})


def format_fraction(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def to_json(x: AlgebraElement) -> dict:
    return {
        "n": x.n,
        "terms": [{"g": wreath.to_json(g), "coeff": format_fraction(c)} for g, c in x.sorted_terms()],
    }


def from_json(data: dict) -> AlgebraElement:
    n = int(data["n"])
    terms = {}
    for term in data["terms"]:
        g = wreath.from_json(term["g"])
        terms[g] = terms.get(g, 0) + parse_fraction(term["coeff"])
    return AlgebraElement(n, terms)
