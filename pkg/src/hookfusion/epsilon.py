"""
Rational functions of one formal parameter eps whose numerators take values
in the group algebra and whose denominators are rational scalars.

Products are formed without cancellation; the value at eps = 0 is read off by
comparing the orders of vanishing of numerator and denominator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import algebra, wreath
from .algebra import AlgebraElement, Scalar
from .errors import PoleError, RankMismatchError, SingularParameterError


def _trim(coeffs: list, is_zero) -> tuple:
    while coeffs and is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class EpsPoly:
    n: int
    coefficients: tuple[AlgebraElement, ...]

    @classmethod
    def make(cls, n: int, coefficients: Iterable[AlgebraElement]) -> EpsPoly:
        coeffs = list(coefficients)
        if any(c.n != n for c in coeffs):
            raise RankMismatchError("coefficients of mixed rank")
        return cls(n, _trim(coeffs, lambda c: not c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def order(self) -> float:
        """Index of the lowest nonzero coefficient; inf for the zero polynomial."""
        return next((k for k, c in enumerate(self.coefficients) if c), math.inf)

    def __mul__(self, other: EpsPoly) -> EpsPoly:
        if self.n != other.n:
            raise RankMismatchError(f"rank mismatch: {self.n} vs {other.n}")
        if not self.coefficients or not other.coefficients:
            return EpsPoly(self.n, ())
        out = [algebra.zero(self.n) for _ in range(len(self.coefficients) + len(other.coefficients) - 1)]
        for a, x in enumerate(self.coefficients):
            if not x:
                continue
            for b, y in enumerate(other.coefficients):
                if y:
                    out[a + b] = out[a + b] + algebra.multiply(x, y)
        return EpsPoly.make(self.n, out)


@dataclass(frozen=True)
class ScalarPoly:
    coefficients: tuple[Fraction, ...]

    @classmethod
    def make(cls, coefficients: Iterable[Scalar]) -> ScalarPoly:
        return cls(_trim([Fraction(c) for c in coefficients], lambda c: c == 0))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def order(self) -> float:
        return next((k for k, c in enumerate(self.coefficients) if c), math.inf)

    def __mul__(self, other: ScalarPoly) -> ScalarPoly:
        if not self.coefficients or not other.coefficients:
            return ScalarPoly(())
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for a, x in enumerate(self.coefficients):
            for b, y in enumerate(other.coefficients):
                out[a + b] += x * y
        return ScalarPoly.make(out)


@dataclass(frozen=True)
class EpsRatFn:
    num: EpsPoly
    den: ScalarPoly

    def __post_init__(self):
        if not self.den.coefficients:
            raise ZeroDivisionError("denominator is identically zero")

    @property
    def n(self) -> int:
        return self.num.n

    @classmethod
    def constant(cls, x: AlgebraElement, den: Scalar = 1) -> EpsRatFn:
        return cls(EpsPoly.make(x.n, [x]), ScalarPoly.make([den]))

    @classmethod
    def one(cls, n: int) -> EpsRatFn:
        return cls.constant(algebra.unit(n))

    def __mul__(self, other: EpsRatFn) -> EpsRatFn:
        return ratfn_multiply(self, other)


def ratfn_multiply(f: EpsRatFn, g: EpsRatFn) -> EpsRatFn:
    """Numerators multiplied in order (f on the left), denominators as scalars."""
    if f.n != g.n:
        raise RankMismatchError(f"rank mismatch: {f.n} vs {g.n}")
    return EpsRatFn(f.num * g.num, f.den * g.den)


def ratfn_product(n: int, factors: Sequence[EpsRatFn]) -> EpsRatFn:
    out = EpsRatFn.one(n)
    for f in factors:
        out = ratfn_multiply(out, f)
    return out


@dataclass(frozen=True)
class Limit:
    value: AlgebraElement
    num_order: float
    den_order: int


def limit_at_zero(f: EpsRatFn) -> Limit:
    """Value at eps = 0, which exists iff the numerator vanishes to at least the denominator's order."""
    den_order = f.den.order()
    num_order = f.num.order()
    if num_order < den_order:
        raise PoleError(num_order, den_order)
    if den_order < len(f.num.coefficients):
        value = algebra.scale(f.num.coefficients[den_order], 1 / f.den.coefficients[den_order])
    else:
        value = algebra.zero(f.n)
    return Limit(value, num_order, den_order)


def evaluate(f: EpsRatFn, eps: Scalar) -> AlgebraElement:
    """Exact value at a point where the denominator does not vanish."""
    eps = Fraction(eps)
    den = sum(c * eps**k for k, c in enumerate(f.den.coefficients))
    if den == 0:
        raise ZeroDivisionError(f"denominator vanishes at eps={eps}")
    num = algebra.linear_combination(f.n, ((eps**k, c) for k, c in enumerate(f.num.coefficients)))
    return algebra.scale(num, 1 / den)


def factor_ratfn(n: int, i: int, content_diff: Scalar, hook_slope: Scalar, delta: bool) -> EpsRatFn:
    """
    s_i + delta / (content_diff + hook_slope * eps), written over the common
    denominator content_diff + hook_slope * eps.
    """
    s = algebra.from_group(wreath.generator(n, i))
    if not delta:
        return EpsRatFn.constant(s)
    content_diff, hook_slope = Fraction(content_diff), Fraction(hook_slope)
    if content_diff == 0 and hook_slope == 0:
        raise SingularParameterError(f"S_{i} factor is singular along the whole line")
    constant_term = algebra.AlgebraElement(n, {wreath.generator(n, i): content_diff, wreath.identity(n): 1})
    num = EpsPoly.make(n, [constant_term, algebra.scale(s, hook_slope)])
    return EpsRatFn(num, ScalarPoly.make([content_diff, hook_slope]))
