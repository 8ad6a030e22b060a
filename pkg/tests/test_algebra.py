import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from hookfusion import algebra, wreath
from hookfusion.algebra import (
    AlgebraElement, adjoint, baxterized, coefficient, from_group, jm_projector, jucys_murphy,
    multiply, scale, t_projector, unit, zero,
)
from hookfusion.errors import IndexRangeError, RankMismatchError, SingularParameterError
from hookfusion.verify import baxter_braid_holds, random_baxter_parameters

from conftest import algebra_elements, rationals


def s(n, i):
    return from_group(wreath.generator(n, i))


def t(n):
    return from_group(wreath.generator(n, "t"))


def test_zero_pruning():
    x = AlgebraElement(2, {wreath.identity(2): 0, wreath.generator(2, 1): Fraction(1, 3)})
    assert len(x) == 1
    assert scale(x, 0) == zero(2)
    assert x - x == zero(2)


def test_add_scale():
    x = s(3, 1) + t(3)
    assert x + zero(3) == x
    assert unit(3) + unit(3) == scale(unit(3), 2)


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        unit(2) + unit(3)
    with pytest.raises(RankMismatchError):
        unit(2) * unit(3)


def test_multiply_examples():
    assert s(2, 1) * s(2, 1) == unit(2)
    assert t_projector(2, 1) * t_projector(2, -1) == zero(2)
    x = s(3, 2) + scale(t(3), Fraction(2, 5))
    assert x * unit(3) == x == unit(3) * x


def test_coefficient():
    e = wreath.identity(2)
    assert coefficient(unit(2), e) == 1
    assert coefficient(zero(2), wreath.generator(2, 1)) == 0
    assert coefficient(t(2), wreath.generator(2, "t")) == 1


def test_adjoint_examples():
    assert adjoint(unit(3)) == unit(3)
    assert adjoint(s(3, 1)) == s(3, 1)
    g = wreath.GroupElement(3, (2, 3, 1), (1, -1, 1))
    assert adjoint(from_group(g, 7)) == from_group(wreath.inverse(g), 7)


@given(algebra_elements(3))
def test_adjoint_involution(x):
    assert adjoint(adjoint(x)) == x


@given(algebra_elements(3), algebra_elements(3))
def test_adjoint_antimultiplicative(x, y):
    assert adjoint(x * y) == adjoint(y) * adjoint(x)


def test_associativity_exhaustive_n2():
    basis = [from_group(g) for g in wreath.enumerate_group(2)]
    for x, y, z in itertools.product(basis, repeat=3):
        assert (x * y) * z == x * (y * z)
    for x in basis:
        assert x * unit(2) == x == unit(2) * x


@settings(max_examples=100)
@given(algebra_elements(3), algebra_elements(3), algebra_elements(3))
def test_associativity_random_n3(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_t_projector():
    e, tt = wreath.identity(1), wreath.generator(1, "t")
    half = Fraction(1, 2)
    assert t_projector(1, 1) == AlgebraElement(1, {e: half, tt: half})
    assert t_projector(1, 1) + t_projector(1, -1) == unit(1)
    for n, p in itertools.product((1, 3), (1, -1)):
        assert t_projector(n, p) * t_projector(n, p) == t_projector(n, p)


def test_baxterized_examples():
    assert baxterized(2, 1, 1, 0, 1, 1) == s(2, 1) + unit(2)
    assert baxterized(2, 1, 5, 7, 1, -1) == s(2, 1)
    with pytest.raises(SingularParameterError):
        baxterized(2, 1, 3, 3, -1, -1)
    assert baxterized(2, 1, 3, 3, 1, -1) == s(2, 1)


def test_baxterized_unitarity_random():
    rng = random.Random(3)
    for _ in range(100):
        a, a1, _, p, p1, _ = random_baxter_parameters(rng)
        expected = scale(unit(3), 1 - 1 / (a - a1) ** 2) if p == p1 else unit(3)
        assert baxterized(3, 2, a, a1, p, p1) * baxterized(3, 2, a1, a, p1, p) == expected


def test_baxterized_braid_random():
    rng = random.Random(1)
    for _ in range(100):
        params = random_baxter_parameters(rng)
        assert baxter_braid_holds(3, 1, *params)
    assert baxter_braid_holds(4, 2, *random_baxter_parameters(rng))


def test_baxterized_braid_equal_spins_random():
    # all three spins equal: every factor carries its scalar term
    rng = random.Random(2)
    checked = 0
    while checked < 100:
        a, a1, a2, *_ = random_baxter_parameters(rng)
        if len({a, a1, a2}) < 3:
            continue
        p = rng.choice((1, -1))
        assert baxter_braid_holds(3, 1, a, a1, a2, p, p, p)
        checked += 1


@given(rationals, rationals, rationals, rationals)
def test_baxterized_distant_commutation(a, a1, b, b1):
    if a == a1 or b == b1:
        return
    x = baxterized(4, 1, a, a1, 1, 1)
    y = baxterized(4, 3, b, b1, -1, -1)
    assert x * y == y * x


def test_jucys_murphy_recursion():
    # j_1 = t, j_{i+1} = s_i j_i s_i
    for n in range(1, 5):
        j = t(n)
        assert jucys_murphy(n, 1) == j
        for i in range(1, n):
            j = s(n, i) * j * s(n, i)
            assert jucys_murphy(n, i + 1) == j


def test_jucys_murphy_examples():
    j2 = jucys_murphy(2, 2)
    (g,) = j2.terms
    assert g.images == (1, 2) and g.signs == (1, -1)
    for i in range(1, 4):
        assert jucys_murphy(3, i) * jucys_murphy(3, i) == unit(3)
    with pytest.raises(IndexRangeError):
        jucys_murphy(3, 4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jucys_murphy_commutation(n):
    for i in range(1, n + 1):
        for k in range(1, n):
            if k not in (i, i - 1):
                assert jucys_murphy(n, i) * s(n, k) == s(n, k) * jucys_murphy(n, i)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_jucys_murphy_shift(n):
    for l in range(1, n + 1):
        chain = from_group(wreath.word_product(n, range(l, n)))
        assert jucys_murphy(n, l) * chain == chain * jucys_murphy(n, n)


def test_jm_projectors():
    for n in (1, 2, 3, 4):
        for p in (1, -1):
            assert jm_projector(n, 1, p) == t_projector(n, p)
        for i, k in itertools.product(range(1, n + 1), repeat=2):
            for p, q in itertools.product((1, -1), repeat=2):
                A, B = jm_projector(n, i, p), jm_projector(n, k, q)
                assert A * B == B * A
            assert jm_projector(n, i, 1) * jm_projector(n, i, 1) == jm_projector(n, i, 1)


@given(algebra_elements(3))
def test_json_roundtrip(x):
    data = algebra.to_json(x)
    assert algebra.from_json(data) == x
    keys = [wreath.from_json(term["g"]).sort_key() for term in data["terms"]]
    assert keys == sorted(keys)
    for term in data["terms"]:
        num, den = term["coeff"].split("/")
        assert int(den) > 0
        assert Fraction(int(num), int(den)).denominator == int(den)
