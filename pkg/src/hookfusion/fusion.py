"""
Hook fusion: the ordered product of Baxterized factors attached to a standard
bi-tableau, evaluated at coinciding parameters.

Parameters of entries in the same principal hook are tied together, so the
product is restricted to the line z_m = a_{hook(m)} * eps for distinct hook
values a_h, and the value at eps = 0 is taken exactly.  The spin shifts w_m
are set to zero before anything else.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Optional

from . import algebra, wreath
from .algebra import AlgebraElement
from .bitableaux import BiTableau, HookId, apply_transposition, f_lambda, node_data
from .epsilon import EpsRatFn, factor_ratfn, limit_at_zero, ratfn_product
from .errors import InvalidMoveError, PoleError

HookAssignment = Mapping[HookId, Fraction]


def default_assignment(T: BiTableau) -> dict[HookId, Fraction]:
    """Hooks of component 1 then component 2 get 1, 2, 3, ..."""
    return {h: Fraction(v) for v, h in enumerate(T.shape.hook_ids(), start=1)}


def _normalize(T: BiTableau, A: Optional[HookAssignment]) -> tuple[tuple[HookId, Fraction], ...]:
    A = default_assignment(T) if A is None else A
    missing = set(T.shape.hook_ids()) - set(A)
    if missing:
        raise ValueError(f"hook assignment misses hooks {sorted(missing)}")
    values = [Fraction(A[h]) for h in T.shape.hook_ids()]
    if len(set(values)) != len(values):
        raise ValueError("hook assignment must be injective")
    return tuple(sorted((h, Fraction(A[h])) for h in T.shape.hook_ids()))


@dataclass(frozen=True)
class FactorSpec:
    """The Baxterized factor S_r(z_k + c_k, z_r + c_r) inside phi_k."""
    k: int
    r: int
    content_diff: int
    hook_slope: Fraction
    delta: bool

    @property
    def singular(self) -> bool:
        return self.delta and self.content_diff == 0


def factor_specs(T: BiTableau, A: Optional[HookAssignment] = None) -> list[FactorSpec]:
    """Baxterized factors of all phi_k, for k = n down to 1, each listed left to right."""
    data = node_data(T)
    A = dict(_normalize(T, A))
    specs = []
    for k in range(T.n, 0, -1):
        for r in range(k - 1, 0, -1):
            specs.append(FactorSpec(
                k, r,
                data.content(k) - data.content(r),
                A[data.hook(k)] - A[data.hook(r)],
                data.spin(k) == data.spin(r),
            ))
    return specs


def singularities(T: BiTableau) -> list[tuple[int, int]]:
    """(k, r) for every factor of phi_k with a vanishing content difference."""
    return [(f.k, f.r) for f in factor_specs(T) if f.singular]


def _shift(n: int, k: int) -> AlgebraElement:
    """s_1 s_2 ... s_{k-1}."""
    return algebra.from_group(wreath.word_product(n, range(1, k)))


def _baxter_factor(n: int, spec: FactorSpec) -> EpsRatFn:
    return factor_ratfn(n, spec.r, spec.content_diff, spec.hook_slope, spec.delta)


def build_phi_factors(T: BiTableau, A: Optional[HookAssignment] = None) -> list[EpsRatFn]:
    """
    Factors of phi_n ... phi_1 in multiplication order, where
    phi_k = S_{k-1}(..) ... S_1(..) t(p_k) s_1 ... s_{k-1}.
    """
    n = T.n
    data = node_data(T)
    specs = factor_specs(T, A)
    factors = []
    for k in range(n, 0, -1):
        factors.extend(_baxter_factor(n, s) for s in specs if s.k == k)
        factors.append(EpsRatFn.constant(algebra.t_projector(n, data.spin(k))))
        if k > 1:
            factors.append(EpsRatFn.constant(_shift(n, k)))
    return factors


def build_tilde_factors(T: BiTableau, A: Optional[HookAssignment] = None) -> list[EpsRatFn]:
    """Factors of (phi~_n ... phi~_1) J_1(p_1) ... J_n(p_n)."""
    n = T.n
    data = node_data(T)
    specs = factor_specs(T, A)
    factors = []
    for k in range(n, 0, -1):
        factors.extend(_baxter_factor(n, s) for s in specs if s.k == k)
        if k > 1:
            factors.append(EpsRatFn.constant(_shift(n, k)))
    factors.extend(EpsRatFn.constant(algebra.jm_projector(n, i, data.spin(i))) for i in range(1, n + 1))
    return factors


@dataclass(frozen=True)
class FusionResult:
    phi: AlgebraElement
    num_order: float
    den_order: int
    tableau: BiTableau

    @property
    def shape(self):
        return self.tableau.shape


def _evaluate(T: BiTableau, factors: list[EpsRatFn]) -> FusionResult:
    try:
        lim = limit_at_zero(ratfn_product(T.n, factors))
    except PoleError as exc:
        raise PoleError(exc.num_order, exc.den_order,
                        f"fusion product for {T} has a pole (orders {exc.num_order} < {exc.den_order})") from exc
    return FusionResult(lim.value, lim.num_order, lim.den_order, T)


@lru_cache(maxsize=4096)
def _hook_fusion(T: BiTableau, A: tuple) -> FusionResult:
    return _evaluate(T, build_phi_factors(T, dict(A)))


@lru_cache(maxsize=1024)
def _tilde(T: BiTableau, A: tuple) -> FusionResult:
    return _evaluate(T, build_tilde_factors(T, dict(A)))


def hook_fusion(T: BiTableau, A: Optional[HookAssignment] = None) -> FusionResult:
    """Phi_T: the fusion product restricted to the hook line, evaluated at eps = 0."""
    return _hook_fusion(T, _normalize(T, A))


def tilde_factorization(T: BiTableau, A: Optional[HookAssignment] = None) -> AlgebraElement:
    return _tilde(T, _normalize(T, A)).phi


def phi(T: BiTableau) -> AlgebraElement:
    return hook_fusion(T).phi


def primitive_idempotent(T: BiTableau) -> AlgebraElement:
    """E_T = f_lambda * Phi_T."""
    return algebra.scale(phi(T), f_lambda(T.shape))


def diagonal_matrix_element(T: BiTableau) -> AlgebraElement:
    """F_T = 2^n * Phi_T."""
    return algebra.scale(phi(T), 2**T.n)


def _adjacency(T: BiTableau, i: int) -> Optional[str]:
    pos = T.positions()
    (k1, r1, c1), (k2, r2, c2) = pos[i], pos[i + 1]
    if k1 != k2:
        return None
    if r1 == r2 and c2 == c1 + 1:
        return "row"
    if c1 == c2 and r2 == r1 + 1:
        return "column"
    return None


def divisibility_check(T: BiTableau, i: int) -> bool:
    """s_i Phi_T = Phi_T for row-adjacent i, i+1 and = -Phi_T for column-adjacent."""
    kind = _adjacency(T, i)
    if kind is None:
        raise InvalidMoveError(f"entries {i}, {i + 1} of {T} are not adjacent in a row or column")
    p = phi(T)
    s = algebra.from_group(wreath.generator(T.n, i))
    return s * p == (p if kind == "row" else -p)


def intertwiner_check(T: BiTableau, i: int) -> bool:
    """
    S_i(c_i, c_{i+1}) Phi_T = Phi_T' S_i(c_{i+1}, c_i) for T' = s_i T standard with
    i, i+1 in one component; Phi_T' = s_i Phi_T s_i across components.  A
    non-standard T' falls back to the divisibility identity.
    """
    move = apply_transposition(T, i)
    if not move.standard:
        return divisibility_check(T, i)
    n = T.n
    p, p_new = phi(T), phi(move.result)
    if move.d is None:
        s = algebra.from_group(wreath.generator(n, i))
        return p_new == s * p * s
    data = node_data(T)
    ci, cj = data.content(i), data.content(i + 1)
    pi, pj = data.spin(i), data.spin(i + 1)
    left = algebra.baxterized(n, i, ci, cj, pi, pj)
    right = algebra.baxterized(n, i, cj, ci, pj, pi)
    return left * p == p_new * right


def cross_component_coefficient_check(T: BiTableau, i: int) -> bool:
    """The coefficient of s_i in Phi_T vanishes when i, i+1 lie in different components."""
    if apply_transposition(T, i).d is not None:
        raise InvalidMoveError(f"entries {i}, {i + 1} of {T} lie in the same component")
    return algebra.coefficient(phi(T), wreath.generator(T.n, i)) == 0


def clear_cache():
    _hook_fusion.cache_clear()
    _tilde.cache_clear()
