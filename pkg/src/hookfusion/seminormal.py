"""
Young's seminormal form for the irreducible representations of Z2 wr S_n,
used as an independent, floating-point construction of the diagonal matrix
elements F_T = sum_g <v_T, g v_T> g.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import wreath
from .algebra import AlgebraElement
from .bitableaux import BiPartition, BiTableau, apply_transposition, standard_bitableaux
from .errors import RankMismatchError
from .wreath import GroupElement


@dataclass
class SeminormalRep:
    shape: BiPartition
    basis: list[BiTableau]
    mat_s: dict[int, np.ndarray]
    mat_t: np.ndarray
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.shape.n

    def index(self, T: BiTableau) -> int:
        return self.basis.index(T)

    def generator_matrix(self, label) -> np.ndarray:
        return self.mat_t if label == "t" else self.mat_s[label]


def build_rep(shape: BiPartition) -> SeminormalRep:
    basis = standard_bitableaux(shape)
    where = {T: a for a, T in enumerate(basis)}
    d, n = len(basis), shape.n
    mat_s = {}
    for i in range(1, n):
        M = np.zeros((d, d))
        for col, T in enumerate(basis):
            move = apply_transposition(T, i)
            if move.d is None:
                M[where[move.result], col] = 1.0
                continue
            dt = float(move.d)
            M[col, col] = dt
            if move.standard:
                M[where[move.result], col] = math.sqrt(1.0 - dt * dt)
        mat_s[i] = M
    mat_t = np.diag([1.0 if 1 in T.reading_word()[:sum(shape.first)] else -1.0 for T in basis])
    return SeminormalRep(shape, basis, mat_s, mat_t)


def represent(rep: SeminormalRep, g: GroupElement) -> np.ndarray:
    """Matrix of g: the product of generator matrices along a word for g."""
    if g.n != rep.n:
        raise RankMismatchError(f"element of rank {g.n} for a representation of rank {rep.n}")
    M = rep._memo.get(g)
    if M is None:
        M = np.eye(rep.dim)
        for label in wreath.to_word(g):
            M = M @ rep.generator_matrix(label)
        rep._memo[g] = M
    return M


_reps: dict[BiPartition, SeminormalRep] = {}


def rep_for(shape: BiPartition) -> SeminormalRep:
    if shape not in _reps:
        _reps[shape] = build_rep(shape)
    return _reps[shape]


def oracle_F(T: BiTableau, bound: int = wreath.MAX_RANK) -> dict[GroupElement, float]:
    """sum_g <v_T, g v_T> g as a map from group elements to floats."""
    rep = rep_for(T.shape)
    a = rep.index(T)
    return {g: float(represent(rep, g)[a, a]) for g in wreath.enumerate_group(T.n, bound)}


def represent_element(rep: SeminormalRep, x: Mapping[GroupElement, float] | AlgebraElement) -> np.ndarray:
    terms = x.terms if isinstance(x, AlgebraElement) else x
    M = np.zeros((rep.dim, rep.dim))
    for g, c in terms.items():
        M += float(c) * represent(rep, g)
    return M


@dataclass(frozen=True)
class Comparison:
    max_abs_diff: float
    passed: bool


def compare(exact: AlgebraElement, approx: Mapping[GroupElement, float], tol: float) -> Comparison:
    """Largest coefficient deviation over the union of both supports."""
    for g in approx:
        if g.n != exact.n:
            raise RankMismatchError(f"rank mismatch: {g.n} vs {exact.n}")
    support = set(exact.terms) | set(approx)
    worst = max((abs(float(exact[g]) - approx.get(g, 0.0)) for g in support), default=0.0)
    return Comparison(worst, worst <= tol)
