"""
Verification suites behind ``hookfusion verify``.

``exact`` runs the rational identities (group relations, Baxterized and
Jucys-Murphy relations, tableau combinatorics, fusion invariants); ``oracle``
compares 2^n Phi_T with the seminormal construction; ``all`` runs both.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import algebra, bitableaux, fusion, seminormal, wreath
from .algebra import baxterized as S
from .algebra import jm_projector, jucys_murphy, unit
from .bitableaux import BiPartition, BiTableau
from .errors import PoleError

EXACT_MAX_N = 5
ORACLE_MAX_N = 4
# per-tableau exact checks run on every tableau up to this rank, hook tableaux only above it
FULL_TABLEAU_MAX_N = 4
PAIRWISE_MAX_N = 3


@dataclass
class CheckRecord:
    name: str
    n: int
    shape: Optional[list] = None
    tableau: Optional[int] = None
    status: str = "pass"
    detail: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    n: int
    seed: int
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.status != "pass"]

    def to_json(self, timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            rec = asdict(c)
            if not timings:
                rec.pop("seconds")
            checks.append(rec)
        return {"suite": self.suite, "n": self.n, "seed": self.seed, "pass": self.passed, "checks": checks}


class TheoremViolation(Exception):
    """A fusion product had a pole; carries the offending record."""

    def __init__(self, record: CheckRecord):
        self.record = record
        super().__init__(record.detail)


class _Runner:
    def __init__(self, report: VerificationReport):
        self.report = report

    def check(self, name: str, n: int, fn: Callable[[], tuple[bool, str] | bool],
              shape: Optional[BiPartition] = None, tableau: Optional[int] = None):
        rec = CheckRecord(name, n, shape.to_json() if shape else None, tableau)
        start = time.perf_counter()
        try:
            out = fn()
            ok, detail = out if isinstance(out, tuple) else (out, "")
        except PoleError as exc:
            rec.status, rec.detail = "fail", f"pole: {exc}"
            rec.seconds = time.perf_counter() - start
            self.report.checks.append(rec)
            raise TheoremViolation(rec) from exc
        rec.seconds = time.perf_counter() - start
        rec.status = "pass" if ok else "fail"
        rec.detail = detail
        self.report.checks.append(rec)


def _first_failure(items, predicate, describe) -> tuple[bool, str]:
    for item in items:
        if not predicate(item):
            return False, describe(item)
    return True, ""


# --- group relations -------------------------------------------------------

def group_relation_failures(n: int) -> list[str]:
    """Every defining relation of the Coxeter presentation of type B at rank n."""
    e = wreath.identity(n)
    t = wreath.generator(n, "t")
    s = {i: wreath.generator(n, i) for i in range(1, n)}
    bad = []
    if t * t != e:
        bad.append("t^2")
    for i in s:
        if s[i] * s[i] != e:
            bad.append(f"s{i}^2")
        if i + 1 in s and s[i] * s[i + 1] * s[i] != s[i + 1] * s[i] * s[i + 1]:
            bad.append(f"braid {i}")
        for j in s:
            if abs(i - j) > 1 and s[i] * s[j] != s[j] * s[i]:
                bad.append(f"commute {i},{j}")
        if i >= 2 and s[i] * t != t * s[i]:
            bad.append(f"s{i} t")
    if 1 in s and t * s[1] * t * s[1] != s[1] * t * s[1] * t:
        bad.append("t s1 t s1")
    return bad


def random_rational(rng: random.Random, span: int = 20, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def baxter_braid_holds(n: int, i: int, a, a1, a2, p, p1, p2) -> bool:
    lhs = S(n, i, a, a1, p, p1) * S(n, i + 1, a, a2, p, p2) * S(n, i, a1, a2, p1, p2)
    rhs = S(n, i + 1, a1, a2, p1, p2) * S(n, i, a, a2, p, p2) * S(n, i + 1, a, a1, p, p1)
    return lhs == rhs


def random_baxter_parameters(rng: random.Random):
    """(a, a', a'', p, p', p'') with a's pairwise distinct wherever the spins agree."""
    while True:
        a = [random_rational(rng) for _ in range(3)]
        p = [rng.choice(algebra.SPINS) for _ in range(3)]
        if all(a[x] != a[y] for x, y in ((0, 1), (0, 2), (1, 2)) if p[x] == p[y]):
            return (*a, *p)


def _relation_checks(run: _Runner, n: int, rng: random.Random, trials: int = 100):
    run.check("group_relations", n, lambda: (not (bad := group_relation_failures(n)), ", ".join(bad)))
    run.check("enumerate_group_count", n,
              lambda: len(set(wreath.enumerate_group(n))) == wreath.group_order(n))

    if n <= 3:
        elements = list(wreath.enumerate_group(n))
    else:
        elements = [wreath.random_element(n, rng) for _ in range(1000)]
    run.check("to_word_roundtrip", n, lambda: _first_failure(
        elements, lambda g: wreath.word_product(n, wreath.to_word(g)) == g, lambda g: repr(g)))

    if n >= 3:
        params = [random_baxter_parameters(rng) for _ in range(trials)]
        run.check("baxterized_braid", n, lambda: _first_failure(
            params, lambda q: baxter_braid_holds(n, 1, *q), str))
    if n >= 4:
        def distant(q):
            (a, a1, _, p, p1, _), (b, b1, _, r, r1, _) = q
            x, y = S(n, 1, a, a1, p, p1), S(n, 3, b, b1, r, r1)
            return x * y == y * x
        params = [(random_baxter_parameters(rng), random_baxter_parameters(rng)) for _ in range(trials)]
        run.check("baxterized_commutation", n, lambda: _first_failure(params, distant, str))
    if n >= 2:
        def unitarity(q):
            a, a1, _, p, p1, _ = q
            if p == p1 and a == a1:
                return True
            expected = unit(n) if p != p1 else algebra.scale(unit(n), 1 - 1 / (a - a1) ** 2)
            return S(n, 1, a, a1, p, p1) * S(n, 1, a1, a, p1, p) == expected
        params = [random_baxter_parameters(rng) for _ in range(trials)]
        run.check("baxterized_unitarity", n, lambda: _first_failure(params, unitarity, str))

    def jm_commutes():
        for i in range(1, n + 1):
            for k in range(1, n):
                if k not in (i, i - 1):
                    sk = algebra.from_group(wreath.generator(n, k))
                    if jucys_murphy(n, i) * sk != sk * jucys_murphy(n, i):
                        return False, f"j{i} s{k}"
        return True, ""
    run.check("jm_commutation", n, jm_commutes)

    def jm_shift():
        for l in range(1, n + 1):
            chain = algebra.from_group(wreath.word_product(n, range(l, n)))
            if jucys_murphy(n, l) * chain != chain * jucys_murphy(n, n):
                return False, f"l={l}"
        return True, ""
    run.check("jm_shift", n, jm_shift)

    def jm_projectors_commute():
        for _ in range(trials):
            i, k = rng.sample(range(1, n + 1), 2)
            p, q = rng.choice(algebra.SPINS), rng.choice(algebra.SPINS)
            if jm_projector(n, i, p) * jm_projector(n, k, q) != jm_projector(n, k, q) * jm_projector(n, i, p):
                return False, f"J{i}({p}) J{k}({q})"
        return True, ""
    if n >= 2:
        run.check("jm_projector_commutation", n, jm_projectors_commute)


# --- combinatorics ---------------------------------------------------------

def _tableau_checks(run: _Runner, n: int):
    shapes = bitableaux.bipartitions(n)
    run.check("sum_of_squared_dimensions", n,
              lambda: sum(bitableaux.dimension(sh) ** 2 for sh in shapes) == wreath.group_order(n))
    for sh in shapes:
        tabs = bitableaux.standard_bitableaux(sh)
        run.check("dimension_matches_enumeration", n, lambda: len(tabs) == bitableaux.dimension(sh), shape=sh)
        run.check("hook_bitableau_standard", n, lambda: bitableaux.hook_bitableau(sh).is_standard(), shape=sh)
        run.check("unit_coefficient_identity", n, lambda: (
            1 / bitableaux.f_lambda(sh) * Fraction(bitableaux.dimension(sh), wreath.group_order(n))
            == Fraction(1, 2**n)), shape=sh)
        target = bitableaux.hook_bitableau(sh)

        def chains_ok():
            for T in tabs:
                seq = bitableaux.apply_chain(T, bitableaux.chain_to_hook(T))
                if seq[-1] != target or not all(x.is_standard() for x in seq):
                    return False, str(T)
            return True, ""
        run.check("chain_to_hook", n, chains_ok, shape=sh)


# --- fusion ----------------------------------------------------------------

def _fusion_tableau_checks(run: _Runner, sh: BiPartition, a: int, T: BiTableau, full: bool):
    n = T.n
    data = bitableaux.node_data(T)

    def regular():
        r = fusion.hook_fusion(T)
        return r.num_order >= r.den_order, f"orders ({r.num_order}, {r.den_order})"
    run.check("regularity", n, regular, sh, a)
    run.check("unit_coefficient", n,
              lambda: fusion.phi(T)[wreath.identity(n)] == Fraction(1, 2**n), sh, a)
    if not full:
        return
    phi = fusion.phi(T)
    t = wreath.generator(n, "t")
    run.check("t_coefficient", n, lambda: phi[t] == Fraction(data.spin(1), 2**n), sh, a)
    run.check("adjoint_symmetry", n, lambda: algebra.adjoint(phi) == phi, sh, a)
    run.check("tilde_factorization", n, lambda: fusion.tilde_factorization(T) == phi, sh, a)

    def absorbs():
        for i in range(1, n + 1):
            J = jm_projector(n, i, data.spin(i))
            if phi * J != phi or J * phi != phi:
                return False, f"i={i}"
        return True, ""
    run.check("jm_absorption", n, absorbs, sh, a)

    for i in range(1, n):
        move = bitableaux.apply_transposition(T, i)
        if move.d is None:
            run.check("cross_component_coefficient", n,
                      lambda: fusion.cross_component_coefficient_check(T, i), sh, a)
        elif not move.standard:
            run.check("divisibility", n, lambda: fusion.divisibility_check(T, i), sh, a)
        else:
            run.check("s_coefficient", n,
                      lambda: phi[wreath.generator(n, i)] == move.d / 2**n, sh, a)
        if move.standard:
            run.check("intertwiner", n, lambda: fusion.intertwiner_check(T, i), sh, a)


def _fusion_checks(run: _Runner, n: int):
    shapes = bitableaux.bipartitions(n)
    full = n <= FULL_TABLEAU_MAX_N
    all_tabs = []
    for sh in shapes:
        tabs = bitableaux.standard_bitableaux(sh)
        hook = bitableaux.hook_bitableau(sh)
        for a, T in enumerate(tabs):
            if full or T == hook:
                _fusion_tableau_checks(run, sh, a, T, full)
            all_tabs.append((sh, a, T))

    if n == 1:
        e, t = wreath.identity(1), wreath.generator(1, "t")
        half = Fraction(1, 2)
        golden = {
            (1,): algebra.AlgebraElement(1, {e: half, t: half}),
            (): algebra.AlgebraElement(1, {e: half, t: -half}),
        }
        for sh, a, T in all_tabs:
            run.check("golden_phi_n1", n, lambda: fusion.phi(T) == golden[sh.first], sh, a)

    if n <= PAIRWISE_MAX_N:
        for sh, a, T in all_tabs:
            alt = {h: Fraction(v * v + 1) for h, v in fusion.default_assignment(T).items()}
            run.check("assignment_independence", n,
                      lambda: fusion.hook_fusion(T, alt).phi == fusion.phi(T), sh, a)

        def pairwise():
            for (sh, a, T), (sh2, b, T2) in itertools.product(all_tabs, repeat=2):
                prod = fusion.phi(T) * fusion.phi(T2)
                expected = algebra.scale(fusion.phi(T), 1 / bitableaux.f_lambda(sh)) if T == T2 else algebra.zero(n)
                if prod != expected:
                    return False, f"{T} * {T2}"
            return True, ""
        run.check("idempotent_system", n, pairwise)

    if n <= FULL_TABLEAU_MAX_N:
        run.check("resolution_of_identity", n, lambda: algebra.linear_combination(
            n, ((bitableaux.f_lambda(sh), fusion.phi(T)) for sh, _, T in all_tabs)) == unit(n))


# --- oracle ----------------------------------------------------------------

def matrix_relation_error(rep: seminormal.SeminormalRep) -> float:
    n, d = rep.n, rep.dim
    I = np.eye(d)
    t = rep.mat_t
    s = rep.mat_s
    errs = [np.abs(t @ t - I).max()]
    for i in s:
        errs.append(np.abs(s[i] @ s[i] - I).max())
        errs.append(np.abs(s[i].T @ s[i] - I).max())
        if i + 1 in s:
            errs.append(np.abs(s[i] @ s[i + 1] @ s[i] - s[i + 1] @ s[i] @ s[i + 1]).max())
        for j in s:
            if abs(i - j) > 1:
                errs.append(np.abs(s[i] @ s[j] - s[j] @ s[i]).max())
        if i >= 2:
            errs.append(np.abs(s[i] @ t - t @ s[i]).max())
    if 1 in s:
        errs.append(np.abs(t @ s[1] @ t @ s[1] - s[1] @ t @ s[1] @ t).max())
    return float(max(errs))


def _oracle_checks(run: _Runner, n: int, tol: float):
    for sh in bitableaux.bipartitions(n):
        rep = seminormal.rep_for(sh)
        run.check("seminormal_relations", n,
                  lambda: ((err := matrix_relation_error(rep)) <= 1e-10, f"max error {err:.3e}"), sh)
        for a, T in enumerate(rep.basis):
            def main_theorem():
                c = seminormal.compare(fusion.diagonal_matrix_element(T), seminormal.oracle_F(T), tol)
                return c.passed, f"max_abs_diff {c.max_abs_diff:.3e}"
            run.check("fusion_matches_seminormal", n, main_theorem, sh, a)

            def primitivity():
                M = seminormal.represent_element(rep, fusion.primitive_idempotent(T))
                idem = float(np.abs(M @ M - M).max())
                tr = float(np.trace(M))
                return idem <= 1e-8 and abs(tr - 1) <= 1e-8, f"idempotency {idem:.3e}, trace {tr:.12f}"
            run.check("idempotent_primitivity", n, primitivity, sh, a)

            if n <= PAIRWISE_MAX_N:
                for i in range(1, n):
                    move = bitableaux.apply_transposition(T, i)
                    if move.d is None or not move.standard:
                        continue
                    d = move.d
                    si = algebra.from_group(wreath.generator(n, i))
                    shifted = si - algebra.scale(unit(n), d)
                    F, F2 = fusion.diagonal_matrix_element(T), fusion.diagonal_matrix_element(move.result)
                    run.check("swap_relation", n,
                              lambda: algebra.scale(F2, 1 - d * d) == shifted * F * shifted, sh, a)


def run_suite(n: int, suite: str = "all", seed: int = 0, tol: float = 1e-8) -> VerificationReport:
    if suite not in ("exact", "oracle", "all"):
        raise ValueError(f"unknown suite {suite!r}")
    if suite in ("exact", "all") and not 1 <= n <= EXACT_MAX_N:
        raise ValueError(f"exact suite supports 1 <= n <= {EXACT_MAX_N}")
    if suite in ("oracle", "all") and not 1 <= n <= ORACLE_MAX_N:
        raise ValueError(f"oracle suite supports 1 <= n <= {ORACLE_MAX_N}")
    report = VerificationReport(suite, n, seed)
    run = _Runner(report)
    rng = random.Random(seed)
    if suite in ("exact", "all"):
        _relation_checks(run, n, rng)
        _tableau_checks(run, n)
        _fusion_checks(run, n)
    if suite in ("oracle", "all"):
        _oracle_checks(run, n, tol)
    return report
