"""Verification sweeps: closed forms against the brute-force oracle, and the
numerical checks of the word-map engine.

Each sweep returns a :class:`SweepResult`; ``ok`` is False on any mismatch.
Sweeps that draw random data take a ``seed`` and are deterministic given it.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field

import numpy as np

from . import matnum
from .catalog import ClassKind, GroupClass, facts_for
from .profiles import (PSL2, SL2, convolve, cyclic_profile_psl2, cyclic_profile_sl2,
                       free_product_cyclic_profile_psl2, torus_n4_psl2, torus_n4_sl2)
from .torsion import ClassKind as TorsionKind
from .torsion import enumerate_classes, enumerate_sl2, profile_from_classes, two_dim_count
from .verdicts import lift_diagnosis, theorem_ab_verdict, verdict_hypotheses_hold
from .words import (FreeWord, commutator, free_reduce, has_even_nonzero_sum,
                    in_commutator_subgroup, minus_condition_holds, pm_condition_holds)

__all__ = [
    "SweepResult",
    "random_word",
    "random_corpus_word",
    "random_even_sum_word",
    "sweep_cyclic",
    "sweep_free_product",
    "sweep_torus",
    "sweep_flip",
    "sweep_parity",
    "sweep_witnesses",
    "sweep_fiber",
    "SWEEPS",
    "run_all",
]


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, message: str):
        self.checked += 1
        if not cond:
            self.failures.append(message)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "failures": list(self.failures), "rows": list(self.rows),
                "summary": dict(self.summary), "seconds": round(self.seconds, 6)}


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    return wrapper


# ---------------------------------------------------------------------------
# random words


def random_word(rng: np.random.Generator, n_gens: int, max_syllables: int = 8,
                max_exp: int = 3) -> FreeWord:
    """Freely reduced nontrivial word with up to ``max_syllables`` syllables."""
    while True:
        k = int(rng.integers(1, max_syllables + 1))
        gens = rng.integers(0, n_gens, size=k)
        exps = rng.integers(1, max_exp + 1, size=k) * rng.choice([-1, 1], size=k)
        w = free_reduce(zip(gens.tolist(), exps.tolist()))
        if not w.is_trivial():
            return w


def random_corpus_word(rng: np.random.Generator, n_gens: int) -> FreeWord:
    """Mixed corpus: a quarter of the words are commutators of random words."""
    if n_gens >= 2 and rng.random() < 0.25:
        while True:
            w = commutator(random_word(rng, n_gens, 3), random_word(rng, n_gens, 3))
            if not w.is_trivial():
                return w
    return random_word(rng, n_gens)


def random_even_sum_word(rng: np.random.Generator, n_gens: int, **kwargs) -> FreeWord:
    """Random word with at least one even nonzero exponent sum (rejection sampling)."""
    while True:
        w = random_word(rng, n_gens, **kwargs)
        if has_even_nonzero_sum(w, n_gens):
            return w


# ---------------------------------------------------------------------------
# exact sweeps


@_timed
def sweep_cyclic(max_n: int = 200) -> SweepResult:
    """Closed-form cyclic profiles against the conjugacy-class oracle, both groups."""
    res = SweepResult("cyclic")
    for n in range(1, max_n + 1):
        for group, closed in ((SL2, cyclic_profile_sl2), (PSL2, cyclic_profile_psl2)):
            oracle = profile_from_classes(enumerate_classes(n, group))
            formula = closed(n)
            res.check(formula == oracle, f"n={n} {group.value}: formula {formula} != oracle {oracle}")
    res.summary = {"max_n": max_n}
    return res


def _parity_case(m: int, n: int) -> str:
    return f"{'even' if m % 2 == 0 else 'odd'}/{'even' if n % 2 == 0 else 'odd'}"


@_timed
def sweep_free_product(max_n: int = 64) -> SweepResult:
    """Z_m * Z_n over PSL(2,C): closed form against convolution of oracle profiles."""
    res = SweepResult("free-product")
    oracle = {k: profile_from_classes(enumerate_classes(k, PSL2)) for k in range(2, max_n + 1)}
    cases: dict[str, int] = {}
    for m in range(2, max_n + 1):
        for n in range(2, max_n + 1):
            formula = free_product_cyclic_profile_psl2(m, n)
            conv = convolve(oracle[m], oracle[n])
            res.check(formula == conv, f"m={m} n={n}: formula {formula} != convolution {conv}")
            case = _parity_case(m, n)
            cases[case] = cases.get(case, 0) + 1
    for case in ("even/even", "even/odd", "odd/even", "odd/odd"):
        res.check(cases.get(case, 0) > 0, f"parity case {case} not exercised")
    res.summary = {"max_n": max_n, "parity_cases": cases}
    return res


def _n2_table(max_n: int) -> dict[tuple[int, int, str], int]:
    """Oracle two-dimensional class counts, keyed by (order, central target, group)."""
    table = {}
    for k in range(2, max_n + 1):
        for c in (1, -1):
            table[k, c, SL2.value] = two_dim_count(k, c, SL2)
        table[k, 1, PSL2.value] = two_dim_count(k, 1, PSL2)
    return table


@_timed
def sweep_torus(max_n: int = 64) -> SweepResult:
    """Torus knot N4 counts: closed forms against oracle products, plus the
    inequality for p, t >= 3 and equality when p or t is 2."""
    res = SweepResult("torus")
    n2 = _n2_table(max_n)
    for p in range(2, max_n + 1):
        for t in range(2, max_n + 1):
            sl2, psl2 = torus_n4_sl2(p, t), torus_n4_psl2(p, t)
            o_sl2 = sum(n2[p, c, SL2.value] * n2[t, c, SL2.value] for c in (1, -1))
            o_psl2 = n2[p, 1, PSL2.value] * n2[t, 1, PSL2.value]
            res.check(sl2 == o_sl2, f"p={p} t={t}: SL2 N4 {sl2} != oracle {o_sl2}")
            res.check(psl2 == o_psl2, f"p={p} t={t}: PSL2 N4 {psl2} != oracle {o_psl2}")
            if p >= 3 and t >= 3:
                res.check(sl2 != psl2, f"p={p} t={t}: N4 coincide ({sl2})")
            else:
                res.check(sl2 == psl2, f"p={p} t={t}: N4 differ ({sl2} vs {psl2}) with p or t = 2")
            if p <= t:
                res.rows.append({"p": p, "t": t, "n4_sl2": sl2, "n4_psl2": psl2})
    genus = next(f.value for f in facts_for(GroupClass(ClassKind.TORUS_KNOT, (2, 3)))
                 if f.property == "KnotGenus")
    res.check(torus_n4_sl2(2, 3) == 1 == genus,
              f"TorusKnot(2,3): SL2 N4 {torus_n4_sl2(2, 3)}, catalog genus {genus}")
    res.summary = {"max_n": max_n, "trefoil_genus": genus}
    return res


@_timed
def sweep_parity(count: int = 500, seed: int = 0) -> SweepResult:
    """Implications between the parity criteria, and citation hygiene of verdicts."""
    res = SweepResult("parity")
    rng = np.random.default_rng(seed)
    tally = {"commutator": 0, "pm": 0, "minus": 0}
    for k in range(count):
        n = int(rng.integers(1, 5))
        w = random_corpus_word(rng, n)
        comm, pm, minus = in_commutator_subgroup(w, n), pm_condition_holds(w, n), minus_condition_holds(w, n)
        tally["commutator"] += comm
        tally["pm"] += pm
        tally["minus"] += minus
        res.check(not comm or pm, f"word {k}: in commutator subgroup but +- Condition fails")
        res.check(not (minus and pm), f"word {k}: Minus and +- Conditions both hold")
        irr = bool(rng.integers(0, 2)) or None
        for v in (lift_diagnosis(w, n), theorem_ab_verdict(w, n, sl2_irreducible=irr)):
            res.check(verdict_hypotheses_hold(v),
                      f"word {k}: {v.kind.value} cites a result with unset hypotheses")
    res.summary = {"count": count, "seed": seed, "tally": tally}
    return res


# ---------------------------------------------------------------------------
# numerical sweeps


@_timed
def sweep_flip(count: int = 1000, seed: int = 0, tol: float = 1e-10) -> SweepResult:
    """w(e_1 m_1, ..., e_n m_n) = prod e_i^{s_i} w(m) on random triples."""
    res = SweepResult("flip")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for k in range(count):
        n = int(rng.integers(1, 5))
        w = random_word(rng, n, max_syllables=6)  # at most 18 letters
        point = matnum.random_point(n, rng)
        signs = rng.choice([-1, 1], size=n).tolist()
        err = matnum.flip_check(w, point, signs)
        worst = max(worst, err)
        res.check(err <= tol, f"triple {k}: flip identity error {err:.3g}")
    res.summary = {"count": count, "seed": seed, "tol": tol, "max_error": worst}
    return res


@_timed
def sweep_witnesses(count: int = 100, seed: int = 0, newton_tol: float = 1e-10,
                    root_tol: float = 1e-12, restarts: int = 20) -> SweepResult:
    """[x,y] = -I constructively and by Newton; even-sum root witnesses on a corpus."""
    res = SweepResult("witnesses")
    comm = commutator(FreeWord.gen(0), FreeWord.gen(1))
    cons = matnum.vminus_witness(comm, 2, search=False, tol=newton_tol)
    res.check(cons is not None and cons.residual < newton_tol,
              "[x,y] = -I: no constructive witness")
    newton = matnum.solve_word(comm, 2, -1, seed=seed, restarts=restarts, tol=newton_tol)
    res.check(newton is not None and newton.residual < newton_tol, "[x,y] = -I: Newton failed")
    res.rows.append({"word": "[x,y]", "constructive": cons.residual if cons else None,
                     "newton": newton.residual if newton else None})
    rng = np.random.default_rng(seed)
    worst = 0.0
    for k in range(count):
        n = int(rng.integers(1, 5))
        w = random_even_sum_word(rng, n)
        wit = matnum.vminus_witness(w, n, search=False, tol=root_tol)
        ok = wit is not None and wit.method == "even-sum-root" and wit.residual < root_tol
        if wit is not None:
            worst = max(worst, wit.residual)
        res.check(ok, f"corpus word {k}: no even-sum root witness below {root_tol:g}")
    res.summary = {"count": count, "seed": seed, "max_root_residual": worst}
    return res


def _commuting_pair(rng: np.random.Generator) -> np.ndarray:
    g = matnum.random_sl2(rng)
    ginv = np.linalg.inv(g)
    lam, mu = np.exp(rng.normal(size=2) + 1j * rng.uniform(0, 2 * np.pi, size=2))
    return np.array([g @ np.diag([lam, 1 / lam]) @ ginv, g @ np.diag([mu, 1 / mu]) @ ginv])


@_timed
def sweep_fiber(seed: int = 0, samples: int = 10, max_order: int = 8,
                fd_step: float = matnum.DEFAULT_FD_STEP,
                rank_tol: float = matnum.DEFAULT_RANK_TOL) -> SweepResult:
    """Local fiber dimension: 4 on commuting pairs, 2 on torsion classes, 3n-3 for x."""
    res = SweepResult("fiber")
    rng = np.random.default_rng(seed)
    comm = commutator(FreeWord.gen(0), FreeWord.gen(1))
    hits = 0
    for _ in range(samples):
        rep = matnum.fiber_rank(comm, _commuting_pair(rng), fd_step, rank_tol, seed=seed)
        hits += rep.fiber_dim_estimate == 4
    need = int(np.ceil(0.9 * samples))
    res.check(hits >= need, f"commuting pairs: estimate 4 at {hits}/{samples} points")
    res.rows.append({"word": "[x,y]", "estimate_4": hits, "samples": samples})
    for n in range(2, max_order + 1):
        w = FreeWord.gen(0, n)
        for target in (1, -1):
            for c in enumerate_sl2(n, target):
                if c.kind is not TorsionKind.TWO_DIM:
                    continue
                phase = np.exp(1j * np.pi * c.exponent / n)
                g = matnum.random_sl2(rng)
                point = (g @ np.diag([phase, 1 / phase]) @ np.linalg.inv(g))[None]
                rep = matnum.fiber_rank(w, point, fd_step, rank_tol, seed=seed)
                res.check(rep.fiber_dim_estimate == 2,
                          f"x^{n} class p={c.exponent}: estimate {rep.fiber_dim_estimate}")
                res.rows.append({"word": f"x^{n}", "exponent": c.exponent,
                                 "estimate": rep.fiber_dim_estimate})
    x = FreeWord.gen(0)
    for n in range(1, 5):
        point = matnum.random_point(n, rng)
        point[0] = np.eye(2)
        rep = matnum.fiber_rank(x, point, fd_step, rank_tol, seed=seed)
        res.check(rep.fiber_dim_estimate == 3 * n - 3,
                  f"x in F_{n}: estimate {rep.fiber_dim_estimate} != {3 * n - 3}")
        res.rows.append({"word": "x", "n": n, "estimate": rep.fiber_dim_estimate})
    res.summary = {"seed": seed, "fd_step": fd_step, "rank_tol": rank_tol}
    return res


SWEEPS = {
    "cyclic": sweep_cyclic,
    "free-product": sweep_free_product,
    "torus": sweep_torus,
    "flip": sweep_flip,
    "parity": sweep_parity,
    "witnesses": sweep_witnesses,
    "fiber": sweep_fiber,
}


def run_all(seed: int = 0) -> list[SweepResult]:
    return [sweep_cyclic(), sweep_free_product(), sweep_torus(), sweep_flip(seed=seed),
            sweep_parity(seed=seed), sweep_witnesses(seed=seed), sweep_fiber(seed=seed)]


