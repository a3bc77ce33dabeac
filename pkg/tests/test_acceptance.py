"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (shown even when pytest
captures output) and then asserts.  Runtime limits are wall-clock and are
measured around the sweep call only.
"""

import time

import pytest

from repvar.catalog import recorded_examples
from repvar.profiles import PSL2, SL2, Profile, cyclic_profile_psl2, pinched_dimension_psl2
from repvar.torsion import enumerate_classes, profile_from_classes
from repvar.verify import (sweep_cyclic, sweep_fiber, sweep_flip, sweep_free_product,
                           sweep_parity, sweep_torus, sweep_witnesses)
from repvar.words import parse_presentation


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
                  + (f" ({detail})" if detail else ""))
        return ok
    return emit


def timed(fn, **kwargs):
    start = time.perf_counter()
    res = fn(**kwargs)
    return res, time.perf_counter() - start


def sweep_detail(res, seconds, limit=None):
    parts = [f"{res.checked} checks", f"{seconds:.3f} s"]
    if limit is not None:
        parts[-1] += f" < {limit} s"
    if res.failures:
        parts.append(res.failures[0])
    return ", ".join(parts)


def test_criterion_1_cyclic_sweep(report):
    res, sec = timed(sweep_cyclic, max_n=200)
    ok = res.ok and res.checked == 400 and sec < 1.0
    assert report(1, "cyclic closed forms match the class oracle, n=1..200",
                  ok, sweep_detail(res, sec, 1)), res.failures[:5]


def test_criterion_2_free_product_sweep(report):
    res, sec = timed(sweep_free_product, max_n=64)
    cases = res.summary["parity_cases"]
    ok = res.ok and len(cases) == 4 and sec < 1.0
    assert report(2, "Z_m * Z_n formula matches convolution, m,n=2..64",
                  ok, sweep_detail(res, sec, 1) + f", cases {cases}"), res.failures[:5]


def test_criterion_3_torus_tables(report):
    res, sec = timed(sweep_torus, max_n=64)
    ok = res.ok and res.summary["trefoil_genus"] == 1 and sec < 1.0
    assert report(3, "torus N4 tables, inequality for p,t>=3, trefoil genus",
                  ok, sweep_detail(res, sec, 1)), res.failures[:5]


def test_criterion_4_spot_values(report):
    z2 = cyclic_profile_psl2(2)
    z2_oracle = profile_from_classes(enumerate_classes(2, PSL2))
    pres = parse_presentation("gens: x, y, z\nrel: x^2")
    recorded = {ex.group: ex.profile for ex in recorded_examples() if ex.presentation == pres}
    pinched = [pinched_dimension_psl2(2, p, 4) for p in range(2, 12)]
    checks = {
        "Z2 over PSL2": z2 == z2_oracle == Profile.from_counts((1, 0, 1)),
        "<x,y,z;x^2> over SL2": recorded.get(SL2) == Profile.from_counts((2,) + (0,) * 6),
        "<x,y,z;x^2> over PSL2": recorded.get(PSL2) == Profile.from_counts((1, 0, 1) + (0,) * 6),
        "dim-pinched(2,p,4)": all(v == (6, True) for v in pinched),
    }
    bad = [k for k, v in checks.items() if not v]
    assert report(4, "spot values", not bad, "; ".join(bad) if bad else "4 checks"), bad


def test_criterion_5_witnesses(report):
    res, sec = timed(sweep_witnesses, count=100, seed=0, newton_tol=1e-10, root_tol=1e-12)
    row = res.rows[0]
    ok = res.ok and sec < 10.0
    detail = (sweep_detail(res, sec, 10) + f", [x,y]=-I constructive {row['constructive']:.1e}"
              f" newton {row['newton']:.1e}, worst root {res.summary['max_root_residual']:.1e}")
    assert report(5, "V_-1 witnesses for [x,y] and an even-sum corpus", ok, detail), \
        res.failures[:5]


def test_criterion_6_flip_factor(report):
    res, sec = timed(sweep_flip, count=1000, seed=0, tol=1e-10)
    assert report(6, "central flip identity on 1000 random triples", res.ok,
                  sweep_detail(res, sec) + f", max error {res.summary['max_error']:.1e}"), \
        res.failures[:5]


def test_criterion_7_fiber_ranks(report):
    res, sec = timed(sweep_fiber, seed=0, samples=10, max_order=8)
    commuting = res.rows[0]
    detail = sweep_detail(res, sec) + f", [x,y]=I: {commuting['estimate_4']}/10 at 4"
    assert report(7, "local fiber ranks 4, 2 and 3n-3", res.ok, detail), res.failures[:5]


def test_criterion_8_parity_logic(report):
    res, sec = timed(sweep_parity, count=500, seed=0)
    tally = res.summary["tally"]
    # the implications must not hold vacuously
    ok = res.ok and tally["commutator"] > 0 and tally["minus"] > 0 and sec < 1.0
    assert report(8, "parity implications and citation hygiene on 500 words", ok,
                  sweep_detail(res, sec, 1) + f", tally {tally}"), res.failures[:5]
