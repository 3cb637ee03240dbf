"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines live.
Counts, ranges, and the two runtime ceilings are pinned here; every
criterion demands a 100% pass rate on its instance stream.
"""

import time

import pytest

from borelreg import (
    VerifyConfig,
    is_stable,
    reg_oracle,
    regularity_upper_bound,
    run_verify,
)
from borelreg.cli import main

from conftest import mk


def _run(num, desc, cfg, min_passed, max_seconds=None):
    t0 = time.perf_counter()
    report = run_verify(cfg)
    elapsed = time.perf_counter() - t0
    passed = sum(o.passed for o in report.outcomes)
    failed = sum(o.failed for o in report.outcomes)
    ok = failed == 0 and passed >= min_passed and (max_seconds is None or elapsed <= max_seconds)
    budget = f", limit {max_seconds:.0f}s" if max_seconds else ""
    print(f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'} {desc} "
          f"[passed={passed} failed={failed} in {elapsed:.1f}s{budget}]")
    if not ok:
        pytest.fail(report.render())


def test_criterion_01_characterization_equivalence():
    _run(
        1,
        "saturation and exchange forms agree on 1000 random ideals (n 2..5, deg <= 5)",
        VerifyConfig(seed=0, count=1000, n_range=(2, 5), deg_range=(1, 5),
                     properties=("star_exchange_agree",)),
        min_passed=1000,
        max_seconds=60.0,
    )


def test_criterion_02_truncations_stable_above_reg():
    _run(
        2,
        "truncations are stable from reg to the degree bound + 2 on 500 Borel-type ideals",
        VerifyConfig(seed=0, count=500, n_range=(2, 5), deg_range=(1, 5),
                     properties=("truncations_stable_above_reg",)),
        min_passed=500,
    )


def test_criterion_03_triple_agreement():
    _run(
        3,
        "chain = truncation = oracle regularity on 200 Borel-type ideals (n <= 4)",
        VerifyConfig(seed=0, count=205, properties=("reg_three_methods_agree",)),
        min_passed=200,
        max_seconds=600.0,
    )


def test_criterion_04_stable_truncation_bounds_regularity():
    _run(
        4,
        "a stable truncation at e bounds oracle regularity on 200 arbitrary ideals",
        VerifyConfig(seed=0, count=210, properties=("stable_truncation_bounds_reg",)),
        min_passed=200,
    )


def test_criterion_05_artinian_regularity():
    _run(
        5,
        "artinian shortcut matches the oracle and truncation fills the degree on 200 ideals",
        VerifyConfig(seed=0, count=210, properties=("artinian_reg_matches_oracle",)),
        min_passed=200,
    )


def test_criterion_06_ring_extension_invariance():
    _run(
        6,
        "truncation stability is unchanged by a ring extension on 200 ideals",
        VerifyConfig(seed=0, count=200, properties=("extension_preserves_truncation_stability",)),
        min_passed=200,
    )


def test_criterion_07_chain_formula_reduces_to_artinian():
    _run(
        7,
        "chain formula equals the artinian shortcut on 200 artinian ideals",
        VerifyConfig(seed=0, count=200, properties=("artinian_chain_agrees",)),
        min_passed=200,
    )


def test_criterion_08_stage_hilbert_identity():
    _run(
        8,
        "per-stage Hilbert identity holds up to reg + 3 on 200 Borel-type ideals",
        VerifyConfig(seed=0, count=200, properties=("chain_hilbert_identity",)),
        min_passed=200,
    )


def test_criterion_09_sum_closure_and_bound():
    _run(
        9,
        "sums stay Borel type and obey the max-part regularity bound on 200 draws",
        VerifyConfig(seed=0, count=200, properties=("sum_reg_bound", "borel_sum_closed")),
        min_passed=400,
    )


def test_criterion_10_ordered_primes_route():
    _run(
        10,
        "totally ordered primes are detected and the renumbered route matches the oracle "
        "on 100 scrambled ideals",
        VerifyConfig(seed=0, count=105, properties=("ordered_primes_renumber_route",)),
        min_passed=100,
    )


def test_criterion_11_degree_bound():
    _run(
        11,
        "regularity never exceeds n(deg-1)+1 on 500 Borel-type ideals",
        VerifyConfig(seed=0, count=500, n_range=(2, 5), deg_range=(1, 5),
                     properties=("reg_within_degree_bound",)),
        min_passed=500,
    )


def test_criterion_12_negative_control(tmp_path, capsys):
    """(x2^2): oracle regularity 2, yet no truncation in the bound window is
    stable, and the CLI rejects it with witness j=2 -- the Borel-type
    hypothesis is doing real work."""
    I = mk(2, (0, 2))
    oracle = reg_oracle(I)
    never_stable = all(
        not is_stable(I.truncate(e)) for e in range(I.deg, regularity_upper_bound(I) + 1)
    )
    path = tmp_path / "x2sq.txt"
    path.write_text("ring 2\nx2^2\n")
    exit_code = main(["is-borel", str(path)])
    out = capsys.readouterr().out
    ok = oracle == 2 and never_stable and exit_code == 1 and "j=2" in out
    print(f"ACCEPTANCE 12 {'PASS' if ok else 'FAIL'} negative control (x2^2): "
          f"oracle reg={oracle}, stable truncation exists={not never_stable}, "
          f"is-borel exit={exit_code}")
    assert ok


def test_criterion_13_oracle_self_consistency():
    _run(
        13,
        "boundary^2 = 0, generator row, and Euler sums verified on 200 oracle runs",
        VerifyConfig(seed=0, count=200, properties=("oracle_self_checks", "stable_ideal_reg_is_maxdeg")),
        min_passed=400,
    )


def test_full_default_verification_gate():
    """The umbrella gate: the complete property catalogue at the default
    configuration (seed 0, count 200, n <= 4, deg <= 4) with zero failures."""
    t0 = time.perf_counter()
    report = run_verify(VerifyConfig(seed=0, count=200))
    elapsed = time.perf_counter() - t0
    failed = sum(o.failed for o in report.outcomes)
    passed = sum(o.passed for o in report.outcomes)
    print(f"ACCEPTANCE -- {'PASS' if report.ok else 'FAIL'} full default verify run "
          f"[{len(report.outcomes)} properties, passed={passed}, failed={failed}, {elapsed:.1f}s]")
    if not report.ok:
        pytest.fail(report.render())
