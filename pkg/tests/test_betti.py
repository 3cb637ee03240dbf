from fractions import Fraction

import pytest

from borelreg import (
    OracleInfeasibleError,
    RingContext,
    betti_table,
    fraction_free_rank,
    lcm_lattice,
    reg_of_stable,
    reg_oracle,
    upper_koszul_complex,
    UsageError,
)
from borelreg.generators import random_monomial_ideal
from borelreg.rng import SplitMix64

from conftest import mk, mono


# -- exact rank ----------------------------------------------------------------


def _rank_over_fractions(rows):
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat or not mat[0]:
        return 0
    rank = 0
    cols = len(mat[0])
    for c in range(cols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][c] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][c] != 0:
                factor = mat[r][c] / mat[rank][c]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def test_fraction_free_rank_matches_fraction_elimination():
    rng = SplitMix64(61)
    for _ in range(80):
        rows = [
            [rng.randint(0, 6) - 3 for _ in range(rng.randint(1, 6))]
            for _ in range(rng.randint(1, 6))
        ]
        width = max(len(r) for r in rows)
        rows = [r + [0] * (width - len(r)) for r in rows]
        assert fraction_free_rank(rows) == _rank_over_fractions(rows)


def test_fraction_free_rank_edge_cases():
    assert fraction_free_rank([]) == 0
    assert fraction_free_rank([[0, 0], [0, 0]]) == 0
    assert fraction_free_rank([[1, 2], [2, 4]]) == 1
    assert fraction_free_rank([[1, 0], [0, 1]]) == 2


# -- lattice ----------------------------------------------------------------------


def test_lcm_lattice_examples():
    assert {m.exponents for m in lcm_lattice(mk(2, (1, 0), (0, 1)))} == {
        (1, 0),
        (0, 1),
        (1, 1),
    }
    assert {m.exponents for m in lcm_lattice(mk(2, (2, 0), (1, 1)))} == {
        (2, 0),
        (1, 1),
        (2, 1),
    }
    assert [m.exponents for m in lcm_lattice(mk(2, (2, 3)))] == [(2, 3)]


def test_lattice_budget_guard():
    ring = RingContext(2)
    gens = [(k, 25 - k) for k in range(25)]
    with pytest.raises(OracleInfeasibleError):
        lcm_lattice(mk(2, *gens), max_generators=20)
    # explicit budget admits it
    assert lcm_lattice(mk(2, *gens), max_generators=30)


# -- Koszul complexes ----------------------------------------------------------------


def test_koszul_complex_hollow_edge():
    I = mk(2, (1, 0), (0, 1))
    complex_ = upper_koszul_complex(I, mono(I, 1, 1))
    assert complex_.faces_by_card[0] == ((),)
    assert set(complex_.faces_by_card[1]) == {(1,), (2,)}
    assert len(complex_.faces_by_card) == 3 and complex_.faces_by_card[2] == ()
    assert complex_.reduced_dims[1] == 1  # beta_{1, x1x2} = 1


def test_koszul_complex_at_minimal_generator():
    I = mk(2, (2, 0), (1, 1))
    complex_ = upper_koszul_complex(I, I.gens[0])
    assert complex_.faces_by_card[0] == ((),)
    assert all(not level for level in complex_.faces_by_card[1:])
    assert complex_.reduced_dims[0] == 1  # beta_{0,g} = 1


def test_koszul_complex_complete_intersection_top():
    I = mk(2, (2, 0), (0, 3))
    complex_ = upper_koszul_complex(I, mono(I, 2, 3))
    assert complex_.reduced_dims[1] == 1  # beta_{1, x1^2 x2^3} = 1


def test_void_complex_when_multidegree_outside_ideal():
    I = mk(2, (2, 0))
    complex_ = upper_koszul_complex(I, mono(I, 1, 0))
    assert complex_.is_void and all(d == 0 for d in complex_.reduced_dims)


# -- Betti tables ---------------------------------------------------------------------


def test_betti_table_koszul_example():
    table = betti_table(mk(2, (1, 0), (0, 1)))
    assert table.graded() == {(0, 1): 2, (1, 2): 1}
    assert table.regularity == 1


def test_betti_table_complete_intersection():
    table = betti_table(mk(2, (2, 0), (0, 3)))
    assert table.graded() == {(0, 2): 1, (0, 3): 1, (1, 5): 1}
    assert table.regularity == 4


def test_betti_degree_zero_row_is_generator_histogram():
    rng = SplitMix64(62)
    for _ in range(25):
        ring = RingContext(rng.randint(2, 3))
        I = random_monomial_ideal(rng, ring, 3)
        table = betti_table(I)
        zero_row = {j: b for (i, j), b in table.graded().items() if i == 0}
        hist = {}
        for g in I.gens:
            hist[g.degree] = hist.get(g.degree, 0) + 1
        assert zero_row == hist
        assert table.regularity >= I.deg


def test_reg_oracle_examples():
    assert reg_oracle(mk(2, (1, 0), (0, 1))) == 1
    assert reg_oracle(mk(2, (2, 0), (0, 3))) == 4
    assert reg_oracle(mk(2, (1, 1))) == 2


def test_reg_of_stable_examples():
    assert reg_of_stable(mk(2, (2, 0), (1, 1))) == 2
    assert reg_of_stable(mk(2, (1, 0))) == 1
    cut = mk(2, (2, 0), (0, 3)).truncate(4)
    assert reg_of_stable(cut) == 4
    with pytest.raises(UsageError):
        reg_of_stable(mk(2, (0, 2)))


def test_oracle_agrees_with_eliahou_kervaire_on_stable_ideals():
    from borelreg import borel_closure, is_stable

    rng = SplitMix64(63)
    for _ in range(20):
        ring = RingContext(rng.randint(2, 3))
        seeds = [
            mono(ring, *[rng.below(3) for _ in range(ring.n)]) for _ in range(rng.randint(1, 2))
        ]
        seeds = [s for s in seeds if not s.is_unit] or [ring.variable(1)]
        I = borel_closure(seeds)
        assert is_stable(I)
        assert reg_oracle(I) == reg_of_stable(I) == I.deg


def test_betti_render_contains_macaulay_rows():
    text = betti_table(mk(2, (2, 0), (0, 3))).render()
    assert "total:" in text and "2:" in text and "4:" in text
