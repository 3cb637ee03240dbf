import pytest

from borelreg import (
    RingContext,
    UsageError,
    borel_closure,
    is_borel_type,
    is_borel_type_exchange,
    is_stable,
    is_strongly_stable,
    maximal_power,
    replay_witness,
)
from borelreg.borel import ExchangeWitness, SaturationWitness, StabilityWitness
from borelreg.generators import borel_type_parts, random_monomial_ideal
from borelreg.rng import SplitMix64

from conftest import exponents, mk, mono, naive_stable_all_monomials


# -- stability -----------------------------------------------------------------


def test_is_stable_examples():
    assert is_stable(mk(2, (2, 0), (1, 1))).verdict  # x1*(x1x2)/x2 = x1^2 in I
    bad = is_stable(mk(2, (0, 2)))
    assert not bad.verdict
    assert isinstance(bad.witness, StabilityWitness)
    assert bad.witness.generator == mono(RingContext(2), 0, 2) and bad.witness.i == 1
    assert bad.witness.moved.exponents == (1, 1)
    assert is_stable(mk(2, (1, 0))).verdict  # no i < m(u)


def test_is_stable_rejects_degenerate():
    from borelreg import MonomialIdeal

    with pytest.raises(UsageError):
        is_stable(MonomialIdeal.zero(RingContext(2)))


def test_generator_check_agrees_with_all_monomials_check():
    rng = SplitMix64(17)
    for _ in range(60):
        n = rng.randint(2, 4)
        I = random_monomial_ideal(rng, RingContext(n), rng.randint(1, 4))
        assert bool(is_stable(I)) == naive_stable_all_monomials(exponents(I), n, I.deg + 2)


def test_is_strongly_stable_examples():
    assert is_strongly_stable(mk(2, (2, 0), (1, 1)))
    assert not is_strongly_stable(mk(2, (2, 0), (0, 2)))  # x1x2 missing
    assert is_strongly_stable(mk(2, (1, 0)))


# -- Borel type, saturation form -------------------------------------------------


def test_is_borel_type_examples():
    assert is_borel_type(mk(2, (2, 0), (1, 1))).verdict
    bad = is_borel_type(mk(2, (0, 2)))
    assert not bad.verdict and bad.witness.j == 2
    assert bad.witness.variable_route.improper
    assert bad.witness.prime_route == mk(2, (0, 2))
    # any artinian monomial ideal is Borel type
    assert is_borel_type(mk(2, (2, 0), (0, 3))).verdict


def test_is_borel_type_single_variable_ring():
    ring = RingContext(1)
    from borelreg import minimalize, Monomial

    assert is_borel_type(minimalize(ring, [Monomial(ring, (3,))])).verdict


# -- Borel type, exchange form ----------------------------------------------------


def test_exchange_examples():
    assert is_borel_type_exchange(mk(2, (2, 0), (1, 1))).verdict
    bad = is_borel_type_exchange(mk(2, (0, 2)))
    assert not bad.verdict
    w = bad.witness
    assert isinstance(w, ExchangeWitness)
    # the deepest violating power is reported: 1 is not in (I:x1^inf) = (x2^2)
    assert (w.generator.exponents, w.i, w.q, w.j) == ((0, 2), 2, 2, 1)
    assert is_borel_type_exchange(mk(3, (2, 0, 0), (0, 3, 0), (0, 0, 1))).verdict  # artinian


def test_characterizations_agree_on_random_ideals():
    rng = SplitMix64(19)
    for _ in range(150):
        n = rng.randint(2, 4)
        I = random_monomial_ideal(rng, RingContext(n), rng.randint(1, 4))
        assert is_borel_type(I).verdict == is_borel_type_exchange(I).verdict


def test_implication_chain():
    rng = SplitMix64(20)
    for _ in range(80):
        n = rng.randint(2, 4)
        I = random_monomial_ideal(rng, RingContext(n), rng.randint(1, 4))
        strong, stable, borel = (
            is_strongly_stable(I),
            bool(is_stable(I)),
            bool(is_borel_type(I)),
        )
        assert not (strong and not stable)
        assert not (stable and not borel)


def test_sum_of_borel_type_is_borel_type():
    rng = SplitMix64(21)
    for _ in range(40):
        ring = RingContext(rng.randint(2, 4))
        a, b = borel_type_parts(rng, ring, rng.randint(1, 4), 2)
        assert is_borel_type(a.sum(b)).verdict


# -- witnesses -------------------------------------------------------------------


def test_witnesses_replay():
    rng = SplitMix64(22)
    replayed = 0
    for _ in range(120):
        n = rng.randint(2, 4)
        I = random_monomial_ideal(rng, RingContext(n), rng.randint(1, 4))
        for verdict in (is_stable(I), is_borel_type(I), is_borel_type_exchange(I)):
            if not verdict.verdict:
                assert replay_witness(I, verdict)
                replayed += 1
    assert replayed > 30


def test_replay_rejects_fabricated_witness():
    I = mk(2, (2, 0), (1, 1))  # actually stable
    from borelreg.borel import Evidence

    fake = Evidence(False, StabilityWitness(I.gens[0], 1, mono(I, 2, 0)))
    assert not replay_witness(I, fake)


# -- closure ----------------------------------------------------------------------


def test_borel_closure_examples():
    r2 = RingContext(2)
    assert borel_closure([mono(r2, 1, 1)]) == mk(2, (2, 0), (1, 1))
    assert borel_closure([mono(r2, 0, 2)]) == maximal_power(r2, 2)
    assert borel_closure([mono(r2, 3, 0)]) == mk(2, (3, 0))


def test_borel_closure_is_strongly_stable_and_idempotent():
    rng = SplitMix64(25)
    for _ in range(40):
        ring = RingContext(rng.randint(2, 4))
        seeds = [
            mono(ring, *[rng.below(3) for _ in range(ring.n)]) for _ in range(rng.randint(1, 3))
        ]
        seeds = [s for s in seeds if not s.is_unit] or [ring.variable(ring.n)]
        closed = borel_closure(seeds)
        assert is_strongly_stable(closed)
        assert borel_closure(list(closed.gens)) == closed


def test_borel_closure_rejects_bad_seeds():
    ring = RingContext(2)
    with pytest.raises(UsageError):
        borel_closure([])
    with pytest.raises(UsageError):
        borel_closure([ring.one()])
