import pytest

from borelreg import (
    InternalCheckError,
    MonomialIdeal,
    NotBorelTypeError,
    RingContext,
    UsageError,
    build_chain,
    check_chain_hilbert_identity,
    reg_via_chain,
    regularity_upper_bound,
    stage_s_value,
)
from borelreg.generators import borel_type_parts
from borelreg.rng import SplitMix64

from conftest import mk


def test_chain_of_worked_example():
    I = mk(2, (2, 0), (1, 1))
    chain = build_chain(I)
    assert chain.r == 2 and chain.borel_type
    s0, s1 = chain.stages
    assert (s0.n_l, s1.n_l) == (2, 1)
    assert s0.ideal == I and s0.restricted == I
    assert s0.saturation == mk(2, (1, 0)).restrict(2)  # (x1) in two variables
    assert s1.ideal == mk(2, (1, 0))
    assert s1.restricted.ring.n == 1 and s1.saturation.improper
    assert (s0.s_value, s1.s_value) == (1, 0)


def test_chain_of_artinian_has_length_one():
    chain = build_chain(mk(2, (2, 0), (0, 3)))
    assert chain.r == 1
    assert chain.stages[0].saturation.improper
    assert chain.stages[0].s_value == 3


def test_chain_of_principal_x1():
    chain = build_chain(mk(2, (1, 0)))
    assert chain.r == 1
    assert chain.stages[0].n_l == 1
    assert chain.stages[0].s_value == 0


def test_chain_rejects_degenerate():
    ring = RingContext(2)
    with pytest.raises(UsageError):
        build_chain(MonomialIdeal.zero(ring))
    with pytest.raises(UsageError):
        build_chain(MonomialIdeal.whole_ring(ring))


def test_chain_of_non_borel_ideal_has_saturated_stage():
    chain = build_chain(mk(2, (0, 2)))
    assert not chain.borel_type
    assert chain.r == 1
    assert chain.stages[0].s_value is None  # J = J^sat: zero module


def test_stage_s_value_examples():
    I = mk(2, (2, 0), (1, 1))
    sat = mk(2, (1, 0))
    assert stage_s_value(I, sat, 3) == 1
    one_var = RingContext(1)
    from borelreg import minimalize, Monomial

    J = minimalize(one_var, [Monomial(one_var, (1,))])
    assert stage_s_value(J, MonomialIdeal.whole_ring(one_var), 3) == 0
    art = mk(2, (2, 0), (0, 3))
    assert stage_s_value(art, MonomialIdeal.whole_ring(art.ring), 5) == 3


def test_stage_s_value_zero_module_and_bound_violation():
    I = mk(2, (2, 0), (1, 1))
    assert stage_s_value(I, I, 5) is None
    with pytest.raises(InternalCheckError):
        stage_s_value(I, mk(2, (1, 0)), 0)  # difference sits at degree 1 > ceiling 0


def test_reg_via_chain_examples():
    assert reg_via_chain(mk(2, (2, 0), (1, 1))) == 2
    assert reg_via_chain(mk(2, (2, 0), (0, 3))) == 4
    assert reg_via_chain(mk(2, (1, 0))) == 1


def test_reg_via_chain_rejects_non_borel_with_witness():
    with pytest.raises(NotBorelTypeError) as exc:
        reg_via_chain(mk(2, (0, 2)))
    assert exc.value.evidence.witness.j == 2


def test_regularity_upper_bound():
    assert regularity_upper_bound(mk(2, (2, 0), (1, 1))) == 3
    assert regularity_upper_bound(mk(3, (0, 0, 5))) == 13


def test_hilbert_identity_worked_example():
    I = mk(2, (2, 0), (1, 1))
    chain = build_chain(I)
    report = check_chain_hilbert_identity(chain, reg_via_chain(I) + 3)
    assert report.all_hold
    # stage 0, degree 1 is the interesting entry: 2 - 1 = q_0(1) * 1
    assert (0, 1, True) in report.checks


def test_hilbert_identity_on_artinian_all_degrees():
    I = mk(2, (2, 0), (0, 3))
    report = check_chain_hilbert_identity(build_chain(I), 8)
    assert report.all_hold and not report.failures()


def test_chain_shape_and_strictness_on_borel_instances():
    rng = SplitMix64(31)
    seen_long = 0
    for _ in range(40):
        ring = RingContext(rng.randint(2, 4))
        (I,) = borel_type_parts(rng, ring, rng.randint(1, 4), 1)
        chain = build_chain(I)
        ns = [st.n_l for st in chain.stages]
        assert chain.r <= ring.n and all(a > b for a, b in zip(ns, ns[1:]))
        assert all(st.s_value is not None for st in chain.stages)
        assert all(st.restricted.extend(ring.n - st.n_l) == st.ideal for st in chain.stages)
        assert reg_via_chain(I) <= regularity_upper_bound(I)
        if chain.r >= 2:
            seen_long += 1
            nxt = chain.stages[1].ideal
            assert reg_via_chain(nxt) <= reg_via_chain(I)
    assert seen_long >= 3
