import pytest

from borelreg import MonomialIdeal, VerifyConfig, property_names, run_verify
from borelreg.errors import BorelRegError
from borelreg.verify import PROPERTIES


SMALL = VerifyConfig(seed=0, count=6)


def test_all_properties_pass_on_small_run():
    report = run_verify(SMALL)
    assert report.ok
    assert {o.name for o in report.outcomes} == set(property_names())


def test_reports_are_byte_identical_for_equal_configs():
    a = run_verify(VerifyConfig(seed=3, count=4)).to_json()
    b = run_verify(VerifyConfig(seed=3, count=4)).to_json()
    assert a == b


def test_different_seeds_change_the_instance_stream():
    sel = ("star_exchange_agree",)
    a = run_verify(VerifyConfig(seed=1, count=3, properties=sel))
    b = run_verify(VerifyConfig(seed=2, count=3, properties=sel))
    assert a.ok and b.ok  # different instances, same verdicts


def test_property_selection_and_unknown_names():
    report = run_verify(VerifyConfig(seed=0, count=2, properties=("lcm_is_join",)))
    assert [o.name for o in report.outcomes] == ["lcm_is_join"]
    with pytest.raises(BorelRegError):
        run_verify(VerifyConfig(seed=0, count=1, properties=("no_such_property",)))


def test_kind_override_reduces_to_artinian_behavior():
    report = run_verify(
        VerifyConfig(
            seed=0,
            count=10,
            kind="artinian",
            properties=("truncations_stable_above_reg", "artinian_chain_agrees"),
        )
    )
    assert report.ok
    assert report.outcome("truncations_stable_above_reg").passed == 10


def test_single_index_replay():
    cfg = VerifyConfig(seed=0, count=50, properties=("chain_shape",))
    full = run_verify(cfg)
    assert full.ok
    single = run_verify(cfg, index=37)
    assert single.outcome("chain_shape").passed == 1


def test_tampered_truncate_is_caught_with_replay_dump(monkeypatch):
    """A deliberately broken truncation must surface as recorded failures
    carrying the instance file and the replay command."""
    real = MonomialIdeal.truncate

    def broken(self, e):
        out = real(self, e)
        if len(out.gens) > 1:
            return MonomialIdeal(out.ring, out.gens[:-1])  # drop a generator
        return out

    monkeypatch.setattr(MonomialIdeal, "truncate", broken)
    report = run_verify(
        VerifyConfig(seed=0, count=6, properties=("truncations_stable_above_reg", "truncate_hilbert"))
    )
    assert not report.ok
    failures = [f for o in report.outcomes for f in o.failures]
    assert failures
    assert any("ring " in text for f in failures for _, text in f.ideals)
    assert all("borelreg verify --seed 0" in f.replay for f in failures)


def test_oracle_budget_exhaustion_counts_as_skip_not_pass():
    report = run_verify(
        VerifyConfig(seed=0, count=4, properties=("oracle_self_checks",), oracle_max_gens=0)
    )
    outcome = report.outcome("oracle_self_checks")
    assert outcome.failed == 0 and outcome.passed == 0 and outcome.skipped == 4


def test_runner_registry_matches_public_names():
    assert set(PROPERTIES) == set(property_names())
