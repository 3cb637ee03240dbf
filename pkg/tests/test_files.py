import pytest

from borelreg import (
    MonomialIdeal,
    ParseError,
    RingContext,
    format_ideal_text,
    ideal_from_json,
    ideal_to_json,
    parse_ideal_text,
    parse_monomial,
)
from borelreg.generators import random_monomial_ideal
from borelreg.rng import SplitMix64

from conftest import mk


def test_parse_examples():
    assert parse_ideal_text("ring 2\nx1^2\nx1*x2\n") == mk(2, (2, 0), (1, 1))
    assert parse_ideal_text("ring 3\n# comment\nx2*x3^2\n") == mk(3, (0, 1, 2))
    with pytest.raises(ParseError) as exc:
        parse_ideal_text("ring 2\nx5\n")
    assert "unknown variable" in str(exc.value) and exc.value.line == 2


def test_parse_zero_ideal_and_unit_line():
    assert parse_ideal_text("ring 2\n").is_zero
    assert parse_ideal_text("ring 2\n# nothing\n").is_zero
    assert parse_ideal_text("ring 2\n1\n").improper


def test_parse_header_errors():
    with pytest.raises(ParseError):
        parse_ideal_text("x1\n")
    with pytest.raises(ParseError):
        parse_ideal_text("ring 2\nring 3\n")
    with pytest.raises(ParseError):
        parse_ideal_text("ring zero\n")
    with pytest.raises(ParseError):
        parse_ideal_text("")


def test_parse_monomial_errors_carry_position():
    ring = RingContext(2)
    with pytest.raises(ParseError):
        parse_monomial(ring, "x1^0")
    with pytest.raises(ParseError):
        parse_monomial(ring, "x1*x1")
    with pytest.raises(ParseError):
        parse_monomial(ring, "x1**x2")
    with pytest.raises(ParseError):
        parse_monomial(ring, "x1^")
    with pytest.raises(ParseError):
        parse_monomial(ring, "")


def test_parse_tolerates_whitespace_and_inline_comments():
    I = parse_ideal_text("  ring 2\n  x1 ^2 # nope\n".replace(" ^", "^"))
    assert I == mk(2, (2, 0))


def test_text_roundtrip_random():
    rng = SplitMix64(71)
    for _ in range(30):
        ring = RingContext(rng.randint(1, 4))
        I = random_monomial_ideal(rng, ring, rng.randint(1, 4))
        assert parse_ideal_text(format_ideal_text(I)) == I
    assert parse_ideal_text(format_ideal_text(MonomialIdeal.zero(ring))).is_zero
    assert parse_ideal_text(format_ideal_text(MonomialIdeal.whole_ring(ring))).improper


def test_json_roundtrip_random():
    rng = SplitMix64(72)
    for _ in range(30):
        ring = RingContext(rng.randint(1, 4))
        I = random_monomial_ideal(rng, ring, rng.randint(1, 4))
        assert ideal_from_json(ideal_to_json(I)) == I


def test_json_preserves_custom_names():
    ring = RingContext(2, ("a", "b"))
    from borelreg import Monomial, minimalize

    I = minimalize(ring, [Monomial(ring, (1, 2))])
    data = ideal_to_json(I)
    assert data["names"] == ["a", "b"] and data["gens"] == ["a*b^2"]
    assert ideal_from_json(data) == I
