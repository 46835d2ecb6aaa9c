"""Exact distribution container and fraction text forms."""

from fractions import Fraction

from forestbuilder.distribution import (
    ForestDistribution,
    convolve,
    format_fraction,
    parse_fraction,
)


def test_fraction_text_forms():
    assert format_fraction(Fraction(6, 5)) == "6/5"
    assert format_fraction(Fraction(3)) == "3/1"
    assert parse_fraction("6/5") == Fraction(6, 5)
    assert parse_fraction("4/8") == Fraction(1, 2)
    assert parse_fraction("7") == Fraction(7)


def test_convolve_identity_and_cancellation():
    one = {0: Fraction(1)}
    poly = {1: Fraction(2, 3), 2: Fraction(1, 3)}
    assert convolve(one, poly) == poly
    product = convolve(
        {0: Fraction(1), 1: Fraction(-1)}, {0: Fraction(1), 1: Fraction(1)}
    )
    assert product == {0: Fraction(1), 2: Fraction(-1)}  # the x term cancels away


def test_distribution_accessors():
    d = ForestDistribution(4, 3, {1: Fraction(2, 3), 2: Fraction(1, 3)})
    assert d.coefficient(1) == Fraction(2, 3)
    assert d.coefficient(5) == 0
    assert d.support() == [1, 2]
    assert d.total() == 1
    assert d.expected_components() == Fraction(4, 3)
    assert d.evaluate(Fraction(1)) == 1
    assert d.evaluate(2) == Fraction(8, 3)


def test_same_polynomial_ignores_metadata():
    a = ForestDistribution(4, 4, {1: Fraction(2, 3), 2: Fraction(1, 3)})
    b = ForestDistribution(4, 3, {1: Fraction(2, 3), 2: Fraction(1, 3)})
    assert a.same_polynomial(b)
    assert not a.same_polynomial(ForestDistribution(4, 3, {1: Fraction(1)}))


def test_json_round_trip_with_numeric_key_order():
    probs = {k: Fraction(1, 11) for k in range(1, 12)}
    d = ForestDistribution(22, 21, probs)
    data = d.to_json_dict()
    assert data["n"] == 22 and data["m"] == 21
    assert list(data["probs"]) == [str(k) for k in range(1, 12)]
    assert data["probs"]["1"] == "1/11"
    assert ForestDistribution.from_json_dict(data) == d
