"""Tests for the exact monomial value group and its evaluation semantics."""

import random
from fractions import Fraction

import pytest

from eigentransfer.errors import MissingSymbol, NonSquareAssignment
from eigentransfer.monomial import (
    Monomial,
    ONE,
    RESIDUE_SYMBOL,
    SymbolValue,
    UNIFORMIZER_SYMBOL,
    symbol,
    valid_symbol,
)


def test_reserved_names():
    assert RESIDUE_SYMBOL == "q"
    assert UNIFORMIZER_SYMBOL == "W"


def test_valid_symbol():
    assert valid_symbol("q")
    assert valid_symbol("W")
    assert valid_symbol("c12")
    assert valid_symbol("_tmp")
    assert valid_symbol("a_b_3")
    assert not valid_symbol("")
    assert not valid_symbol("2x")
    assert not valid_symbol("a-b")
    assert not valid_symbol("a b")
    assert not valid_symbol("x^2")
    assert not valid_symbol(3)
    assert not valid_symbol(None)


def test_construction_normalization():
    m = Monomial(Fraction(4, 6), {"x": 2})
    assert m.coeff == Fraction(2, 3)
    assert m.exponents() == {"x": Fraction(2)}
    # zero exponents are dropped
    assert Monomial(5, {"x": 0}) == Monomial(5)
    assert Monomial(5, {"x": 0}).symbols() == ()
    # half-integer exponents are kept exactly, doubled internally
    h = Monomial(1, {"q": Fraction(3, 2)})
    assert h.doubled_exponent("q") == 3
    assert h.doubled_exponent("absent") == 0
    assert h.exponents() == {"q": Fraction(3, 2)}


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        Monomial(0)
    with pytest.raises(ValueError):
        Monomial(Fraction(0, 5), {"x": 1})
    with pytest.raises(ValueError):
        Monomial(1, {"x": Fraction(1, 3)})
    with pytest.raises(ValueError):
        Monomial(1, {"bad name": 1})
    with pytest.raises(ValueError):
        Monomial(1, {"": 1})


def test_one_and_symbol_helpers():
    assert ONE.is_one()
    assert ONE.coeff == 1
    assert symbol("x") == Monomial(1, {"x": 1})
    assert symbol("x", Fraction(-1, 2)) == Monomial(1, {"x": Fraction(-1, 2)})
    assert not symbol("x").is_one()
    assert not Monomial(2).is_one()


def test_multiplication():
    a = Monomial(2, {"q": Fraction(1, 2)})
    b = Monomial(3, {"q": Fraction(1, 2)})
    assert a * b == Monomial(6, {"q": 1})
    # exponents cancel back to nothing
    assert symbol("x") * symbol("x", -1) == ONE
    # scalars multiply on either side
    assert 2 * a == Monomial(4, {"q": Fraction(1, 2)})
    assert a * Fraction(1, 2) == Monomial(1, {"q": Fraction(1, 2)})
    assert Fraction(3, 2) * ONE == Monomial(Fraction(3, 2))


def test_powers_and_inverse():
    a = Monomial(2, {"x": 1, "q": Fraction(-1, 2)})
    assert a ** 0 == ONE
    assert a ** 1 == a
    assert a ** 3 == a * a * a
    assert a ** -2 == (a.inverse()) ** 2
    assert a * a.inverse() == ONE
    assert a.inverse() == Monomial(Fraction(1, 2), {"x": -1, "q": Fraction(1, 2)})


def test_division():
    a = Monomial(2, {"q": Fraction(1, 2)})
    b = Monomial(3, {"q": Fraction(1, 2)})
    assert a / b == Monomial(Fraction(2, 3))
    assert a / 2 == Monomial(1, {"q": Fraction(1, 2)})
    assert (a / b) * b == a


def test_group_laws_random():
    rng = random.Random(20260823)
    names = ["a", "b", "q", "W"]

    def rand_monomial():
        coeff = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        if rng.random() < 0.5:
            coeff = -coeff
        exps = {n: Fraction(rng.randint(-4, 4), rng.choice((1, 2))) for n in names}
        return Monomial(coeff, exps)

    for _ in range(200):
        x, y, z = rand_monomial(), rand_monomial(), rand_monomial()
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * ONE == x
        assert x * x.inverse() == ONE
        assert (x * y).inverse() == x.inverse() * y.inverse()
        assert (x * y) ** 2 == x ** 2 * y ** 2


def test_equality_and_hash():
    a = Monomial(2, {"x": 1})
    b = Monomial(2, {"x": Fraction(2, 2)})
    assert a == b
    assert hash(a) == hash(b)
    assert a != Monomial(2, {"x": 2})
    assert a != Monomial(3, {"x": 1})
    assert a != "2 * x"
    table = {a: "hit"}
    assert table[b] == "hit"


def test_evaluate_integer_exponents():
    assign = {"q": SymbolValue(9)}
    assert Monomial(2, {"q": 1}).evaluate(assign) == 18
    assert Monomial(1, {"q": 2}).evaluate(assign) == 81
    assert Monomial(1, {"q": -1}).evaluate(assign) == Fraction(1, 9)
    assert Monomial(Fraction(-5, 3)).evaluate({}) == Fraction(-5, 3)


def test_evaluate_half_integer_exponents():
    assign = {"q": SymbolValue(9, 3)}
    assert symbol("q", Fraction(1, 2)).evaluate(assign) == 3
    assert symbol("q", Fraction(-1, 2)).evaluate(assign) == Fraction(1, 3)
    assert symbol("q", Fraction(3, 2)).evaluate(assign) == 27
    assert Monomial(2, {"q": Fraction(1, 2)}).evaluate(assign) == 6
    frac = {"q": SymbolValue(Fraction(9, 4), Fraction(3, 2))}
    assert symbol("q", Fraction(1, 2)).evaluate(frac) == Fraction(3, 2)


def test_evaluate_errors():
    with pytest.raises(MissingSymbol):
        symbol("x").evaluate({})
    with pytest.raises(MissingSymbol):
        (symbol("x") * symbol("y")).evaluate({"x": SymbolValue(2)})
    with pytest.raises(NonSquareAssignment):
        symbol("q", Fraction(1, 2)).evaluate({"q": SymbolValue(9)})
    # even exponents never need the root
    assert symbol("q", 2).evaluate({"q": SymbolValue(9)}) == 81


def test_evaluate_is_multiplicative():
    rng = random.Random(7)
    assign = {
        "a": SymbolValue(4, 2),
        "b": SymbolValue(Fraction(25, 4), Fraction(5, 2)),
        "q": SymbolValue(9, 3),
    }

    def rand_monomial():
        coeff = Fraction(rng.randint(1, 9))
        exps = {n: Fraction(rng.randint(-3, 3), rng.choice((1, 2))) for n in assign}
        return Monomial(coeff, exps)

    for _ in range(100):
        x, y = rand_monomial(), rand_monomial()
        assert (x * y).evaluate(assign) == x.evaluate(assign) * y.evaluate(assign)
        assert x.inverse().evaluate(assign) == 1 / x.evaluate(assign)


def test_symbol_value_validation():
    assert SymbolValue(9).value == 9
    assert SymbolValue(9).sqrt is None
    assert SymbolValue(9, 3).sqrt == 3
    assert SymbolValue(Fraction(9, 4), Fraction(-3, 2)).sqrt == Fraction(-3, 2)
    with pytest.raises(ValueError):
        SymbolValue(0)
    with pytest.raises(ValueError):
        SymbolValue(-4, 2)
    with pytest.raises(ValueError):
        SymbolValue(9, 2)


def test_text_canonical_form():
    m = Monomial(1, {"M": 1, "W": 1, "c2": 1, "q": Fraction(-1, 2)})
    assert m.text() == "1 * M * W * c2 * q^(-1/2)"
    assert Monomial(Fraction(-3, 2), {"W": 1, "q": Fraction(1, 2)}).text() == "-3/2 * W * q^(1/2)"
    assert ONE.text() == "1"
    assert Monomial(-1).text() == "-1"
    assert symbol("x", 2).text() == "1 * x^2"
    assert symbol("x", -1).text() == "1 * x^-1"
    assert symbol("x", Fraction(3, 2)).text() == "1 * x^(3/2)"
    assert symbol("x", Fraction(-5, 2)).text() == "1 * x^(-5/2)"
    assert str(m) == m.text()


def test_parse():
    assert Monomial.parse("q") == symbol("q")
    assert Monomial.parse("3") == Monomial(3)
    assert Monomial.parse("-3/2") == Monomial(Fraction(-3, 2))
    assert Monomial.parse("1/2 * q^2") == Monomial(Fraction(1, 2), {"q": 2})
    assert Monomial.parse("2 * 3") == Monomial(6)
    assert Monomial.parse("q * q") == symbol("q", 2)
    assert Monomial.parse("q * q^-1") == ONE
    assert Monomial.parse("1 * M * W * c2 * q^(-1/2)") == Monomial(
        1, {"M": 1, "W": 1, "c2": 1, "q": Fraction(-1, 2)}
    )
    assert Monomial.parse("x^(3/2)") == symbol("x", Fraction(3, 2))


def test_parse_rejects_garbage():
    for bad in ["", "   ", "q^", "q^(1/3)", "2x", "x + y", "0", "* q", "q *", "x^^2", "x^(1/2"]:
        with pytest.raises(ValueError):
            Monomial.parse(bad)


def test_text_parse_round_trip_random():
    rng = random.Random(99)
    names = ["M", "W", "q", "c1", "c2", "x_3"]
    for _ in range(200):
        coeff = Fraction(rng.randint(1, 30), rng.randint(1, 30))
        if rng.random() < 0.5:
            coeff = -coeff
        exps = {n: Fraction(rng.randint(-5, 5), rng.choice((1, 2))) for n in names}
        m = Monomial(coeff, exps)
        assert Monomial.parse(m.text()) == m
