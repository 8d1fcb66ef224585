"""Tests for group shapes, torus characters, weights, and the modulus character."""

import random
from fractions import Fraction

import pytest

from eigentransfer.errors import ShapeMismatch
from eigentransfer.monomial import Monomial, ONE, symbol
from eigentransfer.tori import (
    AlgebraicWeight,
    CocharVector,
    GroupShape,
    UnramifiedCharacter,
    modulus_half,
    weight_as_character,
)


def test_group_shape_basics():
    shape = GroupShape((2, 3, 1))
    assert shape.n == 6
    assert shape.r == 3
    assert shape.offsets == (0, 2, 5)
    assert str(shape) == "(2,3,1)"
    assert list(shape.block_range(1)) == [2, 3, 4]


def test_group_shape_flat_block_round_trip():
    shape = GroupShape((2, 3, 1))
    for p in range(shape.n):
        i, j = shape.block_of(p)
        assert shape.flat(i, j) == p
    assert shape.block_of(0) == (0, 0)
    assert shape.block_of(4) == (1, 2)
    assert shape.block_of(5) == (2, 0)
    with pytest.raises(ValueError):
        shape.block_of(6)
    with pytest.raises(ValueError):
        shape.flat(0, 2)
    with pytest.raises(ValueError):
        shape.flat(3, 0)


def test_group_shape_validation():
    with pytest.raises(ValueError):
        GroupShape(())
    with pytest.raises(ValueError):
        GroupShape((2, 0))
    with pytest.raises(ValueError):
        GroupShape((-1,))
    assert GroupShape((1,)) == GroupShape((1,))
    assert GroupShape((2, 1)) != GroupShape((1, 2))


def test_cochar_vector():
    shape = GroupShape((2, 1))
    zero = CocharVector.zero(shape)
    assert zero.exps == (0, 0, 0)
    e1 = CocharVector.basis(shape, 0)
    assert e1.exps == (1, 0, 0)
    assert (e1 + CocharVector.basis(shape, 2)).exps == (1, 0, 1)
    assert (-e1).exps == (-1, 0, 0)
    with pytest.raises(ValueError):
        CocharVector(shape, (1, 0))
    with pytest.raises(ValueError):
        CocharVector.basis(shape, 3)
    with pytest.raises(ShapeMismatch):
        e1 + CocharVector.zero(GroupShape((3,)))


def test_cochar_antidominance():
    shape = GroupShape((2, 1))
    assert CocharVector(shape, (3, 1, 5)).is_antidominant()
    assert CocharVector(shape, (2, 2, -7)).is_antidominant()
    assert not CocharVector(shape, (1, 3, 0)).is_antidominant()
    # singleton blocks impose no condition
    ones = GroupShape((1, 1, 1))
    assert CocharVector(ones, (0, 5, -2)).is_antidominant()


def test_unramified_character_basics():
    shape = GroupShape((1, 2))
    chi = UnramifiedCharacter(shape, (symbol("a"), symbol("b"), symbol("c")))
    assert chi.value(0, 0) == symbol("a")
    assert chi.value(1, 1) == symbol("c")
    assert UnramifiedCharacter.trivial(shape).values == (ONE, ONE, ONE)
    with pytest.raises(ValueError):
        UnramifiedCharacter(shape, (symbol("a"), symbol("b")))
    with pytest.raises(ValueError):
        UnramifiedCharacter(shape, (symbol("a"), symbol("b"), "c"))


def test_character_group_operations():
    shape = GroupShape((2,))
    chi = UnramifiedCharacter(shape, (symbol("a"), Monomial(2, {"b": 1})))
    psi = UnramifiedCharacter(shape, (symbol("a", -1), symbol("b")))
    prod = chi * psi
    assert prod.values == (ONE, Monomial(2, {"b": 2}))
    assert (chi * chi.inverse()).values == (ONE, ONE)
    with pytest.raises(ShapeMismatch):
        chi * UnramifiedCharacter.trivial(GroupShape((1, 1)))


def test_character_eval():
    shape = GroupShape((2, 1))
    chi = UnramifiedCharacter(shape, (symbol("a"), symbol("b"), Monomial(3)))
    assert chi.eval(CocharVector.zero(shape)) == ONE
    for p in range(shape.n):
        assert chi.eval(CocharVector.basis(shape, p)) == chi.values[p]
    t = CocharVector(shape, (2, -1, 1))
    assert chi.eval(t) == Monomial(3, {"a": 2, "b": -1})
    with pytest.raises(ShapeMismatch):
        chi.eval(CocharVector.zero(GroupShape((3,))))


def test_character_eval_is_bilinear():
    rng = random.Random(11)
    shape = GroupShape((2, 2))
    for _ in range(50):
        chi = UnramifiedCharacter(
            shape,
            tuple(
                Monomial(rng.randint(1, 5), {"a": rng.randint(-2, 2)})
                for _ in range(shape.n)
            ),
        )
        psi = UnramifiedCharacter(
            shape,
            tuple(
                Monomial(1, {"b": Fraction(rng.randint(-3, 3), 2)})
                for _ in range(shape.n)
            ),
        )
        t1 = CocharVector(shape, tuple(rng.randint(-2, 2) for _ in range(shape.n)))
        t2 = CocharVector(shape, tuple(rng.randint(-2, 2) for _ in range(shape.n)))
        assert chi.eval(t1 + t2) == chi.eval(t1) * chi.eval(t2)
        assert (chi * psi).eval(t1) == chi.eval(t1) * psi.eval(t1)
        assert chi.inverse().eval(t1) == chi.eval(t1).inverse()


def test_weight_classification():
    shape = GroupShape((2, 1))
    assert AlgebraicWeight(shape, (5, 3, 2)).classify() == "regular"
    assert AlgebraicWeight(shape, (3, 3, 1)).classify() == "dominant"
    assert AlgebraicWeight(shape, (1, 2, 0)).classify() == "neither"
    assert AlgebraicWeight(shape, (1, 2, 0)).is_dominant() is False
    assert AlgebraicWeight(shape, (3, 3, 1)).is_dominant() is True
    # singleton blocks are always regular
    ones = GroupShape((1, 1))
    assert AlgebraicWeight(ones, (0, 7)).classify() == "regular"
    with pytest.raises(ValueError):
        AlgebraicWeight(shape, (1, 2))


def test_modulus_half_anchors():
    q = lambda e: Monomial(1, {"q": e})
    assert modulus_half(GroupShape((2,)), 1).values == (q(Fraction(-1, 2)), q(Fraction(1, 2)))
    assert modulus_half(GroupShape((2,)), -1).values == (q(Fraction(1, 2)), q(Fraction(-1, 2)))
    assert modulus_half(GroupShape((2, 1)), 1).values == (
        q(Fraction(-1, 2)),
        q(Fraction(1, 2)),
        ONE,
    )
    assert modulus_half(GroupShape((3,)), 1).values == (q(-1), ONE, q(1))
    assert modulus_half(GroupShape((1,)), 1).values == (ONE,)
    with pytest.raises(ValueError):
        modulus_half(GroupShape((2,)), 0)
    with pytest.raises(ValueError):
        modulus_half(GroupShape((2,)), 2)


def test_modulus_half_structure():
    for blocks in [(1,), (4,), (2, 3), (1, 1, 2)]:
        shape = GroupShape(blocks)
        half = modulus_half(shape, 1)
        inv = modulus_half(shape, -1)
        assert (half * inv).values == (ONE,) * shape.n
        # the determinant of each block is unimodular: exponents sum to zero blockwise
        for i in range(shape.r):
            prod = ONE
            for p in shape.block_range(i):
                prod = prod * half.values[p]
            assert prod == ONE


def test_weight_as_character():
    shape = GroupShape((1, 1))
    kappa = AlgebraicWeight(shape, (2, 0))
    chi = weight_as_character(kappa)
    assert chi.values == (Monomial(1, {"W": 2}), ONE)
    assert chi.eval(CocharVector(shape, (1, 1))) == Monomial(1, {"W": 2})
    assert chi.eval(CocharVector(shape, (-1, 3))) == Monomial(1, {"W": -2})
    neg = AlgebraicWeight(GroupShape((2,)), (-1, 3))
    assert weight_as_character(neg).values == (
        Monomial(1, {"W": -1}),
        Monomial(1, {"W": 3}),
    )
