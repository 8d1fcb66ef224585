"""Diagonal tori of products of general linear blocks over a p-adic field.

A :class:`GroupShape` records the block sizes ``(n_1, ..., n_r)`` of a product
of general linear groups; positions are flattened to ``0..n-1`` with block
``i`` occupying ``offsets[i] .. offsets[i]+n_i-1``.  Unramified characters of
the diagonal torus are stored through their values on the basis cocharacters
``e_p`` (the coordinate maps ``x -> diag(1,..,x,..,1)`` evaluated at the
uniformizer), which are exact monomial values.  Algebraic weights are integer
exponent vectors; as characters they take the value ``W^k`` on ``e_p``,
``W`` being the formal uniformizer symbol.

The half modulus character of the upper-triangular Borel is computed from
``|uniformizer| = q^(-1)``: on a block of size ``m`` the full modulus takes
``e_j`` (1-based ``j``) to ``q^-(m+1-2j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ShapeMismatch
from .monomial import Monomial, ONE, RESIDUE_SYMBOL, UNIFORMIZER_SYMBOL

__all__ = [
    "GroupShape",
    "CocharVector",
    "UnramifiedCharacter",
    "AlgebraicWeight",
    "modulus_half",
    "weight_as_character",
]


@dataclass(frozen=True)
class GroupShape:
    """Ordered block sizes of a product of general linear groups."""

    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        blocks = tuple(int(b) for b in self.blocks)
        if not blocks or any(b < 1 for b in blocks):
            raise ValueError("a group shape needs at least one block, all of positive size")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def r(self) -> int:
        return len(self.blocks)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for b in self.blocks:
            out.append(acc)
            acc += b
        return tuple(out)

    def block_of(self, p: int) -> tuple[int, int]:
        """Block index and 0-based position within the block of flat position ``p``."""
        if not 0 <= p < self.n:
            raise ValueError(f"position {p} out of range")
        for i, start in enumerate(self.offsets):
            if p < start + self.blocks[i]:
                return i, p - start
        raise AssertionError("unreachable")

    def flat(self, i: int, j: int) -> int:
        """Flat position of the 0-based ``j``-th entry of block ``i``."""
        if not 0 <= i < self.r or not 0 <= j < self.blocks[i]:
            raise ValueError(f"no position ({i}, {j}) in shape {self.blocks}")
        return self.offsets[i] + j

    def block_range(self, i: int) -> range:
        return range(self.offsets[i], self.offsets[i] + self.blocks[i])

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.blocks) + ")"


def _check_shape(a, b) -> None:
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes differ: {a.shape} vs {b.shape}")


@dataclass(frozen=True)
class CocharVector:
    """Integer cocharacter of the diagonal torus, in flat coordinates."""

    shape: GroupShape
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exps)
        if len(exps) != self.shape.n:
            raise ValueError(f"cocharacter needs {self.shape.n} entries, got {len(exps)}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def zero(cls, shape: GroupShape) -> "CocharVector":
        return cls(shape, (0,) * shape.n)

    @classmethod
    def basis(cls, shape: GroupShape, p: int) -> "CocharVector":
        if not 0 <= p < shape.n:
            raise ValueError(f"position {p} out of range")
        return cls(shape, tuple(1 if u == p else 0 for u in range(shape.n)))

    def is_antidominant(self) -> bool:
        """Weakly decreasing within each block: the contracting monoid of the torus."""
        for i in range(self.shape.r):
            block = [self.exps[p] for p in self.shape.block_range(i)]
            if any(block[j] < block[j + 1] for j in range(len(block) - 1)):
                return False
        return True

    def __add__(self, other):
        if not isinstance(other, CocharVector):
            return NotImplemented
        _check_shape(self, other)
        return CocharVector(self.shape, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __neg__(self) -> "CocharVector":
        return CocharVector(self.shape, tuple(-e for e in self.exps))


@dataclass(frozen=True)
class UnramifiedCharacter:
    """Unramified character of the torus, stored by its values on basis cocharacters."""

    shape: GroupShape
    values: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        if len(values) != self.shape.n:
            raise ValueError(f"character needs {self.shape.n} values, got {len(values)}")
        if not all(isinstance(v, Monomial) for v in values):
            raise ValueError("character values must be Monomial instances")
        object.__setattr__(self, "values", values)

    @classmethod
    def trivial(cls, shape: GroupShape) -> "UnramifiedCharacter":
        return cls(shape, (ONE,) * shape.n)

    def value(self, i: int, j: int) -> Monomial:
        """Value on the basis cocharacter at block ``i``, 0-based entry ``j``."""
        return self.values[self.shape.flat(i, j)]

    def __mul__(self, other):
        if not isinstance(other, UnramifiedCharacter):
            return NotImplemented
        _check_shape(self, other)
        return UnramifiedCharacter(
            self.shape, tuple(a * b for a, b in zip(self.values, other.values))
        )

    def inverse(self) -> "UnramifiedCharacter":
        return UnramifiedCharacter(self.shape, tuple(v.inverse() for v in self.values))

    def eval(self, cochar: CocharVector) -> Monomial:
        """Value on an arbitrary cocharacter, by multiplicativity."""
        _check_shape(self, cochar)
        out = ONE
        for v, e in zip(self.values, cochar.exps):
            if e:
                out = out * v ** e
        return out


@dataclass(frozen=True)
class AlgebraicWeight:
    """Integer character of the torus, in flat coordinates."""

    shape: GroupShape
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exps)
        if len(exps) != self.shape.n:
            raise ValueError(f"weight needs {self.shape.n} entries, got {len(exps)}")
        object.__setattr__(self, "exps", exps)

    def classify(self) -> str:
        """``"regular"`` (strictly decreasing per block), ``"dominant"`` (weakly), or ``"neither"``."""
        strict = True
        for i in range(self.shape.r):
            block = [self.exps[p] for p in self.shape.block_range(i)]
            for j in range(len(block) - 1):
                if block[j] < block[j + 1]:
                    return "neither"
                if block[j] == block[j + 1]:
                    strict = False
        return "regular" if strict else "dominant"

    def is_dominant(self) -> bool:
        return self.classify() != "neither"


def modulus_half(shape: GroupShape, sign: int) -> UnramifiedCharacter:
    """The half power (``sign=+1``) or inverse half power (``sign=-1``) of the Borel modulus."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    values = []
    for p in range(shape.n):
        i, j = shape.block_of(p)
        m = shape.blocks[i]
        doubled = -sign * (m + 1 - 2 * (j + 1))
        values.append(Monomial(1, {RESIDUE_SYMBOL: Fraction(doubled, 2)}))
    return UnramifiedCharacter(shape, tuple(values))


def weight_as_character(weight: AlgebraicWeight) -> UnramifiedCharacter:
    """The weight as an unramified character: ``W^k`` on each basis cocharacter."""
    return UnramifiedCharacter(
        weight.shape,
        tuple(Monomial(1, {UNIFORMIZER_SYMBOL: k}) for k in weight.exps),
    )
