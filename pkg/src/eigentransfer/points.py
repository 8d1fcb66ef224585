"""Classical points, mock form spaces, and the divisibility criterion.

A classical point packages a dominant weight with an eigenvalue system: one
unramified character per place above p (the normalized eigenvalue system on
the antidominant double-coset algebra) and one Satake parameter multiset per
tracked split place.  Transfer acts componentwise through the weight, the
eigenvalue-system, and the Satake-parameter maps.

A mock form space is a formal sum of classical points of one weight with
multiplicities.  Its characteristic polynomial for a chosen product of Hecke
generators is ``prod (1 - lambda·T)^mult`` with exact rational ``lambda``
obtained by evaluating each point's eigenvalue under a symbol assignment (the
weight twist is applied by multiplying in the weight character's value at the
chosen cocharacter).  Because both sides split into linear factors, the
divisibility ``charpoly(source) | charpoly(target)^C`` is decided exactly by
comparing per-eigenvalue multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import EmptyPacket, SizeMismatch
from .monomial import Monomial, SymbolValue
from .tori import (
    AlgebraicWeight,
    CocharVector,
    UnramifiedCharacter,
    weight_as_character,
)
from .transfer import (
    TransferConfig,
    atkin_lehner_pullback,
    satake_param_transfer,
    weight_pullback,
)

__all__ = [
    "ClassicalPoint",
    "MockFormSpace",
    "AtkinLehnerFactor",
    "SphericalFactor",
    "point_eigenvalue",
    "transfer_point",
    "DiagramReport",
    "diagram_check",
    "charpoly",
    "divisibility_check",
    "constant_C",
    "build_transferred_space",
]

Assignment = Mapping[str, SymbolValue]


@dataclass(frozen=True)
class ClassicalPoint:
    """A weight plus eigenvalue data, keyed by place tags.

    ``up`` maps each place above p to an unramified character of the weight's
    shape; ``satake`` maps each tracked place to per-block parameter tuples.
    Satake blocks are stored sorted by canonical text, so equality of points
    compares parameter multisets.
    """

    weight: AlgebraicWeight
    up: tuple[tuple[str, UnramifiedCharacter], ...]
    satake: tuple[tuple[str, tuple[tuple[Monomial, ...], ...]], ...]

    def __post_init__(self) -> None:
        shape = self.weight.shape
        up = tuple(
            sorted(((str(place), chi) for place, chi in self.up), key=lambda item: item[0])
        )
        for place, chi in up:
            if not isinstance(chi, UnramifiedCharacter) or chi.shape != shape:
                raise ValueError(
                    f"eigenvalue system at place {place!r} must be a character on {shape}"
                )
        satake_norm = []
        sorted_satake = sorted(
            ((str(place), blocks) for place, blocks in self.satake),
            key=lambda item: item[0],
        )
        for place, blocks in sorted_satake:
            blocks = tuple(tuple(block) for block in blocks)
            if len(blocks) != shape.r or any(
                len(block) != shape.blocks[i] for i, block in enumerate(blocks)
            ):
                raise ValueError(
                    f"Satake data at place {place!r} must have block sizes {shape.blocks}"
                )
            if not all(isinstance(v, Monomial) for block in blocks for v in block):
                raise ValueError(f"Satake values at place {place!r} must be Monomials")
            satake_norm.append(
                (place, tuple(tuple(sorted(block, key=lambda m: m.text())) for block in blocks))
            )
        if len({place for place, _ in up}) != len(up):
            raise ValueError("duplicate place tags in eigenvalue systems")
        if len({place for place, _ in satake_norm}) != len(satake_norm):
            raise ValueError("duplicate place tags in Satake data")
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "satake", tuple(satake_norm))

    @classmethod
    def build(
        cls,
        weight: AlgebraicWeight,
        up: Mapping[str, UnramifiedCharacter] | None = None,
        satake: Mapping[str, Sequence[Sequence[Monomial]]] | None = None,
    ) -> "ClassicalPoint":
        up_items = tuple((place, chi) for place, chi in (up or {}).items())
        satake_items = tuple(
            (place, tuple(tuple(block) for block in blocks))
            for place, blocks in (satake or {}).items()
        )
        return cls(weight, up_items, satake_items)

    def up_at(self, place: str) -> UnramifiedCharacter:
        for tag, chi in self.up:
            if tag == place:
                return chi
        raise ValueError(f"point has no eigenvalue system at place {place!r}")

    def satake_at(self, place: str) -> tuple[tuple[Monomial, ...], ...]:
        for tag, blocks in self.satake:
            if tag == place:
                return blocks
        raise ValueError(f"point has no Satake data at place {place!r}")


@dataclass(frozen=True)
class MockFormSpace:
    """Classical points of one weight with positive multiplicities."""

    weight: AlgebraicWeight
    entries: tuple[tuple[ClassicalPoint, int], ...]

    def __post_init__(self) -> None:
        entries = tuple((point, int(mult)) for point, mult in self.entries)
        for point, mult in entries:
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            if point.weight != self.weight:
                raise ValueError("all entries of a form space must share its weight")
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class AtkinLehnerFactor:
    """Generator of the antidominant double-coset algebra at one place above p.

    The eigenvalue on a point is the value of its (weight-twisted) eigenvalue
    system at the antidominant-ordered cocharacter.
    """

    place: str
    cochar: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cochar", tuple(int(e) for e in self.cochar))

    def eigenvalue(self, point: ClassicalPoint, assign: Assignment) -> Fraction:
        shape = point.weight.shape
        vector = CocharVector(shape, self.cochar)
        if not vector.is_antidominant():
            raise ValueError(
                f"cocharacter {self.cochar} is not weakly decreasing within blocks"
            )
        chi = point.up_at(self.place)
        twisted = chi.eval(vector) * weight_as_character(point.weight).eval(vector)
        return twisted.evaluate(assign)


@dataclass(frozen=True)
class SphericalFactor:
    """Unramified Hecke generator at a tracked place: elementary symmetric of given degree."""

    place: str
    degree: int

    def __post_init__(self) -> None:
        if int(self.degree) != self.degree or self.degree < 1:
            raise ValueError(f"degree must be a positive integer, got {self.degree}")
        object.__setattr__(self, "degree", int(self.degree))

    def eigenvalue(self, point: ClassicalPoint, assign: Assignment) -> Fraction:
        params = [
            value.evaluate(assign)
            for block in point.satake_at(self.place)
            for value in block
        ]
        if self.degree > len(params):
            raise ValueError(
                f"degree {self.degree} exceeds the {len(params)} Satake parameters"
            )
        total = Fraction(0)
        for subset in combinations(params, self.degree):
            term = Fraction(1)
            for value in subset:
                term *= value
            total += term
        return total


HeckeFactor = AtkinLehnerFactor | SphericalFactor


def point_eigenvalue(
    point: ClassicalPoint, factors: Sequence[HeckeFactor], assign: Assignment
) -> Fraction:
    """Eigenvalue of a product of generators: the product of factor eigenvalues."""
    value = Fraction(1)
    for factor in factors:
        value *= factor.eigenvalue(point, assign)
    return value


def transfer_point(point: ClassicalPoint, cfg: TransferConfig) -> ClassicalPoint:
    """Transfer weight, eigenvalue systems, and Satake data componentwise."""
    if point.weight.shape != cfg.source:
        raise SizeMismatch(
            f"point on shape {point.weight.shape} does not match config source {cfg.source}"
        )
    weight = weight_pullback(point.weight, cfg)
    up = {place: atkin_lehner_pullback(chi, cfg) for place, chi in point.up}
    satake = {
        place: (satake_param_transfer(blocks, cfg),) for place, blocks in point.satake
    }
    return ClassicalPoint.build(weight, up, satake)


@dataclass(frozen=True)
class DiagramReport:
    """Per-source-point match flags against a target point list."""

    results: tuple[bool, ...]

    @property
    def matched(self) -> int:
        return sum(1 for ok in self.results if ok)

    @property
    def unmatched(self) -> int:
        return len(self.results) - self.matched

    @property
    def ok(self) -> bool:
        return all(self.results)


def diagram_check(
    source_points: Sequence[ClassicalPoint],
    target_points: Sequence[ClassicalPoint],
    cfg: TransferConfig,
) -> DiagramReport:
    """Whether the transfer of each source point occurs among the target points."""
    targets = list(target_points)
    results = tuple(transfer_point(point, cfg) in targets for point in source_points)
    return DiagramReport(results)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def charpoly(
    space: MockFormSpace, factors: Sequence[HeckeFactor], assign: Assignment
) -> tuple[Fraction, ...]:
    """Coefficients of ``prod (1 - lambda·T)^mult`` in ascending powers of ``T``."""
    poly = [Fraction(1)]
    for point, mult in space.entries:
        lam = point_eigenvalue(point, factors, assign)
        for _ in range(mult):
            poly = _poly_mul(poly, [Fraction(1), -lam])
    return tuple(poly)


def _eigenvalue_multiplicities(
    space: MockFormSpace, factors: Sequence[HeckeFactor], assign: Assignment
) -> dict[Fraction, int]:
    out: dict[Fraction, int] = {}
    for point, mult in space.entries:
        lam = point_eigenvalue(point, factors, assign)
        out[lam] = out.get(lam, 0) + mult
    return out


def divisibility_check(
    space_source: MockFormSpace,
    space_target: MockFormSpace,
    constant: int,
    factors: Sequence[HeckeFactor],
    assign: Assignment,
) -> bool:
    """Whether ``charpoly(source)`` divides ``charpoly(target)^constant``.

    Both polynomials split into linear factors by construction, so this is the
    per-eigenvalue comparison ``mult_source <= constant · mult_target``.
    """
    constant = int(constant)
    if constant < 1:
        raise ValueError(f"the constant must be a positive integer, got {constant}")
    source = _eigenvalue_multiplicities(space_source, factors, assign)
    target = _eigenvalue_multiplicities(space_target, factors, assign)
    return all(mult <= constant * target.get(lam, 0) for lam, mult in source.items())


def constant_C(dim_source: int, dims_target: Sequence[int]) -> int:
    """Max over the packet of ``ceil(dim_source / dim_target)``."""
    dims = [int(d) for d in dims_target]
    if not dims:
        raise EmptyPacket("the packet of target dimensions is empty")
    if dim_source < 1 or any(d < 1 for d in dims):
        raise ValueError("dimensions must be positive integers")
    return max(-(-int(dim_source) // d) for d in dims)


def build_transferred_space(space: MockFormSpace, cfg: TransferConfig) -> MockFormSpace:
    """Transfer every entry's point, preserving multiplicities."""
    weight = weight_pullback(space.weight, cfg)
    entries = tuple((transfer_point(point, cfg), mult) for point, mult in space.entries)
    return MockFormSpace(weight, entries)
