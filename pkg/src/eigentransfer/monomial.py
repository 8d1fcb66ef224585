"""Exact multiplicative scalars: a rational coefficient times formal symbol powers.

All character values in this library are *monomial values*: nonzero rational
numbers multiplied by products of uninterpreted symbols raised to half-integer
exponents.  Exponents are stored doubled, so ``q^(1/2)`` is exact and nothing
is ever approximated by a float.  Symbols satisfy no relations among each
other; numeric meaning is supplied only at evaluation time, where each symbol
receives a positive rational value together with an explicitly declared
rational square root whenever a half-integer exponent has to be resolved.

Monomial values form a group under multiplication.  Addition is deliberately
not defined here; sums live in :mod:`eigentransfer.laurent`.

Reserved names: ``q`` is the residue field cardinality of the local base field
and ``W`` is the uniformizer (weight characters are ``W``-powers).  Transfer
configurations additionally bind a twist symbol, ``M`` by default.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from .errors import MissingSymbol, NonSquareAssignment

__all__ = [
    "RESIDUE_SYMBOL",
    "UNIFORMIZER_SYMBOL",
    "Monomial",
    "SymbolValue",
    "ONE",
    "symbol",
    "valid_symbol",
]

RESIDUE_SYMBOL = "q"
UNIFORMIZER_SYMBOL = "W"

Rational = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(?:(-?\d+)|\((-?\d+)/2\)))?\Z")


def valid_symbol(name: str) -> bool:
    """True if ``name`` is usable as a symbol (identifier-like, parseable)."""
    return isinstance(name, str) and bool(_NAME_RE.match(name))


@dataclass(frozen=True)
class SymbolValue:
    """Positive rational value of a symbol, with an optional declared square root.

    The root must be supplied explicitly whenever the symbol occurs with a
    half-integer exponent; it is never derived numerically.
    """

    value: Fraction
    sqrt: Optional[Fraction] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value <= 0:
            raise ValueError("symbol values must be positive rationals")
        if self.sqrt is not None:
            object.__setattr__(self, "sqrt", Fraction(self.sqrt))
            if self.sqrt * self.sqrt != self.value:
                raise ValueError("declared square root does not square to the value")


class Monomial:
    """Element of the group (nonzero rationals) x (free symbols with exponents in Z/2)."""

    __slots__ = ("_coeff", "_twice")

    def __init__(self, coeff: Rational, exponents: Mapping[str, Rational] | None = None):
        coeff = Fraction(coeff)
        if coeff == 0:
            raise ValueError("monomial coefficients are nonzero")
        twice: dict[str, int] = {}
        for name, exp in (exponents or {}).items():
            if not valid_symbol(name):
                raise ValueError(f"bad symbol name: {name!r}")
            doubled = Fraction(exp) * 2
            if doubled.denominator != 1:
                raise ValueError("exponents must lie in (1/2)Z")
            if doubled != 0:
                twice[name] = int(doubled)
        object.__setattr__(self, "_coeff", coeff)
        object.__setattr__(self, "_twice", tuple(sorted(twice.items())))

    @classmethod
    def _from_twice(cls, coeff: Fraction, twice: Mapping[str, int]) -> "Monomial":
        self = object.__new__(cls)
        if coeff == 0:
            raise ValueError("monomial coefficients are nonzero")
        object.__setattr__(self, "_coeff", coeff)
        object.__setattr__(self, "_twice", tuple(sorted((n, t) for n, t in twice.items() if t)))
        return self

    @property
    def coeff(self) -> Fraction:
        return self._coeff

    def exponents(self) -> dict[str, Fraction]:
        """Exponent of each symbol, as exact fractions."""
        return {name: Fraction(t, 2) for name, t in self._twice}

    def doubled_exponent(self, name: str) -> int:
        """Twice the exponent of ``name`` (0 when absent)."""
        for n, t in self._twice:
            if n == name:
                return t
        return 0

    def symbols(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self._twice)

    def is_one(self) -> bool:
        return self._coeff == 1 and not self._twice

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Monomial._from_twice(self._coeff * Fraction(other), dict(self._twice))
        if not isinstance(other, Monomial):
            return NotImplemented
        twice = dict(self._twice)
        for name, t in other._twice:
            twice[name] = twice.get(name, 0) + t
        return Monomial._from_twice(self._coeff * other._coeff, twice)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Monomial":
        if not isinstance(n, int):
            return NotImplemented
        return Monomial._from_twice(self._coeff ** n, {name: t * n for name, t in self._twice})

    def inverse(self) -> "Monomial":
        return self ** -1

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Monomial._from_twice(self._coeff / Fraction(other), dict(self._twice))
        if not isinstance(other, Monomial):
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._coeff == other._coeff and self._twice == other._twice

    def __hash__(self) -> int:
        return hash((self._coeff, self._twice))

    def evaluate(self, assignment: Mapping[str, SymbolValue]) -> Fraction:
        """Exact value under an assignment of positive rationals to symbols.

        Raises :class:`MissingSymbol` when a symbol has no assignment and
        :class:`NonSquareAssignment` when a half-integer exponent meets an
        assignment without a declared square root.
        """
        result = self._coeff
        for name, t in self._twice:
            try:
                sv = assignment[name]
            except KeyError:
                raise MissingSymbol(f"no value assigned to symbol {name!r}") from None
            if t % 2 == 0:
                result *= sv.value ** (t // 2)
            else:
                if sv.sqrt is None:
                    raise NonSquareAssignment(
                        f"symbol {name!r} occurs with a half-integer exponent "
                        "but its assignment declares no square root"
                    )
                result *= sv.sqrt ** t
        return result

    def text(self) -> str:
        """Canonical textual form, e.g. ``-3/2 * W * q^(1/2)``.

        The coefficient always comes first and symbols are sorted by name;
        integer exponents print plainly, half-integer ones as ``(t/2)``.
        This form round-trips through :meth:`parse`.
        """
        parts = [str(self._coeff)]
        for name, t in self._twice:
            if t == 2:
                parts.append(name)
            elif t % 2 == 0:
                parts.append(f"{name}^{t // 2}")
            else:
                parts.append(f"{name}^({t}/2)")
        return " * ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Inverse of :meth:`text`; also accepts a leading factor without coefficient."""
        if not isinstance(text, str) or not text.strip():
            raise ValueError("empty monomial text")
        coeff = Fraction(1)
        twice: dict[str, int] = {}
        for token in text.split("*"):
            token = token.strip()
            if not token:
                raise ValueError(f"cannot parse monomial {text!r}")
            try:
                coeff *= Fraction(token)
                continue
            except ValueError:
                pass
            m = _FACTOR_RE.match(token)
            if not m:
                raise ValueError(f"cannot parse monomial factor {token!r}")
            name, whole, half = m.groups()
            t = 2 * int(whole) if whole is not None else int(half) if half is not None else 2
            twice[name] = twice.get(name, 0) + t
        if coeff == 0:
            raise ValueError("monomial coefficients are nonzero")
        return cls._from_twice(coeff, twice)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Monomial[{self.text()}]"


ONE = Monomial(1)


def symbol(name: str, exponent: Rational = 1) -> Monomial:
    """The monomial ``name**exponent`` with coefficient one."""
    return Monomial(1, {name: exponent})
