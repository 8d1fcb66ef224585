"""JSON codecs for the batch command-line interface.

Schema conventions (version "1"): shapes are arrays of positive block sizes;
permutations are one-line and 1-based; rationals are integers or strings such
as ``"1/2"`` (floats are rejected to keep everything exact); characters are
flat arrays of canonical monomial strings; weights and Satake data are arrays
grouped by block.  Every decoder raises ``SchemaError`` with the offending
location on malformed input; unknown keys are rejected.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import SchemaError
from .monomial import Monomial, SymbolValue, valid_symbol
from .points import (
    AtkinLehnerFactor,
    ClassicalPoint,
    HeckeFactor,
    MockFormSpace,
    SphericalFactor,
)
from .refinements import LocalRepDescriptor, Segment
from .tori import AlgebraicWeight, GroupShape, UnramifiedCharacter
from .transfer import TransferConfig

__all__ = [
    "decode_config",
    "decode_shape",
    "decode_rational",
    "decode_weight",
    "encode_weight",
    "decode_character",
    "encode_character",
    "decode_assignment",
    "decode_descriptor",
    "decode_point",
    "encode_point",
    "decode_space",
    "decode_factors",
    "encode_sigma",
]


def _object(obj: Any, where: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    return obj


def _array(obj: Any, where: str) -> list:
    if not isinstance(obj, list):
        raise SchemaError(f"{where}: expected an array")
    return obj


def _string(obj: Any, where: str) -> str:
    if not isinstance(obj, str):
        raise SchemaError(f"{where}: expected a string")
    return obj


def _integer(obj: Any, where: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(f"{where}: expected an integer")
    return obj


def _check_keys(obj: dict, required: tuple[str, ...], optional: tuple[str, ...], where: str) -> None:
    for key in required:
        if key not in obj:
            raise SchemaError(f"{where}: missing key {key!r}")
    for key in obj:
        if key not in required and key not in optional:
            raise SchemaError(f"{where}: unknown key {key!r}")


def decode_rational(obj: Any, where: str) -> Fraction:
    if isinstance(obj, bool):
        raise SchemaError(f"{where}: expected an integer or a rational string")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as err:
            raise SchemaError(f"{where}: not a rational: {obj!r}") from err
    raise SchemaError(
        f"{where}: expected an integer or a rational string (floats are not accepted)"
    )


def decode_shape(obj: Any, where: str = "blocks") -> GroupShape:
    blocks = [_integer(b, f"{where}[{i}]") for i, b in enumerate(_array(obj, where))]
    try:
        return GroupShape(tuple(blocks))
    except ValueError as err:
        raise SchemaError(f"{where}: {err}") from err


def _decode_sigma(obj: Any, n: int, where: str) -> tuple[int, ...]:
    entries = [_integer(s, f"{where}[{i}]") for i, s in enumerate(_array(obj, where))]
    if len(entries) != n:
        raise SchemaError(f"{where}: expected {n} entries, got {len(entries)}")
    if any(s < 1 or s > n for s in entries):
        raise SchemaError(f"{where}: entries must lie in 1..{n} (one-based)")
    return tuple(s - 1 for s in entries)


def encode_sigma(sigma: tuple[int, ...]) -> list[int]:
    return [p + 1 for p in sigma]


def decode_config(obj: Any, where: str = "config") -> TransferConfig:
    cfg = _object(obj, where)
    _check_keys(
        cfg,
        ("blocks", "sigma", "alpha"),
        ("mu", "p_places", "tracked"),
        where,
    )
    shape = decode_shape(cfg["blocks"], f"{where}.blocks")
    sigma = _decode_sigma(cfg["sigma"], shape.n, f"{where}.sigma")
    alpha = decode_rational(cfg["alpha"], f"{where}.alpha")
    mu = _string(cfg.get("mu", "M"), f"{where}.mu")
    p_places = tuple(
        _string(tag, f"{where}.p_places[{i}]")
        for i, tag in enumerate(_array(cfg.get("p_places", ["p"]), f"{where}.p_places"))
    )
    tracked = tuple(
        _string(tag, f"{where}.tracked[{i}]")
        for i, tag in enumerate(_array(cfg.get("tracked", []), f"{where}.tracked"))
    )
    try:
        return TransferConfig(
            source=shape,
            sigma=sigma,
            alpha=alpha,
            mu=mu,
            p_places=p_places,
            tracked=tracked,
        )
    except ValueError as err:
        raise SchemaError(f"{where}: {err}") from err


def decode_weight(obj: Any, shape: GroupShape, where: str = "weight") -> AlgebraicWeight:
    groups = _array(obj, where)
    if len(groups) != shape.r:
        raise SchemaError(f"{where}: expected {shape.r} blocks, got {len(groups)}")
    exps: list[int] = []
    for i, group in enumerate(groups):
        entries = _array(group, f"{where}[{i}]")
        if len(entries) != shape.blocks[i]:
            raise SchemaError(
                f"{where}[{i}]: expected {shape.blocks[i]} entries, got {len(entries)}"
            )
        exps.extend(_integer(e, f"{where}[{i}][{j}]") for j, e in enumerate(entries))
    return AlgebraicWeight(shape, tuple(exps))


def encode_weight(weight: AlgebraicWeight) -> list[list[int]]:
    shape = weight.shape
    return [[weight.exps[p] for p in shape.block_range(i)] for i in range(shape.r)]


def _decode_monomial(obj: Any, where: str) -> Monomial:
    text = _string(obj, where)
    try:
        return Monomial.parse(text)
    except ValueError as err:
        raise SchemaError(f"{where}: {err}") from err


def decode_character(obj: Any, shape: GroupShape, where: str = "character") -> UnramifiedCharacter:
    entries = _array(obj, where)
    if len(entries) != shape.n:
        raise SchemaError(f"{where}: expected {shape.n} values, got {len(entries)}")
    values = tuple(_decode_monomial(v, f"{where}[{p}]") for p, v in enumerate(entries))
    return UnramifiedCharacter(shape, values)


def encode_character(chi: UnramifiedCharacter) -> list[str]:
    return [value.text() for value in chi.values]


def decode_assignment(obj: Any, where: str = "assignment") -> dict[str, SymbolValue]:
    table = _object(obj, where)
    out: dict[str, SymbolValue] = {}
    for name, raw in table.items():
        if not valid_symbol(name):
            raise SchemaError(f"{where}: invalid symbol name {name!r}")
        entry = _object(raw, f"{where}.{name}")
        _check_keys(entry, ("value",), ("sqrt",), f"{where}.{name}")
        value = decode_rational(entry["value"], f"{where}.{name}.value")
        sqrt = (
            decode_rational(entry["sqrt"], f"{where}.{name}.sqrt")
            if "sqrt" in entry
            else None
        )
        try:
            out[name] = SymbolValue(value, sqrt)
        except ValueError as err:
            raise SchemaError(f"{where}.{name}: {err}") from err
    return out


def decode_descriptor(obj: Any, where: str = "descriptor") -> LocalRepDescriptor:
    desc = _object(obj, where)
    _check_keys(desc, ("blocks",), (), where)
    blocks = _array(desc["blocks"], f"{where}.blocks")
    segments: list[tuple[Segment, ...]] = []
    sizes: list[int] = []
    for i, block in enumerate(blocks):
        segs = []
        for j, seg in enumerate(_array(block, f"{where}.blocks[{i}]")):
            entry = _object(seg, f"{where}.blocks[{i}][{j}]")
            _check_keys(entry, ("gamma", "d"), (), f"{where}.blocks[{i}][{j}]")
            gamma = _decode_monomial(entry["gamma"], f"{where}.blocks[{i}][{j}].gamma")
            d = _integer(entry["d"], f"{where}.blocks[{i}][{j}].d")
            try:
                segs.append(Segment(gamma, d))
            except ValueError as err:
                raise SchemaError(f"{where}.blocks[{i}][{j}]: {err}") from err
        segments.append(tuple(segs))
        sizes.append(sum(seg.d for seg in segs))
    try:
        shape = GroupShape(tuple(sizes))
        return LocalRepDescriptor(shape, tuple(segments))
    except ValueError as err:
        raise SchemaError(f"{where}: {err}") from err


def decode_point(obj: Any, shape: GroupShape, where: str = "point") -> ClassicalPoint:
    entry = _object(obj, where)
    _check_keys(entry, ("weight",), ("up", "satake"), where)
    weight = decode_weight(entry["weight"], shape, f"{where}.weight")
    up = {}
    for place, values in _object(entry.get("up", {}), f"{where}.up").items():
        up[place] = decode_character(values, shape, f"{where}.up.{place}")
    satake = {}
    for place, groups_obj in _object(entry.get("satake", {}), f"{where}.satake").items():
        groups = _array(groups_obj, f"{where}.satake.{place}")
        if len(groups) != shape.r:
            raise SchemaError(
                f"{where}.satake.{place}: expected {shape.r} blocks, got {len(groups)}"
            )
        blocks = []
        for i, group in enumerate(groups):
            values = _array(group, f"{where}.satake.{place}[{i}]")
            if len(values) != shape.blocks[i]:
                raise SchemaError(
                    f"{where}.satake.{place}[{i}]: expected {shape.blocks[i]} values, "
                    f"got {len(values)}"
                )
            blocks.append(
                tuple(
                    _decode_monomial(v, f"{where}.satake.{place}[{i}][{j}]")
                    for j, v in enumerate(values)
                )
            )
        satake[place] = tuple(blocks)
    try:
        return ClassicalPoint.build(weight, up, satake)
    except ValueError as err:
        raise SchemaError(f"{where}: {err}") from err


def encode_point(point: ClassicalPoint) -> dict:
    return {
        "weight": encode_weight(point.weight),
        "up": {place: encode_character(chi) for place, chi in point.up},
        "satake": {
            place: [[value.text() for value in block] for block in blocks]
            for place, blocks in point.satake
        },
    }


def decode_space(obj: Any, shape: GroupShape, where: str = "space") -> MockFormSpace:
    entry = _object(obj, where)
    _check_keys(entry, ("weight", "entries"), (), where)
    weight = decode_weight(entry["weight"], shape, f"{where}.weight")
    entries = []
    for i, item in enumerate(_array(entry["entries"], f"{where}.entries")):
        item_obj = _object(item, f"{where}.entries[{i}]")
        _check_keys(item_obj, ("point", "mult"), (), f"{where}.entries[{i}]")
        point = decode_point(item_obj["point"], shape, f"{where}.entries[{i}].point")
        mult = _integer(item_obj["mult"], f"{where}.entries[{i}].mult")
        entries.append((point, mult))
    try:
        return MockFormSpace(weight, tuple(entries))
    except ValueError as err:
        raise SchemaError(f"{where}: {err}") from err


def decode_factors(obj: Any, where: str = "generator") -> tuple[HeckeFactor, ...]:
    factors: list[HeckeFactor] = []
    entries = _array(obj, where)
    if not entries:
        raise SchemaError(f"{where}: a generator product needs at least one factor")
    for i, item in enumerate(entries):
        entry = _object(item, f"{where}[{i}]")
        kind = _string(entry.get("type"), f"{where}[{i}].type") if "type" in entry else None
        if kind is None:
            raise SchemaError(f"{where}[{i}]: missing key 'type'")
        if kind == "atkin-lehner":
            _check_keys(entry, ("type", "place", "cochar"), (), f"{where}[{i}]")
            place = _string(entry["place"], f"{where}[{i}].place")
            cochar = tuple(
                _integer(e, f"{where}[{i}].cochar[{j}]")
                for j, e in enumerate(_array(entry["cochar"], f"{where}[{i}].cochar"))
            )
            factors.append(AtkinLehnerFactor(place, cochar))
        elif kind == "spherical":
            _check_keys(entry, ("type", "place", "degree"), (), f"{where}[{i}]")
            place = _string(entry["place"], f"{where}[{i}].place")
            degree = _integer(entry["degree"], f"{where}[{i}].degree")
            try:
                factors.append(SphericalFactor(place, degree))
            except ValueError as err:
                raise SchemaError(f"{where}[{i}]: {err}") from err
        else:
            raise SchemaError(
                f"{where}[{i}].type: expected 'atkin-lehner' or 'spherical', got {kind!r}"
            )
    return tuple(factors)
