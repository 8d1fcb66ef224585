"""Batch command-line front end: one JSON job in, one JSON report out.

A job is ``{"schema_version": "1", "command": <name>, "payload": {...}}``
read from ``--job FILE`` or standard input.  Reports echo the SHA-256 of the
raw input bytes and are emitted with sorted keys, so identical jobs produce
byte-identical reports.  Exit status: 0 for success or a passing verdict, 1
for a verified failing verdict (including weight collisions and non-integral
shifts), 2 for malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Callable

from .errors import NonIntegralShift, NotRelevant, SchemaError, TransferError
from .jsonio import (
    decode_assignment,
    decode_character,
    decode_config,
    decode_descriptor,
    decode_factors,
    decode_point,
    decode_rational,
    decode_shape,
    decode_space,
    decode_weight,
    encode_character,
    encode_point,
    encode_sigma,
    encode_weight,
)
from .points import (
    build_transferred_space,
    constant_C,
    diagram_check,
    divisibility_check,
    transfer_point,
)
from .refinements import (
    accessible_transfer_check,
    count_accessible,
    enumerate_refinements,
    is_accessible,
    refinement_count_inequality,
)
from .transfer import (
    archimedean_sigma,
    archimedean_transfer,
    atkin_lehner_pullback,
    refinement_pullback,
    refinement_pullback_normalized,
    verify_transfer_compatibility,
)

SCHEMA_VERSION = "1"


def _payload_keys(payload: Any, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    if not isinstance(payload, dict):
        raise SchemaError("payload: expected an object")
    for key in required:
        if key not in payload:
            raise SchemaError(f"payload: missing key {key!r}")
    for key in payload:
        if key not in required and key not in optional:
            raise SchemaError(f"payload: unknown key {key!r}")
    return payload


def _boolean(obj: Any, where: str) -> bool:
    if not isinstance(obj, bool):
        raise SchemaError(f"{where}: expected a boolean")
    return obj


def _cmd_transfer_weight(payload: dict) -> tuple[dict, int]:
    _payload_keys(payload, ("shape", "alpha", "weight"))
    shape = decode_shape(payload["shape"], "shape")
    alpha = decode_rational(payload["alpha"], "alpha")
    weight = decode_weight(payload["weight"], shape, "weight")
    result = archimedean_transfer(weight, alpha)
    try:
        sigma = archimedean_sigma(weight, alpha)
        realized = True
    except NotRelevant:
        sigma = result.sigma
        realized = False
    body = {
        "weight": encode_weight(result.weight),
        "sigma": encode_sigma(sigma),
        "realized": realized,
    }
    return body, 0


def _cmd_transfer_refinement(payload: dict) -> tuple[dict, int]:
    _payload_keys(payload, ("config", "character"))
    cfg = decode_config(payload["config"])
    chi = decode_character(payload["character"], cfg.source)
    body = {
        "refinement": encode_character(refinement_pullback(chi, cfg)),
        "refinement_normalized": encode_character(refinement_pullback_normalized(chi, cfg)),
        "atkin_lehner": encode_character(atkin_lehner_pullback(chi, cfg)),
    }
    return body, 0


def _cmd_check_hypothesis1(payload: dict) -> tuple[dict, int]:
    _payload_keys(payload, ("config",), ("drop_normalization",))
    cfg = decode_config(payload["config"])
    drop = _boolean(payload.get("drop_normalization", False), "drop_normalization")
    report = verify_transfer_compatibility(cfg, drop_normalization=drop)
    body = {
        "verdict": report.verdict,
        "checks": [
            {"name": check.name, "passed": check.passed, "residuals": list(check.residuals)}
            for check in report.checks
        ],
    }
    return body, 0 if report.passed else 1


def _cmd_enumerate_refinements(payload: dict) -> tuple[dict, int]:
    _payload_keys(payload, ("descriptor",))
    desc = decode_descriptor(payload["descriptor"])
    refinements = enumerate_refinements(desc)
    flags = [is_accessible(desc, refinement) for refinement in refinements]
    body = {
        "refinements": [encode_character(refinement) for refinement in refinements],
        "accessible": flags,
        "counts": {
            "total": len(refinements),
            "accessible": sum(flags),
            "formula": count_accessible(desc),
        },
    }
    return body, 0


def _cmd_check_accessible_transfer(payload: dict) -> tuple[dict, int]:
    _payload_keys(payload, ("config", "descriptor"))
    cfg = decode_config(payload["config"])
    desc = decode_descriptor(payload["descriptor"])
    transfer_ok = accessible_transfer_check(desc, cfg)
    count_source, count_target, count_ok = refinement_count_inequality(desc, cfg)
    passed = transfer_ok and count_ok
    body = {
        "verdict": "pass" if passed else "fail",
        "accessible_transfer": transfer_ok,
        "count_source": count_source,
        "count_target": count_target,
        "count_inequality": count_ok,
    }
    return body, 0 if passed else 1


def _cmd_transfer_point(payload: dict) -> tuple[dict, int]:
    _payload_keys(payload, ("config", "point"))
    cfg = decode_config(payload["config"])
    point = decode_point(payload["point"], cfg.source)
    return {"point": encode_point(transfer_point(point, cfg))}, 0


def _cmd_check_diagram(payload: dict) -> tuple[dict, int]:
    _payload_keys(payload, ("config", "source_points", "target_points"))
    cfg = decode_config(payload["config"])
    if not isinstance(payload["source_points"], list) or not isinstance(
        payload["target_points"], list
    ):
        raise SchemaError("source_points and target_points must be arrays")
    source = [
        decode_point(obj, cfg.source, f"source_points[{i}]")
        for i, obj in enumerate(payload["source_points"])
    ]
    target = [
        decode_point(obj, cfg.target, f"target_points[{i}]")
        for i, obj in enumerate(payload["target_points"])
    ]
    report = diagram_check(source, target, cfg)
    body = {
        "verdict": "pass" if report.ok else "fail",
        "matched": report.matched,
        "unmatched": report.unmatched,
        "results": list(report.results),
    }
    return body, 0 if report.ok else 1


def _cmd_check_interpolation(payload: dict) -> tuple[dict, int]:
    _payload_keys(
        payload,
        ("config", "source_space", "target_space", "generators", "assignments"),
        ("constant", "packet"),
    )
    cfg = decode_config(payload["config"])
    source_space = decode_space(payload["source_space"], cfg.source, "source_space")
    target_space = decode_space(payload["target_space"], cfg.target, "target_space")
    if ("constant" in payload) == ("packet" in payload):
        raise SchemaError("payload: provide exactly one of 'constant' and 'packet'")
    if "constant" in payload:
        constant = payload["constant"]
        if isinstance(constant, bool) or not isinstance(constant, int) or constant < 1:
            raise SchemaError("constant: expected a positive integer")
    else:
        packet = payload["packet"]
        if not isinstance(packet, dict):
            raise SchemaError("packet: expected an object")
        for key in ("dim_source", "dims_target"):
            if key not in packet:
                raise SchemaError(f"packet: missing key {key!r}")
        for key in packet:
            if key not in ("dim_source", "dims_target"):
                raise SchemaError(f"packet: unknown key {key!r}")
        if not isinstance(packet["dims_target"], list):
            raise SchemaError("packet.dims_target: expected an array")
        constant = constant_C(packet["dim_source"], packet["dims_target"])
    if not isinstance(payload["generators"], list) or not payload["generators"]:
        raise SchemaError("generators: expected a non-empty array")
    generators = [
        decode_factors(obj, f"generators[{i}]")
        for i, obj in enumerate(payload["generators"])
    ]
    if not isinstance(payload["assignments"], list) or not payload["assignments"]:
        raise SchemaError("assignments: expected a non-empty array")
    assignments = [
        decode_assignment(obj, f"assignments[{i}]")
        for i, obj in enumerate(payload["assignments"])
    ]
    transferred = build_transferred_space(source_space, cfg)
    results = [
        [
            divisibility_check(transferred, target_space, constant, generator, assignment)
            for assignment in assignments
        ]
        for generator in generators
    ]
    passed = all(all(row) for row in results)
    body = {
        "verdict": "pass" if passed else "fail",
        "constant": constant,
        "results": results,
    }
    return body, 0 if passed else 1


_HANDLERS: dict[str, Callable[[dict], tuple[dict, int]]] = {
    "transfer-weight": _cmd_transfer_weight,
    "transfer-refinement": _cmd_transfer_refinement,
    "check-hypothesis1": _cmd_check_hypothesis1,
    "enumerate-refinements": _cmd_enumerate_refinements,
    "check-accessible-transfer": _cmd_check_accessible_transfer,
    "transfer-point": _cmd_transfer_point,
    "check-diagram": _cmd_check_diagram,
    "check-interpolation": _cmd_check_interpolation,
}


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        text = json.dumps(report, sort_keys=True, indent=2)
    else:
        text = json.dumps(report, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _validate_job(job: Any) -> tuple[str, dict]:
    if not isinstance(job, dict):
        raise SchemaError("job: expected a JSON object")
    for key in job:
        if key not in ("schema_version", "command", "payload"):
            raise SchemaError(f"job: unknown key {key!r}")
    version = job.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"job: unsupported schema_version {version!r}")
    command = job.get("command")
    if not isinstance(command, str) or command not in _HANDLERS:
        known = ", ".join(sorted(_HANDLERS))
        raise SchemaError(f"job: command must be one of {known}")
    payload = job.get("payload")
    if not isinstance(payload, dict):
        raise SchemaError("job: missing payload object")
    return command, payload


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="eigentransfer",
        description="Run one JSON job against the transfer library and print a JSON report.",
    )
    parser.add_argument("--job", metavar="FILE", help="job file (default: standard input)")
    parser.add_argument("--pretty", action="store_true", help="indent the report")
    args = parser.parse_args(argv)

    if args.job:
        try:
            raw = Path(args.job).read_bytes()
        except OSError as err:
            _emit(
                {
                    "schema_version": SCHEMA_VERSION,
                    "error": {"type": "SchemaError", "message": f"cannot read job file: {err}"},
                },
                args.pretty,
            )
            return 2
    else:
        raw = sys.stdin.buffer.read()

    report: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "input_sha256": hashlib.sha256(raw).hexdigest(),
    }
    try:
        job = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as err:
        report["error"] = {"type": "SchemaError", "message": f"invalid JSON: {err}"}
        _emit(report, args.pretty)
        return 2

    try:
        command, payload = _validate_job(job)
        report["command"] = command
        body, code = _HANDLERS[command](payload)
        report.update(body)
        _emit(report, args.pretty)
        return code
    except SchemaError as err:
        report["error"] = {"type": "SchemaError", "message": str(err)}
        _emit(report, args.pretty)
        return 2
    except (NotRelevant, NonIntegralShift) as err:
        report["error"] = {"type": type(err).__name__, "message": str(err)}
        _emit(report, args.pretty)
        return 1
    except TransferError as err:
        report["error"] = {"type": type(err).__name__, "message": str(err)}
        _emit(report, args.pretty)
        return 2
    except ValueError as err:
        report["error"] = {"type": "SchemaError", "message": str(err)}
        _emit(report, args.pretty)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
