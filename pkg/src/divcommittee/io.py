"""Instance files: JSON documents checked against a schema, then validated.

Floats are parsed as :class:`decimal.Decimal` so separable weights scale to
integers without rounding.
"""
from __future__ import annotations

import json
from decimal import Decimal
from pathlib import Path

import jsonschema

from .model import Instance, InstanceError, instance_to_raw, validate_instance

_NAMES = {"type": "array", "items": {"type": "string"}}

INSTANCE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["candidates", "k", "objective"],
    "properties": {
        "candidates": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["name"],
                "properties": {"name": {"type": "string"}, "labels": _NAMES},
            },
        },
        "labels": _NAMES,
        "layers": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["labels"],
                "properties": {"labels": _NAMES, "kind": {"enum": ["laminar", "layered"]}},
            },
        },
        "constraints": {
            "type": "object",
            "additionalProperties": {
                "oneOf": [
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["allowed"],
                        "properties": {"allowed": {"type": "array", "items": {"type": "integer"}}},
                    },
                    {
                        "type": "object",
                        "additionalProperties": False,
                        "minProperties": 1,
                        "properties": {"min": {"type": "integer"}, "max": {"type": "integer"}},
                    },
                ]
            },
        },
        "k": {"type": "integer"},
        "objective": {
            "oneOf": [
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["type", "weights"],
                    "properties": {
                        "type": {"const": "separable"},
                        "weights": {
                            "type": "object",
                            "additionalProperties": {"type": ["number", "string"]},
                        },
                        "scale": {"type": "integer"},
                    },
                },
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["type", "profile"],
                    "properties": {
                        "type": {"enum": ["cc", "k-borda"]},
                        "profile": {"type": "array", "items": _NAMES},
                    },
                },
            ]
        },
    },
}


def _where(path) -> str:
    out = "document"
    for part in path:
        out += f"[{part}]" if isinstance(part, int) else f".{part}"
    return out


def parse_instance(text: str, source: str = "<string>") -> Instance:
    try:
        raw = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        jsonschema.validate(raw, INSTANCE_SCHEMA)
    except jsonschema.ValidationError as exc:
        err = jsonschema.exceptions.best_match([exc])
        raise InstanceError(f"{source}: {_where(err.absolute_path)}: {err.message}") from None
    try:
        return validate_instance(raw)
    except InstanceError as exc:
        raise InstanceError(f"{source}: {exc}") from None


def load_instance(path) -> Instance:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InstanceError(f"{path}: cannot read file ({exc.strerror})") from None
    return parse_instance(text, str(path))


def dump_instance(instance: Instance) -> str:
    return json.dumps(instance_to_raw(instance), indent=2) + "\n"


def save_instance(instance: Instance, path) -> None:
    Path(path).write_text(dump_instance(instance))
