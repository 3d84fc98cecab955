"""JSON file format for codes.

Layout (keys always in this order)::

    {
      "format_version": 1,
      "field": {"p": 3, "m": 4, "modulus": [2, 1, 0, 0, 1], "generator": 3},
      "k": 15,
      "extended": false,
      "points": [...],
      "multipliers": [...],
      "provenance": {"theorem": 1, "params": {"r": 9, "m": 5, "t": 6}, "lambda": 1}
    }

``provenance`` may be ``null``.  All values are integers, booleans or null;
one top-level key per line keeps the files diffable and byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .gf import FieldContext, FieldError, field_create
from .grs import CodeSpec

FORMAT_VERSION = 1
_KEYS = ("format_version", "field", "k", "extended", "points", "multipliers", "provenance")


class FormatError(ValueError):
    """The file is not a valid code file."""


@dataclass(frozen=True)
class CodeFile:
    code: CodeSpec
    generator: int
    provenance: Optional[dict] = None

    @classmethod
    def from_code(cls, ctx: FieldContext, code: CodeSpec, provenance: Optional[dict] = None):
        return cls(code, ctx.generator, provenance)

    def context(self) -> FieldContext:
        f = self.code.field
        return field_create(f.p, f.m, f.modulus)


def dumps_stable(obj: dict) -> str:
    """One key per line, compact values."""
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(', ', ': '))}" for k, v in obj.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def serialize(cf: CodeFile) -> str:
    c = cf.code
    obj = {
        "format_version": FORMAT_VERSION,
        "field": {
            "p": c.field.p,
            "m": c.field.m,
            "modulus": list(c.field.modulus),
            "generator": cf.generator,
        },
        "k": c.k,
        "extended": c.extended,
        "points": list(c.points),
        "multipliers": list(c.multipliers),
        "provenance": cf.provenance,
    }
    return dumps_stable(obj)


def _int(obj, key):
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"{key!r} must be an integer")
    return v


def _int_list(obj, key):
    v = obj.get(key)
    if not isinstance(v, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in v):
        raise FormatError(f"{key!r} must be an array of integers")
    return v


def parse(text: str) -> CodeFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or tuple(obj) != _KEYS:
        raise FormatError(f"expected keys {list(_KEYS)} in that order")
    if obj["format_version"] != FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {obj['format_version']!r}")
    fobj = obj["field"]
    if not isinstance(fobj, dict):
        raise FormatError("'field' must be an object")
    p, m = _int(fobj, "p"), _int(fobj, "m")
    modulus = _int_list(fobj, "modulus")
    generator = _int(fobj, "generator")
    try:
        ctx = field_create(p, m, modulus)
    except FieldError as exc:
        raise FormatError(f"bad field: {exc}") from exc
    if generator != ctx.generator:
        raise FormatError(f"generator {generator} is not the canonical generator {ctx.generator}")
    if not isinstance(obj["extended"], bool):
        raise FormatError("'extended' must be a boolean")
    prov = obj["provenance"]
    if prov is not None and not isinstance(prov, dict):
        raise FormatError("'provenance' must be an object or null")
    try:
        code = CodeSpec(
            ctx.spec,
            _int(obj, "k"),
            tuple(_int_list(obj, "points")),
            tuple(_int_list(obj, "multipliers")),
            obj["extended"],
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return CodeFile(code, generator, prov)


def read(path) -> CodeFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def write(path, cf: CodeFile) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(cf))
