"""Reading and writing algebras.

JSON: an object with ``size``, ``unit``, ``prod`` and optionally ``rimp``,
``limp``, ``leq`` (boolean matrix), ``zero`` and ``name``. When ``limp`` is
absent at least one of ``rimp`` and ``leq`` must be present.

Text: a header line ``hoop <size> <unit> [zero]`` followed by the ``prod``,
``rimp`` and ``limp`` blocks, each ``size`` rows of whitespace-separated
indices.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import AxiomError, FiniteHoop, validate
from .errors import InputError

JSON_KEYS = ("size", "unit", "prod", "rimp", "limp", "leq", "zero", "name")


def from_dict(doc) -> FiniteHoop:
    if not isinstance(doc, dict):
        raise InputError("algebra JSON must be an object")
    unknown = set(doc) - set(JSON_KEYS)
    if unknown:
        raise InputError(f"unknown keys {sorted(unknown)}", sorted(unknown)[0])
    for key in ("size", "unit", "prod"):
        if key not in doc:
            raise InputError(f"missing required key {key!r}", key)
    size = doc["size"]
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise InputError("size must be a positive integer", "size")
    if "limp" not in doc and "rimp" not in doc and "leq" not in doc:
        raise InputError("need limp, rimp or leq besides prod", "rimp")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError("name must be a string", "name")
    result = validate(doc["size"], doc["unit"], doc["prod"], doc.get("rimp"), doc.get("limp"),
                      doc.get("zero"), doc.get("leq"), name)
    if isinstance(result, list):
        raise AxiomError(result)
    return result


def to_dict(M: FiniteHoop) -> dict:
    doc = {
        "size": M.size,
        "unit": M.unit,
        "prod": [list(r) for r in M.prod],
        "rimp": [list(r) for r in M.rimp],
        "limp": [list(r) for r in M.limp],
    }
    if M.zero is not None:
        doc["zero"] = M.zero
    if M.name is not None:
        doc["name"] = M.name
    return doc


def dumps(M: FiniteHoop) -> str:
    return json.dumps(to_dict(M), separators=(",", ":")) + "\n"


def parse_text(text: str) -> dict:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty file")
    head = lines[0].split()
    if head[0] != "hoop" or len(head) not in (3, 4):
        raise InputError("header must be 'hoop <size> <unit> [zero]'", "header")
    try:
        nums = [int(t) for t in head[1:]]
    except ValueError:
        raise InputError("header values must be integers", "header") from None
    size, unit = nums[0], nums[1]
    if size < 1:
        raise InputError("size must be positive", "size")
    rows = [ln.split() for ln in lines[1:]]
    if len(rows) != 3 * size:
        raise InputError(f"expected {3 * size} table rows, found {len(rows)}", "prod")
    blocks = []
    for b, name in enumerate(("prod", "rimp", "limp")):
        block = []
        for i in range(size):
            row = rows[b * size + i]
            try:
                block.append([int(t) for t in row])
            except ValueError:
                raise InputError(f"non-integer entry in {name} row {i}", name, (i,)) from None
        blocks.append(block)
    doc = {"size": size, "unit": unit, "prod": blocks[0], "rimp": blocks[1], "limp": blocks[2]}
    if len(nums) == 3:
        doc["zero"] = nums[2]
    return doc


def to_text(M: FiniteHoop) -> str:
    head = f"hoop {M.size} {M.unit}" + ("" if M.zero is None else f" {M.zero}")
    out = [head]
    for t in (M.prod, M.rimp, M.limp):
        out.extend(" ".join(map(str, r)) for r in t)
    return "\n".join(out) + "\n"


def loads(text: str) -> FiniteHoop:
    stripped = text.lstrip()
    if stripped.startswith("hoop"):
        return from_dict(parse_text(text))
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_dict(doc)


def load_algebra(path) -> FiniteHoop:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {p}: {exc.strerror}", "path") from None
    M = loads(text)
    if M.name is None:
        M = FiniteHoop(M.size, M.unit, M.prod, M.rimp, M.limp, M.zero, p.stem)
    return M


def save_algebra(M: FiniteHoop, path) -> None:
    p = Path(path)
    if p.suffix == ".txt":
        p.write_text(to_text(M))
    else:
        p.write_text(dumps(M))
