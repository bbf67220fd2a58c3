"""The JSON file format for Lie triple systems.

::

    {"name": "simple2",
     "field": {"kind": "Q"},                # or {"kind": "GF", "p": 5}
     "dim": 2,
     "brackets": [{"i": 0, "j": 1, "k": 0, "value": ["-1", "0"]}, ...]}

Only triples with ``i < j`` are listed; unlisted triples are zero.  Scalars
are strings ``"a"`` or ``"a/b"``.  Output is canonical (sorted keys, sorted
bracket entries, nonzero entries only) so emit -> parse -> emit is stable.
"""

from __future__ import annotations

import json
from pathlib import Path

from .linalg import FieldSpec
from .lts import LieTripleSystem


class LTSFormatError(ValueError):
    """The document does not follow the LTS schema."""


def to_json(T: LieTripleSystem) -> dict:
    f = T.field
    return {
        "name": T.name,
        "field": f.to_json(),
        "dim": T.dim,
        "brackets": [
            {"i": i, "j": j, "k": k, "value": [f.format(x) for x in v]}
            for (i, j, k), v in sorted(T.brackets().items())
        ],
    }


def dumps(T: LieTripleSystem) -> str:
    return json.dumps(to_json(T), indent=2, sort_keys=True) + "\n"


def _int(obj, key: str, where: str) -> int:
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise LTSFormatError(f"{where}: {key!r} must be an integer")
    return v


def from_json(obj, allow_small_char: bool = False) -> LieTripleSystem:
    if not isinstance(obj, dict):
        raise LTSFormatError("top level must be an object")
    missing = {"field", "dim", "brackets"} - obj.keys()
    if missing:
        raise LTSFormatError(f"missing keys: {sorted(missing)}")
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise LTSFormatError("'name' must be a string")
    if not isinstance(obj["field"], dict):
        raise LTSFormatError("'field' must be an object")
    try:
        field = FieldSpec.from_json(obj["field"], allow_small_char)
    except (ValueError, KeyError, TypeError) as exc:
        raise LTSFormatError(f"bad field: {exc}") from exc
    dim = _int(obj, "dim", "top level")
    if dim < 0:
        raise LTSFormatError("'dim' must be non-negative")
    if not isinstance(obj["brackets"], list):
        raise LTSFormatError("'brackets' must be a list")
    brackets = {}
    for n, entry in enumerate(obj["brackets"]):
        where = f"brackets[{n}]"
        if not isinstance(entry, dict):
            raise LTSFormatError(f"{where} must be an object")
        i, j, k = (_int(entry, key, where) for key in "ijk")
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise LTSFormatError(f"{where}: index out of range")
        if i >= j:
            raise LTSFormatError(f"{where}: need i < j, got i={i}, j={j}")
        if (i, j, k) in brackets:
            raise LTSFormatError(f"{where}: duplicate triple {(i, j, k)}")
        value = entry.get("value")
        if not isinstance(value, list) or len(value) != dim:
            raise LTSFormatError(f"{where}: 'value' must be a list of {dim} scalars")
        try:
            brackets[i, j, k] = tuple(field.parse(s) if isinstance(s, str) else field(_exact(s))
                                      for s in value)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise LTSFormatError(f"{where}: {exc}") from exc
    return LieTripleSystem(field, dim, brackets, name)


def _exact(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"scalar {x!r} is not an exact literal")
    return x


def loads(text: str, allow_small_char: bool = False) -> LieTripleSystem:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LTSFormatError(f"invalid JSON: {exc}") from exc
    return from_json(obj, allow_small_char)


def load(path, allow_small_char: bool = False) -> LieTripleSystem:
    return loads(Path(path).read_text(encoding="utf-8"), allow_small_char)


def dump(T: LieTripleSystem, path) -> None:
    Path(path).write_text(dumps(T), encoding="utf-8")
