"""Deterministic JSON writing.

Every float is rendered with 17 significant digits so serialized artifacts
(templates, fit reports, recovery summaries) are byte-stable across runs
and reparse to the exact same double.  Fractions are converted to floats on
the way out; insertion order of dicts is preserved.
"""

import json
import math
from fractions import Fraction


def _fmt_scalar(value):
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            raise ValueError("non-finite float in JSON output")
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"unserializable value of type {type(value).__name__}")


def _write(value, out, indent, level):
    pad = " " * (indent * (level + 1))
    closing = " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            if not isinstance(key, str):
                raise TypeError("JSON object keys must be strings")
            out.append(pad + json.dumps(key) + ": ")
            _write(item, out, indent, level + 1)
            out.append(",\n" if i + 1 < len(value) else "\n")
        out.append(closing + "}")
    elif isinstance(value, (list, tuple)):
        if not len(value):
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(value):
            out.append(pad)
            _write(item, out, indent, level + 1)
            out.append(",\n" if i + 1 < len(value) else "\n")
        out.append(closing + "]")
    else:
        out.append(_fmt_scalar(value))


def dumps(obj, indent: int = 2) -> str:
    """Serialize obj (dict/list/str/int/float/bool/None/Fraction)."""
    out: list[str] = []
    _write(obj, out, indent, 0)
    out.append("\n")
    return "".join(out)


def dumps_line(obj) -> str:
    """Single-line form, for JSONL streams."""
    out: list[str] = []
    _write_compact(obj, out)
    return "".join(out)


def _write_compact(value, out):
    if isinstance(value, dict):
        out.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(key) + ": ")
            _write_compact(item, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _write_compact(item, out)
        out.append("]")
    else:
        out.append(_fmt_scalar(value))


def loads(text: str):
    return json.loads(text)
