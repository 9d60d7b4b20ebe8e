"""Model files and deterministic JSON reports."""

from __future__ import annotations

import json
from pathlib import Path

from . import catalog
from .errors import ParseError
from .toric import GLSMModel, build_from_charges

SCHEMA_VERSION = "1"
MAX_SAFE_INT = 2**53 - 1

_FIELDS = {"name", "coordinate_charges", "superpotential_degrees", "rays", "labels"}


def _int(value, field: str) -> int:
    if isinstance(value, bool):
        raise ParseError(f"expected an integer, got {value!r}", field=field)
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.lstrip("-").isdigit():
        return int(value)
    raise ParseError(f"expected an integer, got {value!r}", field=field)


def _int_rows(data, field: str, required=True) -> list[tuple[int, ...]]:
    if data is None:
        if required:
            raise ParseError("missing field", field=field)
        return []
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError("expected a list of integer rows", field=field)
    return [tuple(_int(x, f"{field}[{i}]") for x in r) for i, r in enumerate(data)]


def model_from_dict(data: dict) -> GLSMModel:
    if not isinstance(data, dict):
        raise ParseError("model must be a JSON object")
    unknown = set(data) - _FIELDS
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", field=sorted(unknown)[0])
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ParseError("expected a string", field="name")
    weights = _int_rows(data.get("coordinate_charges"), "coordinate_charges")
    degrees = _int_rows(data.get("superpotential_degrees"), "superpotential_degrees", required=False)
    rays = _int_rows(data.get("rays"), "rays", required=False) or None
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise ParseError("expected a list of strings", field="labels")
        if len(labels) != len(weights) + len(degrees) or len(set(labels)) != len(labels):
            raise ParseError("need one distinct label per coordinate", field="labels")
    return build_from_charges(weights, degrees, labels, label=name, base_rays=rays)


def model_to_dict(model: GLSMModel) -> dict:
    out = {
        "name": model.label,
        "coordinate_charges": [list(w) for w in model.weights],
        "superpotential_degrees": [list(d) for d in model.degrees],
        "labels": list(model.names),
    }
    if model.base_rays is not None:
        out["rays"] = [list(r) for r in model.base_rays]
    return out


def loads_model(text: str) -> GLSMModel:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno) from None
    return model_from_dict(data)


def load_model(source: str | Path) -> GLSMModel:
    """Load ``catalog:NAME`` or a JSON model file."""
    text = str(source)
    if text.startswith("catalog:"):
        return catalog.model(text[len("catalog:"):])
    path = Path(source)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads_model(content)


def _encode(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > MAX_SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [_encode(v) for v in sorted(obj)]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_report(report: dict) -> str:
    """Canonical JSON: sorted keys, fixed separators, large integers as strings."""
    return json.dumps(_encode(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
