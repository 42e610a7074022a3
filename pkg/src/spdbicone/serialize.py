"""File formats shared by the library and the CLI.

Matrices travel as ``{"n": <int>, "data": [[row], ...]}`` and simplex points
as ``{"p": [...]}``. Floats are written with 17 significant digits, which is
enough for a bit-exact double round trip, so generated files and reports are
byte-identical under a fixed seed.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .domain import SimplexPoint
from .errors import ParseError


def format_float(x: float) -> str:
    """Decimal form with 17 significant digits; rejects non-finite values."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    return f"{x:.17g}"


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, fixed separators, 17-digit floats."""
    pieces: list[str] = []
    _write_json(obj, pieces)
    return "".join(pieces)


def _write_json(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _write_json(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _write_json(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def matrix_to_obj(mat: np.ndarray) -> dict:
    a = np.asarray(mat, dtype=float)
    return {"n": int(a.shape[0]), "data": a.tolist()}


def simplex_to_obj(p: SimplexPoint) -> dict:
    return {"p": list(p.probs)}


def parse_matrix_obj(obj) -> np.ndarray:
    """Raw (unvalidated) matrix from a parsed JSON object."""
    if not isinstance(obj, dict) or "n" not in obj or "data" not in obj:
        raise ParseError('matrix object must have keys "n" and "data"')
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    try:
        data = np.array(obj["data"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix data is not numeric: {exc}") from exc
    if data.shape != (n, n):
        raise ParseError(f'"data" has shape {data.shape}, expected ({n}, {n})')
    return data


def parse_simplex_obj(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "p" not in obj:
        raise ParseError('simplex object must have key "p"')
    try:
        p = np.array(obj["p"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"simplex data is not numeric: {exc}") from exc
    if p.ndim != 1 or p.shape[0] < 1:
        raise ParseError('"p" must be a non-empty list of numbers')
    return p


def load_json(path: str | Path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def load_matrix(path: str | Path) -> np.ndarray:
    return parse_matrix_obj(load_json(path))


def load_simplex(path: str | Path) -> np.ndarray:
    return parse_simplex_obj(load_json(path))


def save_matrix(path: str | Path, mat) -> None:
    """Write a matrix (raw array or any wrapper exposing ``.mat``) to a file."""
    a = np.asarray(getattr(mat, "mat", mat))
    Path(path).write_text(canonical_json(matrix_to_obj(a)) + "\n", encoding="utf-8")


def save_simplex(path: str | Path, p: SimplexPoint) -> None:
    Path(path).write_text(canonical_json(simplex_to_obj(p)) + "\n", encoding="utf-8")
