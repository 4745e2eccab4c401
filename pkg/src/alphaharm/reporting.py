"""Deterministic CSV/JSON emission shared by solver grids and scan reports."""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

__all__ = ["canonical_json", "fmt_float", "rows_to_csv"]


def fmt_float(x: float) -> str:
    """Round-trip-safe decimal notation: 17 significant digits, '.' separator."""
    if isinstance(x, bool):
        return "1" if x else "0"
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.17g}"


def _cell(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int,)) and not isinstance(v, bool):
        return str(v)
    if isinstance(v, complex):
        raise TypeError("complex values must be split into _re/_im columns")
    return fmt_float(v)


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Plain comma-separated table with a mandatory header row."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _jsonable(obj):
    import numpy as np
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    return obj


def canonical_json(obj) -> str:
    """Key-sorted, whitespace-free JSON; byte-stable for identical inputs."""
    return json.dumps(_jsonable(obj), sort_keys=True, separators=(",", ":"),
                      allow_nan=True)
