"""Window files: JSON ``{"offset": int, "coeffs": [[re, im], ...]}``."""

from __future__ import annotations

import json
import math
from pathlib import Path

from .sequences import FiniteSequence


class WindowFormatError(ValueError):
    pass


def window_to_dict(g: FiniteSequence) -> dict:
    g = g.trimmed()
    return {"offset": g.offset, "coeffs": [[float(c.real), float(c.imag)] for c in g.coeffs]}


def window_from_dict(d) -> FiniteSequence:
    if not isinstance(d, dict):
        raise WindowFormatError("top level must be an object with 'offset' and 'coeffs'")
    missing = {"offset", "coeffs"} - d.keys()
    if missing:
        raise WindowFormatError(f"missing field(s): {', '.join(sorted(missing))}")
    off = d["offset"]
    if isinstance(off, bool) or not isinstance(off, int):
        raise WindowFormatError(f"'offset' must be an integer, got {off!r}")
    coeffs = d["coeffs"]
    if not isinstance(coeffs, list):
        raise WindowFormatError("'coeffs' must be a list of [re, im] pairs")
    vals = []
    for k, pair in enumerate(coeffs):
        if (not isinstance(pair, list) or len(pair) != 2
                or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in pair)):
            raise WindowFormatError(f"coeffs[{k}] must be a pair of numbers, got {pair!r}")
        if not all(math.isfinite(x) for x in pair):
            raise WindowFormatError(f"coeffs[{k}] is not finite: {pair!r}")
        vals.append(complex(pair[0], pair[1]))
    return FiniteSequence(off, vals)


def dumps_window(g: FiniteSequence) -> str:
    return json.dumps(window_to_dict(g))


def loads_window(text: str) -> FiniteSequence:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise WindowFormatError(f"line {e.lineno}, column {e.colno}: {e.msg}") from e
    return window_from_dict(d)


def write_window(path, g: FiniteSequence) -> None:
    Path(path).write_text(dumps_window(g) + "\n")


def read_window(path) -> FiniteSequence:
    return loads_window(Path(path).read_text())
