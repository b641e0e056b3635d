"""
JSON encoding of numerical result records.

Values that plain ``json`` rejects or mangles get a fixed representation:

- complex numbers (``moment_R`` at complex h) become ``{"re": x, "im": y}``;
- non-finite floats become the strings ``"nan"``, ``"inf"`` and ``"-inf"``
  instead of the invalid bare tokens ``NaN`` / ``Infinity``;
- numpy scalars and arrays, dataclasses, enums and paths become their plain
  Python equivalents.

``load_json(..., complex_values=True)`` turns ``{"re", "im"}`` objects back
into ``complex``.
"""

import dataclasses
import json
import logging
import math
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

logger = logging.getLogger(__name__)

_NON_FINITE = {"nan": math.nan, "inf": math.inf, "-inf": -math.inf}


def _float_token(x: float) -> float | str:
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def _plain(obj: Any) -> Any:
    """Recursively replace floats and complex values by their JSON form."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (float, np.floating)):
        return _float_token(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": _float_token(float(obj.real)), "im": _float_token(float(obj.imag))}
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return _plain(dataclasses.asdict(obj))
    return obj


class EnhancedJSONEncoder(json.JSONEncoder):
    """JSON encoder for result records; see the module docstring for the mapping."""

    def default(self, obj: Any) -> Any:
        """Convert leaf objects the base encoder does not know."""
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Path):
            return str(obj)
        return super().default(obj)

    def iterencode(self, o: Any, _one_shot: bool = False) -> Any:
        """Encode after normalizing floats, complex values and containers."""
        return super().iterencode(_plain(o), _one_shot)


def dumps_json(data: Any, indent: int | None = 2, sort_keys: bool = True) -> str:
    """
    Serialize with :class:`EnhancedJSONEncoder`.

    ``indent=None`` gives a single line, as used for stderr error records.
    """
    return json.dumps(
        data,
        cls=EnhancedJSONEncoder,
        indent=indent,
        sort_keys=sort_keys,
        ensure_ascii=False,
        allow_nan=False,
    )


def save_json(
    data: dict[str, Any] | list[Any],
    path: str | Path,
    indent: int = 2,
    sort_keys: bool = True,
) -> Path:
    """
    Write a record to ``path``, creating parent directories.

    Parameters
    ----------
    data : dict or list
        Record to serialize.
    path : str or Path
        Target file.
    indent : int, default 2
        Indentation.
    sort_keys : bool, default True
        Sort object keys.

    Returns
    -------
    Path
        Absolute path written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_json(data, indent=indent, sort_keys=sort_keys), encoding="utf-8")

    logger.info("Saved JSON record to %s (%d top-level keys)", path, len(data))
    return path.absolute()


def _number(v: Any) -> Any:
    return _NON_FINITE.get(v, v) if isinstance(v, str) else v


def _complex_hook(obj: dict[str, Any]) -> Any:
    if set(obj) == {"re", "im"}:
        return complex(_number(obj["re"]), _number(obj["im"]))
    return obj


def load_json(path: str | Path, complex_values: bool = False) -> dict[str, Any]:
    """
    Read a JSON record.

    Parameters
    ----------
    path : str or Path
        Source file.
    complex_values : bool, default False
        Decode ``{"re", "im"}`` objects into ``complex``.

    Returns
    -------
    dict
        Decoded record.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    json.JSONDecodeError
        If the file is not valid JSON.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"JSON file not found: {path}")

    with path.open("r", encoding="utf-8") as f:
        data = json.load(f, object_hook=_complex_hook if complex_values else None)

    logger.debug("Loaded JSON record from %s", path)
    return data
