"""
Tabular output for command results.

CSV files carry a header row with RFC-4180 quoting; JSON documents carry a
single object with ``params``, ``rows`` and ``meta`` keys. Floats are always
printed with 17 significant digits so that runs can be diffed.
"""

import csv
import logging
from pathlib import Path
from typing import Any

import pandas as pd

from rmtsums.persistence.json_io import dumps_json

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def format_float(value: float) -> str:
    """Format a float with 17 significant digits."""
    return FLOAT_FORMAT % value


def rows_to_frame(rows: list[dict[str, Any]]) -> pd.DataFrame:
    """
    Build a DataFrame from row records, splitting complex columns.

    A complex value in column ``c`` becomes two columns ``c_re`` and ``c_im``.

    Parameters
    ----------
    rows : list of dict
        Row records with identical keys.

    Returns
    -------
    pd.DataFrame
        One row per record, columns in first-seen order.
    """
    flat: list[dict[str, Any]] = []
    for row in rows:
        out: dict[str, Any] = {}
        for key, value in row.items():
            if isinstance(value, complex):
                out[f"{key}_re"] = value.real
                out[f"{key}_im"] = value.imag
            else:
                out[key] = value
        flat.append(out)
    return pd.DataFrame(flat)


def save_table_csv(rows: list[dict[str, Any]], path: str | Path) -> Path:
    """
    Write row records to CSV.

    Parameters
    ----------
    rows : list of dict
        Row records.
    path : str or Path
        Target file path. Parent directories created if needed.

    Returns
    -------
    Path
        Absolute path to the saved file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = rows_to_frame(rows)

    logger.info("Saving table to CSV: path=%s, rows=%d", path, len(frame))
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, quoting=csv.QUOTE_MINIMAL)
    return path.absolute()


def table_to_csv_text(rows: list[dict[str, Any]]) -> str:
    """Render row records as CSV text (for stdout)."""
    return rows_to_frame(rows).to_csv(
        index=False, float_format=FLOAT_FORMAT, quoting=csv.QUOTE_MINIMAL
    )


def table_payload(
    params: dict[str, Any],
    rows: list[dict[str, Any]],
    meta: dict[str, Any],
) -> dict[str, Any]:
    """
    Assemble the JSON document for a command result.

    Floats in rows are rounded through the 17-digit format so that CSV and
    JSON outputs carry identical values.

    Parameters
    ----------
    params : dict
        Validated command parameters.
    rows : list of dict
        Result rows.
    meta : dict
        Package version and command name; no timestamps.

    Returns
    -------
    dict
        ``{"params": ..., "rows": ..., "meta": ...}``.
    """

    def _round(value: Any) -> Any:
        if isinstance(value, float):
            return float(format_float(value))
        if isinstance(value, complex):
            return complex(_round(value.real), _round(value.imag))
        return value

    return {
        "params": params,
        "rows": [{k: _round(v) for k, v in row.items()} for row in rows],
        "meta": meta,
    }


def table_to_json_text(payload: dict[str, Any]) -> str:
    """Render a table payload as JSON text."""
    return dumps_json(payload, indent=2, sort_keys=False)
