"""
Parquet storage for Monte Carlo sample batches.

Frames carry one row per sample and one ``x1..xN`` column per point. The run
that produced them (ensemble, parameter, N, seed, acceptance rate) travels in
the Parquet schema metadata under the ``rmtsums`` key and comes back in
``DataFrame.attrs``.
"""

import json
import logging
from pathlib import Path
from typing import Any

import pandas as pd
import pyarrow as pa
import pyarrow.parquet as pq

logger = logging.getLogger(__name__)

METADATA_KEY = b"rmtsums"


def save_parquet(
    df: pd.DataFrame,
    path: str | Path,
    metadata: dict[str, Any] | None = None,
    compression: str = "zstd",
) -> Path:
    """
    Write a sample frame, with optional run metadata, to Parquet.

    Parameters
    ----------
    df : pd.DataFrame
        Samples; the index is not stored.
    path : str or Path
        Target file. Parent directories are created.
    metadata : dict, optional
        JSON-serializable run description stored in the schema.
    compression : str, default "zstd"
        Parquet codec.

    Returns
    -------
    Path
        Absolute path written.

    Raises
    ------
    ValueError
        If the frame has no rows.
    """
    if df.empty:
        raise ValueError("Cannot save empty DataFrame")

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    table = pa.Table.from_pandas(df, preserve_index=False)
    if metadata:
        schema_meta = dict(table.schema.metadata or {})
        schema_meta[METADATA_KEY] = json.dumps(metadata, sort_keys=True).encode()
        table = table.replace_schema_metadata(schema_meta)
    pq.write_table(table, path, compression=compression)

    logger.info("Saved %d samples x %d columns to %s", len(df), len(df.columns), path)
    return path.absolute()


def read_parquet_metadata(path: str | Path) -> dict[str, Any]:
    """Run metadata stored by :func:`save_parquet`; empty if none."""
    schema_meta = pq.read_schema(path).metadata or {}
    raw = schema_meta.get(METADATA_KEY)
    return json.loads(raw) if raw else {}


def load_parquet(path: str | Path, columns: list[str] | None = None) -> pd.DataFrame:
    """
    Read a sample frame; run metadata lands in ``df.attrs``.

    Parameters
    ----------
    path : str or Path
        Source file.
    columns : list of str, optional
        Subset of columns to read.

    Returns
    -------
    pd.DataFrame
        Samples in stored order.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Parquet file not found: {path}")

    df = pq.read_table(path, columns=columns).to_pandas()
    df.attrs.update(read_parquet_metadata(path))
    logger.debug("Loaded %d rows from %s", len(df), path)
    return df
