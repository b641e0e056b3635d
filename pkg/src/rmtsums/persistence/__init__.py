"""
Persistence layer for result tables, reports and sample batches.

Provides JSON, CSV and Parquet I/O.
"""

from .json_io import dumps_json, load_json, save_json
from .parquet_io import load_parquet, read_parquet_metadata, save_parquet
from .table_io import (
    format_float,
    rows_to_frame,
    save_table_csv,
    table_payload,
    table_to_csv_text,
    table_to_json_text,
)

__all__ = [
    "save_json",
    "load_json",
    "dumps_json",
    "save_parquet",
    "load_parquet",
    "read_parquet_metadata",
    "format_float",
    "rows_to_frame",
    "save_table_csv",
    "table_payload",
    "table_to_csv_text",
    "table_to_json_text",
]
