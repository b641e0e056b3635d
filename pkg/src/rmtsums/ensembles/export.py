"""
Export of sample batches for offline analysis.
"""

import csv
import logging
from pathlib import Path
from typing import Literal

import pandas as pd

from rmtsums.ensembles.config import SampleBatch
from rmtsums.persistence.parquet_io import save_parquet
from rmtsums.persistence.table_io import FLOAT_FORMAT

logger = logging.getLogger(__name__)

ExportFormat = Literal["csv", "parquet"]


def batches_to_frame(batch: SampleBatch, include_shard: bool = False) -> pd.DataFrame:
    """
    One row per sample, columns ``x1..xN``.

    Parameters
    ----------
    batch : SampleBatch
        Samples.
    include_shard : bool, default False
        Append the shard (chain) index as column ``shard``.

    Returns
    -------
    pd.DataFrame
        Rows in batch order.
    """
    columns = [f"x{j + 1}" for j in range(batch.spec.n)]
    frame = pd.DataFrame(batch.eigenvalues, columns=columns)
    if include_shard:
        frame["shard"] = batch.shard
    return frame


def export_batches(
    batch: SampleBatch,
    path: str | Path,
    fmt: ExportFormat = "csv",
    include_shard: bool = False,
) -> Path:
    """
    Write a batch to CSV (17 significant digits) or Parquet.

    Parquet files carry the ensemble spec, and the acceptance rate for MCMC
    batches, as schema metadata.

    Parameters
    ----------
    batch : SampleBatch
        Samples.
    path : str or Path
        Target file. Parent directories are created.
    fmt : {"csv", "parquet"}, default "csv"
        Output format.
    include_shard : bool, default False
        Include the shard column.

    Returns
    -------
    Path
        Absolute path written.
    """
    frame = batches_to_frame(batch, include_shard)
    if fmt == "parquet":
        metadata = batch.spec.to_dict()
        if batch.is_mcmc:
            metadata["acceptance_rate"] = batch.acceptance_rate
            metadata["rhat"] = batch.rhat
        return save_parquet(frame, path, metadata=metadata)
    if fmt != "csv":
        raise ValueError(f"fmt must be 'csv' or 'parquet', got {fmt!r}")

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    logger.info("Saving %s batch to CSV: path=%s, rows=%d", batch.spec.kind, path, len(frame))
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, quoting=csv.QUOTE_MINIMAL)
    return path.absolute()
