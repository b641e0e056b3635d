"""Unit tests for command result tables."""

import json

import pandas as pd
import pytest

from rmtsums.persistence.table_io import (
    format_float,
    rows_to_frame,
    save_table_csv,
    table_payload,
    table_to_csv_text,
    table_to_json_text,
)


@pytest.fixture
def sample_rows() -> list[dict]:
    """Rows as produced by the moment command."""
    return [
        {"h": 1.0, "R": 1.0 / 12.0, "method": "hyp_s1"},
        {"h": 0.5, "R": 0.1, "method": "lhopital"},
    ]


class TestFormatting:
    """Seventeen significant digits everywhere."""

    def test_format_float(self) -> None:
        """Values are printed with enough digits to round-trip."""
        text = format_float(0.1)
        assert text == "0.10000000000000001"
        assert float(text) == 0.1

    def test_complex_columns_split(self) -> None:
        """Complex values become _re/_im columns."""
        frame = rows_to_frame([{"h": 0.5, "R": 1.0 + 2.0j}])
        assert list(frame.columns) == ["h", "R_re", "R_im"]
        assert frame.loc[0, "R_im"] == 2.0


class TestCsv:
    """CSV rendering."""

    def test_header_and_digits(self, sample_rows: list[dict]) -> None:
        """Header row first, then full-precision values."""
        lines = table_to_csv_text(sample_rows).strip().splitlines()
        assert lines[0] == "h,R,method"
        assert lines[1] == "1,0.083333333333333329,hyp_s1"

    def test_quoting(self) -> None:
        """Fields containing commas are quoted."""
        text = table_to_csv_text([{"detail": "s=1, h=2"}])
        assert '"s=1, h=2"' in text

    def test_save_table_csv(self, sample_rows: list[dict], tmp_path) -> None:
        """The file reads back to the same values."""
        path = save_table_csv(sample_rows, tmp_path / "out" / "moment.csv")
        frame = pd.read_csv(path)
        assert frame["R"].tolist() == [1.0 / 12.0, 0.1]


class TestJsonPayload:
    """JSON document layout."""

    def test_payload_keys(self, sample_rows: list[dict]) -> None:
        """params, rows and meta are the only top-level keys."""
        payload = table_payload({"s": 1}, sample_rows, {"version": "0.1.0", "command": "moment"})
        assert set(payload) == {"params", "rows", "meta"}
        assert "timestamp" not in json.dumps(payload["meta"])

    def test_rows_round_through_format(self, sample_rows: list[dict]) -> None:
        """JSON carries the same values as CSV."""
        payload = table_payload({}, sample_rows, {})
        assert payload["rows"][0]["R"] == float(format_float(1.0 / 12.0))

    def test_json_text(self) -> None:
        """Complex cells are encoded as re/im objects; key order kept."""
        payload = table_payload({"s": 1}, [{"z": 1.0 - 1.0j}], {"command": "charfn"})
        decoded = json.loads(table_to_json_text(payload))
        assert decoded["rows"][0]["z"] == {"re": 1.0, "im": -1.0}
        assert list(decoded) == ["params", "rows", "meta"]
