"""
Catalog-backed registry of acceptance checks.

The catalog is a JSON array of :class:`CheckMetadata` records. Loading is
fail-fast: a malformed entry, a duplicate name or a function missing from
:mod:`rmtsums.verification.checks` aborts construction.
"""

import logging
from dataclasses import asdict
from pathlib import Path
from typing import Any

from rmtsums.persistence.json_io import load_json, save_json

from . import checks
from .config import SUITES, CheckMetadata

logger = logging.getLogger(__name__)


class CheckRegistry:
    """
    Acceptance checks by name, in catalog order.

    Parameters
    ----------
    catalog_path : str | Path
        JSON catalog, usually :data:`rmtsums.config.CHECK_CATALOG_PATH`.

    Examples
    --------
    >>> from rmtsums.config import CHECK_CATALOG_PATH
    >>> registry = CheckRegistry(CHECK_CATALOG_PATH)
    >>> golden = registry.get_suite("golden")
    >>> metadata = registry.get_metadata("golden_r_1_1")
    """

    def __init__(self, catalog_path: str | Path) -> None:
        self._catalog_path = Path(catalog_path)
        self._checks: dict[str, CheckMetadata] = {}
        self._load_catalog()

        logger.info(
            "Loaded check registry: catalog=%s, checks=%d, enabled=%d",
            self._catalog_path,
            len(self._checks),
            len(self.get_enabled()),
        )

    def _load_catalog(self) -> None:
        if not self._catalog_path.exists():
            raise FileNotFoundError(f"Check catalog not found: {self._catalog_path}")

        catalog_data: Any = load_json(self._catalog_path)

        if not isinstance(catalog_data, list):
            raise ValueError("Check catalog must be a JSON array")

        for entry in catalog_data:
            try:
                metadata = CheckMetadata(**entry)
            except TypeError as e:
                raise ValueError(f"Invalid check metadata in catalog: {entry}. Error: {e}") from e
            if metadata.name in self._checks:
                raise ValueError(f"Duplicate check name in catalog: {metadata.name}")
            self._checks[metadata.name] = metadata

        logger.debug("Loaded %d checks from catalog", len(self._checks))

        self._validate_catalog()

    def _validate_catalog(self) -> None:
        for name, metadata in self._checks.items():
            if not callable(getattr(checks, metadata.function_name, None)):
                raise ValueError(
                    f"Check '{name}' references non-existent function: {metadata.function_name}"
                )

        logger.debug("Validated %d check functions", len(self._checks))

    def get_metadata(self, name: str) -> CheckMetadata:
        """
        Retrieve metadata for a specific check.

        Raises
        ------
        KeyError
            If check name is not registered.
        """
        if name not in self._checks:
            raise KeyError(
                f"Check '{name}' not found in registry. "
                f"Available checks: {sorted(self._checks.keys())}"
            )
        return self._checks[name]

    def get_function(self, name: str) -> checks.CheckFunction:
        """Resolve the measuring function of a registered check."""
        return getattr(checks, self.get_metadata(name).function_name)  # type: ignore[no-any-return]

    def get_enabled(self) -> dict[str, CheckMetadata]:
        """Enabled checks in catalog order."""
        return {name: meta for name, meta in self._checks.items() if meta.enabled}

    def get_suite(self, suite: str) -> dict[str, CheckMetadata]:
        """
        Enabled checks of one suite in catalog order.

        Raises
        ------
        ValueError
            If the suite name is unknown.
        """
        if suite not in SUITES:
            raise ValueError(f"Unknown suite {suite!r}; available: {', '.join(SUITES)}")
        return {name: meta for name, meta in self.get_enabled().items() if meta.suite == suite}

    def list_all(self) -> dict[str, CheckMetadata]:
        """All registered checks (enabled and disabled)."""
        return self._checks.copy()

    def save_catalog(self, path: str | Path | None = None) -> Path:
        """Write the catalog, to the loaded file unless ``path`` is given."""
        output_path = Path(path) if path else self._catalog_path
        records = [asdict(meta) for meta in self._checks.values()]
        save_json(records, output_path, sort_keys=False)
        logger.info("Saved check catalog: path=%s, checks=%d", output_path, len(self._checks))
        return output_path
