"""
Configuration module for paths and environment settings.

Defines project-wide output locations and the packaged check catalog path.
"""

import os
from pathlib import Path
from typing import Final

# Package root (where this config module is installed)
# From src/rmtsums/config/__init__.py -> src/rmtsums
PACKAGE_ROOT: Final[Path] = Path(__file__).parent.parent

# Project root for development (when working in repo)
# From src/rmtsums/config/__init__.py -> src/rmtsums -> src -> project_root
PROJECT_ROOT: Final[Path] = Path(__file__).parent.parent.parent.parent

# Only environment variable read by the package
OUTPUT_DIR_ENV_VAR: Final[str] = "RMTSUMS_OUTPUT_DIR"

OUTPUT_DIR: Final[Path] = Path(os.environ.get(OUTPUT_DIR_ENV_VAR, PROJECT_ROOT / "output"))
LOGS_DIR: Final[Path] = OUTPUT_DIR / "logs"
REPORTS_DIR: Final[Path] = OUTPUT_DIR / "reports"
SAMPLES_DIR: Final[Path] = OUTPUT_DIR / "samples"

# Catalog path (package-relative, included in distribution)
CHECK_CATALOG_PATH: Final[Path] = PACKAGE_ROOT / "verification" / "check_catalog.json"


def ensure_directories() -> None:
    """
    Create output directories if they don't exist.

    Called by the command-line front-end before writing results.
    Safe to call multiple times.
    """
    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    LOGS_DIR.mkdir(parents=True, exist_ok=True)
    REPORTS_DIR.mkdir(parents=True, exist_ok=True)
    SAMPLES_DIR.mkdir(parents=True, exist_ok=True)
