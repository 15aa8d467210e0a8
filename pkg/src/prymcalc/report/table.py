"""Loading the annotated expected-value table."""

import os
from importlib import resources
from pathlib import Path

import yaml  # type: ignore[import-untyped]
from pydantic import ValidationError as PydanticValidationError

from prymcalc.errors import ComputationError
from prymcalc.logging import get_logger
from prymcalc.schemas.report import ExpectedTable

logger = get_logger(__name__)

TABLE_FILE = "expected_values.yaml"


def get_bundled_table_path() -> Path | None:
    """Get path to the bundled table if it exists."""
    try:
        bundled = resources.files("prymcalc.data").joinpath(TABLE_FILE)
        if bundled.is_file():
            return Path(str(bundled))
    except (TypeError, FileNotFoundError, AttributeError):
        pass
    return None


def get_table_path() -> Path:
    """Get table path: PRYM_EXPECTED_TABLE env var or the bundled table."""
    env_path = os.environ.get("PRYM_EXPECTED_TABLE")
    if env_path:
        return Path(env_path)

    bundled = get_bundled_table_path()
    if bundled is not None:
        return bundled

    raise ComputationError("E171", "no table found; set PRYM_EXPECTED_TABLE")


def load_expected_table(path: Path | None = None) -> ExpectedTable:
    """
    Read and validate the expected-value table.

    Args:
        path: Table file; defaults to ``get_table_path()``

    Raises:
        ComputationError: E171 when the file is missing, not YAML, or off-schema
    """
    table_path = path or get_table_path()
    logger.debug("Loading expected values from %s", table_path)
    try:
        raw = yaml.safe_load(table_path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ComputationError("E171", f"failed to read {table_path}: {e}") from e
    except yaml.YAMLError as e:
        raise ComputationError("E171", f"invalid YAML in {table_path}") from e

    try:
        return ExpectedTable.model_validate(raw)
    except PydanticValidationError as e:
        first_error = e.errors()[0]
        loc = ".".join(str(part) for part in first_error.get("loc", ()))
        raise ComputationError("E171", f"{loc}: {first_error.get('msg', '')}") from e
