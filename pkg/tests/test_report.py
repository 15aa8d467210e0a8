"""Tests for the expected-value table and the paper report."""

import os
from pathlib import Path
from unittest.mock import patch

import pytest

from prymcalc.errors import ComputationError
from prymcalc.report import (
    CHECKS,
    build_paper_report,
    compute_check,
    get_table_path,
    load_expected_table,
)
from prymcalc.report.table import get_bundled_table_path
from prymcalc.schemas import ExpectedTable, ExpectedValue


def _write(tmp_path: Path, text: str) -> Path:
    path = tmp_path / "table.yaml"
    path.write_text(text, encoding="utf-8")
    return path


class TestTablePath:
    """Tests for get_table_path."""

    def test_bundled_table_exists(self):
        bundled = get_bundled_table_path()
        assert bundled is not None
        assert bundled.name == "expected_values.yaml"

    def test_env_var_wins(self, tmp_path):
        with patch.dict(os.environ, {"PRYM_EXPECTED_TABLE": str(tmp_path / "x.yaml")}):
            assert get_table_path() == tmp_path / "x.yaml"

    def test_defaults_to_bundled(self):
        with patch.dict(os.environ, {}, clear=True):
            assert get_table_path() == get_bundled_table_path()


class TestLoadExpectedTable:
    """Tests for load_expected_table."""

    def test_bundled_names_are_known_checks(self):
        table = load_expected_table(get_bundled_table_path())
        assert {entry.name for entry in table.values} == set(CHECKS)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ComputationError) as exc:
            load_expected_table(tmp_path / "absent.yaml")
        assert exc.value.code == "E171"

    def test_invalid_yaml(self, tmp_path):
        with pytest.raises(ComputationError) as exc:
            load_expected_table(_write(tmp_path, "values: [unclosed"))
        assert exc.value.code == "E171"

    def test_off_schema(self, tmp_path):
        path = _write(tmp_path, "values:\n  - name: Not_Kebab\n    value: 1\n    source: a b c d e f\n")
        with pytest.raises(ComputationError) as exc:
            load_expected_table(path)
        assert exc.value.code == "E171"

    def test_numbers_are_stringified(self, tmp_path):
        path = _write(
            tmp_path,
            "values:\n  - name: count-15-4-16\n    value: 6006\n    source: degree of the map\n",
        )
        table = load_expected_table(path)
        assert table.values[0].value == "6006"


class TestComputeCheck:
    """Tests for compute_check."""

    def test_unknown(self):
        assert compute_check("no-such-check") == "<unknown check>"

    def test_known(self):
        assert compute_check("count-15-4-16") == "6006"

    def test_error_is_rendered(self):
        def failing() -> str:
            raise ComputationError("E120", "rho = 3")

        with patch.dict(CHECKS, {"failing-check": failing}):
            assert compute_check("failing-check") == "<error E120>"


class TestPaperReport:
    """Tests for build_paper_report."""

    def test_bundled_table_matches(self):
        report = build_paper_report(load_expected_table(get_bundled_table_path()))
        mismatches = [e.name for e in report.entries if not e.match]
        assert mismatches == []
        assert report.overall

    def test_mismatch(self):
        table = ExpectedTable(
            values=[
                ExpectedValue(name="count-15-4-16", value="6006", source="degree of the map"),
                ExpectedValue(name="rho-15-4-16", value="1", source="wrong on purpose"),
            ]
        )
        report = build_paper_report(table)
        assert [e.match for e in report.entries] == [True, False]
        assert report.entries[1].computed == "0"
        assert not report.overall
