"""Tests for settings, result types and the error hierarchy."""

import json

import pytest

from transversal_class.errors import (
    AnticommutingGeneratorsError,
    CapExceededError,
    ConfigurationError,
    DimensionMismatchError,
    NotGenericCodeError,
    OrderUnavailableError,
    StabParseError,
    TableauParseError,
    TransversalError,
    UnknownAlgebraError,
)
from transversal_class.types import (
    THREADS_ENV_VAR,
    Accepted,
    CorpusEntry,
    EnumerationSettings,
    GateVerdict,
    Report,
)


class TestEnumerationSettings:
    """Tests for EnumerationSettings."""

    def test_defaults(self):
        """Test default limits."""
        settings = EnumerationSettings()
        assert settings.cap == 2_000_000
        assert settings.node_cap == 100_000_000
        assert settings.workers == 1
        assert settings.distance_max_n == 14

    def test_from_env(self, monkeypatch):
        """Test that the thread variable sets the worker count."""
        monkeypatch.setenv(THREADS_ENV_VAR, "3")
        assert EnumerationSettings.from_env().workers == 3

    def test_from_env_unset(self, monkeypatch):
        """Test the default when the variable is missing."""
        monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
        assert EnumerationSettings.from_env(cap=10).workers == 1

    def test_explicit_override_wins(self, monkeypatch):
        """Test that explicit overrides beat the environment."""
        monkeypatch.setenv(THREADS_ENV_VAR, "4")
        assert EnumerationSettings.from_env(workers=2).workers == 2

    @pytest.mark.parametrize("raw", ["many", "0", "-1"])
    def test_from_env_invalid(self, monkeypatch, raw):
        """Test that non-positive or non-integer values are rejected."""
        monkeypatch.setenv(THREADS_ENV_VAR, raw)
        with pytest.raises(ConfigurationError):
            EnumerationSettings.from_env()


class TestReport:
    """Tests for the JSON result envelope."""

    def test_json(self):
        """Test the serialized layout."""
        report = Report(command="orders", inputs={"case": 0}, result={"order": "720"})
        data = json.loads(report.model_dump_json())
        assert data == {
            "schema_version": "1",
            "command": "orders",
            "inputs": {"case": 0},
            "result": {"order": "720"},
            "timings": {},
        }

    def test_corpus_entry(self):
        """Test the corpus entry model."""
        entry = CorpusEntry(name="x", stab_text="XX\nZZ\n", expected_case=0)
        assert entry.note == ""

    def test_verdict(self):
        """Test that verdicts compare by value."""
        a = GateVerdict(True, Accepted("A0", "Sp(4,F2)"))
        b = GateVerdict(True, Accepted("A0", "Sp(4,F2)"))
        assert a == b


class TestErrors:
    """Tests for the exception hierarchy."""

    def test_hierarchy(self):
        """Test that every error derives from TransversalError."""
        errors = [
            DimensionMismatchError("mul", (2, 2), (3, 3)),
            StabParseError(1, 2, "bad"),
            AnticommutingGeneratorsError(1, 2),
            CapExceededError(10),
            OrderUnavailableError(4, 5),
            NotGenericCodeError(1),
            TableauParseError(None, "empty"),
            UnknownAlgebraError(0x0201),
            ConfigurationError("bad"),
        ]
        assert all(isinstance(e, TransversalError) for e in errors)

    def test_input_errors_are_value_errors(self):
        """Test that input errors can be caught as ValueError."""
        assert isinstance(StabParseError(1, None, "x"), ValueError)
        assert isinstance(TableauParseError(1, "x"), ValueError)
        assert isinstance(DimensionMismatchError("add", 1, 2), ValueError)

    def test_messages(self):
        """Test the formatted messages."""
        assert str(StabParseError(2, 3, "invalid")) == "Parse error at line 2, column 3: invalid"
        assert str(StabParseError(1, None, "empty")) == "Parse error at line 1: empty"
        expected = "Enumeration cap of 5 exceeded (predicted order 720)"
        assert str(CapExceededError(5, 720)) == expected
        assert "lines 1 and 3" in str(AnticommutingGeneratorsError(1, 3, "XI", "ZI"))
        assert "XI vs ZI" in str(AnticommutingGeneratorsError(1, 3, "XI", "ZI"))
        assert str(TableauParseError(4, "bad")) == "Malformed tableau line 4: bad"
