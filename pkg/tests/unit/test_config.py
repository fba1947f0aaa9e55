"""Unit tests for search budget configuration."""

import pytest

from cyclepack.config import BUDGET_ENV_VAR, SearchBudgets
from cyclepack.exceptions import InvalidParameterError


class TestSearchBudgets:
    """Test SearchBudgets defaults and validation."""

    def test_defaults(self):
        """Test the documented default values."""
        budgets = SearchBudgets()
        assert budgets.independence_nodes == 10_000_000
        assert budgets.oracle_nodes == 2_000_000
        assert budgets.oracle_max_vertices == 16
        assert budgets.exchange_width == 2
        assert budgets.iteration_factor == 8
        assert budgets.cycle_length_cap is None

    def test_is_frozen(self):
        """Test budgets cannot be mutated."""
        budgets = SearchBudgets()
        with pytest.raises(AttributeError):
            budgets.oracle_nodes = 5  # type: ignore[misc]

    @pytest.mark.parametrize("value", [0, -3])
    def test_non_positive_rejected(self, value):
        """Test budgets must be positive."""
        with pytest.raises(InvalidParameterError, match="positive integer"):
            SearchBudgets(oracle_nodes=value)

    def test_bool_rejected(self):
        """Test booleans are not accepted as integers."""
        with pytest.raises(InvalidParameterError):
            SearchBudgets(oracle_nodes=True)

    def test_exchange_width_range(self):
        """Test exchange_width must be 1, 2 or 3."""
        with pytest.raises(InvalidParameterError, match="exchange_width"):
            SearchBudgets(exchange_width=4)

    def test_cycle_length_cap_minimum(self):
        """Test the cycle length cap must allow triangles."""
        with pytest.raises(InvalidParameterError, match="cycle_length_cap"):
            SearchBudgets(cycle_length_cap=2)


class TestOverride:
    """Test textual budget overrides."""

    def test_bare_integer_sets_node_budgets(self):
        """Test a bare integer sets every node budget and nothing else."""
        budgets = SearchBudgets().override("5")
        assert budgets.independence_nodes == 5
        assert budgets.oracle_nodes == 5
        assert budgets.canonical_leaves == 5
        assert budgets.oracle_max_vertices == 16
        assert budgets.exchange_width == 2

    def test_named_fields(self):
        """Test field=value pairs set the named fields."""
        budgets = SearchBudgets().override("oracle_max_vertices=12, exchange_width=3")
        assert budgets.oracle_max_vertices == 12
        assert budgets.exchange_width == 3

    def test_empty_is_identity(self):
        """Test an empty override returns the same budgets."""
        budgets = SearchBudgets()
        assert budgets.override("  ") is budgets

    def test_unknown_field(self):
        """Test unknown fields are rejected."""
        with pytest.raises(InvalidParameterError, match="Unknown budget override"):
            SearchBudgets().override("speed=3")

    def test_non_integer_value(self):
        """Test non-integer values are rejected."""
        with pytest.raises(InvalidParameterError, match="must be an integer"):
            SearchBudgets().override("oracle_nodes=lots")

    def test_override_is_validated(self):
        """Test overridden values pass through validation."""
        with pytest.raises(InvalidParameterError):
            SearchBudgets().override("exchange_width=0")


class TestFromEnv:
    """Test environment-based configuration."""

    def test_unset(self):
        """Test defaults are used without the variable."""
        assert SearchBudgets.from_env({}) == SearchBudgets()

    def test_set(self):
        """Test the variable is applied as an override."""
        budgets = SearchBudgets.from_env({BUDGET_ENV_VAR: "oracle_nodes=7"})
        assert budgets.oracle_nodes == 7

    def test_reads_os_environ(self, monkeypatch):
        """Test os.environ is read by default."""
        monkeypatch.setenv(BUDGET_ENV_VAR, "9")
        assert SearchBudgets.from_env().equitable_nodes == 9
