"""Search budgets shared by every bounded search in the package."""

import logging
import os
from dataclasses import dataclass, fields, replace

from cyclepack.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

BUDGET_ENV_VAR = "CYCLEPACK_BUDGET"

# Fields that count search nodes; a bare integer in the env var sets all of them.
_NODE_BUDGETS = (
    "independence_nodes",
    "oracle_nodes",
    "longest_path_nodes",
    "pair_exchange_states",
    "equitable_nodes",
    "canonical_leaves",
)


@dataclass(frozen=True)
class SearchBudgets:
    """
    Limits for the exponential searches used at desk scale.

    Attributes:
        independence_nodes: Branch-and-bound nodes for the independence number
        oracle_nodes: Recursive calls of the exact packing oracle
        oracle_max_vertices: Largest n the packer/decider hands to the oracle
        longest_path_nodes: DFS nodes when measuring the remainder's longest path
        pair_exchange_states: Search states per exchange move (M3) attempt
        exchange_width: Largest number of cycles replaced by one exchange move
        iteration_factor: c in the c·n⁴ improvement cap
        cycle_length_cap: Longest cycle considered by M2/M4 (None: max(6, longest cycle))
        m4_candidates: Equal-length replacement cycles inspected per cycle in M4
        equitable_nodes: Backtracking nodes for exact equitable coloring
        canonical_leaves: Search-tree leaves for canonical labelling
    """

    independence_nodes: int = 10_000_000
    oracle_nodes: int = 2_000_000
    oracle_max_vertices: int = 16
    longest_path_nodes: int = 1_000_000
    pair_exchange_states: int = 1_000_000
    exchange_width: int = 2
    iteration_factor: int = 8
    cycle_length_cap: int | None = None
    m4_candidates: int = 2000
    equitable_nodes: int = 1_000_000
    canonical_leaves: int = 1_000_000

    def __post_init__(self) -> None:
        """Validate budget values on construction."""
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None and f.name == "cycle_length_cap":
                continue
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InvalidParameterError(f"{f.name} must be a positive integer, got {value!r}")
        if not 1 <= self.exchange_width <= 3:
            raise InvalidParameterError(
                f"exchange_width must be in {{1, 2, 3}}, got {self.exchange_width}"
            )
        if self.cycle_length_cap is not None and self.cycle_length_cap < 3:
            raise InvalidParameterError(
                f"cycle_length_cap must be at least 3, got {self.cycle_length_cap}"
            )

    def override(self, spec: str) -> "SearchBudgets":
        """
        Apply a textual override.

        Args:
            spec: Either a bare integer (sets every node budget) or
                comma-separated ``field=value`` pairs

        Returns:
            New SearchBudgets with the overrides applied

        Raises:
            InvalidParameterError: If a field is unknown or a value is not an integer
        """
        spec = spec.strip()
        if not spec:
            return self
        if spec.isdigit():
            value = int(spec)
            return replace(self, **{name: value for name in _NODE_BUDGETS})

        known = {f.name for f in fields(self)}
        changes: dict[str, int] = {}
        for item in spec.split(","):
            name, sep, raw = item.partition("=")
            name = name.strip()
            if not sep or name not in known:
                raise InvalidParameterError(f"Unknown budget override: {item.strip()!r}")
            try:
                changes[name] = int(raw.strip())
            except ValueError as e:
                raise InvalidParameterError(
                    f"Budget {name} must be an integer, got {raw.strip()!r}"
                ) from e
        return replace(self, **changes)

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "SearchBudgets":
        """
        Build budgets from defaults plus the CYCLEPACK_BUDGET environment variable.

        Args:
            environ: Mapping to read instead of os.environ (tests)

        Returns:
            SearchBudgets instance
        """
        env = os.environ if environ is None else environ
        raw = env.get(BUDGET_ENV_VAR, "")
        budgets = cls().override(raw)
        if raw:
            logger.debug(f"Applied {BUDGET_ENV_VAR}={raw!r}")
        return budgets
