"""Decision procedure for "does G contain k disjoint cycles?"."""

import logging

from cyclepack.config import SearchBudgets
from cyclepack.exceptions import BudgetExceededError, InvalidParameterError
from cyclepack.graph import Graph, degree_stats
from cyclepack.hypotheses import (
    alpha_exceeds,
    find_wheel_hub,
    is_exceptional,
    structural_independent_set,
)
from cyclepack.lovasz import classify_no_two_cycles
from cyclepack.models import (
    CyclePacking,
    Decision,
    ExceptionKind,
    RuleApplication,
    Verdict,
)
from cyclepack.oracle import oracle_max_packing

logger = logging.getLogger(__name__)


def _fmt(value: float) -> str:
    return "∞" if value == float("inf") else str(int(value))


def decide(graph: Graph, k: int, budgets: SearchBudgets | None = None) -> Decision:
    """
    Decide whether a graph has k vertex-disjoint cycles.

    Necessary conditions are checked first (n ≥ 3k and α ≤ n − 2k). Then the
    first applicable rule wins: minimum degree ≥ 2k; Ore-degree ≥ 4k − 1;
    Ore-degree ≥ 4k − 3 with the two exceptional graphs for k = 3; minimum
    degree ≥ 2k − 1 with the wheel and 2K_k ∨ K̄_k exceptions; the k = 2
    classification of graphs without two disjoint cycles; the exact oracle
    for small n. Otherwise the verdict is Unknown.

    Args:
        graph: Input graph
        k: Number of cycles, at least 1
        budgets: Search budgets

    Returns:
        Decision whose trail lists every rule considered, in order

    Raises:
        InvalidParameterError: If k < 1

    Example:
        >>> decide(complete_graph(9), 3).verdict
        <Verdict.HAS_K_CYCLES: 'HasKCycles'>
    """
    budgets = budgets or SearchBudgets()
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}")
    n = graph.n
    trail: list[RuleApplication] = []

    def verdict(
        value: Verdict, rule: str, detail: str, witness: CyclePacking | None = None
    ) -> Decision:
        trail.append(RuleApplication(rule, detail, applied=True))
        decision = Decision(value, tuple(trail), witness)
        logger.debug(f"decide n={n} k={k}: {value.value} ({decision.justification})")
        return decision

    if n < 3 * k:
        return verdict(Verdict.NO_K_CYCLES, "size", f"n={n} < 3k={3 * k}")

    stats = degree_stats(graph)
    delta, sigma2 = stats.delta, stats.sigma2
    threshold = n - 2 * k

    h3: bool | None
    if delta >= 2 * k - 1:
        witness_set = structural_independent_set(graph, k)
        h3 = witness_set is None
        if not h3:
            return verdict(Verdict.NO_K_CYCLES, "alpha", f"α={n - 2 * k + 1} > n−2k={threshold}")
    else:
        try:
            found = alpha_exceeds(graph, threshold, budgets)
            h3 = not found.exceeds(threshold)
            if not h3:
                detail = f"α≥{found.size} > n−2k={threshold}"
                return verdict(Verdict.NO_K_CYCLES, "alpha", detail)
        except BudgetExceededError:
            h3 = None
    trail.append(RuleApplication("alpha", f"α ≤ {threshold}" if h3 else "α undetermined"))

    # T1
    if delta >= 2 * k:
        return verdict(Verdict.HAS_K_CYCLES, "T1", f"δ={delta} ≥ 2k={2 * k}")
    trail.append(RuleApplication("T1", f"δ={delta} < {2 * k}"))

    # T4
    if sigma2 >= 4 * k - 1:
        return verdict(Verdict.HAS_K_CYCLES, "T4", f"σ₂={_fmt(sigma2)} ≥ 4k−1={4 * k - 1}")
    trail.append(RuleApplication("T4", f"σ₂={_fmt(sigma2)} < {4 * k - 1}"))

    # T9
    if k >= 3 and n >= 3 * k + 1 and sigma2 >= 4 * k - 3:
        exception = is_exceptional(graph, k, budgets) if k == 3 else None
        if exception is not None and exception in (ExceptionKind.Y1, ExceptionKind.Y2):
            return verdict(Verdict.NO_K_CYCLES, "T9", f"G ≅ {exception.value}")
        if h3:
            detail = f"σ₂={_fmt(sigma2)} ≥ 4k−3={4 * k - 3}, n ≥ 3k+1, α ≤ n−2k"
            return verdict(Verdict.HAS_K_CYCLES, "T9", detail)
        trail.append(RuleApplication("T9", "α undetermined"))
    elif k < 3:
        trail.append(RuleApplication("T9", f"k={k} < 3"))
    elif n < 3 * k + 1:
        trail.append(RuleApplication("T9", f"n={n} < {3 * k + 1}"))
    else:
        trail.append(RuleApplication("T9", f"σ₂={_fmt(sigma2)} < {4 * k - 3}"))

    # T2
    if k >= 2 and delta >= 2 * k - 1:
        if k == 2 and find_wheel_hub(graph) is not None:
            return verdict(Verdict.NO_K_CYCLES, "T2", "G is a wheel")
        odd_exception = k % 2 == 1 and n == 3 * k
        if odd_exception and is_exceptional(graph, k, budgets) is ExceptionKind.TWO_KK_JOIN_KKBAR:
            return verdict(Verdict.NO_K_CYCLES, "T2", f"G ≅ 2K_{k} ∨ K̄_{k}")
        detail = f"δ={delta} ≥ 2k−1={2 * k - 1}, α ≤ n−2k, not exceptional"
        return verdict(Verdict.HAS_K_CYCLES, "T2", detail)
    trail.append(RuleApplication("T2", f"δ={delta} < {2 * k - 1}" if k >= 2 else "k=1"))

    # L16
    if k == 2 and n >= 6 and sigma2 >= 5:
        family = classify_no_two_cycles(graph)
        if family is not None:
            label = f" ({family.label.value})" if family.label else ""
            detail = f"no two disjoint cycles: {family.kind.value}{label}"
            return verdict(Verdict.NO_K_CYCLES, "L16", detail)
        return verdict(Verdict.HAS_K_CYCLES, "L16", "matches no family without two disjoint cycles")
    if k == 2:
        missed = f"σ₂={_fmt(sigma2)} < 5" if n >= 6 else f"n={n} < 6"
        trail.append(RuleApplication("L16", missed))

    if n <= budgets.oracle_max_vertices:
        try:
            exact = oracle_max_packing(graph, stop_at=k, budgets=budgets)
        except BudgetExceededError as e:
            trail.append(RuleApplication("oracle", f"undecided: {e}"))
        else:
            if exact.at_least(k):
                witness = CyclePacking.from_cycles(graph, exact.cycles[:k])
                detail = f"found {k} disjoint cycles"
                return verdict(Verdict.HAS_K_CYCLES, "oracle", detail, witness)
            return verdict(Verdict.NO_K_CYCLES, "oracle", f"max {exact.count} < {k}")
    else:
        trail.append(RuleApplication("oracle", f"n={n} > {budgets.oracle_max_vertices}"))

    logger.info(f"decide n={n} k={k}: no rule applies")
    return Decision(Verdict.UNKNOWN, tuple(trail))
