"""Executable monotonicity checking for the machine: growing the oracle must
never turn an accepted input into a rejected one.

The check quantifies over subsets of the reachable query universe rather
than over all strings; a run's verdict only ever consults queries from that
universe, so the restriction loses nothing (the test suite pins this down).
Small universes are swept exhaustively over all 3^|U| nested pairs; larger
ones are sampled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .formula import Formula, serialize
from .machine import (
    IterationCase,
    MachineProgram,
    STANDARD_PROGRAM,
    build_query_tree,
    classify_case,
    run_machine,
    tree_queries,
    tree_verdict,
)
from .oracle import (
    FiniteOracle,
    Query,
    SUBSET_PAIR_BOUND,
    enumerate_subset_pairs,
    sample_subset_pair,
)

#: Default number of pairs drawn in sampled mode.
DEFAULT_SAMPLES = 10_000


@dataclass(frozen=True)
class Counterexample:
    """A monotonicity violation: the smaller oracle accepts, the larger rejects.

    Re-checkable by two run_machine calls with the two finite oracles.
    """

    small: FiniteOracle
    large: FiniteOracle
    small_verdict: bool
    large_verdict: bool


@dataclass(frozen=True)
class PositivityReport:
    formula: str
    mode: str  # "exhaustive" | "sampled"
    universe_size: int
    pairs_checked: int
    seed: int | None
    violation: Counterexample | None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def to_json(self) -> dict:
        if self.violation is None:
            result: object = "ok"
        else:
            result = {
                "S": sorted(q.wire() for q in self.violation.small.members),
                "T": sorted(q.wire() for q in self.violation.large.members),
            }
        return {
            "formula": self.formula,
            "mode": self.mode,
            "universeSize": self.universe_size,
            "pairsChecked": self.pairs_checked,
            "seed": self.seed,
            "result": result,
        }


def _replayed_counterexample(
    text: str,
    universe: frozenset[Query],
    small: frozenset[Query],
    large: frozenset[Query],
    program: MachineProgram,
) -> Counterexample:
    small_oracle = FiniteOracle(universe, small)
    large_oracle = FiniteOracle(universe, large)
    small_verdict = run_machine(text, small_oracle, program).verdict
    large_verdict = run_machine(text, large_oracle, program).verdict
    return Counterexample(small_oracle, large_oracle, small_verdict, large_verdict)


def check_positivity_exhaustive(
    formula: Formula,
    program: MachineProgram = STANDARD_PROGRAM,
    bound: int = SUBSET_PAIR_BOUND,
) -> PositivityReport:
    """Sweep every nested oracle pair over the query universe.

    Reports the first violation found, or OK after all 3^|U| pairs. Raises
    ValueError when the universe exceeds `bound`; fall back to sampling.
    """
    text = serialize(formula)
    tree = build_query_tree(formula, program)
    universe = tree_queries(tree)
    if len(universe) > bound:
        raise ValueError(
            f"query universe has {len(universe)} elements, exceeding the "
            f"exhaustive bound {bound}"
        )
    verdicts: dict[frozenset[Query], bool] = {}

    def verdict(members: frozenset[Query]) -> bool:
        cached = verdicts.get(members)
        if cached is None:
            cached = tree_verdict(tree, members.__contains__)
            verdicts[members] = cached
        return cached

    pairs = 0
    for small, large in enumerate_subset_pairs(universe, bound):
        pairs += 1
        if verdict(small) and not verdict(large):
            return PositivityReport(
                formula=text,
                mode="exhaustive",
                universe_size=len(universe),
                pairs_checked=pairs,
                seed=None,
                violation=_replayed_counterexample(text, universe, small, large, program),
            )
    return PositivityReport(text, "exhaustive", len(universe), pairs, None, None)


def check_positivity_sampled(
    formula: Formula,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    program: MachineProgram = STANDARD_PROGRAM,
) -> PositivityReport:
    """Check `samples` nested pairs drawn from the seeded sampler."""
    text = serialize(formula)
    tree = build_query_tree(formula, program)
    universe = tree_queries(tree)
    rng = random.Random(seed)
    for k in range(samples):
        small, large = sample_subset_pair(universe, rng)
        if tree_verdict(tree, small.__contains__) and not tree_verdict(
            tree, large.__contains__
        ):
            return PositivityReport(
                formula=text,
                mode="sampled",
                universe_size=len(universe),
                pairs_checked=k + 1,
                seed=seed,
                violation=_replayed_counterexample(text, universe, small, large, program),
            )
    return PositivityReport(text, "sampled", len(universe), samples, seed, None)


def verify_case_monotonicity() -> bool:
    """The finite local law behind monotonicity, swept over all 16 ordered
    answer-pair combinations: raising answers pointwise can only move toward
    the accept-both case and away from the reject-both case."""
    pairs = list(product((False, True), repeat=2))
    for low in pairs:
        for high in pairs:
            if not (low[0] <= high[0] and low[1] <= high[1]):
                continue
            low_case = classify_case(*low)
            high_case = classify_case(*high)
            if low_case is IterationCase.ACCEPT_BOTH and high_case is not IterationCase.ACCEPT_BOTH:
                return False
            if high_case is IterationCase.REJECT_BOTH and low_case is not IterationCase.REJECT_BOTH:
                return False
    return True
