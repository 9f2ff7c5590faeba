"""Shared fixtures and independent test-side oracles.

The helpers here recompute expected values by direct enumeration so the
tests never trust the code paths they are checking.
"""

from __future__ import annotations

import pytest

from oddmax.corpus import curated_corpus
from oddmax.formula import Formula, evaluate, num_vars, serialize, substitute


@pytest.fixture(scope="session")
def corpus() -> list[Formula]:
    return curated_corpus()


def all_assignments_descending(n: int):
    """Every length-n assignment, lexicographically greatest first."""
    for packed in range((1 << n) - 1, -1, -1):
        yield tuple(bool((packed >> (n - 1 - k)) & 1) for k in range(n))


def satisfying_assignments(formula: Formula) -> list[tuple[bool, ...]]:
    """Brute-force oracle: direct evaluate() sweep, greatest first."""
    n = num_vars(formula)
    return [a for a in all_assignments_descending(n) if evaluate(formula, a)]


def reference_lexmax(formula: Formula) -> tuple[bool, ...] | None:
    found = satisfying_assignments(formula)
    return found[0] if found else None


def reachable_query_wires(formula: Formula) -> set[str]:
    """Independent query-universe oracle: plain frontier expansion over the
    two possible pins per iteration, deduplicated by wire string."""
    n = num_vars(formula)
    wires: set[str] = set()
    frontier: list[tuple[Formula, int]] = [(formula, 1)]
    while frontier:
        current, i = frontier.pop()
        if i > n:
            continue
        pinned = substitute(current, i, True)
        body = serialize(pinned)
        wires.add(body + "0")
        wires.add(body + "1")
        if i < n:
            frontier.append((pinned, i + 1))
            frontier.append((substitute(current, i, False), i + 1))
    return wires
