"""Oracles over tagged query strings: the join of two sets, the canonical
satisfiable/unsatisfiable join, finite oracles, and subset-pair enumeration.

Wire format: the canonical serialization of a formula body immediately
followed by a single tag character, '0' or '1', with no delimiter. Tag '0'
routes a query to the left component of a join, tag '1' to the right.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Collection, Iterable, Iterator, Union

from .formula import Formula, ParseError, parse
from .sat import sat_dpll

#: Largest universe enumerate_subset_pairs will sweep (3^|U| pairs).
SUBSET_PAIR_BOUND = 12

TAGS = ("0", "1")


@dataclass(frozen=True, order=True)
class Query:
    """One oracle query: a formula body plus the join tag it is aimed at."""

    body: str
    tag: str

    def __post_init__(self) -> None:
        if self.tag not in TAGS:
            raise ValueError(f"tag must be '0' or '1', got {self.tag!r}")

    def wire(self) -> str:
        return self.body + self.tag

    @classmethod
    def from_wire(cls, raw: str) -> "Query":
        """Split a raw query string into body and trailing tag.

        The tag is always the final character, so decoding is unambiguous.
        Raises ValueError when `raw` is empty or ends in a non-tag character.
        """
        if not raw or raw[-1] not in TAGS:
            raise ValueError(f"query string must end in '0' or '1': {raw!r}")
        return cls(raw[:-1], raw[-1])


#: Any deterministic total membership predicate over queries.
Oracle = Callable[[Query], bool]

SetPredicate = Union[Callable[[str], bool], Collection[str]]


def join_membership(query: Query, left: SetPredicate, right: SetPredicate) -> bool:
    """Membership in the join of two sets: tag '0' asks left, tag '1' right."""
    side = left if query.tag == "0" else right
    if callable(side):
        return bool(side(query.body))
    return query.body in side


def _parse_body(body: str) -> Formula | None:
    try:
        return parse(body)
    except ParseError:
        return None


def sat_join_cosat(query: Query) -> bool:
    """The canonical join oracle: satisfiability on tag '0', unsatisfiability
    on tag '1'. Bodies that are not formulas are answered False on both tags,
    keeping the predicate total.
    """
    body = _parse_body(query.body)
    if body is None:
        return False
    answer = sat_dpll(body)
    return answer if query.tag == "0" else not answer


def one_query_decider(query: Query, sat_calls: list[str] | None = None) -> bool:
    """Decide join membership with a single satisfiability call on the body.

    Returns the call's answer for tag '0' and its negation for tag '1';
    agrees with sat_join_cosat everywhere. Pass a list as `sat_calls` to
    meter the calls made (the body is appended once per call). Bodies that
    are not formulas are answered False without consulting the solver.
    """
    body = _parse_body(query.body)
    if body is None:
        return False
    if sat_calls is not None:
        sat_calls.append(query.body)
    answer = sat_dpll(body)
    return answer if query.tag == "0" else not answer


@dataclass(frozen=True)
class FiniteOracle:
    """An explicit oracle: a member set drawn from a finite query universe.

    Queries outside the member set are answered False, including queries
    outside the universe, so the oracle is total.
    """

    universe: frozenset[Query]
    members: frozenset[Query]

    def __post_init__(self) -> None:
        if not self.members <= self.universe:
            raise ValueError("members must be a subset of the universe")

    def __call__(self, query: Query) -> bool:
        return query in self.members


def sorted_universe(universe: Iterable[Query]) -> tuple[Query, ...]:
    """Canonical element order (by wire string) for deterministic sweeps."""
    return tuple(sorted(universe, key=Query.wire))


def enumerate_subset_pairs(
    universe: Collection[Query], bound: int = SUBSET_PAIR_BOUND
) -> Iterator[tuple[frozenset[Query], frozenset[Query]]]:
    """All ordered pairs (S, T) with S <= T <= universe, each exactly once.

    Every element is independently out of T, in T only, or in both, so the
    stream has exactly 3^|universe| pairs.
    """
    elements = sorted_universe(universe)
    if len(elements) > bound:
        raise ValueError(
            f"universe of size {len(elements)} exceeds the exhaustive bound {bound}"
        )
    for trits in product(range(3), repeat=len(elements)):
        small = frozenset(q for q, t in zip(elements, trits) if t == 2)
        large = frozenset(q for q, t in zip(elements, trits) if t >= 1)
        yield small, large


def sample_subset_pair(
    universe: Collection[Query], rng: int | random.Random
) -> tuple[frozenset[Query], frozenset[Query]]:
    """Draw T uniformly from subsets of the universe, then S uniformly from
    subsets of T. Takes a seed, or a generator for streams of draws; either
    way the result is deterministic."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    elements = sorted_universe(universe)
    k = len(elements)
    large_bits = rng.getrandbits(k) if k else 0
    small_bits = large_bits & (rng.getrandbits(k) if k else 0)
    large = frozenset(q for i, q in enumerate(elements) if (large_bits >> i) & 1)
    small = frozenset(q for i, q in enumerate(elements) if (small_bits >> i) & 1)
    return small, large
