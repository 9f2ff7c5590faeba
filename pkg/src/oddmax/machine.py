"""The positive oracle machine: a greedy variable-fixing loop that asks two
tagged queries per variable, plus transcripts of single runs and the tree of
all runs over all possible oracle answers.

On a formula with variables x_1..x_n, iteration i serializes the formula
with x_i pinned true and sends that body under tag '0' and tag '1'. A yes/no
answer pair pins x_i true, no/yes pins it false, yes/yes accepts outright,
no/no rejects outright; at i = n the pin-true case accepts and the pin-false
case rejects. Strings that fail to parse are rejected without any queries,
as are constant formulas, which have no variables to pin.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Mapping, Union

from .formula import Formula, ParseError, num_vars, parse, serialize, substitute
from .oracle import Oracle, Query, sat_join_cosat

#: Largest variable count for full tree expansion and query universes.
TREE_BOUND = 10


class IterationCase(enum.Enum):
    """Outcome of one loop iteration, classified from the two answers."""

    FIX_TRUE = "FIX_TRUE"  # (yes, no): pin x_i true, accept if i = n
    FIX_FALSE = "FIX_FALSE"  # (no, yes): pin x_i false, reject if i = n
    ACCEPT_BOTH = "ACCEPT_BOTH"  # (yes, yes): accept immediately
    REJECT_BOTH = "REJECT_BOTH"  # (no, no): reject immediately


def classify_case(ans0: bool, ans1: bool) -> IterationCase:
    if ans0 and ans1:
        return IterationCase.ACCEPT_BOTH
    if ans0:
        return IterationCase.FIX_TRUE
    if ans1:
        return IterationCase.FIX_FALSE
    return IterationCase.REJECT_BOTH


@dataclass(frozen=True)
class MachineProgram:
    """Behavior table for the loop; the default values are the real machine.

    Mutant tables exist to prove the monotonicity checker has teeth. Note
    that only `accept_both_verdict` and `reject_both_verdict` can break
    monotonicity: two runs under nested oracles agree answer-for-answer
    until the larger oracle strictly dominates an answer pair, and the only
    strict dominator of a mixed pair is (yes, yes). The mixed-pair options
    below never enter that argument, so mutants touching only them stay
    monotone (see the positivity tests, which pin this down exhaustively).
    """

    accept_both_verdict: bool = True
    reject_both_verdict: bool = False
    fix_true_value: bool = True
    fix_false_value: bool = False
    fix_true_final: bool = True
    fix_false_final: bool = False


STANDARD_PROGRAM = MachineProgram()

#: (yes, yes) rejects and (no, no) accepts; the one genuinely non-monotone mutant.
MUTANT_SWAP_UNANIMOUS = replace(
    STANDARD_PROGRAM, accept_both_verdict=False, reject_both_verdict=True
)
#: Pin-true continues with x_i := 0 and pin-false with x_i := 1.
MUTANT_SWAP_CONTINUATIONS = replace(
    STANDARD_PROGRAM, fix_true_value=False, fix_false_value=True
)
#: At i = n, the pin-true case rejects and the pin-false case accepts.
MUTANT_SWAP_FINAL = replace(
    STANDARD_PROGRAM, fix_true_final=False, fix_false_final=True
)

MUTANT_PROGRAMS: Mapping[str, MachineProgram] = {
    "swap-unanimous-verdicts": MUTANT_SWAP_UNANIMOUS,
    "swap-continuations": MUTANT_SWAP_CONTINUATIONS,
    "swap-final-verdicts": MUTANT_SWAP_FINAL,
}


@dataclass(frozen=True)
class QueryRecord:
    query: Query
    answer: bool


@dataclass(frozen=True)
class Iteration:
    index: int
    records: tuple[QueryRecord, QueryRecord]
    case: IterationCase


@dataclass(frozen=True)
class Transcript:
    """The recorded run: every query, every answer, and the verdict."""

    input: str
    well_formed: bool
    iterations: tuple[Iteration, ...]
    verdict: bool

    def query_count(self) -> int:
        return 2 * len(self.iterations)

    def fixed_bits(self) -> tuple[bool, ...]:
        """Values pinned so far, one per pin-true/pin-false iteration."""
        bits = []
        for it in self.iterations:
            if it.case is IterationCase.FIX_TRUE:
                bits.append(True)
            elif it.case is IterationCase.FIX_FALSE:
                bits.append(False)
        return tuple(bits)

    def to_json(self) -> dict:
        return {
            "input": self.input,
            "wellFormed": self.well_formed,
            "iterations": [
                {
                    "i": it.index,
                    "queries": [
                        {"string": rec.query.wire(), "tag": rec.query.tag, "answer": rec.answer}
                        for rec in it.records
                    ],
                    "case": it.case.value,
                }
                for it in self.iterations
            ],
            "verdict": "accept" if self.verdict else "reject",
        }


def run_machine(
    text: str, oracle: Oracle, program: MachineProgram = STANDARD_PROGRAM
) -> Transcript:
    """Run the loop on an arbitrary input string against an oracle.

    Total: inputs that are not formulas are rejected with an empty
    transcript. Both queries of an iteration are always issued, tag '0'
    first, even when the first answer already rules out a terminal case.
    """
    try:
        formula = parse(text)
    except ParseError:
        return Transcript(text, False, (), False)
    n = num_vars(formula)
    iterations: list[Iteration] = []
    current = formula
    verdict = False  # a constant formula never enters the loop: reject
    for i in range(1, n + 1):
        pinned = substitute(current, i, True)
        body = serialize(pinned)
        q0, q1 = Query(body, "0"), Query(body, "1")
        ans0, ans1 = oracle(q0), oracle(q1)
        case = classify_case(ans0, ans1)
        iterations.append(
            Iteration(i, (QueryRecord(q0, ans0), QueryRecord(q1, ans1)), case)
        )
        if case is IterationCase.ACCEPT_BOTH:
            verdict = program.accept_both_verdict
            break
        if case is IterationCase.REJECT_BOTH:
            verdict = program.reject_both_verdict
            break
        if case is IterationCase.FIX_TRUE:
            if i == n:
                verdict = program.fix_true_final
                break
            current = substitute(current, i, program.fix_true_value)
        else:
            if i == n:
                verdict = program.fix_false_final
                break
            current = substitute(current, i, program.fix_false_value)
    return Transcript(text, True, tuple(iterations), verdict)


def decide_oddmaxsat(formula: Formula) -> bool:
    """Verdict of the machine on the formula under the canonical join oracle."""
    return run_machine(serialize(formula), sat_join_cosat).verdict


@dataclass(frozen=True)
class TreeLeaf:
    verdict: bool


@dataclass(frozen=True)
class TreeNode:
    """One loop iteration with all four answer-pair edges materialized."""

    iteration: int
    formula: Formula
    queries: tuple[Query, Query]
    edges: tuple[tuple[IterationCase, Union["TreeNode", TreeLeaf]], ...]

    def edge(self, case: IterationCase) -> Union["TreeNode", TreeLeaf]:
        for c, child in self.edges:
            if c is case:
                return child
        raise KeyError(case)


QueryTree = Union[TreeNode, TreeLeaf]

#: Edge rendering order: the two continuation cases, then the terminal ones.
CASE_ORDER = (
    IterationCase.FIX_TRUE,
    IterationCase.FIX_FALSE,
    IterationCase.ACCEPT_BOTH,
    IterationCase.REJECT_BOTH,
)


def build_query_tree(
    formula: Formula,
    program: MachineProgram = STANDARD_PROGRAM,
    bound: int = TREE_BOUND,
) -> QueryTree:
    """Materialize every computation branch over all possible oracle answers.

    Any single run traces one root-to-leaf path of this tree. A constant
    formula yields a bare verdict leaf.
    """
    n = num_vars(formula)
    if n > bound:
        raise ValueError(f"formula has {n} variables, exceeding the tree bound {bound}")
    if n == 0:
        return TreeLeaf(False)
    return _build_node(formula, 1, n, program)


def _build_node(
    formula: Formula, i: int, n: int, program: MachineProgram
) -> TreeNode:
    pinned = substitute(formula, i, True)
    body = serialize(pinned)
    queries = (Query(body, "0"), Query(body, "1"))

    def continuation(value: bool, final: bool) -> QueryTree:
        if i == n:
            return TreeLeaf(final)
        return _build_node(substitute(formula, i, value), i + 1, n, program)

    edges = (
        (IterationCase.FIX_TRUE, continuation(program.fix_true_value, program.fix_true_final)),
        (IterationCase.FIX_FALSE, continuation(program.fix_false_value, program.fix_false_final)),
        (IterationCase.ACCEPT_BOTH, TreeLeaf(program.accept_both_verdict)),
        (IterationCase.REJECT_BOTH, TreeLeaf(program.reject_both_verdict)),
    )
    return TreeNode(i, formula, queries, edges)


def tree_verdict(tree: QueryTree, oracle: Oracle) -> bool:
    """Verdict of the run the oracle selects through the tree."""
    node = tree
    while isinstance(node, TreeNode):
        q0, q1 = node.queries
        node = node.edge(classify_case(oracle(q0), oracle(q1)))
    return node.verdict


def tree_queries(tree: QueryTree) -> frozenset[Query]:
    """Every query appearing anywhere in the tree."""
    queries: set[Query] = set()
    stack: list[QueryTree] = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, TreeLeaf):
            continue
        queries.update(node.queries)
        stack.extend(child for _, child in node.edges)
    return frozenset(queries)


def query_universe(
    formula: Formula,
    program: MachineProgram = STANDARD_PROGRAM,
    bound: int = TREE_BOUND,
) -> frozenset[Query]:
    """The set of queries reachable on the formula under some oracle behavior."""
    return tree_queries(build_query_tree(formula, program, bound))


def tree_to_json(tree: QueryTree) -> dict:
    if isinstance(tree, TreeLeaf):
        return {"verdict": "accept" if tree.verdict else "reject"}
    return {
        "iteration": tree.iteration,
        "formula": serialize(tree.formula),
        "queries": [q.wire() for q in tree.queries],
        "edges": {case.value: tree_to_json(tree.edge(case)) for case in CASE_ORDER},
    }


def render_tree(tree: QueryTree, indent: int = 0) -> str:
    """Indented text dump of the full tree, all four edges per node."""
    pad = "  " * indent
    if isinstance(tree, TreeLeaf):
        return f"{pad}{'accept' if tree.verdict else 'reject'}"
    lines = [
        f"{pad}[i={tree.iteration}] {serialize(tree.formula)}  "
        f"queries: {tree.queries[0].wire()} {tree.queries[1].wire()}"
    ]
    for case in CASE_ORDER:
        child = tree.edge(case)
        if isinstance(child, TreeLeaf):
            lines.append(
                f"{pad}  {case.value} -> {'accept' if child.verdict else 'reject'}"
            )
        else:
            lines.append(f"{pad}  {case.value} ->")
            lines.append(render_tree(child, indent + 2))
    return "\n".join(lines)
