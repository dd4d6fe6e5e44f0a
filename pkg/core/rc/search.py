"""Exhaustive search for a smallest synchronizing automaton with given reset words.

Candidates on m states are complete transition tables, one function [m] → [m]
per letter, enumerated up to state relabeling: a table is kept only when no
permutation of the states yields a lexicographically smaller table. Letters are
assigned one at a time, and every partial table is pruned against the minimal
acceptor T of the target language: reading only the assigned letters, the
candidate image of its state set must be a singleton exactly when T accepts.
"""

from __future__ import annotations

import logging
from collections import deque
from itertools import permutations, product
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from core.automata.dfa import Dfa
from core.automata.subsets import SearchStats, full_mask, is_singleton, step_mask
from core.decide.inclusion import syn_equality
from core.errors import EnumerationBudgetError, InvariantViolation
from core.rc.polynomial import require_synchronizing
from core.rc.types import RcMethod, RcReport
from core.sync.power import DEFAULT_SUBSET_CAP, syn_language_dfa
from core.sync.reset import is_synchronizing

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BUDGET = 1 << 42

Row = Tuple[int, ...]


def _relabel(rows: Sequence[Row], perm: Sequence[int]) -> Tuple[Row, ...]:
    out = []
    for f in rows:
        g = [0] * len(f)
        for i, fi in enumerate(f):
            g[perm[i]] = perm[fi]
        out.append(tuple(g))
    return tuple(out)


def _is_least(rows: Sequence[Row], perms: Sequence[Tuple[int, ...]]) -> bool:
    current = tuple(rows)
    return all(_relabel(rows, perm) >= current for perm in perms)


def _canonical_tables(
    m: int,
    choices: Sequence[Sequence[Row]],
    accept: Callable[[Sequence[Row]], bool],
    stats: SearchStats,
) -> Iterator[Tuple[Row, ...]]:
    """Depth-first over letters; yields full tables that are least in their orbit."""
    perms = list(permutations(range(m)))
    rows: List[Row] = []

    def extend(depth: int) -> Iterator[Tuple[Row, ...]]:
        if depth == len(choices):
            yield tuple(rows)
            return
        for f in choices[depth]:
            rows.append(f)
            stats.nodes_expanded += 1
            if _is_least(rows, perms) and accept(rows):
                yield from extend(depth + 1)
            rows.pop()

    yield from extend(0)


def _all_functions(m: int) -> List[Row]:
    return list(product(range(m), repeat=m))


def enumerate_canonical(m: int, letter_count: int) -> Iterator[Tuple[Row, ...]]:
    """Every m-state table over ``letter_count`` letters, one per relabeling class."""
    functions = _all_functions(m)
    yield from _canonical_tables(m, [functions] * letter_count, lambda rows: True, SearchStats())


def canonical_form(d: Dfa, letter_order: Optional[Sequence[str]] = None) -> Dfa:
    """Least relabeling of d, rows compared in ``letter_order`` (default alphabet order)."""
    order = list(letter_order) if letter_order is not None else list(d.alphabet)
    letter_ids = [d.alphabet.index(letter) for letter in order]
    rows = [d.table[li] for li in letter_ids]
    best = min(_relabel(rows, perm) for perm in permutations(range(d.size)))
    table = [None] * len(letter_ids)
    for li, row in zip(letter_ids, best):
        table[li] = row
    return Dfa(tuple(str(i) for i in range(d.size)), d.alphabet, tuple(table))


class _SynTarget:
    """Consistency of partial candidates with the minimal acceptor of Syn(d)."""

    def __init__(self, target: Dfa):
        self.target = target
        self.start = target.initial_index()
        self.accepting = target.final_indices()

    def consistent(self, m: int, rows: Sequence[Row], letter_ids: Sequence[int]) -> bool:
        root = (self.start, full_mask(m))
        seen = {root}
        queue = deque([root])
        table = self.target.table
        while queue:
            ti, mask = queue.popleft()
            if (ti in self.accepting) != is_singleton(mask):
                return False
            for f, li in zip(rows, letter_ids):
                nxt = (table[li][ti], step_mask(mask, f))
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return True


def _letter_search_order(target: _SynTarget, m: int, letter_count: int) -> Tuple[List[int], List[List[Row]]]:
    """Letters with the fewest individually consistent functions first."""
    functions = _all_functions(m)
    singles = [
        [f for f in functions if target.consistent(m, [f], [li])]
        for li in range(letter_count)
    ]
    order = sorted(range(letter_count), key=lambda li: (len(singles[li]), li))
    return order, [singles[li] for li in order]


def enumeration_size(start: int, top: int, letter_count: int) -> int:
    """Raw tables over all state counts start..top."""
    return sum(m ** (m * letter_count) for m in range(start, top + 1))


def _find_on(target: _SynTarget, d: Dfa, m: int, stats: SearchStats) -> Optional[Dfa]:
    letter_ids, choices = _letter_search_order(target, m, len(d.alphabet))
    if any(not options for options in choices):
        return None

    def accept(rows: Sequence[Row]) -> bool:
        return target.consistent(m, rows, letter_ids[: len(rows)])

    for rows in _canonical_tables(m, choices, accept, stats):
        table: List[Row] = [()] * len(letter_ids)
        for li, row in zip(letter_ids, rows):
            table[li] = row
        return Dfa(tuple(str(i) for i in range(m)), d.alphabet, tuple(table))
    return None


def verify_witness(witness: Dfa, d: Dfa) -> None:
    if not is_synchronizing(witness):
        raise InvariantViolation(f"rc witness on {witness.size} states is not synchronizing")
    outcome = syn_equality(witness, d)
    if not outcome.holds:
        raise InvariantViolation(
            f"rc witness on {witness.size} states disagrees with the input on {outcome.witness!r}"
        )


def rc_upper_search(
    d: Dfa,
    limit: int,
    *,
    start: int = 1,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> RcReport:
    """Decide rc(Syn(d)) ≤ limit by trying m = start..limit states in order.

    Only m < |Q| is searched; d itself is the witness when nothing smaller exists
    and limit ≥ |Q|. Without a witness the report is bound-only with
    rc_lower = limit + 1.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    require_synchronizing(d)
    n = d.size
    top = min(limit, n - 1)
    required = enumeration_size(start, top, len(d.alphabet))
    if required > budget:
        raise EnumerationBudgetError(required, budget)

    stats = SearchStats()
    target = _SynTarget(syn_language_dfa(d, cap=subset_cap))
    for m in range(start, top + 1):
        witness = _find_on(target, d, m, stats)
        logger.debug("rc search m=%d: %s after %d nodes", m, "found" if witness else "none", stats.nodes_expanded)
        if witness is not None:
            verify_witness(witness, d)
            return RcReport(n, m, m, True, RcMethod.exhaustive, witness, stats=stats.stop())
    stats.stop()
    if limit >= n:
        return RcReport(n, n, n, True, RcMethod.exhaustive, d.without_acceptance(), stats=stats)
    logger.info("no automaton with at most %d states has the same reset words", limit)
    return RcReport(n, max(start, limit + 1), None, False, RcMethod.bound_only, stats=stats)
