"""Deciders for SYN-INCLUSION, SYN-EQUALITY and SYN-STRICT-INCLUSION.

Inclusion Syn(a) ⊆ Syn(b) fails iff some word w collapses Q1 to a single state
while leaving at least two states of Q2. The nondeterministic letter-by-letter
guess is simulated by a breadth-first search over reachable pairs of images,
which makes the first counterexample the shortest and alphabet-least one.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Optional

from core.automata.dfa import Dfa, Word, require_same_alphabet
from core.automata.subsets import SearchStats, full_mask, is_singleton, step_mask
from core.decide.outcome import DecisionOutcome, Direction, SubsetPairFrontier, Verdict
from core.errors import CapExceededError
from core.gadgets.builders import product_sync

logger = logging.getLogger(__name__)

DEFAULT_PAIR_CAP = 1 << 22


def _inclusion_witness(a: Dfa, b: Dfa, cap: int, stats: SearchStats) -> Optional[Word]:
    """Shortest word reset for ``a`` and not for ``b``, or None."""
    alphabet = require_same_alphabet(a, b)
    root = SubsetPairFrontier((full_mask(a.size), full_mask(b.size)))

    def separates(node) -> bool:
        return is_singleton(node[0]) and not is_singleton(node[1])

    if separates(root.node):
        return ()
    seen = {root.node}
    queue = deque([root])
    while queue:
        entry = queue.popleft()
        stats.nodes_expanded += 1
        first, second = entry.node
        if is_singleton(second):
            # the second image can never grow back to two states
            continue
        for li in range(len(alphabet)):
            nxt = (step_mask(first, a.table[li]), step_mask(second, b.table[li]))
            if nxt in seen:
                continue
            seen.add(nxt)
            child = entry.child(nxt, li)
            if separates(nxt):
                return child.word(alphabet)
            if len(seen) > cap:
                raise CapExceededError("pair space", cap, len(seen))
            queue.append(child)
    logger.debug("inclusion holds after %d pair nodes", len(seen))
    return None


def syn_inclusion(a: Dfa, b: Dfa, *, pair_cap: int = DEFAULT_PAIR_CAP) -> DecisionOutcome:
    """Decide Syn(a) ⊆ Syn(b)."""
    stats = SearchStats()
    witness = _inclusion_witness(a, b, pair_cap, stats)
    stats.stop()
    if witness is None:
        return DecisionOutcome.holding(stats)
    return DecisionOutcome.failing(a, b, witness, Direction.a_not_b, stats)


def syn_equality(a: Dfa, b: Dfa, *, pair_cap: int = DEFAULT_PAIR_CAP) -> DecisionOutcome:
    """Decide Syn(a) = Syn(b); a ⊆ b is checked first."""
    stats = SearchStats()
    witness = _inclusion_witness(a, b, pair_cap, stats)
    if witness is not None:
        return DecisionOutcome.failing(a, b, witness, Direction.a_not_b, stats.stop())
    witness = _inclusion_witness(b, a, pair_cap, stats)
    if witness is not None:
        return DecisionOutcome.failing(a, b, witness, Direction.b_not_a, stats.stop())
    return DecisionOutcome.holding(stats.stop())


def syn_strict_inclusion(a: Dfa, b: Dfa, *, pair_cap: int = DEFAULT_PAIR_CAP) -> DecisionOutcome:
    """Decide Syn(a) ⊊ Syn(b) as Syn(a) = Syn(a × b) and Syn(a) ≠ Syn(b).

    When the inclusion is strict, ``gap`` is the shortest word of Syn(b) \\ Syn(a).
    A failure caused by equal languages has no witness and reason ``equal``.
    """
    stats = SearchStats()
    product = product_sync(a, b)
    meet = syn_equality(a, product, pair_cap=pair_cap)
    stats.nodes_expanded += meet.stats.nodes_expanded
    if not meet.holds:
        # only a ⊆ a×b can fail; its witness is reset for a and not for b
        return DecisionOutcome.failing(a, b, meet.witness, Direction.a_not_b, stats.stop())
    same = syn_equality(a, b, pair_cap=pair_cap)
    stats.nodes_expanded += same.stats.nodes_expanded
    stats.stop()
    if same.holds:
        return DecisionOutcome(Verdict.fails, reason="equal", stats=stats)
    checked = DecisionOutcome.failing(a, b, same.witness, Direction.b_not_a, stats)
    return DecisionOutcome.holding(stats, gap=checked.witness)
