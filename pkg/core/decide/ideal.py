"""Two-sided ideal test for languages given by acceptors.

L is an ideal iff Σ*LΣ* = L. The closure is built as an NFA from the acceptor by
letting the initial state and every final state loop on all letters, then
determinized, minimized and compared with the original language.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from core.automata.dfa import Dfa, Word
from core.automata.ops import DEFAULT_PRODUCT_CAP, DEFAULT_SUBSET_CAP, determinize_subset, equivalent, minimize

logger = logging.getLogger(__name__)


def ideal_closure(acc: Dfa, *, cap: int = DEFAULT_SUBSET_CAP) -> Dfa:
    """Minimal acceptor of Σ*LΣ*."""
    initial = acc.states[acc.initial_index()]
    loops: Dict[Tuple[str, str], List[str]] = {}
    for state in {initial} | set(acc.finals):
        for letter in acc.alphabet:
            loops[(state, letter)] = [state]
    return minimize(determinize_subset(acc, loops, cap=cap))


def ideal_violation(
    acc: Dfa, *, cap: int = DEFAULT_SUBSET_CAP, product_cap: int = DEFAULT_PRODUCT_CAP
) -> Optional[Word]:
    """Shortest word of Σ*LΣ* outside L, or None when L is an ideal."""
    result = equivalent(ideal_closure(acc, cap=cap), acc, cap=product_cap)
    if result.equal:
        return None
    logger.debug("not an ideal: %r in closure only", result.witness)
    return result.witness


def is_ideal(acc: Dfa, *, cap: int = DEFAULT_SUBSET_CAP, product_cap: int = DEFAULT_PRODUCT_CAP) -> bool:
    return ideal_violation(acc, cap=cap, product_cap=product_cap) is None
