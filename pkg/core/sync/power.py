"""The power automaton with merged singleton sink, and the reset-word language Syn(d)."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List

from core.automata.dfa import Dfa
from core.automata.ops import minimize
from core.automata.subsets import SearchStats, full_mask, is_singleton, states_of, step_mask, subset_names
from core.errors import AlphabetMismatchError, CapExceededError, DfaValidationError, NotSynchronizingError
from core.sync.reset import DEFAULT_SUBSET_CAP, shortest_reset_word

logger = logging.getLogger(__name__)

SINK = "SINK"


@dataclass(frozen=True)
class PowerAutomaton:
    """Acceptor for Syn(source): initial Q, all singletons merged into ``SINK``."""

    underlying: Dfa
    source: Dfa
    subsets: Dict[str, FrozenSet[str]] = field(compare=False)
    stats: SearchStats = field(compare=False, default_factory=SearchStats)

    @property
    def sink_reachable(self) -> bool:
        return SINK in self.underlying.finals


def power_automaton(d: Dfa, *, cap: int = DEFAULT_SUBSET_CAP) -> PowerAutomaton:
    """Breadth-first subset exploration from Q with letters in alphabet order."""
    stats = SearchStats()
    root = full_mask(d.size)

    def key(mask: int) -> int:
        return 0 if is_singleton(mask) else mask

    order: List[int] = [key(root)]
    number = {key(root): 0}
    edges: List[List[int]] = []
    queue = deque([key(root)])
    while queue:
        mask = queue.popleft()
        stats.nodes_expanded += 1
        row = []
        for li in range(len(d.alphabet)):
            nxt = 0 if mask == 0 else key(step_mask(mask, d.table[li]))
            if nxt not in number:
                number[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
                if len(order) > cap:
                    raise CapExceededError("power automaton", cap, len(order))
            row.append(number[nxt])
        edges.append(row)
    stats.stop()

    names = subset_names(d, order, reserved={0: SINK})
    subsets = {
        name: (frozenset() if mask == 0 else states_of(d, mask))
        for name, mask in zip(names, order)
    }
    table = tuple(tuple(edges[pos][li] for pos in range(len(order))) for li in range(len(d.alphabet)))
    finals = frozenset({SINK}) if SINK in names else frozenset()
    underlying = Dfa(names, d.alphabet, table, names[0], finals)
    logger.debug("power automaton: %d states for %d source states", len(names), d.size)
    return PowerAutomaton(underlying=underlying, source=d, subsets=subsets, stats=stats)


def syn_language_dfa(d: Dfa, *, cap: int = DEFAULT_SUBSET_CAP) -> Dfa:
    """Minimal acceptor of Syn(d)."""
    return minimize(power_automaton(d, cap=cap).underlying)


def state_complexity(d: Dfa, *, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """sc(Syn(d)): the number of states of its minimal acceptor."""
    return syn_language_dfa(d, cap=cap).size


def unary_syn_equality(a: Dfa, b: Dfa) -> bool:
    """Syn over a one-letter alphabet is a*a^k, so equality compares shortest reset lengths."""
    for d in (a, b):
        if len(d.alphabet) != 1:
            raise DfaValidationError("unary comparison needs one-letter alphabets")
    if a.alphabet.letters != b.alphabet.letters:
        raise AlphabetMismatchError("unary automata over different letters")
    ka = shortest_reset_word(a).shortest_length
    kb = shortest_reset_word(b).shortest_length
    if ka is None or kb is None:
        raise NotSynchronizingError("unary comparison needs synchronizing automata")
    return ka == kb
