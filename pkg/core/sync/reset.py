"""Reset words, synchronization checks and shortest reset words."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, List, Optional, Sequence

import networkx as nx

from core.automata.dfa import Dfa, Word, image
from core.automata.ops import shortlex_search, spell_word
from core.automata.subsets import SearchStats, full_mask, is_singleton, step_mask

logger = logging.getLogger(__name__)

DEFAULT_SUBSET_CAP = 1 << 20
_MERGED = "merged"


@dataclass
class SyncReport:
    """Result of a shortest-reset-word search."""

    synchronizing: bool
    shortest_reset: Optional[Word] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def shortest_length(self) -> Optional[int]:
        return None if self.shortest_reset is None else len(self.shortest_reset)


def is_reset_word(d: Dfa, word: Sequence[str]) -> bool:
    """True iff |δ(Q, w)| = 1."""
    return len(image(d, d.states, word)) == 1


def image_reset(d: Dfa, subset: Iterable[str], word: Sequence[str]) -> bool:
    """True iff the given subset is sent to a single state by ``word``."""
    return len(image(d, subset, word)) == 1


def is_minimal_reset_word(d: Dfa, word: Sequence[str]) -> bool:
    """Reset, and no proper prefix and no proper suffix is reset."""
    word = tuple(word)
    if not is_reset_word(d, word):
        return False
    for cut in range(len(word)):
        if is_reset_word(d, word[:cut]) or is_reset_word(d, word[cut + 1 :]):
            return False
    return True


def reset_letters(d: Dfa) -> List[str]:
    """The letters that are reset words by themselves, in alphabet order."""
    return [letter for li, letter in enumerate(d.alphabet) if len(set(d.table[li])) == 1]


def pair_graph(d: Dfa) -> nx.DiGraph:
    """Directed graph on 2-subsets; a pair that collapses points to ``merged``."""
    graph = nx.DiGraph()
    graph.add_node(_MERGED)
    for p, q in combinations(range(d.size), 2):
        graph.add_node((p, q))
        for row in d.table:
            tp, tq = row[p], row[q]
            if tp == tq:
                graph.add_edge((p, q), _MERGED)
            else:
                graph.add_edge((p, q), (min(tp, tq), max(tp, tq)))
    return graph


def is_synchronizing(d: Dfa) -> bool:
    """Every pair of states can be merged (the quadratic pair-graph criterion)."""
    if d.size == 1:
        return True
    graph = pair_graph(d)
    mergeable = nx.ancestors(graph, _MERGED)
    return len(mergeable) == graph.number_of_nodes() - 1


def shortest_reset_word(d: Dfa, *, cap: int = DEFAULT_SUBSET_CAP) -> SyncReport:
    """Breadth-first search from Q to a singleton in the power automaton.

    Returns the shortest reset word, least in alphabet order among the shortest.
    """
    stats = SearchStats()
    found, parents = shortlex_search(
        full_mask(d.size),
        lambda mask, li: step_mask(mask, d.table[li]),
        len(d.alphabet),
        is_singleton,
        cap=cap,
        what="power automaton",
        stats=stats,
    )
    stats.stop()
    if found is None:
        logger.debug("no reset word: %d subsets explored", len(parents))
        return SyncReport(False, None, stats)
    return SyncReport(True, spell_word(parents, found, d.alphabet), stats)
