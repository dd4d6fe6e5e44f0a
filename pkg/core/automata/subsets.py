"""Bitmask encoding of state subsets used by the exponential searches.

Bit ``i`` stands for ``d.states[i]``; canonical subset order is the sorted
state-index order, which is also the order used when subsets are named.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import FrozenSet, List, Mapping, Sequence, Tuple

from core.automata.dfa import Dfa

logger = logging.getLogger(__name__)


@dataclass
class SearchStats:
    """Counters every exploration reports back to the services."""

    nodes_expanded: int = 0
    started: float = field(default_factory=time.perf_counter, repr=False)
    elapsed_ms: int = 0

    def stop(self) -> "SearchStats":
        self.elapsed_ms = int((time.perf_counter() - self.started) * 1000)
        return self

    def to_dict(self) -> dict:
        return {"nodes_expanded": self.nodes_expanded, "elapsed_ms": self.elapsed_ms}


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_singleton(mask: int) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


def step_mask(mask: int, column: Sequence[int]) -> int:
    """Image of the subset ``mask`` under a letter given as its table row."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << column[low.bit_length() - 1]
        mask ^= low
    return out


def indices(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def states_of(d: Dfa, mask: int) -> FrozenSet[str]:
    return frozenset(d.states[qi] for qi in indices(mask))


def distinct_names(labels: Sequence[str], fallback: Sequence[str]) -> Tuple[str, ...]:
    """``labels`` when they are pairwise distinct, otherwise ``fallback``.

    State names may contain commas and brackets, so joined component names can
    coincide; ``fallback`` is built from state indices and never does.
    """
    if len(set(labels)) == len(labels):
        return tuple(labels)
    logger.debug("composite state names collide; naming %d states by index", len(labels))
    return tuple(fallback)


def subset_label(d: Dfa, mask: int, *, by_index: bool = False) -> str:
    """Token naming a subset, e.g. ``{p1,p2,s}`` in state order (``{0,1,2}`` by index)."""
    parts = (str(qi) if by_index else d.states[qi] for qi in indices(mask))
    return "{" + ",".join(parts) + "}"


def subset_names(d: Dfa, masks: Sequence[int], *, reserved: Mapping[int, str] | None = None) -> Tuple[str, ...]:
    """Names for the subsets ``masks``; masks listed in ``reserved`` keep the given name."""
    reserved = reserved or {}

    def label(mask: int, by_index: bool) -> str:
        return reserved[mask] if mask in reserved else subset_label(d, mask, by_index=by_index)

    return distinct_names(
        [label(mask, False) for mask in masks],
        [label(mask, True) for mask in masks],
    )
