"""Intersection instances M1..Mn and their normalization.

Component states are prefixed with the 1-based component index (``1.q0``), which
keeps the state sets disjoint when the gadget automaton takes their union.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional, Tuple

from core.automata.dfa import Alphabet, Dfa, require_same_alphabet
from core.automata.fileformat import load_dfa
from core.automata.ops import DEFAULT_PRODUCT_CAP, equivalent
from core.errors import EpsilonAcceptedError, GadgetError, InvariantViolation, MissingInitialError

logger = logging.getLogger(__name__)


def component_prefix(index: int) -> str:
    """Prefix for the component at 0-based ``index``."""
    return f"{index + 1}."


def prefix_states(d: Dfa, prefix: str) -> Dfa:
    states = tuple(prefix + state for state in d.states)
    initial = None if d.initial is None else prefix + d.initial
    return Dfa(states, d.alphabet, d.table, initial, frozenset(prefix + f for f in d.finals))


@dataclass(frozen=True)
class ReductionInstance:
    """Acceptors over a shared base alphabet Σ with pairwise disjoint state names."""

    sigma: Alphabet
    components: Tuple[Dfa, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise GadgetError("an intersection instance needs at least one component")
        require_same_alphabet(*self.components)
        if self.components[0].alphabet != self.sigma:
            raise GadgetError("components are not over the instance alphabet")
        seen = set()
        for pos, d in enumerate(self.components):
            if d.initial is None:
                raise MissingInitialError(f"component {pos + 1} has no initial state")
            if seen.intersection(d.states):
                raise GadgetError(f"component {pos + 1} shares state names with an earlier component")
            seen.update(d.states)

    @classmethod
    def from_acceptors(cls, acceptors: Iterable[Dfa]) -> "ReductionInstance":
        """Prefix the state names of raw acceptors and wrap them."""
        acceptors = list(acceptors)
        if not acceptors:
            raise GadgetError("an intersection instance needs at least one component")
        sigma = require_same_alphabet(*acceptors)
        for pos, d in enumerate(acceptors):
            if d.initial is None:
                raise MissingInitialError(f"component {pos + 1} has no initial state")
        return cls(sigma, tuple(prefix_states(d, component_prefix(i)) for i, d in enumerate(acceptors)))

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Dfa]:
        return iter(self.components)

    @property
    def size(self) -> int:
        return sum(d.size for d in self.components)


@dataclass(frozen=True)
class NormalizedInstance(ReductionInstance):
    """Every initial state has no incoming edge and is not final."""


def _has_incoming(d: Dfa, qi: int) -> bool:
    return any(qi in row for row in d.table)


def _fresh_initial(d: Dfa, prefix: str) -> str:
    name = prefix + "init"
    while d.has_state(name):
        name += "'"
    return name


def normalize_component(d: Dfa, index: int, *, cap: int = DEFAULT_PRODUCT_CAP) -> Dfa:
    """Add a fresh initial q' with δ'(q', a) = δ(q0, a) when q0 has incoming edges."""
    qi = d.initial_index()
    if qi in d.final_indices():
        raise EpsilonAcceptedError(index + 1)
    if not _has_incoming(d, qi):
        return d
    fresh = _fresh_initial(d, component_prefix(index))
    states = (fresh,) + d.states
    # old index i moves to i + 1; the fresh state copies the initial's column
    table = tuple((row[qi] + 1,) + tuple(t + 1 for t in row) for row in d.table)
    normalized = Dfa(states, d.alphabet, table, fresh, d.finals)
    check = equivalent(d, normalized, cap=cap)
    if not check:
        raise InvariantViolation(f"normalizing component {index + 1} changed its language")
    logger.debug("component %d: added fresh initial %s", index + 1, fresh)
    return normalized


def normalize_instance(inst: ReductionInstance, *, cap: int = DEFAULT_PRODUCT_CAP) -> NormalizedInstance:
    """Normalize every component; components accepting ε are rejected."""
    if isinstance(inst, NormalizedInstance):
        return inst
    components = tuple(normalize_component(d, i, cap=cap) for i, d in enumerate(inst.components))
    return NormalizedInstance(inst.sigma, components)


def _manifest_entries(text: str) -> Iterator[str]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def load_instance(manifest: str | Path, *, sigma: Optional[Alphabet] = None) -> ReductionInstance:
    """Read a manifest listing component DFA files, relative to the manifest directory."""
    path = Path(manifest)
    base = path.parent
    acceptors = [load_dfa(base / entry) for entry in _manifest_entries(path.read_text(encoding="utf-8"))]
    if not acceptors:
        raise GadgetError(f"{path}: manifest lists no component automata")
    inst = ReductionInstance.from_acceptors(acceptors)
    if sigma is not None and inst.sigma != sigma:
        raise GadgetError(f"{path}: components are over {list(inst.sigma)}, expected {list(sigma)}")
    logger.info("loaded %d components (%d states) from %s", len(inst), inst.size, path)
    return inst
