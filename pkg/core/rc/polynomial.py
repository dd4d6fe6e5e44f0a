"""Polynomial tests for reset complexity one and two.

rc(L) = 1 iff L = Σ*, which for a synchronizing d means a single state. A
two-state synchronizing automaton has constant letters and permutations only, so
its reset words are Σ*ΓΣ* where Γ collects the constant letters. Syn(d) has
that shape iff no word avoiding the reset letters Γ of d is itself a reset word,
that is iff d restricted to Σ∖Γ is not synchronizing.
"""

from __future__ import annotations

import logging
from typing import Optional

from core.automata.dfa import Dfa
from core.automata.ops import restrict_alphabet
from core.errors import DfaValidationError, NotSynchronizingError
from core.sync.reset import is_synchronizing, reset_letters

logger = logging.getLogger(__name__)


def require_synchronizing(d: Dfa) -> None:
    if not is_synchronizing(d):
        raise NotSynchronizingError("reset complexity is defined for synchronizing automata only")


def residual_automaton(d: Dfa) -> Optional[Dfa]:
    """d over Σ∖Γ, or None when every letter is a reset letter."""
    gamma = set(reset_letters(d))
    rest = [letter for letter in d.alphabet if letter not in gamma]
    if not rest:
        return None
    return restrict_alphabet(d, rest)


def rc_is_1(d: Dfa) -> bool:
    require_synchronizing(d)
    return d.size == 1


def _residual_synchronizing(d: Dfa) -> bool:
    residual = residual_automaton(d)
    if residual is None:
        logger.debug("all letters reset; empty residual counts as non-synchronizing")
        return False
    return is_synchronizing(residual)


def rc_is_2(d: Dfa) -> bool:
    require_synchronizing(d)
    if d.size == 1:
        return False
    return not _residual_synchronizing(d)


def rc_lower_bound_3(d: Dfa) -> bool:
    """rc ≥ 3: neither one state suffices nor Σ*ΓΣ* describes the reset words."""
    require_synchronizing(d)
    return d.size != 1 and _residual_synchronizing(d)


def two_state_witness(d: Dfa) -> Dfa:
    """Two-state automaton with reset words Σ*ΓΣ*; requires rc_is_2(d)."""
    if not rc_is_2(d):
        raise DfaValidationError("no two-state automaton has the same reset words")
    gamma = set(reset_letters(d))
    table = tuple((0, 0) if letter in gamma else (0, 1) for letter in d.alphabet)
    return Dfa(("0", "1"), d.alphabet, table)
