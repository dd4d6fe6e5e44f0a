"""Gadget automata of the intersection reduction.

Given a normalized instance over Σ, ``build_gadget_A`` glues the components into
one automaton over Δ = Σ ∪ {x, y, z} whose reset words encode the intersection,
``build_gadget_B`` is the three-state automaton whose reset words form the ideal
I = (Σ∪{x})*yΔ* ∪ (Σ∪{x})*zΔ⁺, and ``build_witness_I`` accepts I directly.
"""

from __future__ import annotations

import logging
from typing import Sequence, Tuple

from core.automata.dfa import Alphabet, Dfa, DfaBuilder, require_same_alphabet
from core.automata.ops import product_names
from core.errors import GadgetError
from core.gadgets.instance import NormalizedInstance

logger = logging.getLogger(__name__)

GADGET_LETTERS: Tuple[str, str, str] = ("x", "y", "z")
SINK_STATE = "s"
AUX_STATE = "h"


def gadget_alphabet(sigma: Alphabet | Sequence[str], extra: Sequence[str] = GADGET_LETTERS) -> Alphabet:
    """Δ: the letters of Σ in order, followed by the fresh letters x, y, z."""
    letters = tuple(sigma)
    clash = [letter for letter in extra if letter in letters]
    if clash:
        raise GadgetError(f"gadget letters {clash} already occur in the base alphabet")
    return Alphabet(letters + tuple(extra))


def _base_letters(delta: Alphabet) -> Tuple[str, ...]:
    return tuple(letter for letter in delta if letter not in GADGET_LETTERS)


def build_gadget_A(inst: NormalizedInstance) -> Dfa:
    """The automaton 𝒜 with states ⋃Qi ∪ {s, h}; s is its unique sink."""
    if not isinstance(inst, NormalizedInstance):
        raise GadgetError("gadget A needs a normalized instance")
    reserved = [state for comp in inst.components for state in comp.states if state in (SINK_STATE, AUX_STATE)]
    if reserved:
        raise GadgetError(
            f"component states {reserved} clash with the gadget states {SINK_STATE!r} and {AUX_STATE!r}"
        )
    x, y, z = GADGET_LETTERS
    delta = gadget_alphabet(inst.sigma)
    builder = DfaBuilder(delta)
    for comp in inst.components:
        for state in comp.states:
            builder.add_state(state)
            for letter in inst.sigma:
                builder.add_transition(state, letter, comp.step(state, letter))
            builder.add_transition(state, x, comp.initial)
            builder.add_transition(state, y, SINK_STATE)
            builder.add_transition(state, z, SINK_STATE if state in comp.finals else AUX_STATE)
    for state in (SINK_STATE, AUX_STATE):
        builder.add_state(state).add_transitions(state, delta, SINK_STATE)
    gadget = builder.build()
    logger.debug("gadget A: %d states over %d letters", gadget.size, len(delta))
    return gadget


def build_gadget_B(sigma: Alphabet | Sequence[str]) -> Dfa:
    """The automaton ℬ on {p1, p2, s} with Syn(ℬ) = I."""
    x, y, z = GADGET_LETTERS
    delta = gadget_alphabet(sigma)
    builder = DfaBuilder(delta).add_state("p1").add_state("p2").add_state(SINK_STATE)
    builder.add_transitions("p1", _base_letters(delta) + (x,), "p1")
    builder.add_transition("p1", y, SINK_STATE)
    builder.add_transition("p1", z, "p2")
    builder.add_transitions("p2", delta, SINK_STATE)
    builder.add_transitions(SINK_STATE, delta, SINK_STATE)
    return builder.build()


def build_witness_I(sigma: Alphabet | Sequence[str]) -> Dfa:
    """Three-state acceptor of the ideal I."""
    x, y, z = GADGET_LETTERS
    delta = gadget_alphabet(sigma)
    builder = DfaBuilder(delta)
    builder.add_state("A0", initial=True).add_state("A1").add_state("ACC", final=True)
    builder.add_transitions("A0", _base_letters(delta) + (x,), "A0")
    builder.add_transition("A0", y, "ACC")
    builder.add_transition("A0", z, "A1")
    builder.add_transitions("A1", delta, "ACC")
    builder.add_transitions("ACC", delta, "ACC")
    return builder.build()


def product_sync(a: Dfa, b: Dfa) -> Dfa:
    """Full product on Q1 × Q2; Syn(a × b) = Syn(a) ∩ Syn(b)."""
    alphabet = require_same_alphabet(a, b)
    width = b.size
    names = product_names((a, b), [(i, j) for i in range(a.size) for j in range(width)])
    table = tuple(
        tuple(row_a[i] * width + row_b[j] for i in range(a.size) for j in range(width))
        for row_a, row_b in zip(a.table, b.table)
    )
    return Dfa(names, alphabet, table)
