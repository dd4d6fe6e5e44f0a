"""Search nodes and verdict containers for the reset-language deciders."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from core.automata.dfa import Alphabet, Dfa, Word, format_word
from core.automata.subsets import SearchStats
from core.errors import InvariantViolation
from core.sync.reset import is_reset_word


class Verdict(str, Enum):
    holds = "holds"
    fails = "fails"


class Direction(str, Enum):
    """Which input the witness is a reset word for."""

    a_not_b = "a-not-b"
    b_not_a = "b-not-a"


@dataclass(frozen=True)
class SubsetPairFrontier:
    """Node (δ1(Q1, w), δ2(Q2, w)) as bitmasks, with a backpointer spelling w."""

    node: Tuple[int, int]
    parent: Optional[Tuple["SubsetPairFrontier", int]] = None

    def child(self, node: Tuple[int, int], letter: int) -> "SubsetPairFrontier":
        return SubsetPairFrontier(node, (self, letter))

    def word(self, alphabet: Alphabet) -> Word:
        letters: List[str] = []
        entry: SubsetPairFrontier = self
        while entry.parent is not None:
            entry, li = entry.parent
            letters.append(alphabet.letters[li])
        return tuple(reversed(letters))


@dataclass(frozen=True)
class DecisionOutcome:
    """Verdict of an inclusion/equality question.

    ``witness`` is set exactly when the verdict fails because some word is reset
    for one input and not the other. ``gap`` carries the separating word of a
    strict inclusion that holds; ``reason`` explains a failure without witness.
    """

    verdict: Verdict
    witness: Optional[Word] = None
    direction: Optional[Direction] = None
    reason: Optional[str] = None
    gap: Optional[Word] = None
    stats: SearchStats = field(default_factory=SearchStats, compare=False)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.holds

    @classmethod
    def holding(cls, stats: SearchStats, gap: Optional[Word] = None) -> "DecisionOutcome":
        return cls(Verdict.holds, gap=gap, stats=stats)

    @classmethod
    def failing(
        cls,
        a: Dfa,
        b: Dfa,
        witness: Word,
        direction: Direction,
        stats: SearchStats,
    ) -> "DecisionOutcome":
        """Build a failing outcome after re-checking the witness on both inputs."""
        reset_a = is_reset_word(a, witness)
        reset_b = is_reset_word(b, witness)
        expected = (True, False) if direction is Direction.a_not_b else (False, True)
        if (reset_a, reset_b) != expected:
            raise InvariantViolation(
                f"witness {format_word(witness)!r} does not separate {direction.value}: "
                f"reset for a={reset_a}, for b={reset_b}"
            )
        return cls(Verdict.fails, witness=witness, direction=direction, stats=stats)
