"""Automaton families and seeded random generators for tests and benchmarks."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from core.automata.dfa import Alphabet, Dfa
from core.errors import DfaValidationError, NotSynchronizingError
from core.sync.reset import is_synchronizing


def cerny_automaton(n: int, letters: Sequence[str] = ("a", "b")) -> Dfa:
    """Černý automaton: ``a`` rotates 0..n-1, ``b`` sends 0 to 1 and fixes the rest."""
    if n < 1:
        raise DfaValidationError("Černý automaton needs n >= 1")
    rotate, merge = letters
    states = tuple(str(i) for i in range(n))
    table = (
        tuple((i + 1) % n for i in range(n)),
        tuple(1 % n if i == 0 else i for i in range(n)),
    )
    return Dfa(states, Alphabet((rotate, merge)), table)


def random_dfa(rng: random.Random, n: int, letters: Iterable[str] | Alphabet) -> Dfa:
    alphabet = letters if isinstance(letters, Alphabet) else Alphabet(tuple(letters))
    states = tuple(f"q{i}" for i in range(n))
    table = tuple(tuple(rng.randrange(n) for _ in range(n)) for _ in alphabet)
    return Dfa(states, alphabet, table)


def random_synchronizing_dfa(
    rng: random.Random,
    n: int,
    letters: Iterable[str] | Alphabet,
    *,
    attempts: int = 10_000,
) -> Dfa:
    """Rejection-sample ``random_dfa`` until the draw is synchronizing."""
    alphabet = letters if isinstance(letters, Alphabet) else Alphabet(tuple(letters))
    for _ in range(attempts):
        d = random_dfa(rng, n, alphabet)
        if is_synchronizing(d):
            return d
    raise NotSynchronizingError(f"no synchronizing {n}-state draw in {attempts} attempts")
