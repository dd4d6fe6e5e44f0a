"""Complete deterministic automata, words, and their extended transition function.

A ``Dfa`` is immutable. States and letters are kept as ordered token tuples; the
transition function is stored as an index table ``table[letter][state]`` so the
exponential searches elsewhere in ``core`` can work on integers and bitmasks.
State identity is by token name: two automata are equal only when their names,
orders, transitions and acceptance data coincide.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from core.errors import (
    AlphabetMismatchError,
    DfaValidationError,
    MissingInitialError,
    UnknownSymbolError,
)

Word = Tuple[str, ...]
EMPTY_WORD: Word = ()

_BAD_TOKEN = re.compile(r"[\s:#]")


def check_token(token: str, kind: str = "token") -> str:
    """Return ``token`` if usable in the file format, else raise DfaValidationError."""
    if not isinstance(token, str) or not token or _BAD_TOKEN.search(token):
        raise DfaValidationError(f"invalid {kind} {token!r}: must be non-empty without whitespace, ':' or '#'")
    return token


def format_word(word: Sequence[str]) -> str:
    """Human rendering of a word: space-separated letters, ``ε`` when empty."""
    return " ".join(word) if word else "ε"


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of letter tokens; the order drives every tie-break downstream."""

    letters: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise DfaValidationError("alphabet must contain at least one letter")
        index: Dict[str, int] = {}
        for letter in letters:
            check_token(letter, "letter")
            if letter in index:
                raise DfaValidationError(f"duplicate letter {letter!r}")
            index[letter] = len(index)
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, letters: Iterable[str] | str) -> "Alphabet":
        """Build from an iterable or a whitespace-separated string."""
        if isinstance(letters, str):
            letters = letters.split()
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self._index

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise UnknownSymbolError(f"unknown letter {letter!r}") from None


@dataclass(frozen=True)
class Dfa:
    """Complete DFA ``<Q, Σ, δ>``, optionally decorated with ``q0`` and ``F``."""

    states: Tuple[str, ...]
    alphabet: Alphabet
    table: Tuple[Tuple[int, ...], ...]
    initial: Optional[str] = None
    finals: FrozenSet[str] = frozenset()
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        states = tuple(self.states)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        if not states:
            raise DfaValidationError("automaton must have at least one state")
        index: Dict[str, int] = {}
        for state in states:
            check_token(state, "state")
            if state in index:
                raise DfaValidationError(f"duplicate state {state!r}")
            index[state] = len(index)
        object.__setattr__(self, "_index", index)
        if len(self.table) != len(self.alphabet):
            raise DfaValidationError("transition table must have one row per letter")
        n = len(states)
        for letter, row in zip(self.alphabet, self.table):
            if len(row) != n:
                raise DfaValidationError(f"letter {letter!r} is not defined on every state")
            for target in row:
                if not 0 <= target < n:
                    raise DfaValidationError(f"letter {letter!r} leads outside the state set")
        if self.initial is not None and self.initial not in index:
            raise DfaValidationError(f"initial state {self.initial!r} is not a state")
        stray = sorted(self.finals - set(states))
        if stray:
            raise DfaValidationError(f"final states {stray} are not states")

    # construction
    @classmethod
    def build(
        cls,
        states: Sequence[str],
        alphabet: Alphabet | Iterable[str],
        delta: Mapping[Tuple[str, str], str],
        initial: Optional[str] = None,
        finals: Iterable[str] = (),
    ) -> "Dfa":
        """Validate a name-level transition map and return the automaton."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet.of(alphabet)
        states = tuple(states)
        position = {state: idx for idx, state in enumerate(states)}
        for (state, letter), target in delta.items():
            if state not in position:
                raise UnknownSymbolError(f"unknown state {state!r}")
            if letter not in alphabet:
                raise UnknownSymbolError(f"unknown letter {letter!r}")
            if target not in position:
                raise UnknownSymbolError(f"unknown state {target!r}")
        table: List[Tuple[int, ...]] = []
        for letter in alphabet:
            row = []
            for state in states:
                target = delta.get((state, letter))
                if target is None:
                    raise DfaValidationError(f"missing transition for state {state!r} and letter {letter!r}")
                row.append(position[target])
            table.append(tuple(row))
        return cls(states, alphabet, tuple(table), initial, frozenset(finals))

    def with_acceptance(self, initial: Optional[str], finals: Iterable[str]) -> "Dfa":
        return Dfa(self.states, self.alphabet, self.table, initial, frozenset(finals))

    def without_acceptance(self) -> "Dfa":
        return Dfa(self.states, self.alphabet, self.table)

    # lookups
    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def is_acceptor(self) -> bool:
        return self.initial is not None

    @property
    def delta(self) -> Dict[Tuple[str, str], str]:
        """Name-level view of the transition function."""
        return {
            (state, letter): self.states[self.table[li][qi]]
            for qi, state in enumerate(self.states)
            for li, letter in enumerate(self.alphabet)
        }

    def index(self, state: str) -> int:
        try:
            return self._index[state]
        except KeyError:
            raise UnknownSymbolError(f"unknown state {state!r}") from None

    def has_state(self, state: str) -> bool:
        return state in self._index

    def step(self, state: str, letter: str) -> str:
        return self.states[self.table[self.alphabet.index(letter)][self.index(state)]]

    def letter_ids(self, word: Sequence[str]) -> List[int]:
        """Letter indices of ``word``; raises UnknownSymbolError on foreign letters."""
        return [self.alphabet.index(letter) for letter in word]

    def initial_index(self) -> int:
        if self.initial is None:
            raise MissingInitialError("automaton has no initial state")
        return self._index[self.initial]

    def final_indices(self) -> FrozenSet[int]:
        return frozenset(self._index[state] for state in self.finals)

    def sinks(self) -> List[str]:
        """States fixed by every letter, in state order."""
        return [
            state
            for qi, state in enumerate(self.states)
            if all(row[qi] == qi for row in self.table)
        ]


def require_same_alphabet(*automata: Dfa) -> Alphabet:
    """Return the shared alphabet or raise AlphabetMismatchError."""
    first = automata[0].alphabet
    for other in automata[1:]:
        if other.alphabet.letters != first.letters:
            raise AlphabetMismatchError(
                f"alphabets differ: {list(first.letters)} vs {list(other.alphabet.letters)}"
            )
    return first


def apply(d: Dfa, state: str, word: Sequence[str]) -> str:
    """Extended transition function δ(s, w); δ(s, ε) = s."""
    qi = d.index(state)
    for li in d.letter_ids(word):
        qi = d.table[li][qi]
    return d.states[qi]


def image(d: Dfa, subset: Iterable[str], word: Sequence[str]) -> FrozenSet[str]:
    """δ(S, w) for a set of states S."""
    current = {d.index(state) for state in subset}
    for li in d.letter_ids(word):
        row = d.table[li]
        current = {row[qi] for qi in current}
    return frozenset(d.states[qi] for qi in current)


def accepts(d: Dfa, word: Sequence[str]) -> bool:
    """True iff δ(q0, w) ∈ F."""
    qi = d.initial_index()
    for li in d.letter_ids(word):
        qi = d.table[li][qi]
    return d.states[qi] in d.finals


class DfaBuilder:
    """Incremental construction helper; completeness is enforced at ``build()``."""

    def __init__(self, alphabet: Alphabet | Iterable[str]):
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet.of(alphabet)
        self.states: List[str] = []
        self.delta: Dict[Tuple[str, str], str] = {}
        self.initial: Optional[str] = None
        self.finals: set[str] = set()

    def add_state(self, state: str, *, initial: bool = False, final: bool = False) -> "DfaBuilder":
        if state not in self.states:
            self.states.append(state)
        if initial:
            self.initial = state
        if final:
            self.finals.add(state)
        return self

    def add_transition(self, state: str, letter: str, target: str) -> "DfaBuilder":
        self.delta[(state, letter)] = target
        return self

    def add_transitions(self, state: str, letters: Iterable[str], target: str) -> "DfaBuilder":
        for letter in letters:
            self.delta[(state, letter)] = target
        return self

    def build(self) -> Dfa:
        return Dfa.build(self.states, self.alphabet, self.delta, self.initial, self.finals)
