"""Command-line rendering of words."""

from __future__ import annotations

from typing import List, Optional, Sequence

from core.automata.dfa import Alphabet, Word
from core.errors import UnknownSymbolError

EPSILON_SPELLINGS = ("", "ε", "eps", "epsilon")


def parse_word(text: Optional[str], alphabet: Alphabet) -> Word:
    """Whitespace-separated letters; a contiguous string is split into characters
    when every letter of the alphabet is a single character."""
    text = (text or "").strip()
    if text in EPSILON_SPELLINGS and text not in alphabet:
        return ()
    tokens = text.split()
    if len(tokens) == 1 and tokens[0] not in alphabet and all(len(letter) == 1 for letter in alphabet):
        tokens = list(tokens[0])
    for token in tokens:
        if token not in alphabet:
            raise UnknownSymbolError(f"word letter {token!r} is not in the alphabet {list(alphabet)}")
    return tuple(tokens)


def word_list(word: Optional[Sequence[str]]) -> Optional[List[str]]:
    return None if word is None else list(word)
