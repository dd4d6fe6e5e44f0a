"""Binary-alphabet lift of automata with a unique sink.

A letter order d1..dk encodes the k-letter alphabet over {mu, lambda} with the
morphism h̄(dk) = mu^(k-1) lambda. ``binarize`` spreads every non-sink state p
into a column p,1..p,k: mu walks down the column (row k is fixed), and lambda
read in row k applies dk, entering row 1 of the target column or the binary
sink ``zeta`` when dk leads to the sink.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

from core.automata.dfa import Alphabet, Dfa, Word
from core.errors import GadgetError, MorphismError

logger = logging.getLogger(__name__)

BINARY_LETTERS: Tuple[str, str] = ("mu", "lambda")
ZETA = "zeta"
SIGMA_PLACEHOLDER = "<sigma>"
DEFAULT_ORDER_TEMPLATE = "y z <sigma> x"


@dataclass(frozen=True)
class LetterOrder:
    """An enumeration d1..dk of an alphabet."""

    letters: Tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if len(set(self.letters)) != len(self.letters):
            raise GadgetError(f"letter order {list(self.letters)} repeats a letter")

    @classmethod
    def default_for(cls, alphabet: Alphabet | Sequence[str]) -> "LetterOrder":
        """y, z, the base letters in alphabet order, then x; plain alphabet order otherwise."""
        return cls.from_template(DEFAULT_ORDER_TEMPLATE, alphabet)

    @classmethod
    def from_template(cls, template: str, alphabet: Alphabet | Sequence[str]) -> "LetterOrder":
        """Expand ``<sigma>`` to the letters the template does not name, in alphabet order.

        Falls back to plain alphabet order when the expansion is not a permutation.
        """
        letters = tuple(alphabet)
        named = [token for token in template.split() if token != SIGMA_PLACEHOLDER]
        expanded: List[str] = []
        for token in template.split():
            if token == SIGMA_PLACEHOLDER:
                expanded.extend(letter for letter in letters if letter not in named)
            else:
                expanded.append(token)
        if sorted(expanded) != sorted(letters):
            return cls(letters)
        return cls(tuple(expanded))

    @classmethod
    def parse(cls, text: str) -> "LetterOrder":
        return cls(tuple(text.split()))

    def __len__(self) -> int:
        return len(self.letters)

    def position(self, letter: str) -> int:
        """1-based k with dk = letter."""
        try:
            return self.letters.index(letter) + 1
        except ValueError:
            raise MorphismError(f"letter {letter!r} is not in the order {list(self.letters)}") from None

    def check(self, alphabet: Alphabet) -> None:
        if sorted(self.letters) != sorted(alphabet.letters):
            raise GadgetError(
                f"letter order {list(self.letters)} is not a permutation of {list(alphabet.letters)}"
            )


def morphism_hbar(word: Sequence[str], order: LetterOrder, binary: Tuple[str, str] = BINARY_LETTERS) -> Word:
    mu, lam = binary
    out: List[str] = []
    for letter in word:
        out.extend([mu] * (order.position(letter) - 1))
        out.append(lam)
    return tuple(out)


def morphism_h(word: Sequence[str], order: LetterOrder, binary: Tuple[str, str] = BINARY_LETTERS) -> Word:
    """Decode mu^k lambda blocks; k ≥ |order| - 1 maps to the last letter."""
    mu, lam = binary
    out: List[str] = []
    k = 0
    for letter in word:
        if letter == mu:
            k += 1
        elif letter == lam:
            out.append(order.letters[min(k, len(order) - 1)])
            k = 0
        else:
            raise MorphismError(f"letter {letter!r} is neither {mu!r} nor {lam!r}")
    if k:
        raise MorphismError(f"word must end in {lam!r} to factor into blocks")
    return tuple(out)


def cell_name(state: str, row: int) -> str:
    return f"{state},{row}"


def binarize(d: Dfa, order: LetterOrder, binary: Tuple[str, str] = BINARY_LETTERS) -> Dfa:
    """Lift ``d`` to a two-letter automaton of size k·(|Q|−1) + 1."""
    sinks = d.sinks()
    if len(sinks) != 1:
        raise GadgetError(f"binary lift needs exactly one sink state, found {len(sinks)}")
    order.check(d.alphabet)
    k = len(order)
    if k < 2:
        raise GadgetError("binary lift needs at least two letters")
    sink = d.index(sinks[0])
    columns = [qi for qi in range(d.size) if qi != sink]
    column_of = {qi: pos for pos, qi in enumerate(columns)}
    zeta = len(columns) * k

    def cell(qi: int, row: int) -> int:
        return column_of[qi] * k + (row - 1)

    mu_row: List[int] = []
    lambda_row: List[int] = []
    for qi in columns:
        for row in range(1, k + 1):
            mu_row.append(cell(qi, min(row + 1, k)))
            target = d.table[d.alphabet.index(order.letters[row - 1])][qi]
            lambda_row.append(zeta if target == sink else cell(target, 1))
    mu_row.append(zeta)
    lambda_row.append(zeta)

    names = tuple(cell_name(d.states[qi], row) for qi in columns for row in range(1, k + 1)) + (ZETA,)
    lifted = Dfa(names, Alphabet(binary), (tuple(mu_row), tuple(lambda_row)))
    logger.debug("binary lift: %d states from %d", lifted.size, d.size)
    return lifted


def first_row(lifted: Dfa) -> FrozenSet[str]:
    """Row-1 cells plus zeta: the copy of the source state set inside the lift."""
    return frozenset(state for state in lifted.states if state.endswith(",1") or state == ZETA)
