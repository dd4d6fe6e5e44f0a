"""Line-oriented text format for automata.

    alphabet: a b          # letters, in order
    states: q0 q1          # states, in order
    initial: q0            # optional
    final: q1              # optional, may be empty
    q0 a q1                # exactly |states|·|letters| transition lines
    ...

``#`` starts a comment, blank lines are ignored, tokens are whitespace
delimited and may not contain ``:`` or ``#``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Optional, Tuple

from core.automata.dfa import Alphabet, Dfa
from core.errors import DfaFormatError, SyncIdealError

_HEADERS = ("alphabet", "states", "initial", "final")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_dfa(text: str) -> Dfa:
    """Parse and validate an automaton document; errors carry line numbers."""
    headers: Dict[str, Tuple[int, List[str]]] = {}
    transitions: Dict[Tuple[str, str], str] = {}
    letter_set: Dict[str, int] = {}
    state_set: Dict[str, int] = {}
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        last_line = lineno
        if ":" in line:
            key, _, rest = line.partition(":")
            key = key.strip()
            if key not in _HEADERS:
                raise DfaFormatError(f"unknown header {key!r}", lineno)
            if key in headers:
                raise DfaFormatError(f"duplicate {key!r} line", lineno)
            if transitions:
                raise DfaFormatError(f"{key!r} line after transitions", lineno)
            tokens = rest.split()
            headers[key] = (lineno, tokens)
            if key in ("alphabet", "states"):
                seen = letter_set if key == "alphabet" else state_set
                for token in tokens:
                    if token in seen:
                        kind = "letter" if key == "alphabet" else "state"
                        raise DfaFormatError(f"duplicate {kind} declaration {token!r}", lineno)
                    seen[token] = lineno
                if not tokens:
                    raise DfaFormatError(f"empty {key!r} declaration", lineno)
            elif key == "initial" and len(tokens) != 1:
                raise DfaFormatError("'initial' takes exactly one state", lineno)
            continue

        if "alphabet" not in headers or "states" not in headers:
            raise DfaFormatError("transition before 'alphabet' and 'states' declarations", lineno)
        tokens = line.split()
        if len(tokens) != 3:
            raise DfaFormatError(f"expected '<state> <letter> <state>', got {line!r}", lineno)
        source, letter, target = tokens
        for state in (source, target):
            if state not in state_set:
                raise DfaFormatError(f"unknown state {state!r}", lineno)
        if letter not in letter_set:
            raise DfaFormatError(f"unknown letter {letter!r}", lineno)
        if (source, letter) in transitions:
            raise DfaFormatError(f"duplicate transition for state {source!r} and letter {letter!r}", lineno)
        transitions[(source, letter)] = target

    for key in ("alphabet", "states"):
        if key not in headers:
            raise DfaFormatError(f"missing {key!r} declaration", last_line or None)

    states = headers["states"][1]
    letters = headers["alphabet"][1]
    for state in states:
        for letter in letters:
            if (state, letter) not in transitions:
                raise DfaFormatError(
                    f"missing transition for state {state!r} and letter {letter!r}", headers["states"][0]
                )

    initial: Optional[str] = None
    if "initial" in headers:
        lineno, tokens = headers["initial"]
        initial = tokens[0]
        if initial not in state_set:
            raise DfaFormatError(f"unknown initial state {initial!r}", lineno)
    finals: List[str] = []
    if "final" in headers:
        lineno, finals = headers["final"]
        for state in finals:
            if state not in state_set:
                raise DfaFormatError(f"unknown final state {state!r}", lineno)

    try:
        return Dfa.build(states, Alphabet(tuple(letters)), transitions, initial, finals)
    except DfaFormatError:
        raise
    except SyncIdealError as exc:
        raise DfaFormatError(str(exc), headers["alphabet"][0]) from exc


def serialize_dfa(d: Dfa) -> str:
    """Render ``d``; transitions in state order × letter order."""
    lines = [
        "alphabet: " + " ".join(d.alphabet.letters),
        "states: " + " ".join(d.states),
    ]
    if d.initial is not None:
        lines.append(f"initial: {d.initial}")
    if d.initial is not None or d.finals:
        finals = [state for state in d.states if state in d.finals]
        lines.append(("final: " + " ".join(finals)).rstrip())
    for qi, state in enumerate(d.states):
        for li, letter in enumerate(d.alphabet):
            lines.append(f"{state} {letter} {d.states[d.table[li][qi]]}")
    return "\n".join(lines) + "\n"


def load_dfa(path: str | Path) -> Dfa:
    path = Path(path)
    with path.open("r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        return parse_dfa(text)
    except DfaFormatError as exc:
        wrapped = DfaFormatError(f"{path}: {exc}")
        wrapped.line = exc.line
        raise wrapped from exc


def save_dfa(d: Dfa, path: str | Path) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        handle.write(serialize_dfa(d))
    return path
