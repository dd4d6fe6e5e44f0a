"""Exception hierarchy shared by every core package.

Operations raise these instead of returning sentinel values; the CLI maps any
``SyncIdealError`` to exit code 2.
"""

from __future__ import annotations

from typing import Optional


class SyncIdealError(Exception):
    """Base class for all toolkit errors."""


class DfaFormatError(SyncIdealError):
    """Malformed automaton document; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class DfaValidationError(SyncIdealError):
    """Structurally invalid automaton (incomplete transitions, bad members)."""


class UnknownSymbolError(SyncIdealError):
    """A state or letter token that the automaton does not declare."""


class AlphabetMismatchError(SyncIdealError):
    pass


class MissingInitialError(SyncIdealError):
    pass


class CapExceededError(SyncIdealError):
    """A subset/pair/product exploration outgrew its configured cap."""

    def __init__(self, what: str, cap: int, required: int):
        self.what = what
        self.cap = cap
        self.required = required
        super().__init__(f"{what} needs at least {required} nodes, cap is {cap}")


class GadgetError(SyncIdealError):
    """Reduction gadget preconditions violated (name clash, sink, order)."""


class EpsilonAcceptedError(SyncIdealError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"component {index}: epsilon accepted, cannot normalize")


class NotSynchronizingError(SyncIdealError):
    pass


class EnumerationBudgetError(SyncIdealError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"enumeration needs {required} candidate tables, budget is {budget}")


class MorphismError(SyncIdealError):
    pass


class InvariantViolation(SyncIdealError):
    """An internal cross-check failed; carries the offending instance in the message."""
