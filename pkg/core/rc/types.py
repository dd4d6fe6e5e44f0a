from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from core.automata.dfa import Dfa
from core.automata.subsets import SearchStats
from core.errors import InvariantViolation


class RcMethod(str, Enum):
    polynomial_1 = "polynomial-1"
    polynomial_2 = "polynomial-2"
    exhaustive = "exhaustive"
    bound_only = "bound-only"


@dataclass(frozen=True)
class RcReport:
    """Reset complexity of Syn(d) for the presenting automaton d.

    ``witness_msa`` is a minimal synchronizing automaton with the same reset
    words when the value is exact; a bound-only report carries no upper bound.
    """

    input_size: int
    rc_lower: int
    rc_upper: Optional[int]
    exact: bool
    method: RcMethod
    witness_msa: Optional[Dfa] = None
    sc: Optional[int] = None
    stats: SearchStats = field(default_factory=SearchStats, compare=False)

    def __post_init__(self) -> None:
        if self.rc_upper is not None and self.rc_lower > self.rc_upper:
            raise InvariantViolation(f"rc bounds crossed: {self.rc_lower} > {self.rc_upper}")
        if self.exact and self.rc_lower != self.rc_upper:
            raise InvariantViolation("exact report with distinct bounds")
        if self.witness_msa is not None and self.witness_msa.size != self.rc_upper:
            raise InvariantViolation(
                f"witness has {self.witness_msa.size} states, reported rc is {self.rc_upper}"
            )
        if self.exact and self.sc is not None and self.rc_upper > self.sc:
            raise InvariantViolation(f"rc {self.rc_upper} exceeds sc {self.sc}")

    @property
    def rc(self) -> Optional[int]:
        return self.rc_upper if self.exact else None
