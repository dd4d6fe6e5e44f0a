from __future__ import annotations

from enum import Enum
from typing import Any, Dict, List, Optional

import orjson
from pydantic import BaseModel, Field

from core.automata.subsets import SearchStats


class CliVerdict(str, Enum):
    synchronizing = "synchronizing"
    not_synchronizing = "not synchronizing"
    reset = "reset"
    not_reset = "not reset"
    holds = "holds"
    fails = "fails"
    ideal = "ideal"
    not_ideal = "not ideal"
    nonempty = "nonempty"
    empty = "empty"
    exact = "exact"
    bound_only = "bound-only"
    generated = "generated"
    computed = "computed"
    error = "error"


class StatsPayload(BaseModel):
    nodes_expanded: int = 0
    elapsed_ms: Optional[int] = None

    @classmethod
    def from_stats(cls, stats: Optional[SearchStats], timing: bool = False) -> Optional["StatsPayload"]:
        if stats is None:
            return None
        return cls(nodes_expanded=stats.nodes_expanded, elapsed_ms=stats.elapsed_ms if timing else None)


class CliPayload(BaseModel):
    command: str
    verdict: CliVerdict
    witness: Optional[List[str]] = None
    message: Optional[str] = None
    stats: Optional[StatsPayload] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude_none=True)


class ErrorPayload(BaseModel):
    command: Optional[str] = None
    verdict: CliVerdict = CliVerdict.error
    error: str
    message: str

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude_none=True)


def render_json(payload: Dict[str, Any], indent: int = 2) -> str:
    """Sorted keys; any non-zero indent gives orjson's two-space layout."""
    option = orjson.OPT_SORT_KEYS
    if indent:
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(payload, option=option).decode("utf-8")
