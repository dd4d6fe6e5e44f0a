from __future__ import annotations

from typing import Optional

from pydantic import Field

from app.schemas.common import CliPayload
from core.rc.types import RcMethod


class RcPayload(CliPayload):
    command: str = "rc"
    input_size: int = Field(ge=1)
    rc_lower: int = Field(ge=1)
    rc_upper: Optional[int] = None
    exact: bool
    method: RcMethod
    sc: Optional[int] = None
    limit: int = Field(ge=1)


class ScPayload(CliPayload):
    command: str = "sc"
    sc: int = Field(ge=1)
    power_states: int = Field(ge=1)
