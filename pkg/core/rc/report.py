"""Reset complexity report: polynomial tests first, exhaustive search from three states on."""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Optional

from core.automata.dfa import Dfa
from core.errors import CapExceededError
from core.rc.polynomial import rc_is_1, rc_is_2, require_synchronizing, two_state_witness
from core.rc.search import DEFAULT_ENUMERATION_BUDGET, rc_upper_search, verify_witness
from core.rc.types import RcMethod, RcReport
from core.sync.power import DEFAULT_SUBSET_CAP, state_complexity

logger = logging.getLogger(__name__)

DEFAULT_RC_LIMIT = 3


def _state_complexity_or_none(d: Dfa, cap: int) -> Optional[int]:
    try:
        return state_complexity(d, cap=cap)
    except CapExceededError as exc:
        logger.warning("sc skipped: %s", exc)
        return None


def rc_report(
    d: Dfa,
    limit: int = DEFAULT_RC_LIMIT,
    *,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> RcReport:
    require_synchronizing(d)
    sc = _state_complexity_or_none(d, subset_cap)
    n = d.size
    if rc_is_1(d):
        return RcReport(n, 1, 1, True, RcMethod.polynomial_1, d.without_acceptance(), sc)
    if rc_is_2(d):
        witness = two_state_witness(d)
        verify_witness(witness, d)
        return RcReport(n, 2, 2, True, RcMethod.polynomial_2, witness, sc)
    searched = rc_upper_search(d, limit, start=3, budget=budget, subset_cap=subset_cap)
    return replace(searched, sc=sc)
