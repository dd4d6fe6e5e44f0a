from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Optional

from app.deps import Settings, get_settings
from app.schemas.common import CliVerdict, StatsPayload
from app.schemas.complexity import RcPayload
from app.utils.tracing import traced_span
from core.automata.fileformat import load_dfa, save_dfa, serialize_dfa
from core.rc.report import rc_report

logger = logging.getLogger(__name__)


def reset_complexity(
    path: str | Path,
    limit: Optional[int] = None,
    *,
    out: Optional[str | Path] = None,
    timing: bool = False,
    settings: Optional[Settings] = None,
) -> Dict:
    """rc of Syn(d) up to ``limit`` states, with sc and the witness MSA when exact."""
    settings = settings or get_settings()
    limit = limit or settings.rc_default_limit
    d = load_dfa(path)
    with traced_span("rc.report", states=d.size, letters=len(d.alphabet), limit=limit):
        report = rc_report(d, limit, budget=settings.enumeration_budget, subset_cap=settings.subset_cap)
    logger.info("rc %s via %s", report.rc_upper if report.exact else f">= {report.rc_lower}", report.method.value)

    details: Dict = {}
    if report.witness_msa is not None:
        if out is not None:
            details["output"] = str(save_dfa(report.witness_msa, out))
        else:
            details["witness_msa"] = serialize_dfa(report.witness_msa)
    return RcPayload(
        verdict=CliVerdict.exact if report.exact else CliVerdict.bound_only,
        input_size=report.input_size,
        rc_lower=report.rc_lower,
        rc_upper=report.rc_upper,
        exact=report.exact,
        method=report.method,
        sc=report.sc,
        limit=limit,
        stats=StatsPayload.from_stats(report.stats, timing),
        details=details,
    ).to_dict()
