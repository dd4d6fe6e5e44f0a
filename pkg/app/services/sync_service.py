"""Synchronization queries on a single automaton file: check, member, synlang, sc."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Optional

from app.deps import Settings, get_settings
from app.schemas.common import CliPayload, CliVerdict, StatsPayload
from app.schemas.complexity import ScPayload
from app.utils.tracing import traced_span
from app.utils.words import parse_word, word_list
from core.automata.dfa import image
from core.automata.fileformat import load_dfa, save_dfa, serialize_dfa
from core.automata.ops import minimize
from core.sync.power import power_automaton
from core.sync.reset import is_minimal_reset_word, is_synchronizing, reset_letters, shortest_reset_word

logger = logging.getLogger(__name__)


def check(path: str | Path, *, want_word: bool = True, timing: bool = False, settings: Optional[Settings] = None) -> Dict:
    """Synchronization verdict plus, unless disabled, the shortest reset word."""
    settings = settings or get_settings()
    d = load_dfa(path)
    with traced_span("sync.check", states=d.size, letters=len(d.alphabet)):
        details = {"states": d.size, "letters": len(d.alphabet), "reset_letters": reset_letters(d)}
        if not is_synchronizing(d):
            return CliPayload(
                command="check",
                verdict=CliVerdict.not_synchronizing,
                message="some pair of states can never be merged",
                details=details,
            ).to_dict()
        if not want_word:
            return CliPayload(command="check", verdict=CliVerdict.synchronizing, details=details).to_dict()
        report = shortest_reset_word(d, cap=settings.subset_cap)
        details["length"] = report.shortest_length
        return CliPayload(
            command="check",
            verdict=CliVerdict.synchronizing,
            witness=word_list(report.shortest_reset),
            stats=StatsPayload.from_stats(report.stats, timing),
            details=details,
        ).to_dict()


def member(path: str | Path, word: Optional[str], *, settings: Optional[Settings] = None) -> Dict:
    """Is the given word a reset word?"""
    d = load_dfa(path)
    w = parse_word(word, d.alphabet)
    with traced_span("sync.member", states=d.size, length=len(w)):
        reached = image(d, d.states, w)
        is_reset = len(reached) == 1
        details = {
            "image": [state for state in d.states if state in reached],
            "minimal": is_reset and is_minimal_reset_word(d, w),
        }
    return CliPayload(
        command="member",
        verdict=CliVerdict.reset if is_reset else CliVerdict.not_reset,
        witness=list(w),
        details=details,
    ).to_dict()


def synlang(
    path: str | Path,
    out: Optional[str | Path] = None,
    *,
    timing: bool = False,
    settings: Optional[Settings] = None,
) -> Dict:
    """Minimal acceptor of Syn(d); written to ``out`` or returned as text."""
    settings = settings or get_settings()
    d = load_dfa(path)
    with traced_span("sync.synlang", states=d.size, cap=settings.subset_cap):
        power = power_automaton(d, cap=settings.subset_cap)
        minimal = minimize(power.underlying)
    details: Dict = {
        "power_states": power.underlying.size,
        "minimal_states": minimal.size,
        "sink_reachable": power.sink_reachable,
    }
    if out is not None:
        details["output"] = str(save_dfa(minimal, out))
    else:
        details["dfa"] = serialize_dfa(minimal)
    return CliPayload(
        command="synlang",
        verdict=CliVerdict.generated,
        stats=StatsPayload.from_stats(power.stats, timing),
        details=details,
    ).to_dict()


def state_complexity_of(path: str | Path, *, timing: bool = False, settings: Optional[Settings] = None) -> Dict:
    """sc(Syn(d)) with the size of the unminimized power automaton for comparison."""
    settings = settings or get_settings()
    d = load_dfa(path)
    with traced_span("sync.sc", states=d.size, cap=settings.subset_cap):
        power = power_automaton(d, cap=settings.subset_cap)
        sc = minimize(power.underlying).size
    logger.debug("sc=%d from %d power states", sc, power.underlying.size)
    return ScPayload(
        verdict=CliVerdict.computed,
        sc=sc,
        power_states=power.underlying.size,
        stats=StatsPayload.from_stats(power.stats, timing),
    ).to_dict()
