"""Language decisions between automaton files.

equal/include/strict compare reset-word languages; ideal and intersect work on
the accepted languages of acceptors.
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Optional, Sequence

from app.deps import Settings, get_settings
from app.schemas.common import CliPayload, CliVerdict, StatsPayload
from app.utils.tracing import traced_span
from app.utils.words import word_list
from core.automata.fileformat import load_dfa
from core.automata.subsets import SearchStats
from core.decide.ideal import ideal_violation
from core.decide.inclusion import syn_equality, syn_inclusion, syn_strict_inclusion
from core.decide.intersection import intersection_nonempty
from core.decide.outcome import DecisionOutcome
from core.gadgets.instance import ReductionInstance

_DECIDERS = {
    "equal": syn_equality,
    "include": syn_inclusion,
    "strict": syn_strict_inclusion,
}


def _outcome_payload(command: str, outcome: DecisionOutcome, timing: bool) -> Dict:
    details: Dict = {}
    if outcome.direction is not None:
        details["direction"] = outcome.direction.value
    if outcome.reason is not None:
        details["reason"] = outcome.reason
    if outcome.gap is not None:
        details["gap"] = list(outcome.gap)
    message = None
    if outcome.witness is not None:
        side = "first" if outcome.direction.value == "a-not-b" else "second"
        message = f"witness is a reset word for the {side} automaton only"
    return CliPayload(
        command=command,
        verdict=CliVerdict(outcome.verdict.value),
        witness=word_list(outcome.witness),
        message=message,
        stats=StatsPayload.from_stats(outcome.stats, timing),
        details=details,
    ).to_dict()


def decide(
    command: str,
    path_a: str | Path,
    path_b: str | Path,
    *,
    timing: bool = False,
    settings: Optional[Settings] = None,
) -> Dict:
    """Run one of ``equal``, ``include`` or ``strict`` on two files."""
    settings = settings or get_settings()
    decider = _DECIDERS[command]
    a, b = load_dfa(path_a), load_dfa(path_b)
    with traced_span(f"decide.{command}", states_a=a.size, states_b=b.size, cap=settings.pair_cap):
        outcome = decider(a, b, pair_cap=settings.pair_cap)
    return _outcome_payload(command, outcome, timing)


def ideal(path: str | Path, *, settings: Optional[Settings] = None) -> Dict:
    """Is the accepted language a two-sided ideal?"""
    settings = settings or get_settings()
    acc = load_dfa(path)
    with traced_span("decide.ideal", states=acc.size, cap=settings.determinize_cap):
        violation = ideal_violation(acc, cap=settings.determinize_cap, product_cap=settings.subset_cap)
    if violation is None:
        return CliPayload(command="ideal", verdict=CliVerdict.ideal).to_dict()
    return CliPayload(
        command="ideal",
        verdict=CliVerdict.not_ideal,
        witness=list(violation),
        message="witness lies in the two-sided closure but is not accepted",
    ).to_dict()


def intersect(
    paths: Sequence[str | Path], *, timing: bool = False, settings: Optional[Settings] = None
) -> Dict:
    """Emptiness of the intersection of the accepted languages."""
    settings = settings or get_settings()
    inst = ReductionInstance.from_acceptors(load_dfa(path) for path in paths)
    stats = SearchStats()
    with traced_span("decide.intersect", components=len(inst), states=inst.size):
        word = intersection_nonempty(inst, cap=settings.subset_cap, stats=stats)
    stats.stop()
    return CliPayload(
        command="intersect",
        verdict=CliVerdict.empty if word is None else CliVerdict.nonempty,
        witness=word_list(word),
        stats=StatsPayload.from_stats(stats, timing),
        details={"components": len(inst)},
    ).to_dict()
