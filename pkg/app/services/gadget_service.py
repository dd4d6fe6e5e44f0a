"""Generators for the reduction gadgets, the binary lift, products and the Černý family."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from app.deps import Settings, get_settings
from app.schemas.common import CliPayload, CliVerdict
from app.utils.tracing import traced_span
from core.automata.dfa import Alphabet, Dfa
from core.automata.fileformat import load_dfa, save_dfa, serialize_dfa
from core.errors import GadgetError
from core.gadgets.binary import LetterOrder, binarize
from core.gadgets.builders import build_gadget_A, build_gadget_B, build_witness_I, product_sync
from core.gadgets.instance import ReductionInstance, load_instance, normalize_instance
from core.sync.families import cerny_automaton

logger = logging.getLogger(__name__)

GENERATOR_KINDS = ("gadget-a", "gadget-b", "witness-i", "binarize", "product", "cerny")


def _require_inputs(kind: str, inputs: Sequence[str | Path], count: int) -> None:
    if len(inputs) != count:
        raise GadgetError(f"gen {kind} expects {count} input file(s), got {len(inputs)}")


def _require_sigma(kind: str, sigma: Optional[str]) -> Alphabet:
    if not sigma or not sigma.split():
        raise GadgetError(f"gen {kind} needs --sigma")
    return Alphabet.of(sigma)


def _gadget_a(inputs: Sequence[str | Path], manifest: Optional[str | Path], settings: Settings) -> Tuple[Dfa, Dict]:
    if manifest is not None:
        inst = load_instance(manifest)
    elif inputs:
        inst = ReductionInstance.from_acceptors(load_dfa(path) for path in inputs)
    else:
        raise GadgetError("gen gadget-a needs component files or --manifest")
    normalized = normalize_instance(inst, cap=settings.subset_cap)
    refreshed: List[int] = [
        pos + 1
        for pos, (before, after) in enumerate(zip(inst.components, normalized.components))
        if before.size != after.size
    ]
    return build_gadget_A(normalized), {"components": len(inst), "fresh_initials": refreshed}


def build(
    kind: str,
    inputs: Sequence[str | Path] = (),
    *,
    sigma: Optional[str] = None,
    order: Optional[str] = None,
    n: Optional[int] = None,
    manifest: Optional[str | Path] = None,
    settings: Optional[Settings] = None,
) -> Tuple[Dfa, Dict]:
    """Construct the requested automaton; returns it with descriptive details."""
    settings = settings or get_settings()
    details: Dict = {}
    if kind == "gadget-a":
        d, details = _gadget_a(inputs, manifest, settings)
    elif kind == "gadget-b":
        d = build_gadget_B(_require_sigma(kind, sigma))
    elif kind == "witness-i":
        d = build_witness_I(_require_sigma(kind, sigma))
    elif kind == "binarize":
        _require_inputs(kind, inputs, 1)
        source = load_dfa(inputs[0])
        letter_order = (
            LetterOrder.parse(order)
            if order
            else LetterOrder.from_template(settings.letter_order, source.alphabet)
        )
        d = binarize(source, letter_order, settings.binary_letters)
        details = {"order": list(letter_order.letters), "source_states": source.size}
    elif kind == "product":
        _require_inputs(kind, inputs, 2)
        d = product_sync(load_dfa(inputs[0]), load_dfa(inputs[1]))
    elif kind == "cerny":
        if not n or n < 1:
            raise GadgetError("gen cerny needs --n with a positive state count")
        d = cerny_automaton(n)
    else:
        raise GadgetError(f"unknown generator {kind!r}; expected one of {', '.join(GENERATOR_KINDS)}")
    return d, details


def generate(
    kind: str,
    inputs: Sequence[str | Path] = (),
    *,
    sigma: Optional[str] = None,
    order: Optional[str] = None,
    n: Optional[int] = None,
    manifest: Optional[str | Path] = None,
    out: Optional[str | Path] = None,
    settings: Optional[Settings] = None,
) -> Dict:
    with traced_span(f"gen.{kind}", inputs=len(inputs)):
        d, details = build(kind, inputs, sigma=sigma, order=order, n=n, manifest=manifest, settings=settings)
    details.update(
        {
            "kind": kind,
            "states": d.size,
            "letters": len(d.alphabet),
            "transitions": d.size * len(d.alphabet),
        }
    )
    if out is not None:
        details["output"] = str(save_dfa(d, out))
        logger.info("wrote %s (%d states) to %s", kind, d.size, out)
    else:
        details["dfa"] = serialize_dfa(d)
    return CliPayload(command="gen", verdict=CliVerdict.generated, details=details).to_dict()
