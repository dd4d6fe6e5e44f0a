"""Reference oracle for FINITE AUTOMATA INTERSECTION."""

from __future__ import annotations

import logging
from typing import Iterable, Optional

from core.automata.dfa import Dfa, Word
from core.automata.ops import DEFAULT_PRODUCT_CAP, product_acceptors, shortest_accepted
from core.automata.subsets import SearchStats
from core.gadgets.instance import ReductionInstance

logger = logging.getLogger(__name__)


def intersection_nonempty(
    inst: ReductionInstance | Iterable[Dfa],
    *,
    cap: int = DEFAULT_PRODUCT_CAP,
    stats: Optional[SearchStats] = None,
) -> Optional[Word]:
    """Shortest word accepted by every component, or None when the intersection is empty."""
    components = list(inst.components if isinstance(inst, ReductionInstance) else inst)
    product = product_acceptors(components, cap=cap)
    logger.debug("intersection product has %d reachable states", product.size)
    return shortest_accepted(product, stats=stats)
