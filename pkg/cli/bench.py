from __future__ import annotations

import random
import time

from app.deps import get_settings
from core.decide.inclusion import syn_equality
from core.sync.families import cerny_automaton, random_synchronizing_dfa
from core.sync.power import state_complexity
from core.sync.reset import shortest_reset_word


def main() -> None:
    settings = get_settings()
    for n in (4, 6, 8, 10):
        start = time.time()
        report = shortest_reset_word(cerny_automaton(n), cap=settings.subset_cap)
        duration = (time.time() - start) * 1000
        print(f"Cerny n={n}: reset length {report.shortest_length}, {report.stats.nodes_expanded} subsets, {duration:.2f} ms")

    rng = random.Random(7)
    pairs = [
        (random_synchronizing_dfa(rng, 6, ("a", "b")), random_synchronizing_dfa(rng, 6, ("a", "b")))
        for _ in range(20)
    ]
    start = time.time()
    equal = sum(syn_equality(a, b, pair_cap=settings.pair_cap).holds for a, b in pairs)
    duration = (time.time() - start) * 1000
    print(f"SYN-EQUALITY on {len(pairs)} random 6-state pairs: {equal} equal, {duration:.2f} ms total")

    start = time.time()
    sizes = [state_complexity(a, cap=settings.subset_cap) for a, _ in pairs]
    duration = (time.time() - start) * 1000
    print(f"sc of Syn over {len(sizes)} automata: max {max(sizes)}, {duration:.2f} ms total")


if __name__ == "__main__":
    main()
