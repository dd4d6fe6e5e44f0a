"""Generic language operations on complete DFA acceptors.

Product, minimization (Hopcroft partition refinement), equivalence with
shortest counterexamples, complement, and subset-construction determinization.
Every exploration walks letters in declared alphabet order, so the first
witness found by a breadth-first search is the shortest one and, among the
shortest, the least in alphabet order.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from core.automata.dfa import Alphabet, Dfa, Word, require_same_alphabet
from core.automata.subsets import SearchStats, distinct_names, indices, subset_names
from core.errors import CapExceededError, DfaValidationError, MissingInitialError

logger = logging.getLogger(__name__)

DEFAULT_SUBSET_CAP = 1 << 20
DEFAULT_PRODUCT_CAP = 1 << 20


@dataclass(frozen=True)
class EquivalenceResult:
    """Outcome of a language comparison; truthy when the languages agree."""

    equal: bool
    witness: Optional[Word] = None

    def __bool__(self) -> bool:
        return self.equal


def _require_acceptor(d: Dfa) -> None:
    if d.initial is None:
        raise MissingInitialError("operation needs an automaton with an initial state")


def spell_word(parents: Dict, node: Hashable, alphabet: Alphabet) -> Word:
    letters: List[str] = []
    while parents[node] is not None:
        node, li = parents[node]
        letters.append(alphabet.letters[li])
    return tuple(reversed(letters))


def shortlex_search(
    root: Hashable,
    successor: Callable[[Hashable, int], Hashable],
    letter_count: int,
    goal: Callable[[Hashable], bool],
    *,
    cap: Optional[int] = None,
    what: str = "search",
    expand: Optional[Callable[[Hashable], bool]] = None,
    stats: Optional[SearchStats] = None,
) -> Tuple[Optional[Hashable], Dict]:
    """Breadth-first search with backpointers; returns (goal node or None, parents).

    Nodes are discovered in shortlex order of their least access word, so the
    first goal node yields the canonical witness.
    """
    parents: Dict[Hashable, Optional[Tuple[Hashable, int]]] = {root: None}
    if goal(root):
        return root, parents
    queue = deque([root])
    while queue:
        node = queue.popleft()
        if stats is not None:
            stats.nodes_expanded += 1
        if expand is not None and not expand(node):
            continue
        for li in range(letter_count):
            nxt = successor(node, li)
            if nxt in parents:
                continue
            parents[nxt] = (node, li)
            if goal(nxt):
                return nxt, parents
            if cap is not None and len(parents) > cap:
                raise CapExceededError(what, cap, len(parents))
            queue.append(nxt)
    return None, parents


def product_names(ds: Sequence[Dfa], nodes: Sequence[Tuple[int, ...]]) -> Tuple[str, ...]:
    """``(q1,q2)`` style names for product states; index tuples when those collide."""
    if len(ds) == 1:
        return tuple(ds[0].states[node[0]] for node in nodes)
    return distinct_names(
        ["(" + ",".join(d.states[qi] for d, qi in zip(ds, node)) + ")" for node in nodes],
        ["(" + ",".join(str(qi) for qi in node) + ")" for node in nodes],
    )


def product_acceptors(ds: Sequence[Dfa], *, cap: int = DEFAULT_PRODUCT_CAP) -> Dfa:
    """Reachable synchronous product accepting the intersection of the languages."""
    if not ds:
        raise DfaValidationError("product needs at least one automaton")
    alphabet = require_same_alphabet(*ds)
    for d in ds:
        _require_acceptor(d)
    root = tuple(d.initial_index() for d in ds)
    order: List[Tuple[int, ...]] = [root]
    seen: Dict[Tuple[int, ...], int] = {root: 0}
    edges: List[List[int]] = []
    queue = deque([root])
    while queue:
        node = queue.popleft()
        row = []
        for li in range(len(alphabet)):
            nxt = tuple(d.table[li][qi] for d, qi in zip(ds, node))
            if nxt not in seen:
                seen[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
                if len(order) > cap:
                    raise CapExceededError("product", cap, len(order))
            row.append(seen[nxt])
        edges.append(row)

    names = product_names(ds, order)
    finals_per = [d.final_indices() for d in ds]
    finals = [
        names[pos]
        for pos, node in enumerate(order)
        if all(qi in f for qi, f in zip(node, finals_per))
    ]
    table = tuple(tuple(edges[pos][li] for pos in range(len(order))) for li in range(len(alphabet)))
    return Dfa(tuple(names), alphabet, table, names[0], frozenset(finals))


def reachable_part(d: Dfa) -> Dfa:
    """Restriction of an acceptor to the states reachable from its initial state."""
    _require_acceptor(d)
    root = d.initial_index()
    seen = {root}
    queue = deque([root])
    while queue:
        qi = queue.popleft()
        for row in d.table:
            if row[qi] not in seen:
                seen.add(row[qi])
                queue.append(row[qi])
    if len(seen) == d.size:
        return d
    keep = [qi for qi in range(d.size) if qi in seen]
    renumber = {qi: pos for pos, qi in enumerate(keep)}
    table = tuple(tuple(renumber[row[qi]] for qi in keep) for row in d.table)
    states = tuple(d.states[qi] for qi in keep)
    finals = frozenset(s for s in d.finals if d.index(s) in seen)
    return Dfa(states, d.alphabet, table, d.initial, finals)


def _hopcroft_blocks(d: Dfa) -> List[FrozenSet[int]]:
    """Partition the states of ``d`` into Myhill-Nerode classes."""
    n = d.size
    finals = frozenset(d.final_indices())
    others = frozenset(range(n)) - finals
    partition: Set[FrozenSet[int]] = {block for block in (finals, others) if block}
    if len(partition) <= 1:
        return list(partition)

    inverse: List[Dict[int, List[int]]] = []
    for row in d.table:
        preds: Dict[int, List[int]] = {}
        for qi, target in enumerate(row):
            preds.setdefault(target, []).append(qi)
        inverse.append(preds)

    block_of: Dict[int, FrozenSet[int]] = {}
    for block in partition:
        for qi in block:
            block_of[qi] = block

    worklist: Set[FrozenSet[int]] = {finals if len(finals) <= len(others) else others}
    while worklist:
        splitter = worklist.pop()
        for preds in inverse:
            affected: Dict[FrozenSet[int], Set[int]] = {}
            for target in splitter:
                for qi in preds.get(target, ()):
                    affected.setdefault(block_of[qi], set()).add(qi)
            for block, hit in affected.items():
                if len(hit) == len(block):
                    continue
                part1 = frozenset(hit)
                part2 = block - part1
                partition.remove(block)
                partition.add(part1)
                partition.add(part2)
                for qi in part1:
                    block_of[qi] = part1
                for qi in part2:
                    block_of[qi] = part2
                if block in worklist:
                    worklist.remove(block)
                    worklist.add(part1)
                    worklist.add(part2)
                else:
                    worklist.add(part1 if len(part1) <= len(part2) else part2)
    return list(partition)


def minimize(d: Dfa) -> Dfa:
    """Minimal acceptor for L[d] with canonical names ``0..n-1``.

    Names follow breadth-first discovery from the initial state with letters in
    alphabet order, so equal languages over the same alphabet produce equal
    automata.
    """
    _require_acceptor(d)
    trimmed = reachable_part(d)
    blocks = _hopcroft_blocks(trimmed)
    block_id: Dict[int, int] = {}
    for pos, block in enumerate(blocks):
        for qi in block:
            block_id[qi] = pos
    representative = {pos: min(block) for pos, block in enumerate(blocks)}

    root = block_id[trimmed.initial_index()]
    order = [root]
    number = {root: 0}
    queue = deque([root])
    while queue:
        block = queue.popleft()
        rep = representative[block]
        for row in trimmed.table:
            nxt = block_id[row[rep]]
            if nxt not in number:
                number[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)

    finals_idx = trimmed.final_indices()
    names = tuple(str(pos) for pos in range(len(order)))
    table = tuple(
        tuple(number[block_id[row[representative[block]]]] for block in order)
        for row in trimmed.table
    )
    finals = frozenset(names[pos] for pos, block in enumerate(order) if representative[block] in finals_idx)
    return Dfa(names, trimmed.alphabet, table, names[0], finals)


def _pair_search(a: Dfa, b: Dfa, goal: Callable[[bool, bool], bool], cap: int) -> Optional[Word]:
    alphabet = require_same_alphabet(a, b)
    _require_acceptor(a)
    _require_acceptor(b)
    fa, fb = a.final_indices(), b.final_indices()
    found, parents = shortlex_search(
        (a.initial_index(), b.initial_index()),
        lambda node, li: (a.table[li][node[0]], b.table[li][node[1]]),
        len(alphabet),
        lambda node: goal(node[0] in fa, node[1] in fb),
        cap=cap,
        what="product",
    )
    if found is None:
        return None
    return spell_word(parents, found, alphabet)


def equivalent(a: Dfa, b: Dfa, *, cap: int = DEFAULT_PRODUCT_CAP) -> EquivalenceResult:
    """Decide L[a] = L[b]; on failure the witness is shortest, then alphabet-least."""
    witness = _pair_search(a, b, lambda in_a, in_b: in_a != in_b, cap)
    if witness is None:
        return EquivalenceResult(True)
    return EquivalenceResult(False, witness)


def included(a: Dfa, b: Dfa, *, cap: int = DEFAULT_PRODUCT_CAP) -> Optional[Word]:
    """Shortest word of L[a] \\ L[b], or None when L[a] ⊆ L[b]."""
    return _pair_search(a, b, lambda in_a, in_b: in_a and not in_b, cap)


def shortest_accepted(d: Dfa, *, stats: Optional[SearchStats] = None) -> Optional[Word]:
    """Shortest, alphabet-least accepted word, or None for the empty language."""
    _require_acceptor(d)
    finals = d.final_indices()
    found, parents = shortlex_search(
        d.initial_index(),
        lambda qi, li: d.table[li][qi],
        len(d.alphabet),
        lambda qi: qi in finals,
        stats=stats,
    )
    if found is None:
        return None
    return spell_word(parents, found, d.alphabet)


def complement(d: Dfa) -> Dfa:
    _require_acceptor(d)
    return d.with_acceptance(d.initial, [s for s in d.states if s not in d.finals])


def restrict_alphabet(d: Dfa, letters: Iterable[str]) -> Dfa:
    """The same automaton over a non-empty sub-alphabet (other letters deleted)."""
    wanted = set(letters)
    keep = [letter for letter in d.alphabet if letter in wanted]
    alphabet = Alphabet(tuple(keep))
    table = tuple(d.table[d.alphabet.index(letter)] for letter in keep)
    return Dfa(d.states, alphabet, table, d.initial, d.finals)


def determinize_subset(
    d: Dfa,
    extra_edges: Mapping[Tuple[str, str], Iterable[str]] | None = None,
    *,
    cap: int = DEFAULT_SUBSET_CAP,
) -> Dfa:
    """Subset construction for ``d`` plus extra nondeterministic edges.

    States of the result are named after the subsets they stand for; the empty
    subset appears as ``{}`` when it is reachable.
    """
    _require_acceptor(d)
    successors: List[List[int]] = [
        [1 << row[qi] for qi in range(d.size)] for row in d.table
    ]
    for (state, letter), targets in (extra_edges or {}).items():
        li = d.alphabet.index(letter)
        qi = d.index(state)
        for target in targets:
            successors[li][qi] |= 1 << d.index(target)

    def step(mask: int, li: int) -> int:
        out = 0
        for qi in indices(mask):
            out |= successors[li][qi]
        return out

    root = 1 << d.initial_index()
    order = [root]
    number = {root: 0}
    edges: List[List[int]] = []
    queue = deque([root])
    while queue:
        mask = queue.popleft()
        row = []
        for li in range(len(d.alphabet)):
            nxt = step(mask, li)
            if nxt not in number:
                number[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
                if len(order) > cap:
                    raise CapExceededError("subset construction", cap, len(order))
            row.append(number[nxt])
        edges.append(row)
    logger.debug("subset construction produced %d states from %d", len(order), d.size)

    finals_mask = 0
    for qi in d.final_indices():
        finals_mask |= 1 << qi
    names = subset_names(d, order)
    finals = frozenset(names[pos] for pos, mask in enumerate(order) if mask & finals_mask)
    table = tuple(tuple(edges[pos][li] for pos in range(len(order))) for li in range(len(d.alphabet)))
    return Dfa(names, d.alphabet, table, names[0], finals)


def words_up_to(alphabet: Alphabet, length: int) -> Iterator[Word]:
    """All words of length ≤ ``length`` in shortlex order."""
    layer: List[Word] = [()]
    yield ()
    for _ in range(length):
        layer = [word + (letter,) for word in layer for letter in alphabet]
        yield from layer
