from __future__ import annotations

import random

import pytest

from core.automata.dfa import Alphabet, Dfa, accepts, image
from core.automata.fileformat import load_dfa
from core.automata.ops import equivalent, words_up_to
from core.errors import AlphabetMismatchError, CapExceededError, DfaValidationError
from core.gadgets.builders import build_witness_I
from core.sync.families import cerny_automaton, random_dfa, random_synchronizing_dfa
from core.sync.power import SINK, power_automaton, state_complexity, syn_language_dfa, unary_syn_equality
from core.sync.reset import (
    image_reset,
    is_minimal_reset_word,
    is_reset_word,
    is_synchronizing,
    pair_graph,
    reset_letters,
    shortest_reset_word,
)


def _brute_force_synchronizing(d: Dfa, depth: int) -> bool:
    return any(is_reset_word(d, w) for w in words_up_to(d.alphabet, depth))


def test_gadget_b_resets_with_y(gadget_b):
    assert is_synchronizing(gadget_b)
    report = shortest_reset_word(gadget_b)
    assert report.synchronizing
    assert report.shortest_reset == ("y",)
    assert report.shortest_length == 1


def test_reset_words_of_gadget_b(gadget_b):
    assert is_reset_word(gadget_b, ("z", "z"))
    assert not is_reset_word(gadget_b, ("z",))
    assert not is_reset_word(gadget_b, ())
    assert reset_letters(gadget_b) == ["y"]


def test_permutation_automaton_is_not_synchronizing(samples):
    d = load_dfa(samples / "permutation.dfa")
    assert not is_synchronizing(d)
    report = shortest_reset_word(d)
    assert not report.synchronizing
    assert report.shortest_reset is None


def test_single_state_is_reset_by_the_empty_word():
    d = Dfa.build(["only"], "a", {("only", "a"): "only"})
    assert is_synchronizing(d)
    assert shortest_reset_word(d).shortest_reset == ()


def test_minimal_reset_words(gadget_b):
    assert is_minimal_reset_word(gadget_b, ("y",))
    assert is_minimal_reset_word(gadget_b, ("z", "a"))
    assert not is_minimal_reset_word(gadget_b, ("a", "y"))
    assert not is_minimal_reset_word(gadget_b, ("y", "a"))
    assert not is_minimal_reset_word(gadget_b, ("a",))


def test_image_reset_on_a_subset(gadget_b):
    assert image_reset(gadget_b, {"p2", "s"}, ("a",))
    assert not image_reset(gadget_b, {"p1", "s"}, ("a",))


def test_pair_graph_has_a_node_per_pair(gadget_b):
    graph = pair_graph(gadget_b)
    assert graph.number_of_nodes() == 3 + 1
    assert graph.has_edge((0, 1), "merged")
    assert graph.has_edge((0, 1), (0, 2))


def test_cerny_four_needs_nine_letters(samples):
    d = cerny_automaton(4)
    assert d == load_dfa(samples / "cerny4.dfa")
    report = shortest_reset_word(d)
    assert report.shortest_length == 9
    shortest_by_enumeration = min(len(w) for w in words_up_to(d.alphabet, 9) if is_reset_word(d, w))
    assert shortest_by_enumeration == 9


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_cerny_family_reset_length(n):
    assert shortest_reset_word(cerny_automaton(n)).shortest_length == (n - 1) ** 2


def test_pair_criterion_agrees_with_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 4)
        d = random_dfa(rng, n, ("a", "b"))
        # (n-1)^2 bounds the shortest reset word on these sizes
        assert is_synchronizing(d) == _brute_force_synchronizing(d, (n - 1) ** 2)


def test_shortest_reset_word_is_shortest_and_least():
    rng = random.Random(5)
    for _ in range(40):
        d = random_synchronizing_dfa(rng, rng.randint(2, 4), ("a", "b"))
        found = shortest_reset_word(d).shortest_reset
        first = next(w for w in words_up_to(d.alphabet, 9) if is_reset_word(d, w))
        assert found == first


def test_shortest_reset_word_respects_the_cap():
    with pytest.raises(CapExceededError) as info:
        shortest_reset_word(cerny_automaton(6), cap=4)
    assert info.value.cap == 4
    assert info.value.required > 4


def test_power_automaton_of_gadget_b(gadget_b):
    power = power_automaton(gadget_b)
    assert power.underlying.states == ("{p1,p2,s}", "{p1,s}", SINK, "{p2,s}")
    assert power.underlying.initial == "{p1,p2,s}"
    assert power.underlying.finals == frozenset({SINK})
    assert power.sink_reachable
    assert power.subsets["{p1,s}"] == frozenset({"p1", "s"})


def test_syn_of_gadget_b_is_the_witness_ideal(gadget_b):
    syn = syn_language_dfa(gadget_b)
    assert equivalent(syn, build_witness_I(("a", "b")))
    assert state_complexity(gadget_b) == 3
    assert accepts(syn, ("a", "z", "y"))
    assert not accepts(syn, ("a", "z"))


def test_syn_language_matches_reset_words():
    rng = random.Random(3)
    for _ in range(30):
        d = random_dfa(rng, rng.randint(1, 5), ("a", "b"))
        syn = syn_language_dfa(d)
        for word in words_up_to(d.alphabet, 5):
            assert accepts(syn, word) == (len(image(d, d.states, word)) == 1)


def test_non_synchronizing_power_automaton_has_no_final(samples):
    power = power_automaton(load_dfa(samples / "permutation.dfa"))
    assert not power.sink_reachable
    assert power.underlying.finals == frozenset()


def test_unary_syn_is_a_tail():
    rng = random.Random(2024)
    for _ in range(50):
        n = rng.randint(1, 10)
        d = random_synchronizing_dfa(rng, n, ("a",))
        k = shortest_reset_word(d).shortest_length
        assert k < n
        syn = syn_language_dfa(d)
        assert syn.size == k + 1
        for length in range(2 * n + 1):
            assert accepts(syn, ("a",) * length) == (length >= k)


def test_unary_equality_compares_reset_lengths():
    tail_two = Dfa.build(["0", "1", "2"], "a", {("0", "a"): "1", ("1", "a"): "2", ("2", "a"): "2"})
    tail_two_again = Dfa.build(["p", "q", "r"], "a", {("p", "a"): "q", ("q", "a"): "r", ("r", "a"): "r"})
    tail_one = Dfa.build(["0", "1"], "a", {("0", "a"): "1", ("1", "a"): "1"})
    assert unary_syn_equality(tail_two, tail_two_again)
    assert not unary_syn_equality(tail_two, tail_one)
    with pytest.raises(DfaValidationError):
        unary_syn_equality(cerny_automaton(3), tail_one)
    renamed = Dfa(("0", "1"), Alphabet(("c",)), ((1, 1),))
    with pytest.raises(AlphabetMismatchError):
        unary_syn_equality(tail_one, renamed)


def test_power_automaton_agrees_with_the_pair_criterion():
    rng = random.Random(31)
    for _ in range(150):
        d = random_dfa(rng, rng.randint(1, 5), ("a", "b"))
        assert power_automaton(d).sink_reachable == is_synchronizing(d)


def test_shortest_reset_words_stay_within_the_quadratic_bound():
    rng = random.Random(37)
    for _ in range(150):
        n = rng.randint(1, 6)
        d = random_synchronizing_dfa(rng, n, ("a", "b"))
        assert shortest_reset_word(d).shortest_length <= (n - 1) ** 2


def test_subset_names_fall_back_to_indices_on_collision():
    # {a, b,c} and {a,b, c} would both be called {a,b,c}
    states = ["a", "b,c", "a,b", "c"]
    targets = {
        "p": {"a": "a", "b,c": "b,c", "a,b": "a", "c": "b,c"},
        "q": {"a": "a,b", "b,c": "c", "a,b": "a,b", "c": "c"},
        "r": {state: "a" for state in states},
    }
    delta = {(state, letter): targets[letter][state] for letter in targets for state in states}
    d = Dfa.build(states, "p q r", delta)
    power = power_automaton(d)
    assert power.underlying.states == ("{0,1,2,3}", "{0,1}", "{2,3}", SINK)
    assert power.subsets["{0,1}"] == frozenset({"a", "b,c"})
    assert state_complexity(d) == 2
