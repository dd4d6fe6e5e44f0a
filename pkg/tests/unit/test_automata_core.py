from __future__ import annotations

import random

import pytest

from core.automata.dfa import Alphabet, Dfa, DfaBuilder, accepts, apply, check_token, format_word, image
from core.automata.fileformat import load_dfa, parse_dfa, save_dfa, serialize_dfa
from core.automata.ops import (
    complement,
    determinize_subset,
    equivalent,
    included,
    minimize,
    product_acceptors,
    reachable_part,
    restrict_alphabet,
    shortest_accepted,
    words_up_to,
)
from core.errors import (
    AlphabetMismatchError,
    DfaFormatError,
    DfaValidationError,
    MissingInitialError,
    UnknownSymbolError,
)
from core.sync.families import random_dfa

ENDS_A = """\
alphabet: a b
states: e0 e1
initial: e0
final: e1
e0 a e1
e0 b e0
e1 a e1
e1 b e0
"""


def test_parse_reads_headers_and_transitions():
    d = parse_dfa(ENDS_A)
    assert d.states == ("e0", "e1")
    assert d.alphabet.letters == ("a", "b")
    assert d.initial == "e0"
    assert d.finals == frozenset({"e1"})
    assert d.step("e0", "a") == "e1"


def test_serialize_then_parse_gives_same_automaton(samples):
    for name in ("gadget_b_ab.dfa", "ends_a.dfa", "cerny4.dfa"):
        d = load_dfa(samples / name)
        assert parse_dfa(serialize_dfa(d)) == d


def test_serialize_omits_acceptance_for_plain_automata(samples):
    text = serialize_dfa(load_dfa(samples / "gadget_b_ab.dfa"))
    assert "initial:" not in text
    assert "final:" not in text
    assert text.count("\n") == 2 + 15


@pytest.mark.parametrize(
    "text, line",
    [
        ("alphabet: a\nstates: q\nstart: q\nq a q\n", 3),
        ("alphabet: a a\nstates: q\nq a q\n", 1),
        ("alphabet: a\nstates: q\nq a r\n", 3),
        ("alphabet: a\nstates: q\nq b q\n", 3),
        ("alphabet: a\nstates: q\nq a q\nq a q\n", 4),
        ("alphabet: a\nstates: q\nq a q\nfinal: q\n", 4),
        ("alphabet: a\nstates: q\ninitial: r\nq a q\n", 3),
        ("alphabet: a b\nstates: q\n# only one line\nq a q\n", 2),
        ("alphabet: a\n\nstates: p q\np a q\n", 3),
        ("alphabet: a\nstates: q\nq a\n", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(DfaFormatError) as info:
        parse_dfa(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}: ")


def test_load_dfa_names_the_file(tmp_path):
    path = tmp_path / "broken.dfa"
    path.write_text("alphabet: a\nstates: q\nq a missing\n", encoding="utf-8")
    with pytest.raises(DfaFormatError) as info:
        load_dfa(path)
    assert "broken.dfa" in str(info.value)
    assert info.value.line == 3


def test_save_dfa_creates_parent_directories(tmp_path):
    d = parse_dfa(ENDS_A)
    target = save_dfa(d, tmp_path / "nested" / "ends_a.dfa")
    assert load_dfa(target) == d


def test_tokens_reject_format_characters():
    with pytest.raises(DfaValidationError):
        check_token("a:b")
    with pytest.raises(DfaValidationError):
        check_token("a b")
    assert check_token("{p1,s}") == "{p1,s}"


def test_builder_enforces_completeness():
    builder = DfaBuilder("a b").add_state("p", initial=True).add_state("q", final=True)
    builder.add_transitions("p", ["a", "b"], "q")
    builder.add_transition("q", "a", "q")
    with pytest.raises(DfaValidationError):
        builder.build()
    builder.add_transition("q", "b", "p")
    d = builder.build()
    assert accepts(d, ("a",))
    assert not accepts(d, ("a", "b"))


def test_build_rejects_unknown_symbols():
    with pytest.raises(UnknownSymbolError):
        Dfa.build(["p"], "a", {("p", "c"): "p"})
    with pytest.raises(UnknownSymbolError):
        Dfa.build(["p"], "a", {("p", "a"): "r"})


def test_apply_and_image_follow_the_extended_transition_function(samples):
    d = load_dfa(samples / "gadget_b_ab.dfa")
    assert apply(d, "p1", ()) == "p1"
    assert apply(d, "p1", ("a", "z")) == "p2"
    assert image(d, d.states, ("z",)) == frozenset({"p2", "s"})
    assert image(d, d.states, ("z", "a")) == frozenset({"s"})
    with pytest.raises(UnknownSymbolError):
        image(d, d.states, ("c",))


def test_accepts_requires_an_initial_state(samples):
    d = load_dfa(samples / "gadget_b_ab.dfa")
    with pytest.raises(MissingInitialError):
        accepts(d, ("a",))


def test_equivalent_returns_shortest_witness(samples):
    ends_a = load_dfa(samples / "ends_a.dfa")
    ends_b = load_dfa(samples / "ends_b.dfa")
    result = equivalent(ends_a, ends_b)
    assert not result
    assert result.witness == ("a",)
    assert equivalent(ends_a, ends_a)


def test_included_finds_a_word_only_in_the_first_language(samples):
    contains_a = load_dfa(samples / "contains_a.dfa")
    ends_a = load_dfa(samples / "ends_a.dfa")
    assert included(contains_a, ends_a) == ("a", "b")
    assert included(ends_a, contains_a) is None


def test_alphabet_mismatch_is_reported(samples):
    ends_a = load_dfa(samples / "ends_a.dfa")
    other = Dfa.build(["p"], "a", {("p", "a"): "p"}, "p", ["p"])
    with pytest.raises(AlphabetMismatchError):
        equivalent(ends_a, other)


def test_minimize_is_canonical(samples):
    ends_a = load_dfa(samples / "ends_a.dfa")
    padded = Dfa.build(
        ["s0", "s1", "s2", "dead"],
        "a b",
        {
            ("s0", "a"): "s1", ("s0", "b"): "s2",
            ("s1", "a"): "s1", ("s1", "b"): "s2",
            ("s2", "a"): "s1", ("s2", "b"): "s0",
            ("dead", "a"): "dead", ("dead", "b"): "dead",
        },
        "s0",
        ["s1"],
    )
    assert minimize(padded) == minimize(ends_a)
    assert minimize(padded).states == ("0", "1")


def test_reachable_part_drops_unreachable_states():
    d = Dfa.build(["p", "q"], "a", {("p", "a"): "p", ("q", "a"): "p"}, "p", ["q"])
    trimmed = reachable_part(d)
    assert trimmed.states == ("p",)
    assert trimmed.finals == frozenset()


def test_product_accepts_the_intersection(samples):
    ends_a = load_dfa(samples / "ends_a.dfa")
    contains_a = load_dfa(samples / "contains_a.dfa")
    product = product_acceptors([ends_a, contains_a])
    assert product.initial == "(e0,c0)"
    assert equivalent(product, ends_a)
    assert shortest_accepted(product) == ("a",)


def test_shortest_accepted_of_empty_language():
    d = Dfa.build(["p"], "a b", {("p", "a"): "p", ("p", "b"): "p"}, "p", [])
    assert shortest_accepted(d) is None


def test_complement_flips_membership(samples):
    ends_a = load_dfa(samples / "ends_a.dfa")
    flipped = complement(ends_a)
    for word in words_up_to(ends_a.alphabet, 4):
        assert accepts(flipped, word) != accepts(ends_a, word)


def test_determinize_with_extra_edges_adds_words(samples):
    ends_a = load_dfa(samples / "ends_a.dfa")
    assert equivalent(determinize_subset(ends_a), ends_a)
    # letting e1 loop on b as well: every word containing a is accepted
    loose = determinize_subset(ends_a, {("e1", "b"): ["e1"]})
    assert equivalent(loose, load_dfa(samples / "contains_a.dfa"))


def test_restrict_alphabet_keeps_chosen_letters(samples):
    ends_a = load_dfa(samples / "ends_a.dfa")
    only_b = restrict_alphabet(ends_a, ["b"])
    assert only_b.alphabet.letters == ("b",)
    assert only_b.step("e1", "b") == "e0"
    with pytest.raises(DfaValidationError):
        restrict_alphabet(ends_a, [])


def test_words_up_to_is_shortlex():
    words = list(words_up_to(Alphabet.of("a b"), 2))
    assert words == [(), ("a",), ("b",), ("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]


def test_format_word_renders_epsilon():
    assert format_word(()) == "ε"
    assert format_word(("x", "a", "z")) == "x a z"


def _random_acceptor(rng: random.Random, n: int) -> Dfa:
    d = random_dfa(rng, n, ("a", "b"))
    finals = frozenset(q for q in d.states if rng.random() < 0.5)
    return Dfa(d.states, d.alphabet, d.table, d.states[0], finals)


def test_apply_composes_over_concatenation():
    rng = random.Random(17)
    for _ in range(200):
        d = random_dfa(rng, rng.randint(1, 5), ("a", "b", "c"))
        u = tuple(rng.choice("abc") for _ in range(rng.randint(0, 6)))
        v = tuple(rng.choice("abc") for _ in range(rng.randint(0, 6)))
        for state in d.states:
            assert apply(d, state, u + v) == apply(d, apply(d, state, u), v)


def test_equivalent_agrees_with_enumeration():
    rng = random.Random(23)
    checked = 0
    while checked < 150:
        na, nb = rng.randint(1, 5), rng.randint(1, 5)
        if na * nb > 10:
            continue
        checked += 1
        a, b = _random_acceptor(rng, na), _random_acceptor(rng, nb)
        # distinct acceptors differ on some word no longer than |Qa|·|Qb|
        disagreements = (
            w for w in words_up_to(a.alphabet, na * nb) if accepts(a, w) != accepts(b, w)
        )
        first = next(disagreements, None)
        result = equivalent(a, b)
        assert result.equal == (first is None)
        assert result.witness == first
        assert equivalent(a, minimize(a))


def test_generated_state_names_are_stable():
    rng = random.Random(29)
    for _ in range(20):
        a, b = _random_acceptor(rng, rng.randint(1, 5)), _random_acceptor(rng, rng.randint(1, 5))
        reloaded = parse_dfa(serialize_dfa(a))
        assert minimize(a).states == minimize(reloaded).states
        assert product_acceptors([a, b]).states == product_acceptors([reloaded, b]).states
        assert product_acceptors([a, b]) == product_acceptors([a, b])


def test_product_names_fall_back_to_indices_on_collision():
    # "x" with "y,z" and "x,y" with "z" would both be called (x,y,z)
    left = Dfa.build(["x", "x,y"], "a", {("x", "a"): "x,y", ("x,y", "a"): "x,y"}, "x", ["x,y"])
    right = Dfa.build(["y,z", "z"], "a", {("y,z", "a"): "z", ("z", "a"): "z"}, "y,z", ["z"])
    product = product_acceptors([left, right])
    assert product.states == ("(0,0)", "(1,1)")
    assert product.finals == frozenset({"(1,1)"})
    assert shortest_accepted(product) == ("a",)
