from __future__ import annotations

import json
from pathlib import Path

from cli.syncideal_cli import main
from core.automata.fileformat import load_dfa
from core.sync.families import cerny_automaton

SAMPLES = Path(__file__).resolve().parents[2] / "data" / "samples"
GADGET_B = f"{SAMPLES}/gadget_b_ab.dfa"
CERNY4 = f"{SAMPLES}/cerny4.dfa"
PERMUTATION = f"{SAMPLES}/permutation.dfa"


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _run_json(capsys, *argv):
    code, out, _ = _run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_check_reports_the_shortest_reset_word(capsys):
    code, payload = _run_json(capsys, "check", CERNY4)
    assert code == 0
    assert payload["command"] == "check"
    assert payload["verdict"] == "synchronizing"
    assert len(payload["witness"]) == 9
    assert payload["details"]["length"] == 9
    assert payload["details"]["states"] == 4
    assert "elapsed_ms" not in payload["stats"]


def test_check_without_word(capsys):
    code, payload = _run_json(capsys, "check", GADGET_B, "--no-word")
    assert code == 0
    assert "witness" not in payload
    assert payload["details"]["reset_letters"] == ["y"]


def test_non_synchronizing_exits_one(capsys):
    code, payload = _run_json(capsys, "check", PERMUTATION)
    assert code == 1
    assert payload["verdict"] == "not synchronizing"


def test_json_output_is_byte_stable(capsys):
    _, first, _ = _run(capsys, "equal", GADGET_B, GADGET_B, "--json")
    _, second, _ = _run(capsys, "equal", GADGET_B, GADGET_B, "--json")
    assert first == second


def test_timing_adds_elapsed_ms(capsys):
    _, payload = _run_json(capsys, "check", CERNY4, "--timing")
    assert "elapsed_ms" in payload["stats"]


def test_reset_word_round_trips_through_member(capsys):
    _, payload = _run_json(capsys, "check", CERNY4)
    word = " ".join(payload["witness"])
    code, member = _run_json(capsys, "member", CERNY4, "--word", word)
    assert code == 0
    assert member["verdict"] == "reset"
    assert member["details"]["minimal"] is True
    assert len(member["details"]["image"]) == 1

    code, member = _run_json(capsys, "member", GADGET_B, "--word", "z")
    assert code == 1
    assert member["verdict"] == "not reset"
    assert member["details"]["image"] == ["p2", "s"]


def test_synlang_and_sc(capsys, tmp_path):
    target = tmp_path / "syn.dfa"
    code, payload = _run_json(capsys, "synlang", GADGET_B, "-o", str(target))
    assert code == 0
    assert payload["details"]["minimal_states"] == 3
    assert payload["details"]["sink_reachable"] is True
    assert load_dfa(target).size == 3

    code, payload = _run_json(capsys, "sc", GADGET_B)
    assert code == 0
    assert payload["sc"] == 3
    assert payload["power_states"] == 4


def test_decisions(capsys, tmp_path):
    code, payload = _run_json(capsys, "include", PERMUTATION, CERNY4)
    assert code == 0
    assert payload["verdict"] == "holds"

    code, payload = _run_json(capsys, "equal", CERNY4, PERMUTATION)
    assert code == 1
    assert payload["details"]["direction"] == "a-not-b"
    assert len(payload["witness"]) == 9

    code, payload = _run_json(capsys, "strict", GADGET_B, GADGET_B)
    assert code == 1
    assert payload["details"]["reason"] == "equal"
    assert "witness" not in payload


def test_ideal_and_intersect(capsys):
    code, payload = _run_json(capsys, "ideal", f"{SAMPLES}/contains_a.dfa")
    assert code == 0
    assert payload["verdict"] == "ideal"

    code, payload = _run_json(capsys, "ideal", f"{SAMPLES}/ends_a.dfa")
    assert code == 1
    assert payload["witness"] == ["a", "b"]

    code, payload = _run_json(capsys, "intersect", f"{SAMPLES}/ends_a.dfa", f"{SAMPLES}/ends_b.dfa")
    assert code == 1
    assert payload["verdict"] == "empty"

    code, payload = _run_json(capsys, "intersect", f"{SAMPLES}/ends_a.dfa", f"{SAMPLES}/contains_a.dfa")
    assert code == 0
    assert payload["witness"] == ["a"]


def test_rc_of_gadget_b(capsys, tmp_path):
    target = tmp_path / "msa.dfa"
    code, payload = _run_json(capsys, "rc", GADGET_B, "--max", "3", "-o", str(target))
    assert code == 0
    assert payload["verdict"] == "exact"
    assert payload["rc_lower"] == payload["rc_upper"] == 3
    assert payload["method"] == "exhaustive"
    assert payload["sc"] == 3
    assert load_dfa(target).size == 3

    code, payload = _run_json(capsys, "rc", GADGET_B, "--max", "2")
    assert code == 1
    assert payload["verdict"] == "bound-only"
    assert payload["rc_lower"] == 3
    assert "rc_upper" not in payload


def test_gen_outputs(capsys, tmp_path):
    code, payload = _run_json(capsys, "gen", "gadget-b", "--sigma", "a b")
    assert code == 0
    assert payload["details"]["states"] == 3
    assert payload["details"]["transitions"] == 15

    code, payload = _run_json(capsys, "gen", "binarize", GADGET_B)
    assert payload["details"]["states"] == 11
    assert payload["details"]["order"] == ["y", "z", "a", "b", "x"]

    code, payload = _run_json(
        capsys, "gen", "gadget-a", "--manifest", f"{SAMPLES}/instance_empty.txt"
    )
    assert payload["details"]["states"] == 8
    assert payload["details"]["fresh_initials"] == [1, 2]

    target = tmp_path / "cerny.dfa"
    code, payload = _run_json(capsys, "gen", "cerny", "--n", "4", "-o", str(target))
    assert code == 0
    assert load_dfa(target) == cerny_automaton(4) == load_dfa(CERNY4)


def test_human_output(capsys):
    code, out, _ = _run(capsys, "check", GADGET_B)
    assert code == 0
    assert out.startswith("check: synchronizing")
    assert "word: y" in out


def test_errors_exit_two(capsys, tmp_path):
    broken = tmp_path / "broken.dfa"
    broken.write_text("alphabet: a\nstates: q\nq a r\n", encoding="utf-8")
    code, out, err = _run(capsys, "check", str(broken))
    assert code == 2
    assert out == ""
    assert "line 3" in err

    code, payload = _run_json(capsys, "check", str(broken))
    assert code == 2
    assert payload["verdict"] == "error"
    assert payload["error"] == "DfaFormatError"

    code, payload = _run_json(capsys, "check", str(tmp_path / "missing.dfa"))
    assert code == 2
    assert payload["error"] == "FileNotFoundError"

    code, payload = _run_json(capsys, "equal", GADGET_B, CERNY4)
    assert code == 2
    assert payload["error"] == "AlphabetMismatchError"

    code, payload = _run_json(capsys, "check", f"{SAMPLES}/cerny4.dfa", "--subset-cap", "3")
    assert code == 2
    assert payload["error"] == "CapExceededError"

    code, payload = _run_json(capsys, "member", GADGET_B, "--word", "c")
    assert code == 2
    assert payload["error"] == "UnknownSymbolError"

    code, payload = _run_json(capsys, "rc", PERMUTATION)
    assert code == 2
    assert payload["error"] == "NotSynchronizingError"


def test_gadget_equality_through_generated_files(capsys, tmp_path):
    for instance, expected in (("instance_empty.txt", 0), ("instance_nonempty.txt", 1)):
        target = tmp_path / f"gadget_{instance}.dfa"
        code, _ = _run_json(capsys, "gen", "gadget-a", "--manifest", f"{SAMPLES}/{instance}", "-o", str(target))
        assert code == 0
        code, payload = _run_json(capsys, "equal", str(target), GADGET_B)
        assert code == expected

    word = " ".join(payload["witness"])
    assert payload["details"]["direction"] == "a-not-b"
    code, member = _run_json(capsys, "member", str(target), "--word", word)
    assert member["verdict"] == "reset"
    code, member = _run_json(capsys, "member", GADGET_B, "--word", word)
    assert member["verdict"] == "not reset"


def test_member_accepts_spaced_words(capsys):
    code, payload = _run_json(capsys, "member", GADGET_B, "--word", "z a")
    assert code == 0
    assert payload["witness"] == ["z", "a"]


def test_gen_rejects_clashing_gadget_letters(capsys, tmp_path):
    clash = tmp_path / "clash.dfa"
    clash.write_text("alphabet: a x\nstates: q\ninitial: q\nq a q\nq x q\n", encoding="utf-8")
    code, payload = _run_json(capsys, "gen", "gadget-a", str(clash))
    assert code == 2
    assert payload["error"] == "GadgetError"
