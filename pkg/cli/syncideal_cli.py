"""Command-line utility for reset-word analysis, language decisions and gadget generation.

Exit codes: 0 when the property holds (or a generator succeeded), 1 when it
fails, 2 on usage, parse or resource errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Dict, List, Optional

from app.deps import Settings, get_settings
from app.schemas.common import CliVerdict, ErrorPayload, render_json
from app.services import decide_service, gadget_service, rc_service, sync_service
from core.automata.dfa import format_word
from core.errors import SyncIdealError

logger = logging.getLogger("syncideal")

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_ERROR = 2

_FAILING_VERDICTS = {
    CliVerdict.not_synchronizing.value,
    CliVerdict.not_reset.value,
    CliVerdict.fails.value,
    CliVerdict.not_ideal.value,
    CliVerdict.empty.value,
    CliVerdict.bound_only.value,
}


def exit_code_for(payload: Dict) -> int:
    verdict = payload.get("verdict")
    if verdict == CliVerdict.error.value:
        return EXIT_ERROR
    return EXIT_FAILS if verdict in _FAILING_VERDICTS else EXIT_OK


def _settings(args: argparse.Namespace) -> Settings:
    return get_settings().with_caps(subset_cap=args.subset_cap, pair_cap=args.pair_cap)


def cmd_check(args: argparse.Namespace) -> Dict:
    """Synchronization verdict and shortest reset word."""
    return sync_service.check(args.file, want_word=not args.no_word, timing=args.timing, settings=_settings(args))


def cmd_member(args: argparse.Namespace) -> Dict:
    """Test whether --word is a reset word."""
    return sync_service.member(args.file, args.word, settings=_settings(args))


def cmd_synlang(args: argparse.Namespace) -> Dict:
    """Write the minimal acceptor of the reset-word language."""
    return sync_service.synlang(args.file, args.output, timing=args.timing, settings=_settings(args))


def cmd_sc(args: argparse.Namespace) -> Dict:
    return sync_service.state_complexity_of(args.file, timing=args.timing, settings=_settings(args))


def cmd_ideal(args: argparse.Namespace) -> Dict:
    return decide_service.ideal(args.file, settings=_settings(args))


def cmd_compare(args: argparse.Namespace) -> Dict:
    """equal / include / strict on two automata over one alphabet."""
    return decide_service.decide(args.command, args.file_a, args.file_b, timing=args.timing, settings=_settings(args))


def cmd_intersect(args: argparse.Namespace) -> Dict:
    return decide_service.intersect(args.files, timing=args.timing, settings=_settings(args))


def cmd_rc(args: argparse.Namespace) -> Dict:
    """Reset complexity up to --max states."""
    return rc_service.reset_complexity(
        args.file, args.max, out=args.output, timing=args.timing, settings=_settings(args)
    )


def cmd_gen(args: argparse.Namespace) -> Dict:
    return gadget_service.generate(
        args.kind,
        args.inputs,
        sigma=args.sigma,
        order=args.order,
        n=args.n,
        manifest=args.manifest,
        out=args.output,
        settings=_settings(args),
    )


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a JSON payload")
    common.add_argument("--subset-cap", dest="subset_cap", type=_positive_int)
    common.add_argument("--pair-cap", dest="pair_cap", type=_positive_int)
    common.add_argument("--timing", action="store_true", help="Include elapsed_ms in stats")
    common.add_argument("-v", "--verbose", action="store_true", help="DEBUG logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Construct the CLI argument parser with subcommands."""
    parser = argparse.ArgumentParser(prog="syncideal")
    sub = parser.add_subparsers(dest="command")
    common = [_common_flags()]

    check_p = sub.add_parser("check", parents=common, help="Is the automaton synchronizing?")
    check_p.add_argument("file")
    check_p.add_argument("--no-word", dest="no_word", action="store_true", help="Skip the reset word search")
    check_p.set_defaults(func=cmd_check)

    member_p = sub.add_parser("member", parents=common, help="Is a word a reset word?")
    member_p.add_argument("file")
    member_p.add_argument("--word", default="")
    member_p.set_defaults(func=cmd_member)

    synlang_p = sub.add_parser("synlang", parents=common, help="Minimal acceptor of the reset words")
    synlang_p.add_argument("file")
    synlang_p.add_argument("-o", "--output")
    synlang_p.set_defaults(func=cmd_synlang)

    sc_p = sub.add_parser("sc", parents=common, help="State complexity of the reset words")
    sc_p.add_argument("file")
    sc_p.set_defaults(func=cmd_sc)

    ideal_p = sub.add_parser("ideal", parents=common, help="Is the accepted language an ideal?")
    ideal_p.add_argument("file")
    ideal_p.set_defaults(func=cmd_ideal)

    for name, text in (
        ("equal", "Syn(A) = Syn(B)?"),
        ("include", "Syn(A) ⊆ Syn(B)?"),
        ("strict", "Syn(A) ⊊ Syn(B)?"),
    ):
        compare_p = sub.add_parser(name, parents=common, help=text)
        compare_p.add_argument("file_a")
        compare_p.add_argument("file_b")
        compare_p.set_defaults(func=cmd_compare)

    intersect_p = sub.add_parser("intersect", parents=common, help="Is the intersection nonempty?")
    intersect_p.add_argument("files", nargs="+")
    intersect_p.set_defaults(func=cmd_intersect)

    rc_p = sub.add_parser("rc", parents=common, help="Reset complexity")
    rc_p.add_argument("file")
    rc_p.add_argument("--max", type=_positive_int, help="Largest candidate size to search")
    rc_p.add_argument("-o", "--output", help="Write the witness automaton here")
    rc_p.set_defaults(func=cmd_rc)

    gen_p = sub.add_parser("gen", parents=common, help="Generate gadgets and families")
    gen_p.add_argument("kind", choices=gadget_service.GENERATOR_KINDS)
    gen_p.add_argument("inputs", nargs="*")
    gen_p.add_argument("--sigma", help="Base alphabet, e.g. 'a b'")
    gen_p.add_argument("--order", help="Letter order for binarize, e.g. 'y z a b x'")
    gen_p.add_argument("--n", type=_positive_int, help="State count for cerny")
    gen_p.add_argument("--manifest", help="Instance manifest for gadget-a")
    gen_p.add_argument("-o", "--output")
    gen_p.set_defaults(func=cmd_gen)

    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def _print_human(payload: Dict) -> None:
    print(f"{payload['command']}: {payload['verdict']}")
    if "witness" in payload:
        print(f"  word: {format_word(payload['witness'])}")
    for key in ("rc_lower", "rc_upper", "sc", "method"):
        if key in payload:
            print(f"  {key}: {payload[key]}")
    if payload.get("message"):
        print(f"  {payload['message']}")
    details = dict(payload.get("details", {}))
    text = details.pop("dfa", None) or details.pop("witness_msa", None)
    for key in sorted(details):
        value = details[key]
        if isinstance(value, list):
            value = " ".join(str(item) for item in value) or "-"
        print(f"  {key}: {value}")
    if text:
        print(text, end="" if text.endswith("\n") else "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point invoked via `python -m cli.syncideal_cli ...`."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return EXIT_ERROR
    _configure_logging(args.verbose)
    try:
        payload = args.func(args)
    except (SyncIdealError, OSError) as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        payload = ErrorPayload(command=args.command, error=type(exc).__name__, message=str(exc)).to_dict()
        if not args.json:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
    if args.json:
        print(render_json(payload, get_settings().json_indent))
    else:
        _print_human(payload)
    return exit_code_for(payload)


if __name__ == "__main__":
    sys.exit(main())
