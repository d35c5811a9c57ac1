#!/usr/bin/env python3
"""
Command-line front end: JSON documents in, JSON documents out.

Exit status is 0 on success, 1 on malformed input and 2 on a domain error or
a failed verify suite. Errors are reported on standard output as
{"error": {"name": ..., "message": ..., "payload": ...}}; progress and status
lines go to standard error.
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Callable

from jetmoeb import codec
from jetmoeb.branching import (
    MODES,
    BranchingClass,
    DivisorClassData,
    act,
    class_from_affine_jet,
    class_of,
    diff_classes,
    divisor_diff,
    divisor_translate,
    normal_form,
    postcompose_germ,
    translate_class,
)
from jetmoeb.config import Settings
from jetmoeb.errors import JetError, MalformedInput
from jetmoeb.fuchs import (
    forced_alpha,
    obstruction_polynomial,
    obstruction_value,
    reconstruct_map,
    riccati_solve,
)
from jetmoeb.scalars import Backend
from jetmoeb.verify import run_suites

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_DOMAIN = 2

Handler = Callable[[argparse.Namespace, Settings], Any]


class _Parser(argparse.ArgumentParser):
    """Usage errors are malformed input, so they exit with status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def _backend(settings: Settings) -> Backend:
    return Backend(settings.backend, settings.float_tolerance)


def read_document(source: str) -> Any:
    """Load the JSON input from a path, or from standard input for "-"."""
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise MalformedInput(f"Cannot read {source}: {e}") from e
    return codec.loads(text)


def _is_divisor(doc: Any) -> bool:
    return isinstance(doc, dict) and "points" in doc


def _field(doc: Any, key: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInput(f"Input needs a {key!r} entry")
    return doc[key]


# subcommands


def cmd_class(args: argparse.Namespace, settings: Settings) -> Any:
    doc = read_document(args.input)
    backend = _backend(settings)
    if isinstance(doc, dict) and "a" in doc:
        return codec.encode_class(class_of(codec.decode_branched(doc, backend)))
    if args.n is None:
        raise MalformedInput("A plain jet needs --n")
    f = codec.decode_powerjet(doc, backend)
    return codec.encode_class(class_from_affine_jet(f, args.n))


def cmd_normal_form(args: argparse.Namespace, settings: Settings) -> Any:
    doc = read_document(args.input)
    c = codec.decode_class(doc, _backend(settings))
    return codec.encode_branched(normal_form(c))


def cmd_act(args: argparse.Namespace, settings: Settings) -> Any:
    doc = read_document(args.input)
    backend = _backend(settings)
    j = codec.decode_branched(_field(doc, "jet"), backend)
    if "alpha" in doc:
        image = postcompose_germ(j, codec.decode_powerjet(doc["alpha"], backend))
    else:
        image = act(codec.decode_moebius(_field(doc, "moebius"), backend), j)
    return {
        "jet": codec.encode_branched(image),
        "class": codec.encode_class(class_of(image)),
    }


def _decode_classes(doc: Any, backend: Backend) -> BranchingClass | DivisorClassData:
    if _is_divisor(doc):
        return codec.decode_divisor(doc, backend)
    return codec.decode_class(doc, backend)


def cmd_diff(args: argparse.Namespace, settings: Settings) -> Any:
    doc = read_document(args.input)
    backend = _backend(settings)
    left = _decode_classes(_field(doc, "left"), backend)
    right = _decode_classes(_field(doc, "right"), backend)
    if isinstance(left, DivisorClassData) and isinstance(right, DivisorClassData):
        return codec.encode_divisor_delta(divisor_diff(left, right, args.mode))
    if isinstance(left, BranchingClass) and isinstance(right, BranchingClass):
        return codec.encode_delta(diff_classes(left, right, args.mode))
    raise MalformedInput("'left' and 'right' must both be classes or both divisors")


def cmd_translate(args: argparse.Namespace, settings: Settings) -> Any:
    doc = read_document(args.input)
    backend = _backend(settings)
    base = _decode_classes(_field(doc, "class"), backend)
    delta = _field(doc, "delta")
    if isinstance(base, DivisorClassData):
        shifted = divisor_translate(base, codec.decode_divisor_delta(delta, backend))
        return codec.encode_divisor(shifted)
    if _is_divisor(delta):
        raise MalformedInput("A single class is translated by a single delta")
    return codec.encode_class(translate_class(base, codec.decode_delta(delta, backend)))


def cmd_solve(args: argparse.Namespace, settings: Settings) -> Any:
    doc = read_document(args.input)
    backend = _backend(settings)
    phi = codec.decode_quaddiff(doc, backend, n=args.n)
    delta_n = None
    if args.delta_n is not None:
        delta_n = codec.decode_scalar(args.delta_n, backend)
    sol = riccati_solve(phi, delta_n)
    jet = reconstruct_map(sol)
    return {
        "phi": codec.encode_quaddiff(phi),
        "solution": codec.encode_solution(sol),
        "jet": codec.encode_branched(jet),
        "class": codec.encode_class(class_of(jet)),
    }


def cmd_obstruction(args: argparse.Namespace, settings: Settings) -> Any:
    doc = read_document(args.input)
    phi = codec.decode_quaddiff(doc, _backend(settings), n=args.n)
    value = obstruction_value(phi)
    return {
        "n": phi.n,
        "phi": codec.encode_quaddiff(phi),
        "value": codec.encode_scalar(value),
        "forced_alpha": codec.encode_scalar(forced_alpha(phi)),
        "vanishes": value.is_zero(),
    }


def cmd_obstruction_poly(args: argparse.Namespace, settings: Settings) -> Any:
    if args.n is None:
        raise MalformedInput("obstruction-poly needs --n")
    return codec.encode_obstruction(
        obstruction_polynomial(args.n, settings.max_obstruction_order)
    )


def cmd_verify(args: argparse.Namespace, settings: Settings) -> Any:
    start = time.time()
    try:
        results = run_suites(args.suite, settings, quiet=args.quiet)
    except ValueError as e:
        raise MalformedInput(str(e)) from e
    if not args.quiet:
        elapsed = time.time() - start
        passed = sum(r.passed for r in results)
        failed = sum(r.failed for r in results)
        print(
            f"{passed} passed, {failed} failed in {elapsed:.1f}s",
            file=sys.stderr,
        )
    return {
        "backend": settings.backend,
        "seed": settings.seed,
        "order": settings.order,
        "samples": settings.samples,
        "ok": all(r.ok for r in results),
        "suites": [r.to_json() for r in results],
    }


COMMANDS: dict[str, tuple[Handler, str]] = {
    "class": (cmd_class, "Branching class of a branched jet"),
    "normal-form": (cmd_normal_form, "Normal-form jet of a branching class"),
    "act": (cmd_act, "Postcompose a branched jet by a Möbius map or a germ"),
    "diff": (cmd_diff, "Difference of two classes (or divisor class data)"),
    "translate": (cmd_translate, "Translate a class by a delta"),
    "solve": (cmd_solve, "Solve S(f) = phi at a cone point"),
    "obstruction": (cmd_obstruction, "Evaluate the obstruction on phi"),
    "obstruction-poly": (cmd_obstruction_poly, "Print the obstruction polynomial"),
    "verify": (cmd_verify, "Run the randomized property suites"),
}

NO_INPUT = ("obstruction-poly", "verify")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="jetmoeb",
        description="Exact jets of Möbius maps, Schwarzians and branching classes",
    )
    parser.add_argument(
        "--backend",
        type=str,
        choices=["exact", "float"],
        default="exact",
        help="Coefficient field (default: exact)",
    )
    parser.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help="Relative tolerance of the float backend (default: 1e-10)",
    )
    parser.add_argument(
        "--quiet", action="store_true", help="Suppress status and progress output"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (handler, help_text) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text, description=help_text)
        sub.set_defaults(handler=handler)
        if name not in NO_INPUT:
            sub.add_argument(
                "input",
                nargs="?",
                default="-",
                help='JSON input file, or "-" for standard input (default: -)',
            )
        sub.add_argument("--n", type=int, default=None, help="Branch order")
        if name in ("diff", "translate"):
            sub.add_argument(
                "--mode",
                type=str,
                choices=MODES,
                default="preschwarzian",
                help="Affine structure to use (default: preschwarzian)",
            )
        if name == "solve":
            sub.add_argument(
                "--delta-n",
                type=str,
                default=None,
                help="Free Riccati coefficient, e.g. 1/2 or 1-2i (default: 0)",
            )
        if name == "verify":
            sub.add_argument(
                "--suite",
                type=str,
                default="all",
                help="Suite name(s), comma-separated, or all (default: all)",
            )
            sub.add_argument(
                "--order",
                type=int,
                default=None,
                help="Truncation order of the random jets (default: 8)",
            )
            sub.add_argument(
                "--seed", type=int, default=None, help="Random seed (default: 0)"
            )
            sub.add_argument(
                "--samples",
                type=int,
                default=None,
                help="Random cases per property (default: 100)",
            )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    for flag in ("n", "order", "samples"):
        value = getattr(args, flag, None)
        if value is not None and value < 0:
            parser.error(f"--{flag} must be a natural number")

    settings = Settings().with_overrides(
        backend=args.backend,
        float_tolerance=args.tolerance,
        order=getattr(args, "order", None),
        seed=getattr(args, "seed", None),
        samples=getattr(args, "samples", None),
    )

    try:
        result = args.handler(args, settings)
    except MalformedInput as e:
        print(codec.dumps({"error": e.to_json()}))
        return EXIT_MALFORMED
    except JetError as e:
        print(codec.dumps({"error": e.to_json()}))
        return EXIT_DOMAIN

    print(codec.dumps(result))
    if args.command == "verify" and not result["ok"]:
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
