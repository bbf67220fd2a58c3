"""ltskit command line.

Exit codes: 0 when everything passes, 1 on a mathematical failure,
2 on bad input (unreadable file, schema error, unknown name).
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path

from . import report as rp
from . import serialization as ser
from .checks import SUITES, run_checks, structure_checks
from .derivations import SPACE_TAGS
from .extension import build_breve
from .linalg import FieldSpec
from .lts import (
    DEFAULT_CATALOG,
    CatalogError,
    LieTripleSystem,
    split_args,
    catalog,
    dsum,
    validate,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_field(text: str, allow_small_char: bool = False) -> FieldSpec:
    t = text.strip().upper()
    if t in ("Q", "QQ"):
        return FieldSpec.rationals()
    m = re.fullmatch(r"GF\(?(\d+)\)?", t)
    if not m:
        raise InputError(f"unknown field {text!r}; use Q or GF(p)")
    try:
        return FieldSpec("GF", int(m.group(1)), allow_small_char)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_system(path: str, allow_small_char: bool = False) -> LieTripleSystem:
    try:
        return ser.load(path, allow_small_char)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except (ser.LTSFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def detect_summands(T: LieTripleSystem):
    """Summands named by a ``dsum(a,b)`` system name, if they rebuild T exactly."""
    m = re.fullmatch(r"dsum\((.*)\)", T.name.replace(" ", ""))
    if not m:
        return None
    parts = split_args(m.group(1))
    if len(parts) != 2:
        return None
    try:
        A, B = (catalog(p, T.field) for p in parts)
    except CatalogError:
        return None
    return (A, B) if dsum(A, B) == T else None


def _require_valid(T: LieTripleSystem) -> None:
    rep = validate(T)
    if not rep.passed:
        v = rep.violations[0]
        raise _MathFailure(f"{T.name or 'system'} is not a Lie triple system: "
                           f"{v.identity} fails at {v.indices}")


class _MathFailure(Exception):
    pass


def _write(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def _seed(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("LTSKIT_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise InputError(f"LTSKIT_SEED must be an integer, got {env!r}") from exc


def cmd_validate(args) -> int:
    T = load_system(args.file, args.allow_small_char)
    rep = validate(T)
    if args.format == "json":
        sys.stdout.write(rp.dumps(rp.validation_report(T, rep)))
    else:
        if rep.passed:
            print(f"{T.name or args.file}: ok (dim {T.dim})")
        for v in rep.violations:
            res = " ".join(T.field.format(x) for x in v.residual)
            print(f"{v.identity} {v.indices}: residual [{res}]")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_spaces(args) -> int:
    T = load_system(args.file, args.allow_small_char)
    tags = list(SPACE_TAGS) if args.which == "all" else [t.strip() for t in args.which.split(",")]
    unknown = [t for t in tags if t not in SPACE_TAGS]
    if unknown or not tags:
        raise InputError(f"unknown space tag(s) {unknown}; choose from {', '.join(SPACE_TAGS)}")
    _require_valid(T)
    report = rp.spaces_report(T, sorted(set(tags)))
    text = rp.dumps(report) if args.format == "json" else rp.spaces_text(report)
    _write(text, args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    T = load_system(args.file, args.allow_small_char)
    seed = _seed(args.seed)
    if validate(T).passed:
        checks = run_checks(T, args.suite, seed, detect_summands(T))
    else:
        checks = structure_checks(T)[:1]
    report = rp.checks_report(T, checks, args.suite, seed)
    text = rp.dumps(report) if args.format == "json" else rp.checks_text(report)
    _write(text, args.out)
    return EXIT_FAIL if rp.has_failure(checks) else EXIT_OK


def cmd_breve(args) -> int:
    T = load_system(args.file, args.allow_small_char)
    _require_valid(T)
    B = build_breve(T)
    _write(ser.dumps(B.system), args.out)
    return EXIT_OK


def cmd_catalog(args) -> int:
    field = parse_field(args.field, args.allow_small_char)
    if args.action == "list":
        for name in DEFAULT_CATALOG:
            print(f"{name}\tdim {catalog(name, field).dim}")
        print("(also: abelian(n) for any n >= 0, dsum(a,b) of any two entries)")
        return EXIT_OK
    if not args.name:
        raise InputError("catalog emit needs a system name")
    try:
        T = catalog(args.name, field)
    except CatalogError as exc:
        raise InputError(str(exc)) from exc
    _write(ser.dumps(T), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ltskit",
                                description="Exact computations on Lie triple systems.")
    p.add_argument("--allow-small-char", action="store_true",
                   help="permit GF(2) and GF(3)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the Lie triple system axioms")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("spaces", help="compute operator spaces")
    s.add_argument("file")
    s.add_argument("--which", default="all",
                   help="comma-separated subset of " + ",".join(SPACE_TAGS) + ", or all")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_spaces)

    s = sub.add_parser("check", help="run verification suites")
    s.add_argument("file")
    s.add_argument("--suite", choices=SUITES, default="all")
    s.add_argument("--seed", type=int, default=None,
                   help="random seed (default: $LTSKIT_SEED or 0)")
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("breve", help="write the enlarged system Tt + Tt^3")
    s.add_argument("file")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_breve)

    s = sub.add_parser("catalog", help="list or emit built-in systems")
    s.add_argument("action", choices=("list", "emit"))
    s.add_argument("name", nargs="?")
    s.add_argument("--field", default="Q", help="Q or GF(p)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _MathFailure as exc:
        print(f"fail: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
