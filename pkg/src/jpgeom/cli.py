"""Command line interface: ``jpgeom catalog|verify|orbit|act|tkk|extend``.

Exit codes: 0 success, 1 verification failure or orbit cap exceeded,
2 bad input.  Reports are byte-identical for identical inputs unless
JPGEOM_TIMING is set, which fills in ``elapsed_ms``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog
from .catalog import CatalogEntry
from .centext import universal_extension
from .errors import CapExceeded, JPGeomError, NotInChart
from .exactla import Field
from .grading import minus_filtration, plus_filtration
from .jordan import JordanPair, tkk
from .projgroup import GroupWord, evaluate_word, fractional_action, grading_orbit, orbit_enumerate
from .suites import SUITES, SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(data) -> None:
    print(json.dumps(data, indent=2, default=str))


def _field(text: str | None) -> Field | None:
    return Field.parse(text) if text else None


def _read_json_arg(text: str):
    """Inline JSON, or the path of a JSON file."""
    path = Path(text)
    raw = path.read_text() if path.is_file() else text
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"not a JSON document or file: {text!r} ({exc})") from None


def _entry(text: str, field: Field | None, validate: bool = True) -> CatalogEntry:
    if text in catalog.names():
        return catalog.get(text, field)
    if Path(text).is_file():
        entry = catalog.load(Path(text).read_text(), validate_entry=validate)
        if field is not None and entry.field != field:
            raise UsageError(f"entry is over {entry.field}, not {field}")
        return entry
    raise UsageError(f"unknown entry {text!r}; known: {', '.join(catalog.names())}")


# ---------------------------------------------------------------- commands


def cmd_catalog(args) -> int:
    field = _field(args.field)
    if args.action == "list":
        for name in catalog.names():
            print(name)
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog show needs an entry name")
    print(catalog.dumps(_entry(args.name, field)))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}, all")
    field = _field(args.field)
    # a file entry is loaded unvalidated so that a bad entry shows up as a failing case
    entry = _entry(args.entry, field, validate=False) if args.entry else None
    cfg = SuiteConfig(entry=entry, field=field, samples=args.samples, seed=args.seed)
    report = run_suite(args.suite, cfg, timing=bool(os.environ.get("JPGEOM_TIMING")))
    if args.json:
        _emit(report.to_json())
    else:
        data = report.to_json()
        for case in data["cases"]:
            print(f"{case['status'].upper():4} {case['name']}")
        print(f"{report.suite}: {report.passed} passed, {report.failed} failed, {report.skipped} skipped")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_orbit(args) -> int:
    entry = _entry(args.entry, _field(args.field))
    d = entry.grading
    try:
        if args.side == "gradings":
            orbit = grading_orbit(d, args.cap)
        else:
            seed = plus_filtration(d) if args.side == "plus" else minus_filtration(d)
            orbit = orbit_enumerate(d, seed, args.cap)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(
        {
            "entry": entry.name,
            "field": entry.field.to_json(),
            "side": args.side,
            "size": len(orbit),
            "orbit": [x.to_json() for x in orbit],
        }
    )
    return EXIT_OK


def cmd_act(args) -> int:
    entry = _entry(args.entry, _field(args.field))
    d, f = entry.grading, entry.field
    word = GroupWord.parse(args.word, d)
    coords = [f.parse_scalar(t) for t in args.point.split(",") if t.strip()]
    if len(coords) != d.g1.dim:
        raise UsageError(f"point needs {d.g1.dim} coordinates")
    x = d.g1.from_coordinates(coords)
    try:
        y = fractional_action(evaluate_word(word, d), x, d)
    except NotInChart:
        print("not-in-chart")
        return EXIT_OK
    print(",".join(f.format_scalar(a) for a in d.g1.coordinates(y)))
    return EXIT_OK


def cmd_tkk(args) -> int:
    data = _read_json_arg(args.pair)
    try:
        pair = JordanPair.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, JPGeomError):
            raise
        raise UsageError(f"malformed pair: {exc!r}") from None
    t = tkk(pair)
    fmt = pair.field.format_scalar
    _emit(
        {
            "algebra": t.algebra.to_json(),
            "euler": [fmt(a) for a in t.grading.euler],
            "dims": {"total": t.algebra.dim, "grading": list(t.grading.dims)},
        }
    )
    return EXIT_OK


def cmd_extend(args) -> int:
    entry = _entry(args.entry, _field(args.field))
    _emit(universal_extension(entry.algebra, entry.grading).to_json())
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _cap(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("cap must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jpgeom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or show catalog entries")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--field", help="q or fp:P (default fp:5)")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}, all")
    p.add_argument("--entry", help="catalog name or path of an entry JSON file")
    p.add_argument("--field")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="enumerate a flag or grading orbit")
    p.add_argument("--entry", required=True)
    p.add_argument("--field")
    p.add_argument("--side", choices=["plus", "minus", "gradings"], default="plus")
    p.add_argument("--cap", type=_cap, help="orbit size limit (default JPGEOM_CAP or built-in)")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("act", help="apply a group word to a chart point")
    p.add_argument("--entry", required=True)
    p.add_argument("--field")
    p.add_argument("--word", required=True, help='e.g. "x+:1,0;x-:0,2;dil:3"')
    p.add_argument("--point", required=True, help="coordinates in g_1, comma separated")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("tkk", help="TKK algebra of a Jordan pair given as JSON")
    p.add_argument("--pair", required=True, help="inline JSON or a file path")
    p.set_defaults(func=cmd_tkk)

    p = sub.add_parser("extend", help="weakly universal central extension of an entry")
    p.add_argument("--entry", required=True)
    p.add_argument("--field")
    p.set_defaults(func=cmd_extend)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, JPGeomError, ValueError, KeyError) as exc:
        # everything the library raises on bad input lands here
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
