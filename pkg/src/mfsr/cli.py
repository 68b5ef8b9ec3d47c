"""Command-line front end: check, trace, decompose, saturate, glue, tables and serve.

Exit codes: 0 success; 1 verification mismatch or a failed ``--require-saturated``;
2 usage, parse, semantic or configuration error; 3 internal consistency error.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from collections.abc import Sequence

from pydantic import BaseModel

from mfsr import __version__, config
from mfsr.catalog import (
    TABLES,
    GluePart,
    entries_for_table,
    get_entry,
    glue,
    load_catalog,
    verify_all,
    verify_instance,
)
from mfsr.dsl import DslError, rep_from_text
from mfsr.env_validation import require_valid_environment
from mfsr.criterion import ReductionError
from mfsr.mcp.logging_utils import configure_logging
from mfsr.reports import (
    ListReport,
    ShowReport,
    check_report,
    decompose_report,
    dump_json,
    entry_info,
    render_text,
    saturate_report,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_PART = re.compile(r"(?P<id>[^:\s]+)(?::(?P<params>.*))?")
_PAIR = re.compile(r"(\d+)\.(\d+)-(\d+)\.(\d+)")


class _InputError(ValueError):
    """Malformed command argument that argparse cannot check by itself."""


def _read_expression(args: argparse.Namespace) -> str:
    """The DSL text of ``args.expression``; ``-`` reads it from stdin.

    The text is kept on ``args.source`` for the caret rendering of DSL errors.
    """
    text = sys.stdin.read() if args.expression == "-" else args.expression
    args.source = text.strip()
    return args.source


def _emit(report: BaseModel, args: argparse.Namespace) -> None:
    timing = not args.no_timing
    if args.format == "json":
        print(dump_json(report, timing=timing))
    else:
        print(render_text(report, timing=timing))


def _parse_part(spec: str) -> GluePart:
    """``S.13:m=1`` → the entry S.13 at m = 1."""
    m = _PART.fullmatch(spec.strip())
    if not m:
        raise _InputError(f"bad glue part {spec!r}; expected ID or ID:k=v,...")
    params: dict[str, int] = {}
    for item in filter(None, (m.group("params") or "").split(",")):
        key, sep, value = item.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            sep = ""
        if not sep or not key.strip():
            raise _InputError(f"bad parameter {item!r} in glue part {spec!r}; expected k=v with an integer v")
    return GluePart(get_entry(m.group("id")), params)


def _parse_pair(spec: str) -> tuple[tuple[int, int], tuple[int, int]]:
    """``0.1-1.0``: underlined slot 1 of part 0 glued to underlined slot 0 of part 1."""
    m = _PAIR.fullmatch(spec.strip())
    if not m:
        raise _InputError(f"bad --pair {spec!r}; expected PART.SLOT-PART.SLOT such as 0.0-1.0")
    a, b, c, d = (int(x) for x in m.groups())
    return (a, b), (c, d)


def _cmd_check(args: argparse.Namespace) -> int:
    text = _read_expression(args)
    rep = rep_from_text(text)
    report = check_report(text, rep, command=args.command)
    _emit(report, args)
    if args.require_saturated and not report.saturated:
        print("error: input is not saturated: " + "; ".join(report.violations), file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    text = _read_expression(args)
    _emit(decompose_report(text, rep_from_text(text)), args)
    return EXIT_OK


def _cmd_saturate(args: argparse.Namespace) -> int:
    text = _read_expression(args)
    _emit(saturate_report(text, rep_from_text(text)), args)
    return EXIT_OK


def _cmd_glue(args: argparse.Namespace) -> int:
    parts = [_parse_part(p) for p in args.parts]
    pairs = [_parse_pair(p) for p in args.pair] if args.pair else None
    rep = glue(parts, pairs)
    text = " + ".join(args.parts)
    if pairs:
        text += " pairs " + ",".join(args.pair)
    _emit(check_report(text, rep, command="glue"), args)
    return EXIT_OK


def _cmd_tables_verify(args: argparse.Namespace) -> int:
    cap = config.get_param_cap() if args.cap is None else args.cap
    jobs = config.get_jobs() if args.jobs is None else args.jobs
    seeds = config.get_choice_seeds() if args.seeds is None else args.seeds
    report = verify_all(cap, table=args.table, jobs=jobs, seeds=seeds)
    _emit(report, args)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _cmd_tables_list(args: argparse.Namespace) -> int:
    entries = [entry_info(e) for e in entries_for_table(args.table)]
    _emit(ListReport(table=args.table, entries=entries), args)
    return EXIT_OK


def _cmd_tables_show(args: argparse.Namespace) -> int:
    catalog = load_catalog()
    entry = get_entry(args.id, catalog)
    cap = config.get_param_cap() if args.cap is None else args.cap
    seeds = config.get_choice_seeds() if args.seeds is None else args.seeds
    instances = [verify_instance(entry, p, seeds=seeds) for p in entry.instances(cap)]
    _emit(ShowReport(entry=entry_info(entry), cap=cap, instances=instances), args)
    return EXIT_OK if all(i.passed for i in instances) else EXIT_MISMATCH


def _cmd_serve(args: argparse.Namespace) -> int:
    from mfsr.mcp.server import mcp

    sys.stderr.write(f"mfsr MCP v{__version__}\n")
    sys.stderr.flush()
    mcp.run(transport="stdio")
    return EXIT_OK


def _non_negative(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return n


def _positive(value: str) -> int:
    n = _non_negative(value)
    if n == 0:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--format",
        choices=("json", "text"),
        default="text",
        help="Report format (default: text).",
    )
    output.add_argument(
        "--no-timing",
        action="store_true",
        help="Report every duration as 0 so identical inputs give identical output.",
    )

    parser = argparse.ArgumentParser(
        prog="mfsr",
        description="Decide multiplicity freeness of symplectic representations and replay the classification tables.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    for name, helptext in (
        ("check", "Verdict, rank and generic isotropy of a representation."),
        ("trace", "Like check, with every reduction step."),
    ):
        p = sub.add_parser(name, parents=[output], help=helptext, description=helptext)
        p.add_argument("expression", help="DSL expression, or - to read it from stdin.")
        p.add_argument(
            "--require-saturated",
            action=argparse.BooleanOptionalAction,
            default=config.get_require_saturated(),
            help="Exit 1 when the input is not saturated (default: MFSR_REQUIRE_SATURATED).",
        )
        p.set_defaults(func=_cmd_check)

    p = sub.add_parser("decompose", parents=[output], help="Canonical components and their duality classes.")
    p.add_argument("expression", help="DSL expression, or - to read it from stdin.")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("saturate", parents=[output], help="The saturated representation on the same module.")
    p.add_argument("expression", help="DSL expression, or - to read it from stdin.")
    p.set_defaults(func=_cmd_saturate)

    p = sub.add_parser(
        "glue",
        parents=[output],
        help="Glue Table S entries along underlined sl(2)'s and check the result.",
    )
    p.add_argument("parts", nargs="+", metavar="ID[:k=v,...]", help="Table S entries, e.g. S.6 S.8 or S.13:m=1.")
    p.add_argument(
        "--pair",
        action="append",
        metavar="I.A-J.B",
        help="Glue underlined slot A of part I to slot B of part J (repeatable). "
        "Default: chain each part to the next.",
    )
    p.set_defaults(func=_cmd_glue)

    tables = sub.add_parser("tables", help="Work with the embedded classification tables.")
    tsub = tables.add_subparsers(dest="tables_command", required=True, metavar="SUBCOMMAND")

    p = tsub.add_parser("verify", parents=[output], help="Replay table rows, negative fixtures and gluing rules.")
    p.add_argument("--cap", type=_non_negative, default=None, help="Parameter cap (default: MFSR_PARAM_CAP).")
    p.add_argument("--table", choices=TABLES, default=None, help="Only this table.")
    p.add_argument("--jobs", type=_positive, default=None, help="Worker processes (default: MFSR_JOBS).")
    p.add_argument(
        "--seeds",
        type=_non_negative,
        default=None,
        help="Randomized weight-selection runs per instance (default: MFSR_CHOICE_SEEDS).",
    )
    p.set_defaults(func=_cmd_tables_verify)

    p = tsub.add_parser("list", parents=[output], help="Entry ids with rank, isotropy, W_V and i.")
    p.add_argument("--table", choices=TABLES, default=None, help="Only this table.")
    p.set_defaults(func=_cmd_tables_list)

    p = tsub.add_parser("show", parents=[output], help="One entry and its instances up to the cap.")
    p.add_argument("id", help="Entry id, e.g. 11.4 or S.13.")
    p.add_argument("--cap", type=_non_negative, default=None, help="Parameter cap (default: MFSR_PARAM_CAP).")
    p.add_argument("--seeds", type=_non_negative, default=None, help="Randomized weight-selection runs per instance.")
    p.set_defaults(func=_cmd_tables_show)

    p = sub.add_parser("serve", help="Run the MCP tool server on stdio.")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    configure_logging()
    args = build_parser().parse_args(argv)
    require_valid_environment()
    try:
        return args.func(args)
    except DslError as e:
        source = getattr(args, "source", "")
        print(f"error: {e.render(source)}", file=sys.stderr)
        return EXIT_USAGE
    except ReductionError as e:
        logger.error("internal consistency error: %s", e)
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
