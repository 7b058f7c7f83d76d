"""Command-line front end: ``helifeas {evaluate,sweep,tables,inventory}``.

Exit codes: 0 success, 2 usage, 3 config, 4 domain or envelope, 5 I/O.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

from . import config as config_mod
from .config import ENV_VAR, OutputFormat, RunConfig
from .errors import ConfigError, DomainError
from .fleet import check_range
from .report import feasibility_table
from .reproduce import inventory_table, reproduce_tables
from .scenario import evaluate, make_scenario, sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_DOMAIN = 4
EXIT_IO = 5


class OutputError(Exception):
    """Writing a result failed; carries the offending path."""


def _parse_heli(text: str) -> tuple[str, str | None]:
    model, _, condition = text.partition(":")
    return model, condition or None


def _load_config(args: argparse.Namespace) -> RunConfig:
    path = args.config or os.environ.get(ENV_VAR) or None
    cfg = config_mod.load(path)
    output = cfg.output
    if args.format:
        output = replace(output, format=OutputFormat(args.format))
    if args.output is not None:
        output = replace(output, path=args.output)
    return replace(cfg, output=output)


def _emit(text: str, path: str) -> None:
    if not path:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror}") from None


def cmd_evaluate(cfg: RunConfig, args: argparse.Namespace) -> int:
    model, condition = _parse_heli(args.heli)
    heli = cfg.get_helicopter(model)
    condition = condition or next(iter(heli.acquisition_prices))
    check_range(heli, args.distance)
    row = evaluate(make_scenario(cfg, model, condition, args.species, args.dims, args.distance))
    _emit(feasibility_table([row]).render(cfg.output.format.value), cfg.output.path)
    return EXIT_OK


def cmd_sweep(cfg: RunConfig, args: argparse.Namespace) -> int:
    rows = sweep(cfg.grid, cfg, max_workers=args.jobs)
    _emit(feasibility_table(rows, "sweep").render(cfg.output.format.value), cfg.output.path)
    return EXIT_OK


def cmd_tables(cfg: RunConfig, args: argparse.Namespace) -> int:
    out = Path(args.dir or cfg.output.dir)
    fmt = cfg.output.format.value
    suffix = ".md" if fmt == "markdown" else ".csv"
    bundle = reproduce_tables(cfg)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(f"cannot create {out}: {exc.strerror}") from None
    for name, table in bundle.tables.items():
        _emit(table.render(fmt), str(out / f"{name}{suffix}"))
    _emit(bundle.discrepancies_markdown(), str(out / "discrepancies.md"))
    print(f"wrote {len(bundle.tables)} tables and {len(bundle.discrepancies)} discrepancies to {out}",
          file=sys.stderr)
    return EXIT_OK


def cmd_inventory(cfg: RunConfig, args: argparse.Namespace) -> int:
    _emit(inventory_table(cfg).render(cfg.output.format.value), cfg.output.path)
    return EXIT_OK


def _global_options(default) -> argparse.ArgumentParser:
    # Accepted before or after the subcommand; the subcommand copy must not
    # overwrite a value given before it, hence SUPPRESS there.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=default,
                        help=f"config file (default: ${ENV_VAR}, else built-in defaults)")
    common.add_argument("--format", default=default, choices=[f.value for f in OutputFormat],
                        help="output format")
    common.add_argument("--output", default=default, help="write to this file instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_options(argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="helifeas", parents=[_global_options(None)],
        description="Feasibility of helicopter-borne selective logging: NPV, IRR and payback sweeps.",
    )
    parser.add_argument("--dump-config", action="store_true",
                        help="print the effective configuration and exit")
    sub = parser.add_subparsers(dest="command")

    ev = sub.add_parser("evaluate", parents=[common], help="evaluate one scenario")
    ev.add_argument("--heli", required=True, metavar="MODEL[:CONDITION]",
                    help="e.g. CH47:used-old; condition defaults to the first priced one")
    ev.add_argument("--species", required=True)
    ev.add_argument("--dims", required=True, help="scenario1, scenario2 or DBHxHEIGHT")
    ev.add_argument("--distance", required=True, type=float, help="target distance in km")
    ev.set_defaults(func=cmd_evaluate)

    sw = sub.add_parser("sweep", parents=[common], help="evaluate the [grid] cartesian product")
    sw.add_argument("--jobs", type=int, default=None, help="worker threads (output order is fixed)")
    sw.set_defaults(func=cmd_sweep)

    tb = sub.add_parser("tables", parents=[common], help="reproduce the reference tables")
    tb.add_argument("--dir", help="output directory (default: [output] dir)")
    tb.set_defaults(func=cmd_tables)

    inv = sub.add_parser("inventory", parents=[common], help="inventory and rotation report")
    inv.set_defaults(func=cmd_inventory)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if not args.dump_config and args.command is None:
        parser.print_usage(sys.stderr)
        print("helifeas: error: a subcommand is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = _load_config(args)
        if args.dump_config:
            _emit(config_mod.dumps(cfg), cfg.output.path)
            return EXIT_OK
        return args.func(cfg, args)
    except ConfigError as exc:
        print(f"helifeas: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"helifeas: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OutputError as exc:
        print(f"helifeas: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
