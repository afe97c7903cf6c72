"""Command-line front end: ``gprojlab <analyze|gproj|verify|ct-a> FILE...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from . import checks  # noqa: F401 (registers the std checks)
from .checks.registry import check_names
from .engine.executor import EXIT_INPUT, execute_file
from .engine.logging import configure_logging
from .qspec.report import emit_report
from .schemas.run import RunConfig
from .server.settings import settings

logger = logging.getLogger("gprojlab.cli")


def _setting(raw: str) -> tuple:
    key, sep, value = raw.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {raw!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("files", nargs="+", metavar="FILE", help=".quiv algebra document(s)")
    p.add_argument("--bound", type=int, default=None, help="resolution bound N (default GPROJLAB_BOUND or 4*dim+4)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--field", default=None, help="'rat' or a prime p; overrides the document")
    p.add_argument("--format", choices=("json", "md"), default=None)
    p.add_argument("--sample", type=int, default=None, help="sample size for sampled checks")
    p.add_argument("--max-dim", type=int, default=None, help="largest total dimension of sampled modules")
    p.add_argument("--out", default=None, help="write the JSON evidence report to this path")
    p.add_argument("--log-level", default=settings.LOG_LEVEL)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gprojlab", description="Gorenstein homological invariants of bound quiver algebras")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("analyze", help="Gorenstein dimension with certificates"))
    gproj = sub.add_parser("gproj", help="nonprojective indecomposable Gorenstein projectives, stable Hom table, Ω-orbits")
    gproj.add_argument("--heuristic", action="store_true", help="bounded membership test for algebras not certified Gorenstein")
    _common(gproj)
    verify = sub.add_parser("verify", help="run one verification check")
    verify.add_argument("check", choices=check_names())
    verify.add_argument("--set", dest="settings", action="append", type=_setting, default=[],
                        metavar="KEY=VALUE", help="check setting (JSON value)")
    _common(verify)
    _common(sub.add_parser("ct-a", help="triangle-gluing count and block check"))
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    values: Dict[str, Any] = {"command": args.command, "inputs": list(args.files)}
    for name in ("bound", "seed", "field", "format", "sample", "out"):
        value = getattr(args, name)
        if value is not None:
            values[name] = value
    if args.max_dim is not None:
        values["max_dim"] = args.max_dim
    if args.command == "verify":
        values["check"] = args.check
        values["check_settings"] = dict(args.settings)
    if getattr(args, "heuristic", False):
        values["heuristic"] = True
    return RunConfig(**values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging("ext://sys.stderr", str(args.log_level).upper())
    try:
        config = _config(args)
    except ValidationError as exc:
        print(f"gprojlab: {exc}", file=sys.stderr)
        return EXIT_INPUT

    reports: List[Dict[str, Any]] = []
    code = 0
    for path in config.inputs:
        logger.info("running %s on %s", config.command, path)
        report, exit_code = execute_file(path, config)
        reports.append(report)
        code = max(code, exit_code)
    result: Any = reports[0] if len(reports) == 1 else reports

    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(emit_report(result, "json"))
    sys.stdout.write(emit_report(result, config.format))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
