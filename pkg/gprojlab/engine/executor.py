"""Runs one command on one parsed algebra and builds the versioned report."""
from __future__ import annotations

import logging
from typing import Any, Dict, Tuple, Union

from .. import checks  # noqa: F401 (registers the std checks)
from ..checks.base import CheckContext
from ..checks.registry import get_check_class, run_check
from ..errors import GprojlabError, NotGorenstein, SpecSyntaxError, UnmatchedSyzygy, VerificationFailure
from ..gorenstein.gproj import gproj_indecomposables
from ..gorenstein.report import gorenstein_report
from ..gorenstein.stable import omega_stable_orbits, stable_table
from ..qspec.parser import ParsedAlgebra, parse_algebra
from ..qspec.report import SCHEMA_VERSION, to_jsonable
from ..schemas.run import RunConfig
from .logging import RunLog

logger = logging.getLogger("gprojlab.engine")

EXIT_PASS = 0
EXIT_INPUT = 1
EXIT_UNDETERMINED = 2
EXIT_FAILURE = 3


def algebra_summary(parsed: ParsedAlgebra) -> Dict[str, Any]:
    summary = parsed.algebra.summary()
    summary["components"] = sorted(parsed.components)
    if parsed.glued is not None:
        summary["gluing"] = parsed.glued.describe()
        summary["tree"] = [node.describe() for node in parsed.glued.nodes()]
    if parsed.triangles is not None:
        summary["triangles"] = parsed.triangles
    return summary


def _analyze(parsed: ParsedAlgebra, config: RunConfig, log: RunLog, report: Dict[str, Any]) -> int:
    result = gorenstein_report(parsed.algebra, config.bound, config.seed)
    log(f"Gorenstein status: {result.status}", {"gd": result.gd})
    report["certificates"] = result
    return EXIT_UNDETERMINED if result.gorenstein is None else EXIT_PASS


def _gproj(parsed: ParsedAlgebra, config: RunConfig, log: RunLog, report: Dict[str, Any]) -> int:
    result = gorenstein_report(parsed.algebra, config.bound, config.seed, with_simples=False)
    report["certificates"] = result
    if result.gorenstein is None and not config.heuristic:
        log(f"Gorenstein status undecided: {result.status}")
        return EXIT_UNDETERMINED
    found = gproj_indecomposables(parsed.algebra, result, glued=parsed.glued, seed=config.seed,
                                  heuristic=config.heuristic)
    log(f"{len(found)} nonprojective indecomposable Gorenstein projectives", {"strategy": found.strategy})
    report["gproj"] = found
    tables: Dict[str, Any] = {"stable": stable_table(found.modules, found.labels)}
    try:
        tables["orbits"] = omega_stable_orbits(found.modules, config.seed, found.labels)
    except UnmatchedSyzygy as exc:
        log(str(exc))
        tables["orbits"] = None
    report["tables"] = tables
    return EXIT_PASS if found.complete is not False else EXIT_UNDETERMINED


def _verify(name: str, parsed: ParsedAlgebra, config: RunConfig, log: RunLog, report: Dict[str, Any]) -> int:
    if get_check_class(name) is None:
        raise KeyError(f"Unknown check: {name}")
    ctx = CheckContext(bound=config.bound, seed=config.seed, sample=config.sample, max_dim=config.max_dim, logger=log)
    verdict = run_check(name, parsed, config.check_settings, ctx)
    report["verdicts"] = [verdict]
    if verdict.undetermined:
        return EXIT_UNDETERMINED
    return EXIT_PASS if verdict.passed else EXIT_FAILURE


def _error(exc: BaseException) -> Dict[str, Any]:
    out: Dict[str, Any] = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, SpecSyntaxError):
        out.update(exc.to_dict())
    return out


def execute(text: Union[str, bytes], config: RunConfig, source: str = "<input>") -> Tuple[Dict[str, Any], int]:
    """Parse and run; returns (report, exit code). Never raises for input or verification errors."""
    log = RunLog()
    report: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "command": config.command,
        "source": source,
        "config": config.echo(),
    }
    code = EXIT_INPUT
    try:
        parsed = parse_algebra(text, config.base_field())
        log(f"parsed {parsed.kind} document {parsed.name}", {"dimension": parsed.algebra.dimension})
        report["algebra"] = algebra_summary(parsed)
        if config.command == "analyze":
            code = _analyze(parsed, config, log, report)
        elif config.command == "gproj":
            code = _gproj(parsed, config, log, report)
        elif config.command == "verify":
            code = _verify(config.check or "", parsed, config, log, report)
        else:
            code = _verify("ct-a", parsed, config, log, report)
    except VerificationFailure as exc:
        log(f"verification failed: {exc.check}", exc.counterexample)
        report["verdicts"] = [{"check": exc.check, "passed": False, "undetermined": False,
                               "evidence": {}, "counterexample": exc.counterexample}]
        code = EXIT_FAILURE
    except NotGorenstein as exc:
        undecided = exc.report is not None and getattr(exc.report, "gorenstein", False) is None
        report["error"] = _error(exc)
        code = EXIT_UNDETERMINED if undecided else EXIT_INPUT
    except (GprojlabError, KeyError, ValueError) as exc:
        logger.info("input error: %s", exc)
        report["error"] = _error(exc)
        code = EXIT_INPUT
    report["status"] = {EXIT_PASS: "pass", EXIT_INPUT: "error", EXIT_UNDETERMINED: "undetermined",
                        EXIT_FAILURE: "fail"}[code]
    report["exit_code"] = code
    report["log"] = log.entries
    return to_jsonable(report), code


def execute_file(path: str, config: RunConfig) -> Tuple[Dict[str, Any], int]:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        report = {"schema": SCHEMA_VERSION, "command": config.command, "source": path, "config": config.echo(),
                  "error": {"type": type(exc).__name__, "message": str(exc)}, "status": "error",
                  "exit_code": EXIT_INPUT, "log": []}
        return report, EXIT_INPUT
    return execute(data, config, source=path)
