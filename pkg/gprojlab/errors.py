from __future__ import annotations

from typing import Any, Dict, Optional, Sequence


class GprojlabError(ValueError):
    """Base class for every error raised by gprojlab."""


class QuiverError(GprojlabError):
    pass


class NotAdmissible(GprojlabError):
    def __init__(self, witness: Sequence[str], reason: str = "") -> None:
        self.witness = tuple(witness)
        msg = reason or "ideal is not admissible"
        super().__init__(f"{msg}; extendable cycle: {'.'.join(self.witness)}")


class SpecSyntaxError(GprojlabError):
    def __init__(self, line: int, column: int, reason: str) -> None:
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"line {line}, column {column}: {reason}")

    def to_dict(self) -> Dict[str, Any]:
        return {"line": self.line, "column": self.column, "reason": self.reason}


class ShapeMismatch(GprojlabError):
    pass


class RelationViolation(GprojlabError):
    def __init__(self, path: Sequence[str]) -> None:
        self.path = tuple(path)
        super().__init__(f"relation {'.'.join(self.path)} acts nonzero")


class ResolutionBoundExceeded(GprojlabError):
    def __init__(self, degree: int, bound: int) -> None:
        self.degree = degree
        self.bound = bound
        super().__init__(f"resolution bound {bound} exhausted before degree {degree}")


class SplitFailure(GprojlabError):
    def __init__(self, message: str, endomorphism: Any = None) -> None:
        self.endomorphism = endomorphism
        super().__init__(message)


class NotGorenstein(GprojlabError):
    def __init__(self, message: str, report: Any = None) -> None:
        self.report = report
        super().__init__(message)


class UnmatchedSyzygy(GprojlabError):
    def __init__(self, index: int, label: str = "") -> None:
        self.index = index
        self.label = label
        super().__init__(f"syzygy of member {label or index} matches no list member")


class GluingError(GprojlabError):
    pass


class VerificationFailure(GprojlabError):
    def __init__(self, check: str, counterexample: Optional[Dict[str, Any]] = None) -> None:
        self.check = check
        self.counterexample = counterexample or {}
        super().__init__(f"verification failed: {check}")
