"""Validation reports and the exception vocabulary shared by every module."""

from __future__ import annotations

import os
from dataclasses import dataclass, field


class FoldboxError(Exception):
    """Base class for errors raised by foldbox operations."""

    tag = "ERROR"

    def __init__(self, message: str = "", where: tuple = ()):
        super().__init__(message)
        self.where = tuple(where)


class InvalidInput(FoldboxError):
    tag = "INVALID_INPUT"

    def __init__(self, message: str = "", where: tuple = (), report: "ValidationReport | None" = None):
        super().__init__(message, where)
        self.report = report


class CapExceeded(FoldboxError):
    tag = "CAP_EXCEEDED"


@dataclass(frozen=True)
class Violation:
    tag: str
    where: tuple = ()
    message: str = ""

    def render(self) -> str:
        loc = ", ".join(str(w) for w in self.where)
        text = f"{self.tag} ({loc})"
        return f"{text}: {self.message}" if self.message else text


@dataclass
class ValidationReport:
    """Every violated axiom instance plus structural problems found in a structure.

    Structural errors (dangling ids, missing or extra table entries) are kept
    apart from axiom violations; axiom checks are skipped when structural
    errors are present because their table lookups would be meaningless.
    """

    kind: str
    violations: list[Violation] = field(default_factory=list)
    errors: list[Violation] = field(default_factory=list)
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations and not self.errors

    def tags(self) -> set[str]:
        return {v.tag for v in self.violations} | {e.tag for e in self.errors}

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for v in other.violations:
            self.violations.append(Violation(prefix + v.tag, v.where, v.message) if prefix else v)
        for e in other.errors:
            self.errors.append(Violation(prefix + e.tag, e.where, e.message) if prefix else e)
        self.truncated = self.truncated or other.truncated

    def lines(self) -> list[str]:
        out = [f"error {e.render()}" for e in self.errors]
        out += [f"violation {v.render()}" for v in self.violations]
        return out or ["OK"]

    def require(self) -> None:
        if not self.ok:
            raise InvalidInput(f"invalid {self.kind}: " + "; ".join(self.lines()[:5]), report=self)


class _Stop(Exception):
    pass


class Collector:
    """Accumulates findings; raises internally once `limit` findings are reached."""

    def __init__(self, kind: str, limit: int | None = None):
        self.report = ValidationReport(kind)
        self.limit = limit

    def _check_limit(self) -> None:
        r = self.report
        if self.limit is not None and len(r.violations) + len(r.errors) >= self.limit:
            r.truncated = True
            raise _Stop

    def violation(self, tag: str, where: tuple = (), message: str = "") -> None:
        self.report.violations.append(Violation(tag, tuple(where), message))
        self._check_limit()

    def error(self, tag: str, where: tuple = (), message: str = "") -> None:
        self.report.errors.append(Violation(tag, tuple(where), message))
        self._check_limit()

    def merge(self, other: ValidationReport, prefix: str = "") -> None:
        for e in other.errors:
            self.error(prefix + e.tag, e.where, e.message)
        for v in other.violations:
            self.violation(prefix + v.tag, v.where, v.message)

    @property
    def has_errors(self) -> bool:
        return bool(self.report.errors)


def run_checks(kind: str, limit: int | None, *phases) -> ValidationReport:
    """Run check phases in order, stopping after a phase that found structural errors."""
    col = Collector(kind, limit)
    try:
        for phase in phases:
            phase(col)
            if col.has_errors:
                break
    except _Stop:
        pass
    return col.report


# size caps

DEFAULT_MAX_OBJECTS = 16
DEFAULT_MAX_MORPHISMS = 128


def morphism_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("FOLDBOX_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_MAX_MORPHISMS


def object_cap(override: int | None = None) -> int:
    if override is not None:
        return max(override, DEFAULT_MAX_OBJECTS)
    env = os.environ.get("FOLDBOX_CAP")
    if env:
        try:
            return max(int(env), DEFAULT_MAX_OBJECTS)
        except ValueError:
            pass
    return DEFAULT_MAX_OBJECTS


def check_caps(col: Collector, n_objects: int, morphism_sorts: dict[str, int], cap: int | None = None) -> None:
    if n_objects > object_cap(cap):
        col.error("CAP_EXCEEDED", ("objects", str(n_objects)), f"more than {object_cap(cap)} objects")
    limit = morphism_cap(cap)
    for sort, n in morphism_sorts.items():
        if n > limit:
            col.error("CAP_EXCEEDED", (sort, str(n)), f"more than {limit} {sort}")
