"""Deterministic report assembly and rendering.

A report is an ordered list of labeled values (Chow classes, exact rationals,
plain text) plus optional named cross-checks.  Three renderers share the same
entry list: ``exact`` prints rationals as p/q, ``decimal`` re-renders the
rational scalars to 6 significant digits, and ``json`` carries both forms.
Decimal strings are derived from the exact values at render time only, and
every renderer is a pure function of the report, so equal reports produce
byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .chow import ChowElement
from .exact import decimal_text


@dataclass(frozen=True)
class ReportEntry:
    """One labeled value; ``exact`` is None for an undefined rational."""

    key: str
    kind: str
    exact: str | None
    decimal: str | None = None


@dataclass(frozen=True)
class CheckResult:
    key: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class Report:
    scenario: str
    space: str
    entries: tuple[ReportEntry, ...]
    checks: tuple[CheckResult, ...] = ()

    @property
    def all_checks_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def value(self, key: str) -> str | None:
        """Exact text of the entry with the given key (for tests and audits)."""
        for entry in self.entries:
            if entry.key == key:
                return entry.exact
        raise KeyError(key)


def rational_entry(key: str, value: Fraction | None) -> ReportEntry:
    if value is None:
        return ReportEntry(key, "rational", None, None)
    return ReportEntry(key, "rational", str(value), decimal_text(value))


def class_entry(key: str, value: ChowElement) -> ReportEntry:
    return ReportEntry(key, "class", str(value))


def text_entry(key: str, value: str) -> ReportEntry:
    return ReportEntry(key, "text", value)


def _lines(report: Report, use_decimal: bool) -> list[str]:
    lines = [f"scenario = {report.scenario}", f"space = {report.space}"]
    for entry in report.entries:
        if entry.exact is None:
            shown = "undefined"
        elif use_decimal and entry.kind == "rational":
            shown = entry.decimal
        else:
            shown = entry.exact
        lines.append(f"{entry.key} = {shown}")
    for check in report.checks:
        verdict = "pass" if check.passed else "FAIL"
        lines.append(f"check {check.key} = {verdict} ({check.detail})")
    return lines


def render_exact(report: Report) -> str:
    return "\n".join(_lines(report, use_decimal=False)) + "\n"


def render_decimal(report: Report) -> str:
    return "\n".join(_lines(report, use_decimal=True)) + "\n"


def render_json(report: Report) -> str:
    values = {}
    for entry in report.entries:
        item: dict = {"kind": entry.kind, "exact": entry.exact}
        if entry.kind == "rational":
            item["decimal"] = entry.decimal
        values[entry.key] = item
    doc: dict = {
        "scenario": report.scenario,
        "space": report.space,
        "values": values,
    }
    if report.checks:
        doc["checks"] = {
            c.key: {"passed": c.passed, "detail": c.detail} for c in report.checks
        }
    return json.dumps(doc, indent=2) + "\n"


RENDERERS = {
    "exact": render_exact,
    "decimal": render_decimal,
    "json": render_json,
}
