"""Scenario files: schema validation, bundle resolution, pipeline execution.

A scenario is a JSON document describing one complete computation:

    {
      "name": "...",
      "space": [n1, ..., nk],
      "bundles": {"name": "expression", ...},
      "degeneracy": {"a": "name", "b": "name"},
      "family": {"fiber_genus": g, "base_genus": q},
      "base_change": {...},            // optional
      "notes": ["..."]                 // optional, ignored by the pipeline
    }

Rationals are written as integers or "p/q" strings; floating-point literals
are rejected everywhere so no value can silently lose exactness.  The
``base_change`` block carries the multisection data plus the base family's
explicit lambda and delta degrees, which the runner cross-checks against the
family stage of the same scenario before using them.
"""

from __future__ import annotations

import json
import re
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .base_change import (
    BaseChangeParams,
    beta_delta0_correction,
    pullback_slope,
    sigma_tilde_self_intersection,
)
from .bundles import BundleClass, chern, virtual_difference
from .chow import ProductSpace
from .degeneracy import (
    DegeneracyInput,
    ambient_tangent_of_product,
    double_point_check,
    virtual_chern_numbers,
)
from .errors import ExpressionError, InternalCheckError, ScenarioError
from .exact import as_fraction
from .expressions import evaluate_expression, parse_expression
from .families import invariants_from_chern_numbers
from .report import CheckResult, Report, class_entry, rational_entry, text_entry

BUNDLED_SCENARIOS = ("m15", "m16")

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_GRAMMAR_KEYWORDS = frozenset({"O", "sum", "dual", "twist", "ker"})


@dataclass(frozen=True)
class Scenario:
    """A validated scenario, ready to run."""

    name: str
    space: ProductSpace
    bundle_exprs: tuple[tuple[str, str], ...]
    degeneracy_a: str
    degeneracy_b: str
    fiber_genus: int
    base_genus: int
    allow_low_genus: bool
    base_change: BaseChangeParams | None
    notes: tuple[str, ...]


# -- schema helpers ---------------------------------------------------------


def _check_keys(mapping: dict, required, optional, where: str):
    unknown = sorted(set(mapping) - set(required) - set(optional))
    if unknown:
        raise ScenarioError(f"{where}: unknown key(s) {', '.join(map(repr, unknown))}")
    missing = [k for k in required if k not in mapping]
    if missing:
        raise ScenarioError(
            f"{where}: missing required key(s) {', '.join(map(repr, missing))}"
        )


def _as_object(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise ScenarioError(f"{where}: expected an object, got {type(value).__name__}")
    return value


def _as_str(value, where: str) -> str:
    if not isinstance(value, str) or not value.strip():
        raise ScenarioError(f"{where}: expected a nonempty string, got {value!r}")
    return value


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"{where}: expected an integer, got {value!r}")
    return value


def _as_bool(value, where: str) -> bool:
    if not isinstance(value, bool):
        raise ScenarioError(f"{where}: expected true or false, got {value!r}")
    return value


def _as_rational(value, where: str) -> Fraction:
    try:
        return as_fraction(value)
    except (TypeError, ValueError) as exc:
        raise ScenarioError(
            f"{where}: expected an integer or 'p/q' string, got {value!r}"
        ) from exc


def _reject_float(text: str):
    raise ScenarioError(
        f"floating-point literal {text!r} is not allowed; use an integer or a 'p/q' string"
    )


# -- parsing ----------------------------------------------------------------


def parse_scenario_data(data, source: str = "<scenario>") -> Scenario:
    """Validate a decoded JSON document and return a runnable Scenario."""
    top = _as_object(data, source)
    _check_keys(
        top,
        required=("name", "space", "bundles", "degeneracy", "family"),
        optional=("base_change", "notes"),
        where=source,
    )

    name = _as_str(top["name"], f"{source}: name")

    space_raw = top["space"]
    if not isinstance(space_raw, list) or not space_raw:
        raise ScenarioError(f"{source}: space: expected a nonempty list of dimensions")
    try:
        space = ProductSpace(tuple(_as_int(n, f"{source}: space") for n in space_raw))
    except ValueError as exc:
        raise ScenarioError(f"{source}: space: {exc}") from exc

    bundles_raw = _as_object(top["bundles"], f"{source}: bundles")
    if not bundles_raw:
        raise ScenarioError(f"{source}: bundles: at least one bundle is required")
    bundle_exprs = []
    for bname, expr in bundles_raw.items():
        if not _NAME_RE.match(bname) or bname in _GRAMMAR_KEYWORDS:
            raise ScenarioError(
                f"{source}: bundles: {bname!r} is not a usable bundle name"
            )
        bundle_exprs.append((bname, _as_str(expr, f"{source}: bundles.{bname}")))

    degen = _as_object(top["degeneracy"], f"{source}: degeneracy")
    _check_keys(degen, required=("a", "b"), optional=(), where=f"{source}: degeneracy")
    a_name = _as_str(degen["a"], f"{source}: degeneracy.a")
    b_name = _as_str(degen["b"], f"{source}: degeneracy.b")
    defined = {n for n, _ in bundle_exprs}
    for key, value in (("a", a_name), ("b", b_name)):
        if value not in defined:
            raise ScenarioError(
                f"{source}: degeneracy.{key}: {value!r} is not a defined bundle name"
            )

    family = _as_object(top["family"], f"{source}: family")
    _check_keys(
        family,
        required=("fiber_genus", "base_genus"),
        optional=("allow_low_genus",),
        where=f"{source}: family",
    )
    fiber_genus = _as_int(family["fiber_genus"], f"{source}: family.fiber_genus")
    base_genus = _as_int(family["base_genus"], f"{source}: family.base_genus")
    allow_low_genus = _as_bool(
        family.get("allow_low_genus", False), f"{source}: family.allow_low_genus"
    )

    base_change = None
    if "base_change" in top:
        bc = _as_object(top["base_change"], f"{source}: base_change")
        _check_keys(
            bc,
            required=(
                "m1",
                "m2",
                "g_a1",
                "g_a2",
                "a1_sq",
                "a2_sq",
                "a12",
                "base_lambda",
                "base_delta0",
            ),
            optional=("base_delta_rest", "notes"),
            where=f"{source}: base_change",
        )
        rest_raw = bc.get("base_delta_rest", [])
        if not isinstance(rest_raw, list):
            raise ScenarioError(
                f"{source}: base_change.base_delta_rest: expected a list of rationals"
            )
        if "notes" in bc:
            _notes_list(bc["notes"], f"{source}: base_change.notes")
        try:
            base_change = BaseChangeParams(
                m1=_as_int(bc["m1"], f"{source}: base_change.m1"),
                m2=_as_int(bc["m2"], f"{source}: base_change.m2"),
                g_A1=_as_int(bc["g_a1"], f"{source}: base_change.g_a1"),
                g_A2=_as_int(bc["g_a2"], f"{source}: base_change.g_a2"),
                A1_sq=_as_int(bc["a1_sq"], f"{source}: base_change.a1_sq"),
                A2_sq=_as_int(bc["a2_sq"], f"{source}: base_change.a2_sq"),
                A12=_as_int(bc["a12"], f"{source}: base_change.a12"),
                base_genus=base_genus,
                base_lambda=_as_rational(
                    bc["base_lambda"], f"{source}: base_change.base_lambda"
                ),
                base_delta0=_as_rational(
                    bc["base_delta0"], f"{source}: base_change.base_delta0"
                ),
                base_delta_rest=tuple(
                    _as_rational(d, f"{source}: base_change.base_delta_rest")
                    for d in rest_raw
                ),
            )
        except ValueError as exc:
            raise ScenarioError(f"{source}: base_change: {exc}") from exc

    notes = _notes_list(top.get("notes", []), f"{source}: notes")

    scenario = Scenario(
        name=name,
        space=space,
        bundle_exprs=tuple(bundle_exprs),
        degeneracy_a=a_name,
        degeneracy_b=b_name,
        fiber_genus=fiber_genus,
        base_genus=base_genus,
        allow_low_genus=allow_low_genus,
        base_change=base_change,
        notes=notes,
    )
    _validate(scenario, source)
    return scenario


def _notes_list(value, where: str) -> tuple[str, ...]:
    if not isinstance(value, list):
        raise ScenarioError(f"{where}: expected a list of strings")
    return tuple(_as_str(n, where) for n in value)


def _validate(scenario: Scenario, source: str):
    """Check the cross-field invariants that need bundle resolution."""
    if scenario.space.total_dimension != 4:
        raise ScenarioError(
            f"{source}: space: the degeneracy pipeline needs total dimension 4, "
            f"got {scenario.space.total_dimension}"
        )
    env = resolve_bundles(scenario)
    A = env[scenario.degeneracy_a]
    B = env[scenario.degeneracy_b]
    if B.rank != A.rank + 1:
        raise ScenarioError(
            f"{source}: degeneracy: rank of {scenario.degeneracy_b!r} must be "
            f"rank of {scenario.degeneracy_a!r} plus 1, got {B.rank} and {A.rank}"
        )


def load_scenario(path) -> Scenario:
    """Load and validate a scenario file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file {path}: {exc}") from exc
    return _parse_text(text, str(path))


def load_bundled_scenario(name: str) -> Scenario:
    """Load one of the scenarios shipped with the package."""
    if name not in BUNDLED_SCENARIOS:
        raise ScenarioError(
            f"unknown bundled scenario {name!r}; available: {', '.join(BUNDLED_SCENARIOS)}"
        )
    text = (
        resources.files("degloci").joinpath("scenarios", f"{name}.json").read_text("utf-8")
    )
    return _parse_text(text, f"bundled scenario {name!r}")


def _parse_text(text: str, source: str) -> Scenario:
    try:
        data = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{source}: not valid JSON: {exc}") from exc
    return parse_scenario_data(data, source)


# -- bundle resolution ------------------------------------------------------


def resolve_bundles(scenario: Scenario) -> dict[str, BundleClass]:
    """Evaluate every named bundle expression, catching unknown names and cycles."""
    asts = {}
    for bname, text in scenario.bundle_exprs:
        try:
            asts[bname] = parse_expression(text)
        except ExpressionError as exc:
            raise ScenarioError(f"bundles.{bname}: {exc}") from exc

    resolved: dict[str, BundleClass] = {}
    resolving: list[str] = []

    def resolve(ref: str) -> BundleClass:
        if ref in resolved:
            return resolved[ref]
        if ref not in asts:
            raise ExpressionError(f"undefined bundle name {ref!r}")
        if ref in resolving:
            cycle = " -> ".join(resolving[resolving.index(ref):] + [ref])
            raise ExpressionError(f"bundle reference cycle: {cycle}")
        resolving.append(ref)
        try:
            value = evaluate_expression(asts[ref], scenario.space, resolve)
        finally:
            resolving.pop()
        resolved[ref] = value
        return value

    for bname, _ in scenario.bundle_exprs:
        try:
            resolve(bname)
        except (ExpressionError, ValueError) as exc:
            raise ScenarioError(f"bundles.{bname}: {exc}") from exc
    return resolved


# -- pipeline ---------------------------------------------------------------


@contextmanager
def _stage(label: str):
    """Relabel value errors from inner modules as scenario errors."""
    try:
        yield
    except (ScenarioError, InternalCheckError):
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ScenarioError(f"{label}: {exc}") from exc


def run_scenario(scenario: Scenario, *, check: bool = False) -> Report:
    """Run the full pipeline and assemble the deterministic report.

    With ``check`` the report also carries the double-point cross-check of
    c_2(Z) and, when a base-change block is present, the identity between the
    delta_0 correction and the sum of section self-intersections.
    """
    entries = []

    with _stage("space"):
        tangent_c1, tangent_c2 = ambient_tangent_of_product(scenario.space)
    entries.append(class_entry("c1(M)", tangent_c1))
    entries.append(class_entry("c2(M)", tangent_c2))

    with _stage("bundles"):
        env = resolve_bundles(scenario)
        A = env[scenario.degeneracy_a]
        B = env[scenario.degeneracy_b]
    entries.append(
        text_entry("degeneracy", f"{scenario.degeneracy_a} -> {scenario.degeneracy_b}")
    )
    entries.append(rational_entry("rank(A)", Fraction(A.rank)))
    entries.append(rational_entry("rank(B)", Fraction(B.rank)))

    with _stage("degeneracy"):
        inp = DegeneracyInput(scenario.space, tangent_c1, tangent_c2, A, B)
        diff = virtual_difference(B, A)
        numbers = virtual_chern_numbers(inp)
    for i in range(1, 5):
        entries.append(class_entry(f"c{i}(B-A)", chern(diff, i)))
    entries.append(rational_entry("c1(Z)^2", numbers.c1_sq))
    entries.append(rational_entry("c2(Z)", numbers.c2))

    with _stage("family"):
        fam = invariants_from_chern_numbers(
            numbers.c1_sq,
            numbers.c2,
            scenario.fiber_genus,
            scenario.base_genus,
            allow_low_genus=scenario.allow_low_genus,
        )
    entries.append(rational_entry("kappa", fam.kappa))
    entries.append(rational_entry("delta", fam.delta))
    entries.append(rational_entry("lambda", fam.lambda_))
    entries.append(rational_entry("slope", fam.slope))
    for warning in fam.warnings:
        entries.append(text_entry("warning", warning))

    checks = []
    sigma = None
    if scenario.base_change is not None:
        params = scenario.base_change
        with _stage("base_change"):
            if params.base_lambda != fam.lambda_:
                raise ScenarioError(
                    f"base_change.base_lambda = {params.base_lambda} does not match "
                    f"the family stage's lambda = {fam.lambda_}"
                )
            delta_total = params.base_delta0 + sum(params.base_delta_rest, Fraction(0))
            if delta_total != fam.delta:
                raise ScenarioError(
                    f"base_change delta degrees sum to {delta_total}, but the family "
                    f"stage's delta = {fam.delta}"
                )
            sigma = tuple(sigma_tilde_self_intersection(params, ell) for ell in (1, 2))
            correction = beta_delta0_correction(params)
            pb = pullback_slope(params)
        entries.append(rational_entry("sigma_tilde_1^2", sigma[0]))
        entries.append(rational_entry("sigma_tilde_2^2", sigma[1]))
        entries.append(rational_entry("beta_delta0_correction", correction))
        entries.append(rational_entry("lambda_B", pb.lambda_B))
        entries.append(rational_entry("delta0_B", pb.delta0_B))
        entries.append(rational_entry("delta1_B", pb.delta1_B))
        for j, value in enumerate(pb.delta_rest_B, start=2):
            entries.append(rational_entry(f"delta{j}_B", value))
        entries.append(rational_entry("slope_B", pb.slope))

    if check:
        with _stage("check"):
            dp = double_point_check(inp)
        checks.append(
            CheckResult("double_point_c2", dp == numbers.c2, f"{dp} vs {numbers.c2}")
        )
        if scenario.base_change is not None:
            lhs = beta_delta0_correction(scenario.base_change)
            rhs = sigma[0] + sigma[1]
            checks.append(
                CheckResult("beta_sigma_identity", lhs == rhs, f"{lhs} vs {rhs}")
            )

    return Report(
        scenario=scenario.name,
        space=str(scenario.space),
        entries=tuple(entries),
        checks=tuple(checks),
    )
