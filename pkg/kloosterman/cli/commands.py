from typing import Any

from pydantic import BaseModel, Field

from kloosterman.core.charsums import kloosterman_value, moments
from kloosterman.core.codes import (
    WeightDistribution,
    analytic_dual_spectrum,
    build_trace_vector,
    dual_weight_spectrum,
    macwilliams,
    weight_distribution_dp,
)
from kloosterman.core.exceptions import IdentityViolationError
from kloosterman.core.field import FieldCtx, field_new
from kloosterman.core.groups import (
    GroupLiteral,
    gauss_sum_bruteforce,
    gauss_sum_closed_form,
    gauss_sum_formula,
    group_order,
    orthogonal_gauss_sum_bruteforce,
)
from kloosterman.core.identities import mk_recursion_sequence
from kloosterman.core.logger import get_logger

from .config import RunConfig
from .verify import run_verification


logger = get_logger(__name__)


class Section(BaseModel):
    """One table of command output."""

    title: str
    columns: list[str]
    rows: list[list[str]] = Field(default_factory=list)


class CommandOutput(BaseModel):
    """What a command produced: a JSON payload, the same data as tables, and whether it passed."""

    command: str
    payload: dict[str, Any]
    sections: list[Section]
    ok: bool = True


def _field(config: RunConfig) -> FieldCtx:
    ctx = field_new(config.r, config.modulus)
    logger.info(f"Using {ctx.spec.describe()}")
    return ctx


def cmd_kloosterman(config: RunConfig) -> CommandOutput:
    """K(lambda; a) for every nonzero a, with tr(a)."""
    ctx = _field(config)
    values = [kloosterman_value(ctx, a) for a in ctx.nonzero_elements()]
    rows = [[f"{v.a:#x}", str(ctx.trace(v.a)), str(v.value)] for v in values]
    payload = {
        "field": ctx.spec.model_dump(mode="json", by_alias=True),
        "values": [{"a": f"{v.a:#x}", "trace": ctx.trace(v.a), "K": str(v.value)} for v in values],
    }
    return CommandOutput(
        command="kloosterman",
        payload=payload,
        sections=[Section(title=f"Kloosterman sums over GF({ctx.q})", columns=["a", "tr(a)", "K(lambda; a)"], rows=rows)],
    )


def cmd_moments(config: RunConfig) -> CommandOutput:
    """MK^h, T0K^h, T1K^h for h <= h_max; with --cross-check also MK^h from the Sp(2,q) code."""
    ctx = _field(config)
    table = moments(ctx, config.h_max)
    payload = table.model_dump(mode="json", by_alias=True)
    columns = ["h", "MK", "T0K", "T1K"]
    recursion: list[int] | None = None
    if config.cross_check:
        recursion = mk_recursion_sequence(ctx, config.h_max)
        payload["MK_recursion"] = [str(v) for v in recursion]
        columns.append("MK (recursion)")

    rows = []
    for h in table.h:
        row = [str(h), *(str(v) for v in table.row(h))]
        if recursion is not None:
            row.append(str(recursion[h]))
            if recursion[h] != table.mk[h]:
                raise IdentityViolationError("MK recursion", recursion[h], table.mk[h], context=f"q={ctx.q}, h={h}")
        rows.append(row)
    return CommandOutput(
        command="moments",
        payload=payload,
        sections=[Section(title=f"Power moments over GF({ctx.q})", columns=columns, rows=rows)],
    )


def cmd_gauss(config: RunConfig) -> CommandOutput:
    """Gauss sums of O(3,q) and Sp(2,q) per a != 0, and the O(2n+1,q) formula at the canonical character."""
    ctx = _field(config)
    rows = []
    per_a = []
    for a in ctx.nonzero_elements():
        o3 = gauss_sum_bruteforce(ctx, "o3", a)
        sp2 = gauss_sum_bruteforce(ctx, "sp2", a)
        rows.append([f"{a:#x}", str(o3), str(gauss_sum_closed_form(ctx, "o3", a)), str(sp2), str(gauss_sum_closed_form(ctx, "sp2", a))])
        per_a.append({"a": f"{a:#x}", "o3": str(o3), "sp2": str(sp2)})

    formula = gauss_sum_formula(ctx, config.n)
    brute: int | None = None
    order = group_order(config.n, ctx.q)
    if config.n == 1 or (config.n == 2 and ctx.q == 2) or order <= ctx.limits.closure_max_order:
        brute = orthogonal_gauss_sum_bruteforce(ctx, config.n)
    else:
        logger.info(f"|Sp({2 * config.n},{ctx.q})| = {order} is too large to enumerate; formula only")
    if brute is not None and brute != formula:
        raise IdentityViolationError(f"Gauss sum formula for O({2 * config.n + 1},q)", formula, brute, context=f"q={ctx.q}")

    payload = {
        "q": ctx.q,
        "gauss": per_a,
        "formula": {"n": config.n, "value": str(formula), "bruteforce": None if brute is None else str(brute)},
    }
    return CommandOutput(
        command="gauss",
        payload=payload,
        sections=[
            Section(title=f"Gauss sums over GF({ctx.q})", columns=["a", "O(3,q)", "lambda(a) q K", "Sp(2,q)", "q K"], rows=rows),
            Section(
                title=f"Gauss sum of O({2 * config.n + 1},{ctx.q})",
                columns=["n", "formula", "brute force"],
                rows=[[str(config.n), str(formula), "-" if brute is None else str(brute)]],
            ),
        ],
    )


def _dual_spectrum(ctx: FieldCtx, which: GroupLiteral, config: RunConfig) -> dict[int, int]:
    if ctx.r <= ctx.limits.trace_vector_max_r:
        return dual_weight_spectrum(ctx, which, build_trace_vector(ctx, which, config.seed_order))
    return analytic_dual_spectrum(ctx, which)


def cmd_weights(config: RunConfig) -> CommandOutput:
    """Dual spectra and weight distributions of the trace codes, with D_j = C_j - C^_j."""
    ctx = _field(config)
    groups: list[GroupLiteral] = ["o3", "sp2"] if config.code == "both" else [config.code]
    j_max = None if config.full else config.truncation
    n = group_order(1, ctx.q)

    duals: dict[str, dict[int, int]] = {}
    weights: dict[str, WeightDistribution] = {}
    for which in groups:
        duals[which] = _dual_spectrum(ctx, which, config)
        weights[which] = weight_distribution_dp(ctx, which, j_max)
        if config.full:
            transformed = macwilliams(duals[which], n, ctx.r)
            if transformed.counts != weights[which].counts:
                bad = next(j for j, (x, y) in enumerate(zip(weights[which].counts, transformed.counts)) if x != y)
                raise IdentityViolationError("MacWilliams transform", weights[which].counts[bad], transformed.counts[bad], context=f"q={ctx.q}, {which}, j={bad}")

    payload: dict[str, Any] = {
        "q": ctx.q,
        "dual": {which: {str(w): c for w, c in spec.items()} for which, spec in duals.items()},
        "weights": {which: dist.model_dump(mode="json") for which, dist in weights.items()},
    }
    sections = [
        Section(title=f"Dual weight spectrum of C({which})", columns=["weight", "count"], rows=[[str(w), str(c)] for w, c in spec.items()])
        for which, spec in duals.items()
    ]

    top = weights[groups[0]].j_max
    columns = ["j", *(f"C_j {which}" for which in groups)]
    d: list[int] | None = None
    if len(groups) == 2:
        d = [weights["o3"][j] - weights["sp2"][j] for j in range(top + 1)]
        payload["D"] = [str(v) for v in d]
        columns.append("D_j")
    rows = []
    for j in range(top + 1):
        row = [str(j), *(str(weights[which][j]) for which in groups)]
        if d is not None:
            row.append(str(d[j]))
        rows.append(row)
    sections.append(Section(title=f"Weight distributions ({'full' if config.full else f'j <= {top}'})", columns=columns, rows=rows))
    return CommandOutput(command="weights", payload=payload, sections=sections)


def cmd_verify(config: RunConfig) -> CommandOutput:
    """Run the selected checks over the sweep; ok only if every row matches."""
    report = run_verification(config)
    payload = report.model_dump(mode="json", by_alias=True)
    payload.pop("schema", None)
    rows = [
        [str(row.q), "" if row.h is None else str(row.h), row.check, row.method, str(row.value), str(row.oracle), "yes" if row.match else "NO"]
        for row in report.rows
    ]
    return CommandOutput(
        command="verify",
        payload=payload,
        sections=[Section(title="Verification report", columns=["q", "h", "check", "method", "value", "oracle", "match"], rows=rows)],
        ok=report.passed,
    )


COMMANDS = {
    "kloosterman": cmd_kloosterman,
    "moments": cmd_moments,
    "gauss": cmd_gauss,
    "weights": cmd_weights,
    "verify": cmd_verify,
}
