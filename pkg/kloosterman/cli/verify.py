"""Verification sweep: every identity is checked per field against an independent oracle.

Checks are registered with the range of extension degrees they are cheap
enough for. Rows come back ordered by (r, check) whatever the worker count.
"""

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from kloosterman.core.charsums import fourier_identity_check, gl_kloosterman, gl_kloosterman_bruteforce, kloosterman_table, moments
from kloosterman.core.codes import (
    analytic_dual_spectrum,
    build_trace_vector,
    d_sequence,
    dual_weight_spectrum,
    macwilliams,
    weight_distribution_dp,
)
from kloosterman.core.exceptions import IdentityViolationError, KloostermanError
from kloosterman.core.field import FieldCtx, field_new
from kloosterman.core.groups import (
    gauss_sum_bruteforce,
    gauss_sum_formula,
    group_order,
    orthogonal_gauss_sum_bruteforce,
    trace_counts_from_gauss_sums,
    trace_distribution,
    trace_distribution_formula,
)
from kloosterman.core.identities import (
    ReportRow,
    VerificationReport,
    compare,
    mk_recursion_sequence,
    pless_check,
    prop_h_closed_forms,
    t1k_recursion,
)
from kloosterman.core.logger import get_logger

from .config import CHECKS, RunConfig


logger = get_logger(__name__)

CheckFn = Callable[[FieldCtx, RunConfig], list[ReportRow]]

# Largest q^(t^2) walked by the GL brute force during a sweep.
_GL_SWEEP_BOUND = 1 << 12


@dataclass(frozen=True)
class Check:
    name: str
    min_r: int
    max_r: int
    run: CheckFn


def _guarded(ctx: FieldCtx, check: str, method: str, fn: Callable[[], tuple[int | str, int | str]], h: int | None = None) -> ReportRow:
    """Run one comparison, turning a failed identity into a failing row."""
    try:
        value, oracle = fn()
    except IdentityViolationError as e:
        return ReportRow(q=ctx.q, r=ctx.r, h=h, check=check, method=method, value=str(e.lhs), oracle=str(e.rhs), match=False, detail=e.message)
    except KloostermanError as e:
        return ReportRow(q=ctx.q, r=ctx.r, h=h, check=check, method=method, value="error", oracle="", match=False, detail=e.message)
    return compare(ctx.q, ctx.r, check, method, value, oracle, h=h)


def _spectrum_text(spectrum: dict[int, int]) -> str:
    return " ".join(f"{w}:{n}" for w, n in sorted(spectrum.items()))


def _check_prop_h(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    table = moments(ctx, 1)
    t0, t1 = prop_h_closed_forms(ctx)
    return [
        compare(ctx.q, ctx.r, "prop-h", "brute-force T0K^1", table.t0k[1], t0, h=1),
        compare(ctx.q, ctx.r, "prop-h", "brute-force T1K^1", table.t1k[1], t1, h=1),
    ]


def _check_prop_c(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    table = kloosterman_table(ctx)
    pairs = 0
    agree = 0
    for a in ctx.nonzero_elements():
        conjugate = a
        for _ in range(ctx.r):
            pairs += 1
            agree += int(table[conjugate] == table[a])
            conjugate = ctx.square(conjugate)
    return [compare(ctx.q, ctx.r, "prop-c", "K(a^(2^s)) = K(a) over all (a, s)", agree, pairs)]


def _check_prop_e(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    def run() -> tuple[int, int]:
        for beta in ctx.elements():
            fourier_identity_check(ctx, beta)
        return ctx.q, ctx.q

    return [_guarded(ctx, "prop-e", "Fourier identity at every beta", run)]


def _check_prop_f(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    rows = []
    for which in ("o3", "sp2"):
        formula = trace_distribution_formula(ctx, which)

        def enumerated(which=which, formula=formula) -> tuple[int, int]:
            dist = trace_distribution(ctx, which)
            return sum(int(x == y) for x, y in zip(dist.counts, formula.counts)), ctx.q

        def recovered(which=which, formula=formula) -> tuple[int, int]:
            dist = trace_counts_from_gauss_sums(ctx, which)
            return sum(int(x == y) for x, y in zip(dist.counts, formula.counts)), ctx.q

        rows.append(_guarded(ctx, "prop-f", f"{which} enumerated n(beta) vs closed form", enumerated))
        rows.append(_guarded(ctx, "prop-f", f"{which} n(beta) from Gauss sums vs closed form", recovered))
    return rows


def _check_theorem_b(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    rows = []
    for which in ("o3", "sp2"):

        def run(which=which) -> tuple[int, int]:
            for a in ctx.nonzero_elements():
                gauss_sum_bruteforce(ctx, which, a)
            return ctx.q - 1, ctx.q - 1

        rows.append(_guarded(ctx, "theorem-b", f"{which} Gauss sums at every a != 0", run))
    return rows


def _check_gl_kloosterman(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    rows = []
    t = 1
    while ctx.q ** (t * t) <= _GL_SWEEP_BOUND:
        rows.append(compare(ctx.q, ctx.r, "gl-kloosterman", f"recursion t={t}", gl_kloosterman(ctx, t, 1), gl_kloosterman_bruteforce(ctx, t, 1)))
        t += 1
    return rows


def _check_gauss_formula(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    rows = [compare(ctx.q, ctx.r, "gauss-formula", "O(3,q) formula n=1", gauss_sum_formula(ctx, 1), orthogonal_gauss_sum_bruteforce(ctx, 1))]
    if ctx.q == 2:
        rows.append(compare(ctx.q, ctx.r, "gauss-formula", "O(5,q) formula n=2", gauss_sum_formula(ctx, 2), orthogonal_gauss_sum_bruteforce(ctx, 2)))
    return rows


def _check_prop_j(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    rows = []
    for which in ("o3", "sp2"):

        def run(which=which) -> tuple[int, int]:
            spectrum = dual_weight_spectrum(ctx, which, build_trace_vector(ctx, which, config.seed_order))
            return sum(spectrum.values()), ctx.q

        rows.append(_guarded(ctx, "prop-j", f"{which} distinct dual codewords", run))
    return rows


def _check_lemma_l(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    rows = []
    for which in ("o3", "sp2"):

        def run(which=which) -> tuple[str, str]:
            spectrum = dual_weight_spectrum(ctx, which, build_trace_vector(ctx, which, config.seed_order))
            return _spectrum_text(spectrum), _spectrum_text(analytic_dual_spectrum(ctx, which))

        rows.append(_guarded(ctx, "lemma-l", f"{which} dual spectrum by popcount vs closed weights", run))
    return rows


def _check_weights(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    rows = []
    n = group_order(1, ctx.q)
    for which in ("o3", "sp2"):

        def run(which=which) -> tuple[int, int]:
            dp = weight_distribution_dp(ctx, which)
            mw = macwilliams(analytic_dual_spectrum(ctx, which), n, ctx.r)
            return sum(int(x == y) for x, y in zip(dp.counts, mw.counts)), n + 1

        rows.append(_guarded(ctx, "weights", f"{which} DP vs MacWilliams coefficients", run))
    return rows


def _check_pless(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    rows = []
    h_top = min(config.h_max, ctx.limits.pless_h_max)
    for which in ("o3", "sp2"):
        full = weight_distribution_dp(ctx, which)
        spectrum = dual_weight_spectrum(ctx, which, build_trace_vector(ctx, which, config.seed_order))
        for h in range(h_top + 1):
            try:
                rows.append(pless_check(ctx, which, h, full, spectrum))
            except IdentityViolationError as e:
                rows.append(ReportRow(q=ctx.q, r=ctx.r, h=h, check="pless", method=f"{which} dual moments", value=str(e.lhs), oracle=str(e.rhs), match=False, detail=e.message))
    return rows


def _check_theorem_o(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    h_top = min(config.h_max, ctx.limits.moment_h_max)
    oracle = moments(ctx, h_top)
    try:
        mk = mk_recursion_sequence(ctx, h_top)
    except KloostermanError as e:
        return [ReportRow(q=ctx.q, r=ctx.r, check="theorem-o", method="MK recursion", value="error", oracle="", match=False, detail=e.message)]
    return [compare(ctx.q, ctx.r, "theorem-o", "MK recursion", mk[h], oracle.mk[h], h=h) for h in range(1, h_top + 1)]


def _check_theorem_a(ctx: FieldCtx, config: RunConfig) -> list[ReportRow]:
    h_top = config.h_max
    oracle = moments(ctx, h_top)
    d = d_sequence(ctx, h_top)
    if config.inject_fault is not None and config.inject_fault < len(d):
        logger.warning(f"Injecting a fault: D_{config.inject_fault} += 1 for q={ctx.q}")
        d[config.inject_fault] += 1
    rows = []
    for h in range(1, h_top + 1, 2):

        def run(h=h) -> tuple[int, int]:
            return t1k_recursion(ctx, h, d)[h], oracle.t1k[h]

        rows.append(_guarded(ctx, "theorem-a", "T1K recursion from D_j", run, h=h))
    return rows


REGISTRY: dict[str, Check] = {
    check.name: check
    for check in (
        Check("prop-h", 1, 12, _check_prop_h),
        Check("prop-c", 1, 8, _check_prop_c),
        Check("prop-e", 1, 8, _check_prop_e),
        Check("prop-f", 1, 6, _check_prop_f),
        Check("theorem-b", 1, 6, _check_theorem_b),
        Check("gl-kloosterman", 1, 12, _check_gl_kloosterman),
        Check("gauss-formula", 1, 6, _check_gauss_formula),
        Check("prop-j", 1, 6, _check_prop_j),
        Check("lemma-l", 1, 6, _check_lemma_l),
        Check("weights", 1, 3, _check_weights),
        Check("pless", 1, 3, _check_pless),
        Check("theorem-o", 1, 5, _check_theorem_o),
        Check("theorem-a", 1, 6, _check_theorem_a),
    )
}
assert tuple(REGISTRY) == CHECKS


def verify_degree(config: RunConfig, r: int) -> list[ReportRow]:
    """Every selected check applicable to GF(2^r), in registry order."""
    ctx = field_new(r, config.modulus)
    rows: list[ReportRow] = []
    for name in config.checks:
        check = REGISTRY[name]
        if not check.min_r <= r <= check.max_r:
            logger.info(f"Skipping {name} for r={r} (runs for {check.min_r} <= r <= {check.max_r})")
            continue
        logger.debug(f"Running {name} for q={ctx.q}")
        try:
            found = check.run(ctx, config)
        except KloostermanError as e:
            found = [ReportRow(q=ctx.q, r=r, check=name, method="setup", value="error", oracle="", match=False, detail=e.message)]
        for row in found:
            if not row.match:
                logger.warning(f"{name} failed for q={ctx.q}, h={row.h}: {row.detail or f'{row.value} != {row.oracle}'}")
        rows.extend(found)
    logger.info(f"Verified q={ctx.q}: {sum(row.match for row in rows)}/{len(rows)} rows match")
    return rows


def run_verification(config: RunConfig) -> VerificationReport:
    if config.jobs > 1 and len(config.sweep) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            per_degree = list(pool.map(verify_degree, [config] * len(config.sweep), config.sweep))
    else:
        per_degree = [verify_degree(config, r) for r in config.sweep]
    return VerificationReport(rows=[row for rows in per_degree for row in rows])
