"""Full proof pipeline for one case, from data checks to verdict.

Stages: verify the case data, scan p-adic digits for an exponent floor,
compute the rounded constant chain, derive the absolute exponent bound,
reduce it with lattices, and sweep the remaining small exponents directly.
A "no solutions" verdict needs every stage to succeed and the floor to
clear the reduced ceiling; anything less is reported as inconclusive
rather than patched over.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .matveev import BoundInput, absolute_bound, matveev_c9
from .numberfield import CaseConfig, VerificationReport, get_case, verify_case_data
from .padic import combined_lower_bound
from .polyarith import IntPoly, poly_eval
from .realalg import DEFAULT_PREC, CaseConstants, ConjugateData, compute_constants
from .reduction import ReductionReport, reduction_loop

# direct search always covers at least this many exponents, so the digit
# windows of everything above it are nonempty
SEARCH_FLOOR = 500


def _iroot(t: int, d: int) -> int:
    """Floor of the d-th root of a nonnegative integer."""
    if t < 0:
        raise ValueError("negative radicand")
    if t == 0:
        return 0
    x = 1 << -(-t.bit_length() // d)
    while True:
        y = ((d - 1) * x + t // x ** (d - 1)) // d
        if y >= x:
            break
        x = y
    while x ** d > t:
        x -= 1
    while (x + 1) ** d <= t:
        x += 1
    return x


def direct_search(f: IntPoly, p: int, n_max: int) -> list[tuple[int, int]]:
    """All integer solutions of f(x) = 2*p^n with 1 <= n <= n_max.

    For |x| >= 2 the growth envelope pins |x| within 1 of (2*p^n)^(1/d),
    so per exponent only a handful of candidates need testing; |x| <= 2 is
    tested unconditionally.
    """
    d = f.degree()
    out = []
    target = 2
    for n in range(1, n_max + 1):
        target *= p
        x0 = _iroot(target, d)
        candidates = {-2, -1, 0, 1, 2}
        for base in (x0 - 1, x0, x0 + 1):
            candidates.add(base)
            candidates.add(-base)
        for x in candidates:
            if poly_eval(f, x) == target:
                out.append((n, x))
    return sorted(out)


@dataclass
class SolveReport:
    """Everything one case run produced, stage by stage."""

    case_id: str
    verdict: str
    reason: str
    depth: int
    precision_bits: int
    n_lower: int | None = None
    abs_bound: int | None = None
    c9: object = None
    reduced_bound: int | None = None
    search_max: int | None = None
    solutions: list = field(default_factory=list)
    verification: VerificationReport | None = None
    constants: CaseConstants | None = None
    reduction: ReductionReport | None = None
    timings: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict == "no_solutions"

    def to_dict(self) -> dict:
        out = {
            "case_id": self.case_id,
            "verdict": self.verdict,
            "reason": self.reason,
            "depth": self.depth,
            "precision_bits": self.precision_bits,
            "n_lower": self.n_lower,
            "absolute_bound": self.abs_bound,
            "c9": float(self.c9) if self.c9 is not None else None,
            "reduced_bound": self.reduced_bound,
            "search_max": self.search_max,
            "solutions": [list(s) for s in self.solutions],
        }
        if self.verification is not None:
            out["verification"] = self.verification.to_dict()
        if self.constants is not None:
            out["constants"] = self.constants.to_dict()
        if self.reduction is not None:
            out["reduction"] = self.reduction.to_dict()
        out["timings"] = dict(self.timings)
        return out


def solve_case(
    case: CaseConfig | str,
    depth: int | None = None,
    precision_bits: int = DEFAULT_PREC,
    scale: int | None = None,
    search_max: int | None = None,
) -> SolveReport:
    """Run the whole chain for one case and return the verdict report.

    The conclusion "no solutions" means: for every integer x and n >= 1,
    f(x) != 2*p^n.  It requires the data checks to pass, the digit-scan
    floor to exceed the reduced ceiling, and the direct sweep of small
    exponents to come back empty.
    """
    cfg = get_case(case) if isinstance(case, str) else case
    depth = depth if depth is not None else cfg.default_scan_depth
    report = SolveReport(
        case_id=cfg.case_id,
        verdict="inconclusive",
        reason="",
        depth=depth,
        precision_bits=precision_bits,
    )
    clock = time.perf_counter

    t0 = clock()
    report.verification = verify_case_data(cfg)
    report.timings["verify"] = clock() - t0
    if not report.verification.passed:
        report.reason = "case data failed verification"
        return report

    t0 = clock()
    report.n_lower = combined_lower_bound(cfg, depth)
    report.timings["scan"] = clock() - t0

    t0 = clock()
    conj = ConjugateData(cfg, precision_bits)
    try:
        report.constants = compute_constants(cfg, conj, report.n_lower)
    except (ValueError, ArithmeticError) as err:
        report.reason = f"constant chain failed: {err}"
        report.timings["constants"] = clock() - t0
        return report
    report.timings["constants"] = clock() - t0

    t0 = clock()
    inp = BoundInput.from_constants(report.constants)
    report.c9 = matveev_c9(inp, precision_bits)
    report.abs_bound = absolute_bound(inp, precision_bits)
    report.timings["absolute_bound"] = clock() - t0

    t0 = clock()
    try:
        report.reduction = reduction_loop(
            cfg,
            conj,
            report.constants,
            report.abs_bound,
            stop_below=report.n_lower,
            scale=scale,
        )
    except ArithmeticError as err:
        report.reason = f"reduction failed: {err}"
        report.timings["reduction"] = clock() - t0
        return report
    report.reduced_bound = report.reduction.final_bound
    report.timings["reduction"] = clock() - t0

    t0 = clock()
    # without a certified ceiling the sweep cannot be exhaustive, so cap it
    ceiling = report.reduced_bound if report.reduction.ok else SEARCH_FLOOR
    report.search_max = (
        search_max if search_max is not None else max(ceiling, SEARCH_FLOOR)
    )
    report.solutions = direct_search(cfg.f, cfg.p, report.search_max)
    report.timings["search"] = clock() - t0

    if report.solutions:
        report.verdict = "solutions_found"
        report.reason = f"direct search found {len(report.solutions)} solution(s)"
    elif not report.reduction.ok:
        report.reason = "reduction produced no certified bound"
    elif report.reduced_bound >= report.n_lower:
        report.reason = (
            f"reduced bound {report.reduced_bound} does not clear "
            f"the digit-scan floor {report.n_lower}"
        )
    elif report.search_max < SEARCH_FLOOR:
        report.reason = f"direct search stopped before {SEARCH_FLOOR}"
    else:
        report.verdict = "no_solutions"
        report.reason = (
            f"search is empty up to {report.search_max}; any larger exponent "
            f"falls under the digit-scan floor n >= {report.n_lower}, which "
            f"contradicts the reduced bound n <= {report.reduced_bound}"
        )
    return report


def emit_report(report: SolveReport, as_json: bool = False) -> str:
    """Render one report, machine-readable or for the terminal."""
    if as_json:
        return json.dumps(report.to_dict(), indent=2, sort_keys=True)
    lines = [f"case {report.case_id}: {report.verdict}"]
    lines.append(f"  {report.reason}")
    if report.n_lower is not None:
        lines.append(f"  digit-scan floor: n >= {report.n_lower} (depth {report.depth})")
    if report.abs_bound is not None:
        lines.append(f"  absolute bound:   n < {report.abs_bound:.6g}")
    if report.reduced_bound is not None:
        lines.append(f"  reduced bound:    n <= {report.reduced_bound}")
    if report.search_max is not None:
        lines.append(f"  searched:         n <= {report.search_max}, "
                     f"{len(report.solutions)} solution(s)")
    for n, x in report.solutions:
        lines.append(f"    n = {n}, x = {x}")
    total = sum(report.timings.values())
    lines.append(f"  time: {total:.2f}s")
    return "\n".join(lines)
