"""Shrinking an astronomical exponent bound with lattice reduction.

The log linear form that Baker-type bounds control is sampled at integer
scale K: each log becomes a rounded integer, the unit exponents become
unknowns, and the form turns into a closest-vector question for a small
integer lattice.  A reduced basis certifies a lower bound on that distance
(de Weger's lemma); when the certified distance clears the rounding slack,
the exponent bound collapses from 10^27-ish to double digits.

Everything here is exact: the LLL pass runs on Fractions, its output is
re-verified independently, and the only real-number steps go through Ball
enclosures.  Failures escalate the scale K instead of weakening a check.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .numberfield import CaseConfig
from .realalg import (
    DEFAULT_PREC,
    Ball,
    CaseConstants,
    ConjugateData,
    case_etas,
    nearest_int,
)

# largest tolerated K * radius of any log enclosure
MAX_ROUNDING_SLACK = Fraction(1, 1000)


class PrecisionError(ArithmeticError):
    """Log enclosures too wide for the requested scale K."""


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _gram(cols):
    """Gram-Schmidt of integer columns: (mu, squared norms of b*_i)."""
    n = len(cols)
    mu = [[Fraction(0)] * n for _ in range(n)]
    star: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for i in range(n):
        v = [Fraction(x) for x in cols[i]]
        for j in range(i):
            mu[i][j] = _dot(cols[i], star[j]) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, star[j])]
        star.append(v)
        nrm = _dot(v, v)
        if nrm == 0:
            raise ValueError("columns are linearly dependent")
        norms.append(nrm)
    return mu, norms


def lll_reduce(columns, delta: Fraction = Fraction(3, 4)):
    """LLL-reduce integer column vectors with exact rational arithmetic.

    Returns (reduced, transform) where transform[j] holds the integer
    coefficients expressing reduced column j in the input columns, so the
    change of basis is unimodular by construction.  Callers should still
    confirm the outcome through verify_lll_reduced; the two routines share
    no state.
    """
    n = len(columns)
    b = [[int(x) for x in col] for col in columns]
    u = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    mu, norms = _gram(b)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = nearest_int(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                u[k] = [x - q * y for x, y in zip(u[k], u[j])]
                mu, norms = _gram(b)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k - 1], b[k] = b[k], b[k - 1]
            u[k - 1], u[k] = u[k], u[k - 1]
            mu, norms = _gram(b)
            k = max(k - 1, 1)
    return b, u


def _int_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        sub = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * _int_det(sub)
        total += -term if j % 2 else term
    return total


def verify_lll_reduced(
    columns, reduced, transform, delta: Fraction = Fraction(3, 4)
) -> list[str]:
    """Re-derive every LLL postcondition from scratch.

    Returns the list of violations; an empty list means the reduced basis
    is size-reduced, satisfies the exchange condition, and is the image of
    the input under a determinant +-1 transform.
    """
    problems = []
    n = len(reduced)
    dim = len(columns[0])
    for j in range(n):
        image = [
            sum(columns[i][row] * transform[j][i] for i in range(n))
            for row in range(dim)
        ]
        if image != list(reduced[j]):
            problems.append(f"column {j} is not the transform image")
    det = _int_det([[transform[j][i] for j in range(n)] for i in range(n)])
    if det not in (1, -1):
        problems.append("transform is not unimodular")
    try:
        mu, norms = _gram(reduced)
    except ValueError:
        problems.append("reduced columns are dependent")
        return problems
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                problems.append(f"size reduction fails at ({i},{j})")
    for k in range(1, n):
        if norms[k] < (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            problems.append(f"exchange condition fails at column {k}")
    return problems


def _solve_columns(columns, y):
    """Exact solution s of sum_j columns[j] * s_j = y."""
    n = len(columns)
    a = [[Fraction(columns[j][i]) for j in range(n)] for i in range(n)]
    v = [Fraction(x) for x in y]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("columns are linearly dependent")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            v[col], v[piv] = v[piv], v[col]
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if factor:
                a[r] = [x - factor * w for x, w in zip(a[r], a[col])]
                v[r] -= factor * v[col]
    s = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = v[i] - sum(a[i][j] * s[j] for j in range(i + 1, n))
        s[i] = acc / a[i][i]
    return s


def distance_lower_bound(reduced, y):
    """Certified squared distance from y to the lattice, or None.

    By de Weger's distance lemma, d(lattice, y) is at least
    2^(-(n-1)/2) * ||s_n|| * |c_1| with s the coordinates of y in the
    reduced basis and ||.|| the distance to the nearest integer; when the
    last coordinate is an exact integer the lemma says nothing.  Returns
    (squared bound, ||s_n||) as exact Fractions.
    """
    n = len(reduced)
    s = _solve_columns(reduced, y)
    frac = abs(s[-1] - nearest_int(s[-1]))
    if frac == 0:
        return None
    c1_sq = _dot(reduced[0], reduced[0])
    return frac * frac * Fraction(c1_sq, 2 ** (n - 1)), frac


# ---------------------------------------------------------------------------
# from field data to lattices


class _GammaLogs:
    """Log enclosures of the form's terms for one choice of gamma.

    lam1[di][j] covers log|2/delta^d| at embedding j for delta di,
    lam2[j] covers log|p/gamma^d|, and lam_units[t][j] covers
    -d*log|unit_t| (the sign the exponent vector carries).
    """

    def __init__(self, cfg: CaseConfig, conj: ConjugateData, gamma_index: int):
        eta1, eta2, units = case_etas(cfg)
        d = cfg.d
        half = d // 2
        self.lam1 = [
            [conj.embed_abs(e, j).log() for j in range(half)] for e in eta1
        ]
        self.lam2 = [conj.embed_abs(eta2[gamma_index], j).log() for j in range(half)]
        self.lam_units = [
            [conj.embed_abs(u, j).log() * (-d) for j in range(half)] for u in units
        ]
        everything = self.lam2 + [
            b for row in self.lam1 + self.lam_units for b in row
        ]
        self.max_rad = max(b.rad for b in everything)


def _theta(ball: Ball, K: int) -> int:
    return nearest_int(K * ball.mid)


@dataclass(frozen=True)
class ReductionAttempt:
    """One (gamma, delta, conjugate choice, K) reduction attempt."""

    case_id: str
    gamma_index: int
    delta_index: int
    choice: tuple[int, ...]
    K: int
    ok: bool
    reason: str
    rho: Fraction
    c1_norm_sq: int | None = None
    s_fractional: Fraction | None = None
    distance_sq: Fraction | None = None
    c_lower: Fraction | None = None
    new_bound: int | None = None

    def to_dict(self) -> dict:
        out = {
            "gamma_index": self.gamma_index,
            "delta_index": self.delta_index,
            "choice": list(self.choice),
            "K": self.K,
            "ok": self.ok,
            "reason": self.reason,
        }
        if self.ok:
            out["c1_norm"] = math.sqrt(float(self.c1_norm_sq))
            out["s_fractional"] = float(self.s_fractional)
            out["distance"] = math.sqrt(float(self.distance_sq))
            out["c_lower"] = float(self.c_lower)
            out["new_bound"] = self.new_bound
        return out


def _c3_effective(cc: CaseConstants, prec: int) -> Ball:
    """c3 adjusted so it bounds |log t|, not just |t - 1|.

    The product side keeps |t - 1| below eps = c3 * p^(-n/d); then
    |log t| <= -log(1 - eps) <= eps / (1 - eps), so scaling c3 by
    1/(1 - eps) at the proved exponent floor covers every larger n.  At
    four digits this is a no-op for the built-in cases, but it is what
    makes the step an inequality rather than an approximation.
    """
    eps = Ball(cc.c3, prec) / Ball(cc.p, prec) ** Fraction(cc.n_lower, cc.d)
    if not eps.hi < 1:
        raise ArithmeticError("exponent floor too small to control the form")
    return Ball(cc.c3, prec) / (1 - eps)


class _ReducedLattice:
    """One lattice (gamma, choice, K) with its verified reduced basis."""

    def __init__(self, logs: _GammaLogs, choice: tuple[int, ...], K: int):
        rows = [j - 1 for j in choice]
        self.choice = choice
        self.K = K
        cols = [
            [_theta(lam[j], K) for j in rows] + [0] for lam in logs.lam_units
        ]
        cols.append([_theta(logs.lam2[j], K) for j in rows] + [1])
        self.columns = cols
        self.reduced, self.transform = lll_reduce(cols)
        problems = verify_lll_reduced(cols, self.reduced, self.transform)
        if problems:
            raise ArithmeticError("; ".join(problems))
        self.rows = rows

    def target(self, logs: _GammaLogs, delta_index: int):
        return [-_theta(logs.lam1[delta_index][j], self.K) for j in self.rows] + [0]


def _attempt(
    cc: CaseConstants,
    logs: _GammaLogs,
    lattice: _ReducedLattice,
    gamma_index: int,
    delta_index: int,
    bound_n: int,
    prec: int,
) -> ReductionAttempt:
    r = cc.rank
    K = lattice.K
    rho = K * logs.max_rad
    base = dict(
        case_id=cc.case_id,
        gamma_index=gamma_index,
        delta_index=delta_index,
        choice=lattice.choice,
        K=K,
        rho=rho,
    )
    if rho > MAX_ROUNDING_SLACK:
        raise PrecisionError(
            f"K*radius = {float(rho):.2e} exceeds {float(MAX_ROUNDING_SLACK)}"
        )

    got = distance_lower_bound(lattice.reduced, lattice.target(logs, delta_index))
    if got is None:
        return ReductionAttempt(ok=False, reason="target lies on a lattice line", **base)
    dist_sq, frac = got
    gap = dist_sq - bound_n * bound_n
    if gap <= 0:
        return ReductionAttempt(
            ok=False,
            reason="distance bound does not clear the current bound",
            s_fractional=frac,
            distance_sq=dist_sq,
            **base,
        )

    c10 = (Fraction(1, 2) + rho) * (1 + (r - 2) * cc.c7)
    c11 = (Fraction(1, 2) + rho) * (1 + (r - 2) * cc.c8)
    margin = Ball(Fraction(gap, r - 2), prec).sqrt() - (c10 * bound_n + c11)
    if not margin.lo > 0:
        return ReductionAttempt(
            ok=False,
            reason="rounding slack swallows the distance margin",
            s_fractional=frac,
            distance_sq=dist_sq,
            **base,
        )
    c_ball = Ball(bound_n, prec) ** Fraction(1, r - 2) / K * margin
    c_lower = c_ball.lo
    if c_lower <= 0:
        return ReductionAttempt(
            ok=False,
            reason="certified c is not positive",
            s_fractional=frac,
            distance_sq=dist_sq,
            **base,
        )

    new_ball = (Ball(cc.d, prec) / Ball(cc.p, prec).log()) * (
        _c3_effective(cc, prec).log()
        - Ball(c_lower, prec).log()
        + Ball(bound_n, prec).log() / (r - 2)
    )
    hi = new_ball.hi
    new_bound = hi.numerator // hi.denominator
    return ReductionAttempt(
        ok=True,
        reason="",
        c1_norm_sq=_dot(lattice.reduced[0], lattice.reduced[0]),
        s_fractional=frac,
        distance_sq=dist_sq,
        c_lower=c_lower,
        new_bound=new_bound,
        **base,
    )


@dataclass(frozen=True)
class ReductionRound:
    start_bound: int
    scale: int
    ok: bool
    bound: int | None
    attempts: tuple[ReductionAttempt, ...]

    def to_dict(self) -> dict:
        return {
            "start_bound": self.start_bound,
            "scale": self.scale,
            "ok": self.ok,
            "bound": self.bound,
            "attempts": [a.to_dict() for a in self.attempts],
        }


@dataclass(frozen=True)
class ReductionReport:
    case_id: str
    start_bound: int
    final_bound: int
    rounds: tuple[ReductionRound, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rounds) and self.final_bound < self.start_bound

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "start_bound": self.start_bound,
            "final_bound": self.final_bound,
            "rounds": [r.to_dict() for r in self.rounds],
        }


def reduce_case_bound(
    cfg: CaseConfig,
    conj: ConjugateData,
    cc: CaseConstants,
    bound_n: int,
    scale: int | None = None,
    max_escalations: int = 3,
) -> ReductionRound:
    """One reduction round: a certified bound covering every branch.

    Every (gamma, delta) branch must produce a positive certified c; the
    round bound is the worst branch bound.  Per gamma, the configured
    conjugate choice is tried first and the remaining choices serve as
    fallbacks; if no choice works the scale K is multiplied by 100, up to
    max_escalations times.  A branch left without a bound fails the round
    rather than inheriting a neighbour's.
    """
    prec = conj.prec
    scale = scale if scale is not None else cfg.default_K
    n_gammas = sum(1 for c in cfg.gamma_norm_exponents if c == 1)
    half = cfg.d // 2
    want = cc.rank - 2
    attempts: list[ReductionAttempt] = []
    branch_bounds: list[int] = []
    all_ok = True
    for gi in range(n_gammas):
        logs = _GammaLogs(cfg, conj, gi)
        default = cfg.default_conjugate_choice[gi]
        others = [
            c
            for c in itertools.combinations(range(1, half + 1), want)
            if tuple(c) != tuple(default)
        ]
        choices = [tuple(default)] + [tuple(c) for c in others]
        pending = set(range(len(cfg.deltas)))
        found: dict[int, ReductionAttempt] = {}
        for esc in range(max_escalations + 1):
            K = scale * 100 ** esc
            for choice in choices:
                try:
                    lattice = _ReducedLattice(logs, choice, K)
                except (ValueError, ArithmeticError) as err:
                    attempts.append(
                        ReductionAttempt(
                            case_id=cc.case_id,
                            gamma_index=gi,
                            delta_index=-1,
                            choice=choice,
                            K=K,
                            ok=False,
                            reason=f"lattice rejected: {err}",
                            rho=K * logs.max_rad,
                        )
                    )
                    continue
                for di in sorted(pending):
                    att = _attempt(cc, logs, lattice, gi, di, bound_n, prec)
                    attempts.append(att)
                    if att.ok:
                        found[di] = att
                pending -= set(found)
                if not pending:
                    break
            if not pending:
                break
        if pending:
            all_ok = False
        branch_bounds.extend(a.new_bound for a in found.values())
    bound = max(branch_bounds) if (all_ok and branch_bounds) else None
    return ReductionRound(
        start_bound=bound_n,
        scale=scale,
        ok=bound is not None,
        bound=bound,
        attempts=tuple(attempts),
    )


def _next_scale(bound_n: int, rank: int) -> int:
    """Power of ten comfortably above bound^((r-1)/(r-2))."""
    exponent = 2 + (rank - 1) / (rank - 2) * math.log10(max(bound_n, 2))
    return 10 ** math.ceil(exponent)


def reduction_loop(
    cfg: CaseConfig,
    conj: ConjugateData,
    cc: CaseConstants,
    start_bound: int,
    stop_below: int | None = None,
    max_rounds: int = 8,
    scale: int | None = None,
) -> ReductionReport:
    """Iterate reduction rounds until the bound stalls or is small enough.

    stop_below, when given, is a proved strict lower bound on the exponent
    of any solution; the loop stops as soon as the upper bound drops to it
    or less, since that empties the solution range.
    """
    bound_n = start_bound
    rounds: list[ReductionRound] = []
    next_scale = scale if scale is not None else cfg.default_K
    for _ in range(max_rounds):
        rnd = reduce_case_bound(cfg, conj, cc, bound_n, next_scale)
        rounds.append(rnd)
        if not rnd.ok or rnd.bound >= bound_n:
            break
        bound_n = rnd.bound
        if stop_below is not None and bound_n <= stop_below:
            break
        next_scale = _next_scale(bound_n, cc.rank)
    return ReductionReport(cfg.case_id, start_bound, bound_n, tuple(rounds))
