"""Absolute exponent bound from a lower bound on linear forms in logs.

The comparison runs between two certified facts: the product side of the
equation forces |1 - prod eta_i^(b_i)| below c3 * p^(-n/d), while the
general lower bound for such forms keeps it above
exp(-c9 * (1 + log(r*B))) with B <= d*(c7*n + c8).  The two collide once n
is large enough, and the least certified collision point is an absolute
upper bound for the exponent of any solution.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .realalg import DEFAULT_PREC, Ball, round_sig
from .realalg import CaseConstants


@dataclass(frozen=True)
class BoundInput:
    """The handful of rounded constants the absolute bound depends on."""

    d: int
    p: int
    rank: int
    c3: Fraction
    c7: Fraction
    c8: Fraction
    a_values: tuple[Fraction, ...]

    @classmethod
    def from_constants(cls, cc: CaseConstants) -> "BoundInput":
        return cls(
            d=cc.d,
            p=cc.p,
            rank=cc.rank,
            c3=cc.c3,
            c7=cc.c7,
            c8=cc.c8,
            a_values=cc.a_values,
        )


def matveev_c9(inp: BoundInput, prec: int = DEFAULT_PREC) -> Fraction:
    """Rounded-up coefficient of the lower bound for the log linear form.

    With r multiplicands in a degree-d field and per-term height bounds
    A_1..A_r, the form exceeds exp(-c9*(1 + log(r*B))) where
    c9 = 3 * 30^(r+4) * (r+1)^5.5 * d^2 * (1 + log d) * A_1 * ... * A_r.
    """
    r, d = inp.rank, inp.d
    if len(inp.a_values) != r:
        raise ValueError("need exactly one height bound per multiplicand")
    chain = Ball(3, prec) * Ball(30, prec) ** (r + 4)
    chain = chain * Ball(r + 1, prec) ** Fraction(11, 2)
    chain = chain * d ** 2 * (1 + Ball(d, prec).log())
    for a in inp.a_values:
        chain = chain * a
    return round_sig(chain.hi, 4, "up")


def _collides(inp: BoundInput, c9: Fraction, n: int, prec: int) -> bool:
    """Certified check that exponent n is already impossible."""
    lhs = Ball(n, prec) * Ball(inp.p, prec).log() / inp.d - Ball(inp.c3, prec).log()
    big_b = inp.rank * inp.d * (inp.c7 * n + inp.c8)
    rhs = Ball(c9, prec) * (1 + Ball(big_b, prec).log())
    return lhs.gt(rhs)


def absolute_bound(inp: BoundInput, prec: int = DEFAULT_PREC) -> int:
    """Least certified N with no solutions at exponent n >= N.

    Past the stationary point of the gap the left side grows linearly
    while the right side grows logarithmically, so one certified collision
    settles every larger exponent; the search brackets and bisects above
    that point.  Requires d*c7 >= 1 so the unit-exponent part of B
    dominates the n term.
    """
    if inp.d * inp.c7 < 1:
        raise ValueError("bound on B needs d*c7 >= 1")
    c9 = matveev_c9(inp, prec)

    # gap is increasing past n_star = (c9*c7*d/log p - c8)/c7
    log_p = Ball(inp.p, prec).log()
    n_star = (Ball(c9, prec) * inp.c7 * inp.d / log_p - inp.c8) / inp.c7
    lo = max(int(n_star.hi) + 2, 2)

    hi = lo
    while not _collides(inp, c9, hi, prec):
        hi *= 2
        if hi > lo * 2 ** 64:
            raise ArithmeticError("no collision found; constants look wrong")
    while lo < hi:
        mid = (lo + hi) // 2
        if _collides(inp, c9, mid, prec):
            hi = mid
        else:
            lo = mid + 1
    return lo


def inequality_coefficients(inp: BoundInput, prec: int = DEFAULT_PREC) -> dict:
    """Display form of the collision inequality, rounded like the tables.

    The left slope log(p)/d is truncated, everything on the right is
    rounded up, so the displayed inequality is weaker than the certified
    one and stays true wherever the certified one holds.
    """
    log_p = Ball(inp.p, prec).log()
    rd = inp.rank * inp.d
    return {
        "lhs_slope": round_sig((log_p / inp.d).lo, 4, "trunc"),
        "lhs_shift": round_sig(Ball(inp.c3, prec).log().hi, 4, "up"),
        "c9": matveev_c9(inp, prec),
        "log_coeff_n": round_sig(Fraction(rd) * inp.c7, 4, "up"),
        "log_coeff_1": round_sig(Fraction(rd) * inp.c8, 4, "up"),
    }
