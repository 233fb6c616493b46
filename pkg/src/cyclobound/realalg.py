"""Certified numerics: interval scalars, root enclosures, rounded constants.

Every archimedean quantity in the bound chain is carried as a Ball, an
interval with exact binary endpoints, so comparisons and rounded constants
are proved rather than sampled.  Polynomial roots are located with mpmath
and then certified independently through interval arithmetic.  Constants
are rounded to four significant digits in a fixed direction, and each one
is checked against its enclosure in the direction that keeps it a valid
bound; a failed check raises instead of weakening the result.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .numberfield import CaseConfig, FieldElement, charpoly, nf_inverse, nf_mul, nf_pow
from .polyarith import IntPoly, poly_derivative, poly_eval

DEFAULT_PREC = 256


@functools.lru_cache(maxsize=None)
def _ctx(prec: int):
    ctx = mpmath.MPIntervalContext()
    ctx.prec = prec
    return ctx


def _endpoint_fraction(raw) -> Fraction:
    """Exact value of one mpf component tuple (sign, man, exp, bc)."""
    sign, man, exp, _ = raw
    man, exp = int(man), int(exp)
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("nonfinite interval endpoint")
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


class Ball:
    """Closed real interval guaranteed to contain the value it stands for."""

    __slots__ = ("iv", "prec")

    def __init__(self, value, prec: int = DEFAULT_PREC):
        ctx = _ctx(prec)
        if isinstance(value, Ball):
            self.iv = ctx.convert(value.iv)
        elif isinstance(value, Fraction):
            self.iv = ctx.mpf(value.numerator) / ctx.mpf(value.denominator)
        elif isinstance(value, int):
            self.iv = ctx.mpf(value)
        else:
            self.iv = ctx.convert(value)
        self.prec = prec

    @classmethod
    def from_endpoints(cls, lo, hi, prec: int = DEFAULT_PREC) -> "Ball":
        """Smallest representable interval containing [lo, hi]."""
        if lo > hi:
            raise ValueError("endpoints out of order")
        a = cls(Fraction(lo), prec)
        b = cls(Fraction(hi), prec)
        return cls(_ctx(prec).mpf([a.iv.a, b.iv.b]), prec)

    @property
    def lo(self) -> Fraction:
        return _endpoint_fraction(self.iv._mpi_[0])

    @property
    def hi(self) -> Fraction:
        return _endpoint_fraction(self.iv._mpi_[1])

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def rad(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def _pair(self, other):
        if not isinstance(other, Ball):
            other = Ball(other, self.prec)
        prec = max(self.prec, other.prec)
        ctx = _ctx(prec)
        return ctx.convert(self.iv), ctx.convert(other.iv), prec

    def __add__(self, other):
        a, b, prec = self._pair(other)
        return Ball(a + b, prec)

    __radd__ = __add__

    def __sub__(self, other):
        a, b, prec = self._pair(other)
        return Ball(a - b, prec)

    def __rsub__(self, other):
        a, b, prec = self._pair(other)
        return Ball(b - a, prec)

    def __mul__(self, other):
        a, b, prec = self._pair(other)
        return Ball(a * b, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b, prec = self._pair(other)
        return Ball(a / b, prec)

    def __rtruediv__(self, other):
        a, b, prec = self._pair(other)
        return Ball(b / a, prec)

    def __neg__(self):
        return Ball(-self.iv, self.prec)

    def __abs__(self):
        lo, hi = self.lo, self.hi
        if lo >= 0:
            return self
        if hi <= 0:
            return -self
        return Ball.from_endpoints(Fraction(0), max(-lo, hi), self.prec)

    def __pow__(self, e):
        if isinstance(e, int):
            return Ball(self.iv ** e, self.prec)
        e = Fraction(e)
        if self.lo <= 0:
            raise ValueError("fractional power needs a positive interval")
        return (self.log() * e).exp()

    def log(self) -> "Ball":
        if self.lo <= 0:
            raise ValueError("log needs a strictly positive interval")
        return Ball(_ctx(self.prec).log(self.iv), self.prec)

    def exp(self) -> "Ball":
        return Ball(_ctx(self.prec).exp(self.iv), self.prec)

    def sqrt(self) -> "Ball":
        if self.lo < 0:
            raise ValueError("sqrt needs a nonnegative interval")
        return Ball(_ctx(self.prec).sqrt(self.iv), self.prec)

    def gt(self, other) -> bool:
        """True only when every point of self exceeds every point of other."""
        if not isinstance(other, Ball):
            other = Ball(other, self.prec)
        return self.lo > other.hi

    def lt(self, other) -> bool:
        if not isinstance(other, Ball):
            other = Ball(other, self.prec)
        return self.hi < other.lo

    def __str__(self) -> str:
        return str(self.iv)

    def __repr__(self) -> str:
        return f"Ball({self.iv}, prec={self.prec})"


def ball_max(first, *rest) -> Ball:
    """Enclosure of the maximum of the given balls."""
    balls = [first if isinstance(first, Ball) else Ball(first)]
    balls += [b if isinstance(b, Ball) else Ball(b, balls[0].prec) for b in rest]
    prec = max(b.prec for b in balls)
    return Ball.from_endpoints(
        max(b.lo for b in balls), max(b.hi for b in balls), prec
    )


def ball_min(first, *rest) -> Ball:
    """Enclosure of the minimum of the given balls."""
    balls = [first if isinstance(first, Ball) else Ball(first)]
    balls += [b if isinstance(b, Ball) else Ball(b, balls[0].prec) for b in rest]
    prec = max(b.prec for b in balls)
    return Ball.from_endpoints(
        min(b.lo for b in balls), min(b.hi for b in balls), prec
    )


def ball_atan2(y: Ball, x: Ball) -> Ball:
    """Enclosure of the principal angle of the point x + iy.

    Boxes that meet the branch cut (or the origin) fall back to the full
    range [-pi, pi], which stays correct for magnitude bounds.
    """
    prec = max(y.prec, x.prec)
    ctx = _ctx(prec)
    if y.lo <= 0 <= y.hi and x.lo <= 0:
        pi_hi = Ball(ctx.pi, prec).hi
        return Ball.from_endpoints(-pi_hi, pi_hi, prec)
    return Ball(ctx.atan2(ctx.convert(y.iv), ctx.convert(x.iv)), prec)


class ComplexBall:
    """Rectangular complex enclosure with Ball real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        if not isinstance(re, Ball):
            re = Ball(re)
        if im is None:
            im = Ball(0, re.prec)
        elif not isinstance(im, Ball):
            im = Ball(im, re.prec)
        self.re = re
        self.im = im

    @staticmethod
    def _coerce(value) -> "ComplexBall":
        if isinstance(value, ComplexBall):
            return value
        return ComplexBall(value if isinstance(value, Ball) else Ball(value))

    def __add__(self, other):
        o = self._coerce(other)
        return ComplexBall(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return ComplexBall(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return ComplexBall(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Ball)):
            return ComplexBall(self.re / other, self.im / other)
        o = self._coerce(other)
        den = o.abs_squared()
        num = self * o.conj()
        return ComplexBall(num.re / den, num.im / den)

    def __neg__(self):
        return ComplexBall(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = ComplexBall(Ball(1, self.re.prec))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "ComplexBall":
        return ComplexBall(self.re, -self.im)

    def abs_squared(self) -> Ball:
        return self.re ** 2 + self.im ** 2

    def __abs__(self) -> Ball:
        return self.abs_squared().sqrt()

    def log_abs(self) -> Ball:
        """Enclosure of log|z|, tighter than log(abs) via the square."""
        return self.abs_squared().log() / 2

    def arg(self) -> Ball:
        return ball_atan2(self.im, self.re)

    def __str__(self) -> str:
        return f"({self.re} + {self.im}*i)"


# ---------------------------------------------------------------------------
# directed decimal rounding


def _floor_fr(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil_fr(x: Fraction) -> int:
    q = x.numerator // x.denominator
    return q if q == x else q + 1


def nearest_int(x: Fraction) -> int:
    """Nearest integer, ties away from zero."""
    f = _floor_fr(x)
    rem = x - f
    if rem > Fraction(1, 2):
        return f + 1
    if rem < Fraction(1, 2):
        return f
    return f + 1 if x > 0 else f


def _dec_exp(a: Fraction) -> int:
    """The e with 10**(e-1) <= a < 10**e, for a > 0."""
    e = len(str(a.numerator)) - len(str(a.denominator)) + 1
    while Fraction(10) ** (e - 1) > a:
        e -= 1
    while Fraction(10) ** e <= a:
        e += 1
    return e


def round_sig(x, sig: int = 4, mode: str = "nearest") -> Fraction:
    """Round to sig significant decimal digits in a fixed direction.

    mode is "up" (toward +inf), "down" (toward -inf), "trunc" (toward
    zero) or "nearest" (ties away from zero).  Exact rational in and out.
    """
    x = Fraction(x)
    if x == 0:
        return x
    neg = x < 0
    a = -x if neg else x
    scale = Fraction(10) ** (sig - _dec_exp(a))
    m = a * scale
    if mode == "nearest":
        mi = nearest_int(m)
    elif mode == "trunc":
        mi = _floor_fr(m)
    elif mode == "up":
        mi = _floor_fr(m) if neg else _ceil_fr(m)
    elif mode == "down":
        mi = _ceil_fr(m) if neg else _floor_fr(m)
    else:
        raise ValueError(f"unknown rounding mode {mode!r}")
    r = Fraction(mi) / scale
    return -r if neg else r


# ---------------------------------------------------------------------------
# certified root enclosures


def _sqrt_upper(x: Fraction, prec: int) -> Fraction:
    return Ball(x, prec).sqrt().hi


def certified_roots(f: IntPoly, prec: int = DEFAULT_PREC) -> list[ComplexBall]:
    """Certified enclosures of the roots of a monic IntPoly without real roots.

    Returns the d/2 roots with positive imaginary part ordered by
    decreasing real part, followed by their conjugates in the same order.

    Candidate centers come from mpmath; the certificate is separate.  With
    w_i = f(z_i) / prod_{j != i} (z_i - z_j) computed exactly, the union of
    the discs |z - z_i| <= d*|w_i| contains every root of f, and when the
    discs are pairwise disjoint each disc contains exactly one.
    """
    d = f.degree()
    if d < 2 or d % 2 != 0 or f.lc() != 1:
        raise ValueError("monic polynomial of even degree >= 2 required")
    coeffs_desc = [int(c) for c in reversed(f.coeffs)]
    work = max(prec, 64)
    for _ in range(8):
        try:
            with mpmath.workprec(work):
                found = mpmath.polyroots(coeffs_desc, maxsteps=200, extraprec=work)
                found = [mpmath.mpc(z) for z in found]
        except mpmath.libmp.NoConvergence:
            work *= 2
            continue
        upper = []
        for z in found:
            re = _endpoint_fraction(z.real._mpf_)
            im = _endpoint_fraction(z.imag._mpf_)
            if im > 0:
                upper.append((re, im))
        if len(upper) != d // 2:
            raise ValueError("polynomial appears to have a real root")
        upper.sort(key=lambda t: t[0], reverse=True)
        enclosures = _certify_roots(f, upper, work)
        if enclosures is not None:
            return enclosures
        work *= 2
    raise ArithmeticError("root certification did not converge")


def _certify_roots(f, upper, work):
    d = f.degree()
    half = d // 2
    prec = work + 32

    def cmul(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def ceval(z):
        acc = (Fraction(f.coeffs[-1]), Fraction(0))
        for c in reversed(f.coeffs[:-1]):
            acc = cmul(acc, z)
            acc = (acc[0] + c, acc[1])
        return acc

    rad_sq = []
    for i in range(half):
        zi = upper[i]
        num = ceval(zi)
        den = (Fraction(1), Fraction(0))
        for j in range(half):
            zj = upper[j]
            if j != i:
                den = cmul(den, (zi[0] - zj[0], zi[1] - zj[1]))
            den = cmul(den, (zi[0] - zj[0], zi[1] + zj[1]))
        w_sq = (num[0] ** 2 + num[1] ** 2) / (den[0] ** 2 + den[1] ** 2)
        rad_sq.append(d * d * w_sq)

    def separated(dx, dy, i, j):
        # dist > r_i + r_j, certified via dist^2 > 2*(r_i^2 + r_j^2)
        return dx * dx + dy * dy > 2 * (rad_sq[i] + rad_sq[j])

    for i in range(half):
        xi, yi = upper[i]
        if yi <= 0 or yi * yi <= rad_sq[i]:
            return None
        for j in range(i + 1, half):
            xj, yj = upper[j]
            if not separated(xi - xj, yi - yj, i, j):
                return None
        for j in range(half):
            xj, yj = upper[j]
            if i == j:
                continue
            if not separated(xi - xj, yi + yj, i, j):
                return None
    for i in range(half - 1):
        xi, yi = upper[i]
        xj, yj = upper[i + 1]
        if xi <= xj or not separated(xi - xj, Fraction(0), i, i + 1):
            return None

    out = []
    for i in range(half):
        x, y = upper[i]
        r = _sqrt_upper(rad_sq[i], prec)
        out.append(
            ComplexBall(
                Ball.from_endpoints(x - r, x + r, prec),
                Ball.from_endpoints(y - r, y + r, prec),
            )
        )
    out += [z.conj() for z in out[:half]]
    return out


# ---------------------------------------------------------------------------
# embeddings of field elements


class ConjugateData:
    """Certified complex embeddings of one case's field.

    Embedding i sends the generator to roots[i]; the first d/2 roots have
    positive imaginary part and decreasing real part, and root d/2 + i is
    the conjugate of root i.  Embedding values are cached per element.
    """

    def __init__(self, cfg: CaseConfig, prec: int = DEFAULT_PREC):
        self.cfg = cfg
        self.prec = prec
        self.roots = certified_roots(cfg.f, prec)
        self._embeds: dict = {}
        self._abs: dict = {}

    @property
    def d(self) -> int:
        return self.cfg.d

    def embed(self, elem: FieldElement, i: int) -> ComplexBall:
        """Enclosure of the image of elem under embedding i."""
        key = (elem, i)
        got = self._embeds.get(key)
        if got is None:
            got = poly_eval(elem.num, self.roots[i]) / elem.den
            self._embeds[key] = got
        return got

    def embed_abs(self, elem: FieldElement, i: int) -> Ball:
        key = (elem, i)
        got = self._abs.get(key)
        if got is None:
            got = abs(self.embed(elem, i))
            self._abs[key] = got
        return got

    def max_abs_root(self) -> Ball:
        return ball_max(*[abs(z) for z in self.roots[: self.d // 2]])


def log_height(cfg: CaseConfig, elem: FieldElement, conj: ConjugateData) -> Ball:
    """Enclosure of the absolute logarithmic height of a field element.

    Uses the degree-d characteristic polynomial; if that is a power of the
    minimal polynomial the formula is unchanged, since both the leading
    coefficient and the conjugate list repeat by the same factor.
    """
    if elem.is_zero():
        raise ValueError("height of zero is undefined")
    lead = charpoly(elem, cfg.f).lc()
    total = Ball(abs(lead), conj.prec).log()
    one = Ball(1, conj.prec)
    for i in range(conj.d):
        total = total + ball_max(conj.embed_abs(elem, i), one).log()
    return total / conj.d


def _ball_det(m) -> Ball:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _ball_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def regulator(cfg: CaseConfig, conj: ConjugateData, idxs=None) -> Ball:
    """Unit-lattice determinant in the single-log convention.

    Rows are log|unit| at one embedding per conjugate pair.  Any choice of
    len(units) distinct pairs gives the same absolute value because the
    rows summed over all pairs vanish; the standard convention with
    doubled logs is 2**len(units) times this.
    """
    units = cfg.units
    if idxs is None:
        idxs = tuple(range(len(units)))
    if len(idxs) != len(units) or len(set(idxs)) != len(units):
        raise ValueError("need as many distinct embeddings as units")
    rows = [[conj.embed_abs(u, i).log() for u in units] for i in idxs]
    return abs(_ball_det(rows))


# ---------------------------------------------------------------------------
# the rounded-constant chain


@dataclass(frozen=True)
class CaseConstants:
    """Rounded constants for one case, each a proved one-sided bound.

    c1*p^(n/d) underestimates |x - alpha^(i)| and c4*p^(n/d) overestimates
    it; c2 bounds the Taylor tail of the cofactor, c3 = c2/c1 the relative
    error; c5/c6 bound the per-embedding log drift and c7/c8 the unit
    exponents via max|m_i| <= c7*n + c8; a_values are the per-logarithm
    Baker heights.  All are exact Fractions rounded in the sound direction.
    """

    case_id: str
    d: int
    p: int
    rank: int
    n_lower: int
    margin: Fraction
    max_abs_root: Fraction
    deriv_bounds: tuple[Fraction, ...]
    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction
    c5: Fraction
    c6: Fraction
    c7: Fraction
    c8: Fraction
    delta_abs_range: tuple[Fraction, Fraction]
    gamma_abs_range: tuple[Fraction, Fraction]
    regulator: Fraction
    regulator_standard: Fraction
    unit_minor_bound: Fraction | None
    unit_minor_triple: tuple[int, ...] | None
    a_values: tuple[Fraction, ...]
    a0_eta1: tuple[int, ...]
    a0_eta2: tuple[int, ...]

    def to_dict(self) -> dict:
        out = {
            "case_id": self.case_id,
            "d": self.d,
            "p": self.p,
            "rank": self.rank,
            "n_lower": self.n_lower,
            "margin": float(self.margin),
            "max_abs_root": float(self.max_abs_root),
            "deriv_bounds": [float(v) for v in self.deriv_bounds],
            "c1": float(self.c1),
            "c2": float(self.c2),
            "c3": float(self.c3),
            "c4": float(self.c4),
            "c5": float(self.c5),
            "c6": float(self.c6),
            "c7": float(self.c7),
            "c8": float(self.c8),
            "delta_abs_range": [float(v) for v in self.delta_abs_range],
            "gamma_abs_range": [float(v) for v in self.gamma_abs_range],
            "regulator": float(self.regulator),
            "regulator_standard": float(self.regulator_standard),
            "a_values": [float(v) for v in self.a_values],
            "a0_eta1": list(self.a0_eta1),
            "a0_eta2": list(self.a0_eta2),
        }
        if self.unit_minor_bound is not None:
            out["unit_minor_bound"] = float(self.unit_minor_bound)
            out["unit_minor_triple"] = list(self.unit_minor_triple)
        return out


def case_etas(cfg: CaseConfig):
    """The multiplicands of the unit inequality: 2/delta^d per delta and
    p/gamma^d per norm-exponent-1 gamma, followed by the units."""
    f, d = cfg.f, cfg.d
    eta1 = [
        nf_mul(FieldElement(2), nf_inverse(nf_pow(dl, d, f), f), f)
        for dl in cfg.deltas
    ]
    eta2 = [
        nf_mul(FieldElement(cfg.p), nf_inverse(nf_pow(g, d, f), f), f)
        for g, c in zip(cfg.gammas, cfg.gamma_norm_exponents)
        if c == 1
    ]
    return eta1, eta2, list(cfg.units)


def compute_constants(
    cfg: CaseConfig, conj: ConjugateData, n_lower: int
) -> CaseConstants:
    """Run the full rounded-constant chain for one case.

    n_lower must be a proved lower bound on the exponent; several tail
    estimates need p**n_lower > (2*10**10)**d and the call refuses to
    continue otherwise.
    """
    d, p, f, prec = cfg.d, cfg.p, cfg.f, conj.prec
    y_floor = 2 * 10 ** 10
    if p ** n_lower <= y_floor ** d:
        raise ValueError("lower bound on the exponent is too small for the tails")

    one = Ball(1, prec)

    max_root = conj.max_abs_root()
    max_abs_root = round_sig(max_root.hi, 4, "up")
    margin = max(Fraction("2.252"), round_sig((one + max_root).hi, 4, "up"))

    # |x - alpha^(i)| is squeezed between c1*p^(n/d) and c4*p^(n/d)
    root_2d = Ball(2, prec) ** Fraction(1, d)
    tail = Ball(margin, prec) / Ball(p, prec) ** Fraction(n_lower, d)
    c1 = round_sig((root_2d - tail).lo, 4, "down")
    c4 = round_sig((root_2d + tail).hi, 4, "up")
    if not 0 < c1 <= c4:
        raise ArithmeticError("degenerate bounds for |x - alpha|")

    # upper bounds for |f^(i)(alpha)| / i! over all embeddings
    deriv_exact: list[Ball] = []
    g = f
    fact = 1
    for i in range(1, d):
        g = poly_derivative(g)
        fact *= i
        vals = [abs(poly_eval(g, conj.roots[j])) / fact for j in range(d // 2)]
        deriv_exact.append(ball_max(*vals))
    deriv_bounds = tuple(round_sig(b.hi, 4, "up") for b in deriv_exact)

    # Taylor tail of the cofactor at |y| > y_floor, chained from the
    # rounded table, then checked against the unrounded enclosure
    c2_chain = deriv_bounds[d - 2] + sum(
        deriv_bounds[i - 1] / Fraction(y_floor ** (d - 1 - i))
        for i in range(1, d - 1)
    )
    c2 = round_sig(c2_chain, 4, "up")
    c2_exact_hi = deriv_exact[d - 2].hi + sum(
        deriv_exact[i - 1].hi / Fraction(y_floor ** (d - 1 - i))
        for i in range(1, d - 1)
    )
    if c2 < c2_exact_hi:
        raise ArithmeticError("rounded tail bound fell below the certified one")

    c3 = round_sig(c2 / c1, 4, "trunc")
    if c3 < c2_exact_hi / (root_2d - tail).lo:
        raise ArithmeticError("truncated ratio fell below the certified one")

    # embedding magnitude ranges for the deltas and the relevant gammas
    delta_abs = [
        conj.embed_abs(dl, i) for dl in cfg.deltas for i in range(d // 2)
    ]
    gammas1 = [
        g for g, c in zip(cfg.gammas, cfg.gamma_norm_exponents) if c == 1
    ]
    gamma_abs = [conj.embed_abs(g, i) for g in gammas1 for i in range(d // 2)]
    dmin, dmax = ball_min(*delta_abs), ball_max(*delta_abs)
    gmin, gmax = ball_min(*gamma_abs), ball_max(*gamma_abs)
    delta_abs_range = (round_sig(dmin.lo, 4, "down"), round_sig(dmax.hi, 4, "up"))
    gamma_abs_range = (round_sig(gmin.lo, 4, "down"), round_sig(gmax.hi, 4, "up"))

    # c5/c6 are taken from the rounded range endpoints rather than the raw
    # enclosures; the endpoint rounding only widens the ratios, so the
    # results stay valid upper bounds
    p_root_d = Ball(p, prec) ** Fraction(1, d)
    c5 = round_sig(
        ball_max(
            (p_root_d / gamma_abs_range[0]).log(),
            (Ball(gamma_abs_range[1], prec) / p_root_d).log(),
        ).hi,
        4,
        "up",
    )
    c6 = round_sig(
        ball_max(
            (Ball(c4, prec) / delta_abs_range[0]).log(),
            (Ball(delta_abs_range[1], prec) / c1).log(),
        ).hi,
        4,
        "up",
    )

    # bound max|m_i| <= c7*n + c8 by solving the log-embedding system
    reg = regulator(cfg, conj)
    if reg.lo <= 0:
        raise ArithmeticError("regulator not certified nonzero")
    units = cfg.units
    if len(units) == 1:
        c7 = round_sig((Ball(c5, prec) / reg).hi, 4, "up")
        c8 = round_sig((Ball(c6, prec) / reg).hi, 4, "up")
        minor_bound = None
        minor_triple = None
    else:
        u = len(units)
        best = None
        for triple in itertools.combinations(range(d // 2), u):
            rows = [
                [conj.embed_abs(unit, i).log() for unit in units] for i in triple
            ]
            det = abs(_ball_det(rows))
            if det.lo <= 0:
                continue
            minors = [
                abs(
                    _ball_det(
                        [
                            [rows[a][b] for b in range(u) if b != cj]
                            for a in range(u)
                            if a != ri
                        ]
                    )
                )
                for ri in range(u)
                for cj in range(u)
            ]
            r2 = ball_max(*minors)
            if best is None or r2.hi < best[0]:
                best = (r2.hi, triple, r2, det)
        if best is None:
            raise ArithmeticError("no conjugate triple has a certified determinant")
        _, minor_triple, r2, det = best
        c7 = round_sig((r2 * 3 * c5 / det).hi, 4, "up")
        c8 = round_sig((r2 * 3 * c6 / det).hi, 4, "up")
        minor_bound = round_sig(r2.hi, 4, "up")

    # Baker heights: A_j covers d*h(eta_j), every principal |log eta_j|,
    # and the 0.16 floor; eta1/eta2 aggregate over their case choices
    def matveev_a(elem: FieldElement) -> Ball:
        best_b = log_height(cfg, elem, conj) * d
        for i in range(d // 2):
            e = conj.embed(elem, i)
            term = (e.log_abs() ** 2 + e.arg() ** 2).sqrt()
            best_b = ball_max(best_b, term)
        return ball_max(best_b, Ball(Fraction(4, 25), prec))

    eta1, eta2, _ = case_etas(cfg)
    a_values = (
        round_sig(ball_max(*[matveev_a(e) for e in eta1]).hi, 4, "up"),
        round_sig(ball_max(*[matveev_a(e) for e in eta2]).hi, 4, "up"),
        *(round_sig(matveev_a(unit).hi, 4, "up") for unit in units),
    )
    a0_eta1 = tuple(charpoly(e, f).lc() for e in eta1)
    a0_eta2 = tuple(charpoly(e, f).lc() for e in eta2)

    return CaseConstants(
        case_id=cfg.case_id,
        d=d,
        p=p,
        rank=cfg.rank,
        n_lower=n_lower,
        margin=margin,
        max_abs_root=max_abs_root,
        deriv_bounds=deriv_bounds,
        c1=c1,
        c2=c2,
        c3=c3,
        c4=c4,
        c5=c5,
        c6=c6,
        c7=c7,
        c8=c8,
        delta_abs_range=delta_abs_range,
        gamma_abs_range=gamma_abs_range,
        regulator=round_sig(reg.mid, 5, "trunc"),
        regulator_standard=round_sig(reg.mid * 2 ** len(units), 5, "trunc"),
        unit_minor_bound=minor_bound,
        unit_minor_triple=minor_triple,
        a_values=a_values,
        a0_eta1=a0_eta1,
        a0_eta2=a0_eta2,
    )
