"""Number field arithmetic and case-definition data.

Elements of K = Q[x]/(f) are stored as an integer polynomial numerator of
degree < deg f over a positive integer denominator, content-reduced.  All
operations are exact.

A "case" bundles the data needed to analyse Phi_m(x) + 1 = 2*p^n for one
pair (m, p): the defining polynomial f = Phi_m + 1, fundamental units,
generators of the prime ideals above p (gammas, with their norm exponents),
generators of the prime ideals above 2 (deltas), and a witness writing 2 as
a unit-times-deltas product.  Three cases ship built in; others can be
loaded from a JSON file with the same fields (polynomials as coefficient
lists, lowest degree first):

    {
      "case_id": "15-41", "m": 15, "p": 41,
      "f": [2, -1, 0, 1, -1, 1, 0, -1, 1],
      "units": [[-1, 1, 1, 0, 1, 0, 0, 1], ...],
      "gammas": [{"coeffs": [...], "norm_exponent": 1}, ...],
      "deltas": [[0, 1], [1, 1]],
      "two_decomposition": {"sign": 1,
                            "factors": [{"coeffs": [0, 1], "exponent": 1}, ...]},
      "default_conjugate_choice": {"0": [1, 3, 4]},
      "default_K": 1000000000000000000000000000000000000000,
      "default_scan_depth": 60
    }

``default_conjugate_choice`` maps the index of each norm-exponent-1 gamma to
the tuple of embedding indices (1-based, among the distinct conjugate pairs)
used by the lattice reduction stage.  ``default_scan_depth`` is the digit
index up to which the p-adic scan runs when no depth is given explicitly.
"""
from __future__ import annotations

import dataclasses
import json
import math
from fractions import Fraction

from .polyarith import IntPoly, discriminant, cyclotomic, poly_eval, resultant


# ---------------------------------------------------------------------------
# field elements


@dataclasses.dataclass(init=False, eq=True)
class FieldElement:
    """num(alpha)/den with deg num < deg f, den > 0, gcd(content, den) = 1."""

    num: IntPoly
    den: int

    def __init__(self, num, den: int = 1, f: IntPoly | None = None):
        if isinstance(num, int):
            num = IntPoly(num)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if f is not None and num.degree() >= f.degree():
            num = num % f
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.content(), den)
        if g > 1:
            num = IntPoly(*(c // g for c in num.coeffs))
            den //= g
        self.num = num
        self.den = den

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __str__(self) -> str:
        s = str(self.num).replace("x", "a")
        return s if self.den == 1 else f"({s})/{self.den}"


def nf_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(a.num * b.den + b.num * a.den, a.den * b.den)


def nf_neg(a: FieldElement) -> FieldElement:
    return FieldElement(-a.num, a.den)


def nf_mul(a: FieldElement, b: FieldElement, f: IntPoly) -> FieldElement:
    return FieldElement((a.num * b.num) % f, a.den * b.den)


def nf_inverse(a: FieldElement, f: IntPoly) -> FieldElement:
    """Inverse in Q[x]/(f) by the extended Euclidean algorithm over Q[x].

    Requires gcd(a.num, f) = 1, which holds whenever f is irreducible and
    a is nonzero.
    """
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero field element")
    r0 = [Fraction(c) for c in f.coeffs]
    r1 = [Fraction(c) for c in a.num.coeffs]
    s0, s1 = [], [Fraction(1)]  # Bezout coefficients for a.num only
    while True:
        q, r = _fdivmod(r0, r1)
        if not r:
            break
        s0, s1 = s1, _fsub(s0, _fmul(q, s1))
        r0, r1 = r1, r
    if len(r1) != 1:
        raise ValueError("element not invertible modulo f")
    inv = [c / r1[0] for c in s1]
    den = math.lcm(*(c.denominator for c in inv))
    num = IntPoly(*(int(c * den) for c in inv))
    return FieldElement(num * a.den, den, f)


def nf_pow(a: FieldElement, k: int, f: IntPoly) -> FieldElement:
    if k < 0:
        return nf_pow(nf_inverse(a, f), -k, f)
    out = FieldElement(1)
    base = a
    while k:
        if k & 1:
            out = nf_mul(out, base, f)
        base = nf_mul(base, base, f)
        k >>= 1
    return out


def nf_norm(a: FieldElement, f: IntPoly) -> Fraction:
    """Field norm N(a) = Res(f, num) / den^d for monic f."""
    if f.lc() != 1:
        raise ValueError("norm formula requires monic f")
    if a.is_zero():
        return Fraction(0)
    return Fraction(resultant(f, a.num), a.den ** f.degree())


def charpoly(a: FieldElement, f: IntPoly) -> IntPoly:
    """Primitive integer characteristic polynomial of a acting on Q[x]/(f).

    Computed from the multiplication matrix by the Faddeev-LeVerrier
    recurrence over exact rationals.  Equals the minimal polynomial raised
    to a power, scaled to integer coefficients of content 1 with positive
    leading coefficient.
    """
    d = f.degree()
    cols = []
    for j in range(d):
        w = nf_mul(a, FieldElement(IntPoly(*([0] * j + [1]))), f)
        cols.append([Fraction(w.num[i], w.den) for i in range(d)])
    m = [[cols[j][i] for j in range(d)] for i in range(d)]  # m[i][j]
    ident = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    n = ident
    cs = [Fraction(1)]
    for k in range(1, d + 1):
        mk = _matmul(m, n)
        c = -sum(mk[i][i] for i in range(d)) / k
        cs.append(c)
        n = [[mk[i][j] + (c if i == j else 0) for j in range(d)] for i in range(d)]
    coeffs = list(reversed(cs))  # lowest degree first, leading 1
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    return IntPoly(*(c // g for c in ints))


def _matmul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


# dense Fraction-coefficient polynomial helpers (lowest degree first),
# used only by nf_inverse
def _ftrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _fsub(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] -= c
    return _ftrim(out)


def _fmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, c in enumerate(p):
        for j, e in enumerate(q):
            out[i + j] += c * e
    return _ftrim(out)


def _fdivmod(p, q):
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    p = p[:]
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while p and len(p) >= len(q):
        c = p[-1] / q[-1]
        k = len(p) - len(q)
        quot[k] = c
        for j, e in enumerate(q):
            p[k + j] -= c * e
        p.pop()  # leading term cancelled exactly
        _ftrim(p)
    return _ftrim(quot), p


# ---------------------------------------------------------------------------
# case configuration


@dataclasses.dataclass(frozen=True)
class CaseConfig:
    case_id: str
    m: int
    p: int
    d: int
    f: IntPoly
    units: tuple[FieldElement, ...]
    gammas: tuple[FieldElement, ...]
    gamma_norm_exponents: tuple[int, ...]
    deltas: tuple[FieldElement, ...]
    two_sign: int
    two_factors: tuple[tuple[FieldElement, int], ...]
    default_conjugate_choice: dict[int, tuple[int, ...]]
    default_K: int
    default_scan_depth: int

    @property
    def rank(self) -> int:
        """Number of Baker-stage logarithms: 2 + number of units."""
        return 2 + len(self.units)


@dataclasses.dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclasses.dataclass
class VerificationReport:
    case_id: str
    checks: list[CheckResult]
    trusted: list[str]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "passed": self.passed,
            "checks": [dataclasses.asdict(c) for c in self.checks],
            "trusted": list(self.trusted),
        }


def _euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    r, s = n - 1, 0
    while r % 2 == 0:
        r, s = r // 2, s + 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, r, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _fe(coeffs) -> FieldElement:
    return FieldElement(IntPoly(*coeffs))


_BUILTIN_RAW = {
    "15-41": {
        "m": 15,
        "p": 41,
        "f": [2, -1, 0, 1, -1, 1, 0, -1, 1],
        "units": [
            [-1, 1, 1, 0, 1, 0, 0, 1],
            [-1, 1, 0, 0, 1, -1, 1],
            [1, -1, 1],
        ],
        "gammas": [
            {"coeffs": [1, -1, 1, 1, -2, 1, 1, -1], "norm_exponent": 1},
            {"coeffs": [1, 15, 7, -14, 8, -19, 13, -4], "norm_exponent": 7},
        ],
        "deltas": [[0, 1], [1, 1]],
        "two_decomposition": {
            "sign": 1,
            "factors": [
                {"coeffs": [0, 1], "exponent": 1},
                {"coeffs": [1, 1], "exponent": 4},
                {"coeffs": [1, 0, -1, 1], "exponent": 1},
                {"coeffs": [-1, 1, 1, 0, 1, 0, 0, 1], "exponent": -2},
                {"coeffs": [-1, 1, 0, 0, 1, -1, 1], "exponent": 1},
            ],
        },
        "default_conjugate_choice": {"0": [1, 3, 4]},
        "default_K": 10**39,
        "default_scan_depth": 60,
    },
    "15-5581": {
        "m": 15,
        "p": 5581,
        "f": [2, -1, 0, 1, -1, 1, 0, -1, 1],
        "units": [
            [-1, 1, 1, 0, 1, 0, 0, 1],
            [-1, 1, 0, 0, 1, -1, 1],
            [1, -1, 1],
        ],
        "gammas": [
            {"coeffs": [1, -2, 0, 0, 0, -1, 1], "norm_exponent": 1},
            {"coeffs": [1, 1, 1, 0, 0, 2], "norm_exponent": 1},
            {"coeffs": [1, 1, 7, -5, -4, 7, -1, -3], "norm_exponent": 2},
            {"coeffs": [-135, 92, 134, -21, 55, -112, -41, 85], "norm_exponent": 4},
        ],
        "deltas": [[0, 1], [1, 1]],
        "two_decomposition": {
            "sign": 1,
            "factors": [
                {"coeffs": [0, 1], "exponent": 1},
                {"coeffs": [1, 1], "exponent": 4},
                {"coeffs": [1, 0, -1, 1], "exponent": 1},
                {"coeffs": [-1, 1, 1, 0, 1, 0, 0, 1], "exponent": -2},
                {"coeffs": [-1, 1, 0, 0, 1, -1, 1], "exponent": 1},
            ],
        },
        "default_conjugate_choice": {"0": [2, 3, 4], "1": [1, 3, 4]},
        "default_K": 10**39,
        "default_scan_depth": 502,
    },
    "10-271": {
        "m": 10,
        "p": 271,
        "f": [2, -1, 1, -1, 1],
        "units": [[1, 0, -1, 1]],
        "gammas": [
            {"coeffs": [3, -4, 4, -2], "norm_exponent": 1},
            {"coeffs": [53, 44, 16, -18], "norm_exponent": 3},
        ],
        "deltas": [[0, 1], [-1, 1]],
        "two_decomposition": {
            "sign": -1,
            "factors": [
                {"coeffs": [0, 1], "exponent": 1},
                {"coeffs": [-1, 1], "exponent": 3},
                {"coeffs": [1, 0, -1, 1], "exponent": -1},
            ],
        },
        "default_conjugate_choice": {"0": [2]},
        "default_K": 10**41,
        "default_scan_depth": 70,
    },
}


def _config_from_dict(case_id: str, raw: dict) -> CaseConfig:
    f = IntPoly(*raw["f"])
    choice = {
        int(k): tuple(int(i) for i in v)
        for k, v in raw["default_conjugate_choice"].items()
    }
    return CaseConfig(
        case_id=case_id,
        m=int(raw["m"]),
        p=int(raw["p"]),
        d=f.degree(),
        f=f,
        units=tuple(_fe(u) for u in raw["units"]),
        gammas=tuple(_fe(g["coeffs"]) for g in raw["gammas"]),
        gamma_norm_exponents=tuple(int(g["norm_exponent"]) for g in raw["gammas"]),
        deltas=tuple(_fe(dd) for dd in raw["deltas"]),
        two_sign=int(raw["two_decomposition"]["sign"]),
        two_factors=tuple(
            (_fe(fa["coeffs"]), int(fa["exponent"]))
            for fa in raw["two_decomposition"]["factors"]
        ),
        default_conjugate_choice=choice,
        default_K=int(raw["default_K"]),
        default_scan_depth=int(raw["default_scan_depth"]),
    )


def list_case_ids() -> list[str]:
    return list(_BUILTIN_RAW)


def get_case(case_id: str) -> CaseConfig:
    if case_id not in _BUILTIN_RAW:
        raise KeyError(f"unknown case {case_id!r}; built in: {', '.join(_BUILTIN_RAW)}")
    return _config_from_dict(case_id, _BUILTIN_RAW[case_id])


def load_case_config(path: str) -> CaseConfig:
    """Load a case definition from a JSON file (schema in the module docstring)."""
    with open(path) as fh:
        raw = json.load(fh)
    for key in ("case_id", "m", "p", "f", "units", "gammas", "deltas",
                "two_decomposition", "default_conjugate_choice", "default_K",
                "default_scan_depth"):
        if key not in raw:
            raise ValueError(f"case file missing field {key!r}")
    return _config_from_dict(str(raw["case_id"]), raw)


def case_to_dict(cfg: CaseConfig) -> dict:
    """Inverse of load_case_config, for writing case files."""
    return {
        "case_id": cfg.case_id,
        "m": cfg.m,
        "p": cfg.p,
        "f": list(cfg.f.coeffs),
        "units": [list(u.num.coeffs) for u in cfg.units],
        "gammas": [
            {"coeffs": list(g.num.coeffs), "norm_exponent": c}
            for g, c in zip(cfg.gammas, cfg.gamma_norm_exponents)
        ],
        "deltas": [list(dd.num.coeffs) for dd in cfg.deltas],
        "two_decomposition": {
            "sign": cfg.two_sign,
            "factors": [
                {"coeffs": list(fa.num.coeffs), "exponent": e}
                for fa, e in cfg.two_factors
            ],
        },
        "default_conjugate_choice": {
            str(k): list(v) for k, v in cfg.default_conjugate_choice.items()
        },
        "default_K": cfg.default_K,
        "default_scan_depth": cfg.default_scan_depth,
    }


# ---------------------------------------------------------------------------
# verification


_TRUSTED = [
    "the listed units are a fundamental system (not merely independent units)",
    "the class number of the field is 1, so norm-p^k elements generate the primes above p",
]


def _envelope_certificate(f: IntPoly) -> bool:
    """Certify (|x|-1)^d < f(x) < (|x|+1)^d for all integers |x| >= 2.

    Substituting x = +-(t+2) turns each side into a polynomial in t that
    must be positive for t >= 0; nonnegative coefficients with a positive
    constant term prove that.
    """
    d = f.degree()
    low_ref = IntPoly(1, 1) ** d
    high_ref = IntPoly(3, 1) ** d
    for shifted in (poly_eval(f, IntPoly(2, 1)), poly_eval(f, IntPoly(-2, -1))):
        for q in (shifted - low_ref, high_ref - shifted):
            if q[0] <= 0 or any(c < 0 for c in q.coeffs):
                return False
    return True


def verify_case_data(cfg: CaseConfig) -> VerificationReport:
    """Exact re-verification of everything the pipeline consumes.

    All checks are integer/rational identities: unit norms, gamma and delta
    norms, the multiplicative witness for 2, p not dividing disc(f), and the
    growth envelope that the archimedean estimates rest on.  Items that
    cannot be checked without an independent unit-group computation are
    listed under ``trusted``.
    """
    checks: list[CheckResult] = []

    def check(name: str, ok: bool, detail: str):
        checks.append(CheckResult(name, bool(ok), detail))

    phi = _euler_phi(cfg.m)
    f_expect = cyclotomic(cfg.m) + IntPoly(1)
    check(
        "defining polynomial",
        cfg.f == f_expect and cfg.f.degree() == cfg.d == phi and cfg.f.lc() == 1,
        f"f = {cfg.f}, degree {cfg.f.degree()} = phi({cfg.m})",
    )
    check("p is an odd prime", cfg.p % 2 == 1 and _is_prime(cfg.p), f"p = {cfg.p}")

    disc = discriminant(cfg.f)
    check(
        "p does not divide disc(f)",
        disc % cfg.p != 0,
        f"disc(f) = {disc}",
    )

    for i, u in enumerate(cfg.units, 1):
        nu = nf_norm(u, cfg.f)
        check(
            f"unit {i} has norm +-1",
            abs(nu) == 1,
            f"N({u}) = {nu}",
        )

    for i, (g, c) in enumerate(zip(cfg.gammas, cfg.gamma_norm_exponents), 1):
        ng = nf_norm(g, cfg.f)
        check(
            f"gamma {i} has norm +-p^{c}",
            abs(ng) == Fraction(cfg.p) ** c,
            f"N({g}) = {ng}",
        )

    for i, dd in enumerate(cfg.deltas, 1):
        nd = nf_norm(dd, cfg.f)
        check(
            f"delta {i} has norm +-2",
            abs(nd) == 2,
            f"N({dd}) = {nd}",
        )

    prod = FieldElement(cfg.two_sign)
    for fa, e in cfg.two_factors:
        prod = nf_mul(prod, nf_pow(fa, e, cfg.f), cfg.f)
    check(
        "decomposition of 2 multiplies out",
        prod == FieldElement(2),
        f"product = {prod}",
    )

    check(
        "growth envelope (|x|-1)^d < f(x) < (|x|+1)^d for |x| >= 2",
        _envelope_certificate(cfg.f),
        "certified by nonnegative coefficients after shifting by 2",
    )

    check(
        "conjugate choices are well-formed",
        all(
            0 <= k < sum(1 for c in cfg.gamma_norm_exponents if c == 1)
            and all(1 <= i <= cfg.d // 2 for i in v)
            for k, v in cfg.default_conjugate_choice.items()
        ),
        str(cfg.default_conjugate_choice),
    )

    return VerificationReport(cfg.case_id, checks, list(_TRUSTED))


def enumerate_exponent_cases(cfg: CaseConfig) -> list[tuple[FieldElement, FieldElement]]:
    """All (delta, gamma) pairs the S-unit step must handle.

    The prime-ideal exponent vector of 2*p^n forces, for each gamma with
    norm exponent c, a contribution c*n_i with n_i in {0, n}; the total must
    be n, so exactly one gamma with c = 1 appears.  Either delta may carry
    the single factor of 2.
    """
    out = []
    for g, c in zip(cfg.gammas, cfg.gamma_norm_exponents):
        if c != 1:
            continue
        for dd in cfg.deltas:
            out.append((dd, g))
    return out
