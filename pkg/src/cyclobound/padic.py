"""p-adic root lifting and the digit-scan lower bound.

If f(x) = 2*p^n then x is a root of f modulo p^n, so x agrees modulo p^n
with a Hensel lift of some root of f mod p.  Since |x| is roughly
(2*p^n)^(1/d), the base-p expansion of x (or of p^n - |x| when x < 0) has
all digits equal to 0 (resp. p-1) from index floor((n+1)/d)+1 up to n-1.
The lifted root's digits are x's digits in that range, so the first lifted
digit index k0 >= 1 whose digit lies in {0, p-1} yields the lower bound
n >= d*(k0-1) - 1 for every solution large enough that the digit window is
nonempty (small n is covered separately by the direct search).
"""
from __future__ import annotations

import dataclasses
import math

from .numberfield import CaseConfig
from .polyarith import IntPoly, poly_derivative, poly_eval


@dataclasses.dataclass(frozen=True)
class PAdicRoot:
    """A root of f modulo p^depth, as base-p digits, lowest first."""

    p: int
    digits: tuple[int, ...]

    @property
    def r0(self) -> int:
        return self.digits[0]

    @property
    def depth(self) -> int:
        return len(self.digits)

    def value(self) -> int:
        v = 0
        for a in reversed(self.digits):
            v = v * self.p + a
        return v

    def first_extreme_index(self) -> int | None:
        """Least k >= 1 with digit in {0, p-1}, or None if no computed digit hits."""
        for k in range(1, self.depth):
            if self.digits[k] in (0, self.p - 1):
                return k
        return None


def roots_mod_p(f: IntPoly, p: int) -> list[int]:
    """All roots of f mod p, by exhaustive scan of the p residues."""
    return [r for r in range(p) if poly_eval(f, r) % p == 0]


def hensel_lift(f: IntPoly, p: int, r0: int, depth: int) -> PAdicRoot:
    """Lift a simple root of f mod p to a root mod p^depth.

    Newton iteration with doubling modulus: each step squares the modulus,
    so reaching depth digits takes about log2(depth) big-int rounds.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if poly_eval(f, r0) % p != 0:
        raise ValueError(f"{r0} is not a root of f mod {p}")
    fprime = poly_derivative(f)
    if poly_eval(fprime, r0) % p == 0:
        raise ValueError(f"root {r0} of f mod {p} is not simple")
    x, e = r0 % p, 1
    while e < depth:
        e = min(2 * e, depth)
        mod = p**e
        fx = poly_eval(f, x) % mod
        fpx = poly_eval(fprime, x) % mod
        x = (x - fx * pow(fpx, -1, mod)) % mod
    digits = []
    for _ in range(depth):
        x, a = divmod(x, p)
        digits.append(a)
    return PAdicRoot(p, tuple(digits))


def digit_scan_bound(root: PAdicRoot, d: int) -> int:
    """Lower bound d*(k0-1) - 1 on n for solutions passing through this root.

    k0 is the first digit index >= 1 with digit in {0, p-1}; if none of the
    computed digits hits, the first index that *could* hit is root.depth, so
    the bound uses k0 = root.depth.
    """
    k0 = root.first_extreme_index()
    if k0 is None:
        k0 = root.depth
    return d * (k0 - 1) - 1


def scan_case(cfg: CaseConfig, depth: int) -> list[PAdicRoot]:
    """Lift every root of f mod p to depth+1 digits (digit indices 0..depth)."""
    roots = roots_mod_p(cfg.f, cfg.p)
    if not roots:
        raise ValueError(
            f"f has no roots mod {cfg.p}: no solutions exist for n >= 1 at all"
        )
    return [hensel_lift(cfg.f, cfg.p, r, depth + 1) for r in roots]


def combined_lower_bound(cfg: CaseConfig, depth: int) -> int:
    """min over lifted roots of the digit-scan bound, scanning indices 1..depth."""
    return min(digit_scan_bound(r, cfg.d) for r in scan_case(cfg, depth))


def heuristic_expected_solutions(p: int, d: int) -> float:
    """Expected number of n whose digit window is clear by chance: 1/(p^(1-1/d)-1).

    Diagnostic only; nothing downstream consumes it.
    """
    return 1.0 / (p ** (1.0 - 1.0 / d) - 1.0)
