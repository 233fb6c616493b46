"""Check the algebraic data behind a case before trusting any bound.

Each case file carries units, elements gamma of norm +-p^c, elements
delta of norm +-2, and a factorization of 2.  The proof only needs these
to satisfy their norm equations, which is checked here by exact resultant
arithmetic; where the elements came from does not matter.
"""

from cyclobound import (
    discriminant,
    enumerate_exponent_cases,
    get_case,
    list_case_ids,
    nf_norm,
    verify_case_data,
)

for cid in list_case_ids():
    cfg = get_case(cid)
    print(f"case {cid}: degree {cfg.d}, disc(f) = {discriminant(cfg.f)}")
    report = verify_case_data(cfg)
    for check in report.checks:
        mark = "ok" if check.ok else "FAIL"
        print(f"  [{mark:4s}] {check.name}")
    for name in report.trusted:
        print(f"  [ext ] {name}")
    print()

# the norms themselves, for one case
cfg = get_case("15-41")
print(f"norms in the degree-{cfg.d} field of case {cfg.case_id}:")
for i, u in enumerate(cfg.units, 1):
    print(f"  unit {i}:  N = {nf_norm(u, cfg.f)}")
for g, c in zip(cfg.gammas, cfg.gamma_norm_exponents):
    print(f"  gamma:   N = {nf_norm(g, cfg.f)} = {cfg.p}^{c}")
for d in cfg.deltas:
    print(f"  delta:   N = {nf_norm(d, cfg.f)}")

# taking norms in f(x) = 2*p^n forces x - theta into finitely many shapes
shapes = enumerate_exponent_cases(cfg)
print(f"\n{len(shapes)} (gamma, delta) branches cover every solution shape")
