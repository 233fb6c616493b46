"""Follow one case from rounded constants to the reduced exponent ceiling.

Stage one turns certified root enclosures into a table of constants, each
rounded outward so the printed value is still a true bound.  Stage two
feeds their heights into the linear-forms inequality and bisects for the
least exponent it permits.  Stage three reduces that astronomical ceiling
with lattice basis reduction, branch by branch.
"""

from cyclobound import (
    BoundInput,
    ConjugateData,
    absolute_bound,
    combined_lower_bound,
    compute_constants,
    get_case,
    matveev_c9,
    reduction_loop,
)

cfg = get_case("15-41")
n_lower = combined_lower_bound(cfg, cfg.default_scan_depth)
print(f"case {cfg.case_id}: digit scan gives n >= {n_lower}")

conj = ConjugateData(cfg)
cc = compute_constants(cfg, conj, n_lower)

print("\nconstants (outward-rounded, 4 significant digits):")
for k in range(1, 9):
    print(f"  c{k} = {float(getattr(cc, f'c{k}')):.4g}")
print(f"  regulator        = {float(cc.regulator):.5g}")
print(f"  unit minor bound = {float(cc.unit_minor_bound):.4g}")
print(f"  height bounds A  = {[float(a) for a in cc.a_values]}")

inp = BoundInput.from_constants(cc)
c9 = matveev_c9(inp)
n_abs = absolute_bound(inp)
print(f"\nlinear-forms coefficient c9 = {float(c9):.4g}")
print(f"absolute ceiling: n <= {n_abs}  (~{float(n_abs):.3e})")

report = reduction_loop(cfg, conj, cc, n_abs, stop_below=n_lower)
print("\nlattice reduction:")
for rnd in report.rounds:
    print(f"  round at scale {rnd.scale:.0e}, start n <= {rnd.start_bound}")
    for att in rnd.attempts:
        tag = f"gamma {att.gamma_index + 1}, delta {att.delta_index + 1}"
        if att.ok:
            print(f"    {tag}: c >= {float(att.c_lower):.4f}, "
                  f"new bound n <= {att.new_bound}")
        else:
            print(f"    {tag}: {att.reason}")
    print(f"  -> n <= {rnd.bound}")

print(f"\nfinal ceiling n <= {report.final_bound} "
      f"against the floor n >= {n_lower}: the range is empty")
