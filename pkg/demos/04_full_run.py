"""Run the complete pipeline on every built-in case and print the verdicts.

Equivalent to `cyclobound all`.
"""

import time

from cyclobound import emit_report, list_case_ids, solve_case

t0 = time.perf_counter()
for cid in list_case_ids():
    report = solve_case(cid)
    print(emit_report(report))
    print()

print(f"total {time.perf_counter() - t0:.2f} s")
