"""Command line front end.

Subcommands mirror the pipeline stages: verify, scan, bound, reduce run a
single stage per case, solve runs the whole chain, all is solve over every
built-in case.  Exit status 0 means every requested check or proof
succeeded, 1 means at least one did not, 2 means the invocation or config
was unusable.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .matveev import BoundInput, absolute_bound, inequality_coefficients, matveev_c9
from .numberfield import (
    get_case,
    list_case_ids,
    load_case_config,
    verify_case_data,
)
from .padic import (
    combined_lower_bound,
    digit_scan_bound,
    heuristic_expected_solutions,
    scan_case,
)
from .pipeline import emit_report, solve_case
from .realalg import DEFAULT_PREC, ConjugateData, compute_constants
from .reduction import reduction_loop


def _parse_scale(text: str) -> int:
    value = Fraction(text)
    if value.denominator != 1 or value <= 0:
        raise argparse.ArgumentTypeError("scale must be a positive integer")
    return value.numerator


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclobound",
        description="Certified non-existence proofs for f(x) = 2*p^n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, depth=False, prec=False, scale=False, search=False):
        p.add_argument(
            "--case",
            action="append",
            help="case id (repeatable; default: all built-in cases)",
        )
        p.add_argument(
            "--config",
            action="append",
            help="path to a JSON case file (repeatable)",
        )
        p.add_argument("--json", action="store_true", help="emit JSON")
        if depth:
            p.add_argument("--depth", type=int, help="p-adic scan depth")
        if prec:
            p.add_argument(
                "--precision-bits",
                type=int,
                default=DEFAULT_PREC,
                help=f"interval precision (default {DEFAULT_PREC})",
            )
        if scale:
            p.add_argument(
                "--K",
                dest="scale",
                type=_parse_scale,
                help="first-round lattice scale (e.g. 1e39)",
            )
        if search:
            p.add_argument(
                "--search-max",
                type=int,
                help="direct-search ceiling (default: max(certified reduced bound, 500))",
            )

    common(sub.add_parser("verify", help="check the case data"))
    common(sub.add_parser("scan", help="p-adic digit scan"), depth=True)
    common(
        sub.add_parser("bound", help="constant chain and absolute bound"),
        depth=True,
        prec=True,
    )
    common(
        sub.add_parser("reduce", help="lattice reduction of the bound"),
        depth=True,
        prec=True,
        scale=True,
    )
    common(
        sub.add_parser("solve", help="full proof chain"),
        depth=True,
        prec=True,
        scale=True,
        search=True,
    )
    common(
        sub.add_parser("all", help="solve every case"),
        depth=True,
        prec=True,
        scale=True,
        search=True,
    )
    return parser


def _collect_cases(args) -> list:
    cases = []
    for cid in args.case or ([] if args.config else list_case_ids()):
        cases.append(get_case(cid))
    for path in args.config or []:
        cases.append(load_case_config(path))
    return cases


def _emit(payload: list[dict], as_json: bool) -> None:
    if as_json:
        print(json.dumps({"cases": payload}, indent=2, sort_keys=True))


def _cmd_verify(args) -> int:
    failed = False
    payload = []
    for cfg in _collect_cases(args):
        rep = verify_case_data(cfg)
        payload.append(rep.to_dict())
        if not args.json:
            print(f"case {cfg.case_id}: {'ok' if rep.passed else 'FAILED'}")
            for chk in rep.checks:
                mark = "ok" if chk.ok else "FAIL"
                detail = f" ({chk.detail})" if chk.detail else ""
                print(f"  [{mark:4}] {chk.name}{detail}")
            for item in rep.trusted:
                print(f"  [ext ] {item}")
        failed = failed or not rep.passed
    _emit(payload, args.json)
    return 1 if failed else 0


def _cmd_scan(args) -> int:
    payload = []
    for cfg in _collect_cases(args):
        depth = args.depth if args.depth is not None else cfg.default_scan_depth
        roots = scan_case(cfg, depth)
        bound = combined_lower_bound(cfg, depth)
        entry = {
            "case_id": cfg.case_id,
            "depth": depth,
            "lower_bound": bound,
            "expected_chance_hits": heuristic_expected_solutions(cfg.p, cfg.d),
            "roots": [
                {
                    "r0": r.r0,
                    "first_extreme_index": r.first_extreme_index(),
                    "bound": digit_scan_bound(r, cfg.d),
                }
                for r in roots
            ],
        }
        payload.append(entry)
        if not args.json:
            print(f"case {cfg.case_id}: n >= {bound} (depth {depth})")
            for r in roots:
                k0 = r.first_extreme_index()
                where = f"digit {k0} = {r.digits[k0]}" if k0 else f"clean to {depth}"
                print(
                    f"  root {r.r0} mod {cfg.p}: {where}"
                    f" -> n >= {digit_scan_bound(r, cfg.d)}"
                )
            print(
                "  chance hits expected: "
                f"{entry['expected_chance_hits']:.3g}"
            )
    _emit(payload, args.json)
    return 0


def _constants_for(cfg, args):
    depth = args.depth if args.depth is not None else cfg.default_scan_depth
    n_lower = combined_lower_bound(cfg, depth)
    conj = ConjugateData(cfg, args.precision_bits)
    return conj, compute_constants(cfg, conj, n_lower), n_lower


def _cmd_bound(args) -> int:
    payload = []
    for cfg in _collect_cases(args):
        conj, cc, _ = _constants_for(cfg, args)
        inp = BoundInput.from_constants(cc)
        coeffs = inequality_coefficients(inp, args.precision_bits)
        bound = absolute_bound(inp, args.precision_bits)
        entry = cc.to_dict()
        entry["c9"] = float(coeffs["c9"])
        entry["absolute_bound"] = bound
        payload.append(entry)
        if not args.json:
            print(f"case {cfg.case_id}:")
            for key in ("c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"):
                print(f"  {key} = {float(getattr(cc, key))}")
            print(f"  heights: {[float(a) for a in cc.a_values]}")
            print(f"  c9 = {float(coeffs['c9']):.4g}")
            print(
                f"  {float(coeffs['lhs_slope'])}*n - {float(coeffs['lhs_shift'])}"
                f" > c9*(1 + log({float(coeffs['log_coeff_n'])}*n"
                f" + {float(coeffs['log_coeff_1'])}))"
            )
            print(f"  absolute bound: n < {bound:.6g}")
    _emit(payload, args.json)
    return 0


def _cmd_reduce(args) -> int:
    payload = []
    ok = True
    for cfg in _collect_cases(args):
        conj, cc, n_lower = _constants_for(cfg, args)
        start = absolute_bound(BoundInput.from_constants(cc), args.precision_bits)
        rep = reduction_loop(
            cfg, conj, cc, start, stop_below=n_lower, scale=args.scale
        )
        payload.append(rep.to_dict())
        ok = ok and rep.ok
        if not args.json:
            print(
                f"case {cfg.case_id}: {start:.6g} -> {rep.final_bound}"
                f" in {len(rep.rounds)} round(s)"
            )
            for rnd in rep.rounds:
                for att in rnd.attempts:
                    tag = (
                        f"gamma {att.gamma_index}, delta {att.delta_index},"
                        f" conjugates {list(att.choice)}, K = {att.K:.0e}"
                    )
                    if att.ok:
                        print(f"  {tag}: c >= {float(att.c_lower):.4g}"
                              f" -> n <= {att.new_bound}")
                    else:
                        print(f"  {tag}: {att.reason}")
    _emit(payload, args.json)
    return 0 if ok else 1


def _cmd_solve(args) -> int:
    payload = []
    ok = True
    for cfg in _collect_cases(args):
        rep = solve_case(
            cfg,
            depth=args.depth,
            precision_bits=args.precision_bits,
            scale=args.scale,
            search_max=args.search_max,
        )
        payload.append(rep.to_dict())
        ok = ok and rep.ok
        if not args.json:
            print(emit_report(rep))
    _emit(payload, args.json)
    return 0 if ok else 1


_HANDLERS = {
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "bound": _cmd_bound,
    "reduce": _cmd_reduce,
    "solve": _cmd_solve,
    "all": _cmd_solve,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (KeyError, ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
