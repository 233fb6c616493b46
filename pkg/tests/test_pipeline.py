"""End-to-end solve runs, the direct search, and the command line."""

import json

import pytest

from cyclobound.cli import main
from cyclobound.numberfield import _config_from_dict, case_to_dict, get_case
from cyclobound.pipeline import (
    SEARCH_FLOOR,
    _iroot,
    direct_search,
    emit_report,
    solve_case,
)
from cyclobound.polyarith import IntPoly, poly_eval


def brute_force_search(f, p, n_max, x_span=2000):
    out = []
    for n in range(1, n_max + 1):
        target = 2 * p**n
        for x in range(-x_span, x_span + 1):
            if poly_eval(f, x) == target:
                out.append((n, x))
    return sorted(out)


class TestIRoot:
    def test_exact_powers(self):
        assert _iroot(27, 3) == 3
        assert _iroot(26, 3) == 2
        assert _iroot(28, 3) == 3
        assert _iroot(0, 5) == 0
        assert _iroot(1, 7) == 1

    def test_floor_property_on_random_inputs(self):
        import random

        rng = random.Random(41011)
        for _ in range(200):
            d = rng.randint(2, 9)
            t = rng.randint(0, 10**30)
            r = _iroot(t, d)
            assert r**d <= t < (r + 1) ** d

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            _iroot(-1, 2)


class TestDirectSearch:
    def test_toy_case_with_solutions(self):
        # x^2 + x + 2 = 2*7^1 at x = 3 and x = -4
        toy = IntPoly(2, 1, 1)
        got = direct_search(toy, 7, 5)
        assert got == [(1, -4), (1, 3)]
        assert got == brute_force_search(toy, 7, 5)

    def test_toy_case_without_solutions(self):
        toy = IntPoly(2, -1, 1)
        assert direct_search(toy, 5, 6) == brute_force_search(toy, 5, 6)
        assert direct_search(toy, 5, 6) == []

    def test_builtin_cases_empty_to_floor(self):
        for cid in ("15-41", "15-5581", "10-271"):
            cfg = get_case(cid)
            assert direct_search(cfg.f, cfg.p, SEARCH_FLOOR) == []

    def test_matches_brute_force_on_builtin_prefix(self):
        cfg = get_case("10-271")
        assert direct_search(cfg.f, cfg.p, 3) == brute_force_search(
            cfg.f, cfg.p, 3
        )


class TestSolveCase:
    def test_all_cases_prove_no_solutions(self, chains):
        for cid, ch in chains.items():
            rep = solve_case(cid)
            assert rep.verdict == "no_solutions"
            assert rep.ok
            assert rep.verification is not None and rep.verification.passed
            assert rep.n_lower == ch.n_lower
            assert rep.abs_bound == ch.n_abs
            assert rep.reduced_bound < rep.n_lower
            assert rep.search_max == SEARCH_FLOOR
            assert rep.solutions == []
            assert f"n >= {rep.n_lower}" in rep.reason
            assert set(rep.timings) == {
                "verify", "scan", "constants", "absolute_bound",
                "reduction", "search",
            }

    def test_report_is_deterministic(self):
        first = solve_case("10-271").to_dict()
        second = solve_case("10-271").to_dict()
        del first["timings"], second["timings"]
        assert first == second

    def test_report_serializes(self):
        rep = solve_case("10-271")
        blob = emit_report(rep, as_json=True)
        parsed = json.loads(blob)
        assert parsed["verdict"] == "no_solutions"
        assert parsed["reduced_bound"] == 38
        assert parsed["constants"]["c7"] == 0.497
        text = emit_report(rep)
        assert "case 10-271: no_solutions" in text
        assert "reduced bound:    n <= 38" in text

    def test_short_search_is_inconclusive(self):
        rep = solve_case("10-271", search_max=10)
        assert rep.verdict == "inconclusive"
        assert "direct search stopped" in rep.reason
        assert not rep.ok

    def test_failed_verification_returns_early(self):
        raw = case_to_dict(get_case("10-271"))
        raw["two_decomposition"]["sign"] = -raw["two_decomposition"]["sign"]
        rep = solve_case(_config_from_dict("10-271", raw))
        assert rep.verdict == "inconclusive"
        assert rep.reason == "case data failed verification"
        assert set(rep.timings) == {"verify"}

    def test_small_scale_is_inconclusive(self):
        rep = solve_case("10-271", scale=100)
        assert rep.verdict == "inconclusive"
        assert "no certified bound" in rep.reason


class TestCLI:
    def test_verify_all_builtins(self, capsys):
        assert main(["verify"]) == 0
        out = capsys.readouterr().out
        assert "case 15-41: ok" in out
        assert "[ok  ]" in out
        assert "FAIL" not in out
        assert "[ext ]" in out

    def test_scan_text(self, capsys):
        assert main(["scan", "--case", "15-41"]) == 0
        out = capsys.readouterr().out
        assert "n >= 415" in out
        assert "digit 53 = 40" in out

    def test_scan_json_all(self, capsys):
        assert main(["scan", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert [c["lower_bound"] for c in data["cases"]] == [415, 4015, 239]

    def test_scan_depth_override(self, capsys):
        assert main(["scan", "--case", "15-5581", "--depth", "30"]) == 0
        out = capsys.readouterr().out
        assert "n >= 239" in out  # 8*(31-1) - 1 with a clean 30-digit window

    def test_bound_json(self, capsys):
        assert main(["bound", "--case", "10-271", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        (entry,) = data["cases"]
        assert entry["absolute_bound"] == 39684521926569444032
        assert entry["c9"] == 1.16e18

    def test_reduce_text(self, capsys):
        assert main(["reduce", "--case", "10-271"]) == 0
        out = capsys.readouterr().out
        assert "-> 38" in out
        assert "rounding slack swallows the distance margin" in out
        assert "n <= 37" in out

    def test_all_json(self, capsys):
        assert main(["all", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["cases"]) == 3
        assert all(c["verdict"] == "no_solutions" for c in data["cases"])

    def test_unknown_case_is_usage_error(self, capsys):
        assert main(["scan", "--case", "nope"]) == 2
        assert "error" in capsys.readouterr().err

    def test_config_file_roundtrip(self, tmp_path, capsys):
        path = tmp_path / "case.json"
        path.write_text(json.dumps(case_to_dict(get_case("10-271"))))
        assert main(["scan", "--config", str(path)]) == 0
        assert "n >= 239" in capsys.readouterr().out

    def test_tampered_config_fails_verify(self, tmp_path, capsys):
        raw = case_to_dict(get_case("10-271"))
        raw["two_decomposition"]["sign"] = -raw["two_decomposition"]["sign"]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(raw))
        assert main(["verify", "--config", str(path)]) == 1
        assert "[FAIL]" in capsys.readouterr().out

    def test_unreadable_config_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{")
        assert main(["verify", "--config", str(path)]) == 2
        assert main(["verify", "--config", str(tmp_path / "missing.json")]) == 2

    def test_bad_scale_rejected_by_parser(self):
        with pytest.raises(SystemExit) as exc:
            main(["reduce", "--case", "10-271", "--K", "-5"])
        assert exc.value.code == 2

    def test_solve_exit_one_when_inconclusive(self, capsys):
        assert main(["solve", "--case", "10-271", "--search-max", "10"]) == 1
        assert "inconclusive" in capsys.readouterr().out
