"""Field arithmetic, case data integrity, and the exact verification layer."""

import json
import random
from fractions import Fraction

import pytest

from cyclobound.numberfield import (
    FieldElement,
    case_to_dict,
    charpoly,
    enumerate_exponent_cases,
    get_case,
    list_case_ids,
    load_case_config,
    nf_add,
    nf_inverse,
    nf_mul,
    nf_neg,
    nf_norm,
    nf_pow,
    verify_case_data,
    _config_from_dict,
    _envelope_certificate,
)
from cyclobound.polyarith import IntPoly, cyclotomic


def random_element(rng: random.Random, d: int, span: int = 5) -> FieldElement:
    coeffs = [rng.randint(-span, span) for _ in range(d)]
    if not any(coeffs):
        coeffs[0] = 1
    return FieldElement(IntPoly(*coeffs), rng.randint(1, 4))


class TestFieldElement:
    def test_normalization(self):
        f = get_case("10-271").f
        a = FieldElement(IntPoly(2, 4), 6, f)
        assert a.num == IntPoly(1, 2) and a.den == 3
        b = FieldElement(IntPoly(1), -2)
        assert b.num == IntPoly(-1) and b.den == 2

    def test_reduction_modulo_f(self):
        f = get_case("10-271").f
        # x^4 = x^3 - x^2 + x - 2 in this field
        a = FieldElement(IntPoly(0, 0, 0, 0, 1), 1, f)
        assert a.num == IntPoly(-2, 1, -1, 1)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            FieldElement(IntPoly(1), 0)

    def test_inverse_roundtrip(self):
        rng = random.Random(404)
        for cid in ("15-41", "10-271"):
            f = get_case(cid).f
            for _ in range(25):
                a = random_element(rng, f.degree())
                assert nf_mul(a, nf_inverse(a, f), f) == FieldElement(1)

    def test_inverse_of_zero_rejected(self):
        f = get_case("10-271").f
        with pytest.raises(ZeroDivisionError):
            nf_inverse(FieldElement(0), f)

    def test_pow_negative_exponent(self):
        f = get_case("10-271").f
        a = FieldElement(IntPoly(1, 1))
        assert nf_mul(nf_pow(a, -3, f), nf_pow(a, 3, f), f) == FieldElement(1)


class TestNorm:
    def test_multiplicative_on_random_elements(self):
        # exact identity N(ab) = N(a) N(b), checked on 120 random pairs
        rng = random.Random(5501)
        for cid in ("15-41", "10-271"):
            f = get_case(cid).f
            for _ in range(60):
                a = random_element(rng, f.degree())
                b = random_element(rng, f.degree())
                assert nf_norm(nf_mul(a, b, f), f) == nf_norm(a, f) * nf_norm(b, f)

    def test_rational_scalars(self):
        f = get_case("15-41").f
        assert nf_norm(FieldElement(3), f) == 3**8
        assert nf_norm(FieldElement(IntPoly(1), 2), f) == Fraction(1, 256)
        assert nf_norm(FieldElement(0), f) == 0

    def test_agrees_with_embedding_product(self, chains):
        # |N(a)| = prod over conjugate pairs of |a|^2; the certified
        # enclosures must contain the exact rational norm
        rng = random.Random(5739)
        for ch in chains.values():
            half = ch.cfg.d // 2
            for _ in range(55):
                a = random_element(rng, ch.cfg.d, span=3)
                box = ch.conj.embed_abs(a, 0) ** 2
                for i in range(1, half):
                    box = box * ch.conj.embed_abs(a, i) ** 2
                norm = nf_norm(a, ch.cfg.f)
                assert norm > 0
                assert box.lo <= norm <= box.hi

    def test_norms_of_case_generators(self, chains):
        for ch in chains.values():
            cfg = ch.cfg
            for u in cfg.units:
                assert abs(nf_norm(u, cfg.f)) == 1
            for g, c in zip(cfg.gammas, cfg.gamma_norm_exponents):
                assert abs(nf_norm(g, cfg.f)) == Fraction(cfg.p) ** c
            for dd in cfg.deltas:
                assert abs(nf_norm(dd, cfg.f)) == 2


class TestCharpoly:
    def test_generator_recovers_defining_polynomial(self):
        for cid in ("15-41", "10-271"):
            f = get_case(cid).f
            assert charpoly(FieldElement(IntPoly(0, 1)), f) == f

    def test_rational_element(self):
        f = get_case("10-271").f
        assert charpoly(FieldElement(3), f) == IntPoly(-3, 1) ** 4

    def test_cayley_hamilton(self):
        rng = random.Random(6607)
        for cid in ("15-41", "10-271"):
            f = get_case(cid).f
            for _ in range(10):
                a = random_element(rng, f.degree())
                cp = charpoly(a, f)
                acc = FieldElement(0)
                power = FieldElement(1)
                for c in cp.coeffs:
                    acc = nf_add(acc, nf_mul(FieldElement(c), power, f))
                    power = nf_mul(power, a, f)
                assert acc.is_zero()

    def test_constant_term_is_norm_for_integral_elements(self):
        # even degree makes the sign drop out
        rng = random.Random(6881)
        for cid in ("15-41", "10-271"):
            f = get_case(cid).f
            for _ in range(20):
                a = FieldElement(IntPoly(*[rng.randint(-4, 4) for _ in range(f.degree())]))
                if a.is_zero():
                    continue
                assert charpoly(a, f)[0] == nf_norm(a, f)


class TestCaseData:
    def test_builtin_ids(self):
        assert list_case_ids() == ["15-41", "15-5581", "10-271"]
        with pytest.raises(KeyError):
            get_case("15-7")

    def test_defining_polynomials(self):
        assert get_case("15-41").f == cyclotomic(15) + IntPoly(1)
        assert get_case("15-5581").f == cyclotomic(15) + IntPoly(1)
        assert get_case("10-271").f == cyclotomic(10) + IntPoly(1)

    def test_verification_passes_for_all_builtins(self):
        for cid in list_case_ids():
            report = verify_case_data(get_case(cid))
            assert report.passed, [c for c in report.checks if not c.ok]
            assert all(c.ok for c in report.checks)
            assert len(report.trusted) == 2

    def test_verification_report_shape(self):
        report = verify_case_data(get_case("15-41"))
        names = [c.name for c in report.checks]
        assert names[0] == "defining polynomial"
        assert "decomposition of 2 multiplies out" in names
        assert any(n.startswith("growth envelope") for n in names)
        d = report.to_dict()
        assert d["passed"] is True and d["case_id"] == "15-41"

    def test_roundtrip_through_json(self, tmp_path):
        for cid in list_case_ids():
            cfg = get_case(cid)
            path = tmp_path / f"{cid}.json"
            path.write_text(json.dumps(case_to_dict(cfg)))
            loaded = load_case_config(str(path))
            assert loaded == cfg
            assert verify_case_data(loaded).passed

    def test_missing_field_rejected(self, tmp_path):
        raw = case_to_dict(get_case("10-271"))
        del raw["deltas"]
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(raw))
        with pytest.raises(ValueError, match="deltas"):
            load_case_config(str(path))

    def test_tampered_sign_fails_verification(self):
        raw = case_to_dict(get_case("15-41"))
        raw["two_decomposition"]["sign"] = -raw["two_decomposition"]["sign"]
        report = verify_case_data(_config_from_dict("15-41", raw))
        assert not report.passed
        bad = {c.name for c in report.checks if not c.ok}
        assert bad == {"decomposition of 2 multiplies out"}

    def test_tampered_unit_fails_verification(self):
        raw = case_to_dict(get_case("10-271"))
        raw["units"][0] = [0, 3]
        report = verify_case_data(_config_from_dict("10-271", raw))
        assert any(
            c.name == "unit 1 has norm +-1" and not c.ok for c in report.checks
        )

    def test_exponent_case_counts(self):
        assert len(enumerate_exponent_cases(get_case("15-41"))) == 2
        assert len(enumerate_exponent_cases(get_case("15-5581"))) == 4
        assert len(enumerate_exponent_cases(get_case("10-271"))) == 2

    def test_exponent_cases_only_use_norm_p_gammas(self):
        cfg = get_case("10-271")
        for _, g in enumerate_exponent_cases(cfg):
            assert abs(nf_norm(g, cfg.f)) == cfg.p


class TestEnvelope:
    def test_case_polynomials_certify(self):
        for cid in list_case_ids():
            assert _envelope_certificate(get_case(cid).f)

    def test_positive_control(self):
        assert _envelope_certificate(IntPoly(1, 0, 1))  # x^2 + 1

    def test_negative_control(self):
        # x^2 - 9 vanishes at x = 3, inside the claimed envelope
        assert not _envelope_certificate(IntPoly(-9, 0, 1))
