from __future__ import annotations

from fractions import Fraction

import pytest

from mnconvex.criteria import (
    BESSEL_CRITERIA,
    HYPERGEOMETRIC_CRITERIA,
    SERIES_CRITERIA,
    Certificate,
    Hypothesis,
    Verdict,
    certify,
    certify_bessel,
    certify_bessel_part,
    certify_hypergeometric,
    certify_mf,
    certify_pfq,
    certify_series,
    with_refutation,
)
from mnconvex.errors import InvalidParameters, NonPositiveCoefficient
from mnconvex.numcheck import verify_claim
from mnconvex.powerseries import exponential, from_coefficients, geometric
from mnconvex.specialfn import (
    BesselParams,
    GeneralizedHypergeometricParams,
    HypergeometricParams,
    bessel_series,
    gauss_2f1_series,
    generalized_pfq_series,
)

F = Fraction
HALF = F(1, 2)
COSH = BesselParams(1, -1, -HALF)
SINHC = BesselParams(1, -1, HALF)
HYP = {
    "elliptic": HypergeometricParams(HALF, HALF, 1),
    "log": HypergeometricParams(1, 1, 2),
    "fnn3": HypergeometricParams(3, 3, 1),
    "closed65": HypergeometricParams(F(1, 4), F(3, 4), F(3, 2)),
    "mixed": HypergeometricParams(1, 2, 3),
    "zero-balanced": HypergeometricParams(F(1, 3), F(2, 3), 1),
}


def corpus():
    out = {name: gauss_2f1_series(p) for name, p in HYP.items()}
    out["exp"] = exponential()
    out["geometric"] = geometric(1)
    out["geometric2"] = geometric(2)
    out["cosh"] = bessel_series(COSH)
    out["sinhc"] = bessel_series(SINHC)
    out["0F1(;1)"] = generalized_pfq_series(GeneralizedHypergeometricParams((), (1,)))
    return out


CORPUS = corpus()


class TestHypergeometric:
    def test_elliptic_log_convex(self):
        c = certify_hypergeometric(HYP["elliptic"], "log_convex")
        assert c.verdict is Verdict.PROVEN and c.claims == ("AG-convex",)
        assert c.horizon is None

    def test_fnn3_not_covered(self):
        c = certify_hypergeometric(HYP["fnn3"], "log_convex")
        assert c.verdict is Verdict.INAPPLICABLE
        assert any("9/7" in h.condition for h in c.hypotheses)
        assert not verify_claim(CORPUS["fnn3"], "AG-convex").passed

    @pytest.mark.parametrize("a,b", [(HALF, HALF), (F(1, 3), 1), (1, 1), (F(1, 10), F(9, 10))])
    def test_zero_balanced_reciprocal(self, a, b):
        c = certify_hypergeometric(HypergeometricParams(a, b, F(a) + F(b)), "reciprocal_concave")
        assert c.verdict is Verdict.PROVEN

    @pytest.mark.parametrize("a,b", [(2, 2), (1, 1), (F(1, 2), 3), (F(7, 3), F(5, 4))])
    def test_strict_boundary(self, a, b):
        a, b = F(a), F(b)
        c = a * b / (a + b + 1)
        assert certify_hypergeometric(HypergeometricParams(a, b, c), "log_convex").verdict is Verdict.INAPPLICABLE
        assert certify_hypergeometric(HypergeometricParams(a, b, c * F(1001, 1000)), "log_convex").granted

    def test_other_conditions(self):
        assert certify_hypergeometric(HypergeometricParams(1, 2, 3), "log_concave_transformed").granted
        assert not certify_hypergeometric(HypergeometricParams(1, 3, 2), "log_concave_transformed").granted
        assert certify_hypergeometric(HypergeometricParams(1, 1, 2), "convex_transformed").granted
        assert not certify_hypergeometric(HypergeometricParams(1, 1, 3), "convex_transformed").granted

    def test_invalid(self):
        with pytest.raises(InvalidParameters):
            certify_hypergeometric(HypergeometricParams(0, 1, 1), "log_convex")
        with pytest.raises(ValueError):
            certify_hypergeometric(HYP["elliptic"], "nonsense")


class TestSeries:
    def test_cosh_derivative_ratio_decreasing(self):
        c = certify_series(CORPUS["cosh"], "derivative_ratio", horizon=200)
        assert c.verdict is Verdict.PREFIX_CHECKED and c.claims == ("AG-concave",)
        assert c.horizon == 200

    def test_geometric_shifted_ratio_constant(self):
        c = certify_series(geometric(1), "shifted_ratio", horizon=100)
        assert set(c.claims) == {"shifted-log-convex", "shifted-log-concave"}
        assert "Constant" in " ".join(h.condition for h in c.hypotheses)

    @pytest.mark.parametrize("which", ["shifted_ratio", "weighted_index", "reciprocal"])
    def test_needs_finite_radius(self, which):
        c = certify_series(exponential(), which)
        assert c.verdict is Verdict.INAPPLICABLE and "finite radius" in c.reason

    def test_positive(self):
        c = certify_series(CORPUS["elliptic"], "positive")
        assert c.verdict is Verdict.PROVEN and "AA-convex" in c.claims and "GG-convex" in c.claims
        user = from_coefficients([1, 2, 3, 4], name="user")
        c = certify_series(user, "positive")
        assert c.verdict is Verdict.PREFIX_CHECKED and c.horizon == 3
        assert not certify_series(user, "positive", sense="concave").granted

    def test_non_positive_coefficient(self):
        with pytest.raises(NonPositiveCoefficient) as e:
            certify_series(from_coefficients([1, 2, 0, 1], name="gap"), "derivative_ratio")
        assert e.value.index == 2

    def test_weighted_index_starts_at_one(self):
        c = certify_series(geometric(1), "weighted_index", horizon=50)
        assert c.start_index == 1 and c.claims == ("shifted-convex",)

    def test_square_index_ratio_notes_ambiguity(self):
        c = certify_series(CORPUS["exp"], "square_index_ratio", horizon=100)
        assert c.notes and "HH" in c.notes[0]

    @pytest.mark.parametrize("a,b,c", [(HALF, HALF, 1), (1, 1, 2), (F(1, 3), F(2, 3), 1), (1, 2, 3), (2, 2, 1)])
    def test_reciprocal_matches_closed_form(self, a, b, c):
        # {n! a_n/(1/2,n)} decreasing iff 2n(a+b-c-1/2) + (2ab-c) <= 0 for every n
        a, b, c = F(a), F(b), F(c)
        horizon = 300
        second = all(2 * n * (a + b - c - HALF) + (2 * a * b - c) <= 0 for n in range(horizon))
        cert = certify_series(gauss_2f1_series(HypergeometricParams(a, b, c)), "reciprocal", horizon=horizon)
        assert cert.hypotheses[2].held == second

    def test_unknown(self):
        with pytest.raises(ValueError):
            certify_series(geometric(1), "part9")


class TestMf:
    def test_elliptic(self):
        c = certify_mf(CORPUS["elliptic"], horizon=200)
        assert c.granted and c.claims == ("mf-chain",)

    def test_entire_series(self):
        assert certify_mf(exponential()).verdict is Verdict.INAPPLICABLE

    def test_geometric_equality_case(self):
        c = certify_mf(geometric(1), horizon=100)
        assert c.granted and c.notes


class TestBessel:
    def test_thresholds(self):
        assert certify_bessel_part(COSH, "transformed_concave", R=F(599, 100)).granted
        assert not certify_bessel_part(COSH, "transformed_concave", R=6).granted
        assert certify_bessel_part(SINHC, "transformed_concave", R=F(999, 100)).granted
        assert not certify_bessel_part(SINHC, "transformed_concave", R=10).granted

    def test_unconditional_parts(self):
        certs = certify_bessel(BesselParams(2, -3, F(1, 4)))
        assert len(certs) == len(BESSEL_CRITERIA)
        assert all(c.verdict is Verdict.PROVEN for c in certs[:3])
        assert certs[3].verdict is Verdict.INAPPLICABLE

    def test_preconditions(self):
        with pytest.raises(InvalidParameters):
            certify_bessel(BesselParams(1, 1, 0))


class TestPfq:
    @pytest.mark.parametrize(
        "num,den,claims",
        [
            ((), (), {"AG-convex", "AG-concave"}),
            ((HALF,), (1,), {"AG-convex"}),
            ((), (1, 2), {"AG-concave"}),
            ((2,), (1,), {"AG-concave"}),
            ((1, 1), (2,), {"AG-convex"}),
            ((2,), (), {"AG-convex"}),
            ((3,), (1, 2), {"AG-concave"}),
            ((3, 2), (1, 2), {"AG-concave"}),
        ],
    )
    def test_cases(self, num, den, claims):
        c = certify_pfq(GeneralizedHypergeometricParams(num, den))
        assert c.verdict is Verdict.PROVEN and set(c.claims) == claims

    def test_sorting_finds_pairing(self):
        # (3, 1) vs (2, 4): unsorted pairing is mixed, sorted (1,3) <= (2,4)
        c = certify_pfq(GeneralizedHypergeometricParams((3, 1), (2, 4)))
        assert c.granted and c.claims == ("AG-convex",)

    def test_mixed(self):
        c = certify_pfq(GeneralizedHypergeometricParams((1, 5), (2, 3)))
        assert c.verdict is Verdict.INAPPLICABLE and "mixed" in c.reason

    def test_divergent(self):
        c = certify_pfq(GeneralizedHypergeometricParams((1, 1, 1), ()))
        assert c.verdict is Verdict.INAPPLICABLE


class TestCertificate:
    def test_refuted_requires_witness(self):
        with pytest.raises(ValueError):
            Certificate("f", "c", Verdict.REFUTED)

    def test_proven_has_no_horizon(self):
        with pytest.raises(ValueError):
            Certificate("f", "c", Verdict.PROVEN, horizon=10)

    def test_json_shape(self):
        d = certify_hypergeometric(HYP["elliptic"], "log_convex").as_dict()
        for key in ("subject", "criterion", "verdict", "hypotheses", "horizon", "start_index"):
            assert key in d
        assert d["verdict"] == "ProvenByCriterion"
        assert d["hypotheses"][0]["held"] is True

    def test_exit_codes(self):
        assert certify_hypergeometric(HYP["elliptic"], "log_convex").exit_code == 0
        assert certify_hypergeometric(HYP["fnn3"], "log_convex").exit_code == 1

    def test_refutation_upgrade(self):
        base = certify_hypergeometric(HYP["fnn3"], "log_convex")
        w = verify_claim(CORPUS["fnn3"], "AG-convex").witness
        c = with_refutation(base, "AG-convex", w)
        assert c.verdict is Verdict.REFUTED and c.exit_code == 4 and c.witness is w
        granted = certify_hypergeometric(HYP["elliptic"], "log_convex")
        with pytest.raises(ValueError):
            with_refutation(granted, "AG-convex", w)

    def test_hypothesis_dict(self):
        assert Hypothesis("x > 0", True).as_dict() == {"condition": "x > 0", "held": True}


class TestDispatch:
    def test_direct(self):
        c = certify(CORPUS["cosh"], "AG", "concave", horizon=100)
        assert c.granted

    def test_via_ordering(self):
        # AH-convex implies AG-convex for an increasing function
        c = certify(CORPUS["elliptic"], "AG", "convex", horizon=100)
        assert c.granted
        c = certify(CORPUS["elliptic"], "GA", "convex", horizon=100)
        assert c.granted and "GA-convex" in c.claims

    def test_nothing_applies(self):
        c = certify(CORPUS["exp"], "HH", "concave", horizon=50)
        assert c.verdict is Verdict.INAPPLICABLE


# --- soundness against numeric verification ---------------------------------


def _granted_claims():
    for name, s in CORPUS.items():
        for which in SERIES_CRITERIA:
            c = certify_series(s, which, horizon=150)
            for claim in c.claims:
                yield pytest.param(s, claim, None, id=f"{name}-{which}-{claim}")
    for name, p in HYP.items():
        for which in HYPERGEOMETRIC_CRITERIA:
            c = certify_hypergeometric(p, which)
            for claim in c.claims:
                yield pytest.param(CORPUS[name], claim, None, id=f"{name}-{which}-{claim}")
    for name, p, R in (("cosh", COSH, 5.5), ("sinhc", SINHC, 9.5)):
        for c in certify_bessel(p, R):
            for claim in c.claims:
                yield pytest.param(CORPUS[name], claim, R, id=f"{name}-bessel-{claim}")


@pytest.mark.parametrize("s,claim,R", list(_granted_claims()))
def test_granted_claims_hold_numerically(s, claim, R):
    r = verify_claim(s, claim, R=R)
    assert r.passed, r.witness


AH_CERTIFIED = [n for n, s in CORPUS.items() if certify(s, "AH", "convex", horizon=150).granted]


def test_ah_certified_corpus_is_nonempty():
    assert {"elliptic", "log", "geometric"} <= set(AH_CERTIFIED)


@pytest.mark.parametrize("name", AH_CERTIFIED)
def test_ah_convex_implies_ag_and_aa(name):
    s = CORPUS[name]
    assert verify_claim(s, "AG-convex").passed
    assert verify_claim(s, "AA-convex").passed
