"""Reproduction cases: published constants, counterexamples and sharpness runs.

Each case returns a list of :class:`Check` rows comparing an expected value
against the computed one.  ``source`` says where the expected value comes
from: ``reference`` for published constants, ``derived`` for values obtained
here by an independent route, ``exact`` for identities that must hold exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .criteria import (
    Verdict,
    certify_bessel_part,
    certify_hypergeometric,
    certify_mf,
    certify_pfq,
    with_refutation,
)
from .numcheck import (
    NAMED,
    ConvexityQuery,
    PAIRS,
    SENSES,
    elliptic_maximum,
    first_refuted,
    ratio_function_m,
    refute_log_convexity_f3,
    series_subject,
    sharpness_scan,
    verify_bessel_inequality,
    verify_claim,
    verify_conjugate_unimodal,
    verify_gencor,
    verify_hypergeometric_chain,
    verify_mf_chain,
    verify_mn,
)
from .powerseries import evaluate_many, derivative
from .specialfn import (
    BesselParams,
    GeneralizedHypergeometricParams,
    HypergeometricParams,
    contiguous_derivative,
    elliptic_k,
    elliptic_k_series,
    gauss_2f1_series,
    generalized_pfq_series,
    gn_logderiv,
    gn_prime,
    gn_prime_zero,
    hyp2f1,
    hyp2f1_series,
    legendre,
)

REFERENCE = "reference"
DERIVED = "derived"
EXACT = "exact"


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    computed: object
    passed: bool
    tolerance: float | None = None
    source: str = DERIVED

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "computed": self.computed,
            "tolerance": self.tolerance,
            "source": self.source,
            "passed": self.passed,
        }


def close(name, expected, computed, tol, source=DERIVED) -> Check:
    computed = float(computed)
    return Check(name, expected, computed, abs(computed - float(expected)) <= tol, tol, source)


def below(name, computed, tol, source=DERIVED) -> Check:
    """``computed`` is an error measure that must not exceed ``tol``."""
    computed = float(computed)
    return Check(name, f"<= {tol:g}", computed, computed <= tol, tol, source)


def same(name, expected, computed, source=EXACT) -> Check:
    return Check(name, expected, computed, expected == computed, None, source)


@dataclass(frozen=True)
class ReproCase:
    id: str
    description: str
    run: Callable[[], list]


def _max_rel(a, b) -> float:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return float(np.max(np.abs(a - b) / np.abs(b)))


# --- cases ------------------------------------------------------------------

ELLIPTIC_MAX = 0.859398
K_AT_HALF = 1.8540746773013719  # K(1/sqrt 2) = Gamma(1/4)^2 / (4 sqrt pi)


def case_elliptic_max() -> list:
    em = elliptic_maximum(2048)
    r = math.sqrt(0.5)
    return [
        close("max x^2 x'^2 K(x) K(x')", ELLIPTIC_MAX, em.maximum, 1e-5, REFERENCE),
        close("argmax", r, em.argmax, 1e-3),
        same("monotone up then down on the grid", True, em.unimodal, DERIVED),
        close("K(1/sqrt 2) by AGM", K_AT_HALF, elliptic_k(r), 1e-13),
        close("K(1/sqrt 2) by series", K_AT_HALF, elliptic_k_series(r), 1e-12),
        close("(K(1/sqrt 2)/2)^2", K_AT_HALF**2 / 4, em.maximum, 1e-5),
    ]


def case_legendre_counterexample() -> list:
    w = refute_log_convexity_f3()
    negative = [n for n in range(3, 11) if gn_prime_zero(n) < 0]
    return [
        same("g_3(0)", "9", str(gn_logderiv(3, Fraction(0))), REFERENCE),
        close("g_3(1/10)", 8.534, gn_logderiv(3, Fraction(1, 10)), 5e-4, REFERENCE),
        same("g_3(1/10) exact", "3610/423", str(gn_logderiv(3, Fraction(1, 10)))),
        same("g_3'(0)", "-9", str(gn_prime(3, Fraction(0)))),
        same("g_4'(0)", "-56", str(gn_prime(4, Fraction(0)))),
        same("g_n'(0) < 0 for n = 3..10", list(range(3, 11)), negative, REFERENCE),
        same("log-convexity witness gap < 0", True, w.gap < 0, DERIVED),
    ]


def case_closed_forms() -> list:
    x1 = np.linspace(0.0, 0.9, 181)[1:]
    s33 = hyp2f1_series(3, 3, 1)
    e1 = _max_rel(evaluate_many(s33, x1), (1 + 4 * x1 + x1 * x1) / (1 - x1) ** 5)
    x2 = np.linspace(0.0, 0.99, 199)[1:]
    s2 = hyp2f1_series(Fraction(1, 4), Fraction(3, 4), Fraction(3, 2))
    e2 = _max_rel(evaluate_many(s2, x2), np.sqrt(2 / (1 + np.sqrt(1 - x2))))
    x3 = np.linspace(-0.8, 0.45, 126)
    e3 = 0.0
    for n in range(2, 9):
        series = hyp2f1(n, n, 1, x3) * (1 - x3) ** n
        poly = np.array([float(legendre(n - 1)((1 + x) / (1 - x))) for x in x3])
        e3 = max(e3, _max_rel(series, poly))
    slopes = [legendre(n).derivative()(1) for n in range(21)]
    expected = [Fraction(n * (n + 1), 2) for n in range(21)]
    p = HypergeometricParams(Fraction(1, 2), Fraction(1, 3), Fraction(3, 2))
    xs = np.linspace(0.05, 0.9, 18)
    dF = evaluate_many(derivative(gauss_2f1_series(p)), xs)
    e4 = _max_rel([contiguous_derivative(p, x) for x in xs], xs * (1 - xs) * dF)
    return [
        below("F(3,3;1;x) vs (1+4x+x^2)/(1-x)^5 on (0,0.9]", e1, 1e-10),
        below("F(1/4,3/4;3/2;x) vs sqrt(2/(1+sqrt(1-x))) on (0,0.99]", e2, 1e-10),
        below("F(n,n;1;x)(1-x)^n vs P_(n-1)((1+x)/(1-x)), n=2..8", e3, 1e-9),
        same("P_n'(1) = n(n+1)/2 for n <= 20", [str(v) for v in expected], [str(v) for v in slopes]),
        below("contiguous relation vs series derivative", e4, 1e-10),
        close("F(1/4,3/4;3/2;3/4) = 2/sqrt 3", 2 / math.sqrt(3), evaluate_many(s2, np.array([0.75]))[0], 1e-14),
    ]


CHAIN_PARAMS = ((Fraction(1, 2), Fraction(1, 2)), (1, 1), (Fraction(1, 4), Fraction(3, 4)))


def case_hypergeometric_chain() -> list:
    out = []
    for a, b in CHAIN_PARAMS:
        p = HypergeometricParams(a, b, Fraction(a) + b)
        r = verify_hypergeometric_chain(p)
        out.append(same(f"{p.label()} chain", "Pass", r.verdict, DERIVED))
        out.append(same(f"{p.label()} strict off the diagonal", True, r.strict, DERIVED))
        out.append(same(f"{p.label()} equality on the diagonal", True, r.diagonal_ok, DERIVED))
    return out


def case_cosh_sinh_inequalities() -> list:
    cosh = BesselParams(1, -1, Fraction(-1, 2))
    sinhc = BesselParams(1, -1, Fraction(1, 2))
    out = [
        same("cosh chain on (0,3)", "Pass", verify_bessel_inequality("cosh-chain").verdict, REFERENCE),
        same("sinh(x)/x chain on (0,3)", "Pass", verify_bessel_inequality("sinhc-chain").verdict, REFERENCE),
        same("cosh transformed, R=5.9", "Pass", verify_bessel_inequality("cosh-transformed", 5.9).verdict, REFERENCE),
        same("sinh(x)/x transformed, R=9.9", "Pass",
             verify_bessel_inequality("sinhc-transformed", 9.9).verdict, REFERENCE),
    ]
    for params, R, want in ((cosh, Fraction(59, 10), Verdict.PROVEN), (cosh, 6, Verdict.INAPPLICABLE),
                            (sinhc, Fraction(99, 10), Verdict.PROVEN), (sinhc, 10, Verdict.INAPPLICABLE)):
        cert = certify_bessel_part(params, "transformed_concave", R)
        out.append(same(f"{params.label()} k > -1 - cR/4 at R={R}", want.value, cert.verdict.value, REFERENCE))
    return out


def _sharpness(part: str, ok_R: float, bad_R: float, lo: float) -> list:
    rows = sharpness_scan(part, [ok_R, bad_R])
    scan = sharpness_scan(part, [lo + k / 10 for k in range(11)])
    first = first_refuted(scan)
    w = rows[1].witness
    return [
        same(f"{part} at R={ok_R:g}", "Pass", "Pass" if rows[0].passed else "Refuted", REFERENCE),
        same(f"{part} at R={bad_R:g}", "Refuted", "Pass" if rows[1].passed else "Refuted", REFERENCE),
        Check(f"{part} witness at R={bad_R:g} (x, y, gap)", "gap < 0",
              None if w is None else [w.x, w.y, w.gap], w is not None and w.gap < 0),
        Check(f"first refuted R on {lo:g}..{lo + 1:g} by 0.1", f"in ({lo:g}, {lo + 1:g}]", first,
              first is not None and lo < first <= lo + 1),
    ]


def case_cosh_sharpness() -> list:
    return _sharpness("cosh-transformed", 5.9, 7.0, 6.0)


def case_sinhc_sharpness() -> list:
    return _sharpness("sinhc-transformed", 9.9, 11.0, 10.0)


def case_mf_chain() -> list:
    s = gauss_2f1_series(HypergeometricParams(Fraction(1, 2), Fraction(1, 2), 1))
    cert = certify_mf(s)
    a = s.coeffs(52)
    seq = [(n + 1) * a[n + 1] / a[n] - n for n in range(51)]
    closed = [Fraction(1, 4 * (n + 1)) for n in range(51)]
    m = ratio_function_m(s)
    return [
        same("certificate", Verdict.PREFIX_CHECKED.value, cert.verdict.value),
        same("R(n+1)a_(n+1)/a_n - n = 1/(4(n+1)) for n <= 50", True, seq == closed),
        same("chain on (0.1,0.9)", "Pass", verify_mf_chain(s).verdict, REFERENCE),
        close("m(1/sqrt 2)", 1.0, float(m(np.array([math.sqrt(0.5)]))[0]), 1e-12),
    ]


EXAMPLE_INTERVALS = {
    "cosh": (0.01, 3.0),
    "sinh": (0.01, 3.0),
    "exp": (0.01, 3.0),
    "log1p": (0.01, 5.0),
    "arctan": (0.01, 5.0),
}
EXAMPLE_VERDICTS = (
    ("cosh", "AG", "convex", True),
    ("cosh", "AH", "convex", False),
    ("sinh", "AA", "convex", True),
    ("sinh", "AG", "concave", True),
    ("exp", "GG", "convex", True),
    ("exp", "GH", "convex", False),
    ("log1p", "GA", "convex", True),
    ("log1p", "GG", "concave", True),
    ("arctan", "HA", "convex", True),
    ("arctan", "HG", "convex", False),
)


def example_matrix() -> dict:
    """``{(name, pair, sense): (pairs verdict, derivative verdict)}`` for the corpus."""
    out = {}
    for name, interval in EXAMPLE_INTERVALS.items():
        for pair in PAIRS:
            for sense in SENSES:
                q = ConvexityQuery(NAMED[name], pair, sense, interval)
                out[(name, pair, sense)] = (verify_mn(q).passed, verify_gencor(q).passed)
    return out


def case_examples_matrix() -> list:
    table = example_matrix()
    out = []
    for name, pair, sense, want in EXAMPLE_VERDICTS:
        pv, dv = table[(name, pair, sense)]
        label = "Pass" if want else "Refuted"
        out.append(same(f"{name} {pair}-{sense} (pairs)", label, "Pass" if pv else "Refuted", REFERENCE))
        out.append(same(f"{name} {pair}-{sense} (derivative)", label, "Pass" if dv else "Refuted", REFERENCE))
    agree = sum(pv == dv for pv, dv in table.values())
    out.append(same("routes agree", len(table), agree, DERIVED))
    return out


PFQ_CASES = (
    ((), (), "AG-convex"),
    ((Fraction(1, 2),), (1,), "AG-convex"),
    ((Fraction(1, 2), 1), (2,), "AG-convex"),
    ((2,), (1, 3), "AG-concave"),
    ((), (1, 2), "AG-concave"),
)


def case_pfq() -> list:
    out = []
    for num, den, claim in PFQ_CASES:
        p = GeneralizedHypergeometricParams(num, den)
        cert = certify_pfq(p)
        out.append(same(f"{p.label()} certificate", claim, claim if claim in cert.claims else cert.verdict.value,
                        REFERENCE))
        sense = claim.split("-")[1]
        q = ConvexityQuery(series_subject(generalized_pfq_series(p)), "AG", sense, (0.01, 0.95))
        out.append(same(f"{p.label()} F'/F monotone on (0.01,0.95)", "Pass", verify_gencor(q).verdict, DERIVED))
    return out


def case_certificates() -> list:
    half = Fraction(1, 2)
    k = HypergeometricParams(half, half, 1)
    f3 = HypergeometricParams(3, 3, 1)
    surface = HypergeometricParams(2, 2, Fraction(4, 5))
    c3 = certify_hypergeometric(f3, "log_convex")
    r3 = verify_claim(gauss_2f1_series(f3), "AG-convex", interval=(0.001, 0.3))
    refuted = with_refutation(c3, "AG-convex", r3.witness) if r3.witness is not None else c3
    return [
        same("2F1(1/2,1/2;1) log-convex", Verdict.PROVEN.value,
             certify_hypergeometric(k, "log_convex").verdict.value, REFERENCE),
        same("2F1(1/2,1/2;1) reciprocal concave", Verdict.PROVEN.value,
             certify_hypergeometric(k, "reciprocal_concave").verdict.value, REFERENCE),
        same("2F1(3,3;1) log-convex condition", Verdict.INAPPLICABLE.value, c3.verdict.value, REFERENCE),
        same("2F1(3,3;1) log-convexity numerically", Verdict.REFUTED.value, refuted.verdict.value, REFERENCE),
        same("ab/(a+b+1) = c is not enough", Verdict.INAPPLICABLE.value,
             certify_hypergeometric(surface, "log_convex").verdict.value),
    ]


def case_conjugate_product() -> list:
    out = []
    for a, b, c in ((Fraction(1, 2), Fraction(1, 2), 1), (Fraction(1, 4), Fraction(3, 4), 1),
                    (Fraction(1, 3), Fraction(2, 3), Fraction(3, 2))):
        p = HypergeometricParams(a, b, c)
        out.append(same(f"{p.label()} x(1-x)F(x)F(1-x) up then down", "Pass",
                        verify_conjugate_unimodal(p).verdict, REFERENCE))
    return out


CASES: dict[str, ReproCase] = {
    c.id: c
    for c in (
        ReproCase("elliptic-max", "maximum of x^2 x'^2 K(x) K(x') at x = 1/sqrt 2", case_elliptic_max),
        ReproCase("legendre-counterexample", "F(3,3;1;x) is not log-convex", case_legendre_counterexample),
        ReproCase("closed-forms", "series against closed forms and Legendre identities", case_closed_forms),
        ReproCase("hypergeometric-chain", "mean chain for F(a,b;a+b;x)", case_hypergeometric_chain),
        ReproCase("cosh-sinh-inequalities", "cosh and sinh(x)/x mean inequalities", case_cosh_sinh_inequalities),
        ReproCase("cosh-sharpness", "cosh transformed inequality fails beyond R = 6", case_cosh_sharpness),
        ReproCase("sinhc-sharpness", "sinh(x)/x transformed inequality fails beyond R = 10",
                  case_sinhc_sharpness),
        ReproCase("mf-chain", "m_f chain for F(1/2,1/2;1;x)", case_mf_chain),
        ReproCase("examples-matrix", "MN verdicts of cosh, sinh, exp, log(1+x), arctan", case_examples_matrix),
        ReproCase("pfq-cases", "log-convexity of pFq by parameter comparison", case_pfq),
        ReproCase("certificates", "closed-form 2F1 certificates and one refutation", case_certificates),
        ReproCase("conjugate-product", "x(1-x)F(x)F(1-x) peaks at 1/2", case_conjugate_product),
    )
}


@dataclass(frozen=True)
class CaseResult:
    case: ReproCase
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "id": self.case.id,
            "description": self.case.description,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def run_case(case_id: str) -> CaseResult:
    case = CASES[case_id]
    return CaseResult(case, tuple(case.run()))
