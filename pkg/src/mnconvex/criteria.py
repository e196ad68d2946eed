"""Coefficient-level sufficient conditions for MN-convexity.

Each certifier returns an immutable :class:`Certificate`.  A closed-form
parameter condition that holds gives ``ProvenByCriterion``; a sequence
condition checked on a finite prefix gives ``PrefixChecked``; a sufficient
condition that fails gives ``Inapplicable``.  Refutation is left to
:mod:`mnconvex.numcheck`.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParameters, NonPositiveCoefficient
from .numcheck import Witness
from .powerseries import (
    DEFAULT_HORIZON,
    Monotonicity,
    MonotoneVerdict,
    PowerSeries,
    RatioSequence,
    cauchy_square,
    exact_or_float,
    monotone_verdict,
)
from .specialfn import (
    BesselParams,
    GeneralizedHypergeometricParams,
    HypergeometricParams,
)


class Verdict(enum.Enum):
    PROVEN = "ProvenByCriterion"
    PREFIX_CHECKED = "PrefixChecked"
    REFUTED = "Refuted"
    INAPPLICABLE = "Inapplicable"


EXIT_CODES = {
    Verdict.PROVEN: 0,
    Verdict.PREFIX_CHECKED: 0,
    Verdict.INAPPLICABLE: 1,
    Verdict.REFUTED: 4,
}


@dataclass(frozen=True)
class Hypothesis:
    condition: str
    held: bool

    def as_dict(self) -> dict:
        return {"condition": self.condition, "held": self.held}


@dataclass(frozen=True)
class Certificate:
    subject: str
    criterion: str
    verdict: Verdict
    hypotheses: tuple = ()
    horizon: int | None = None
    start_index: int = 0
    claims: tuple = ()
    reason: str | None = None
    witness: Witness | None = None
    notes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.verdict is Verdict.REFUTED and self.witness is None:
            raise ValueError("a refutation must carry a witness")
        if self.verdict is Verdict.PROVEN and self.horizon is not None:
            raise ValueError("a closed-form proof has no prefix horizon")

    @property
    def granted(self) -> bool:
        return self.verdict in (Verdict.PROVEN, Verdict.PREFIX_CHECKED)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def as_dict(self) -> dict:
        out = {
            "subject": self.subject,
            "criterion": self.criterion,
            "verdict": self.verdict.value,
            "hypotheses": [h.as_dict() for h in self.hypotheses],
            "horizon": self.horizon,
            "start_index": self.start_index,
            "claims": list(self.claims),
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _exact(v) -> Fraction:
    """Exact rational value of a parameter (binary value for stray floats)."""
    return v if isinstance(v, Fraction) else Fraction(v)


def _closed_form(subject, criterion, checks, claims, reason_if_not=None, notes=()):
    hyps = tuple(Hypothesis(text, bool(ok)) for text, ok in checks)
    held = all(h.held for h in hyps)
    return Certificate(
        subject=subject,
        criterion=criterion,
        verdict=Verdict.PROVEN if held else Verdict.INAPPLICABLE,
        hypotheses=hyps,
        claims=tuple(claims) if held else (),
        reason=None if held else (reason_if_not or "sufficient condition does not hold"),
        notes=tuple(notes),
    )


# --- Gaussian hypergeometric closed-form conditions -------------------------

HYPERGEOMETRIC_CLAIMS = {
    "log_convex": "AG-convex",
    "log_concave_transformed": "shifted-log-concave",
    "convex_transformed": "shifted-convex",
    "reciprocal_concave": "AH-convex",
}
HYPERGEOMETRIC_CRITERIA = tuple(HYPERGEOMETRIC_CLAIMS)


def certify_hypergeometric(p: HypergeometricParams, which: str) -> Certificate:
    """Decide one closed-form 2F1 condition exactly in rational arithmetic."""
    which = which.replace("-", "_")
    a, b, c = _exact(p.a), _exact(p.b), _exact(p.c)
    s = p.label()
    if which == "log_convex":
        return _closed_form(
            s,
            "2F1 log-convexity on (0,1): ab/(a+b+1) < c",
            [(f"ab/(a+b+1) = {a * b / (a + b + 1)} < c = {c}", a * b / (a + b + 1) < c)],
            ["AG-convex"],
        )
    if which == "log_concave_transformed":
        return _closed_form(
            s,
            "2F1 log-concavity of F(1-e^-t): (a-c)(b-c) > 0",
            [(f"(a-c)(b-c) = {(a - c) * (b - c)} > 0", (a - c) * (b - c) > 0)],
            ["shifted-log-concave"],
        )
    if which == "convex_transformed":
        return _closed_form(
            s,
            "2F1 convexity of F(1-e^-t): a+b >= c",
            [(f"a+b = {a + b} >= c = {c}", a + b >= c)],
            ["shifted-convex"],
        )
    if which == "reciprocal_concave":
        return _closed_form(
            s,
            "2F1 concavity of 1/F: a+b >= c >= 2ab and c > a+b-1/2",
            [
                (f"a+b = {a + b} >= c = {c}", a + b >= c),
                (f"c = {c} >= 2ab = {2 * a * b}", c >= 2 * a * b),
                (f"c = {c} > a+b-1/2 = {a + b - Fraction(1, 2)}", c > a + b - Fraction(1, 2)),
            ],
            ["AH-convex"],
        )
    raise ValueError(f"unknown criterion {which!r}; expected one of {HYPERGEOMETRIC_CRITERIA}")


# --- generic positive-coefficient series criteria ---------------------------

SERIES_CRITERIA = {
    "positive": "positive coefficients give AA- and GG-convexity",
    "derivative_ratio": "monotone {(n+1)a_(n+1)/a_n} gives AG-convexity (concavity)",
    "square_ratio": "monotone {(n+1)a_(n+1)/b_n}, b = a*a, gives AH-convexity (concavity)",
    "square_index_ratio": "monotone {n a_n/b_n}, b = a*a, gives GH-convexity (concavity)",
    "shifted_ratio": "monotone {R(n+1)a_(n+1)/a_n - n} gives convexity (concavity) of log f(R(1-e^-t))",
    "weighted_index": "monotone {n a_n R^n} gives convexity (concavity) of f(R(1-e^-t))",
    "reciprocal": "increasing {n a_n R^n} and decreasing {n! a_n R^n/(1/2,n)} give concavity of 1/f",
}

_CLAIMS = {
    "derivative_ratio": ("AG-convex", "AG-concave"),
    "square_ratio": ("AH-convex", "AH-concave"),
    "square_index_ratio": ("GH-convex", "GH-concave"),
    "shifted_ratio": ("shifted-log-convex", "shifted-log-concave"),
    "weighted_index": ("shifted-convex", "shifted-concave"),
}

_NEEDS_FINITE_R = {"shifted_ratio", "weighted_index", "reciprocal"}


def _check_positive(s: PowerSeries, count: int) -> list:
    a = s.coeffs(count)
    for n, v in enumerate(a):
        if not v > 0:
            raise NonPositiveCoefficient(n)
    return a


def _positive_by_parameters(s: PowerSeries) -> str | None:
    """Reason every coefficient is positive, when the family parameters force it."""
    if not s.family:
        return None
    fam, params = s.family
    if fam == "2F1" and all(v > 0 for v in params):
        return "a, b, c > 0: every Pochhammer ratio is positive"
    if fam == "pFq" and all(v > 0 for v in params[0] + params[1]):
        return "all parameters positive: every Pochhammer ratio is positive"
    if fam == "bessel":
        b, c, p = params
        if c < 0 and p + (b + 1) / 2 > 0:
            return "c < 0 and k > 0: every coefficient (-c/4)^n/(n!(k,n)) is positive"
    if fam == "exp":
        return "a_n = 1/n! > 0"
    return None


def _radius(s: PowerSeries):
    return exact_or_float(s.radius) if s.exact else float(s.radius)


def _seq(terms, start, exact) -> RatioSequence:
    return RatioSequence(tuple(terms), start, exact)


def _sequence_hypothesis(label: str, v: MonotoneVerdict, want) -> Hypothesis:
    ok = v.kind in want
    return Hypothesis(f"{label}: {v.describe()}", ok)


def _effective_horizon(s: PowerSeries, horizon: int, needs_next: bool) -> int:
    if s.degree is not None:
        horizon = min(horizon, s.degree - (1 if needs_next else 0))
    if horizon < 2:
        raise InvalidParameters(f"{s.name}: too few coefficients for a prefix check")
    return horizon


def _one_of(senses, sense):
    return sense is None or sense in senses


def certify_series(
    s: PowerSeries, which: str, sense: str | None = None, horizon: int = DEFAULT_HORIZON
) -> Certificate:
    """Run one coefficient-sequence criterion on the prefix ``n <= horizon``.

    ``sense`` restricts the conclusion to ``"convex"`` or ``"concave"``; when
    the sequence runs the other way the certificate is Inapplicable.
    """
    which = which.replace("-", "_")
    if which not in SERIES_CRITERIA:
        raise ValueError(f"unknown criterion {which!r}; expected one of {tuple(SERIES_CRITERIA)}")
    criterion = SERIES_CRITERIA[which]
    if which in _NEEDS_FINITE_R and not s.finite_radius:
        return Certificate(
            subject=s.name,
            criterion=criterion,
            verdict=Verdict.INAPPLICABLE,
            hypotheses=(Hypothesis("0 < R < infinity", False),),
            reason="criterion needs a finite radius of convergence",
        )
    N = _effective_horizon(s, horizon, which != "positive")
    a = _check_positive(s, N + 2 if s.degree is None else N + 1)
    exact = s.exact
    conv = (lambda v: v) if exact else float
    a = [conv(v) for v in a]
    pos = Hypothesis(f"a_n > 0 for n <= {len(a) - 1}", True)

    if which == "positive":
        if sense == "concave":
            return Certificate(
                subject=s.name, criterion=criterion, verdict=Verdict.INAPPLICABLE,
                hypotheses=(pos,), horizon=N, reason="positive coefficients only give convexity",
            )
        closed = _positive_by_parameters(s)
        hyps = (pos,) if closed is None else (pos, Hypothesis(closed, True))
        return Certificate(
            subject=s.name,
            criterion=criterion,
            verdict=Verdict.PREFIX_CHECKED if closed is None else Verdict.PROVEN,
            hypotheses=hyps,
            horizon=len(a) - 1 if closed is None else None,
            claims=("AA-convex", "GG-convex", "GA-convex", "HA-convex", "HG-convex"),
            notes=("GA, HA and HG follow because f is increasing on (0, R)",),
        )

    notes = ()
    start = 0
    if which == "derivative_ratio":
        terms = [(n + 1) * a[n + 1] / a[n] for n in range(N + 1)]
        label = "(n+1)a_(n+1)/a_n"
    elif which in ("square_ratio", "square_index_ratio"):
        b = cauchy_square(s).coeffs(N + 1)
        b = [conv(v) for v in b]
        if which == "square_ratio":
            terms = [(n + 1) * a[n + 1] / b[n] for n in range(N + 1)]
            label = "(n+1)a_(n+1)/b_n"
        else:
            terms = [n * a[n] / b[n] for n in range(N + 1)]
            label = "n a_n/b_n"
            notes = (
                "the same sequence is stated for GH- and cited for HH-convexity; "
                "the claim recorded here is GH",
            )
    elif which == "shifted_ratio":
        R = _radius(s)
        terms = [R * (n + 1) * a[n + 1] / a[n] - n for n in range(N + 1)]
        label = "R(n+1)a_(n+1)/a_n - n"
    elif which == "weighted_index":
        R = _radius(s)
        start = 1
        terms = [n * a[n] * R**n for n in range(1, N + 1)]
        label = "n a_n R^n"
    else:
        return _certify_reciprocal(s, a, N, sense, pos)

    seq = _seq(terms, start, exact)
    v = monotone_verdict(seq)
    up, down = _CLAIMS[which]
    if v.kind is Monotonicity.CONSTANT:
        claims = (up, down)
    elif v.kind is Monotonicity.INCREASING:
        claims = (up,)
    elif v.kind is Monotonicity.DECREASING:
        claims = (down,)
    else:
        claims = ()
    if sense is not None:
        claims = tuple(c for c in claims if c.endswith(sense))
    hyp = Hypothesis(f"{label}: {v.describe()}", bool(claims))
    if not claims:
        reason = (
            f"{label} is not monotone (first break at n={v.index})"
            if v.kind is Monotonicity.NOT_MONOTONE
            else f"{label} runs the wrong way for {sense}"
        )
        return Certificate(
            subject=s.name, criterion=criterion, verdict=Verdict.INAPPLICABLE,
            hypotheses=(pos, hyp), horizon=N, start_index=start, reason=reason, notes=notes,
        )
    return Certificate(
        subject=s.name,
        criterion=criterion,
        verdict=Verdict.PREFIX_CHECKED,
        hypotheses=(pos, hyp),
        horizon=N,
        start_index=start,
        claims=claims,
        notes=notes,
    )


def _certify_reciprocal(s, a, N, sense, pos) -> Certificate:
    R = _radius(s)
    criterion = SERIES_CRITERIA["reciprocal"]
    exact = s.exact
    first = _seq([n * a[n] * R**n for n in range(1, N + 1)], 1, exact)
    half = Fraction(1, 2) if exact else 0.5
    second_terms = []
    fact = 1 if exact else 1.0
    poch = 1 if exact else 1.0
    for n in range(N + 1):
        if n:
            fact *= n
            poch *= half + n - 1
        second_terms.append(fact * a[n] * R**n / poch)
    second = _seq(second_terms, 0, exact)
    v1, v2 = monotone_verdict(first), monotone_verdict(second)
    h1 = _sequence_hypothesis("n a_n R^n increasing", v1, (Monotonicity.INCREASING, Monotonicity.CONSTANT))
    h2 = _sequence_hypothesis(
        "n! a_n R^n/(1/2,n) decreasing", v2, (Monotonicity.DECREASING, Monotonicity.CONSTANT)
    )
    ok = h1.held and h2.held and sense in (None, "convex")
    return Certificate(
        subject=s.name,
        criterion=criterion,
        verdict=Verdict.PREFIX_CHECKED if ok else Verdict.INAPPLICABLE,
        hypotheses=(pos, h1, h2),
        horizon=N,
        start_index=0,
        claims=("AH-convex",) if ok else (),
        reason=None if ok else "sequence conditions do not hold on the prefix"
        if sense in (None, "convex")
        else "criterion only gives AH-convexity",
    )


def certify_mf(s: PowerSeries, horizon: int = DEFAULT_HORIZON) -> Certificate:
    """Decreasing {R(n+1)a_(n+1)/a_n - n} gives the two-sided m_f inequality."""
    criterion = "decreasing {R(n+1)a_(n+1)/a_n - n} gives the m_f(x) = f(R-x^2/R)/f(x^2/R) chain"
    if not s.finite_radius:
        return Certificate(
            subject=s.name, criterion=criterion, verdict=Verdict.INAPPLICABLE,
            hypotheses=(Hypothesis("0 < R < infinity", False),),
            reason="criterion needs a finite radius of convergence",
        )
    inner = certify_series(s, "shifted_ratio", sense="concave", horizon=horizon)
    granted = inner.granted
    return Certificate(
        subject=s.name,
        criterion=criterion,
        verdict=inner.verdict,
        hypotheses=inner.hypotheses,
        horizon=inner.horizon,
        start_index=inner.start_index,
        claims=("mf-chain",) if granted else (),
        reason=inner.reason,
        notes=("a constant sequence is the equality case",)
        if any("Constant" in h.condition for h in inner.hypotheses)
        else (),
    )


# --- Bessel-type series -----------------------------------------------------

BESSEL_CRITERIA = ("gg_convex", "log_concave", "convex", "transformed_concave")


def certify_bessel(p: BesselParams, R=None) -> list[Certificate]:
    """All four Bessel-series conclusions; the last needs ``R`` and k > -1 - cR/4."""
    k = p.k
    if not p.c < 0 or not k > 0:
        raise InvalidParameters(f"{p.label()}: need c < 0 and k > 0")
    s = p.label()
    c, kk = _exact(p.c), _exact(k)
    base = [(f"c = {c} < 0", True), (f"k = {kk} > 0", True)]
    certs = [
        _closed_form(s, "positive coefficients: log f(R e^-t) convex", base, ["GG-convex"]),
        _closed_form(
            s,
            "(n+1)b_(n+1)/b_n = (-c/4)/(k+n) decreasing: log f concave",
            base,
            ["AG-concave"],
        ),
        _closed_form(s, "positive coefficients: f convex", base, ["AA-convex"]),
    ]
    if R is None:
        certs.append(
            Certificate(
                subject=s,
                criterion="k > -1 - cR/4: f(R(1-e^-t)) concave",
                verdict=Verdict.INAPPLICABLE,
                reason="no R given",
            )
        )
    else:
        RR = _exact(exact_or_float(R))
        bound = -1 - c * RR / 4
        certs.append(
            _closed_form(
                s,
                "k > -1 - cR/4: f(R(1-e^-t)) concave",
                base + [(f"R = {RR} > 0", RR > 0), (f"k = {kk} > -1 - cR/4 = {bound}", kk > bound)],
                ["shifted-concave"],
            )
        )
    return certs


def certify_bessel_part(p: BesselParams, which: str, R=None) -> Certificate:
    which = which.replace("-", "_")
    if which not in BESSEL_CRITERIA:
        raise ValueError(f"unknown criterion {which!r}; expected one of {BESSEL_CRITERIA}")
    return certify_bessel(p, R)[BESSEL_CRITERIA.index(which)]


# --- generalized hypergeometric ---------------------------------------------


def _dominance(small, large):
    """Pair sorted lists; True when small[k] <= large[k] for all k."""
    return all(x <= y for x, y in zip(sorted(small), sorted(large)))


def certify_pfq(p: GeneralizedHypergeometricParams) -> Certificate:
    """Log-convexity / log-concavity of pFq on (0, 1) by parameter comparison.

    Parameters are matched after sorting each list, which finds a valid
    componentwise pairing whenever one exists.
    """
    s = p.label()
    num = sorted(_exact(v) for v in p.num)
    den = sorted(_exact(v) for v in p.den)
    P, Q = len(num), len(den)
    if P > Q + 1:
        return Certificate(
            subject=s, criterion="pFq log-convexity", verdict=Verdict.INAPPLICABLE,
            hypotheses=(Hypothesis(f"p = {P} <= q + 1 = {Q + 1}", False),),
            reason="series diverges for every x != 0",
        )
    if P == 0 and Q == 0:
        return _closed_form(s, "p = q = 0: F = exp, log-affine", [("p = q = 0", True)],
                            ["AG-convex", "AG-concave"])
    if P == Q:
        le = all(x <= y for x, y in zip(num, den))
        ge = all(x >= y for x, y in zip(num, den))
        strict = any(x != y for x, y in zip(num, den))
        if le and not strict:
            return _closed_form(
                s, "p = q with a_k = b_k: parameters cancel to exp, log-affine",
                [("a_k = b_k for every k", True)], ["AG-convex", "AG-concave"],
            )
        if le:
            return _closed_form(
                s, "p = q, a_k <= b_k with one strict: strictly log-convex",
                [("a_k <= b_k for every k, one strict", True)], ["AG-convex"],
            )
        if ge:
            return _closed_form(
                s, "p = q, a_k >= b_k with one strict: strictly log-concave",
                [("a_k >= b_k for every k, one strict", True)], ["AG-concave"],
            )
        return _closed_form(
            s, "p = q: componentwise parameter comparison",
            [("a_k <= b_k for every k", False), ("a_k >= b_k for every k", False)], [],
            reason_if_not="mixed comparison: neither all a_k <= b_k nor all a_k >= b_k",
        )
    if P > Q:
        if Q == 0:
            return _closed_form(s, "p > q = 0: T_n = prod (a_k+n) increasing, log-convex",
                                [("q = 0", True)], ["AG-convex"])
        # match the q smallest numerator parameters against the denominators
        head = num[:Q]
        ok = _dominance(head, den) and any(x != y for x, y in zip(head, den))
        return _closed_form(
            s, "p > q, a_k <= b_k (k <= q) with one strict: strictly log-convex",
            [("a_k <= b_k for k = 1..q, one strict", ok)], ["AG-convex"],
            reason_if_not="no componentwise a_k <= b_k pairing with a strict inequality",
        )
    if P == 0:
        return _closed_form(s, "p = 0 < q: T_n = 1/prod (n+b_k) decreasing, log-concave",
                            [("p = 0, q >= 1", True)], ["AG-concave"])
    # 1 <= p < q: pair against the p smallest denominators
    head = den[:P]
    ok = all(x >= y for x, y in zip(num, head)) and any(x != y for x, y in zip(num, head))
    return _closed_form(
        s, "1 <= p < q, a_k >= b_k (k <= p) with one strict: strictly log-concave",
        [("a_k >= b_k for k = 1..p, one strict", ok)], ["AG-concave"],
        reason_if_not="no componentwise a_k >= b_k pairing with a strict inequality",
    )


# --- MN-pair dispatch and mean-ordering implications ------------------------

_ORDER = "HGA"  # H <= G <= A


def _implied_by(pair: str, sense: str) -> list[str]:
    """Pairs whose certificate implies ``pair`` for an increasing function."""
    m, n = pair
    out = []
    i_m, i_n = _ORDER.index(m), _ORDER.index(n)
    if sense == "convex":
        # a smaller right-hand mean is stronger; a larger argument mean is stronger
        out += [m + k for k in _ORDER[:i_n]]
        out += [k + n for k in _ORDER[i_m + 1:]]
    else:
        out += [m + k for k in _ORDER[i_n + 1:]]
        out += [k + n for k in _ORDER[:i_m]]
    return out


def _direct(s: PowerSeries, pair: str, sense: str, horizon: int) -> list[Certificate]:
    fam = s.family[0] if s.family else None
    out = []
    if fam == "2F1" and all(v > 0 for v in s.family[1]):
        p = HypergeometricParams(*s.family[1])
        if pair == "AG" and sense == "convex":
            out.append(certify_hypergeometric(p, "log_convex"))
        if pair == "AH" and sense == "convex":
            out.append(certify_hypergeometric(p, "reciprocal_concave"))
    if fam == "bessel":
        bp = BesselParams(*s.family[1])
        if pair == "AG" and sense == "concave":
            out.append(certify_bessel_part(bp, "log_concave"))
    if fam == "pFq" and pair == "AG":
        cert = certify_pfq(GeneralizedHypergeometricParams(*s.family[1]))
        out.append(cert)
    if pair in ("AA", "GG", "GA", "HA", "HG") and sense == "convex":
        out.append(certify_series(s, "positive", horizon=horizon))
    if pair == "AG":
        out.append(certify_series(s, "derivative_ratio", sense, horizon))
    if pair == "AH":
        if sense == "convex" and s.finite_radius:
            out.append(certify_series(s, "reciprocal", sense, horizon))
        out.append(certify_series(s, "square_ratio", sense, horizon))
    if pair in ("GH", "HH"):
        cert = certify_series(s, "square_index_ratio", sense, horizon)
        if pair == "HH" and cert.granted:
            cert = Certificate(
                subject=cert.subject, criterion=cert.criterion, verdict=cert.verdict,
                hypotheses=cert.hypotheses, horizon=cert.horizon, start_index=cert.start_index,
                claims=cert.claims + tuple(c.replace("GH", "HH") for c in cert.claims),
                notes=cert.notes + ("HH claim rests on the cited HH derivative test",),
            )
        out.append(cert)
    return out


def _best(certs: list[Certificate], claim: str) -> Certificate | None:
    for verdict in (Verdict.PROVEN, Verdict.PREFIX_CHECKED):
        for c in certs:
            if c.verdict is verdict and claim in c.claims:
                return c
    return None


def certify(s: PowerSeries, pair: str, sense: str = "convex", horizon: int = DEFAULT_HORIZON) -> Certificate:
    """Best available certificate for ``pair``-``sense`` of a positive series on (0, R).

    Direct criteria are tried first, closed forms before prefix checks; then
    certificates for stronger pairs are carried over through H <= G <= A.
    """
    pair = pair.upper()
    claim = f"{pair}-{sense}"
    tried: dict[str, list[Certificate]] = {}

    def direct(pr):
        if pr not in tried:
            tried[pr] = _direct(s, pr, sense, horizon)
        return tried[pr]

    found = _best(direct(pair), claim)
    if found is not None:
        return found
    seen = {pair}
    queue = deque([(pair, [])])
    while queue:
        cur, path = queue.popleft()
        for src in _implied_by(cur, sense):
            if src in seen:
                continue
            seen.add(src)
            chain = path + [cur]
            cert = _best(direct(src), f"{src}-{sense}")
            if cert is not None:
                steps = " => ".join(f"{x}-{sense}" for x in [src] + chain[::-1])
                return Certificate(
                    subject=cert.subject,
                    criterion=f"{cert.criterion}; mean ordering H <= G <= A: {steps}",
                    verdict=cert.verdict,
                    hypotheses=cert.hypotheses + (Hypothesis("f increasing on (0, R)", True),),
                    horizon=cert.horizon,
                    start_index=cert.start_index,
                    claims=(claim,) + cert.claims,
                    notes=cert.notes,
                )
            queue.append((src, chain))
    attempts = [c for cs in tried.values() for c in cs]
    hyps = tuple(h for c in attempts for h in c.hypotheses)
    return Certificate(
        subject=s.name,
        criterion=f"{claim} by coefficient criteria",
        verdict=Verdict.INAPPLICABLE,
        hypotheses=hyps,
        reason="no sufficient condition applies"
        if attempts
        else f"no coefficient criterion targets {claim}",
    )


def with_refutation(cert: Certificate, claim: str, witness: Witness) -> Certificate:
    """Upgrade an Inapplicable certificate once ``claim`` has a numeric counterexample."""
    if cert.granted:
        raise ValueError("a granted certificate cannot be refuted; the criterion would be unsound")
    return Certificate(
        subject=cert.subject,
        criterion=cert.criterion,
        verdict=Verdict.REFUTED,
        hypotheses=cert.hypotheses,
        horizon=cert.horizon,
        start_index=cert.start_index,
        reason=f"{claim} fails numerically",
        witness=witness,
        notes=cert.notes,
    )
