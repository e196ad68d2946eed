"""Numeric verification of MN-convexity and of the derived inequality chains.

Everything here samples: grids of pairs for the defining inequality, grids of
points for derivative monotonicity, plus local refinement for sharpness scans.
Results are deterministic; reductions pick the first extremal grid index.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import EvaluationFailure, InvalidParameters, MNConvexError, OutOfDomain
from .means import MeanFn, mean_array
from .powerseries import (
    BOUNDARY_GUARD,
    PowerSeries,
    derivative,
    evaluate_many,
)
from .specialfn import (
    HypergeometricParams,
    _k_series,
    conjugate_product,
    elliptic_k,
    elliptic_product,
    gauss_2f1_series,
    gn_logderiv,
)

CONVEX = "convex"
CONCAVE = "concave"
SENSES = (CONVEX, CONCAVE)
PAIRS = tuple(m + n for m in "AGH" for n in "AGH")


@dataclass(frozen=True)
class Tolerances:
    eval_rtol: float = 1e-14
    refute_factor: float = 10.0
    strict_rtol: float = 1e-12
    diag_rtol: float = 1e-9
    diag_frac: float = 1e-3


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class Subject:
    """A positive function with a derivative, on an open interval of (0, inf)."""

    name: str
    f: Callable[[np.ndarray], np.ndarray]
    df: Callable[[np.ndarray], np.ndarray]
    domain: tuple[float, float]
    series: PowerSeries | None = None

    def __call__(self, x):
        return self.f(np.asarray(x, dtype=float))


def series_subject(s: PowerSeries, name: str | None = None) -> Subject:
    ds = derivative(s)
    hi = (1.0 - BOUNDARY_GUARD) * float(s.radius) if s.finite_radius else math.inf
    return Subject(
        name=name or s.name,
        f=lambda x: evaluate_many(s, x),
        df=lambda x: evaluate_many(ds, x),
        domain=(0.0, hi),
        series=s,
    )


def _sinhc(x):
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-3
    xs = np.where(small, 1.0, x)
    x2 = x * x
    return np.where(small, 1.0 + x2 / 6.0 + x2 * x2 / 120.0, np.sinh(xs) / xs)


def _dsinhc(x):
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-2
    xs = np.where(small, 1.0, x)
    x2 = x * x
    series = x / 3.0 + x * x2 / 30.0 + x * x2 * x2 / 840.0 + x * x2**3 / 45360.0
    return np.where(small, series, (xs * np.cosh(xs) - np.sinh(xs)) / (xs * xs))


def _dK(x):
    x = np.asarray(x, dtype=float)
    return math.pi * x * evaluate_many(derivative(_k_series()), x * x)


NAMED: dict[str, Subject] = {
    "cosh": Subject("cosh", np.cosh, np.sinh, (0.0, math.inf)),
    "sinh": Subject("sinh", np.sinh, np.cosh, (0.0, math.inf)),
    "exp": Subject("exp", np.exp, np.exp, (0.0, math.inf)),
    "log1p": Subject("log1p", np.log1p, lambda x: 1.0 / (1.0 + x), (0.0, math.inf)),
    "arctan": Subject("arctan", np.arctan, lambda x: 1.0 / (1.0 + x * x), (0.0, math.inf)),
    "sinhc": Subject("sinhc", _sinhc, _dsinhc, (0.0, math.inf)),
    "K": Subject("K", elliptic_k, _dK, (0.0, math.sqrt(1.0 - BOUNDARY_GUARD))),
}


@dataclass(frozen=True)
class GridSpec:
    """Sample points on ``[lo, hi]``; the interval must sit inside the domain."""

    lo: float
    hi: float
    n: int = 64
    spacing: str = "log"

    def __post_init__(self):
        if self.n < 16:
            raise ValueError("a grid needs at least 16 points")
        if not self.lo < self.hi:
            raise ValueError("grid needs lo < hi")
        if self.spacing not in ("log", "uniform"):
            raise ValueError(f"unknown spacing {self.spacing!r}")
        if self.spacing == "log" and not self.lo > 0:
            raise ValueError("log spacing needs lo > 0")

    def points(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.lo, self.hi, self.n)
        return np.linspace(self.lo, self.hi, self.n)


@dataclass(frozen=True)
class ConvexityQuery:
    subject: Subject
    pair: str
    sense: str = CONVEX
    interval: tuple[float, float] | None = None

    def __post_init__(self):
        pair = self.pair.upper()
        if len(pair) != 2 or any(ch not in "AGH" for ch in pair):
            raise ValueError(f"mean pair must be two of A, G, H; got {self.pair!r}")
        object.__setattr__(self, "pair", pair)
        if self.sense not in SENSES:
            raise ValueError(f"sense must be convex or concave, got {self.sense!r}")
        lo, hi = self.interval if self.interval is not None else self.subject.domain
        dlo, dhi = self.subject.domain
        if not lo < hi:
            raise ValueError("interval needs lo < hi")
        if lo < dlo or hi > dhi:
            raise OutOfDomain(f"interval ({lo}, {hi}) leaves the domain of {self.subject.name}")
        object.__setattr__(self, "interval", (float(lo), float(hi)))

    @property
    def M(self) -> MeanFn:
        return MeanFn(self.pair[0])

    @property
    def N(self) -> MeanFn:
        return MeanFn(self.pair[1])

    def describe(self) -> str:
        return f"{self.subject.name} {self.pair}-{self.sense} on {self.interval}"


@dataclass(frozen=True)
class Witness:
    x: float
    y: float
    lhs: float
    rhs: float
    gap: float
    context: str = ""

    def as_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "gap": self.gap,
            "context": self.context,
        }


@dataclass(frozen=True)
class CheckResult:
    """Pass, or Refuted with a witness.

    ``gap`` is signed so that a non-negative value means the inequality
    holds; ``threshold`` is the refutation level it was compared against.
    """

    passed: bool
    context: str
    witness: Witness | None = None
    threshold: float = 0.0
    strict: bool = True
    diagonal_ok: bool = True
    checked: int = 0
    worst: Witness | None = None
    links: tuple = field(default_factory=tuple)

    @property
    def verdict(self) -> str:
        return "Pass" if self.passed else "Refuted"

    def __bool__(self):
        return self.passed

    def as_dict(self) -> dict:
        out = {
            "context": self.context,
            "verdict": self.verdict,
            "checked": self.checked,
            "strict": self.strict,
            "diagonal_ok": self.diagonal_ok,
        }
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
            out["threshold"] = self.threshold
        if self.links:
            out["links"] = [link.as_dict() for link in self.links]
        return out


def witnesses_csv(witnesses) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y", "lhs", "rhs", "gap"])
    for wit in witnesses:
        w.writerow([f"{v:.17g}" for v in (wit.x, wit.y, wit.lhs, wit.rhs, wit.gap)])
    return buf.getvalue()


def _guarded(fn, *args):
    try:
        with np.errstate(all="ignore"):
            out = fn(*args)
    except MNConvexError as exc:
        raise EvaluationFailure(str(exc)) from exc
    out = np.asarray(out, dtype=float)
    if not np.all(np.isfinite(out)):
        raise EvaluationFailure("non-finite value during evaluation")
    return out


def _assess(
    X: np.ndarray,
    Y: np.ndarray,
    lhs: np.ndarray,
    rhs: np.ndarray,
    scale: np.ndarray,
    sense: str,
    context: str,
    tol: Tolerances,
    span: float,
) -> CheckResult:
    """Shared pair bookkeeping: refutation, strictness, diagonal equality."""
    gap = rhs - lhs if sense == CONVEX else lhs - rhs
    eval_tol = tol.eval_rtol * scale
    thresh = tol.refute_factor * eval_tol
    off = np.abs(X - Y) >= tol.diag_frac * span
    diag = X == Y
    bad = gap < -thresh
    ratio = gap / np.where(thresh > 0, thresh, np.finfo(float).tiny)
    i = int(np.argmin(ratio))
    worst = Witness(float(X[i]), float(Y[i]), float(lhs[i]), float(rhs[i]), float(gap[i]), context)
    strict = bool(np.all(gap[off] > tol.strict_rtol * scale[off])) if np.any(off) else True
    diagonal_ok = (
        bool(np.all(np.abs(gap[diag]) <= tol.diag_rtol * scale[diag])) if np.any(diag) else True
    )
    refuted = bool(np.any(bad))
    return CheckResult(
        passed=not refuted,
        context=context,
        witness=worst if refuted else None,
        threshold=float(thresh[i]),
        strict=strict,
        diagonal_ok=diagonal_ok,
        checked=int(X.size),
        worst=worst,
    )


def _pairs(xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    i, j = np.triu_indices(len(xs))
    return xs[i], xs[j]


def _grid_for(q: ConvexityQuery, g: GridSpec | None) -> np.ndarray:
    lo, hi = q.interval
    if g is None:
        g = GridSpec(lo if lo > 0 else hi * 1e-3, hi)
    pts = g.points()
    if pts[0] < q.subject.domain[0] or pts[-1] > q.subject.domain[1]:
        raise OutOfDomain("grid leaves the subject's domain")
    return pts


def verify_mn(q: ConvexityQuery, g: GridSpec | None = None, tol: Tolerances = DEFAULT_TOL) -> CheckResult:
    """Check ``f(M(x,y)) <= N(f(x), f(y))`` (``>=`` for concave) on grid pairs."""
    xs = _grid_for(q, g)
    X, Y = _pairs(xs)
    f = q.subject.f
    fx = _guarded(f, X)
    fy = _guarded(f, Y)
    lhs = _guarded(f, mean_array(q.M, X, Y))
    rhs = mean_array(q.N, fx, fy)
    scale = np.maximum(np.abs(lhs), np.abs(rhs))
    return _assess(X, Y, lhs, rhs, scale, q.sense, f"{q.describe()} [pairs]", tol, xs[-1] - xs[0])


_POWER = {"A": 0, "G": 1, "H": 2}


def gencor_test_function(pair: str, x: np.ndarray, f: np.ndarray, df: np.ndarray) -> np.ndarray:
    """``x^k f'(x) / f(x)^j`` with k, j the A/G/H index of the two means."""
    return x ** _POWER[pair[0]] * df / f ** _POWER[pair[1]]


def verify_gencor(q: ConvexityQuery, g: GridSpec | None = None, tol: Tolerances = DEFAULT_TOL) -> CheckResult:
    """Derivative route: the pair's test function must increase (decrease)."""
    xs = _grid_for(q, g)
    fx = _guarded(q.subject.f, xs)
    dfx = _guarded(q.subject.df, xs)
    phi = gencor_test_function(q.pair, xs, fx, dfx)
    X, Y = xs[:-1], xs[1:]
    lhs, rhs = phi[:-1], phi[1:]
    scale = np.maximum(np.abs(lhs), np.abs(rhs))
    res = _assess(X, Y, lhs, rhs, scale, q.sense, f"{q.describe()} [derivative]", tol, xs[-1] - xs[0])
    return res


def verify_transform(q: ConvexityQuery, g: GridSpec | None = None, tol: Tolerances = DEFAULT_TOL) -> CheckResult:
    """Change-of-variable route: midpoint convexity of the transformed function.

    The argument moves to ``t = log(b/x)`` (G) or ``s = 1/x`` (H), with ``b``
    the right end of the interval; the value moves to ``log f`` (G) or
    ``1/f`` (H, which swaps convex and concave).
    """
    xs = _grid_for(q, g)
    b = q.interval[1]
    to_u = {"A": lambda x: x, "G": lambda x: np.log(b / x), "H": lambda x: 1.0 / x}[q.pair[0]]
    from_u = {"A": lambda u: u, "G": lambda u: b * np.exp(-u), "H": lambda u: 1.0 / u}[q.pair[0]]
    value = {"A": lambda v: v, "G": np.log, "H": lambda v: 1.0 / v}[q.pair[1]]
    sense = q.sense
    if q.pair[1] == "H":
        sense = CONCAVE if sense == CONVEX else CONVEX
    X, Y = _pairs(xs)
    U, V = to_u(X), to_u(Y)
    fx = _guarded(q.subject.f, X)
    fy = _guarded(q.subject.f, Y)
    fm = _guarded(q.subject.f, from_u(0.5 * (U + V)))
    lhs = value(fm)
    rhs = 0.5 * (value(fx) + value(fy))
    if q.pair[1] == "A":
        scale = np.maximum(np.abs(lhs), np.abs(rhs))
    elif q.pair[1] == "G":
        scale = np.ones_like(lhs)
    else:
        scale = 1.0 / np.minimum(np.minimum(fx, fy), fm)
    return _assess(X, Y, lhs, rhs, scale, sense, f"{q.describe()} [transform]", tol, xs[-1] - xs[0])


ROUTES = {"pairs": verify_mn, "derivative": verify_gencor, "transform": verify_transform}


def _combine(context: str, links: list[CheckResult]) -> CheckResult:
    failed = [r for r in links if not r.passed]
    first = failed[0] if failed else None
    return CheckResult(
        passed=not failed,
        context=context,
        witness=first.witness if first is not None else None,
        threshold=first.threshold if first is not None else 0.0,
        strict=all(r.strict for r in links),
        diagonal_ok=all(r.diagonal_ok for r in links),
        checked=sum(r.checked for r in links),
        worst=first.worst if first is not None else None,
        links=tuple(links),
    )


def _chain(context, X, Y, sides, names, tol, span):
    """``sides[0] <= sides[1] <= ...`` checked link by link."""
    links = []
    for k in range(len(sides) - 1):
        lhs, rhs = sides[k], sides[k + 1]
        scale = np.maximum(np.abs(lhs), np.abs(rhs))
        links.append(_assess(X, Y, lhs, rhs, scale, CONVEX, f"{context}: {names[k]}", tol, span))
    return _combine(context, links)


def verify_hypergeometric_chain(
    p: HypergeometricParams, g: GridSpec | None = None, tol: Tolerances = DEFAULT_TOL
) -> CheckResult:
    """For c = a+b: F(A) <= sqrt(F F) <= F(1 - sqrt((1-x)(1-y))) <= (F + F)/2."""
    if p.c != p.a + p.b:
        raise InvalidParameters(f"{p.label()} does not satisfy c = a + b")
    g = g or GridSpec(0.05, 0.95, 64, "uniform")
    xs = g.points()
    X, Y = _pairs(xs)
    s = gauss_2f1_series(p)
    F = lambda x: _guarded(lambda v: evaluate_many(s, v), x)  # noqa: E731
    fx, fy = F(X), F(Y)
    sides = [
        F(0.5 * (X + Y)),
        np.sqrt(fx * fy),
        F(1.0 - np.sqrt((1.0 - X) * (1.0 - Y))),
        0.5 * (fx + fy),
    ]
    names = ["F(A) <= G(F)", "G(F) <= F(1-G(1-x,1-y))", "F(1-G(1-x,1-y)) <= A(F)"]
    return _chain(f"{p.label()} chain", X, Y, sides, names, tol, xs[-1] - xs[0])


def ratio_function_m(s: PowerSeries) -> Callable[[np.ndarray], np.ndarray]:
    """``m(x) = f(R - x^2/R) / f(x^2/R)`` on (0, R)."""
    if not s.finite_radius:
        raise InvalidParameters("m_f needs a finite radius")
    R = float(s.radius)

    def m(x):
        x = np.asarray(x, dtype=float)
        u = x * x / R
        return evaluate_many(s, R - u) / evaluate_many(s, u)

    return m


def verify_mf_chain(s: PowerSeries, g: GridSpec | None = None, tol: Tolerances = DEFAULT_TOL) -> CheckResult:
    """1/m((R^2-x^2)^(1/4) (R^2-y^2)^(1/4)) <= sqrt(m(x) m(y)) <= m(sqrt(xy))."""
    m = ratio_function_m(s)
    R = float(s.radius)
    g = g or GridSpec(0.1 * R, 0.9 * R, 32, "uniform")
    xs = g.points()
    X, Y = _pairs(xs)
    M = lambda x: _guarded(m, x)  # noqa: E731
    inner = np.sqrt(np.sqrt((R * R - X * X) * (R * R - Y * Y)))
    sides = [1.0 / M(inner), np.sqrt(M(X) * M(Y)), M(np.sqrt(X * Y))]
    names = ["1/m(quartic mean) <= G(m)", "G(m) <= m(G)"]
    return _chain(f"m[{s.name}] chain", X, Y, sides, names, tol, xs[-1] - xs[0])


# cosh and sinh(x)/x inequalities obtained from the Bessel series with b=1, c=-1
BESSEL_PARTS = ("cosh-chain", "cosh-transformed", "sinhc-chain", "sinhc-transformed")
TRANSFORMED_LIMIT = {"cosh-transformed": 6.0, "sinhc-transformed": 10.0}


def _transformed_arg(X, Y, R):
    """sqrt(R - sqrt((R-x^2)(R-y^2))) without cancellation for small x, y."""
    u, v = X * X, Y * Y
    root = np.sqrt((R - u) * (R - v))
    return np.sqrt((R * (u + v) - u * v) / (R + root))


def _bessel_sides(part: str, X, Y, R):
    phi = np.cosh if part.startswith("cosh") else _sinhc
    fx, fy = phi(X), phi(Y)
    if part.endswith("chain"):
        return (
            [phi(np.sqrt(X * Y)), np.sqrt(fx * fy), phi(np.sqrt(0.5 * (X * X + Y * Y))), 0.5 * (fx + fy)],
            ["f(G) <= G(f)", "G(f) <= f(quadratic mean)", "f(quadratic mean) <= A(f)"],
        )
    return [0.5 * (fx + fy), phi(_transformed_arg(X, Y, R))], ["A(f) <= f(transformed mean)"]


def _bessel_grid(part: str, R: float | None, g: GridSpec | None) -> GridSpec:
    if g is not None:
        return g
    if part.endswith("chain"):
        return GridSpec(0.01, 3.0)
    root = math.sqrt(R)
    return GridSpec(1e-2 * root, (1.0 - BOUNDARY_GUARD) * root)


def verify_bessel_inequality(
    part: str, R: float | None = None, g: GridSpec | None = None, tol: Tolerances = DEFAULT_TOL
) -> CheckResult:
    """Check one of the cosh / sinh(x)/x inequalities on grid pairs.

    The ``*-transformed`` parts need ``R`` and a grid inside ``(0, sqrt R)``.
    """
    if part not in BESSEL_PARTS:
        raise ValueError(f"unknown part {part!r}; expected one of {BESSEL_PARTS}")
    if part.endswith("transformed"):
        if R is None or not R > 0:
            raise ValueError(f"{part} needs R > 0")
    g = _bessel_grid(part, R, g)
    if part.endswith("transformed") and g.hi >= math.sqrt(R):
        raise OutOfDomain("grid must stay inside (0, sqrt R)")
    xs = g.points()
    X, Y = _pairs(xs)
    return _bessel_pairs(part, R, X, Y, tol, xs[-1] - xs[0])


def _bessel_pairs(part, R, X, Y, tol, span):
    with np.errstate(all="ignore"):
        sides, names = _bessel_sides(part, X, Y, R)
    for s in sides:
        if not np.all(np.isfinite(s)):
            raise EvaluationFailure(f"{part}: non-finite value")
    label = part if R is None or part.endswith("chain") else f"{part} R={R:g}"
    return _chain(label, X, Y, sides, names, tol, span)


def refine_bessel(
    part: str, R: float, coarse: CheckResult, g: GridSpec, levels: int = 2, n: int = 32,
    tol: Tolerances = DEFAULT_TOL,
) -> CheckResult:
    """Zoom in around the worst pair of ``coarse`` on a rectangular grid.

    Each level shrinks the window to two grid steps either side of the
    current worst pair.
    """
    best = coarse
    xs = g.points()
    hi = g.hi
    lo = g.lo
    # window half-width in log coordinates for log grids, linear otherwise
    log = g.spacing == "log"
    step = (math.log(hi / lo) if log else hi - lo) / (g.n - 1)
    for _ in range(levels):
        w = best.worst if best.worst is not None else best.links[0].worst
        if best.links:
            w = min((link.worst for link in best.links), key=lambda wi: wi.gap)
        axes = []
        for c in (w.x, w.y):
            if log:
                a = np.exp(np.linspace(math.log(c) - 2 * step, math.log(c) + 2 * step, n))
            else:
                a = np.linspace(c - 2 * step, c + 2 * step, n)
            axes.append(np.clip(a, lo, hi))
        X, Y = np.meshgrid(axes[0], axes[1], indexing="ij")
        res = _bessel_pairs(part, R, X.ravel(), Y.ravel(), tol, xs[-1] - xs[0])
        step = 4 * step / (n - 1)
        if not res.passed:
            return res
        if min(l.worst.gap for l in res.links) < min(l.worst.gap for l in best.links):
            best = res
    return best


@dataclass(frozen=True)
class ScanRow:
    R: float
    passed: bool
    witness: Witness | None

    def as_dict(self) -> dict:
        out = {"R": self.R, "verdict": "Pass" if self.passed else "Refuted"}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


def sharpness_scan(part: str, R_values, g: GridSpec | None = None, levels: int = 2) -> list[ScanRow]:
    """Run a transformed-mean inequality over several R with local refinement."""
    if not part.endswith("transformed"):
        raise ValueError("sharpness scans apply to the *-transformed parts")
    rows = []
    for R in R_values:
        R = float(R)
        grid = _bessel_grid(part, R, g)
        res = verify_bessel_inequality(part, R, grid)
        if res.passed:
            res = refine_bessel(part, R, res, grid, levels=levels)
        rows.append(ScanRow(R, res.passed, res.witness))
    return rows


def first_refuted(rows: list[ScanRow]) -> float | None:
    for row in rows:
        if not row.passed:
            return row.R
    return None


def refute_log_convexity_f3() -> Witness:
    """Witness that the log-derivative of F(3,3;1;x) drops between 0 and 1/10.

    Values are exact rationals converted to float for the witness.
    """
    lo = gn_logderiv(3, Fraction(0))
    hi = gn_logderiv(3, Fraction(1, 10))
    return Witness(
        0.0,
        0.1,
        float(lo),
        float(hi),
        float(hi - lo),
        "d/dx log F(3,3;1;x) must increase for log-convexity",
    )


@dataclass(frozen=True)
class ElliptMax:
    argmax: float
    maximum: float
    unimodal: bool


def elliptic_maximum(n: int = 2048) -> ElliptMax:
    """Grid maximum of x^2 x'^2 K(x) K(x') over (0, 1)."""
    xs = np.linspace(0.0, 1.0, n + 2)[1:-1]
    vals = elliptic_product(xs)
    i = int(np.argmax(vals))
    d = np.diff(vals)
    unimodal = bool(np.all(d[:i] > 0) and np.all(d[i:] < 0))
    return ElliptMax(float(xs[i]), float(vals[i]), unimodal)


def verify_conjugate_unimodal(p: HypergeometricParams, n: int = 256, slack: float = 1e-12) -> CheckResult:
    """x(1-x)F(x)F(1-x) increases on (0, 1/2] and decreases on [1/2, 1)."""
    d = BOUNDARY_GUARD
    left = np.linspace(d, 0.5, n)
    right = np.linspace(0.5, 1.0 - d, n)
    vl = _guarded(lambda x: conjugate_product(p, x), left)
    vr = _guarded(lambda x: conjugate_product(p, x), right)
    links = []
    for xs, v, sense, name in ((left, vl, 1, "increasing on (0,1/2]"), (right, vr, -1, "decreasing on [1/2,1)")):
        lhs, rhs = (v[:-1], v[1:]) if sense > 0 else (v[1:], v[:-1])
        gap = rhs - lhs
        i = int(np.argmin(gap))
        ok = bool(np.all(gap >= -slack * np.maximum(np.abs(lhs), np.abs(rhs))))
        w = Witness(float(xs[i]), float(xs[i + 1]), float(lhs[i]), float(rhs[i]), float(gap[i]), name)
        links.append(CheckResult(ok, f"{p.label()} conjugate product {name}", None if ok else w,
                                 checked=len(gap), worst=w))
    return _combine(f"{p.label()} conjugate product", links)


def derivative_audit(subject: Subject, probes: np.ndarray, rel_step: float = 1e-5) -> float:
    """Max relative gap between ``subject.df`` and centered differences of ``f``."""
    probes = np.asarray(probes, dtype=float)
    scale = max(float(np.max(probes)), 1e-300)
    h = rel_step * scale
    fd = (subject.f(probes + h) - subject.f(probes - h)) / (2 * h)
    an = subject.df(probes)
    return float(np.max(np.abs(fd - an) / np.maximum(np.abs(an), 1e-300)))


def verdict_matrix(subject: Subject, interval, g: GridSpec | None = None, route: str = "pairs") -> dict:
    """Pass/Refuted for all nine pairs and both senses via one route."""
    check = ROUTES[route]
    out = {}
    for pair in PAIRS:
        for sense in SENSES:
            out[(pair, sense)] = check(ConvexityQuery(subject, pair, sense, interval), g).passed
    return out


def _shifted_mean(X, Y, R):
    """R - sqrt((R-x)(R-y)) without cancellation for small x, y."""
    return (R * (X + Y) - X * Y) / (R + np.sqrt((R - X) * (R - Y)))


def verify_shifted(
    s: PowerSeries,
    R: float,
    log: bool,
    sense: str,
    g: GridSpec | None = None,
    tol: Tolerances = DEFAULT_TOL,
) -> CheckResult:
    """Midpoint convexity of ``f(R(1-e^-t))`` (``log f`` when ``log``) in ``t``.

    In the original variable: ``f(R - sqrt((R-x)(R-y)))`` against the
    geometric (``log``) or arithmetic mean of ``f(x), f(y)``.
    """
    R = float(R)
    if not R > 0:
        raise ValueError("R must be positive")
    if s.finite_radius and R > float(s.radius):
        raise OutOfDomain("R exceeds the radius of convergence")
    g = g or GridSpec(0.01 * R, (1.0 - BOUNDARY_GUARD) * R if not s.finite_radius else 0.95 * R, 48, "uniform")
    if g.hi >= R:
        raise OutOfDomain("grid must stay inside (0, R)")
    xs = g.points()
    X, Y = _pairs(xs)
    F = lambda x: _guarded(lambda v: evaluate_many(s, v), x)  # noqa: E731
    fx, fy = F(X), F(Y)
    lhs = F(_shifted_mean(X, Y, R))
    rhs = np.sqrt(fx * fy) if log else 0.5 * (fx + fy)
    scale = np.maximum(np.abs(lhs), np.abs(rhs))
    what = "log f" if log else "f"
    context = f"{s.name}: {what}(R(1-e^-t)) {sense}, R={R:g}"
    return _assess(X, Y, lhs, rhs, scale, sense, context, tol, xs[-1] - xs[0])


def verify_claim(
    s: PowerSeries,
    claim: str,
    R: float | None = None,
    interval: tuple[float, float] | None = None,
    g: GridSpec | None = None,
    tol: Tolerances = DEFAULT_TOL,
) -> CheckResult:
    """Numerically check one certificate claim such as ``"AG-convex"``.

    Shifted claims use ``R`` (default: the radius of convergence).
    """
    head, _, sense = claim.rpartition("-")
    if sense not in SENSES and claim != "mf-chain":
        raise ValueError(f"unknown claim {claim!r}")
    if claim == "mf-chain":
        return verify_mf_chain(s, g, tol)
    if head in ("shifted", "shifted-log"):
        if R is None:
            if not s.finite_radius:
                raise InvalidParameters("shifted claims need R for an entire series")
            R = float(s.radius)
        return verify_shifted(s, R, head == "shifted-log", sense, g, tol)
    subject = series_subject(s)
    if interval is None:
        hi = 0.95 * float(s.radius) if s.finite_radius else 3.0
        interval = (0.01 * hi, hi)
    return verify_mn(ConvexityQuery(subject, head, sense, interval), g, tol)


def verify_ratio_monotone(
    f: PowerSeries, g: PowerSeries, increasing: bool = True, grid: GridSpec | None = None, rtol: float = 1e-9
) -> CheckResult:
    """Sampled monotonicity of ``f/g`` on (0, R), the conclusion of the ratio rule."""
    R = min(float(f.radius), float(g.radius))
    hi = 0.95 * R if math.isfinite(R) else 3.0
    grid = grid or GridSpec(0.01 * hi, hi, 64, "uniform")
    xs = grid.points()
    r = _guarded(lambda v: evaluate_many(f, v) / evaluate_many(g, v), xs)
    lhs, rhs = (r[:-1], r[1:]) if increasing else (r[1:], r[:-1])
    gap = rhs - lhs
    scale = np.maximum(np.abs(lhs), np.abs(rhs))
    i = int(np.argmin(gap / scale))
    ok = bool(np.all(gap >= -rtol * scale))
    w = Witness(float(xs[i]), float(xs[i + 1]), float(lhs[i]), float(rhs[i]), float(gap[i]),
                f"{f.name}/{g.name} {'increasing' if increasing else 'decreasing'}")
    return CheckResult(ok, w.context, None if ok else w, threshold=rtol, checked=len(gap), worst=w)
