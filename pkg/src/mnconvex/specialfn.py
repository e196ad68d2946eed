"""Named function corpus: 2F1, pFq, K, Bessel-type series, Legendre polynomials."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import Inapplicable, InvalidParameters, OutOfDomain
from .powerseries import (
    BOUNDARY_GUARD,
    INF,
    PowerSeries,
    derivative,
    evaluate,
    evaluate_many,
    exact_or_float,
)


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return repr(float(v))


def _is_nonpositive_integer(v) -> bool:
    return v <= 0 and float(v) == math.floor(float(v))


@dataclass(frozen=True)
class HypergeometricParams:
    a: Fraction | float
    b: Fraction | float
    c: Fraction | float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = exact_or_float(getattr(self, name))
            if not v > 0:
                raise InvalidParameters(f"2F1 parameter {name}={v} must be positive")
            object.__setattr__(self, name, v)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (self.a, self.b, self.c))

    def label(self) -> str:
        return f"2F1({_fmt(self.a)},{_fmt(self.b)};{_fmt(self.c)})"


@dataclass(frozen=True)
class GeneralizedHypergeometricParams:
    num: tuple
    den: tuple

    def __post_init__(self):
        num = tuple(exact_or_float(v) for v in self.num)
        den = tuple(exact_or_float(v) for v in self.den)
        for v in num + den:
            if not v > 0:
                raise InvalidParameters(f"pFq parameters must be positive, got {v}")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def p(self) -> int:
        return len(self.num)

    @property
    def q(self) -> int:
        return len(self.den)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.num + self.den)

    def label(self) -> str:
        return (
            f"{self.p}F{self.q}({','.join(_fmt(v) for v in self.num)};"
            f"{','.join(_fmt(v) for v in self.den)})"
        )


@dataclass(frozen=True)
class BesselParams:
    b: Fraction | float
    c: Fraction | float
    p: Fraction | float

    def __post_init__(self):
        for name in ("b", "c", "p"):
            object.__setattr__(self, name, exact_or_float(getattr(self, name)))

    @property
    def k(self):
        return self.p + (self.b + 1) / 2

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (self.b, self.c, self.p))

    def label(self) -> str:
        return f"bessel(b={_fmt(self.b)},c={_fmt(self.c)},p={_fmt(self.p)})"


def hyp2f1_series(a, b, c, name: str | None = None) -> PowerSeries:
    """2F1 series without the positivity requirement on ``a`` and ``b``.

    ``c`` must not be a non-positive integer.  A non-positive integer ``a``
    or ``b`` gives a polynomial.
    """
    a, b, c = exact_or_float(a), exact_or_float(b), exact_or_float(c)
    if _is_nonpositive_integer(c):
        raise InvalidParameters(f"c={c} is a non-positive integer")
    exact = all(isinstance(v, Fraction) for v in (a, b, c))
    degree = None
    for v in (a, b):
        if _is_nonpositive_integer(v):
            d = int(-v)
            degree = d if degree is None else min(degree, d)
    fa, fb, fc = float(a), float(b), float(c)
    label = name or f"2F1({_fmt(a)},{_fmt(b)};{_fmt(c)})"
    return PowerSeries(
        radius=INF if degree is not None else 1,
        first=Fraction(1) if exact else 1.0,
        ratio=lambda n: (a + n) * (b + n) / ((c + n) * (n + 1)),
        float_ratio=lambda n: (fa + n) * (fb + n) / ((fc + n) * (n + 1.0)),
        kind="exact" if exact else "float",
        name=label,
        degree=degree,
        family=("2F1", (a, b, c)),
    )


def hyp2f1(a, b, c, x):
    """F(a,b;c;x) for -1 < x < 1; accepts arrays.

    Negative ``x`` goes through F = (1-x)^(-a) F(a, c-b; c; x/(x-1)), which
    maps (-1, 0) into (0, 1/2) and avoids the cancellation of an alternating
    series.  When ``c-a`` rather than ``c-b`` is a non-positive integer the
    roles of ``a`` and ``b`` are swapped so that the transformed series ends.
    """
    a, b, c = exact_or_float(a), exact_or_float(b), exact_or_float(c)
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) >= 1):
        raise OutOfDomain("hyp2f1 needs -1 < x < 1")
    if _is_nonpositive_integer(c - a) and not _is_nonpositive_integer(c - b):
        a, b = b, a
    out = np.empty(xa.shape)
    neg = xa < 0
    if np.any(~neg):
        out[~neg] = evaluate_many(hyp2f1_series(a, b, c), xa[~neg])
    if np.any(neg):
        xn = xa[neg]
        z = xn / (xn - 1.0)
        out[neg] = (1.0 - xn) ** (-float(a)) * evaluate_many(hyp2f1_series(a, c - b, c), z)
    return float(out) if np.ndim(x) == 0 else out


def gauss_2f1_series(p: HypergeometricParams) -> PowerSeries:
    """F(a,b;c;x) with coefficients (a,n)(b,n)/((c,n) n!), radius 1."""
    return hyp2f1_series(p.a, p.b, p.c, name=p.label())


def generalized_pfq_series(p: GeneralizedHypergeometricParams) -> PowerSeries:
    """pFq series; radius infinite for p <= q, 1 for p = q+1.

    p > q+1 diverges for every x != 0 with positive parameters and is rejected.
    """
    if p.p > p.q + 1:
        raise InvalidParameters(f"{p.label()} has zero radius of convergence")
    num, den = p.num, p.den
    fnum = np.array([float(v) for v in num])
    fden = np.array([float(v) for v in den])

    def ratio(n):
        r = Fraction(1, n + 1) if p.exact else 1.0 / (n + 1)
        for v in num:
            r *= v + n
        for v in den:
            r /= v + n
        return r

    def float_ratio(n):
        n = np.asarray(n, dtype=float)
        r = 1.0 / (n + 1.0)
        for v in fnum:
            r = r * (v + n)
        for v in fden:
            r = r / (v + n)
        return r

    return PowerSeries(
        radius=1 if p.p == p.q + 1 else INF,
        first=Fraction(1) if p.exact else 1.0,
        ratio=ratio,
        float_ratio=float_ratio,
        kind="exact" if p.exact else "float",
        name=p.label(),
        family=("pFq", (num, den)),
    )


def elliptic_k(x):
    """Complete elliptic integral of the first kind via the AGM.

    ``K(x) = pi / (2 agm(1, sqrt(1 - x^2)))`` for ``0 < x < 1``; accepts arrays.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(~((xa > 0) & (xa < 1))):
        raise OutOfDomain("elliptic_k needs 0 < x < 1")
    comp = np.sqrt((1.0 - xa) * (1.0 + xa))
    g = kernels.agm_many(np.ones(xa.shape).ravel(), comp.ravel()).reshape(xa.shape)
    out = 0.5 * math.pi / g
    return float(out) if np.ndim(x) == 0 else out


@functools.lru_cache(maxsize=None)
def _k_series() -> PowerSeries:
    return hyp2f1_series(Fraction(1, 2), Fraction(1, 2), 1)


def elliptic_k_series(x):
    """K through the hypergeometric series; the cross-check route."""
    xa = np.asarray(x, dtype=float)
    if np.any(~((xa > 0) & (xa < 1))):
        raise OutOfDomain("elliptic_k needs 0 < x < 1")
    if np.ndim(x) == 0:
        return 0.5 * math.pi * evaluate(_k_series(), float(xa) ** 2)
    return 0.5 * math.pi * evaluate_many(_k_series(), xa**2)


def bessel_series(p: BesselParams) -> PowerSeries:
    """Generalized-normalized Bessel series with coefficients (-c/4)^n / (n! (k,n))."""
    k = p.k
    if not p.c < 0:
        raise InvalidParameters(f"need c < 0, got c={p.c}")
    if not k > 0:
        raise InvalidParameters(f"need k = p + (b+1)/2 > 0, got k={k}")
    w = -p.c / 4
    fw, fk = float(w), float(k)
    return PowerSeries(
        radius=INF,
        first=Fraction(1) if p.exact else 1.0,
        ratio=lambda n: w / ((n + 1) * (k + n)),
        float_ratio=lambda n: fw / ((n + 1.0) * (fk + n)),
        kind="exact" if p.exact else "float",
        name=p.label(),
        family=("bessel", (p.b, p.c, p.p)),
    )


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact coefficients, lowest degree first."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        fc = [float(c) for c in self.coeffs]
        if np.ndim(x):
            return kernels.horner_many(np.array(fc), np.asarray(x, dtype=float))
        acc = 0.0
        for c in reversed(fc):
            acc = acc * float(x) + c
        return acc

    def derivative(self) -> RationalPoly:
        if len(self.coeffs) <= 1:
            return RationalPoly((Fraction(0),))
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def __sub__(self, other: RationalPoly) -> RationalPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        out = [x - y for x, y in zip(a, b)]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return RationalPoly(tuple(out))

    def scale(self, factor) -> RationalPoly:
        return RationalPoly(tuple(factor * c for c in self.coeffs))

    def shift_up(self) -> RationalPoly:
        """Multiply by x."""
        return RationalPoly((Fraction(0),) + self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class LegendrePoly(RationalPoly):
    n: int = 0


@functools.lru_cache(maxsize=None)
def legendre(n: int) -> LegendrePoly:
    """P_n with exact coefficients from (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return LegendrePoly((Fraction(1),), 0)
    if n == 1:
        return LegendrePoly((Fraction(0), Fraction(1)), 1)
    p1, p0 = legendre(n - 1), legendre(n - 2)
    k = n - 1
    a = [Fraction(0)] + [Fraction(2 * k + 1, k + 1) * c for c in p1.coeffs]
    for i, c in enumerate(p0.coeffs):
        a[i] -= Fraction(k, k + 1) * c
    return LegendrePoly(tuple(a), n)


def _check_legendre_domain(x) -> None:
    if not -1 < x < 0.5:
        raise OutOfDomain(f"x={x} outside (-1, 1/2)")


def _as_exact_or_float(x):
    return Fraction(x) if isinstance(x, (int, Fraction)) else float(x)


def fnn_via_legendre(n: int, x):
    """F(n,n;1;x) = P_{n-1}(y) / (1-x)^n with y = (1+x)/(1-x), -1 < x < 1/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_legendre_domain(x)
    x = _as_exact_or_float(x)
    y = (1 + x) / (1 - x)
    return legendre(n - 1)(y) / (1 - x) ** n


def gn_logderiv(n: int, x):
    """d/dx log F(n,n;1;x) through the Legendre representation.

    Exact for int/Fraction ``x``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_legendre_domain(x)
    x = _as_exact_or_float(x)
    P = legendre(n - 1)
    y = (1 + x) / (1 - x)
    return n / (1 - x) + 2 / (1 - x) ** 2 * P.derivative()(y) / P(y)


def gn_prime(n: int, x):
    """Derivative of :func:`gn_logderiv` in closed form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_legendre_domain(x)
    x = _as_exact_or_float(x)
    P = legendre(n - 1)
    dP = P.derivative()
    d2P = dP.derivative()
    y = (1 + x) / (1 - x)
    p, p1, p2 = P(y), dP(y), d2P(y)
    w = 1 - x
    return n / w**2 + 4 / w**3 * p1 / p + 4 / w**4 * (p * p2 - p1 * p1) / (p * p)


def gn_prime_zero(n: int) -> Fraction:
    """Closed value -n^4/2 + n^3 + n^2/2 of g_n'(0)."""
    return Fraction(-(n**4), 2) + n**3 + Fraction(n**2, 2)


def _unit_interval(x: float) -> float:
    x = float(x)
    if not 0 < x < 1:
        raise OutOfDomain(f"x={x} outside (0, 1)")
    return x


def contiguous_derivative(p: HypergeometricParams, x: float) -> float:
    """x(1-x) F'(x) computed as (c-a) F(a-1,b;c;x) + (a-c+bx) F(a,b;c;x)."""
    x = _unit_interval(x)
    lower = hyp2f1_series(p.a - 1, p.b, p.c)
    F = evaluate(gauss_2f1_series(p), x)
    Fm = evaluate(lower, x)
    a, b, c = float(p.a), float(p.b), float(p.c)
    return (c - a) * Fm + (a - c + b * x) * F


def _conjugate_check(p: HypergeometricParams) -> None:
    if not (0 < p.a < 1 and 0 < p.b < 1 and p.a < p.c and p.b < p.c):
        raise Inapplicable(
            f"{p.label()}: conjugate-product monotonicity needs a, b in (0,1), a < c, b < c"
        )


def conjugate_product(p: HypergeometricParams, x):
    """x (1-x) F(x) F(1-x); accepts arrays.

    Both arguments must sit inside the boundary guard, i.e. delta <= x <= 1-delta.
    """
    _conjugate_check(p)
    s = gauss_2f1_series(p)
    xa = np.asarray(x, dtype=float)
    if np.any(~((xa > 0) & (xa < 1))):
        raise OutOfDomain("x must lie in (0, 1)")
    if np.ndim(x) == 0:
        xf = float(xa)
        return xf * (1 - xf) * evaluate(s, xf) * evaluate(s, 1 - xf)
    return xa * (1 - xa) * evaluate_many(s, xa) * evaluate_many(s, 1 - xa)


def elliptic_product(x):
    """x^2 x'^2 K(x) K(x') on (0, 1) through the AGM route."""
    xa = np.asarray(x, dtype=float)
    comp = np.sqrt((1.0 - xa) * (1.0 + xa))
    out = xa**2 * comp**2 * elliptic_k(xa) * elliptic_k(comp)
    return float(out) if np.ndim(x) == 0 else out


__all__ = [
    "BOUNDARY_GUARD",
    "BesselParams",
    "GeneralizedHypergeometricParams",
    "HypergeometricParams",
    "LegendrePoly",
    "RationalPoly",
    "bessel_series",
    "contiguous_derivative",
    "derivative",
    "elliptic_k",
    "elliptic_k_series",
    "elliptic_product",
    "fnn_via_legendre",
    "gauss_2f1_series",
    "generalized_pfq_series",
    "gn_logderiv",
    "gn_prime",
    "gn_prime_zero",
    "hyp2f1_series",
    "legendre",
    "conjugate_product",
]
