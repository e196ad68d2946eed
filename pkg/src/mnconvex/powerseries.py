"""Maclaurin series with exact-rational coefficients where possible.

A :class:`PowerSeries` is a radius of convergence plus a deterministic
coefficient map.  Coefficients are :class:`fractions.Fraction` when every
parameter is rational ("exact" kind) and floats otherwise.  Float evaluation
goes through :mod:`mnconvex.kernels`.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .errors import (
    NoConvergenceDetected,
    NonPositiveDenominator,
    OutOfDomain,
    UndefinedSymbol,
)

INF = math.inf

BOUNDARY_GUARD = 1e-3
TERM_CAP = 10**6
TAIL_Q_MAX = 0.999
TAIL_WINDOW = 8
DEFAULT_RTOL = 1e-16
FLOAT_TIE_RTOL = 1e-15
DEFAULT_HORIZON = 1000

Number = int | float | Fraction


def as_rational(v) -> Fraction | None:
    """Return ``v`` as a Fraction when it is plausibly a rational parameter.

    ints and Fractions always convert.  A float converts through its shortest
    round-trip decimal when that has at most 12 significant digits, so
    ``0.25`` becomes ``1/4`` and ``0.1`` becomes ``1/10`` while ``math.pi``
    stays a float.
    """
    if isinstance(v, bool):
        return Fraction(int(v))
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if not math.isfinite(v):
            return None
        mantissa = repr(v).lower().split("e")[0].replace("-", "").replace(".", "").lstrip("0")
        if len(mantissa) <= 12:
            return Fraction(repr(v))
    return None


def exact_or_float(v):
    r = as_rational(v)
    return r if r is not None else float(v)


def pochhammer(a: Number, n: int):
    """Rising factorial ``a (a+1) ... (a+n-1)`` with ``(a, 0) = 1``.

    Exact (a Fraction) for rational ``a``; a float otherwise.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError("length must be an integer")
    n = int(n)
    if n < 0:
        raise ValueError(f"negative length {n}")
    a = exact_or_float(a)
    if a == 0 and n == 0:
        raise UndefinedSymbol("the Pochhammer symbol (0, 0) is not defined")
    out = Fraction(1) if isinstance(a, Fraction) else 1.0
    for k in range(n):
        out *= a + k
    return out


class PowerSeries:
    """``f(x) = sum a_n x^n`` converging on ``(-radius, radius)``.

    Build one from either a coefficient function ``coeff(n)`` or a leading
    coefficient ``first`` plus the exact term ratio ``ratio(n) = a_{n+1}/a_n``.
    ``float_ratio`` is an optional numpy-vectorized version of ``ratio`` used
    to generate float coefficient arrays quickly.  ``degree`` marks a
    polynomial (all coefficients past it vanish).
    """

    def __init__(
        self,
        *,
        radius: float | Fraction,
        coeff: Callable[[int], Number] | None = None,
        first: Number | None = None,
        ratio: Callable[[int], Number] | None = None,
        float_ratio: Callable[[np.ndarray], np.ndarray] | None = None,
        kind: str = "exact",
        name: str = "series",
        degree: int | None = None,
        family: tuple | None = None,
    ):
        if coeff is None and (first is None or ratio is None):
            raise ValueError("need coeff, or first and ratio")
        if not radius > 0:
            raise ValueError("radius must be positive")
        if kind not in ("exact", "float"):
            raise ValueError(f"unknown coefficient kind {kind!r}")
        self.radius = radius
        self.kind = kind
        self.name = name
        self.degree = degree
        self.family = family
        self._coeff = coeff
        self._first = first
        self._ratio = ratio
        self._float_ratio = float_ratio
        self._prefix: list = []
        self._floats = np.empty(0)
        self._lock = threading.Lock()

    def __repr__(self):
        return f"PowerSeries({self.name}, radius={self.radius}, kind={self.kind})"

    @property
    def exact(self) -> bool:
        return self.kind == "exact"

    @property
    def finite_radius(self) -> bool:
        return math.isfinite(float(self.radius))

    def _convert(self, v):
        if self.kind == "exact":
            return v if isinstance(v, Fraction) else Fraction(v)
        return float(v)

    def coeff(self, n: int):
        """Coefficient ``a_n``; memoized, identical across calls."""
        if n < 0:
            raise IndexError(n)
        if self.degree is not None and n > self.degree:
            return Fraction(0) if self.exact else 0.0
        if self._ratio is None:
            if n < len(self._prefix):
                return self._prefix[n]
            with self._lock:
                while len(self._prefix) <= n:
                    self._prefix.append(self._convert(self._coeff(len(self._prefix))))
            return self._prefix[n]
        if n < len(self._prefix):
            return self._prefix[n]
        with self._lock:
            if not self._prefix:
                self._prefix.append(self._convert(self._first))
            while len(self._prefix) <= n:
                k = len(self._prefix) - 1
                self._prefix.append(self._prefix[k] * self._convert(self._ratio(k)))
        return self._prefix[n]

    def coeffs(self, count: int) -> list:
        """The first ``count`` coefficients."""
        if count <= 0:
            return []
        self.coeff(count - 1 if self.degree is None else min(count, self.degree + 1) - 1)
        if self.degree is not None and count > self.degree + 1:
            zero = Fraction(0) if self.exact else 0.0
            return list(self._prefix[: self.degree + 1]) + [zero] * (count - self.degree - 1)
        return list(self._prefix[:count])

    def float_coeffs(self, count: int) -> np.ndarray:
        """The first ``count`` coefficients as a float64 array (cached)."""
        if self.degree is not None:
            count = min(count, self.degree + 1)
        if count <= len(self._floats):
            return self._floats[:count]
        if self._float_ratio is not None and self._first is not None and float(self._first) != 0.0:
            with np.errstate(under="ignore", over="ignore"):
                r = np.asarray(self._float_ratio(np.arange(count - 1, dtype=float)), dtype=float)
                arr = float(self._first) * np.concatenate(([1.0], np.cumprod(r)))
        else:
            arr = np.array([float(c) for c in self.coeffs(count)], dtype=float)
        with self._lock:
            if len(arr) > len(self._floats):
                self._floats = arr
        return arr

    def __call__(self, x, tol: float = 0.0, rtol: float = DEFAULT_RTOL):
        if np.ndim(x) == 0:
            return evaluate(self, float(x), tol=tol, rtol=rtol)
        return evaluate_many(self, x, rtol=rtol)


def _check_domain(s: PowerSeries, x: float, guard: float) -> None:
    if s.degree is not None or not s.finite_radius:
        return
    R = float(s.radius)
    if abs(x) >= R:
        raise OutOfDomain(f"|x|={abs(x)} is outside the radius {R} of {s.name}")
    if abs(x) > (1.0 - guard) * R:
        raise OutOfDomain(f"|x|={abs(x)} is inside the boundary guard of {s.name} (radius {R})")


def _sum(s: PowerSeries, x: float, tol: float, rtol: float) -> tuple[float, int]:
    if x == 0.0:
        return float(s.coeff(0)), 1
    count = 64
    while True:
        c = s.float_coeffs(count)
        val, used, status = kernels.series_sum(c, x, tol, rtol, TAIL_Q_MAX, TAIL_WINDOW)
        if status == kernels.CONVERGED:
            return float(val), used
        if status == kernels.NONFINITE:
            raise NoConvergenceDetected(f"{s.name}: terms overflowed at x={x}")
        if s.degree is not None and len(c) >= s.degree + 1:
            return float(val), used
        if count >= TERM_CAP:
            raise NoConvergenceDetected(
                f"{s.name}: tail bound not engaged after {TERM_CAP} terms at x={x}"
            )
        count = min(count * 4, TERM_CAP)


def evaluate(
    s: PowerSeries,
    x: float,
    tol: float = 0.0,
    rtol: float = DEFAULT_RTOL,
    guard: float = BOUNDARY_GUARD,
) -> float:
    """Sum the series at ``x`` with adaptive truncation.

    Stops once the geometric tail bound is below ``max(tol, rtol*|sum|)``.
    Raises OutOfDomain outside ``|x| <= (1-guard) * radius`` and
    NoConvergenceDetected if the term cap is reached first.
    """
    x = float(x)
    _check_domain(s, x, guard)
    return _sum(s, x, tol, rtol)[0]


def evaluate_many(
    s: PowerSeries, xs, rtol: float = DEFAULT_RTOL, guard: float = BOUNDARY_GUARD
) -> np.ndarray:
    """Vectorized :func:`evaluate`.

    The truncation order is fixed by the point of largest modulus, which for
    positive coefficients dominates the tail at every smaller ``|x|``.
    """
    xs = np.asarray(xs, dtype=float)
    if xs.size == 0:
        return np.empty(xs.shape)
    xmax = float(np.max(np.abs(xs)))
    _check_domain(s, xmax, guard)
    if xmax == 0.0:
        return np.full(xs.shape, float(s.coeff(0)))
    _, used = _sum(s, xmax, 0.0, rtol)
    c = s.float_coeffs(used + TAIL_WINDOW)
    return np.asarray(kernels.horner_many(np.ascontiguousarray(c), xs.ravel())).reshape(xs.shape)


def derivative(s: PowerSeries) -> PowerSeries:
    """Term-by-term derivative: coefficient n is ``(n+1) a_{n+1}``."""
    degree = None if s.degree is None else max(s.degree - 1, 0)
    name = f"d/dx[{s.name}]"
    if s.degree == 0:
        zero = Fraction(0) if s.exact else 0.0
        return PowerSeries(radius=INF, coeff=lambda n: zero, kind=s.kind, name=name, degree=0)
    first = s.coeff(1)
    if s._ratio is not None and first != 0:
        ratio = s._ratio
        float_ratio = s._float_ratio
        return PowerSeries(
            radius=s.radius,
            first=first,
            ratio=lambda n: Fraction(n + 2, n + 1) * ratio(n + 1)
            if s.exact
            else (n + 2) / (n + 1) * ratio(n + 1),
            float_ratio=None
            if float_ratio is None
            else (lambda n: (n + 2.0) / (n + 1.0) * float_ratio(n + 1.0)),
            kind=s.kind,
            name=name,
            degree=degree,
        )
    return PowerSeries(
        radius=s.radius,
        coeff=lambda n: (n + 1) * s.coeff(n + 1),
        kind=s.kind,
        name=name,
        degree=degree,
    )


class _SquareSeries(PowerSeries):
    def __init__(self, base: PowerSeries):
        self.base = base
        super().__init__(
            radius=base.radius,
            coeff=self._convolve_at,
            kind=base.kind,
            name=f"({base.name})^2",
            degree=None if base.degree is None else 2 * base.degree,
        )

    def _convolve_at(self, n):
        a = self.base.coeffs(n + 1)
        total = 2 * sum(a[k] * a[n - k] for k in range((n + 1) // 2))
        if n % 2 == 0:
            total += a[n // 2] * a[n // 2]
        return total

    def coeff(self, n: int):
        if not self.exact or n < len(self._prefix) or (self.degree is not None and n > self.degree):
            return super().coeff(n)
        # batch over a common denominator: integer products are far cheaper
        # than Fraction products with a gcd each
        count = max(n + 1, 2 * len(self._prefix), 16)
        if self.degree is not None:
            count = min(count, self.degree + 1)
        a = self.base.coeffs(count)
        den = math.lcm(*(c.denominator for c in a))
        ints = [c.numerator * (den // c.denominator) for c in a]
        den2 = den * den
        out = []
        for m in range(count):
            total = 2 * sum(ints[k] * ints[m - k] for k in range((m + 1) // 2))
            if m % 2 == 0:
                total += ints[m // 2] * ints[m // 2]
            out.append(Fraction(total, den2))
        with self._lock:
            if len(out) > len(self._prefix):
                self._prefix = out
        return self._prefix[n]

    def float_coeffs(self, count: int) -> np.ndarray:
        if self.degree is not None:
            count = min(count, self.degree + 1)
        if count <= len(self._floats):
            return self._floats[:count]
        a = self.base.float_coeffs(count)
        if len(a) < count:
            a = np.concatenate((a, np.zeros(count - len(a))))
        arr = np.convolve(a, a)[:count]
        with self._lock:
            if len(arr) > len(self._floats):
                self._floats = arr
        return arr


def cauchy_square(s: PowerSeries) -> PowerSeries:
    """Series of ``f(x)**2``: coefficient n is ``sum_k a_k a_{n-k}``."""
    return _SquareSeries(s)


class Monotonicity(enum.Enum):
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    CONSTANT = "Constant"
    NOT_MONOTONE = "NotMonotone"


@dataclass(frozen=True)
class RatioSequence:
    """Terms ``T_n`` for ``n = start .. horizon`` (inclusive)."""

    terms: tuple
    start: int = 0
    exact: bool = True

    @property
    def horizon(self) -> int:
        return self.start + len(self.terms) - 1

    def __getitem__(self, n: int):
        if not self.start <= n <= self.horizon:
            raise IndexError(n)
        return self.terms[n - self.start]

    def __len__(self):
        return len(self.terms)

    def transform(self, fn: Callable[[int, Number], Number]) -> RatioSequence:
        """Apply ``fn(n, T_n)`` termwise, e.g. ``lambda n, t: t - n``."""
        terms = tuple(fn(n, t) for n, t in enumerate(self.terms, self.start))
        return RatioSequence(terms, self.start, self.exact)


def sequence(fn: Callable[[int], Number], start: int, horizon: int, exact: bool) -> RatioSequence:
    """Tabulate an arbitrary index sequence as a RatioSequence."""
    conv = Fraction if exact else float
    return RatioSequence(tuple(conv(fn(n)) for n in range(start, horizon + 1)), start, exact)


def ratio_sequence(
    f: PowerSeries, g: PowerSeries, N: int = DEFAULT_HORIZON, start: int = 0
) -> RatioSequence:
    """``T_n = a_n / b_n`` for ``n = start .. N``; needs ``b_n > 0`` there."""
    exact = f.exact and g.exact
    a = f.coeffs(N + 1)
    b = g.coeffs(N + 1)
    terms = []
    for n in range(start, N + 1):
        if not b[n] > 0:
            raise NonPositiveDenominator(n)
        terms.append(Fraction(a[n]) / b[n] if exact else float(a[n]) / float(b[n]))
    return RatioSequence(tuple(terms), start, exact)


@dataclass(frozen=True)
class MonotoneVerdict:
    kind: Monotonicity
    index: int | None
    start: int
    horizon: int
    strict: bool
    prefix_only: bool = True

    @property
    def increasing(self) -> bool:
        return self.kind in (Monotonicity.INCREASING, Monotonicity.CONSTANT)

    @property
    def decreasing(self) -> bool:
        return self.kind in (Monotonicity.DECREASING, Monotonicity.CONSTANT)

    def describe(self) -> str:
        span = f"n={self.start}..{self.horizon}"
        if self.kind is Monotonicity.NOT_MONOTONE:
            return f"NotMonotone at n={self.index} (prefix {span})"
        weak = "" if self.strict or self.kind is Monotonicity.CONSTANT else "weakly "
        return f"{weak}{self.kind.value} on prefix {span}"


def monotone_verdict(r: RatioSequence, rel_tie: float | None = None) -> MonotoneVerdict:
    """Classify the monotonicity of the inspected prefix of ``r``.

    Comparisons are strict; in exact mode only equal terms tie, in float mode
    neighbours within ``rel_tie`` (default 1e-15) relative tie.  On failure
    ``index`` is the first ``n`` whose term breaks the direction set by the
    earlier terms.
    """
    if len(r) < 2:
        raise ValueError("need at least two terms")
    if r.exact:
        direction, index, ties = 0, -1, 0
        for i in range(1, len(r.terms)):
            d = r.terms[i] - r.terms[i - 1]
            if d == 0:
                ties += 1
                continue
            s = 1 if d > 0 else -1
            if direction == 0:
                direction = s
            elif s != direction:
                direction, index = kernels.NOT_MONOTONE, i
                break
    else:
        tie = FLOAT_TIE_RTOL if rel_tie is None else rel_tie
        direction, index, ties = kernels.monotone_scan(
            np.ascontiguousarray(r.terms, dtype=float), tie
        )
    kind = {
        kernels.CONSTANT: Monotonicity.CONSTANT,
        kernels.INCREASING: Monotonicity.INCREASING,
        kernels.DECREASING: Monotonicity.DECREASING,
        kernels.NOT_MONOTONE: Monotonicity.NOT_MONOTONE,
    }[direction]
    return MonotoneVerdict(
        kind=kind,
        index=None if index < 0 else r.start + index,
        start=r.start,
        horizon=r.horizon,
        strict=ties == 0,
    )


def from_coefficients(
    coeffs: Sequence[Number], radius: float | Fraction = INF, name: str = "series"
) -> PowerSeries:
    """Finite coefficient list (later coefficients are zero)."""
    vals = [exact_or_float(c) for c in coeffs]
    kind = "exact" if all(isinstance(v, Fraction) for v in vals) else "float"
    if kind == "float":
        vals = [float(v) for v in vals]
    return PowerSeries(
        radius=radius,
        coeff=lambda n: vals[n],
        kind=kind,
        name=name,
        degree=len(vals) - 1,
    )


def geometric(radius: Number = 1) -> PowerSeries:
    """``sum (x/R)^n = R/(R-x)``."""
    r = exact_or_float(radius)
    inv = 1 / r
    return PowerSeries(
        radius=r,
        first=Fraction(1) if isinstance(r, Fraction) else 1.0,
        ratio=lambda n: inv,
        float_ratio=lambda n: np.full(np.shape(n), float(inv)),
        kind="exact" if isinstance(r, Fraction) else "float",
        name=f"geometric(R={r})",
    )


def exponential() -> PowerSeries:
    return PowerSeries(
        radius=INF,
        first=Fraction(1),
        ratio=lambda n: Fraction(1, n + 1),
        float_ratio=lambda n: 1.0 / (n + 1.0),
        name="exp",
        family=("exp", ()),
    )
