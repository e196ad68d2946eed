"""The five classical two-variable means and their series ratios."""

from __future__ import annotations

import enum
import math
from fractions import Fraction

import numpy as np

from .errors import NonPositiveInput
from .powerseries import INF, PowerSeries

# below this |u| = |y-x|/(x+y) the logarithmic and identric means use
# their three-term expansions
NEAR_DIAGONAL = 1e-6


class MeanFn(enum.Enum):
    ARITHMETIC = "A"
    GEOMETRIC = "G"
    HARMONIC = "H"
    LOGARITHMIC = "L"
    IDENTRIC = "I"

    @classmethod
    def parse(cls, letter: str) -> MeanFn:
        try:
            return cls(letter.upper())
        except ValueError:
            raise ValueError(f"unknown mean {letter!r}; expected one of A, G, H, L, I") from None

    def __call__(self, x, y):
        return mean(self, x, y)


A = MeanFn.ARITHMETIC
G = MeanFn.GEOMETRIC
H = MeanFn.HARMONIC
L = MeanFn.LOGARITHMIC
I = MeanFn.IDENTRIC  # noqa: E741


def _logarithmic(x: float, y: float) -> float:
    s = 0.5 * (x + y)
    u = (y - x) / (x + y)
    if abs(u) < NEAR_DIAGONAL:
        u2 = u * u
        return s * (1.0 - u2 / 3.0 - 4.0 * u2 * u2 / 45.0)
    # (y-x)/(log y - log x) written as s*u/atanh(u) to avoid cancellation
    return s * u / math.atanh(u)


def _identric(x: float, y: float) -> float:
    s = 0.5 * (x + y)
    u = (y - x) / (x + y)
    if abs(u) < NEAR_DIAGONAL:
        u2 = u * u
        return s * (1.0 - u2 / 6.0 - 13.0 * u2 * u2 / 360.0)
    if abs(u) == 1.0:
        raise NonPositiveInput("identric mean needs positive arguments")
    # log I = log s + phi(u) - 1 with
    # phi(u) = ((1+u) log(1+u) - (1-u) log(1-u)) / (2u)
    phi = ((1.0 + u) * math.log1p(u) - (1.0 - u) * math.log1p(-u)) / (2.0 * u)
    return s * math.exp(phi - 1.0)


def mean(m: MeanFn, x, y):
    """Value of mean ``m`` at the (unordered) positive pair ``x, y``.

    A and H stay exact on Fraction input; the others return floats.
    """
    if not (x > 0 and y > 0):
        raise NonPositiveInput(f"means need positive arguments, got ({x}, {y})")
    if m is MeanFn.ARITHMETIC:
        return (x + y) / 2
    if m is MeanFn.HARMONIC:
        return 2 * x * y / (x + y)
    x, y = float(x), float(y)
    if m is MeanFn.GEOMETRIC:
        return math.sqrt(x) * math.sqrt(y)
    if m is MeanFn.LOGARITHMIC:
        return x if x == y else _logarithmic(x, y)
    if m is MeanFn.IDENTRIC:
        return x if x == y else _identric(x, y)
    raise ValueError(m)


def mean_array(m: MeanFn, x, y) -> np.ndarray:
    """Elementwise :func:`mean` for the A, G, H means used by grid scans."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if m is MeanFn.ARITHMETIC:
        return 0.5 * (x + y)
    if m is MeanFn.GEOMETRIC:
        return np.sqrt(x) * np.sqrt(y)
    if m is MeanFn.HARMONIC:
        return 2.0 * x * y / (x + y)
    return np.vectorize(lambda a, b: mean(m, a, b), otypes=[float])(x, y)


def mean_ratio_series() -> tuple[PowerSeries, PowerSeries]:
    """Series of L/G and A/G in ``t`` where ``y/x = exp(2 sqrt t)``.

    Returns ``(sum t^n/(2n+1)!, sum t^n/(2n)!)``, i.e. ``sinh(sqrt t)/sqrt t``
    and ``cosh(sqrt t)``.
    """
    lg = PowerSeries(
        radius=INF,
        first=Fraction(1),
        ratio=lambda n: Fraction(1, (2 * n + 2) * (2 * n + 3)),
        float_ratio=lambda n: 1.0 / ((2 * n + 2) * (2 * n + 3)),
        name="L/G",
    )
    ag = PowerSeries(
        radius=INF,
        first=Fraction(1),
        ratio=lambda n: Fraction(1, (2 * n + 1) * (2 * n + 2)),
        float_ratio=lambda n: 1.0 / ((2 * n + 1) * (2 * n + 2)),
        name="A/G",
    )
    return lg, ag
