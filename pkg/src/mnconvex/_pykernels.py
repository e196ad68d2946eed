"""Pure-Python reference versions of the hot loops.

Same signatures and return conventions as the compiled ``_ckernels`` module;
``mnconvex.kernels`` picks one of the two at import time.
"""

import math

import numpy as np

CONVERGED = 0
EXHAUSTED = 1
NONFINITE = 2

CONSTANT = 0
INCREASING = 1
DECREASING = -1
NOT_MONOTONE = 2


# overflow is reported through the NONFINITE status, not as a warning
@np.errstate(over="ignore", invalid="ignore")
def series_sum(c, x, tol, rtol, q_max, window):
    """Sum ``c[n] * x**n`` until a geometric tail bound drops below tolerance.

    Returns ``(value, n_used, status)``.  The tail bound engages once the last
    ``window`` per-step term ratios are all below ``q_max``; with ``q`` their
    maximum, the remainder after term ``t`` is bounded by ``|t| q / (1 - q)``.
    """
    x = float(x)
    s = 0.0
    comp = 0.0
    xp = 1.0
    ratios = []
    prev = 0.0
    prev_n = -1
    for n in range(len(c)):
        t = c[n] * xp
        # Neumaier summation
        y = s + t
        if abs(s) >= abs(t):
            comp += (s - y) + t
        else:
            comp += (t - y) + s
        s = y
        at = abs(t)
        if at != 0.0:
            if prev != 0.0:
                r = at / prev
                if n - prev_n > 1:
                    r = r ** (1.0 / (n - prev_n))
                if r < q_max:
                    ratios.append(r)
                    if len(ratios) > window:
                        del ratios[0]
                else:
                    ratios.clear()
            prev = at
            prev_n = n
            if len(ratios) == window:
                q = max(ratios)
                bound = at * q / (1.0 - q)
                if bound <= max(tol, rtol * abs(s + comp)):
                    return s + comp, n + 1, CONVERGED
        xp *= x
        if not (math.isfinite(xp) and math.isfinite(s)):
            return s + comp, n + 1, NONFINITE
    return s + comp, len(c), EXHAUSTED


def horner_many(c, xs):
    xs = np.asarray(xs, dtype=float)
    out = np.full(xs.shape, float(c[-1]) if len(c) else 0.0)
    for k in range(len(c) - 2, -1, -1):
        out = out * xs + c[k]
    return out


def monotone_scan(t, rel_tie):
    """Classify a float sequence.

    Returns ``(code, index, ties)`` where ``index`` is the position of the
    first term breaking the established direction (``-1`` if none) and
    ``ties`` counts neighbouring pairs treated as equal.
    """
    direction = 0
    ties = 0
    for i in range(1, len(t)):
        d = t[i] - t[i - 1]
        if abs(d) <= rel_tie * max(abs(t[i]), abs(t[i - 1])):
            ties += 1
            continue
        s = 1 if d > 0 else -1
        if direction == 0:
            direction = s
        elif s != direction:
            return NOT_MONOTONE, i, ties
    return direction, -1, ties


def agm_many(a, b):
    a = np.array(a, dtype=float, copy=True)
    b = np.array(b, dtype=float, copy=True)
    for _ in range(64):
        if np.all(np.abs(a - b) <= 4e-16 * np.abs(a)):
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
    return 0.5 * (a + b)
