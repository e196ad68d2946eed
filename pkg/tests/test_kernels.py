from __future__ import annotations

import importlib
import math
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mnconvex import _pykernels, kernels

try:
    from mnconvex import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")


def test_geometric_sum(backend):
    c = np.ones(5000)
    val, used, status = backend.series_sum(c, 0.5, 0.0, 1e-16, 0.999, 8)
    assert status == kernels.CONVERGED
    assert val == pytest.approx(2.0, rel=1e-15)
    assert used < 100


def test_exhausted_when_terms_run_out(backend):
    c = np.ones(50)
    _, used, status = backend.series_sum(c, 0.9, 0.0, 1e-16, 0.999, 8)
    assert status == kernels.EXHAUSTED
    assert used == 50


def test_nonfinite_terms_are_reported(backend):
    c = np.array([1.0, 1e308, 1e308, 1e308])
    _, _, status = backend.series_sum(c, 10.0, 0.0, 1e-16, 0.999, 2)
    assert status == kernels.NONFINITE


def test_zero_terms_do_not_fake_convergence(backend):
    # even function: odd coefficients vanish, the tail must still be summed
    c = np.zeros(170)
    c[::2] = [1.0 / math.factorial(2 * k) for k in range(85)]
    val, _, status = backend.series_sum(c, 2.0, 0.0, 1e-16, 0.999, 8)
    assert status == kernels.CONVERGED
    assert val == pytest.approx(math.cosh(2.0), rel=1e-15)


def test_monotone_codes(backend):
    assert backend.monotone_scan(np.arange(10.0), 1e-15)[:2] == (kernels.INCREASING, -1)
    assert backend.monotone_scan(-np.arange(10.0), 1e-15)[:2] == (kernels.DECREASING, -1)
    assert backend.monotone_scan(np.ones(10), 1e-15)[:2] == (kernels.CONSTANT, -1)
    t = np.array([1.0, 2.0, 3.0, 2.5, 4.0])
    assert backend.monotone_scan(t, 1e-15)[:2] == (kernels.NOT_MONOTONE, 3)


def test_monotone_ties_counted(backend):
    t = np.array([1.0, 1.0, 2.0, 2.0 * (1 + 1e-17), 3.0])
    code, index, ties = backend.monotone_scan(t, 1e-15)
    assert code == kernels.INCREASING and index == -1 and ties == 2


def test_agm(backend):
    g = backend.agm_many(np.array([1.0, 24.0]), np.array([math.sqrt(0.5), 6.0]))
    assert g[0] == pytest.approx(math.pi / (2 * 1.8540746773013719), rel=1e-15)
    assert g[1] == pytest.approx(13.458171481725615, rel=1e-15)


def test_horner_matches_polyval(backend):
    rng = np.random.default_rng(1)
    c = rng.uniform(-1, 1, 30)
    xs = rng.uniform(-1, 1, 1000)
    np.testing.assert_allclose(backend.horner_many(c, xs), np.polynomial.polynomial.polyval(xs, c), rtol=1e-12,
                               atol=1e-14)


@needs_ext
@settings(max_examples=60, deadline=None)
@given(
    coeffs=st.lists(st.floats(0.0, 10.0), min_size=1, max_size=300),
    x=st.floats(-0.95, 0.95),
)
def test_backends_agree_on_sums(coeffs, x):
    c = np.array(coeffs)
    a = _pykernels.series_sum(c, x, 0.0, 1e-16, 0.999, 8)
    b = _ckernels.series_sum(c, x, 0.0, 1e-16, 0.999, 8)
    assert a[1:] == b[1:]
    assert float(a[0]) == float(b[0])


@needs_ext
@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=200))
def test_backends_agree_on_scans(terms):
    t = np.array(terms)
    assert tuple(_pykernels.monotone_scan(t, 1e-15)) == tuple(_ckernels.monotone_scan(t, 1e-15))


@needs_ext
def test_backends_agree_on_horner_and_agm():
    rng = np.random.default_rng(7)
    c = rng.uniform(0, 1, 500)
    xs = rng.uniform(-0.99, 0.99, 3001)
    np.testing.assert_array_equal(_pykernels.horner_many(c, xs), _ckernels.horner_many(c, xs))
    a, b = rng.uniform(0.01, 100, 1000), rng.uniform(0.01, 100, 1000)
    np.testing.assert_allclose(_pykernels.agm_many(a, b), _ckernels.agm_many(a, b), rtol=1e-15)


def test_environment_switch_selects_fallback():
    code = "import mnconvex.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, MNCONVEX_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_reload_keeps_api():
    mod = importlib.reload(kernels)
    for name in ("series_sum", "horner_many", "monotone_scan", "agm_many", "BACKEND"):
        assert hasattr(mod, name)
