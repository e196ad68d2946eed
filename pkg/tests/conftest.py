from __future__ import annotations

import pytest

from mnconvex import _pykernels

try:
    from mnconvex import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
