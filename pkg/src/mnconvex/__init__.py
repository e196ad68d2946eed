"""MN-convexity of positive-coefficient power series and special functions.

The hot loops (series summation, Horner evaluation, monotonicity scans, AGM)
live in a compiled extension; set ``MNCONVEX_PURE=1`` to force the pure
Python fallback.
"""

from __future__ import annotations

from .criteria import (
    Certificate,
    Verdict,
    certify,
    certify_bessel,
    certify_hypergeometric,
    certify_mf,
    certify_pfq,
    certify_series,
)
from .kernels import BACKEND
from .means import A, G, H, I, L, MeanFn, mean
from .numcheck import (
    ConvexityQuery,
    GridSpec,
    Witness,
    verify_claim,
    verify_gencor,
    verify_mn,
    verify_transform,
)
from .powerseries import PowerSeries, cauchy_square, evaluate, monotone_verdict, ratio_sequence
from .specialfn import (
    BesselParams,
    GeneralizedHypergeometricParams,
    HypergeometricParams,
    bessel_series,
    elliptic_k,
    gauss_2f1_series,
    generalized_pfq_series,
    hyp2f1,
    legendre,
)

__version__ = "0.1.0"

__all__ = [
    "A", "G", "H", "I", "L", "BACKEND", "BesselParams", "Certificate", "ConvexityQuery",
    "GeneralizedHypergeometricParams", "GridSpec", "HypergeometricParams", "MeanFn", "PowerSeries",
    "Verdict", "Witness", "bessel_series", "cauchy_square", "certify", "certify_bessel",
    "certify_hypergeometric", "certify_mf", "certify_pfq", "certify_series", "elliptic_k", "evaluate",
    "gauss_2f1_series", "generalized_pfq_series", "hyp2f1", "legendre", "mean", "monotone_verdict",
    "ratio_sequence", "verify_claim", "verify_gencor", "verify_mn", "verify_transform",
]
