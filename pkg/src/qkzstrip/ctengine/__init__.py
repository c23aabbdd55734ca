"""Constant-term components of the homogeneous solution and their checks."""

from .integrals import (
    ClosingIndex,
    TauLimits,
    binom,
    canonical_caps,
    canonical_closings,
    check_limits,
    expand,
    integrand_factors,
    k_batch,
    k_even,
    k_odd,
    tau_bound,
    tau_limits_even,
    tau_limits_odd,
)
from .kernel import BACKEND, available_backends
from .lemmas import LemmaReport, verify_lemma_suite

__all__ = [
    "BACKEND",
    "ClosingIndex",
    "LemmaReport",
    "TauLimits",
    "available_backends",
    "binom",
    "canonical_caps",
    "canonical_closings",
    "check_limits",
    "expand",
    "integrand_factors",
    "k_batch",
    "k_even",
    "k_odd",
    "tau_bound",
    "tau_limits_even",
    "tau_limits_odd",
    "verify_lemma_suite",
]
