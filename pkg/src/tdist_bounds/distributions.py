"""Student t density and distribution function for real p > 0, with p = inf as the normal law.

Degrees of freedom are plain floats; ``math.inf`` selects the standard normal
and is dispatched explicitly, never approximated by a large finite p.
"""

from __future__ import annotations

import math

from .errors import DegenerateInputError, DomainError
from .special import (
    LOG_SQRT_2PI,
    log_gamma_half_ratio,
    reg_inc_beta_pair,
    std_normal_cdf,
    std_normal_pdf,
    std_normal_sf,
)

__all__ = [
    "INF",
    "dof",
    "student_logpdf",
    "student_pdf",
    "student_cdf",
    "student_sf",
    "density_ratio",
    "log_density_ratio",
]

INF = math.inf


def dof(p) -> float:
    """Parse a degrees-of-freedom value: positive finite float, or infinity.

    Accepts numbers and the strings ``"inf"`` / ``"infinity"``.
    """
    if isinstance(p, str):
        text = p.strip().lower()
        if text in ("inf", "infinity", "+inf"):
            return INF
        try:
            p = float(text)
        except ValueError:
            raise DomainError(f"not a degrees-of-freedom value: {p!r}") from None
    p = float(p)
    if math.isnan(p) or p <= 0.0:
        raise DomainError(f"degrees of freedom must be positive, got {p!r}")
    return p


def _log_norm_const(p: float) -> float:
    # ln[Gamma((p+1)/2) / (sqrt(pi p) Gamma(p/2))]
    return log_gamma_half_ratio(0.5 * p) - 0.5 * math.log(math.pi * p)


def student_logpdf(p: float, x: float) -> float:
    p = dof(p)
    if math.isinf(p):
        return -0.5 * x * x - LOG_SQRT_2PI
    return _log_norm_const(p) - 0.5 * (p + 1.0) * math.log1p(x * x / p)


def student_pdf(p: float, x: float) -> float:
    """Density f_p(x); f_inf is the standard normal density."""
    p = dof(p)
    if math.isinf(p):
        return std_normal_pdf(x)
    return math.exp(student_logpdf(p, x))


def _upper_tail(p: float, x: float) -> float:
    # P(T > x) for x >= 0, finite p
    xx = x * x
    denom = p + xx
    return 0.5 * reg_inc_beta_pair(p / denom, xx / denom, 0.5 * p, 0.5)


def student_sf(p: float, x: float) -> float:
    """Survival function 1 - F_p(x)."""
    p = dof(p)
    if math.isinf(p):
        return std_normal_sf(x)
    if x >= 0.0:
        return _upper_tail(p, x)
    return 1.0 - _upper_tail(p, -x)


def student_cdf(p: float, x: float) -> float:
    """Distribution function F_p(x), via the regularized incomplete beta.

    For x >= 0, F_p(x) = 1 - I_{p/(p+x^2)}(p/2, 1/2) / 2; negative x by symmetry.
    """
    p = dof(p)
    if math.isinf(p):
        return std_normal_cdf(x)
    if x >= 0.0:
        return 1.0 - _upper_tail(p, x)
    return _upper_tail(p, -x)


def log_density_ratio(p: float, q: float, x: float) -> float:
    p, q = dof(p), dof(q)
    if p == q:
        raise DegenerateInputError(f"density ratio of a law with itself (p = q = {p!r})")
    return student_logpdf(p, x) - student_logpdf(q, x)


def density_ratio(p: float, q: float, x: float) -> float:
    """r_{p,q}(x) = f_p(x) / f_q(x), formed in log space."""
    return math.exp(log_density_ratio(p, q, x))
