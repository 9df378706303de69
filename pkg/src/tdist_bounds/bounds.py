"""Closed-form upper bounds on d_KO(p) = d_KO(p, inf).

With a = 1/p the chain proven for p >= 4 is

    d_KO(p) < B(a, xt_a) < C / p,

where xt_a is the unique positive root of the polynomial P(a, .) and B is
the integral of the majorant tH2(a, .) / sqrt(2 pi) from 0 to xt_a.  The
first inequality already holds for p >= 50/29.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from scipy import optimize

from .distance import kolmogorov_distance
from .errors import DomainError, NumericError, TheoremDomainError
from .polynomial import BivariatePolynomial
from .special import (
    inverse_dof,
    log1p_minus_x,
    log_wallis_lower_L2,
    std_normal_pdf,
    wallis_lower_L2,
)

__all__ = [
    "P_POLY",
    "P_TILDE",
    "Q_POLY",
    "Q1",
    "Q2",
    "Q3",
    "P_MIN_B",
    "P_MIN_C",
    "X_TILDE_0",
    "BoundReport",
    "poly_P",
    "root_tx",
    "bound_B",
    "bound_B_at_root",
    "constant_C",
    "majorant_H",
    "majorant_tH2",
    "majorant_gap",
    "limit_density",
    "inverse_root_a",
]

_A = BivariatePolynomial.in_a([0, 1])
_S = BivariatePolynomial.in_x([-1, 0, -2, 0, 1])  # x^4 - 2x^2 - 1

Q1 = BivariatePolynomial.in_x([3, 0, 12, 0, 30, 0, -28, 0, 3])
Q2 = BivariatePolynomial.in_x(
    [-783, 0, -2952, 0, -1284, 0, 2952, 0, -234, 0, -1608, 0, 964, 0, -168, 0, 9]
)
Q3 = BivariatePolynomial.in_x([33, 0, 60, 0, -20])

# -96 (x^4-2x^2-1) - 4a (3x^8-28x^6+30x^4+12x^2+3) - a^2 (20x^4-60x^2-33)
P_POLY = -96 * _S - 4 * _A * Q1 + _A * _A * Q3
P_TILDE = 384 - _A * P_POLY
Q_POLY = -(_A * _A * _A) * Q3 - 96 * _A * _S - 768

P_MIN_B = 50 / 29
P_MIN_C = 4.0
X_TILDE_0 = math.sqrt(1.0 + math.sqrt(2.0))

def _open_unit(a: float) -> float:
    a = inverse_dof(a)
    if a == 0.0:
        raise DomainError("a must be strictly positive here")
    return a


def poly_P(a: float, x: float) -> float:
    return P_POLY(a, x)


@lru_cache(maxsize=4096)
def root_tx(a: float) -> float:
    """xt_a: the unique positive root of P(a, .); xt_0 = sqrt(1 + sqrt 2)."""
    a = inverse_dof(a)
    if a == 0.0:
        return X_TILDE_0
    # P(a, 1) = 192 - 80a + 73a^2 > 0 and P(a, 4) < 0 for every a in [0, 1)
    return optimize.brentq(lambda x: P_POLY(a, x), 1.0, 4.0, xtol=1e-16, rtol=1e-15, maxiter=200)


def bound_B(a: float, x: float) -> float:
    """B(a, x) = int_0^x tH2(a, u) du / sqrt(2 pi), in closed form."""
    a = inverse_dof(a)
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x!r}")
    x2 = x * x
    bracket = 5.0 * a * a * x2 + a * (3.0 * x2**3 - 7.0 * x2 * x2 - 5.0 * x2 - 3.0) + 24.0 * (x2 + 1.0)
    two_phi_minus_one = math.erf(x / math.sqrt(2.0))
    return a / 768.0 * (8.0 * x * bracket * std_normal_pdf(x) + 33.0 * a * a * two_phi_minus_one)


def constant_C() -> float:
    """C = (1/4) sqrt((7 + 5 sqrt 2) / (pi e^(1 + sqrt 2))) = 0.1582..."""
    r2 = math.sqrt(2.0)
    return 0.25 * math.sqrt((7.0 + 5.0 * r2) / (math.pi * math.exp(1.0 + r2)))


@dataclass(frozen=True)
class BoundReport:
    p: float
    a: float
    x_tilde: float
    bound_B: float
    bound_C_over_p: Optional[float] = None
    d_ko_exact: Optional[float] = None
    rel_err_B: Optional[float] = None
    rel_err_C: Optional[float] = None

    def chain_holds(self) -> Optional[bool]:
        """d_ko < B < C/p when all three are present; None otherwise."""
        if self.d_ko_exact is None or self.bound_C_over_p is None:
            return None
        return self.d_ko_exact < self.bound_B < self.bound_C_over_p


def bound_B_at_root(p: float, with_exact: bool = True) -> BoundReport:
    """Evaluate B(1/p, xt_{1/p}); C/p is attached only for p >= 4."""
    p = float(p)
    if math.isnan(p) or p < P_MIN_B:
        raise TheoremDomainError(f"B(a, xt_a) bounds d_KO(p) only for p >= 50/29, got p={p!r}")
    if math.isinf(p):
        raise DomainError("p = inf has distance 0; no bound to evaluate")
    a = 1.0 / p
    xt = root_tx(a)
    b = bound_B(a, xt)
    c_over_p = constant_C() / p if p >= P_MIN_C else None
    d = rel_b = rel_c = None
    if with_exact:
        d = kolmogorov_distance(p).d_ko
        rel_b = b / d - 1.0
        if c_over_p is not None:
            rel_c = c_over_p / d - 1.0
    return BoundReport(
        p=p, a=a, x_tilde=xt, bound_B=b, bound_C_over_p=c_over_p,
        d_ko_exact=d, rel_err_B=rel_b, rel_err_C=rel_c,
    )


def _log_power_term(a: float, x: float) -> float:
    # ln (1 + a x^2)^(-(1+a)/(2a))
    return -(1.0 + a) / (2.0 * a) * math.log1p(a * x * x)


def majorant_H(a: float, x: float) -> float:
    """H(a, x) = e^{-x^2/2} - L2(a) (1 + a x^2)^{-(1+a)/(2a)}."""
    a = _open_unit(a)
    return math.exp(-0.5 * x * x) - wallis_lower_L2(a) * math.exp(_log_power_term(a, x))


def majorant_tH2(a: float, x: float) -> float:
    """tH2(a, x) = a P(a, x) e^{-x^2/2} / 384."""
    a = _open_unit(a)
    return a * P_POLY(a, x) / 384.0 * math.exp(-0.5 * x * x)


def majorant_gap(a: float, x: float) -> float:
    """tH2(a, x) - H(a, x), without the cancellation of the direct difference.

    Both majorants are O(a) while their gap is of higher order in a, so the
    gap is rebuilt as -K expm1(delta) with K the Student-side term of H and
    delta a sum of small logarithms.
    """
    a = _open_unit(a)
    t = a * P_POLY(a, x) / 384.0  # P~/384 = 1 - t
    if t >= 1.0:
        return majorant_tH2(a, x) - majorant_H(a, x)
    u = a * x * x
    log_k = log_wallis_lower_L2(a) + _log_power_term(a, x)
    delta = (
        math.log1p(-t)
        - log_wallis_lower_L2(a)
        + log1p_minus_x(u) / (2.0 * a)
        + 0.5 * math.log1p(u)
    )
    return -math.exp(log_k) * math.expm1(delta)


def limit_density(x: float) -> float:
    """lim_{a -> 0} (f_{1/a}(x) - phi(x)) / a = (x^4 - 2x^2 - 1) phi(x) / 4."""
    x2 = x * x
    return (x2 * x2 - 2.0 * x2 - 1.0) / 4.0 * std_normal_pdf(x)


@lru_cache(maxsize=1)
def _x_tilde_quarter() -> float:
    return root_tx(0.25)


def inverse_root_a(x: float) -> float:
    """a_x in (0, 1/4] with P(a_x, x) = 0, for x in (xt_0, xt_{1/4}].

    a_x = 2 (q1 + sqrt q2) / q3.  Near xt_0, q1 < 0 and q1 + sqrt q2 cancels,
    so the rationalized form 48 s / (sqrt q2 - q1), s = x^4 - 2x^2 - 1, is
    used whenever q1 < 0 (q2 = q1^2 + 24 q3 s makes the two identical).
    """
    x = float(x)
    if not (X_TILDE_0 < x <= _x_tilde_quarter()):
        raise DomainError(f"x must lie in (xt_0, xt_1/4] = ({X_TILDE_0}, {_x_tilde_quarter()}], got {x!r}")
    q1 = Q1(0.0, x)
    q2 = Q2(0.0, x)
    q3 = Q3(0.0, x)
    if q3 <= 0.0:
        raise NumericError(f"q3({x!r}) = {q3!r} is not positive")
    if q2 < 0.0:
        raise NumericError(f"q2({x!r}) = {q2!r} is negative")
    root = math.sqrt(q2)
    if q1 < 0.0:
        x2 = x * x
        s = (x2 - 1.0) ** 2 - 2.0
        return 48.0 * s / (root - q1)
    return 2.0 * (q1 + root) / q3
