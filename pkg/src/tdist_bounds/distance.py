"""Kolmogorov and total-variation distances between Student(p) and Student(q).

For 0 < p < q <= inf the densities cross exactly once on (0, inf), at a point
x_{p,q} > 1, and the Kolmogorov distance is attained there:

    d_KO(p, q) = F_q(x_{p,q}) - F_p(x_{p,q}),   d_TV(p, q) = 2 d_KO(p, q).

``brute_force_ko`` and ``tv_distance_quadrature`` recompute the same numbers
by routes that never use the crossing-point formula for the distance, and
serve as oracles in the tests.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize

from .distributions import dof, log_density_ratio, student_cdf, student_pdf, student_sf
from .errors import DegenerateInputError, NumericError, OrderingError

__all__ = [
    "DistanceReport",
    "ordered_pair",
    "crossing_point",
    "kolmogorov_distance",
    "brute_force_ko",
    "tv_distance_quadrature",
]

_BRACKET_START = 4.0
_BRACKET_LIMIT = 1e6
_ROOT_RTOL = 1e-13
_GRID_RIGHT = 20.0
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class DistanceReport:
    p: float
    q: float
    crossing: float
    d_ko: float
    d_tv: float


def ordered_pair(p, q) -> tuple[float, float]:
    """Validate 0 < p < q <= inf and return the pair as floats."""
    p, q = dof(p), dof(q)
    if p == q:
        raise DegenerateInputError(f"degenerate pair: p = q = {p!r}")
    if p > q:
        raise OrderingError(f"expected p < q, got p={p!r}, q={q!r}")
    return p, q


def crossing_point(p, q) -> float:
    """The unique x > 1 where f_p(x) = f_q(x)."""
    p, q = ordered_pair(p, q)

    def g(x: float) -> float:
        return log_density_ratio(p, q, x)

    lo, hi = 1.0, _BRACKET_START
    while g(hi) <= 0.0:
        lo, hi = hi, 2.0 * hi
        if hi > _BRACKET_LIMIT:
            raise NumericError(
                f"no sign change of ln r_(p,q) below x = {_BRACKET_LIMIT:g} (p={p!r}, q={q!r})"
            )
    if g(lo) >= 0.0:
        raise NumericError(f"density ratio not below 1 at x = {lo!r} (p={p!r}, q={q!r})")
    return optimize.brentq(g, lo, hi, xtol=1e-15, rtol=_ROOT_RTOL, maxiter=200)


def kolmogorov_distance(p, q=math.inf) -> DistanceReport:
    """Exact d_KO and d_TV from the crossing point."""
    p, q = ordered_pair(p, q)
    x = crossing_point(p, q)
    # tails rather than cdfs: the difference is small and the tails are not near 1
    d_ko = student_sf(p, x) - student_sf(q, x)
    return DistanceReport(p=p, q=q, crossing=x, d_ko=d_ko, d_tv=2.0 * d_ko)


def _golden_max(f, lo: float, hi: float, tol: float = 1e-10, maxiter: int = 200) -> tuple[float, float]:
    c = hi - _GOLDEN * (hi - lo)
    d = lo + _GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if hi - lo <= tol * (1.0 + abs(c)):
            break
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _GOLDEN * (hi - lo)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def brute_force_ko(p, q=math.inf, grid_size: int = 10_000) -> float:
    """sup_x (F_q(x) - F_p(x)) by a grid on (0, 20] and golden-section refinement.

    Independent of the crossing point; used as an oracle for
    ``kolmogorov_distance``.
    """
    p, q = ordered_pair(p, q)
    if grid_size < 100:
        raise ValueError(f"grid_size must be at least 100, got {grid_size}")

    def diff(x: float) -> float:
        return student_sf(p, x) - student_sf(q, x)

    xs = np.linspace(_GRID_RIGHT / grid_size, _GRID_RIGHT, grid_size)
    values = np.fromiter((diff(x) for x in xs), dtype=float, count=grid_size)
    i = int(np.argmax(values))
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, grid_size - 1)]
    _, best = _golden_max(diff, float(lo), float(hi))
    return max(best, float(values[i]))


def _quad(f, a: float, b: float) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, _ = integrate.quad(f, a, b, epsabs=1e-13, epsrel=1e-12, limit=500)
        except integrate.IntegrationWarning as exc:
            raise NumericError(f"quadrature did not converge on [{a}, {b}]: {exc}") from None
    return value


def tv_distance_quadrature(p, q=math.inf) -> float:
    """d_TV = (1/2) int |f_p - f_q| by adaptive quadrature, split at +-x_{p,q}.

    By symmetry this is int_0^x (f_q - f_p) + int_x^inf (f_p - f_q).
    """
    p, q = ordered_pair(p, q)
    x = crossing_point(p, q)

    def gap(u: float) -> float:
        return abs(student_pdf(p, u) - student_pdf(q, u))

    return _quad(gap, 0.0, x) + _quad(gap, x, math.inf)
