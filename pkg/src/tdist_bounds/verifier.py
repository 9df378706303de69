"""Machine checks of the sign facts and inequalities behind the bounds.

Polynomial facts are certified on boxes with interval arithmetic and
adaptive bisection (sound, but incomplete: a failure to prove is reported as
``undecided``, never as an error).  Facts involving exp, log or Phi are only
checked on grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .bounds import (
    P_POLY,
    P_TILDE,
    Q3,
    X_TILDE_0,
    constant_C,
    majorant_gap,
    root_tx,
)
from .distance import kolmogorov_distance
from .distributions import student_logpdf
from .errors import DomainError
from .interval import Box, Interval
from .polynomial import BivariatePolynomial
from .special import (
    LOG_SQRT_2PI,
    log_wallis_lower_L2,
    log_wallis_ratio,
    log_wallis_upper_U1,
)

__all__ = [
    "PROVEN",
    "REFUTED",
    "UNDECIDED",
    "SignCertificate",
    "GridReport",
    "LimitTable",
    "CheckResult",
    "SUITES",
    "interval_eval",
    "prove_sign",
    "certify_root_isolation",
    "check_H_lt_tH2",
    "check_H_dominates",
    "check_wallis",
    "limit_convergence",
    "run_suite",
]

PROVEN = "proven"
REFUTED = "refuted"
UNDECIDED = "undecided"

_CLAIMS = ("positive", "negative")
_BOX_A_MAX = Fraction(29, 50)
_BOX_X_MAX = Fraction(123, 50)
_BOX_FLOOR = 1e-9


def _interval_rows(poly: BivariatePolynomial) -> list[list[Interval]]:
    return [[Interval.enclose(c) for c in row] for row in poly.rows()]


def interval_eval(poly: BivariatePolynomial, box: Box, _rows=None) -> Interval:
    """Enclosure of poly over the box: Horner in a per power of x, then Horner in x."""
    rows = _rows if _rows is not None else _interval_rows(poly)
    a, x = box.a_range, box.x_range
    acc = Interval.enclose(0)
    for row in reversed(rows):
        c = row[-1]
        for coef in reversed(row[:-1]):
            c = c * a + coef
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class SignCertificate:
    claim: str
    box: Box
    status: str
    depth_reached: int
    boxes_examined: int
    witness: Optional[tuple[float, float]] = None
    witness_value: Optional[Fraction] = None
    label: str = ""
    note: str = ""

    @property
    def proven(self) -> bool:
        return self.status == PROVEN

    def report(self) -> str:
        lines = [
            f"claim: {self.label or 'poly'} {'>' if self.claim == 'positive' else '<'} 0",
            f"box: {self.box}",
            f"status: {self.status}",
            f"depth: {self.depth_reached}",
            f"boxes_examined: {self.boxes_examined}",
        ]
        if self.witness is not None:
            a, x = self.witness
            lines.append(f"witness: a={a!r} x={x!r} value={float(self.witness_value)!r}")
        if self.note:
            lines.append(f"note: {self.note}")
        return "\n".join(lines)


def _violates(value: Fraction, claim: str) -> bool:
    return value <= 0 if claim == "positive" else value >= 0


def prove_sign(
    poly: BivariatePolynomial,
    box: Box,
    claim: str = "positive",
    max_depth: int = 40,
    label: str = "",
    note: str = "",
) -> SignCertificate:
    """Try to prove that poly has the claimed strict sign on the whole box.

    Boxes are bisected along their longest edge.  A box is discharged once
    its enclosure has the claimed sign.  Otherwise its midpoint is evaluated
    exactly in rationals; a violation there refutes the claim with that
    witness.  Boxes still open at ``max_depth`` leave the result undecided.
    Traversal is depth-first in a fixed order, so results are reproducible.
    """
    if claim not in _CLAIMS:
        raise ValueError(f"claim must be one of {_CLAIMS}, got {claim!r}")
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    rows = _interval_rows(poly)
    holds = Interval.positive if claim == "positive" else Interval.negative

    stack = [(box, 0)]
    examined = 0
    deepest = 0
    undecided = False
    while stack:
        current, depth = stack.pop()
        examined += 1
        deepest = max(deepest, depth)
        if holds(interval_eval(poly, current, rows)):
            continue
        ma, mx = current.midpoint
        value = poly.exact(ma, mx)
        if _violates(value, claim):
            return SignCertificate(
                claim, box, REFUTED, deepest, examined, (ma, mx), value, label, note
            )
        if depth >= max_depth:
            undecided = True
            continue
        left, right = current.split()
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    status = UNDECIDED if undecided else PROVEN
    return SignCertificate(claim, box, status, deepest, examined, None, None, label, note)


def certify_root_isolation(a: float, margin: float, max_depth: int = 40) -> tuple[SignCertificate, SignCertificate]:
    """Certify P(a, .) > 0 on [1e-6, xt_a - margin] and P(a, .) < 0 on [xt_a + margin, 10]."""
    a = float(a)
    if not (0.0 < a < 1.0):
        raise DomainError(f"a must lie in (0, 1), got {a!r}")
    if not (0.0 < margin < 0.5):
        raise DomainError(f"margin must lie in (0, 0.5), got {margin!r}")
    xt = root_tx(a)
    left = Box.exact(a, a, 1e-6, xt - margin)
    right = Box.exact(a, a, xt + margin, 10.0)
    return (
        prove_sign(P_POLY, left, "positive", max_depth, label=f"P({a!r}, x)"),
        prove_sign(P_POLY, right, "negative", max_depth, label=f"P({a!r}, x)"),
    )


@dataclass(frozen=True)
class GridReport:
    name: str
    passed: bool
    points: int
    min_gap: float
    argmin: tuple[float, float]
    witness: Optional[tuple[float, float]] = None


def _grid_check(name: str, gap, a_values: Sequence[float], x_values: Sequence[float]) -> GridReport:
    best = (math.inf, (math.nan, math.nan))
    witness = None
    count = 0
    for a in a_values:
        for x in x_values:
            g = gap(a, x)
            count += 1
            if g < best[0]:
                best = (g, (a, x))
            if not g > 0.0 and witness is None:
                witness = (a, x)
    return GridReport(name, witness is None, count, best[0], best[1], witness)


def _majorant_grid(grid_a: int, grid_x: int) -> tuple[list[float], list[float]]:
    if grid_a < 50 or grid_x < 50:
        raise ValueError("grid sizes must be at least 50")
    a_max, x_max = float(_BOX_A_MAX), float(_BOX_X_MAX)
    a_values = [a_max * i / grid_a for i in range(1, grid_a + 1)]
    x_values = [x_max * j / (grid_x + 1) for j in range(1, grid_x + 1)]
    return a_values, x_values


def check_H_lt_tH2(grid_a: int = 200, grid_x: int = 200) -> GridReport:
    """H(a, x) < tH2(a, x) on a grid of (0, 29/50] x (0, 123/50)."""
    a_values, x_values = _majorant_grid(grid_a, grid_x)
    return _grid_check("H < tH2", majorant_gap, a_values, x_values)


def _dominance_gap(a: float, x: float) -> float:
    # H(a, x) - sqrt(2 pi) (phi(x) - f_p(x)) = sqrt(2 pi) f_p(x) - L2(a) (1 + a x^2)^(-(1+a)/(2a))
    p = 1.0 / a
    log_student = student_logpdf(p, x) + LOG_SQRT_2PI
    log_bound = log_wallis_lower_L2(a) - (1.0 + a) / (2.0 * a) * math.log1p(a * x * x)
    return math.exp(log_bound) * math.expm1(log_student - log_bound)


def check_H_dominates(grid_a: int = 200, grid_x: int = 200) -> GridReport:
    """sqrt(2 pi) (phi(x) - f_p(x)) < H(1/p, x) on the same grid as ``check_H_lt_tH2``."""
    a_values, x_values = _majorant_grid(grid_a, grid_x)
    return _grid_check("sqrt(2pi)(phi - f_p) < H", _dominance_gap, a_values, x_values)


def check_wallis(ks: Iterable[int] = range(-1, 21)) -> GridReport:
    """L2(1/p) < r_p(0) < U1(1/p) for p = 2^k, compared in log space.

    At p = 2^20 the lower gap is about 1e-19 relative, below double
    resolution of the ratios themselves but not of their logarithms.
    """
    best = (math.inf, (math.nan, math.nan))
    witness = None
    count = 0
    for k in ks:
        p = 2.0**k
        a = 1.0 / p
        lr = log_wallis_ratio(p)
        g = min(lr - log_wallis_lower_L2(a), log_wallis_upper_U1(a) - lr)
        count += 1
        if g < best[0]:
            best = (g, (a, 0.0))
        if not g > 0.0 and witness is None:
            witness = (a, 0.0)
    return GridReport("L2 < r_p(0) < U1", witness is None, count, best[0], best[1], witness)


@dataclass(frozen=True)
class LimitRow:
    p: float
    scaled: float
    gap_to_C: float


@dataclass(frozen=True)
class LimitTable:
    rows: tuple[LimitRow, ...]
    below_C: bool
    increasing: bool
    gap_decreasing: bool

    @property
    def passed(self) -> bool:
        return self.below_C and self.increasing and self.gap_decreasing


def limit_convergence(p_values: Sequence[float]) -> LimitTable:
    """Rows (p, p d_KO(p), C - p d_KO(p)) and the monotone-approach flags."""
    ps = [float(p) for p in p_values]
    if not ps or any(p < 4.0 for p in ps):
        raise DomainError("limit table needs p >= 4")
    if any(b <= a for a, b in zip(ps, ps[1:])):
        raise DomainError("p values must be strictly ascending")
    c = constant_C()
    rows = []
    for p in ps:
        scaled = p * kolmogorov_distance(p).d_ko
        rows.append(LimitRow(p, scaled, c - scaled))
    below = all(r.gap_to_C > 0.0 for r in rows)
    increasing = all(r1.scaled < r2.scaled for r1, r2 in zip(rows, rows[1:]))
    gap_dec = all(r1.gap_to_C > r2.gap_to_C for r1, r2 in zip(rows, rows[1:]))
    return LimitTable(tuple(rows), below, increasing, gap_dec)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[str] = None

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f" witness: {self.witness}" if self.witness else ""
        return f"[{tag}] {self.name}: {self.detail}{extra}"


def _from_grid(report: GridReport) -> CheckResult:
    detail = f"{report.points} points, min gap {report.min_gap:.6g} at (a, x) = {report.argmin}"
    witness = None if report.witness is None else f"(a, x) = {report.witness}"
    return CheckResult(report.name, report.passed, detail, witness)


def _from_cert(cert: SignCertificate) -> CheckResult:
    detail = f"{cert.status}, depth {cert.depth_reached}, {cert.boxes_examined} boxes, box {cert.box}"
    witness = None
    if cert.witness is not None:
        witness = f"(a, x) = {cert.witness}, value {float(cert.witness_value):.6g}"
    sign = ">" if cert.claim == "positive" else "<"
    return CheckResult(f"{cert.label} {sign} 0", cert.proven, detail, witness)


def _suite_wallis() -> list[CheckResult]:
    return [_from_grid(check_wallis())]


def _suite_signs() -> list[CheckResult]:
    results = []
    box = Box.of(_BOX_FLOOR, _BOX_A_MAX, _BOX_FLOOR, _BOX_X_MAX)
    results.append(_from_cert(prove_sign(
        P_TILDE, box, "positive", 40, label="P~(a, x)",
        note="a -> 0 edge covered analytically: P~(0, x) = 384",
    )))
    xbox = Box.of(0, 0, X_TILDE_0 + 1e-6, root_tx(0.25))
    results.append(_from_cert(prove_sign(Q3, xbox, "positive", 40, label="q3(x)")))
    for a in (0.1, 0.25, 0.5):
        for cert in certify_root_isolation(a, 0.01):
            results.append(_from_cert(cert))
    value = P_POLY.exact(_BOX_A_MAX, _BOX_X_MAX)
    results.append(CheckResult(
        "P(29/50, 123/50) < 0 (exact rational)", value < 0, f"value {float(value):.6g}"
    ))
    return results


def _suite_hlt() -> list[CheckResult]:
    return [_from_grid(check_H_lt_tH2(200, 200)), _from_grid(check_H_dominates(200, 200))]


def _suite_limit() -> list[CheckResult]:
    table = limit_convergence([4, 12, 1e2, 1e3, 1e4])
    body = "; ".join(f"p={r.p:g}: p*d={r.scaled:.10f}, C-p*d={r.gap_to_C:.3e}" for r in table.rows)
    results = [CheckResult("p d_KO(p) increases toward C", table.passed, body)]
    c = constant_C()
    for p, limit in ((4.0, 0.07), (12.0, 0.015), (1e4, 0.001)):
        d = kolmogorov_distance(p).d_ko
        rel = (c / p) / d - 1.0
        results.append(CheckResult(f"(C/p)/d_KO(p) - 1 at p={p:g} below {limit:g}", 0.0 < rel < limit, f"{rel:.6g}"))
    return results


SUITES = {
    "wallis": _suite_wallis,
    "signs": _suite_signs,
    "hlt": _suite_hlt,
    "limit": _suite_limit,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        return [r for key in SUITES for r in SUITES[key]()]
    try:
        suite = SUITES[name]
    except KeyError:
        raise DomainError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}") from None
    return suite()
