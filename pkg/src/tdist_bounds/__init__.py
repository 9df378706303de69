"""Kolmogorov and total-variation distances between Student t laws and the
standard normal, with the closed-form bounds B(a, xt_a) and C/p and
interval-arithmetic checks of the polynomial facts behind them."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    bound_B,
    bound_B_at_root,
    constant_C,
    inverse_root_a,
    limit_density,
    majorant_H,
    majorant_tH2,
    poly_P,
    root_tx,
)
from .distance import (
    DistanceReport,
    brute_force_ko,
    crossing_point,
    kolmogorov_distance,
    tv_distance_quadrature,
)
from .distributions import density_ratio, student_cdf, student_pdf
from .errors import (
    ConvergenceError,
    DegenerateInputError,
    DomainError,
    NumericError,
    OrderingError,
    TDistError,
    TheoremDomainError,
)
from .special import (
    log_gamma,
    reg_inc_beta,
    std_normal_cdf,
    std_normal_pdf,
    wallis_lower_L2,
    wallis_ratio,
    wallis_upper_U1,
)
