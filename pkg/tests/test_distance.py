import math
import random

import pytest

from tdist_bounds.distance import (
    brute_force_ko,
    crossing_point,
    kolmogorov_distance,
    tv_distance_quadrature,
)
from tdist_bounds.distributions import student_pdf
from tdist_bounds.errors import DegenerateInputError, OrderingError

INF = math.inf

# Frozen from mpmath (40 digits): findroot on f_p - f_q, cdfs by quadrature.
CROSSING = {
    (1, INF): 1.8512291248772523350,
    (4, INF): 1.6465704067586726353,
    (4, 12): 1.6916898473095708109,
    (1, 2): 2.3182661372256407671,
    (2, 3): 1.9441282971483052580,
}
D_KO = {
    (1, INF): 0.12558227714442553949,
    (4, INF): 0.037672681289356367588,
    (4, 12): 0.024738365628194217416,
    (1, 2): 0.056475327098809664295,
    (2, 3): 0.022103790868300896615,
}


@pytest.mark.parametrize("pair", sorted(CROSSING, key=str))
def test_crossing_point_matches_oracle(pair):
    assert crossing_point(*pair) == pytest.approx(CROSSING[pair], rel=1e-13)


def test_crossing_errors():
    with pytest.raises(DegenerateInputError):
        crossing_point(4, 4)
    with pytest.raises(OrderingError):
        crossing_point(5, 4)
    with pytest.raises(OrderingError):
        crossing_point(INF, 4)


@pytest.mark.parametrize("pair", sorted(D_KO, key=str))
def test_kolmogorov_distance_matches_oracle(pair):
    report = kolmogorov_distance(*pair)
    assert report.d_ko == pytest.approx(D_KO[pair], abs=1e-14)
    assert report.d_tv == 2 * report.d_ko
    assert report.crossing > 1


def test_cauchy_closed_form():
    # Phi(x) - 1/2 - arctan(x)/pi at the crossing
    x = kolmogorov_distance(1).crossing
    expected = 0.5 * math.erfc(-x / math.sqrt(2)) - 0.5 - math.atan(x) / math.pi
    assert kolmogorov_distance(1).d_ko == pytest.approx(expected, abs=1e-15)


def test_finite_q_closer_than_normal():
    assert kolmogorov_distance(4, 12).d_ko < kolmogorov_distance(4).d_ko


def test_small_p_supported():
    r = kolmogorov_distance(0.3)
    assert 0 < r.d_ko < 1 and r.crossing > 1


@pytest.mark.parametrize("p", [1, 4, 20])
@pytest.mark.parametrize("q_factor", [2, INF])
def test_single_sign_change(p, q_factor):
    q = p * q_factor
    xc = crossing_point(p, q)
    xs = [3 * xc * (i + 0.5) / 2000 for i in range(2000)]
    signs = [student_pdf(q, x) - student_pdf(p, x) > 0 for x in xs]
    changes = [i for i in range(1, len(signs)) if signs[i] != signs[i - 1]]
    assert len(changes) == 1
    assert signs[0] and not signs[-1]


def test_monotone_in_p_and_q():
    ps = [1, 2, 4, 8]
    for p in ps:
        values = [kolmogorov_distance(p, q).d_ko for q in (2 * p, 4 * p, INF)]
        assert values[0] < values[1] < values[2]
    for q in (16, 32, INF):
        values = [kolmogorov_distance(p, q).d_ko for p in ps]
        assert all(u > v for u, v in zip(values, values[1:]))


def test_decreasing_to_zero():
    values = [kolmogorov_distance(p).d_ko for p in (1, 2, 4, 8, 16, 32, 1e6)]
    assert all(u > v for u, v in zip(values, values[1:]))
    assert values[-1] < 1e-6


def test_brute_force_oracle():
    for pair, expected in [((4, INF), D_KO[(4, INF)]), ((1, INF), D_KO[(1, INF)])]:
        assert brute_force_ko(*pair, grid_size=10_000) == pytest.approx(expected, abs=1e-10)
    assert brute_force_ko(2, 3, 200) == pytest.approx(D_KO[(2, 3)], abs=1e-10)
    with pytest.raises(ValueError):
        brute_force_ko(2, 3, 50)


def test_tv_quadrature():
    assert tv_distance_quadrature(4) == pytest.approx(2 * kolmogorov_distance(4).d_ko, abs=1e-8)
    assert tv_distance_quadrature(2, 3) == pytest.approx(2 * brute_force_ko(2, 3, 1000), abs=1e-8)
    assert tv_distance_quadrature(1, 2) == pytest.approx(2 * D_KO[(1, 2)], abs=1e-8)
    with pytest.raises(DegenerateInputError):
        tv_distance_quadrature(3, 3)


def test_method_matches_brute_force_random_pairs():
    rng = random.Random(7)
    for _ in range(8):
        p = 10 ** rng.uniform(0, 1.5)
        q = INF if rng.random() < 0.3 else p * (1 + 5 * rng.random())
        assert abs(kolmogorov_distance(p, q).d_ko - brute_force_ko(p, q, 2000)) <= 1e-10
