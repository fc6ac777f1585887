from fractions import Fraction

import pytest

from qcumulants.algebra import (
    Polynomial,
    SeriesKind,
    TruncatedSeries,
    lagrange_interpolate,
    poly_coefficient,
    series_compose,
    series_reciprocal,
)
from qcumulants.errors import PreconditionError

from helpers import rand_fraction, seeded


def test_polynomial_normalization_and_degree():
    p = Polynomial((1, 2, 0, 0))
    assert p.coefficients == (Fraction(1), Fraction(2))
    assert p.degree == 1
    zero = Polynomial(())
    assert zero.degree is None
    assert Polynomial((0, 0)).degree is None
    assert Polynomial((0, 0)) == zero


def test_polynomial_equality_ignores_display_name():
    assert Polynomial((0, 1), "t") == Polynomial((0, 1), "N")
    assert Polynomial((5,)) == 5
    assert Polynomial((5,)) != Polynomial((5, 1))


def test_poly_coefficient_examples():
    n_squared = Polynomial((0, 0, 1), "N")
    assert poly_coefficient(n_squared, 1) == 0
    m4_of_bernoulli = Polynomial((0, Fraction(-1, 2), Fraction(3, 2)), "N")
    assert poly_coefficient(m4_of_bernoulli, 1) == Fraction(-1, 2)
    assert poly_coefficient(Polynomial(()), 7) == 0
    with pytest.raises(PreconditionError):
        poly_coefficient(n_squared, -1)


def test_polynomial_arithmetic_and_evaluation():
    p = Polynomial((1, 2))        # 1 + 2x
    q = Polynomial((0, 0, 3))     # 3x^2
    assert p + q == Polynomial((1, 2, 3))
    assert p - p == Polynomial(())
    assert p * q == Polynomial((0, 0, 3, 6))
    assert 2 * p == Polynomial((2, 4))
    assert (p * q)(Fraction(1, 2)) == Fraction(3, 4) + Fraction(6, 8)
    assert sum([p, q]) == p + q  # __radd__ with int 0


def test_polynomial_integral_is_exact():
    p = Polynomial((0, 0, 3), "t")  # 3t^2
    assert p.integral() == Polynomial((0, 0, 0, 1), "t")
    assert Polynomial((1,)).integral() == Polynomial((0, 1))
    assert Polynomial(()).integral() == Polynomial(())


def test_lagrange_parabola_and_line():
    assert lagrange_interpolate([(0, 0), (1, 1), (2, 4)], var="N") == Polynomial((0, 0, 1))
    assert lagrange_interpolate([(0, 0), (1, 1), (2, 2)]) == Polynomial((0, 1))
    assert lagrange_interpolate([(3, 7)]) == Polynomial((7,))


def test_lagrange_reproduces_sample_points_exactly():
    rng = seeded(11)
    for _ in range(20):
        xs = rng.sample(range(-8, 9), 5)
        points = [(Fraction(x), rand_fraction(rng)) for x in xs]
        poly = lagrange_interpolate(points)
        for x, y in points:
            assert poly(x) == y


def test_lagrange_rejects_duplicate_abscissae():
    with pytest.raises(PreconditionError):
        lagrange_interpolate([(1, 2), (1, 3)])
    with pytest.raises(PreconditionError):
        lagrange_interpolate([])


def test_reciprocal_of_point_mass_series():
    # delta_0 has moments (1, 0, 0, ...): G = 1/z, H = z
    g = TruncatedSeries.power_at_infinity((1, 0, 0, 0))
    h = series_reciprocal(g)
    assert h.kind is SeriesKind.RECIPROCAL
    assert h.coefficients == (Fraction(0),) * 3
    # delta_1 has all moments 1: H = z - 1 up to truncation
    g1 = TruncatedSeries.power_at_infinity((1, 1, 1, 1, 1))
    assert series_reciprocal(g1).coefficients == (Fraction(-1), 0, 0, 0)


def test_reciprocal_of_arcsine_prefix():
    # moments (1, 0, 1, 0, 3/2) invert to z - 1/z - (1/2)z^-3
    g = TruncatedSeries.power_at_infinity((1, 0, 1, 0, Fraction(3, 2)))
    h = series_reciprocal(g)
    assert h.coefficients == (0, Fraction(-1), 0, Fraction(-1, 2))


def test_reciprocal_requires_unit_leading_moment():
    with pytest.raises(PreconditionError):
        series_reciprocal(TruncatedSeries.power_at_infinity((2, 0, 0)))


def test_reciprocal_round_trip_is_exact():
    rng = seeded(23)
    for _ in range(25):
        coeffs = (Fraction(1),) + tuple(rand_fraction(rng) for _ in range(8))
        g = TruncatedSeries.power_at_infinity(coeffs)
        assert series_reciprocal(series_reciprocal(g)) == g
        tail = tuple(rand_fraction(rng) for _ in range(8))
        h = TruncatedSeries.reciprocal(tail)
        assert series_reciprocal(series_reciprocal(h)) == h


def test_compose_point_masses():
    h1 = TruncatedSeries.reciprocal((Fraction(-1), 0, 0, 0))
    h2 = series_compose(h1, h1)
    assert h2.coefficients == (Fraction(-2), 0, 0, 0)


def test_compose_identity_units():
    rng = seeded(31)
    identity = TruncatedSeries.reciprocal((Fraction(0),) * 6)
    f = TruncatedSeries.reciprocal(tuple(rand_fraction(rng) for _ in range(6)))
    assert series_compose(f, identity) == f
    assert series_compose(identity, f) == f


def test_compose_is_associative_up_to_truncation():
    rng = seeded(37)
    for _ in range(15):
        f, g, h = (
            TruncatedSeries.reciprocal(tuple(rand_fraction(rng) for _ in range(10)))
            for _ in range(3)
        )
        assert series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h))


def test_compose_mixes_orders_to_minimum():
    f = TruncatedSeries.reciprocal((Fraction(1), Fraction(2), Fraction(3)))
    g = TruncatedSeries.reciprocal((Fraction(4), Fraction(5)))
    assert series_compose(f, g).order == 2


def test_compose_rejects_power_series_operands():
    g = TruncatedSeries.power_at_infinity((1, 0, 0))
    with pytest.raises(PreconditionError):
        series_compose(g, g)


def test_series_shape_validation():
    with pytest.raises(PreconditionError):
        TruncatedSeries(SeriesKind.POWER_AT_INFINITY, (1, 0), 2)
    with pytest.raises(PreconditionError):
        TruncatedSeries(SeriesKind.RECIPROCAL, (1, 0), 3)
