from fractions import Fraction
from math import factorial

import pytest

from qcumulants.cumulants import (
    CumulantSequence,
    MomentSequence,
    constant_cumulants,
    moments_from_monotone_cumulants,
    moments_from_partition_sum,
    monotone_cumulants_from_moments,
)
from qcumulants.convolution import dot_power
from qcumulants.errors import PreconditionError
from qcumulants.limits import (
    ConvergenceTable,
    arcsine_moments,
    clt_convergence_table,
    clt_step,
    monotone_poisson_moments,
    poisson_base,
    poisson_convergence_table,
)
from qcumulants.partitions import IndependenceKind
from qcumulants.rationals import decimal_string

from helpers import odd_double_factorial, rand_fraction, seeded, symmetric_bernoulli

MONO = IndependenceKind.MONOTONE


def test_arcsine_closed_form():
    m = arcsine_moments(10)
    assert m.moment(2) == 1
    assert m.moment(4) == Fraction(3, 2)
    assert m.moment(6) == Fraction(5, 2)
    assert m.moment(8) == Fraction(35, 8)
    assert all(m.moment(k) == 0 for k in range(1, 11, 2))
    for mm in range(1, 6):
        assert m.moment(2 * mm) == Fraction(odd_double_factorial(mm), factorial(mm))


def test_arcsine_agrees_with_cumulant_and_partition_routes():
    values = [Fraction(0)] * 10
    values[1] = Fraction(1)
    r = CumulantSequence(MONO, tuple(values))
    assert arcsine_moments(10) == moments_from_monotone_cumulants(r, 10)
    assert arcsine_moments(10) == moments_from_partition_sum(r, 10)


def test_monotone_poisson_closed_sum():
    m = monotone_poisson_moments(1, 4)
    assert m.moments == (1, 1, 2, Fraction(9, 2), Fraction(65, 6))
    assert monotone_poisson_moments(0, 4).moments == (1, 0, 0, 0, 0)


def test_monotone_poisson_agrees_with_cumulant_and_partition_routes():
    for lam in (Fraction(1), Fraction(1, 2), Fraction(3)):
        closed = monotone_poisson_moments(lam, 8)
        r = constant_cumulants(MONO, lam, 8)
        assert closed == moments_from_monotone_cumulants(r, 8)
        assert closed == moments_from_partition_sum(r, 8)


def test_clt_step_examples():
    bernoulli = symmetric_bernoulli(4)
    assert clt_step(bernoulli, 1) == bernoulli
    stepped = clt_step(bernoulli, 2)
    assert stepped.moment(4) == Fraction(11, 8)
    assert stepped.moment(2) == 1


def test_clt_step_output_always_standardized():
    rng = seeded(311)
    for _ in range(5):
        x = MomentSequence((1, 0, 1) + tuple(rand_fraction(rng) for _ in range(4)))
        for s in (1, 2, 3):
            out = clt_step(x, s)
            assert out.moment(1) == 0
            assert out.moment(2) == 1


def test_clt_step_preconditions():
    with pytest.raises(PreconditionError):
        clt_step(MomentSequence((1, 1, 1, 0, 0)), 2)  # nonzero mean
    with pytest.raises(PreconditionError):
        clt_step(MomentSequence((1, 0, 2, 0, 0)), 2)  # variance != 1
    with pytest.raises(PreconditionError):
        clt_step(symmetric_bernoulli(4), 0)


def test_clt_table_exact_rate_for_bernoulli():
    table = clt_convergence_table(symmetric_bernoulli(4), (1, 2, 4, 8), (2, 3, 4))
    diffs = {(s, n): diff for s, n, _, _, diff in table.rows}
    assert diffs[(1, 4)] == Fraction(-1, 2)
    assert diffs[(2, 4)] == Fraction(-1, 8)
    assert diffs[(4, 4)] == Fraction(-1, 32)
    assert diffs[(8, 4)] == Fraction(-1, 128)
    for s in (1, 2, 4, 8):
        assert diffs[(s, 2)] == 0
        assert diffs[(s, 3)] == 0


def test_clt_cumulant_scaling_is_exact():
    rng = seeded(313)
    x = MomentSequence((1, 0, 1) + tuple(rand_fraction(rng) for _ in range(4)))
    r = monotone_cumulants_from_moments(x)
    for s in (2, 3):
        stepped = clt_step(x, s)
        rs = monotone_cumulants_from_moments(stepped)
        for n in range(1, 7):
            assert rs.cumulant(n) == Fraction(1, s) ** (n - 2) * r.cumulant(n)


def test_clt_table_validates_orders():
    with pytest.raises(PreconditionError):
        clt_convergence_table(symmetric_bernoulli(4), (1, 2), (5,))


def test_poisson_table_exact_differences():
    table = poisson_convergence_table(1, (1, 10, 100), (1, 2))
    diffs = {(n_copies, n): diff for n_copies, n, _, _, diff in table.rows}
    assert diffs[(1, 2)] == -1
    assert diffs[(10, 2)] == Fraction(-1, 10)
    assert diffs[(100, 2)] == Fraction(-1, 100)
    assert all(diffs[(n_copies, 1)] == 0 for n_copies in (1, 10, 100))


def test_poisson_dot_additivity_and_hypothesis():
    lam = Fraction(3, 2)
    for n_copies in (7, 40):
        base = poisson_base(lam, n_copies, 4)
        assert all(n_copies * base.moment(k) == lam for k in range(1, 5))
        r_base = monotone_cumulants_from_moments(base)
        r_sum = monotone_cumulants_from_moments(dot_power(base, n_copies))
        assert r_sum.cumulants == tuple(n_copies * c for c in r_base.cumulants)


def test_poisson_table_rejects_bad_custom_base():
    bad = {10: MomentSequence((1, Fraction(1, 10), Fraction(1, 10), Fraction(1, 10), Fraction(1, 5)))}
    with pytest.raises(PreconditionError):
        poisson_convergence_table(1, (10,), (1, 2, 3, 4), bases=bad)


def test_poisson_table_accepts_matching_custom_base():
    good = {10: poisson_base(1, 10, 4)}
    with_base = poisson_convergence_table(1, (10,), (1, 2, 3, 4), bases=good)
    without = poisson_convergence_table(1, (10,), (1, 2, 3, 4))
    assert with_base.rows == without.rows


def test_poisson_table_validates_parameters():
    with pytest.raises(PreconditionError):
        poisson_convergence_table(0, (10,), (1,))
    with pytest.raises(PreconditionError):
        poisson_convergence_table(1, (0,), (1,))
    with pytest.raises(PreconditionError):
        poisson_convergence_table(1, (10,), ())


def test_table_rendering_exact_and_decimal():
    table = ConvergenceTable(("n", "value"), ((2, Fraction(-1, 8)),))
    assert table.records() == [{"n": 2, "value": "-1/8"}]
    assert table.records(decimals=3) == [
        {"n": 2, "value": "-1/8", "value_approx": "-0.125"}
    ]
    csv_text = table.csv_text()
    assert csv_text == "n,value\n2,-1/8\n"
    assert "value_approx" in table.csv_text(decimals=2)
    assert "-1/8" in table.text()


def test_decimal_string_rounding():
    assert decimal_string(Fraction(-1, 8), 3) == "-0.125"
    assert decimal_string(Fraction(2, 3), 4) == "0.6667"
    assert decimal_string(Fraction(5), 0) == "5"
    assert decimal_string(Fraction(1, 2), 0) == "0"  # half-to-even
    assert decimal_string(Fraction(3, 2), 0) == "2"
