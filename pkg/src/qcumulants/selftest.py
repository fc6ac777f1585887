"""Built-in invariant suite behind the `selftest` CLI verb.

Runs a compact, exact battery over every module: closed-form limit laws,
partition counts against independent recurrences, round trips for all four
kinds, the interpolation oracle, the cumulant axioms, convolution route
equivalence, and the convergence rates.  Everything asserted here is an
exact rational identity; one PASS/FAIL line is printed per check.

The heavier suites (higher orders, 100-case seeded batteries) live in the
pytest acceptance module; this entry point is the quick field check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from .convolution import (
    convolve,
    dilate,
    dot_power,
    fractional_dot,
    monotone_convolve,
    monotone_convolve_via_transform,
)
from .cumulants import (
    CumulantSequence,
    MomentSequence,
    cumulants_from_moments,
    family_weights,
    flow_semigroup_check,
    moments_from_monotone_cumulants,
    moments_from_partition_sum,
    monotone_cumulants_from_moments,
    monotone_cumulants_via_interpolation,
    point_mass_moments,
)
from .limits import (
    arcsine_moments,
    clt_convergence_table,
    monotone_poisson_moments,
    poisson_convergence_table,
)
from .partitions import (
    IndependenceKind,
    enumerate_monotone,
    enumerate_ordered,
    enumerate_partitions,
    is_interval,
    is_monotone_order,
    is_noncrossing,
)

_SEED = 20100612


def _rand_fraction(rng):
    return Fraction(rng.randint(-10, 10), rng.randint(1, 5))


def _rand_moments(rng, order):
    return MomentSequence((Fraction(1),) + tuple(_rand_fraction(rng) for _ in range(order)))


def _rand_cumulants(rng, kind, order):
    return CumulantSequence(kind, tuple(_rand_fraction(rng) for _ in range(order)))


def _bell_numbers(upto):
    # Bell triangle
    rows = [[1]]
    for _ in range(upto):
        prev = rows[-1]
        row = [prev[-1]]
        for v in prev:
            row.append(row[-1] + v)
        rows.append(row)
    return [r[0] for r in rows]


def _symmetric_bernoulli(order):
    return MomentSequence(tuple(Fraction(1 - k % 2) for k in range(order + 1)))


def _check_arcsine():
    target = arcsine_moments(10)
    pattern = [Fraction(0)] * 10
    pattern[1] = Fraction(1)
    via_chain = moments_from_monotone_cumulants(
        CumulantSequence(IndependenceKind.MONOTONE, tuple(pattern)), 10
    )
    literal = (1, 0, 1, 0, Fraction(3, 2), 0, Fraction(5, 2), 0, Fraction(35, 8), 0, Fraction(63, 8))
    return target == via_chain == MomentSequence(literal), "orders <= 10"


def _check_poisson_routes():
    for lam in (Fraction(1), Fraction(1, 2), Fraction(3)):
        closed = monotone_poisson_moments(lam, 6)
        r = CumulantSequence(IndependenceKind.MONOTONE, (lam,) * 6)
        if closed != moments_from_monotone_cumulants(r, 6):
            return False, f"chain route disagrees at lambda={lam}"
        if closed != moments_from_partition_sum(r, 6):
            return False, f"partition route disagrees at lambda={lam}"
    return True, "lambda in {1, 1/2, 3}, orders <= 6"


def _check_partition_counts():
    bell = _bell_numbers(8)
    for n in range(1, 9):
        parts = list(enumerate_partitions(n))
        if len(parts) != bell[n]:
            return False, f"Bell({n})"
        if sum(1 for p in parts if is_noncrossing(p)) != comb(2 * n, n) // (n + 1):
            return False, f"Catalan({n})"
        if sum(1 for p in parts if is_interval(p)) != 2 ** (n - 1):
            return False, f"interval count({n})"
    for n, expected in ((1, 1), (2, 3), (3, 12), (4, 60), (5, 360)):
        direct = sum(1 for _ in enumerate_monotone(n))
        brute = sum(
            1
            for p in enumerate_partitions(n)
            for q in enumerate_ordered(p)
            if is_monotone_order(q)
        )
        if direct != expected or brute != expected:
            return False, f"monotone count({n})"
    return True, "Bell/Catalan/interval n <= 8, monotone n <= 5"


def _check_round_trips():
    rng = random.Random(_SEED)
    for kind in IndependenceKind:
        for _ in range(10):
            r = _rand_cumulants(rng, kind, 6)
            m = moments_from_partition_sum(r)
            if cumulants_from_moments(m, kind) != r:
                return False, f"{kind.value} round trip"
    return True, "10 seeded inputs per kind, order 6"


def _check_interpolation_oracle():
    rng = random.Random(_SEED + 1)
    for _ in range(10):
        m = _rand_moments(rng, 6)
        if monotone_cumulants_via_interpolation(m) != monotone_cumulants_from_moments(m):
            return False, "oracle mismatch"
    return True, "10 seeded inputs, order 6"


def _check_axioms():
    rng = random.Random(_SEED + 2)
    m = _rand_moments(rng, 5)
    base = {
        kind: cumulants_from_moments(m, kind) for kind in IndependenceKind
    }
    # dot-additivity
    for n_copies in range(1, 5):
        for kind in IndependenceKind:
            if kind is IndependenceKind.MONOTONE:
                summed = dot_power(m, n_copies)
            else:
                summed = m
                for _ in range(n_copies - 1):
                    summed = convolve(summed, m, kind)
            r = cumulants_from_moments(summed, kind)
            if any(r.cumulant(j) != n_copies * base[kind].cumulant(j) for j in range(1, 6)):
                return False, f"dot-additivity {kind.value} N={n_copies}"
    # homogeneity
    for lam in (Fraction(2), Fraction(1, 3), Fraction(-1)):
        for kind in IndependenceKind:
            r = cumulants_from_moments(dilate(m, lam), kind)
            if any(r.cumulant(j) != lam**j * base[kind].cumulant(j) for j in range(1, 6)):
                return False, f"homogeneity {kind.value} lambda={lam}"
    # partition-sum structure: single block is the only weight-1 linear term
    for kind in IndependenceKind:
        for n in range(1, 6):
            weights = dict(family_weights(kind, n))
            if weights.get((n,)) != 1:
                return False, f"unit diagonal {kind.value} n={n}"
            if any(len(sizes) < 2 for sizes in weights if sizes != (n,)):
                return False, f"linear term leak {kind.value} n={n}"
    return True, "N <= 4, lambda in {2, 1/3, -1}, all kinds"


def _check_convolution_routes():
    rng = random.Random(_SEED + 3)
    for _ in range(10):
        x = _rand_moments(rng, 8)
        y = _rand_moments(rng, 8)
        if monotone_convolve(x, y) != monotone_convolve_via_transform(x, y):
            return False, "transform route mismatch"
        z = _rand_moments(rng, 6)
        left = monotone_convolve(monotone_convolve(x.truncated(6), y.truncated(6)), z)
        right = monotone_convolve(x.truncated(6), monotone_convolve(y.truncated(6), z))
        if left != right:
            return False, "associativity"
        if flow_semigroup_check(monotone_cumulants_from_moments(x), Fraction(1, 2), Fraction(1, 2), 6) is not True:
            return False, "flow semigroup"
        half = fractional_dot(x, Fraction(1, 2))
        if monotone_convolve(half, half) != x:
            return False, "half-power semigroup"
    return True, "10 seeded inputs, order <= 8"


def _check_clt_rate():
    bernoulli = _symmetric_bernoulli(4)
    table = clt_convergence_table(bernoulli, (1, 2, 4), (2, 3, 4))
    for s, n, _, _, diff in table.rows:
        if n == 4 and diff != Fraction(-1, 2 * s * s):
            return False, f"M_4 rate at s={s}"
        if n in (2, 3) and diff != 0:
            return False, f"n={n} row at s={s}"
    return True, "difference is exactly -1/(2N)"


def _check_poisson_rate():
    table = poisson_convergence_table(1, (10, 100), (1, 2))
    for n_copies, n, _, _, diff in table.rows:
        if n == 1 and diff != 0:
            return False, f"mean row N={n_copies}"
        if n == 2 and diff != Fraction(-1, n_copies):
            return False, f"variance row N={n_copies}"
    return True, "difference is exactly -1/N at n=2"


def _check_noncommutativity():
    x = point_mass_moments(1, 3)
    y = _symmetric_bernoulli(3)
    forward = monotone_convolve(x, y)
    backward = monotone_convolve(y, x)
    return (
        forward.moment(3) == 3 and backward.moment(3) == 4 and forward != backward,
        "M_3 = 3 vs 4",
    )


_CHECKS = (
    ("arcsine moments: closed form vs cumulant route", _check_arcsine),
    ("monotone poisson: closed sum vs chain vs partition sum", _check_poisson_routes),
    ("partition counts: Bell, Catalan, interval, monotone", _check_partition_counts),
    ("moment/cumulant round trips, all four kinds", _check_round_trips),
    ("interpolation oracle equals triangular inversion", _check_interpolation_oracle),
    ("cumulant axioms: dot-additivity, homogeneity, structure", _check_axioms),
    ("monotone convolution: routes, associativity, semigroup", _check_convolution_routes),
    ("central limit rate toward arcsine", _check_clt_rate),
    ("law of small numbers rate toward monotone poisson", _check_poisson_rate),
    ("non-commutativity witness", _check_noncommutativity),
)


def run_selftest(write=print) -> int:
    """Run all checks; returns the number of failures."""
    failures = 0
    for label, check in _CHECKS:
        try:
            ok, detail = check()
        except Exception as exc:  # a crash is a failure, not a stop
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        if not ok:
            failures += 1
        tag = "PASS" if ok else "FAIL"
        write(f"{tag}  {label.ljust(58)}  {detail}")
    total = len(_CHECKS)
    write(f"{total - failures}/{total} checks passed")
    return failures
