"""Shared test oracles, independent of the library code paths they check.

Expected values in the test suite come either from closed forms verified by
hand or from the brute-force routines here (explicit composition
enumeration, quartet crossing checks, Bell-triangle counting).  None of
these reuse the production implementation they are checking against.
"""

from fractions import Fraction
from math import comb, factorial
import random

from qcumulants import CumulantSequence, MomentSequence


def bell_numbers(upto):
    """Bell numbers B_0..B_upto via the Bell triangle."""
    rows = [[1]]
    for _ in range(upto):
        prev = rows[-1]
        row = [prev[-1]]
        for v in prev:
            row.append(row[-1] + v)
        rows.append(row)
    return [r[0] for r in rows]


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def stirling2(n, k):
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def fubini(n):
    """Number of linearly ordered set partitions of {1..n}."""
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))


def odd_double_factorial(m):
    """(2m-1)!! = 1 * 3 * ... * (2m-1)."""
    out = 1
    for v in range(1, 2 * m, 2):
        out *= v
    return out


def rand_fraction(rng):
    # |numerator| <= 10, denominator <= 5: keeps exact arithmetic desk-scale
    return Fraction(rng.randint(-10, 10), rng.randint(1, 5))


def rand_moments(rng, order):
    return MomentSequence((Fraction(1),) + tuple(rand_fraction(rng) for _ in range(order)))


def rand_cumulants(rng, kind, order):
    return CumulantSequence(kind, tuple(rand_fraction(rng) for _ in range(order)))


def seeded(seed):
    return random.Random(seed)


def symmetric_bernoulli(order):
    """Moments of (delta_-1 + delta_1)/2: 1, 0, 1, 0, ..."""
    return MomentSequence(tuple(Fraction(1 - k % 2) for k in range(order + 1)))


def compositions_nonneg(total, parts):
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions_nonneg(total - head, parts - 1):
            yield (head,) + tail


def naive_monotone_convolve(x, y):
    """Literal mixed-moment expansion with explicit composition loops."""
    n = min(x.order, y.order)
    mx, my = x.moments, y.moments
    out = [Fraction(1)]
    for m in range(1, n + 1):
        total = mx[m] + my[m]
        for k in range(1, m):
            for js in compositions_nonneg(m - k, k + 1):
                term = mx[k]
                for j in js:
                    term *= my[j]
                total += term
        out.append(total)
    return MomentSequence(tuple(out))


def naive_dot_power(x, n_copies):
    """Left-fold N-fold self-convolution using the naive expansion."""
    if n_copies == 0:
        return MomentSequence((Fraction(1),) + (Fraction(0),) * x.order)
    acc = x
    for _ in range(n_copies - 1):
        acc = naive_monotone_convolve(acc, x)
    return acc


def quartet_noncrossing(p):
    """Crossing test straight from the definition: no a<b<c<d with a, c in
    one block and b, d in another."""
    blocks = p.blocks
    for i in range(len(blocks)):
        for j in range(len(blocks)):
            if i == j:
                continue
            for a in blocks[i]:
                for c in blocks[i]:
                    if c <= a:
                        continue
                    for b in blocks[j]:
                        for d in blocks[j]:
                            if a < b < c < d:
                                return False
    return True
