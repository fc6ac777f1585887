"""Convolutions of moment sequences under the four independences.

Monotone convolution is the non-commutative one; it is computed directly
from the mixed-moment expansion

    M_n(x |> y) = M_n(x) + M_n(y)
                + sum_{k=1..n-1} M_k(x) * sum_{j_0+...+j_k = n-k} prod M_{j_l}(y)

and, as an independent route, through reciprocal-Cauchy-transform
composition H_{x |> y} = H_x o H_y.  The two must agree exactly.

The additive kinds convolve by cumulant additivity.  Dot powers N.x are the
N-fold monotone self-convolution (binary exponentiation; the operation is
associative), and fractional dot powers evaluate the moment-flow
polynomials at rational t.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import TruncatedSeries, mul_trunc, series_compose, series_reciprocal
from .cumulants import (
    CumulantSequence,
    MomentSequence,
    cumulants_from_moments,
    moment_flow,
    moments_from_partition_sum,
    monotone_cumulants_from_moments,
    point_mass_moments,
)
from .partitions import IndependenceKind
from .rationals import as_fraction

_ONE = Fraction(1)


def _aligned(x: MomentSequence, y: MomentSequence):
    """Common truncation order plus merged provenance notes."""
    n = min(x.order, y.order)
    notes = list(dict.fromkeys(x.notes + y.notes))
    if x.order != y.order:
        notes.append(f"order-mismatch: result truncated to {n}")
    return list(x.moments[: n + 1]), list(y.moments[: n + 1]), n, tuple(notes)


def monotone_convolve(x: MomentSequence, y: MomentSequence) -> MomentSequence:
    """Monotone convolution x |> y via the mixed-moment expansion.

    The inner sum over compositions is read off as the coefficient of
    z^(n-k) in (sum_j M_j(y) z^j)^(k+1).
    """
    mx, my, n, notes = _aligned(x, y)
    powers = [None, list(my)]  # powers[i] = (sum M_j(y) z^j)^i truncated at n
    for _ in range(2, n + 1):
        powers.append(mul_trunc(powers[-1], my, n))
    out = [_ONE]
    for m in range(1, n + 1):
        total = mx[m] + my[m]
        for k in range(1, m):
            total += mx[k] * powers[k + 1][m - k]
        out.append(total)
    return MomentSequence(tuple(out), notes)


def monotone_convolve_via_transform(x: MomentSequence, y: MomentSequence) -> MomentSequence:
    """Monotone convolution through H_{x |> y} = H_x o H_y.

    Independent of the moment expansion route; the two agree exactly.
    """
    mx, my, n, notes = _aligned(x, y)
    hx = series_reciprocal(TruncatedSeries.power_at_infinity(mx))
    hy = series_reciprocal(TruncatedSeries.power_at_infinity(my))
    g = series_reciprocal(series_compose(hx, hy))
    return MomentSequence(g.coefficients, notes)


def convolve(x: MomentSequence, y: MomentSequence, kind: IndependenceKind) -> MomentSequence:
    """Convolution of the given kind.

    Commutative, free and Boolean convolutions add cumulants; the monotone
    kind dispatches to `monotone_convolve` and is not commutative.
    """
    if kind is IndependenceKind.MONOTONE:
        return monotone_convolve(x, y)
    mx, my, n, notes = _aligned(x, y)
    if n < 1:
        return MomentSequence((_ONE,), notes)
    rx = cumulants_from_moments(MomentSequence(tuple(mx)), kind)
    ry = cumulants_from_moments(MomentSequence(tuple(my)), kind)
    total = CumulantSequence(kind, tuple(a + b for a, b in zip(rx.cumulants, ry.cumulants)))
    result = moments_from_partition_sum(total, n)
    return MomentSequence(result.moments, notes)


def dilate(x: MomentSequence, c) -> MomentSequence:
    """Pushforward under t -> c*t: M_n becomes c^n M_n."""
    c = as_fraction(c)
    return MomentSequence(tuple(m * c**k for k, m in enumerate(x.moments)), x.notes)


def dot_power(x: MomentSequence, n_copies: int) -> MomentSequence:
    """N-fold monotone self-convolution N.x (binary exponentiation).

    N = 0 gives the point mass at 0 by convention.
    """
    if n_copies < 0:
        raise ValueError("dot power needs N >= 0")
    if n_copies == 0:
        return point_mass_moments(0, x.order)
    result = None
    base = x
    remaining = n_copies
    while remaining:
        if remaining & 1:
            result = base if result is None else monotone_convolve(result, base)
        remaining >>= 1
        if remaining:
            base = monotone_convolve(base, base)
    return result


def fractional_dot(x: MomentSequence, t) -> MomentSequence:
    """Evaluate the moment flow of x at rational time t.

    Agrees with `dot_power` at non-negative integers.  Negative t is allowed
    as a purely formal evaluation and flagged in the result notes.
    """
    t = as_fraction(t)
    flow = moment_flow(monotone_cumulants_from_moments(x), x.order)
    notes = x.notes
    if t < 0:
        notes = notes + ("formal-only: negative dot-power parameter",)
    return flow.moments_at(t, notes)
