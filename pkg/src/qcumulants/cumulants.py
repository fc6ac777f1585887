"""Moment <-> cumulant transforms for the four independences.

The monotone transform is built on the chain expansion

    M_n = sum_{k=1..n} sum_{1 = i_0 < i_1 < ... < i_k = n+1}
          (1/k!) * prod_{l=1..k} i_{l-1} * r_{i_l - i_{l-1}}

whose k = 1 term is exactly r_n, so the system is triangular with unit
diagonal and inverts order by order.  Three further routes cross-check it:
partition sums over the kind's partition family, the moment flow (the
polynomials m_n(t) solving dm_n/dt = sum_k k r_{n-k+1} m_{k-1}(t) with
m_n(0) = 0), and a Lagrange-interpolation oracle that reads the cumulant off
as the linear-in-N coefficient of the N-fold self-convolution.

Everything is exact; moment sequences are formal (no positivity assumed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .algebra import Polynomial, lagrange_interpolate, mul_trunc
from .errors import InvalidKindError, PreconditionError, TruncationError
from .partitions import (
    IndependenceKind,
    enumerate_ordered,
    enumerate_partitions,
    is_interval,
    is_noncrossing,
    monotone_size_profile_counts,
    partition_weight,
)
from .rationals import as_fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# sequence types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MomentSequence:
    """Truncated formal moment sequence (M_0, M_1, ..., M_n) with M_0 = 1.

    `notes` carries provenance warnings (order truncation, formal-only
    evaluations); it is excluded from equality.
    """

    moments: tuple
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        moments = tuple(as_fraction(m) for m in self.moments)
        object.__setattr__(self, "moments", moments)
        if not moments:
            raise PreconditionError("moment sequence needs at least M_0")
        if moments[0] != 1:
            raise PreconditionError(f"M_0 must be 1, got {moments[0]}")

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def moment(self, k: int) -> Fraction:
        return self.moments[k]

    def truncated(self, order: int, note: str | None = None) -> "MomentSequence":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} sequence to {order}")
        notes = self.notes + ((note,) if note else ())
        return MomentSequence(self.moments[: order + 1], notes)


@dataclass(frozen=True)
class CumulantSequence:
    """Truncated cumulant sequence (r_1, ..., r_n) tagged with its kind."""

    kind: IndependenceKind
    cumulants: tuple

    def __post_init__(self):
        cumulants = tuple(as_fraction(c) for c in self.cumulants)
        object.__setattr__(self, "cumulants", cumulants)
        if not cumulants:
            raise PreconditionError("cumulant sequence needs at least r_1")

    @property
    def order(self) -> int:
        return len(self.cumulants)

    def cumulant(self, k: int) -> Fraction:
        if not 1 <= k <= self.order:
            raise TruncationError(f"r_{k} not available at order {self.order}")
        return self.cumulants[k - 1]


@dataclass(frozen=True)
class MomentFlow:
    """Polynomials m_n(t) interpolating the moments of fractional dot powers.

    m_0 = 1, and every m_n with n >= 1 vanishes at t = 0; m_n(1) recovers
    the plain moments, and the coefficient of t in m_n is r_n.
    """

    polynomials: tuple

    def __post_init__(self):
        polys = tuple(self.polynomials)
        object.__setattr__(self, "polynomials", polys)
        if not polys or polys[0] != 1:
            raise PreconditionError("flow must start with the constant polynomial 1")
        if any(p.coefficient(0) != 0 for p in polys[1:]):
            raise PreconditionError("flow polynomials of order >= 1 must vanish at t = 0")

    @property
    def order(self) -> int:
        return len(self.polynomials) - 1

    def moments_at(self, t, notes: tuple = ()) -> MomentSequence:
        t = as_fraction(t)
        return MomentSequence(tuple(p(t) for p in self.polynomials), notes)


def point_mass_moments(center, order: int) -> MomentSequence:
    """Moments of the point mass at `center`: M_k = center^k."""
    c = as_fraction(center)
    return MomentSequence(tuple(c**k for k in range(order + 1)))


def constant_cumulants(kind: IndependenceKind, value, order: int) -> CumulantSequence:
    """Cumulant sequence with every entry equal to `value`."""
    v = as_fraction(value)
    return CumulantSequence(kind, (v,) * order)


def _require_kind(r: CumulantSequence, kind: IndependenceKind, op: str) -> None:
    if r.kind is not kind:
        raise InvalidKindError(f"{op} needs {kind.value} cumulants, got {r.kind.value}")


def _require_length(r: CumulantSequence, n: int) -> None:
    if r.order < n:
        raise TruncationError(f"order {n} needs {n} cumulants, only {r.order} given")


# ---------------------------------------------------------------------------
# the monotone chain expansion and its inversion
# ---------------------------------------------------------------------------

def _chain_moment(values, n: int, min_blocks: int = 1):
    """Evaluate the chain expansion of M_n over (r_1, ..., r_{n-1+...}).

    `values` may hold any commutative ring elements (Fractions normally,
    polynomials in the symbolic structure checks); chains are the index
    tuples 1 = i_0 < i_1 < ... < i_k = n+1, and `min_blocks` drops the
    k < min_blocks terms (min_blocks=2 evaluates M_n minus its r_n term,
    which touches r_1 ... r_{n-1} only).
    """
    total = _ZERO
    for k in range(min_blocks, n + 1):
        coeff = Fraction(1, factorial(k))
        for interior in combinations(range(2, n + 1), k - 1):
            chain = (1,) + interior + (n + 1,)
            term = coeff
            for l in range(1, k + 1):
                term = term * chain[l - 1] * values[chain[l] - chain[l - 1] - 1]
            total = total + term
    return total


def moments_from_monotone_cumulants(r: CumulantSequence, n: int | None = None) -> MomentSequence:
    """Moments from monotone cumulants via the chain expansion."""
    _require_kind(r, IndependenceKind.MONOTONE, "moments_from_monotone_cumulants")
    if n is None:
        n = r.order
    _require_length(r, n)
    values = r.cumulants
    out = [_ONE]
    out.extend(_chain_moment(values, m) for m in range(1, n + 1))
    return MomentSequence(tuple(out))


def monotone_cumulants_from_moments(m: MomentSequence) -> CumulantSequence:
    """Monotone cumulants by triangular inversion of the chain expansion."""
    values = []
    for n in range(1, m.order + 1):
        tail = _chain_moment(values, n, min_blocks=2) if n > 1 else _ZERO
        values.append(m.moment(n) - tail)
    if not values:
        raise PreconditionError("need at least M_1 to produce cumulants")
    return CumulantSequence(IndependenceKind.MONOTONE, tuple(values))


def monotone_cumulants_via_interpolation(m: MomentSequence) -> CumulantSequence:
    """Oracle route: r_n as the linear-in-N coefficient of M_n(N-fold power).

    Computes the N-fold monotone self-convolution for N = 0..order, Lagrange
    interpolates each moment as a polynomial in N, and extracts the linear
    coefficient.  Must agree exactly with the triangular inversion.
    """
    from .convolution import dot_power  # deferred: convolution imports this module

    order = m.order
    if order < 1:
        raise PreconditionError("need at least M_1 to produce cumulants")
    powers = [dot_power(m, npow) for npow in range(order + 1)]
    values = []
    for k in range(1, order + 1):
        points = [(Fraction(npow), powers[npow].moment(k)) for npow in range(order + 1)]
        poly = lagrange_interpolate(points, var="N")
        values.append(poly.coefficient(1))
    return CumulantSequence(IndependenceKind.MONOTONE, tuple(values))


# ---------------------------------------------------------------------------
# partition sums
# ---------------------------------------------------------------------------

_FAMILY_FILTERS = {
    IndependenceKind.COMMUTATIVE: None,
    IndependenceKind.FREE: is_noncrossing,
    IndependenceKind.BOOLEAN: is_interval,
}


@lru_cache(maxsize=None)
def family_weights(kind: IndependenceKind, n: int):
    """Aggregated partition-sum coefficients for order n.

    Returns sorted ((block sizes ascending), weight) pairs such that
    M_n = sum weight * prod r_size.  Commutative/free/Boolean weights come
    from enumerating the partition family; monotone weights count the
    ordered family through the placement-tree walk (1/|pi|! per ordering)
    and are tied to the object-level enumeration by the test suite.
    Cached, since the table depends only on (kind, n).
    """
    acc: dict = {}
    if kind is IndependenceKind.MONOTONE:
        for sizes, count in monotone_size_profile_counts(n).items():
            acc[sizes] = Fraction(count, factorial(len(sizes)))
    else:
        keep = _FAMILY_FILTERS[kind]
        for p in enumerate_partitions(n):
            if keep is not None and not keep(p):
                continue
            key = tuple(sorted(p.block_sizes()))
            acc[key] = acc.get(key, _ZERO) + _ONE
    return tuple(sorted(acc.items()))


def _weighted_moment(weights, values):
    """Evaluate sum of weight * prod values[size-1] over a weight table."""
    total = _ZERO
    for sizes, weight in weights:
        term = weight
        for s in sizes:
            term = term * values[s - 1]
        total = total + term
    return total


def moments_from_partition_sum(r: CumulantSequence, n: int | None = None) -> MomentSequence:
    """Moments as the partition sum over the family matching r's kind.

    Commutative sums r(pi) over all partitions, free over non-crossing,
    Boolean over interval partitions; monotone sums r(pi)/|pi|! over
    monotone (ordered) partitions.
    """
    if n is None:
        n = r.order
    _require_length(r, n)
    out = [_ONE]
    for m in range(1, n + 1):
        out.append(_weighted_moment(family_weights(r.kind, m), r.cumulants))
    return MomentSequence(tuple(out))


def moments_from_ordered_partition_sum(r: CumulantSequence, n: int | None = None) -> MomentSequence:
    """Cross-check route: sum r(pi)/|pi|! over all block orderings.

    Every partition admits |pi|! orderings, so this reproduces the plain
    partition sum for the commutative, free, and Boolean kinds.  The
    monotone kind is rejected: its ordered family is the constrained one.
    """
    if r.kind is IndependenceKind.MONOTONE:
        raise InvalidKindError("ordered partition sum is a cross-check for the additive kinds; "
                               "use moments_from_partition_sum for monotone")
    if n is None:
        n = r.order
    _require_length(r, n)
    keep = _FAMILY_FILTERS[r.kind]
    out = [_ONE]
    for m in range(1, n + 1):
        total = _ZERO
        for p in enumerate_partitions(m):
            if keep is not None and not keep(p):
                continue
            weight = partition_weight(p, r) / factorial(p.block_count)
            for _ in enumerate_ordered(p):
                total += weight
        out.append(total)
    return MomentSequence(tuple(out))


def cumulants_from_moments(m: MomentSequence, kind: IndependenceKind) -> CumulantSequence:
    """Cumulants of any kind by triangular inversion of its partition sum.

    The single-block partition carries weight 1 in every family, so the
    system is triangular with unit diagonal and the inversion is exact.
    """
    if m.order < 1:
        raise PreconditionError("need at least M_1 to produce cumulants")
    values: list = []
    for n in range(1, m.order + 1):
        tail = _ZERO
        for sizes, weight in family_weights(kind, n):
            if sizes == (n,):
                continue
            term = weight
            for s in sizes:
                term = term * values[s - 1]
            tail = tail + term
        values.append(m.moment(n) - tail)
    return CumulantSequence(kind, tuple(values))


# ---------------------------------------------------------------------------
# the moment flow
# ---------------------------------------------------------------------------

def moment_flow(r: CumulantSequence, n: int | None = None) -> MomentFlow:
    """Integrate dm_n/dt = sum_{k=1..n} k r_{n-k+1} m_{k-1}(t) exactly.

    Returns the polynomials m_0(t) = 1, m_1(t), ..., m_n(t) with
    m_n(0) = 0 for n >= 1.
    """
    _require_kind(r, IndependenceKind.MONOTONE, "moment_flow")
    if n is None:
        n = r.order
    _require_length(r, n)
    polys = [Polynomial.constant(1, "t")]
    for m in range(1, n + 1):
        derivative = Polynomial.zero("t")
        for k in range(1, m + 1):
            coeff = k * r.cumulant(m - k + 1)
            if coeff != 0:
                derivative = derivative + coeff * polys[k - 1]
        polys.append(derivative.integral())
    return MomentFlow(tuple(polys))


def flow_semigroup_check(r: CumulantSequence, t, s, n: int | None = None) -> bool:
    """Exact check of the flow identity at order n:

    m_n(t+s) = m_n(t) + m_n(s)
             + sum_{k=1..n-1} m_k(t) * sum_{j_0+...+j_k = n-k} prod m_{j_l}(s).
    """
    if n is None:
        n = r.order
    flow = moment_flow(r, n)
    t = as_fraction(t)
    s = as_fraction(s)
    mt = [p(t) for p in flow.polynomials]
    ms = [p(s) for p in flow.polynomials]
    lhs = flow.polynomials[n](t + s)
    rhs = mt[n] + ms[n]
    # inner sum over compositions j_0+...+j_k = n-k: coefficient of z^(n-k)
    # in (sum_j m_j(s) z^j)^(k+1)
    power = list(ms)
    for k in range(1, n):
        power = mul_trunc(power, ms, n)
        rhs += mt[k] * power[n - k]
    return lhs == rhs
