"""Exact polynomials and truncated formal series over the rationals.

Two series shapes cover everything the rest of the package needs:

* power-at-infinity: G(z) = sum_{k>=0} a_k z^(-(k+1)), the Cauchy-transform
  shape of a moment sequence (a_k is the k-th moment, a_0 = 1);
* reciprocal form: H(z) = z + sum_{k>=0} b_k z^(-k), the reciprocal Cauchy
  transform shape, which is closed under composition.

A series carries an explicit truncation order fixed at construction; binary
operations on series of different orders truncate to the smaller one.  All
coefficients are `fractions.Fraction`; nothing in this module ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import PreconditionError
from .rationals import as_fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Polynomial:
    """Dense univariate polynomial; coefficients[k] multiplies x^k.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial has an empty coefficient tuple and `degree` None (the
    distinguished sentinel; degrees are otherwise non-negative).  `var` is a
    display name only and takes no part in equality or hashing.
    """

    coefficients: tuple
    var: str = "x"

    def __post_init__(self):
        coeffs = tuple(as_fraction(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, var: str = "x") -> "Polynomial":
        return cls((), var)

    @classmethod
    def constant(cls, value, var: str = "x") -> "Polynomial":
        return cls((value,), var)

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else None

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            raise PreconditionError("coefficient index must be >= 0")
        if k < len(self.coefficients):
            return self.coefficients[k]
        return _ZERO

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        acc = _ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def integral(self) -> "Polynomial":
        """Antiderivative vanishing at 0."""
        coeffs = [_ZERO]
        coeffs.extend(c / (k + 1) for k, c in enumerate(self.coefficients))
        return Polynomial(tuple(coeffs), self.var)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == Polynomial((other,)).coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coefficients), self.var)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,), self.var)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out), self.var)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,), self.var)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coefficients), self.var)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coefficients or not other.coefficients:
            return Polynomial.zero(self.var)
        out = [_ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(tuple(out), self.var)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.coefficients:
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*{self.var}")
            else:
                terms.append(f"{c}*{self.var}^{k}")
        return "Polynomial(" + " + ".join(terms) + ")"


def poly_coefficient(p: Polynomial, k: int) -> Fraction:
    """Coefficient of x^k in p; zero beyond the degree."""
    return p.coefficient(k)


def lagrange_interpolate(points, var: str = "x") -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Points are (x, y) pairs of rationals with pairwise distinct abscissae.
    """
    pts = [(as_fraction(x), as_fraction(y)) for x, y in points]
    if not pts:
        raise PreconditionError("interpolation needs at least one point")
    seen = set()
    for x, _ in pts:
        if x in seen:
            raise PreconditionError(f"duplicate abscissa {x} in interpolation input")
        seen.add(x)
    result = Polynomial.zero(var)
    for i, (xi, yi) in enumerate(pts):
        basis = Polynomial.constant(1, var)
        denom = _ONE
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            basis = basis * Polynomial((-xj, _ONE), var)
            denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


# ---------------------------------------------------------------------------
# truncated coefficient-list arithmetic (shared plumbing)
# ---------------------------------------------------------------------------

def mul_trunc(a, b, order: int):
    """Product of coefficient lists modulo degree `order` (inclusive)."""
    out = [_ZERO] * (order + 1)
    for i, x in enumerate(a):
        if i > order or x == 0:
            continue
        for j, y in enumerate(b):
            if i + j > order:
                break
            out[i + j] += x * y
    return out


def _inverse_unit(coeffs, order: int):
    """Multiplicative inverse of a coefficient list with nonzero constant
    term, modulo degree `order` (inclusive)."""
    c0 = coeffs[0]
    if c0 == 0:
        raise PreconditionError("series with zero constant term is not invertible")
    inv = [_ONE / c0]
    for k in range(1, order + 1):
        acc = _ZERO
        for j in range(1, min(k, len(coeffs) - 1) + 1):
            acc += coeffs[j] * inv[k - j]
        inv.append(-acc / c0)
    return inv


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

class SeriesKind(Enum):
    POWER_AT_INFINITY = "power-at-infinity"
    RECIPROCAL = "reciprocal"


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal series at infinity, truncated at a fixed order.

    kind POWER_AT_INFINITY:  coefficients (a_0, ..., a_order) represent
        G(z) = sum a_k z^(-(k+1)).
    kind RECIPROCAL:  coefficients (b_0, ..., b_{order-1}) represent
        H(z) = z + sum b_k z^(-k); the leading z has coefficient exactly 1
        and is implicit in the representation.
    """

    kind: SeriesKind
    coefficients: tuple
    order: int

    def __post_init__(self):
        coeffs = tuple(as_fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if self.order < 0:
            raise PreconditionError("truncation order must be >= 0")
        expected = self.order + 1 if self.kind is SeriesKind.POWER_AT_INFINITY else self.order
        if len(coeffs) != expected:
            raise PreconditionError(
                f"{self.kind.value} series of order {self.order} needs "
                f"{expected} coefficients, got {len(coeffs)}"
            )

    @classmethod
    def power_at_infinity(cls, coefficients) -> "TruncatedSeries":
        coeffs = tuple(coefficients)
        if not coeffs:
            raise PreconditionError("power series needs at least the z^-1 coefficient")
        return cls(SeriesKind.POWER_AT_INFINITY, coeffs, len(coeffs) - 1)

    @classmethod
    def reciprocal(cls, tail) -> "TruncatedSeries":
        tail = tuple(tail)
        return cls(SeriesKind.RECIPROCAL, tail, len(tail))


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse, swapping between the two series shapes.

    A power-at-infinity series with a_0 = 1 inverts to reciprocal form (this
    is the moment series -> reciprocal Cauchy transform direction); a
    reciprocal-form series inverts back.  The round trip is exact up to the
    truncation order.
    """
    n = s.order
    if s.kind is SeriesKind.POWER_AT_INFINITY:
        if s.coefficients[0] != 1:
            raise PreconditionError(
                f"not a probability moment series: a_0 = {s.coefficients[0]}, expected 1"
            )
        # G = z^-1 * u(1/z) with u = 1 + a_1 w + ... + a_n w^n
        inv = _inverse_unit(list(s.coefficients), n)
        return TruncatedSeries(SeriesKind.RECIPROCAL, tuple(inv[1 : n + 1]), n)
    # H = z * u(1/z) with u = 1 + b_0 w + ... + b_{n-1} w^n
    unit = [_ONE] + list(s.coefficients)
    inv = _inverse_unit(unit, n)
    return TruncatedSeries(SeriesKind.POWER_AT_INFINITY, tuple(inv), n)


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Composition f(g(z)) of two reciprocal-form series.

    The result is again reciprocal form, truncated at the smaller of the two
    orders.  Composition is the transform-level picture of monotone
    convolution, so this operation is exercised heavily by the convolution
    cross-checks.
    """
    if f.kind is not SeriesKind.RECIPROCAL or g.kind is not SeriesKind.RECIPROCAL:
        raise PreconditionError("series_compose is defined for reciprocal-form series only")
    n = min(f.order, g.order)
    if n == 0:
        return TruncatedSeries.reciprocal(())
    bf = f.coefficients[:n]
    cg = g.coefficients[:n]
    # 1/g = w * ubar(w) with ubar the inverse of g's unit part, w = 1/z.
    unit_g = [_ONE] + list(cg)
    ubar = _inverse_unit(unit_g, n)
    d = list(cg)
    d[0] += bf[0]
    power = [_ONE]  # ubar^k, accumulated
    for k in range(1, n):
        power = mul_trunc(power, ubar, n)
        if bf[k] == 0:
            continue
        for j in range(k, n):
            d[j] += bf[k] * power[j - k]
    return TruncatedSeries(SeriesKind.RECIPROCAL, tuple(d), n)
