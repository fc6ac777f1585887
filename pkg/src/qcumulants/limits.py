"""Desk-scale reproduction of the monotone limit theorems.

The monotone central limit law is the arcsine distribution with mean 0 and
variance 1 (even moments (2m-1)!!/m!, odd moments 0); the law of small
numbers is the monotone Poisson distribution (all monotone cumulants equal
to the rate).  Both are reproduced here with exact rational arithmetic:
the CLT uses N = s^2 summands so the 1/sqrt(N) scaling stays rational, and
the Poisson triangular array defaults to the base sequence whose moments
all equal lambda/N, which satisfies N * M_k = lambda exactly at every k.

Convergence is checked at the level of moments only; the tables report the
exact rational differences from the target law.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .convolution import dilate, dot_power
from .cumulants import MomentSequence, monotone_cumulants_from_moments
from .errors import PreconditionError, SelfCheckError
from .rationals import as_fraction, decimal_string, format_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


def arcsine_moments(n: int) -> MomentSequence:
    """Arcsine law, mean 0 and variance 1: M_{2m} = (2m-1)!!/m!, odd 0."""
    if n < 0:
        raise PreconditionError("order must be >= 0")
    out = [_ONE]
    for k in range(1, n + 1):
        if k % 2:
            out.append(_ZERO)
        else:
            m = k // 2
            double_fact = 1
            for odd in range(1, k, 2):
                double_fact *= odd
            out.append(Fraction(double_fact, factorial(m)))
    return MomentSequence(tuple(out))


def monotone_poisson_moments(lam, n: int) -> MomentSequence:
    """Monotone Poisson law with rate lambda, by the closed double sum

        M_j = sum_{k=1..j} (lambda^k / k!)
              sum_{1 = i_0 < i_1 < ... < i_k = j+1} i_0 i_1 ... i_{k-1}.

    Equals the chain expansion with every cumulant set to lambda; the two
    routes (plus the monotone partition sum) are cross-checked in tests.
    """
    lam = as_fraction(lam)
    if n < 0:
        raise PreconditionError("order must be >= 0")
    out = [_ONE]
    for j in range(1, n + 1):
        total = _ZERO
        for k in range(1, j + 1):
            chain_sum = 0
            for interior in combinations(range(2, j + 1), k - 1):
                prod = 1
                for i in (1,) + interior:  # all chain entries except the last
                    prod *= i
                chain_sum += prod
            total += lam**k * Fraction(chain_sum, factorial(k))
        out.append(total)
    return MomentSequence(tuple(out))


def _require_standardized(x: MomentSequence) -> None:
    if x.order < 2 or x.moment(1) != 0 or x.moment(2) != 1:
        raise PreconditionError("central limit input needs M_1 = 0 and M_2 = 1")


def clt_step(x: MomentSequence, s: int) -> MomentSequence:
    """One central-limit step: N = s^2 monotone summands scaled by 1/s."""
    _require_standardized(x)
    if not isinstance(s, int) or s < 1:
        raise PreconditionError("scaling step s must be an integer >= 1")
    return dilate(dot_power(x, s * s), Fraction(1, s))


@dataclass(frozen=True)
class ConvergenceTable:
    """Rectangular table of exact rationals with named columns."""

    columns: tuple
    rows: tuple

    def records(self, decimals: int | None = None):
        """Rows as dicts; Fractions rendered "p/q", plus labelled decimal
        approximations when `decimals` is given."""
        out = []
        for row in self.rows:
            rec = {}
            for name, cell in zip(self.columns, row):
                if isinstance(cell, Fraction):
                    rec[name] = format_rational(cell)
                    if decimals is not None:
                        rec[name + "_approx"] = decimal_string(cell, decimals)
                else:
                    rec[name] = cell
            out.append(rec)
        return out

    def csv_text(self, decimals: int | None = None) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = []
        for name in self.columns:
            header.append(name)
            if decimals is not None:
                header.append(name + "_approx")
        writer.writerow(header)
        for row in self.rows:
            cells = []
            for cell in row:
                if isinstance(cell, Fraction):
                    cells.append(format_rational(cell))
                    if decimals is not None:
                        cells.append(decimal_string(cell, decimals))
                else:
                    cells.append(cell)
                    if decimals is not None:
                        cells.append(cell)
            writer.writerow(cells)
        return buf.getvalue()

    def text(self, decimals: int | None = None) -> str:
        recs = self.records(decimals)
        names = list(recs[0].keys()) if recs else list(self.columns)
        table = [names] + [[str(r[k]) for k in names] for r in recs]
        widths = [max(len(row[i]) for row in table) for i in range(len(names))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
        return "\n".join(lines)


def clt_convergence_table(x: MomentSequence, s_values, orders) -> ConvergenceTable:
    """Moment convergence of scaled sums toward the arcsine law.

    Rows are (s, n, moment, target, difference) sorted by (s, n).  As a
    built-in self-check, the cumulants of each step must scale exactly as
    r_n -> s^(2-n) r_n.
    """
    _require_standardized(x)
    orders = sorted(set(int(n) for n in orders))
    if not orders or orders[0] < 1 or orders[-1] > x.order:
        raise PreconditionError(f"orders must lie in 1..{x.order}")
    target = arcsine_moments(x.order)
    base_cumulants = monotone_cumulants_from_moments(x)
    rows = []
    for s in sorted(set(int(s) for s in s_values)):
        step = clt_step(x, s)
        step_cumulants = monotone_cumulants_from_moments(step)
        for n in range(1, x.order + 1):
            expected = base_cumulants.cumulant(n) * Fraction(1, s) ** (n - 2)
            if step_cumulants.cumulant(n) != expected:
                raise SelfCheckError(f"cumulant scaling law failed at s={s}, n={n}")
        for n in orders:
            value = step.moment(n)
            rows.append((s, n, value, target.moment(n), value - target.moment(n)))
    return ConvergenceTable(("s", "n", "moment", "target", "difference"), tuple(rows))


def poisson_base(lam, n_copies: int, order: int) -> MomentSequence:
    """Default triangular-array summand: every moment equals lambda/N."""
    lam = as_fraction(lam)
    c = lam / n_copies
    return MomentSequence((_ONE,) + (c,) * order)


def poisson_convergence_table(lam, n_values, orders, bases=None) -> ConvergenceTable:
    """Moment convergence of N-fold sums toward the monotone Poisson law.

    `bases` may map N to a custom summand sequence; each one is validated
    against the small-numbers hypothesis N * M_k = lambda exactly for every
    k up to the working order.  Rows are (N, n, moment, target, difference)
    sorted by (N, n); as a built-in self-check the cumulants must satisfy
    r_n(N-fold sum) = N * r_n(summand) exactly.
    """
    lam = as_fraction(lam)
    if lam <= 0:
        raise PreconditionError("lambda must be > 0")
    orders = sorted(set(int(n) for n in orders))
    if not orders or orders[0] < 1:
        raise PreconditionError("orders must be >= 1")
    top = orders[-1]
    target = monotone_poisson_moments(lam, top)
    rows = []
    for n_copies in sorted(set(int(v) for v in n_values)):
        if n_copies < 1:
            raise PreconditionError("N values must be >= 1")
        if bases is not None and n_copies in bases:
            base = bases[n_copies]
            if base.order < top:
                raise PreconditionError(f"base for N={n_copies} needs order >= {top}")
            for k in range(1, top + 1):
                if n_copies * base.moment(k) != lam:
                    raise PreconditionError(
                        f"base for N={n_copies} violates N*M_{k} = lambda: "
                        f"{n_copies}*{base.moment(k)} != {lam}"
                    )
            base = base.truncated(top)
        else:
            base = poisson_base(lam, n_copies, top)
        summed = dot_power(base, n_copies)
        r_base = monotone_cumulants_from_moments(base)
        r_sum = monotone_cumulants_from_moments(summed)
        for n in range(1, top + 1):
            if r_sum.cumulant(n) != n_copies * r_base.cumulant(n):
                raise SelfCheckError(f"dot-additivity failed at N={n_copies}, n={n}")
        for n in orders:
            value = summed.moment(n)
            rows.append((n_copies, n, value, target.moment(n), value - target.moment(n)))
    return ConvergenceTable(("N", "n", "moment", "target", "difference"), tuple(rows))
