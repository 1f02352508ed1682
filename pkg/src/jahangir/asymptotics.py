"""Growth of the spanning-tree counts in both directions.

a(n, m) = sigma(n, m+1) / sigma(n, m) is kept as an exact Fraction; decimal
strings are rendering only.  The m-direction ratios appear to converge to a
constant per n (estimated with a bracket, never asserted as a limit); the
n-direction ratios decrease toward 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import sigma
from .errors import ParameterDomainError


def decimal_truncate(x: Fraction, places: int) -> str:
    """Decimal string of x cut after `places` digits, no rounding."""
    if places < 0:
        raise ValueError("places must be nonnegative")
    if x < 0:
        return "-" + decimal_truncate(-x, places)
    scaled = x.numerator * 10**places // x.denominator
    return _place_point(scaled, places)


def decimal_round_half_even(x: Fraction, places: int) -> str:
    """Decimal string of x rounded to `places` digits, ties to even."""
    if places < 0:
        raise ValueError("places must be nonnegative")
    if x < 0:
        return "-" + decimal_round_half_even(-x, places)
    num = x.numerator * 10**places
    den = x.denominator
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    return _place_point(q, places)


def _place_point(scaled: int, places: int) -> str:
    if places == 0:
        return str(scaled)
    s = str(scaled).rjust(places + 1, "0")
    return s[:-places] + "." + s[-places:]


@dataclass(frozen=True)
class RatioEntry:
    m: int
    ratio: Fraction
    decimal: str


@dataclass(frozen=True)
class RatioSeries:
    """m-direction ratios a(n, m) for m = 3..m_max - 1, exact plus rendered."""

    n: int
    entries: tuple[RatioEntry, ...]


@dataclass(frozen=True)
class NDirectionRatios:
    """sigma(n, m) / sigma(n-1, m) for n = 3..n_max at fixed m."""

    m: int
    entries: tuple[tuple[int, Fraction], ...]
    strictly_decreasing: bool


@dataclass(frozen=True)
class DeltaEstimate:
    """Point estimate for the m-direction limit at fixed n, with a bracket
    from the two most recent ratios.  An estimate, not a claimed limit.
    """

    n: int
    m_used: int
    value: str
    bracket: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ConjectureReport:
    """Prediction sigma(n, 3) * a^(m-3) against the exact count.

    The displayed relation treats the m-direction ratio as already constant,
    which the exact values contradict at small m; the report states the
    relative error and passes no judgment.
    """

    n: int
    m: int
    m_used: int
    predicted: Fraction
    actual: int
    relative_error: Fraction
    predicted_decimal: str
    relative_error_decimal: str


def _require(value: int, lo: int, name: str):
    if value < lo:
        raise ParameterDomainError(f"{name} must be >= {lo} (got {value})")


def sigma_table(n: int, m_max: int) -> tuple[tuple[int, int], ...]:
    """Rows (m, sigma(n, m)) for m = 3..m_max."""
    _require(n, 2, "n")
    _require(m_max, 3, "m_max")
    return tuple((m, sigma(n, m).total) for m in range(3, m_max + 1))


def ratio(n: int, m: int) -> Fraction:
    """a(n, m) = sigma(n, m+1) / sigma(n, m), exact."""
    return Fraction(sigma(n, m + 1).total, sigma(n, m).total)


def ratio_series(n: int, m_max: int, places: int = 9) -> RatioSeries:
    _require(n, 2, "n")
    _require(m_max, 4, "m_max")
    entries = []
    for m in range(3, m_max):
        r = ratio(n, m)
        entries.append(RatioEntry(m, r, decimal_round_half_even(r, places)))
    return RatioSeries(n, tuple(entries))


def n_direction_ratios(m: int, n_max: int) -> NDirectionRatios:
    _require(m, 3, "m")
    _require(n_max, 3, "n_max")
    entries = []
    prev_sigma = sigma(2, m).total
    for n in range(3, n_max + 1):
        cur = sigma(n, m).total
        entries.append((n, Fraction(cur, prev_sigma)))
        prev_sigma = cur
    decreasing = all(entries[i][1] > entries[i + 1][1] for i in range(len(entries) - 1))
    return NDirectionRatios(m, tuple(entries), decreasing)


def delta_estimate(n: int, m_used: int = 20, places: int = 12) -> DeltaEstimate:
    """a(n, m_used) as the point estimate, bracketed by the previous ratio.

    The bracket is ordered min..max of a(n, m_used - 1) and a(n, m_used);
    its width is reported, not assumed, to shrink as m_used grows.
    """
    _require(n, 2, "n")
    _require(m_used, 6, "m_used")
    point = ratio(n, m_used)
    before = ratio(n, m_used - 1)
    lo, hi = sorted((before, point))
    return DeltaEstimate(n, m_used, decimal_round_half_even(point, places), (lo, hi))


def conjecture_report(n: int, m: int, m_used: int = 20) -> ConjectureReport:
    """Compare sigma(n, m) with sigma(n, 3) scaled by the (m - 3)rd power of
    the estimated m-direction ratio.  Exact rational arithmetic throughout;
    m = 3 is the degenerate exponent-zero case where both sides coincide.
    """
    _require(n, 2, "n")
    _require(m, 3, "m")
    point = ratio(n, m_used)
    predicted = point ** (m - 3) * sigma(n, 3).total
    actual = sigma(n, m).total
    rel = abs(predicted - actual) / actual
    return ConjectureReport(
        n=n,
        m=m,
        m_used=m_used,
        predicted=predicted,
        actual=actual,
        relative_error=rel,
        predicted_decimal=decimal_round_half_even(predicted, 4),
        relative_error_decimal=decimal_round_half_even(rel, 6),
    )
