# Description: closed-form lower and upper bounds on the minimum family size for all non-trivial
# points of {0,1}^n, kept as exact rationals until they are reported.
# file name: bounds.py

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import ceil, comb
from typing import Any, Dict, Optional


@dataclass
class BoundsReport:
    n: int
    d: int
    lower_pair: int
    lower_naive: int
    lower_odd: Optional[int]
    lower_best: int
    upper_general: Optional[int] = None
    upper_even: Optional[int] = None
    upper_cycle: Optional[int] = None
    upper_best: Optional[int] = None
    upper_dedup: Optional[int] = None

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _check_range(n: int, d: int, upper: int) -> None:
    if n < 2 or not 2 <= d <= upper:
        raise ValueError(f"d must lie in [2, {upper}] with n >= 2, got n={n}, d={d}")


def pair_lower(n: int, d: int) -> Fraction:
    """Each coloring bisects at most d^2/4 of the C(n, 2) pairs."""
    return Fraction(2 * n * (n - 1), d * d)


def naive_lower(n: int, d: int) -> Fraction:
    """Each pair must sit inside some support, and a support holds C(d, 2) pairs."""
    return Fraction(n * (n - 1), d * (d - 1))


def general_upper(n: int, d: int) -> int:
    ratio = Fraction(n - 1, d - 1)
    return comb(ceil(2 * ratio), 2) + ceil(ratio) * (d + 1)


def even_case_bound(n: int, d: int) -> int:
    """Size the even-order construction reaches before duplicates are removed."""
    return comb(ceil(Fraction(2 * n, d)), 2) + ceil(Fraction(n, d)) * (d + 1)


def dedup_upper(n: int, d: int) -> int:
    """general_upper with one duplicate dropped from each composed cycle family."""
    ratio = Fraction(n - 1, d - 1)
    return comb(ceil(2 * ratio), 2) + ceil(ratio) * d


def min_edge_bound(n: int, d: int, k: int) -> int:
    _check_range(n, d, n - 1)
    if (d - 1) * k <= n - 1:
        raise ValueError(f"The large-edge bound needs (d-1)k > n-1, got n={n}, d={d}, k={k}")
    return ceil(Fraction(n - 1, d - 1)) * (d + 1)


def lower_bound(n: int, d: int) -> BoundsReport:
    _check_range(n, d, n)
    lower_pair = ceil(pair_lower(n, d))
    lower_naive = ceil(naive_lower(n, d))
    lower_odd = n - 1 if d % 2 else None
    best = max(v for v in (lower_pair, lower_naive, lower_odd) if v is not None)
    return BoundsReport(n, d, lower_pair, lower_naive, lower_odd, best)


def upper_bound(n: int, d: int) -> BoundsReport:
    """Upper fields on top of the lower ones; d = n is rejected."""
    _check_range(n, d, n - 1)
    report = lower_bound(n, d)
    report.upper_general = general_upper(n, d)
    report.upper_dedup = dedup_upper(n, d)
    if d % 2 == 0 and d < n - 1:
        report.upper_even = even_case_bound(n, d)
    if n == d + 1:
        report.upper_cycle = d + 1
    report.upper_best = min(v for v in (report.upper_general, report.upper_even, report.upper_cycle) if v is not None)
    return report


def bounds_report(n: int, d: int) -> BoundsReport:
    """Everything that applies: d = n gets lower bounds only."""
    if d == n:
        return lower_bound(n, d)
    return upper_bound(n, d)
