"""Subset-sum threshold maximization (Manickam-Miklos-Singhi style) and its
Bernoulli limit problem.

Finite side: for a coefficient multiset a_1..a_n, the payoff of interest is
the exact probability that a uniformly random k-subset sum strictly exceeds
the proportional share (k/n) * sum(a).  Limit side: coefficients with finite
support act on iid Bernoulli(p) selectors plus an optional independent
Gaussian term, and the objective is Pr(sum a_i (x_i - p) + d*x_0 > threshold).

Event comparisons are always exact rational; only probability weights and the
Gaussian factor are floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .exactnum import (
    CoefficientMultiset,
    Rational,
    RationalLike,
    as_rational,
    binomial_tail_gt,
    binomial_tail_lt,
    normal_cdf,
    subset_sum_distribution,
)

# Candidate coefficient families for the limit problem, in tie-break priority
# order: q equal coefficients of one sign.  neg1 = single -1, pos3 = 1,1,1, ...
FAMILY_TAGS: Tuple[str, ...] = ("neg1", "pos3", "neg3", "pos5", "neg5", "pos2")

_FAMILY_SHAPE: Dict[str, Tuple[int, int]] = {
    "neg1": (1, -1),
    "pos3": (3, +1),
    "neg3": (3, -1),
    "pos5": (5, +1),
    "neg5": (5, -1),
    "pos2": (2, +1),
}


@dataclass(frozen=True)
class LimitSolution:
    """Limit-problem strategy: finitely many rational coefficients, an
    optional Gaussian weight d >= 0, and the Bernoulli parameter p in (0,1).

    The variance normalizer p(1-p)*sum(a^2) + d^2 must be positive; the
    all-zero solution is rejected.
    """

    coeffs: Tuple[Fraction, ...]
    gauss_weight: float
    p: float

    def __post_init__(self) -> None:
        if not 0 < float(self.p) < 1:
            raise ValueError(f"p must lie in (0,1), got {self.p}")
        if float(self.gauss_weight) < 0:
            raise ValueError("gauss_weight must be nonnegative")
        if float(self.gauss_weight) == 0 and all(c == 0 for c in self.coeffs):
            raise ValueError("degenerate all-zero solution")

    def normalizer(self) -> float:
        p = float(self.p)
        ss = float(sum((c * c for c in self.coeffs), Fraction(0)))
        return p * (1 - p) * ss + float(self.gauss_weight) ** 2


def make_solution(
    coeffs: Iterable[RationalLike], gauss_weight: float, p: float
) -> LimitSolution:
    return LimitSolution(tuple(as_rational(c) for c in coeffs), gauss_weight, p)


@dataclass(frozen=True)
class FamilyCurvePoint:
    p: Fraction
    family: str
    value: Fraction


def mms_value(coeffs: CoefficientMultiset, k: int) -> Fraction:
    """Exact Pr(k-subset sum > (k/n) * sum(a)) over uniform k-subsets."""
    n = coeffs.n
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    threshold = Fraction(k, n) * coeffs.total()
    return subset_sum_distribution(coeffs, k).prob_greater(threshold)


def mms_conjectured_value(n: int, k: int) -> Fraction:
    """(n-k)/n, the conjectured maximum of mms_value in the 4k <= n regime,
    attained by one coefficient 1-n and n-1 coefficients 1."""
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    return Fraction(n - k, n)


def _grouped_nonzero(coeffs: Sequence[Fraction]) -> List[Tuple[Fraction, int]]:
    merged: Dict[Fraction, int] = {}
    for c in coeffs:
        if c != 0:
            merged[c] = merged.get(c, 0) + 1
    return sorted(merged.items())


def limit_objective(solution: LimitSolution, threshold: RationalLike = 0) -> float:
    """Pr(sum a_i (x_i - p) + d*x_0 > threshold), x_i iid Bernoulli(p),
    x_0 an independent standard Gaussian.

    Bernoulli outcomes are enumerated grouped by distinct coefficient value
    (a product-of-binomials collapse), so q equal coefficients cost q+1 states
    rather than 2^q.  The partial sums and the threshold comparison are exact
    rational; weights and the Gaussian tail are double precision (absolute
    error well under the 1e-10 budget for supports up to 30).
    """
    groups = _grouped_nonzero(solution.coeffs)
    m = sum(mult for _, mult in groups)
    if m > 30:
        raise ValueError(f"support too large for enumeration ({m} > 30)")
    d = float(solution.gauss_weight)
    if m == 0 and d == 0:
        raise ValueError("degenerate objective: no coefficients and no Gaussian term")
    p_exact = as_rational(solution.p)
    p = float(solution.p)
    t_exact = as_rational(threshold)

    terms: List[float] = []

    def recurse(idx: int, weight: float, partial: Fraction) -> None:
        if weight == 0.0:
            return
        if idx == len(groups):
            if d == 0:
                if partial > t_exact:
                    terms.append(weight)
            else:
                z = float(t_exact - partial) / d
                terms.append(weight * (1.0 - normal_cdf(z)))
            return
        value, mult = groups[idx]
        for j in range(mult + 1):
            w = weight * math.comb(mult, j) * p**j * (1 - p) ** (mult - j)
            recurse(idx + 1, w, partial + value * (j - p_exact * mult))

    recurse(0, 1.0, Fraction(0))
    return math.fsum(terms)


def slack_objective(solution: LimitSolution, eps: RationalLike) -> float:
    """Objective with slack: Pr(sum a_i (x_i - p) + d*x_0 > -eps)."""
    return limit_objective(solution, threshold=-as_rational(eps))


def family_curve(family: str, p: RationalLike) -> Fraction:
    """Exact objective of one candidate family at Bernoulli parameter p.

    A family is q equal coefficients of one sign; its objective collapses to a
    strict binomial tail: Pr(B(q,p) > qp) for positive families and
    Pr(B(q,p) < qp) for negative ones.  p is coerced to an exact rational
    (floats keep their binary value), so boundary behavior at points like
    p = 1/3 is well defined: pass Fraction(1,3), not 1/3 as a float.
    """
    if family not in _FAMILY_SHAPE:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILY_TAGS}")
    q, sign = _FAMILY_SHAPE[family]
    p = as_rational(p)
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0,1), got {p}")
    if sign > 0:
        return binomial_tail_gt(q, p, q * p)
    return binomial_tail_lt(q, p, q * p)


def best_family(p: RationalLike) -> FamilyCurvePoint:
    """argmax of family_curve over the six candidate families.

    Ties go to the earlier tag in FAMILY_TAGS (documented priority order).
    This maximizes over the candidate families only; it is a lower bound for
    the full limit problem supremum at p.
    """
    p = as_rational(p)
    best_tag, best_val = None, None
    for tag in FAMILY_TAGS:
        val = family_curve(tag, p)
        if best_val is None or val > best_val:
            best_tag, best_val = tag, val
    return FamilyCurvePoint(p, best_tag, best_val)


def family_crossing(
    family_a: str, family_b: str, lo: float, hi: float, tol: float = 1e-9
) -> float:
    """Bisection root of family_curve(a, p) - family_curve(b, p) on [lo, hi].

    Signs are evaluated exactly at each (binary rational) probe point; raises
    if the difference does not change sign between the endpoints.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")

    def diff_sign(x: float) -> int:
        g = family_curve(family_a, x) - family_curve(family_b, x)
        return (g > 0) - (g < 0)

    s_lo, s_hi = diff_sign(lo), diff_sign(hi)
    if s_lo == 0:
        return lo
    if s_hi == 0:
        return hi
    if s_lo == s_hi:
        raise ValueError(
            f"no sign change of {family_a}-{family_b} on [{lo}, {hi}]"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        s_mid = diff_sign(mid)
        if s_mid == 0:
            return mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def limit_to_finite(solution: LimitSolution, n: int, k: int) -> CoefficientMultiset:
    """Finite instance approximating a limit solution.

    Keeps the listed coefficients, fills the remaining n-m slots with +/-eps
    in equal halves (one extra zero slot if n-m is odd), eps chosen so the
    filler supplies the Gaussian term's share of the variance:
    p(1-p) * (filler count) * eps^2 = d^2.  The result is mean-shifted so the
    coefficients sum to zero.
    """
    m = len(solution.coeffs)
    slots = n - m
    if slots < 2:
        raise ValueError(f"need at least 2 filler slots, got n={n} for support {m}")
    if not 1 <= k < n:
        raise ValueError(f"k must lie in [1, {n - 1}], got {k}")
    p = float(solution.p)
    if abs(k / n - p) > 0.1:
        raise ValueError(f"k/n = {k}/{n} is not within 0.1 of p = {p}")
    d = float(solution.gauss_weight)
    pairs, extra_zero = divmod(slots, 2)
    if d == 0:
        eps = Fraction(0)
    else:
        eps = as_rational(d / math.sqrt(p * (1 - p) * 2 * pairs))
    tail: List[Fraction] = []
    if eps == 0:
        tail = [Fraction(0)] * slots
    else:
        tail = [eps] * pairs + [-eps] * pairs + [Fraction(0)] * extra_zero
    values = list(solution.coeffs) + tail
    mu = sum(values, Fraction(0)) / n
    return CoefficientMultiset.from_pairs((v - mu, 1) for v in values)


@dataclass(frozen=True)
class CLTCheck:
    dp_prob: Fraction
    gauss_approx: float
    abs_diff: float


def clt_check(coeffs: CoefficientMultiset, k: int, t: RationalLike) -> CLTCheck:
    """Exact Pr(k-subset sum < (k/n)*sum(a) + t) against its Gaussian proxy
    Phi(t/sigma), sigma^2 the exact finite-population variance of the
    k-subset sum: k*(n-k)/(n-1) * population variance of the coefficients."""
    n = coeffs.n
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    t = as_rational(t)
    total = coeffs.total()
    popvar = coeffs.sum_of_squares() / n - (total / n) ** 2
    if popvar == 0 or k == n:
        raise ValueError("degenerate instance: k-subset sum has zero variance")
    var = Fraction(k * (n - k), n - 1) * popvar
    dist = subset_sum_distribution(coeffs, k)
    dp = dist.prob_less(Fraction(k, n) * total + t, strict=True)
    gauss = normal_cdf(float(t) / math.sqrt(float(var)))
    return CLTCheck(dp, gauss, abs(float(dp) - gauss))


def interval_objective(coeffs: CoefficientMultiset, k: int, m_upper: RationalLike) -> Fraction:
    """Pr(1 <= k-subset sum <= M) for zero-sum coefficient multisets."""
    if coeffs.total() != 0:
        raise ValueError("interval objective requires coefficients summing to 0")
    m_upper = as_rational(m_upper)
    if not m_upper > 1:
        raise ValueError(f"upper limit must exceed 1, got {m_upper}")
    return subset_sum_distribution(coeffs, k).prob_in_closed(1, m_upper)


def _support_abs_desc(solution: LimitSolution) -> Tuple[Fraction, ...]:
    return tuple(sorted((c for c in solution.coeffs if c != 0), key=abs, reverse=True))


def solution_distance(s1: LimitSolution, s2: LimitSolution) -> Fraction:
    """Matching distance between two limit solutions' coefficient lists.

    Matched coefficients pay |a - b|; all unmatched coefficients on a side are
    absorbed by the zero tail at the cost of the largest unmatched absolute
    value on that side (paid once).  Exact minimum over matchings for supports
    up to 8 per side; above that a documented heuristic pairs the
    sorted-by-absolute-value lists in order.  The Gaussian weights do not
    enter the distance.
    """
    a = _support_abs_desc(s1)
    b = _support_abs_desc(s2)
    if max(len(a), len(b)) > 8:
        # Greedy: pair largest with largest, dump the overhang.
        paired = sum((abs(x - y) for x, y in zip(a, b)), Fraction(0))
        rest = a[len(b):] or b[len(a):]
        return paired + (abs(rest[0]) if rest else Fraction(0))

    @lru_cache(maxsize=None)
    def rec(rem_a: Tuple[Fraction, ...], rem_b: Tuple[Fraction, ...],
            paid_a: bool) -> Fraction:
        if not rem_a:
            # Leftover b coefficients are all unmatched; the largest pays.
            return abs(rem_b[0]) if rem_b else Fraction(0)
        head, rest = rem_a[0], rem_a[1:]
        # Drop head: the first drop on this side is the largest, so it pays.
        best = (Fraction(0) if paid_a else abs(head)) + rec(rest, rem_b, True)
        for i, y in enumerate(rem_b):
            cand = abs(head - y) + rec(rest, rem_b[:i] + rem_b[i + 1:], paid_a)
            if cand < best:
                best = cand
        return best

    result = rec(a, b, False)
    rec.cache_clear()
    return result
