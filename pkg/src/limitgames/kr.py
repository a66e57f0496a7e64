"""Threshold-exceedance allocation game (Kikuta-Ruckle style).

A unit budget is split over n slots as nonnegative coefficients; the payoff is
the exact probability that a uniform random k-subset of slots carries total
weight strictly above a threshold d in (0,1).  The conjectured optima are
uniform splits 1/s over s slots, with a specific candidate set of s values
built from strict floors.  A two-level probe family {2/s, 1/s, 0} is included
because it is the natural place to hunt for counterexamples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Set, Tuple

from .exactnum import (
    CoefficientMultiset,
    RationalLike,
    as_rational,
    binomial_tail_gt,
    hypergeom_tail,
    subset_sum_distribution,
)

# Small-s candidates and n-offsets of the conjectured optimal-s set.
_SMALL_CANDIDATES = (5, 7, 8, 11, 14, 17, 20, 23, 26)
_N_OFFSETS = (24, 21, 18, 15, 13, 12, 10, 9, 7, 6, 5, 4, 3, 0)


@dataclass(frozen=True)
class KRInstance:
    """n slots, k drawn, threshold d in (0,1).

    strict=True uses the "> d" win condition (the default); strict=False the
    "≥ d" variant, which also flips the floors below from y < x to y ≤ x.
    """

    n: int
    k: int
    d: Fraction
    strict: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        d = as_rational(self.d)
        if not 0 < d < 1:
            raise ValueError(f"need d in (0,1), got {d}")
        object.__setattr__(self, "d", d)


def strict_floor(x: RationalLike, strict: bool = True) -> int:
    """max{y integer : y < x}; with strict=False, max{y : y <= x}.

    The two differ exactly at integer x: strict_floor(3) = 2 but
    strict_floor(3, strict=False) = 3.
    """
    x = as_rational(x)
    if x.denominator == 1:
        return x.numerator - (1 if strict else 0)
    return math.floor(x)


def parity_floor(x: RationalLike, parity: int, strict: bool = True) -> int:
    """Largest integer below x (or at x when strict=False) congruent to
    parity mod 2."""
    y = strict_floor(x, strict)
    if y % 2 != parity % 2:
        y -= 1
    return y


def kr_uniform_value(inst: KRInstance, s: int) -> Fraction:
    """Exact win probability of the uniform split 1/s over s slots:
    Pr(X/s > d) with X hypergeometric(n, s, k)."""
    if not 1 <= s <= inst.n:
        raise ValueError(f"s must lie in [1, {inst.n}], got {s}")
    return hypergeom_tail(inst.n, s, inst.k, inst.d * s, strict=inst.strict)


def kr_general_value(inst: KRInstance, coeffs: CoefficientMultiset) -> Fraction:
    """Exact Pr(k-subset sum > d) for an arbitrary nonnegative unit-sum
    coefficient multiset."""
    if any(v < 0 for v, _ in coeffs.entries):
        raise ValueError("coefficients must be nonnegative")
    if coeffs.total() != 1:
        raise ValueError(f"coefficients must sum to 1, got {coeffs.total()}")
    if coeffs.n != inst.n:
        raise ValueError(f"multiset has {coeffs.n} slots, instance has {inst.n}")
    dist = subset_sum_distribution(coeffs, inst.k)
    return dist.prob_greater(inst.d, strict=inst.strict)


def kr_best_uniform(inst: KRInstance) -> Tuple[int, Fraction]:
    """Exhaustive argmax of kr_uniform_value over s = 1..n.

    Smallest optimal s wins ties.
    """
    best_s, best_val = 1, kr_uniform_value(inst, 1)
    for s in range(2, inst.n + 1):
        val = kr_uniform_value(inst, s)
        if val > best_val:
            best_s, best_val = s, val
    return best_s, best_val


def kr_conjectured_s_set(inst: KRInstance) -> Set[int]:
    """Candidate set of optimal s values from the strengthened conjecture.

    Built from strict floors of 1/d and k/d, odd/parity floors of the
    2d-1 denominators (omitted when d <= 1/2), nine small constants, and
    fourteen offsets from n; intersected with [1, n].
    """
    d, n, k, st = inst.d, inst.n, inst.k, inst.strict
    cands = set(_SMALL_CANDIDATES)
    cands.add(strict_floor(1 / d, st))
    cands.add(strict_floor(Fraction(k) / d, st))
    two_d_minus_1 = 2 * d - 1
    if two_d_minus_1 > 0:
        cands.add(parity_floor(1 / two_d_minus_1, 1, st))
        cands.add(parity_floor(Fraction(2 * k - n) / two_d_minus_1, n, st))
    cands.update(n - off for off in _N_OFFSETS)
    return {s for s in cands if 1 <= s <= n}


@dataclass(frozen=True)
class ConjectureCheck:
    holds: bool
    s_star: int
    witness_value: Fraction
    best_conjectured_s: int
    best_conjectured_value: Fraction


def kr_check_conjecture(inst: KRInstance) -> ConjectureCheck:
    """Does the conjectured s-set attain the true optimum over all s?

    Reports both argmaxes; holds is a value comparison, so any optimal s
    inside the set suffices (existence, not uniqueness).
    """
    if inst.n > 2000:
        raise ValueError(f"n={inst.n} exceeds the scan guard (2000)")
    s_star, best = kr_best_uniform(inst)
    cset = sorted(kr_conjectured_s_set(inst))
    best_c_s, best_c = cset[0], kr_uniform_value(inst, cset[0])
    for s in cset[1:]:
        val = kr_uniform_value(inst, s)
        if val > best_c:
            best_c_s, best_c = s, val
    return ConjectureCheck(best_c == best, s_star, best, best_c_s, best_c)


def kr_limit_value(p: RationalLike, s: int) -> Fraction:
    """Limit objective of the uniform s-split: Pr(B(s,p) > s*p), the
    hypergeometric tail's n -> infinity binomial limit at threshold d -> p+."""
    p = as_rational(p)
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0,1), got {p}")
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    return binomial_tail_gt(s, p, s * p)


def kr_probe_two_level(inst: KRInstance, s: int, m2: int) -> Fraction:
    """Value of the two-level probe: m2 slots at 2/s, s-2*m2 slots at 1/s,
    zeros elsewhere.  m2 = 0 reduces to the uniform split."""
    if not 1 <= s <= inst.n:
        raise ValueError(f"s must lie in [1, {inst.n}], got {s}")
    if m2 < 0 or s - 2 * m2 < 0:
        raise ValueError(f"infeasible shape: s={s}, m2={m2}")
    pairs = [
        (Fraction(2, s), m2),
        (Fraction(1, s), s - 2 * m2),
        (Fraction(0), inst.n - s + m2),
    ]
    coeffs = CoefficientMultiset.from_pairs((v, m) for v, m in pairs if m > 0)
    return kr_general_value(inst, coeffs)


def kr_gap(inst: KRInstance, s1: int, s2: int) -> Fraction:
    """kr_uniform_value(s1) - kr_uniform_value(s2), exact."""
    return kr_uniform_value(inst, s1) - kr_uniform_value(inst, s2)
