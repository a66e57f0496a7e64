"""Monte Carlo and asymptotic checks for the interval caching game.

The finite game normalizes the digging budget to 1 and spreads n holes over
[0, lam] as unit intervals; here we simulate the interval limit directly:
nut positions are uniform on [0, lam], nut depths are the first k
coordinates of a uniform point on the k-simplex, and the searcher runs the
interval-walk strategy (dig the current unit interval from depth zero, move
right after each find).

Also holds the closed-form score curves of the two extremal searcher
families in the double limit, and the finite-to-limit value bracket.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from .caching import GameParams
from .exactnum import as_rational

CHUNK = 65536  # trials per RNG stream; fixed so results don't depend on batching


@dataclass(frozen=True)
class SimResult:
    k: int
    j: int
    lam: float
    trials: int
    wins: int
    seed: int

    @property
    def estimate(self) -> float:
        return self.wins / self.trials

    @property
    def std_error(self) -> float:
        p = self.estimate
        return math.sqrt(p * (1 - p) / self.trials)


def simulate_limit_game(
    k: int, j: int, lam: float, trials: int, seed: int
) -> SimResult:
    """Estimate the interval-walk searcher's win probability.

    Each 65536-trial chunk uses an independent PCG64 stream seeded by
    (seed, chunk index), so estimates are reproducible and independent of
    how the work is batched.  Draw order per chunk: k+1 exponentials for the
    depth simplex, then k uniform positions.
    """
    if not 1 <= j <= k:
        raise ValueError(f"need 1 <= j <= k, got j={j}, k={k}")
    if k > 3:
        raise ValueError(f"k <= 3 supported, got {k}")
    if lam < k:
        raise ValueError(f"need lam >= k, got {lam}")
    if trials < 1:
        raise ValueError("need at least one trial")
    wins = 0
    done = 0
    chunk_index = 0
    while done < trials:
        take = min(CHUNK, trials - done)
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, chunk_index])))
        exp = rng.exponential(size=(CHUNK, k + 1))
        depths = (exp[:, :k] / exp.sum(axis=1, keepdims=True))[:take]
        positions = rng.uniform(0.0, lam, size=(CHUNK, k))[:take]
        alive = np.ones(take, dtype=bool)
        t = np.zeros(take)
        for q in range(j):
            in_interval = (positions >= q) & (positions < q + 1)
            masked = np.where(in_interval, depths, np.inf)
            y = masked.min(axis=1)
            found = np.isfinite(y)
            t = t + np.where(found, y, 0.0)
            alive &= found & (t <= 1.0)
        wins += int(alive.sum())
        done += take
        chunk_index += 1
    return SimResult(k=k, j=j, lam=float(lam), trials=trials, wins=wins, seed=seed)


def interval_walk_win_probability(k: int, lam: float) -> float:
    """Exact win probability of the interval walk when all k nuts are
    required: the nuts must land one per interval among the first k, in any
    order, and the depth budget is then automatic."""
    return math.factorial(k) / lam**k


def first_family_score(shallow_depth: float) -> float:
    """Double-limit score of the progressive full-depth sweep family against
    the extremal pair (y, 1-y): 1/(2y) + 1/(2(1-y))."""
    y = _shallow(shallow_depth)
    return 1 / (2 * y) + 1 / (2 * (1 - y))


def second_family_score(shallow_depth: float) -> float:
    """Double-limit score of the two-pass family (shallow sweep, then re-dig
    the complementary depth over the widest affordable stretch):
    (3 - 2y)/(2(1-y)^2)."""
    y = _shallow(shallow_depth)
    return (3 - 2 * y) / (2 * (1 - y) ** 2)


def _shallow(depth: float) -> float:
    if not 0 < depth < 1:
        raise ValueError(f"depth must lie in (0, 1), got {depth}")
    return min(depth, 1 - depth)


def double_limit_extremal_score(mixture_weight: float, hider_depth: float) -> float:
    """Score of mixing the two searcher families with the given weight on
    the first, against the extremal hider pair at the given depth."""
    w = mixture_weight
    if not 0 <= w <= 1:
        raise ValueError(f"mixture weight must lie in [0, 1], got {w}")
    return w * first_family_score(hider_depth) + (1 - w) * second_family_score(
        hider_depth
    )


def _golden_min(fn, lo: float, hi: float, tol: float) -> Tuple[float, float]:
    phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = fn(d)
    x = (a + b) / 2
    return x, fn(x)


def worst_case_depth(mixture_weight: float, tol: float = 1e-9) -> Tuple[float, float]:
    """Hider depth minimizing the mixture's score, with the score there.
    The score is convex in the shallow depth, so golden-section search finds
    the minimum."""
    return _golden_min(
        lambda y: double_limit_extremal_score(mixture_weight, y), 1e-9, 0.5, tol
    )


def optimize_mixture(tol: float = 1e-7) -> Tuple[float, float]:
    """Maximize the guaranteed score over mixture weights; returns
    (weight, worst-case score).  The guarantee is concave in the weight."""
    neg = lambda w: -worst_case_depth(w, tol)[1]
    w, negscore = _golden_min(neg, 0.0, 1.0, tol)
    return w, -negscore


def non_extremal_cap(samples: int = 401) -> Fraction:
    """Exact maximum of the non-extremal score cap s(2 - s/2) over s >= 0:
    the parabola peaks at s = 2 with value 2.  A grid scan double-checks
    that no sample beats the vertex."""
    vertex = Fraction(2)
    cap = cap_score(vertex)
    for i in range(samples):
        s = Fraction(4 * i, samples - 1)
        if cap_score(s) > cap:
            raise AssertionError(f"cap exceeded at s = {s}")
    return cap


def cap_score(s) -> Fraction:
    s = as_rational(s)
    if s < 0:
        raise ValueError(f"need s >= 0, got {s}")
    return s * (2 - s / 2)


def limitthm_bracket(params: GameParams, limit_value: float) -> Tuple[float, float]:
    """Bracket the finite-budget value in terms of the interval-limit value:
    limit * ((h-j)/h)^j <= finite <= limit, valid for h > j."""
    h, j = params.h, params.j
    if h <= j:
        raise ValueError(f"bracket requires h > j, got h={h}, j={j}")
    factor = float(((h - j) / h) ** j)
    return limit_value * factor, limit_value
