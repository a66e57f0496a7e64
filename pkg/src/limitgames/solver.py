"""Exact game solvers: rational matrix-game LP with equilibrium
certificates, adaptive searcher best response against a hider pair mixture,
and grid-restricted caching-game values by column generation.

Everything here is exact Fraction arithmetic; no floating point enters any
value computation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from .caching import (
    DigPlan,
    GameParams,
    HiderPairMix,
    grid_depths,
    grid_pair_pool,
    pair_payoff,
    resume_plan,
)
from .exactnum import RationalLike, as_rational


@dataclass(frozen=True)
class MatrixGame:
    """Solved zero-sum matrix game.  Rows are the maximizer.

    Certificates (all exact): row_mix guarantees at least `value` against
    every column, col_mix concedes at most `value` against every row, and
    the two security levels coincide.
    """

    payoff: Tuple[Tuple[Fraction, ...], ...]
    value: Fraction
    row_mix: Tuple[Fraction, ...]
    col_mix: Tuple[Fraction, ...]
    row_labels: Optional[Tuple] = None
    col_labels: Optional[Tuple] = None


def _simplex_max(A: List[List[Fraction]]) -> Tuple[List[Fraction], List[Fraction]]:
    """Maximize sum(w) subject to A w <= 1, w >= 0, A entrywise positive.

    Dense tableau with Bland's rule (finite even under degeneracy).
    Returns the optimal primal w and dual y (one multiplier per row).
    """
    m, nv = len(A), len(A[0])
    one, zero = Fraction(1), Fraction(0)
    tableau = [
        [A[i][j] for j in range(nv)]
        + [one if s == i else zero for s in range(m)]
        + [one]
        for i in range(m)
    ]
    basis = list(range(nv, nv + m))
    cost = [one] * nv + [zero] * m

    def z_row() -> List[Fraction]:
        out = []
        for j in range(nv + m):
            z = sum((cost[basis[i]] * tableau[i][j] for i in range(m)), zero)
            out.append(cost[j] - z)
        return out

    while True:
        reduced = z_row()
        enter = next((j for j in range(nv + m) if reduced[j] > 0), None)
        if enter is None:
            break
        leave = None
        best_ratio = None
        for i in range(m):
            if tableau[i][enter] > 0:
                ratio = tableau[i][-1] / tableau[i][enter]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("LP unbounded; payoff shift must be positive")
        piv = tableau[leave][enter]
        tableau[leave] = [x / piv for x in tableau[leave]]
        row_l = tableau[leave]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], row_l)]
        basis[leave] = enter

    w = [zero] * nv
    for i in range(m):
        if basis[i] < nv:
            w[basis[i]] = tableau[i][-1]
    duals = []
    for s in range(m):
        j = nv + s
        z = sum((cost[basis[i]] * tableau[i][j] for i in range(m)), zero)
        duals.append(z)
    return w, duals


def solve_matrix_game(
    payoff_matrix: Sequence[Sequence[RationalLike]],
    row_labels: Optional[Tuple] = None,
    col_labels: Optional[Tuple] = None,
) -> MatrixGame:
    """Solve the zero-sum game whose ROW player maximizes the payoff.

    Both optimal mixtures are certified exactly: the minimum column payoff
    of row_mix equals the maximum row payoff of col_mix equals value.
    """
    A = [[as_rational(x) for x in row] for row in payoff_matrix]
    if not A or not A[0]:
        raise ValueError("payoff matrix must be nonempty")
    ncols = len(A[0])
    if any(len(row) != ncols for row in A):
        raise ValueError("payoff matrix must be rectangular")
    shift = 1 - min(min(row) for row in A)
    shifted = [[x + shift for x in row] for row in A]
    w, y = _simplex_max(shifted)
    total = sum(w)
    if total <= 0:
        raise ArithmeticError("degenerate LP optimum")
    shifted_value = 1 / total
    col_mix = tuple(x * shifted_value for x in w)
    row_mix = tuple(x * shifted_value for x in y)
    value = shifted_value - shift

    if sum(col_mix) != 1 or sum(row_mix) != 1:
        raise AssertionError("mixtures do not normalize")
    if any(x < 0 for x in col_mix) or any(x < 0 for x in row_mix):
        raise AssertionError("negative mixture weight")
    nrows = len(A)
    row_guarantee = min(
        sum((row_mix[r] * A[r][c] for r in range(nrows)), Fraction(0))
        for c in range(ncols)
    )
    col_concession = max(
        sum((A[r][c] * col_mix[c] for c in range(ncols)), Fraction(0))
        for r in range(nrows)
    )
    if not (row_guarantee == value == col_concession):
        raise AssertionError(
            f"certificates fail: {row_guarantee} vs {value} vs {col_concession}"
        )
    return MatrixGame(
        payoff=tuple(tuple(row) for row in A),
        value=value,
        row_mix=row_mix,
        col_mix=col_mix,
        row_labels=row_labels,
        col_labels=col_labels,
    )


def parse_payoff_matrix(text: str) -> List[List[Fraction]]:
    """Parse the matrix text format: a "rows cols" header followed by the
    entries as rationals, row-major, split on any whitespace."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix text needs a 'rows cols' header")
    rows, cols = int(tokens[0]), int(tokens[1])
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
    entries = tokens[2:]
    if len(entries) != rows * cols:
        raise ValueError(
            f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
        )
    it = iter(Fraction(tok) for tok in entries)
    return [[next(it) for _ in range(cols)] for _ in range(rows)]


def format_payoff_matrix(matrix: Sequence[Sequence[RationalLike]]) -> str:
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    lines = [f"{rows} {cols}"]
    for row in matrix:
        lines.append(" ".join(str(as_rational(x)) for x in row))
    return "\n".join(lines) + "\n"


def _mix_tables(mix: HiderPairMix, n: int):
    """Flatten a pair mixture into the per-outcome mass tables used by the
    best-response recursion.

    Returns (support_depths, partner, deep, stacked_mass) where
    partner[t][y'] is the mass of ordered two-hole placements with one nut
    at depth t and the other at depth y' in any single other hole, deep[t]
    is the mass per hole of one-hole placements whose shallow nut sits at t
    (deep nut at depth 1), and stacked_mass is the per-hole mass of the
    both-nuts-at-depth-1 strategy.
    """
    unit = Fraction(1, n * (n + 1))
    partner: Dict[Fraction, Dict[Fraction, Fraction]] = {}
    deep: Dict[Fraction, Fraction] = {}
    stacked_mass = Fraction(0)
    support = set()
    one = Fraction(1)
    for pair, w in mix.atoms:
        if pair.stacked:
            stacked_mass += w / n
            support.add(one)
            continue
        if pair.y1 == 0:
            raise ValueError(
                "depth-0 nuts have no well-defined find time; "
                "use the stacked flag for the (0, 1) strategy"
            )
        for t, other in ((pair.y1, pair.y2), (pair.y2, pair.y1)):
            support.add(t)
            partner.setdefault(t, {})
            partner[t][other] = partner[t].get(other, Fraction(0)) + w * unit
            deep[t] = deep.get(t, Fraction(0)) + w * unit
    return tuple(sorted(support)), partner, deep, stacked_mass


@lru_cache(maxsize=None)
def _coverage(
    classes: Tuple[Tuple[int, Tuple[Tuple[Fraction, Fraction], ...]], ...],
    budget: Fraction,
) -> Tuple[Fraction, Tuple[Tuple[int, ...], ...]]:
    """Maximize covered mass when every hole picks at most one extension.

    classes: (hole count, options) groups of exchangeable holes, each option
    an (extra cost, covered mass) pair with options sorted by cost and mass
    cumulative.  Returns (best mass, chosen option indices per class).

    The search runs over integers: costs and the budget are scaled by their
    common denominator, masses by theirs, which keeps the result exact and
    the inner loop cheap.
    """
    cost_den = math.lcm(
        budget.denominator,
        *(c.denominator for _, opts in classes for c, _ in opts),
    )
    mass_den = math.lcm(
        1, *(m.denominator for _, opts in classes for _, m in opts)
    )
    iclasses = tuple(
        (
            count,
            tuple(
                (int(c * cost_den), int(m * mass_den)) for c, m in options
            ),
        )
        for count, options in classes
    )

    @lru_cache(maxsize=None)
    def best_from(ci: int, left: int) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
        if ci == len(iclasses):
            return 0, ()
        count, options = iclasses[ci]

        best_val = -1
        best_pick: Tuple[Tuple[int, ...], ...] = ()

        def alloc(oi: int, holes_left: int, left_now: int, gain: int, picks):
            nonlocal best_val, best_pick
            if oi == len(options) or holes_left == 0:
                tail_val, tail_picks = best_from(ci + 1, left_now)
                total = gain + tail_val
                if total > best_val:
                    best_val = total
                    best_pick = (tuple(picks),) + tail_picks
                return
            cost, benefit = options[oi]
            max_take = holes_left if cost == 0 else min(holes_left, left_now // cost)
            for take in range(max_take, -1, -1):
                alloc(
                    oi + 1,
                    holes_left - take,
                    left_now - take * cost,
                    gain + take * benefit,
                    picks + [oi] * take,
                )

        alloc(0, count, left, 0, [])
        return best_val, best_pick

    value, picks = best_from(0, int(budget * cost_den))
    return Fraction(value, mass_den), picks


def best_response_searcher(
    params: GameParams, mix: HiderPairMix, depth_grid_denominator: int = 8
) -> Tuple[Fraction, DigPlan]:
    """Exact best response of the searcher against a pair mixture.

    Works on the observation that an optimal adaptive strategy only pauses
    digging at depths where a first find can occur, and that after the first
    find only the final dug profile matters, so the continuation reduces to
    a budgeted coverage problem over the surviving placements.

    Returns the win probability and a witness plan; the plan is replayed
    through pair_payoff and must reproduce the value exactly.
    """
    return _respond_full(params, mix, depth_grid_denominator)


def _respond_full(
    params: GameParams,
    mix: HiderPairMix,
    depth_grid_denominator: int,
) -> Tuple[Fraction, DigPlan]:
    if params.k != 2 or params.j != 2:
        raise ValueError("best response requires k = j = 2")
    if params.n > 12:
        raise ValueError(f"n <= 12 supported, got {params.n}")
    g = depth_grid_denominator
    if not 2 <= g <= 8:
        raise ValueError(f"grid denominator must lie in 2..8, got {g}")
    for pair, _ in mix.atoms:
        if not pair.stacked and (pair.y1.denominator > g or pair.y2.denominator > g):
            raise ValueError(f"mix depth off the grid (denominator > {g}): {pair}")

    n, h = params.n, params.h
    support, partner, deep, stacked_mass = _mix_tables(mix, n)

    # every depth in play is a multiple of 1/scale and every mass a multiple
    # of 1/mass_den, so the recursion runs on plain integers
    scale = math.lcm(h.denominator, *range(1, g + 1))
    mass_den = stacked_mass.denominator
    for omap in partner.values():
        for m in omap.values():
            mass_den = math.lcm(mass_den, m.denominator)
    for m in deep.values():
        mass_den = math.lcm(mass_den, m.denominator)

    one = scale
    big_h = int(h * scale)
    isupport = tuple(sorted(int(s * scale) for s in support))
    ipartner = {
        int(t * scale): {
            int(o * scale): int(m * mass_den) for o, m in omap.items()
        }
        for t, omap in partner.items()
    }
    ideep = {int(t * scale): int(m * mass_den) for t, m in deep.items()}
    istacked = int(stacked_mass * mass_den)

    def next_depth(d: int) -> Optional[int]:
        for s in isupport:
            if s > d:
                return s
        return None

    @lru_cache(maxsize=None)
    def find_value(t: int, others: Tuple[int, ...]) -> int:
        budget = big_h - sum(others) - t
        total = istacked if t == one else 0
        classes, deep_class = _cov_inputs(ipartner, ideep, t, others, one)
        cov_classes = [
            (count, tuple((cost, mass) for cost, mass, _ in opts))
            for _, count, opts in classes
        ]
        if deep_class is not None:
            cov_classes.append((1, (deep_class,)))
        if cov_classes:
            total += int(_coverage(tuple(cov_classes), budget)[0])
        return total

    @lru_cache(maxsize=None)
    def prefind_value(state: Tuple[int, ...]) -> int:
        budget = big_h - sum(state)
        best = 0
        seen = set()
        for idx, d in enumerate(state):
            if d in seen:
                continue
            seen.add(d)
            t = next_depth(d)
            if t is None or t - d > budget:
                continue
            others = state[:idx] + state[idx + 1 :]
            cand = find_value(t, others) + prefind_value(
                tuple(sorted(others + (t,), reverse=True))
            )
            if cand > best:
                best = cand
        return best

    value = Fraction(prefind_value((0,) * n), mass_den)
    plan = _extract_plan(
        params, g, ipartner, ideep, prefind_value, find_value, next_depth, scale
    )
    check = pair_payoff(params, mix, plan)
    if check != value:
        raise AssertionError(
            f"plan replay mismatch: recursion gives {value}, replay gives {check}"
        )
    return value, plan


def _cov_inputs(partner, deep, t: int, others: Tuple[int, ...], one: int):
    """Coverage classes after a first find at depth t: extensions of the
    other holes to deeper partner depths, plus finishing the found hole to
    the full depth for the one-hole placements.  Depths are integers on a
    common scale with `one` the scaled full depth."""
    cells = partner.get(t, {})
    grouped: Dict[int, int] = {}
    for c in others:
        grouped[c] = grouped.get(c, 0) + 1
    classes = []
    for c, count in sorted(grouped.items(), reverse=True):
        opts = []
        acc = 0
        for depth_val in sorted(cells):
            if depth_val > c:
                acc += cells[depth_val]
                opts.append((depth_val - c, acc, depth_val))
        if opts:
            classes.append((c, count, tuple(opts)))
    deep_mass = deep.get(t, 0)
    deep_class = None
    if deep_mass > 0 and t < one:
        deep_class = (one - t, deep_mass)
    return classes, deep_class


def _steps_for(
    hole: int,
    t: int,
    others: Tuple[int, ...],
    depths: List[int],
    big_h: int,
    partner,
    deep,
    one: int,
) -> List[Tuple[int, int]]:
    """Continuation steps maximizing covered mass after a find at depth t,
    mapped onto concrete hole numbers (lowest eligible index per class).
    Depths are integers on a common scale; targets come back on it too."""
    budget = big_h - sum(others) - t
    classes, deep_class = _cov_inputs(partner, deep, t, others, one)
    cov_classes = [
        (count, tuple((cost, mass) for cost, mass, _ in opts))
        for _, count, opts in classes
    ]
    if deep_class is not None:
        cov_classes.append((1, (deep_class,)))
    if not cov_classes:
        return []
    _, picks = _coverage(tuple(cov_classes), budget)
    steps: List[Tuple[int, int]] = []
    used = {hole}
    for ci, (c, _count, opts) in enumerate(classes):
        for oi in picks[ci]:
            target = opts[oi][2]
            cand = min(
                i
                for i in range(len(depths))
                if i not in used and depths[i] == c
            )
            used.add(cand)
            steps.append((cand + 1, target))
    if deep_class is not None and picks[len(classes)]:
        steps.append((hole + 1, one))
    return steps


_FALLBACK_TABLES: Dict[Tuple[int, int, int], Tuple] = {}


def _fallback_tables(g: int, n: int, scale: int):
    """Mass tables of the uniform mixture over the whole grid pair pool with
    depths pre-scaled to integers, used to fill continuation entries at find
    depths the responded-to mix never produces."""
    key = (g, n, scale)
    if key not in _FALLBACK_TABLES:
        pool = grid_pair_pool(g)
        w = Fraction(1, len(pool))
        uniform = HiderPairMix.from_items([(pair, w) for pair in pool])
        _, partner, deep, _ = _mix_tables(uniform, n)
        ipartner = {
            int(t * scale): {
                int(o * scale): m for o, m in omap.items()
            }
            for t, omap in partner.items()
        }
        ideep = {int(t * scale): m for t, m in deep.items()}
        _FALLBACK_TABLES[key] = (ipartner, ideep)
    return _FALLBACK_TABLES[key]


def _extract_plan(
    params: GameParams,
    g: int,
    partner,
    deep,
    prefind_value,
    find_value,
    next_depth,
    scale: int,
) -> DigPlan:
    """Replay the argmax chain of the best-response recursion into an
    explicit DigPlan, then complete it into a total strategy.

    The recursion prescribes probes and continuations only at the depths the
    responded-to mixture can occupy.  Finds at any other grid depth get a
    fallback continuation (coverage against the uniform pool mixture), and
    leftover budget extends the probe script round robin across the grid.
    Neither completion can fire against the original mixture, so the
    replayed payoff still matches the recursion value exactly.
    """
    n, h = params.n, params.h
    one = scale
    big_h = int(h * scale)
    universe = [int(y * scale) for y in grid_depths(g)]
    targets = [i * scale // g for i in range(1, g + 1)]
    fb_partner, fb_deep = _fallback_tables(g, n, scale)
    depths = [0] * n
    prefind: List[Tuple[int, Fraction]] = []
    table = []

    def add_fallbacks(probe_index: int, hole: int, d0: int, t: int,
                      skip_target: bool) -> None:
        for y in universe:
            if y <= d0 or y > t or (skip_target and y == t):
                continue
            others = tuple(depths[:hole] + depths[hole + 1 :])
            steps = _steps_for(
                hole, y, others, depths, big_h, fb_partner, fb_deep, one
            )
            if steps:
                table.append(
                    (
                        (probe_index, Fraction(y, scale)),
                        tuple((i, Fraction(ti, scale)) for i, ti in steps),
                    )
                )

    while True:
        state = tuple(sorted(depths, reverse=True))
        target_value = prefind_value(state)
        if target_value == 0:
            break
        budget = big_h - sum(state)
        chosen = None
        seen = set()
        for idx, d in enumerate(state):
            if d in seen:
                continue
            seen.add(d)
            t = next_depth(d)
            if t is None or t - d > budget:
                continue
            others = state[:idx] + state[idx + 1 :]
            cand = find_value(t, others) + prefind_value(
                tuple(sorted(others + (t,), reverse=True))
            )
            if cand == target_value:
                chosen = (d, t, others)
                break
        if chosen is None:
            raise AssertionError("argmax replay lost the recursion value")
        d, t, others = chosen
        hole = min(i for i in range(n) if depths[i] == d)
        probe_index = len(prefind)
        prefind.append((hole + 1, Fraction(t, scale)))

        steps = _steps_for(hole, t, others, depths, big_h, partner, deep, one)
        if steps:
            table.append(
                (
                    (probe_index, Fraction(t, scale)),
                    tuple((i, Fraction(ti, scale)) for i, ti in steps),
                )
            )
        add_fallbacks(probe_index, hole, d, t, skip_target=bool(steps))
        depths[hole] = t

    # burn leftover budget round robin across the grid so the plan stays
    # informative against pairs the responded-to mixture never plays
    while True:
        budget = big_h - sum(depths)
        chosen = None
        for i, d in enumerate(depths):
            t = next((u for u in targets if u > d), None)
            if t is None or t - d > budget:
                continue
            if chosen is None or (d, i) < (chosen[1], chosen[0]):
                chosen = (i, d, t)
        if chosen is None:
            break
        hole, d, t = chosen
        probe_index = len(prefind)
        prefind.append((hole + 1, Fraction(t, scale)))
        add_fallbacks(probe_index, hole, d, t, skip_target=False)
        depths[hole] = t

    return DigPlan(tuple(prefind), "table", tuple(table))


def _parallel_plans(params: GameParams, g: int) -> List[DigPlan]:
    """Staircase searcher plans: probe m holes in lockstep through the grid
    depths, and after a find at depth y either re-dig the found hole to the
    bottom (catching a partner straight below) or dig every untouched hole
    to depth 1 - y (catching one across).  Probing along the grid itself
    keeps the lockstep lag below the next find depth, so both continuations
    always fit the remaining budget; mixing the two rows per m carries the
    equalizing guarantee for whole budgets."""
    n, h = params.n, params.h
    one = Fraction(1)
    ladder = grid_depths(g) + (one,)
    plans: List[DigPlan] = []
    for m in range(1, min(n, math.floor(h)) + 1):
        prefind = [(hole + 1, level) for level in ladder for hole in range(m)]
        for dig_found in (True, False):
            table = []
            for pi, (hole_no, target) in enumerate(prefind):
                hole = hole_no - 1
                # depth of every probed hole the moment this probe runs
                reached = [
                    max(
                        (tg for hn, tg in prefind[:pi] if hn == j + 1),
                        default=Fraction(0),
                    )
                    for j in range(m)
                ]
                prev = reached[hole]
                for y in ladder:
                    if not prev < y <= target:
                        continue
                    budget = h - (sum(reached) - prev + y)
                    cur = dict(enumerate(reached))
                    cur[hole] = y
                    steps: List[Tuple[int, Fraction]] = []

                    def dig(j: int, to: Fraction) -> None:
                        nonlocal budget
                        have = cur.get(j, Fraction(0))
                        goal = min(to, have + budget)
                        if goal > have:
                            steps.append((j + 1, goal))
                            budget -= goal - have
                            cur[j] = goal

                    if dig_found:
                        dig(hole, one)
                    for j in range(m, n):
                        dig(j, one - y)
                    # leftover lag budget: top the lockstep holes, then burn
                    for j in range(m):
                        if j != hole:
                            dig(j, one)
                    for j in range(m, n):
                        dig(j, one)
                    if not dig_found:
                        dig(hole, one)
                    if steps:
                        table.append(((pi, y), tuple(steps)))
            plans.append(DigPlan(tuple(prefind), "table", tuple(table)))
    return plans


def _float_game(
    matrix: np.ndarray,
) -> Tuple[float, np.ndarray, np.ndarray]:
    """Approximate equilibrium of a matrix game (rows maximize) from a
    floating-point LP; the hider mixture comes out of the duals."""
    m, n = matrix.shape
    cost = np.zeros(m + 1)
    cost[m] = -1.0
    a_ub = np.hstack([-matrix.T, np.ones((n, 1))])
    a_eq = np.array([[1.0] * m + [0.0]])
    res = linprog(
        cost,
        A_ub=a_ub,
        b_ub=np.zeros(n),
        A_eq=a_eq,
        b_eq=np.ones(1),
        bounds=[(0, None)] * m + [(None, None)],
        method="highs",
    )
    if res.status != 0:
        raise AssertionError(f"float LP failed with status {res.status}")
    col = -np.asarray(res.ineqlin.marginals)
    col = np.clip(col, 0.0, None)
    total = col.sum()
    if total <= 0:
        col = np.full(n, 1.0 / n)
    else:
        col = col / total
    return -res.fun, res.x[:m], col


def _rationalize_mix(weights: Sequence[float]) -> List[Fraction]:
    """Snap float mixture weights to rationals on one common denominator.

    Per-weight snapping would give near-coprime denominators whose lcm, and
    with it every downstream exact computation, blows up."""
    scale = 10**6
    snapped = [round(w * scale) if w > 1e-9 else 0 for w in weights]
    total = sum(snapped)
    if total == 0:
        raise AssertionError("empty mixture after snapping")
    return [Fraction(s, total) for s in snapped]


def restricted_game_value(
    params: GameParams,
    depth_grid_denominator: int,
    seed_plans: Sequence[DigPlan] = (),
) -> MatrixGame:
    """Value of the caching game restricted to grid pair strategies, solved
    by a two-sided cut loop.

    Hider strategies are every canonical grid pair plus the stacked
    strategy.  A floating-point sweep grows the plan set: each round solves
    the float LP over the full pair pool, responds exactly to a
    rationalized hider optimum read off the duals, and stops once the best
    response value meets the LP estimate.  An exact phase then re-solves
    the assembled game with the rational simplex and certifies the best
    hider mixture seen against every adaptive plan (via the best-response
    recursion) and the searcher mixture against every pool pair (via the
    payoff cache), cutting further if either check objects.

    seed_plans warm-starts the plan set, e.g. with equilibrium rows from a
    smaller budget; plans whose probe script overruns the budget are
    skipped.  The returned game keeps the searcher support rows against the
    full pair pool, with exact equilibrium certificates.
    """
    if params.k != 2 or params.j != 2:
        raise ValueError("restricted game requires k = j = 2")
    if params.n > 6:
        raise ValueError(f"n <= 6 supported, got {params.n}")
    g = depth_grid_denominator
    if not 2 <= g <= 8:
        raise ValueError(f"grid denominator must lie in 2..8, got {g}")

    n, h = params.n, params.h
    pool = grid_pair_pool(g)
    deltas = [HiderPairMix.delta(pair) for pair in pool]

    plans: List[DigPlan] = []
    for m in range(1, min(n, math.floor(h)) + 1):
        plans.append(resume_plan([(i + 1, Fraction(1)) for i in range(m)]))
    if not plans:
        plans.append(DigPlan((), "resume"))
    plans.extend(_parallel_plans(params, g))
    seen = set(plans)
    for plan in seed_plans:
        if plan not in seen and plan.prefind_cost() <= h and plan.max_hole() <= n:
            seen.add(plan)
            plans.append(plan)

    cells: Dict[Tuple[int, int], Fraction] = {}

    def cell(pi: int, qi: int) -> Fraction:
        key = (pi, qi)
        if key not in cells:
            cells[key] = pair_payoff(params, deltas[qi], plans[pi])
        return cells[key]

    known = set(plans)
    float_cells: Dict[Tuple[int, int], float] = {}

    def fcell(pi: int, qi: int) -> float:
        key = (pi, qi)
        if key not in float_cells:
            float_cells[key] = float(cell(pi, qi))
        return float_cells[key]

    # float sweep: grow the plan set and localize both mixtures cheaply
    # before paying for exact pivots
    row_f = [1.0] * len(plans)
    col_f = np.full(len(pool), 1.0 / len(pool))
    avg = np.zeros(len(pool))
    best_sigma: Optional[Tuple[Fraction, HiderPairMix]] = None
    for sweep_round in range(200):
        small_f = np.array(
            [
                [fcell(pi, qi) for qi in range(len(pool))]
                for pi in range(len(plans))
            ]
        )
        v_f, row_f, col_f = _float_game(small_f)
        # raw duals hop between tied vertices round to round; a decayed
        # running average settles on the equalizing mixture instead, so
        # alternate the response target between the two
        avg = 0.7 * avg + col_f
        smoothed = np.where(avg > 1e-3, avg, 0.0)
        total = smoothed.sum()
        smoothed = smoothed / total if total > 0 else col_f
        targets = (col_f, smoothed) if sweep_round % 2 == 0 else (smoothed, col_f)
        done = False
        moved = False
        for target in targets:
            hider_items = [
                (pool[qi], w)
                for qi, w in enumerate(_rationalize_mix(target))
                if w > 0
            ]
            hider_mix = HiderPairMix.from_items(hider_items)
            br_value, br_plan = _respond_full(params, hider_mix, g)
            if best_sigma is None or br_value < best_sigma[0]:
                best_sigma = (br_value, hider_mix)
            if float(best_sigma[0]) <= v_f + 1e-9:
                done = True
                break
            if br_plan not in known:
                known.add(br_plan)
                plans.append(br_plan)
                moved = True
                break
        if done or not moved:
            break

    keep = [pi for pi, w in enumerate(row_f) if w > 1e-12]
    if keep and len(keep) < len(plans) and len(row_f) == len(plans):
        old_cells = cells
        plans = [plans[pi] for pi in keep]
        cells = {}
        for new_pi, old_pi in enumerate(keep):
            for qi in range(len(pool)):
                if (old_pi, qi) in old_cells:
                    cells[(new_pi, qi)] = old_cells[(old_pi, qi)]
        known = set(plans)

    # exact phase: rational simplex over the kept rows and the columns the
    # float duals touched, then certify the sweep's best hider mixture
    # against the exact value; cut further only if either side objects.
    # The security check runs over the whole pool, so a lean column set
    # costs extra rounds at worst, never soundness.
    active = [qi for qi in range(len(pool)) if col_f[qi] > 1e-9]
    if not active:
        active = list(range(len(pool)))
    index_of = {pair: qi for qi, pair in enumerate(pool)}
    while True:
        small = [[cell(pi, qi) for qi in active] for pi in range(len(plans))]
        game = solve_matrix_game(small)
        v, row_mix = game.value, game.row_mix

        support = [(pi, w) for pi, w in enumerate(row_mix) if w > 0]
        secured = [
            sum((w * cell(pi, qi) for pi, w in support), Fraction(0))
            for qi in range(len(pool))
        ]
        worst = min(secured)
        if worst > v:
            raise AssertionError(f"secured {worst} above LP value {v}")
        if worst < v:
            shortfall = sorted(
                (val, qi) for qi, val in enumerate(secured) if val < v
            )
            added = False
            for _, qi in shortfall[:3]:
                if qi not in active:
                    active.append(qi)
                    added = True
            if not added:
                raise AssertionError("active column undercuts its own LP")
            continue

        if best_sigma is None or best_sigma[0] != v:
            hider_items = [
                (pool[active[c]], w)
                for c, w in enumerate(game.col_mix)
                if w > 0
            ]
            hider_mix = HiderPairMix.from_items(hider_items)
            br_value, br_plan = best_response_searcher(params, hider_mix, g)
            if br_value < v:
                raise AssertionError(
                    f"response value {br_value} below LP value {v}"
                )
            if best_sigma is None or br_value < best_sigma[0]:
                best_sigma = (br_value, hider_mix)
            if br_value > v:
                if br_plan in known:
                    raise AssertionError("cut loop stalled without progress")
                known.add(br_plan)
                plans.append(br_plan)
                continue

        hider_mix = best_sigma[1]
        payoff = tuple(
            tuple(cell(pi, qi) for qi in range(len(pool)))
            for pi, _ in support
        )
        kept_mix = tuple(w for _, w in support)
        full_mix = [Fraction(0)] * len(pool)
        for pair, w in hider_mix.atoms:
            full_mix[index_of[pair]] += w
        for row in payoff:
            given = sum(
                (row[qi] * full_mix[qi] for qi in range(len(pool))),
                Fraction(0),
            )
            if given > v:
                raise AssertionError("hider certificate fails on kept rows")
        return MatrixGame(
            payoff=payoff,
            value=v,
            row_mix=kept_mix,
            col_mix=tuple(full_mix),
            row_labels=tuple(plans[pi] for pi, _ in support),
            col_labels=pool,
        )
