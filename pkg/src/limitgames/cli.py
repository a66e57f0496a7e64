"""Command line front end.

Subcommands: mms curve|eval|cross, kr scan|check|probe,
caching table|value|bestresponse|bounds, simulate limit|double-limit,
game solve.

Rational-valued flags parse through Fraction, so "131/392" and "0.4" are
both exact; only genuinely real-valued flags (p, lambda, weights) accept
floats.  Tabular output is CSV (header row, '.' decimal, LF) or aligned
"key=value" records.  Exit status is 0 unless input or I/O is invalid;
a reported mismatch is data, not an error.  LGL_THREADS caps sweep workers.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import caching, kr, mms, simulate, solver
from .exactnum import CoefficientMultiset


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _coeff_multiset(text: str) -> CoefficientMultiset:
    """Parse "value:mult,value:mult" into a coefficient multiset."""
    pairs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            value, mult = part.rsplit(":", 1)
        else:
            value, mult = part, "1"
        pairs.append((Fraction(value), int(mult)))
    return CoefficientMultiset.from_pairs(pairs)


def _write_rows(rows: List[Dict[str, object]], fmt: str, out: Optional[str]) -> None:
    if not rows:
        return
    if fmt == "csv":
        header = list(rows[0].keys())
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(str(row[key]) for key in header))
        text = "\n".join(lines) + "\n"
    else:
        lines = []
        for row in rows:
            lines.append(" ".join(f"{key}={value}" for key, value in row.items()))
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _workers() -> int:
    raw = os.environ.get("LGL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# --- mms ---------------------------------------------------------------------


def _cmd_mms_curve(args) -> int:
    if not 0 < args.pmin <= args.pmax < 1:
        raise ValueError("need 0 < pmin <= pmax < 1")
    if args.step <= 0:
        raise ValueError("step must be positive")
    rows = []
    p = args.pmin
    while p <= args.pmax:
        best = mms.best_family(p)
        row: Dict[str, object] = {
            "p": p,
            "best_family": best.family,
            "best_value": repr(float(best.value)),
        }
        for tag in mms.FAMILY_TAGS:
            row[tag] = repr(float(mms.family_curve(tag, p)))
        rows.append(row)
        p += args.step
    _write_rows(rows, args.format, args.out)
    return 0


def _cmd_mms_eval(args) -> int:
    if args.coeffs is not None:
        if args.k is None:
            raise ValueError("--coeffs needs --k")
        value = mms.mms_value(args.coeffs, args.k)
        print(f"mms_value={value} ({float(value):.6f})")
        return 0
    if args.p is None:
        raise ValueError("need either --p or --coeffs")
    if args.family:
        value = mms.family_curve(args.family, args.p)
        print(f"family={args.family} p={args.p} value={value} ({float(value):.6f})")
        return 0
    for tag in mms.FAMILY_TAGS:
        value = mms.family_curve(tag, args.p)
        print(f"family={tag} p={args.p} value={value} ({float(value):.6f})")
    best = mms.best_family(args.p)
    print(f"best={best.family} value={best.value} ({float(best.value):.6f})")
    return 0


def _cmd_mms_cross(args) -> int:
    root = mms.family_crossing(args.family_a, args.family_b, args.lo, args.hi, args.tol)
    print(f"crossing({args.family_a}, {args.family_b}) = {root:.10f}")
    return 0


# --- kr ----------------------------------------------------------------------


def _scan_one(task) -> Dict[str, object]:
    n, k, d = task
    inst = kr.KRInstance(n=n, k=k, d=d)
    s_star, value = kr.kr_best_uniform(inst)
    conjectured = kr.kr_conjectured_s_set(inst)
    return {
        "n": n,
        "k": k,
        "d": d,
        "s_star": s_star,
        "value": value,
        "in_conjectured_set": s_star in conjectured,
    }


def _cmd_kr_scan(args) -> int:
    single = args.n is not None and args.k is not None and args.d is not None
    if single:
        tasks = [(args.n, args.k, args.d)]
    else:
        if None in (args.n_min, args.n_max, args.k_min, args.k_max, args.den_max):
            raise ValueError(
                "give --n --k --d for one instance, or all of "
                "--n-min --n-max --k-min --k-max --den-max for a sweep"
            )
        fracs = sorted(
            {
                Fraction(a, b)
                for b in range(2, args.den_max + 1)
                for a in range(1, b)
            }
        )
        tasks = [
            (n, k, d)
            for n in range(args.n_min, args.n_max + 1)
            for k in range(args.k_min, min(args.k_max, n) + 1)
            for d in fracs
        ]
    workers = _workers()
    if workers > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_one, tasks, chunksize=16))
    else:
        rows = [_scan_one(task) for task in tasks]
    _write_rows(rows, args.format, args.out)
    return 0


def _cmd_kr_check(args) -> int:
    inst = kr.KRInstance(n=args.n, k=args.k, d=args.d)
    result = kr.kr_check_conjecture(inst)
    print(
        f"n={args.n} k={args.k} d={args.d} holds={result.holds} "
        f"s_star={result.s_star} value={result.witness_value} "
        f"best_conjectured_s={result.best_conjectured_s} "
        f"best_conjectured_value={result.best_conjectured_value}"
    )
    return 0


def _cmd_kr_probe(args) -> int:
    inst = kr.KRInstance(n=args.n, k=args.k, d=args.d)
    value = kr.kr_probe_two_level(inst, args.s, args.m2)
    uniform = kr.kr_uniform_value(inst, args.s)
    print(
        f"n={args.n} k={args.k} d={args.d} s={args.s} m2={args.m2} "
        f"probe_value={value} uniform_value={uniform} "
        f"improves={value > uniform}"
    )
    return 0


# --- caching -----------------------------------------------------------------


def _cmd_caching_table(args) -> int:
    reference = caching.load_reference_table()
    rows = []
    for lo, hi, expected, rep in reference:
        if args.n != 4:
            expected, _ = caching.summary_table(rep, args.n)
        params = caching.GameParams(n=args.n, k=2, j=2, h=rep)
        game = solver.restricted_game_value(params, args.grid)
        rows.append(
            {
                "lo": lo,
                "hi": hi,
                "h": rep,
                "reference_value": expected,
                "computed_value": game.value,
                "match": game.value == expected,
            }
        )
        print(
            f"[{lo}, {hi}) h={rep} -> {game.value} "
            f"({'match' if rows[-1]['match'] else 'MISMATCH'})",
            file=sys.stderr,
            flush=True,
        )
    _write_rows(rows, args.format, args.out)
    return 0


def _cmd_caching_value(args) -> int:
    value, status = caching.summary_table(args.h, args.n)
    print(f"n={args.n} h={args.h} value={value} ({float(value):.6f}) status={status}")
    return 0


def _cmd_caching_bestresponse(args) -> int:
    mix = caching.load_hider_mix(args.mix)
    params = caching.GameParams(n=args.n, k=2, j=2, h=args.h)
    value, plan = solver.best_response_searcher(params, mix, args.grid)
    print(f"value={value} ({float(value):.6f})")
    text = caching.format_dig_plan(plan)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_caching_bounds(args) -> int:
    params = caching.GameParams(n=args.n, k=args.k, j=args.j, h=args.h)
    if params.k == params.j:
        bound = caching.bound_uniform_simplex(params)
        print(f"uniform_simplex_bound={bound} ({float(bound):.6f})")
    if params.k == 2 and params.j == 2:
        a, b, coeff = caching.best_discretelimit_bound(params.h)
        scaled = coeff / (params.n * (params.n + 1))
        print(f"depth_count_bound={scaled} ({float(scaled):.6f}) at a={a} b={b}")
        if 2 * params.h >= params.n + 1:
            value = caching.largeh_value(params)
            print(f"large_budget_value={value} ({float(value):.6f})")
        if (
            params.h.denominator == 1
            and params.h >= 1
            and 2 * params.h <= params.n + 1
        ):
            value = caching.searcher_integer_h_value(params)
            print(f"integer_budget_guarantee={value} ({float(value):.6f})")
        value, status = caching.summary_table(params.h, params.n)
        print(f"summary_value={value} ({float(value):.6f}) status={status}")
    return 0


# --- simulate ----------------------------------------------------------------


def _cmd_simulate_limit(args) -> int:
    result = simulate.simulate_limit_game(
        args.k, args.j, args.lam, args.trials, args.seed
    )
    print(
        f"k={result.k} j={result.j} lambda={result.lam} trials={result.trials} "
        f"wins={result.wins} estimate={result.estimate!r} "
        f"std_error={result.std_error!r} seed={result.seed}"
    )
    if args.j == args.k:
        target = simulate.interval_walk_win_probability(args.k, args.lam)
        z = (result.estimate - target) / result.std_error if result.std_error else 0.0
        print(f"target={target!r} z={z:.3f}")
    return 0


def _cmd_simulate_double_limit(args) -> int:
    if args.optimize_score:
        weight, score = simulate.optimize_mixture()
        cap = simulate.non_extremal_cap()
        print(f"best_weight={weight:.6f} guaranteed_score={score:.6f} cap={cap}")
        return 0
    lams = [float(tok) for tok in args.lams.split(",") if tok]
    target = math.factorial(args.j) * math.comb(args.k, args.j)
    for lam in lams:
        result = simulate.simulate_limit_game(
            args.k, args.j, lam, args.trials, args.seed
        )
        scaled = result.estimate * lam**args.j
        print(
            f"lambda={lam} trials={result.trials} estimate={result.estimate!r} "
            f"scaled={scaled:.4f} target={target}"
        )
    return 0


# --- game --------------------------------------------------------------------


def _cmd_game_solve(args) -> int:
    with open(args.matrix) as fh:
        matrix = solver.parse_payoff_matrix(fh.read())
    game = solver.solve_matrix_game(matrix)
    lines = [f"value {game.value}"]
    lines.append("row_mix " + " ".join(str(x) for x in game.row_mix))
    lines.append("col_mix " + " ".join(str(x) for x in game.col_mix))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgl", description="Exact values, bounds, and strategies "
        "for three families of hide-and-seek allocation games."
    )
    top = parser.add_subparsers(dest="command", required=True)

    p_mms = top.add_parser("mms", help="subset-sum threshold game tools")
    mms_sub = p_mms.add_subparsers(dest="subcommand", required=True)

    c = mms_sub.add_parser("curve", help="family curves over a p range")
    c.add_argument("--pmin", type=_fraction, required=True)
    c.add_argument("--pmax", type=_fraction, required=True)
    c.add_argument("--step", type=_fraction, required=True)
    c.add_argument("--out")
    c.add_argument("--format", choices=("csv", "records"), default="csv")
    c.set_defaults(func=_cmd_mms_curve)

    c = mms_sub.add_parser("eval", help="evaluate families or a finite instance")
    c.add_argument("--p", type=_fraction)
    c.add_argument("--family", choices=mms.FAMILY_TAGS)
    c.add_argument("--coeffs", type=_coeff_multiset, help="value:mult,value:mult,...")
    c.add_argument("--k", type=int)
    c.set_defaults(func=_cmd_mms_eval)

    c = mms_sub.add_parser("cross", help="crossing point of two family curves")
    c.add_argument("--family-a", choices=mms.FAMILY_TAGS, required=True)
    c.add_argument("--family-b", choices=mms.FAMILY_TAGS, required=True)
    c.add_argument("--lo", type=_fraction, required=True)
    c.add_argument("--hi", type=_fraction, required=True)
    c.add_argument("--tol", type=float, default=1e-9)
    c.set_defaults(func=_cmd_mms_cross)

    p_kr = top.add_parser("kr", help="threshold-exceedance allocation game tools")
    kr_sub = p_kr.add_subparsers(dest="subcommand", required=True)

    c = kr_sub.add_parser("scan", help="best uniform support size per instance")
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--d", type=_fraction)
    c.add_argument("--n-min", type=int)
    c.add_argument("--n-max", type=int)
    c.add_argument("--k-min", type=int)
    c.add_argument("--k-max", type=int)
    c.add_argument("--den-max", type=int)
    c.add_argument("--out")
    c.add_argument("--format", choices=("csv", "records"), default="records")
    c.set_defaults(func=_cmd_kr_scan)

    c = kr_sub.add_parser("check", help="candidate-set conjecture check")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--d", type=_fraction, required=True)
    c.set_defaults(func=_cmd_kr_check)

    c = kr_sub.add_parser("probe", help="two-level non-uniform strategy probe")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--d", type=_fraction, required=True)
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--m2", type=int, required=True)
    c.set_defaults(func=_cmd_kr_probe)

    p_c = top.add_parser("caching", help="hide-and-dig caching game tools")
    c_sub = p_c.add_subparsers(dest="subcommand", required=True)

    c = c_sub.add_parser("table", help="recompute the budget/value step table")
    c.add_argument("--n", type=int, default=4)
    c.add_argument("--grid", type=int, default=8)
    c.add_argument("--out")
    c.add_argument("--format", choices=("csv", "records"), default="records")
    c.set_defaults(func=_cmd_caching_table)

    c = c_sub.add_parser("value", help="best known value or bound at (h, n)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--h", type=_fraction, required=True)
    c.set_defaults(func=_cmd_caching_value)

    c = c_sub.add_parser("bestresponse", help="exact searcher best response")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--h", type=_fraction, required=True)
    c.add_argument("--grid", type=int, default=8)
    c.add_argument("--mix", required=True, help="hider-pair-mix v1 file")
    c.add_argument("--out", help="write the witness dig plan here")
    c.set_defaults(func=_cmd_caching_bestresponse)

    c = c_sub.add_parser("bounds", help="closed-form bounds at (h, n)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--h", type=_fraction, required=True)
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--j", type=int, default=2)
    c.set_defaults(func=_cmd_caching_bounds)

    p_s = top.add_parser("simulate", help="Monte Carlo for the interval limit")
    s_sub = p_s.add_subparsers(dest="subcommand", required=True)

    c = s_sub.add_parser("limit", help="interval-walk win probability")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--j", type=int, required=True)
    c.add_argument("--lambda", dest="lam", type=float, required=True)
    c.add_argument("--trials", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=_cmd_simulate_limit)

    c = s_sub.add_parser("double-limit", help="scaled estimates across lambda")
    c.add_argument("--k", type=int, default=3)
    c.add_argument("--j", type=int, default=2)
    c.add_argument("--lams", default="25,50,100")
    c.add_argument("--trials", type=int, default=100000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument(
        "--optimize-score",
        action="store_true",
        help="print the optimal two-family mixture score instead",
    )
    c.set_defaults(func=_cmd_simulate_double_limit)

    p_g = top.add_parser("game", help="generic matrix game solving")
    g_sub = p_g.add_subparsers(dest="subcommand", required=True)

    c = g_sub.add_parser("solve", help="solve a matrix game from a file")
    c.add_argument("--matrix", required=True, help="matrix text file")
    c.add_argument("--out")
    c.set_defaults(func=_cmd_game_solve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
