"""Exact values, bounds, and optimal strategies for three families of
hide-and-seek allocation games, their Bernoulli limits, and the supporting
rational-arithmetic toolkit."""

from .caching import (
    DepthPair,
    DigPlan,
    GameParams,
    HiderPairMix,
    best_discretelimit_bound,
    bound_uniform_simplex,
    discretelimit_bound,
    discretelimitthm_bound,
    hider_19_7_mixture,
    hider_5_2_strategy,
    hider_small_h_strategy,
    largeh_value,
    pair_payoff,
    searcher_integer_h_value,
    stacked_pair,
    summary_table,
    table_2_2_4,
)
from .exactnum import (
    CoefficientMultiset,
    Rational,
    as_rational,
    binom,
    hypergeom_tail,
    normal_cdf,
    subset_sum_distribution,
)
from .kr import (
    KRInstance,
    kr_best_uniform,
    kr_check_conjecture,
    kr_conjectured_s_set,
    kr_gap,
    kr_general_value,
    kr_limit_value,
    kr_probe_two_level,
    kr_uniform_value,
    parity_floor,
    strict_floor,
)
from .mms import (
    LimitSolution,
    best_family,
    clt_check,
    family_crossing,
    family_curve,
    limit_objective,
    limit_to_finite,
    make_solution,
    mms_conjectured_value,
    mms_value,
    solution_distance,
)
from .simulate import (
    SimResult,
    double_limit_extremal_score,
    limitthm_bracket,
    non_extremal_cap,
    optimize_mixture,
    simulate_limit_game,
)
from .solver import (
    MatrixGame,
    best_response_searcher,
    restricted_game_value,
    solve_matrix_game,
)

__version__ = "0.1.0"
