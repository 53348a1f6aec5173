"""Dominating-vertex property toolkit for tournaments and nontransitive dice.

Library layout:

- tournament: tournaments, tournament sets, the S_k predicates
- constructions: padding, rotational, and block-combine constructions
- bounds: closed-form bound calculators and the f(m,k) upper-bound table
- cnf / solver / exact: SAT encoding, embedded complete solver, f_exact
- dice: exact multi-roll odds, realized tournaments, advisor, simulator
- dice_search: bounded search for dice realizing target tournaments
- files / plots / cli / server: formats, figures, CLI, and the game API
"""

__version__ = "0.1.0"

from .bounds import (
    BoundsTableEntry,
    bounds_table,
    closed_form_upper,
    coarse_upper,
    erdos_lower,
    erdos_upper,
    f_base,
    split_dp_upper,
    szekeres_lower,
)
from .cnf import CnfFormula, SymmetryOptions, VarMap, encode, parse_dimacs, to_dimacs
from .constructions import FillPolicy, combine, pad_set, rotational_set
from .dice import (
    Advice,
    DiceSet,
    Die,
    SimTally,
    SumDistribution,
    WinOdds,
    advise,
    jeffries_five,
    min_edge_win,
    realized_set,
    simulate,
    sum_distribution,
    tournament_at,
    win_odds,
)
from .dice_search import DiceSearchResult, SearchSpace, search_multiroll, search_realization
from .exact import (
    FExactReport,
    SearchVerdict,
    brute_force_exists,
    decode,
    exists_sk_set,
    f_exact,
)
from .solver import Budget, SolveOutcome, SolverConfig, SolverStats, solve
from .tournament import (
    Tournament,
    TournamentSet,
    dominates,
    find_dominator,
    is_sk,
    paley,
    undominated_witness,
)

__all__ = [
    "__version__",
    "Advice",
    "BoundsTableEntry",
    "Budget",
    "CnfFormula",
    "DiceSearchResult",
    "DiceSet",
    "Die",
    "FExactReport",
    "FillPolicy",
    "SearchSpace",
    "SearchVerdict",
    "SimTally",
    "SolveOutcome",
    "SolverConfig",
    "SolverStats",
    "SumDistribution",
    "SymmetryOptions",
    "Tournament",
    "TournamentSet",
    "VarMap",
    "WinOdds",
    "advise",
    "bounds_table",
    "brute_force_exists",
    "closed_form_upper",
    "coarse_upper",
    "combine",
    "decode",
    "dominates",
    "encode",
    "erdos_lower",
    "erdos_upper",
    "exists_sk_set",
    "f_base",
    "f_exact",
    "find_dominator",
    "is_sk",
    "jeffries_five",
    "min_edge_win",
    "pad_set",
    "paley",
    "parse_dimacs",
    "realized_set",
    "rotational_set",
    "search_multiroll",
    "search_realization",
    "simulate",
    "solve",
    "split_dp_upper",
    "sum_distribution",
    "szekeres_lower",
    "to_dimacs",
    "tournament_at",
    "undominated_witness",
    "win_odds",
]
