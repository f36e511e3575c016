"""Shapley-type values and exit rules for partially defined games with examination costs."""

from .coalitions import Coalition, coalition, format_key, parse_key
from .errors import GameError, GameFileError
from .exit_rules import (
    RULES,
    ExitTrace,
    effective_stop,
    gamma,
    gamma_A,
    gamma_B,
    run_examination,
)
from .game import (
    CostProfile,
    FullGame,
    PartialGame,
    base_family,
    game_difference,
    game_join,
    game_meet,
    game_sum,
    game_sum_capped,
    make_cost_profile,
    make_full_game,
    make_partial_game,
    moebius_decompose,
    profile_sum,
    recompose,
    restrict,
    stage_family,
    unanimity_game,
    unity_game,
)
from .gamefile import dump_game, load_game, parse_game
from .structures import is_carrier, is_p_type, is_partnership, is_zero_coalition
from .values import (
    StageMatrix,
    cis_value,
    harsanyi_dividends,
    shapley_classic,
    shapley_pdg,
    staged_value,
)

__version__ = "0.1.0"
