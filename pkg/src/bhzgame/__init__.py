"""Black hole decomposition games: engine, exact solver, closed forms,
verification harness, CLI and play service."""

from .engine import (
    FullState,
    GameState,
    IllegalActionError,
    Move,
    Placement,
    Player,
    apply_action,
    apply_move,
    apply_placement,
    board_value,
    empty_board,
    fibonacci_weight,
    is_terminal,
    legal_actions,
    legal_moves,
    legal_placements,
    make_state,
    parse_action,
    start_game,
    zeckendorf_decomposition,
)
from .solver import (
    Classification,
    Outcome,
    Solver,
    classify_full,
    classify_position,
    default_solver,
    enumerate_table,
    winning_moves,
)
from .theory import (
    ClosedFormResult,
    StrategyAdvice,
    UncoveredError,
    classify_f2,
    classify_f3,
    classify_f4,
    classify_state,
    empty_board_winner,
    prescribed_decomposition_move,
    prescribed_placement,
)

__version__ = "0.1.0"
