import pytest

from bhzgame.engine import (
    FullState,
    GameState,
    apply_action,
    empty_board,
    is_terminal,
    legal_actions,
    make_state,
    split,
    start_game,
)
from bhzgame.solver import (
    BudgetExceededError,
    Outcome,
    Solver,
    classify_full,
    classify_position,
    enumerate_table,
    winning_moves,
)


def reference_classify(fs: FullState) -> Outcome:
    """Plain recursive reference oracle, no memo, no stack tricks."""
    for action in legal_actions(fs):
        if reference_classify(apply_action(fs, action)) is Outcome.P:
            return Outcome.N
    return Outcome.P


def test_terminal_positions_are_p():
    for counts in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 0, 1)]:
        assert classify_position(make_state(4, counts)).outcome is Outcome.P


def test_agrees_with_reference_oracle():
    solver = Solver()
    cases = []
    for m in (2, 3, 4):
        for counts in _small_boards(m, 5):
            cases.append(FullState(GameState(m, counts), 0))
    cases += [start_game(3, n) for n in range(1, 13)]
    cases += [start_game(4, n) for n in range(1, 11)]
    for fs in cases:
        assert solver.classify_full(fs).outcome is reference_classify(fs), fs


def _small_boards(m, top):
    if m == 2:
        return [(a,) for a in range(top + 1)]
    if m == 3:
        return [(a, b) for a in range(top + 1) for b in range(top + 1)]
    return [(a, b, c) for a in range(top + 1) for b in range(3) for c in range(4)]


def test_pn_recursion_property():
    solver = Solver()
    for m in (3, 4):
        for counts in _small_boards(m, 4):
            state = GameState(m, counts)
            cls = solver.classify_position(state).outcome
            children = [
                solver.classify_full(apply_action(FullState(state, 0), a)).outcome
                for a in legal_actions(FullState(state, 0))
            ]
            if cls is Outcome.P:
                assert all(ch is Outcome.N for ch in children)
            else:
                assert Outcome.P in children


def test_classify_full_examples():
    # full-game values pin the empty-board winners, exceptions included
    assert classify_full(start_game(4, 2)).outcome is Outcome.N   # Player 1
    assert classify_full(start_game(4, 17)).outcome is Outcome.P  # Player 2
    assert classify_full(start_game(3, 9)).outcome is Outcome.P   # Player 2
    # remaining=0 reduces to the plain board classification
    state = make_state(4, (5, 1, 1))
    assert classify_full(FullState(state, 0)).outcome is classify_position(state).outcome


def test_winning_moves():
    # the only winning move from (2,0,2) pushes a piece into the hole
    assert winning_moves(make_state(4, (2, 0, 2))) == [split(3)]
    assert winning_moves(make_state(4, (1, 0, 0))) == []
    wins = winning_moves(make_state(4, (2, 0, 0)))
    assert [mv.label for mv in wins] == ["M"]


def test_enumerate_table_order_and_values():
    rows = list(enumerate_table(2, 7))
    assert [s.counts[0] for s, _ in rows] == list(range(8))
    assert [c.outcome.value for _, c in rows] == ["P", "P", "N", "N", "P", "P", "N", "N"]
    rows = list(enumerate_table(4, 1, 0, 1))
    assert [s.counts for s, _ in rows] == [(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 0, 1)]


def test_memo_shared_and_deterministic():
    solver = Solver()
    first = solver.classify_position(make_state(4, (10, 1, 10))).outcome
    size = len(solver.memo)
    second = solver.classify_position(make_state(4, (10, 1, 10))).outcome
    assert first is second
    assert len(solver.memo) == size  # pure lookup the second time


def test_node_budget(monkeypatch):
    solver = Solver(node_budget=10)
    with pytest.raises(BudgetExceededError):
        solver.classify_full(start_game(4, 40))
    monkeypatch.setenv("BHZGAME_NODE_BUDGET", "25")
    assert Solver().node_budget == 25


def test_deep_chain_does_not_hit_recursion_limit():
    # a single-column game of length 2000 forces a very deep DFS
    assert classify_position(make_state(2, (2000,))).outcome is Outcome.P
