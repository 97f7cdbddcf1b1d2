"""End-to-end acceptance battery.

Each test covers one numbered claim about the engine/solver/closed-form
stack and prints a single [PASS] line with its scope when it succeeds
(run pytest with -s to see the lines as they stream).
"""

import sys

import pytest

from bhzgame.engine import Player, make_state, start_game
from bhzgame.solver import Outcome, Solver, enumerate_table
from bhzgame import theory, verify


@pytest.fixture(scope="module")
def solver():
    return Solver()


def report(line: str) -> None:
    print(line)
    sys.stdout.flush()


def test_criterion_1_f2_pattern(solver):
    for a in range(1001):
        got = solver.classify_position(make_state(2, (a,))).outcome
        expected = Outcome.P if a % 4 in (0, 1) else Outcome.N
        assert got is expected, a
    report("[PASS] criterion 1: single-column mod-4 win pattern, a <= 1000")


def test_criterion_2_f3_table(solver):
    p_residues = {(0, 0), (0, 1), (1, 0)}
    for a in range(61):
        for b in range(61):
            got = solver.classify_position(make_state(3, (a, b))).outcome
            expected = Outcome.P if (a % 3, b % 3) in p_residues else Outcome.N
            assert got is expected, (a, b)
    report("[PASS] criterion 2: two-column mod-3 win table, a,b <= 60")


def test_criterion_3_f4_b0_table(solver):
    for a in range(46):
        for c in range(61):
            state = make_state(4, (a, 0, c))
            form = theory.classify_f4(state)
            assert form.covered, state
            assert form.outcome is solver.classify_position(state).outcome, state
    # the anchor exception states, explicitly
    for counts, expected in [((2, 0, 0), "N"), ((1, 0, 2), "P"),
                             ((1, 0, 3), "N"), ((2, 0, 1), "P")]:
        assert solver.classify_position(make_state(4, counts)).outcome.value == expected
    report("[PASS] criterion 3: three-column win grid (middle column empty), a <= 45, c <= 60")


def test_criterion_4_f4_b1_row(solver):
    for a in range(46):
        for c in range(61):
            state = make_state(4, (a, 1, c))
            form = theory.classify_f4(state)
            assert form.covered, state
            assert form.outcome is solver.classify_position(state).outcome, state
            if a % 3 in (1, 2):
                assert form.outcome is Outcome.N, state
    for counts in theory.F4_B1_EXCEPTIONS:
        assert solver.classify_position(make_state(4, counts)).outcome is Outcome.N
    report("[PASS] criterion 4: three-column win rules (one piece mid-column), a <= 45, c <= 60")


def test_criterion_5_empty_board_winners(solver):
    for m, top in ((3, 200), (4, 120)):
        for n in range(1, top + 1):
            predicted, _ = theory.empty_board_winner(n, m)
            outcome = solver.classify_full(start_game(m, n)).outcome
            actual = Player.ONE if outcome is Outcome.N else Player.TWO
            assert predicted is actual, (m, n)
    for n, who in ((2, Player.ONE), (32, Player.ONE), (17, Player.TWO), (47, Player.TWO)):
        assert theory.empty_board_winner(n, 4)[0] is who
    report("[PASS] criterion 5: empty-board winner formulas, m=3 n <= 200 and m=4 n <= 120")


def test_criterion_6_constructive_moves(solver):
    reports = [
        verify.check_winning_move_rules(3, 60, 60, solver=solver),
        verify.check_winning_move_rules(4, 45, 1, 60, solver=solver),
    ]
    for rep in reports:
        assert rep.passed, rep.failures[:5]
    total = sum(rep.checked for rep in reports)
    report(f"[PASS] criterion 6: prescribed winning moves reach losing-for-opponent "
           f"positions, {total} N positions checked")


def test_criterion_7_forcing_strategies(solver):
    for m in (3, 4):
        for n in range(1, 61):
            verify.simulate_strategy_exhaustive(n, m, solver=solver)
    report("[PASS] criterion 7: forcing strategy wins every adversary branch, "
           "m in {3,4}, n <= 60")


def test_criterion_8_random_playouts():
    rep = verify.random_playouts(10_000, m_values=(2, 3, 4, 5), n_max=60, seed=2024)
    assert rep.passed, rep.failures[:5]
    assert rep.checked == 10_000
    report("[PASS] criterion 8: 10,000 random playouts end at the Zeckendorf board "
           "with monovariant and value invariants intact")


def test_criterion_9_fixtures(solver):
    rep = verify.verify_fixtures(solver=solver)
    assert rep.passed, rep.failures
    report(f"[PASS] criterion 9: {rep.checked} frozen small-board moves and "
           "classifications replayed exactly")
