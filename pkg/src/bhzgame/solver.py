"""Exact win/loss classification by memoized search of the game graph.

Positions are classified with the usual normal-play recursion: a position
is P (previous player wins) when every option is N, and N when some
option is P.  The graph is finite and acyclic (moves strictly shrink a
lexicographic monovariant, placements shrink the unplaced pile), so a
depth-first pass with a memo table settles every reachable position.

The traversal keeps its own stack: game length grows with n * m and the
native recursion limit must not bound instance size.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

from .engine import (
    FullState,
    GameState,
    Move,
    legal_actions,
    apply_action,
    legal_moves,
    apply_move,
)

DEFAULT_NODE_BUDGET = 50_000_000
BUDGET_ENV_VAR = "BHZGAME_NODE_BUDGET"


class Outcome(Enum):
    P = "P"
    N = "N"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    outcome: Outcome
    provenance: str = "solver"


class BudgetExceededError(RuntimeError):
    """The configured node budget ran out before the search finished."""


def _key(fs: FullState) -> tuple:
    return (fs.board.m, fs.board.counts, fs.remaining)


class Solver:
    """Memoized position classifier.

    The memo table maps (m, counts, remaining) to an Outcome and is only
    ever written once per key, so sharing an instance across threads (or
    re-entering it) cannot change any published answer.
    """

    def __init__(self, node_budget: int | None = None):
        if node_budget is None:
            node_budget = int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_NODE_BUDGET))
        self.node_budget = node_budget
        self.memo: dict[tuple, Outcome] = {}

    def classify_full(self, fs: FullState) -> Classification:
        return Classification(self._solve(fs), "solver")

    def classify_position(self, state: GameState) -> Classification:
        return self.classify_full(FullState(state, 0))

    def winning_moves(self, state: GameState) -> list[Move]:
        """Moves whose successor is a P position, in canonical order."""
        return [
            mv
            for mv in legal_moves(state)
            if self._solve(FullState(apply_move(state, mv), 0)) is Outcome.P
        ]

    def winning_actions(self, fs: FullState) -> list:
        return [
            a
            for a in legal_actions(fs)
            if self._solve(apply_action(fs, a)) is Outcome.P
        ]

    def _solve(self, root: FullState) -> Outcome:
        memo = self.memo
        root_key = _key(root)
        if root_key in memo:
            return memo[root_key]

        # Frames are [key, state, child-iterator, pending-child-key]:
        # pending holds the key of a child pushed on the previous pass so
        # its freshly computed outcome can be inspected on resume.
        stack = [[root_key, root, None, None]]
        while stack:
            frame = stack[-1]
            key, fs, children, pending = frame
            if key in memo:
                stack.pop()
                continue
            if pending is not None:
                if memo[pending] is Outcome.P:
                    memo[key] = Outcome.N
                    stack.pop()
                    continue
                frame[3] = None
            if children is None:
                children = frame[2] = iter(
                    [apply_action(fs, a) for a in legal_actions(fs)]
                )
            outcome = None
            for child in children:
                child_key = _key(child)
                known = memo.get(child_key)
                if known is None:
                    if len(memo) + len(stack) >= self.node_budget:
                        raise BudgetExceededError(
                            f"node budget {self.node_budget} exceeded; "
                            f"raise {BUDGET_ENV_VAR} to search larger instances"
                        )
                    frame[3] = child_key
                    stack.append([child_key, child, None, None])
                    break
                if known is Outcome.P:
                    outcome = Outcome.N
                    break
            else:
                outcome = Outcome.P  # no options left: all N, or terminal
            if outcome is not None:
                memo[key] = outcome
                stack.pop()
        return memo[root_key]


_default_solver = Solver()


def default_solver() -> Solver:
    return _default_solver


def classify_position(state: GameState) -> Classification:
    return _default_solver.classify_position(state)


def classify_full(fs: FullState) -> Classification:
    return _default_solver.classify_full(fs)


def winning_moves(state: GameState) -> list[Move]:
    return _default_solver.winning_moves(state)


def enumerate_table(m: int, a_max: int, b_max: int = 0, c_max: int = 0,
                    solver: Solver | None = None):
    """Classify every board in the box, streamed row-major (column 1 fastest).

    Yields (state, Classification) pairs; bounds for columns a board of
    this size does not have are ignored.
    """
    import itertools

    solver = solver or _default_solver
    bounds = ([a_max, b_max, c_max] + [0] * m)[: m - 1]
    ranges = [range(b + 1) for b in bounds]

    # outer columns vary slowest, column 1 fastest
    for rest in itertools.product(*(r for r in reversed(ranges[1:]))):
        for a in ranges[0]:
            counts = (a,) + tuple(reversed(rest))
            state = GameState(m, counts)
            yield state, solver.classify_position(state)
