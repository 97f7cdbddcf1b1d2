"""Board model and rules for Black Hole Zeckendorf games.

The game is played on columns weighted by Fibonacci numbers (indexed so
that F1 = 1, F2 = 2).  A designated "black hole" column with index ``m``
swallows every piece that a move would push onto column ``m`` or beyond.
Two phases exist: a placement pre-game (pieces enter only the outermost
columns) and the decomposition game proper (merge / add / split moves,
last player to move wins).

States are immutable values; every operation returns a new state, which
makes memoized search and concurrent use trivially safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class IllegalActionError(ValueError):
    """Raised when a move or placement violates the rules."""


class Player(Enum):
    ONE = 1
    TWO = 2

    @property
    def other(self) -> "Player":
        return Player.TWO if self is Player.ONE else Player.ONE

    def __str__(self) -> str:
        return f"Player {self.value}"


@lru_cache(maxsize=None)
def fibonacci_weight(i: int) -> int:
    """Weight of column i: F1 = 1, F2 = 2, F(k+1) = F(k) + F(k-1)."""
    if i < 1:
        raise ValueError(f"column index must be >= 1, got {i}")
    if i == 1:
        return 1
    if i == 2:
        return 2
    return fibonacci_weight(i - 1) + fibonacci_weight(i - 2)


class MoveKind(Enum):
    MERGE = "M"
    ADD = "A"
    SPLIT = "S"


@dataclass(frozen=True, order=True)
class Move:
    """A decomposition move.

    ``Merge`` takes two pieces from column 1 into one on column 2.
    ``Add(i)`` takes one piece each from columns i and i+1 into one on
    column i+2.  ``Split(i)`` takes two pieces from column i into one on
    column i-2 (column 1 when i == 2) plus one on column i+1.  Pieces
    landing on column >= m fall into the black hole.
    """

    kind: MoveKind
    index: int = 0

    @property
    def label(self) -> str:
        if self.kind is MoveKind.MERGE:
            return "M"
        return f"{self.kind.value}{self.index}"

    def __str__(self) -> str:
        return self.label

    @staticmethod
    def parse(text: str) -> "Move":
        text = text.strip().upper()
        if text == "M":
            return MERGE
        if len(text) >= 2 and text[0] in ("A", "S") and text[1:].isdigit():
            kind = MoveKind.ADD if text[0] == "A" else MoveKind.SPLIT
            return Move(kind, int(text[1:]))
        raise ValueError(f"not a move label: {text!r}")


MERGE = Move(MoveKind.MERGE)


def add(i: int) -> Move:
    return Move(MoveKind.ADD, i)


def split(i: int) -> Move:
    return Move(MoveKind.SPLIT, i)


@dataclass(frozen=True)
class GameState:
    """Column counts for F1 .. F(m-1) with the black hole at column m.

    ``counts[i - 1]`` is the number of pieces in column i.
    """

    black_hole_index: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.black_hole_index
        if m < 2:
            raise ValueError(f"black hole index must be >= 2, got {m}")
        if len(self.counts) != m - 1:
            raise ValueError(
                f"expected {m - 1} columns for black hole at {m}, "
                f"got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative column count in {self.counts}")

    @property
    def m(self) -> int:
        return self.black_hole_index

    def count(self, column: int) -> int:
        return self.counts[column - 1]

    def to_text(self) -> str:
        return f"m={self.m};counts={','.join(map(str, self.counts))}"

    def to_record(self) -> dict:
        return {"m": self.m, "columns": list(self.counts)}

    @staticmethod
    def parse(text: str) -> "GameState":
        try:
            m_part, counts_part = text.strip().split(";")
            m = int(m_part.removeprefix("m="))
            counts = tuple(int(c) for c in counts_part.removeprefix("counts=").split(","))
        except Exception as exc:
            raise ValueError(f"bad state text {text!r}") from exc
        return GameState(m, counts)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.counts))})@F{self.m}"


def make_state(m: int, counts) -> GameState:
    return GameState(m, tuple(counts))


def board_value(state: GameState) -> int:
    """Weighted sum of all pieces on the board."""
    return sum(c * fibonacci_weight(i + 1) for i, c in enumerate(state.counts))


def legal_moves(state: GameState) -> list[Move]:
    """Legal decomposition moves, in canonical order M, A1, A2, ..., S2, S3, ..."""
    m = state.m
    counts = state.counts
    moves: list[Move] = []
    if counts[0] >= 2:
        moves.append(MERGE)
    for i in range(1, m - 1):
        if counts[i - 1] >= 1 and counts[i] >= 1:
            moves.append(add(i))
    for i in range(2, m):
        if counts[i - 1] >= 2:
            moves.append(split(i))
    return moves


def is_terminal(state: GameState) -> bool:
    """No move is legal: every count <= 1 and no two adjacent occupied columns."""
    counts = state.counts
    if any(c > 1 for c in counts):
        return False
    return not any(counts[i] and counts[i + 1] for i in range(len(counts) - 1))


def apply_move(state: GameState, move: Move) -> GameState:
    """Apply a decomposition move, absorbing pieces that reach column >= m."""
    m = state.m
    counts = list(state.counts)

    def deposit(column: int) -> None:
        if column < m:
            counts[column - 1] += 1

    if move.kind is MoveKind.MERGE:
        if counts[0] < 2:
            raise IllegalActionError(f"merge needs two pieces in column 1: {state}")
        counts[0] -= 2
        deposit(2)
    elif move.kind is MoveKind.ADD:
        i = move.index
        if not (1 <= i <= m - 2):
            raise IllegalActionError(f"add index {i} out of range for m={m}")
        if counts[i - 1] < 1 or counts[i] < 1:
            raise IllegalActionError(f"add({i}) needs pieces in columns {i},{i + 1}: {state}")
        counts[i - 1] -= 1
        counts[i] -= 1
        deposit(i + 2)
    elif move.kind is MoveKind.SPLIT:
        i = move.index
        if not (2 <= i <= m - 1):
            raise IllegalActionError(f"split index {i} out of range for m={m}")
        if counts[i - 1] < 2:
            raise IllegalActionError(f"split({i}) needs two pieces in column {i}: {state}")
        counts[i - 1] -= 2
        deposit(1 if i == 2 else i - 2)
        deposit(i + 1)
    else:  # pragma: no cover
        raise IllegalActionError(f"unknown move kind {move.kind}")
    return GameState(m, tuple(counts))


def empty_board(m: int) -> GameState:
    return GameState(m, (0,) * (m - 1))


def zeckendorf_decomposition(n: int, m: int) -> GameState:
    """The unique terminal board of value n (greedy largest weight first).

    Requires 0 <= n < F(m); reduce modulo F(m) first if needed.
    """
    if n < 0:
        raise ValueError(f"value must be non-negative, got {n}")
    if n >= fibonacci_weight(m):
        raise ValueError(f"value {n} not below the black hole weight F{m}={fibonacci_weight(m)}")
    counts = [0] * (m - 1)
    for i in range(m - 1, 0, -1):
        w = fibonacci_weight(i)
        if w <= n:
            counts[i - 1] = 1
            n -= w
    assert n == 0
    return GameState(m, tuple(counts))


@dataclass(frozen=True)
class Placement:
    """A placement-phase action: drop one piece in an outermost column."""

    column: int

    @property
    def label(self) -> str:
        return f"P{self.column}"

    def __str__(self) -> str:
        return self.label

    @staticmethod
    def parse(text: str) -> "Placement":
        text = text.strip().upper()
        if text.startswith("P") and text[1:].isdigit():
            return Placement(int(text[1:]))
        raise ValueError(f"not a placement label: {text!r}")


@dataclass(frozen=True)
class FullState:
    """Two-phase state: board plus pieces not yet placed.

    ``remaining > 0`` means the game is still in the placement phase.
    The invariant board_value(board) + remaining == n (the starting
    total) holds throughout.
    """

    board: GameState
    remaining: int

    def __post_init__(self) -> None:
        if self.remaining < 0:
            raise ValueError(f"remaining must be non-negative, got {self.remaining}")

    @property
    def placing(self) -> bool:
        return self.remaining > 0

    @property
    def total(self) -> int:
        return board_value(self.board) + self.remaining

    def to_record(self) -> dict:
        rec = self.board.to_record()
        rec["remaining"] = self.remaining
        return rec

    def __str__(self) -> str:
        return f"{self.board}+{self.remaining}"


def start_game(m: int, n: int) -> FullState:
    if n < 1:
        raise ValueError(f"starting total must be positive, got {n}")
    return FullState(empty_board(m), n)


def legal_placements(fs: FullState) -> list[Placement]:
    """Outermost columns whose weight still fits in the unplaced pile."""
    if fs.remaining <= 0:
        raise IllegalActionError("placement phase is over")
    m = fs.board.m
    placements = [Placement(1)]
    if m >= 3 and fibonacci_weight(m - 1) <= fs.remaining:
        placements.append(Placement(m - 1))
    return placements


def apply_placement(fs: FullState, p: Placement) -> FullState:
    if p not in legal_placements(fs):
        raise IllegalActionError(f"illegal placement {p} at {fs}")
    counts = list(fs.board.counts)
    counts[p.column - 1] += 1
    return FullState(
        GameState(fs.board.m, tuple(counts)),
        fs.remaining - fibonacci_weight(p.column),
    )


def legal_actions(fs: FullState) -> list:
    """Placements while pieces remain, decomposition moves afterwards."""
    if fs.placing:
        return legal_placements(fs)
    return legal_moves(fs.board)


def apply_action(fs: FullState, action) -> FullState:
    if isinstance(action, Placement):
        if not fs.placing:
            raise IllegalActionError("placements only during the placement phase")
        return apply_placement(fs, action)
    if isinstance(action, Move):
        if fs.placing:
            raise IllegalActionError("decomposition moves only after all pieces are placed")
        return FullState(apply_move(fs.board, action), 0)
    raise IllegalActionError(f"unknown action {action!r}")


def parse_action(text: str):
    text = text.strip().upper()
    if text.startswith("P"):
        return Placement.parse(text)
    return Move.parse(text)
