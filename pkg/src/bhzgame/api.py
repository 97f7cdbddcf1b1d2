"""HTTP play service: sessions for human-vs-engine games plus stateless
classification and winner endpoints.

Sessions live in process memory keyed by an opaque random token.  The
engine replies with the proven strategy rule when one covers the
position, falls back to an exact-solver winning move, and resists with
the first legal move when already lost.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .engine import (
    FullState,
    IllegalActionError,
    Player,
    apply_action,
    board_value,
    is_terminal,
    legal_actions,
    make_state,
    parse_action,
    start_game,
)
from .solver import Outcome, default_solver
from . import theory

app = FastAPI(title="bhzgame", version="0.1.0")


@dataclass
class Session:
    id: str
    m: int
    n: int
    human_role: Player
    full_state: FullState
    turn: Player = Player.ONE
    history: list = field(default_factory=list)
    winner: Player | None = None

    @property
    def status(self) -> str:
        if self.winner is not None:
            return "finished"
        return "placing" if self.full_state.placing else "decomposing"


_sessions: dict[str, Session] = {}
_lock = threading.Lock()


class CreateRequest(BaseModel):
    m: int
    n: int
    human_role: int = 1


class ActionRequest(BaseModel):
    action: str


class ClassifyRequest(BaseModel):
    m: int
    columns: list[int]
    remaining: int = 0


def _engine_action(session: Session):
    fs = session.full_state
    if fs.placing:
        try:
            advice = theory.prescribed_placement(fs, session.turn, session.n)
            return advice.action, advice.rule
        except (theory.UncoveredError, ValueError):
            pass
    else:
        advice = theory.prescribed_decomposition_move(fs.board)
        if advice is not None:
            return advice.action, advice.rule
        form = theory.classify_state(fs.board)
        if form.covered:
            return legal_actions(fs)[0], form.rule
    wins = default_solver().winning_actions(fs)
    if wins:
        return wins[0], "solver"
    return legal_actions(fs)[0], "solver"


def _apply(session: Session, action, actor: Player, rule: str | None) -> None:
    session.full_state = apply_action(session.full_state, action)
    session.history.append(
        {
            "actor": f"Player {actor.value}",
            "action": action.label,
            "rule": rule,
            "state": session.full_state.to_record(),
        }
    )
    session.turn = actor.other
    if not session.full_state.placing and not legal_actions(session.full_state):
        session.winner = actor


def _engine_turns(session: Session) -> None:
    while session.winner is None and session.turn is not session.human_role:
        action, rule = _engine_action(session)
        _apply(session, action, session.turn, rule)


def _session_record(session: Session) -> dict:
    fs = session.full_state
    rec = {
        "id": session.id,
        "m": session.m,
        "n": session.n,
        "human_role": session.human_role.value,
        "state": fs.to_record(),
        "state_text": fs.board.to_text(),
        "board_value": board_value(fs.board),
        "turn": session.turn.value,
        "status": session.status,
        "legal_actions": ([] if session.winner is not None
                          else [a.label for a in legal_actions(fs)]),
        "history": session.history,
    }
    if session.winner is not None:
        rec["winner"] = session.winner.value
    return rec


def _get(session_id: str) -> Session:
    session = _sessions.get(session_id)
    if session is None:
        raise HTTPException(404, f"no session {session_id}")
    return session


@app.post("/sessions")
def create_session(req: CreateRequest) -> dict:
    if req.m < 2:
        raise HTTPException(422, f"black hole at column {req.m} gives no playable game")
    if req.n < 1:
        raise HTTPException(422, "n must be positive")
    if req.human_role not in (1, 2):
        raise HTTPException(422, "human_role must be 1 or 2")
    session = Session(
        id=secrets.token_urlsafe(12),
        m=req.m,
        n=req.n,
        human_role=Player(req.human_role),
        full_state=start_game(req.m, req.n),
    )
    with _lock:
        _sessions[session.id] = session
        _engine_turns(session)
    return _session_record(session)


@app.get("/sessions/{session_id}")
def get_session(session_id: str) -> dict:
    return _session_record(_get(session_id))


@app.post("/sessions/{session_id}/actions")
def submit_action(session_id: str, req: ActionRequest) -> dict:
    session = _get(session_id)
    with _lock:
        if session.winner is not None:
            raise HTTPException(409, "game already finished")
        if session.turn is not session.human_role:
            raise HTTPException(409, "engine to move")
        try:
            action = parse_action(req.action)
        except ValueError as exc:
            raise HTTPException(422, str(exc)) from exc
        if action not in legal_actions(session.full_state):
            raise HTTPException(
                422,
                f"illegal action {req.action}; legal: "
                + ", ".join(a.label for a in legal_actions(session.full_state)),
            )
        _apply(session, action, session.human_role, None)
        _engine_turns(session)
    return _session_record(session)


@app.get("/sessions/{session_id}/hint")
def hint(session_id: str) -> dict:
    session = _get(session_id)
    if session.winner is not None:
        raise HTTPException(409, "game already finished")
    if session.turn is not session.human_role:
        raise HTTPException(409, "engine to move")
    action, rule = _engine_action(session)
    return {"action": action.label, "rule": rule}


@app.post("/classify")
def classify(req: ClassifyRequest) -> dict:
    try:
        state = make_state(req.m, req.columns)
        fs = FullState(state, req.remaining)
    except ValueError as exc:
        raise HTTPException(422, str(exc)) from exc
    if req.remaining == 0:
        form = theory.classify_state(state)
        if form.covered:
            outcome, rule = form.outcome, form.rule
        else:
            outcome, rule = default_solver().classify_position(state).outcome, "solver"
        winning = [a.label for a in default_solver().winning_moves(state)]
    else:
        outcome = default_solver().classify_full(fs).outcome
        rule = "solver"
        winning = [a.label for a in default_solver().winning_actions(fs)]
    return {
        "outcome": outcome.value,
        "rule": rule,
        "winning_actions": winning,
        "terminal": req.remaining == 0 and is_terminal(state),
    }


@app.get("/winner")
def winner(m: int, n: int) -> dict:
    try:
        if m in (2, 3, 4):
            who, rule = theory.empty_board_winner(n, m)
        else:
            outcome = default_solver().classify_full(start_game(m, n)).outcome
            who = Player.ONE if outcome is Outcome.N else Player.TWO
            rule = "solver"
    except ValueError as exc:
        raise HTTPException(422, str(exc)) from exc
    return {"winner": who.value, "rule": rule}
