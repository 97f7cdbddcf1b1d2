"""Command-line front end: classify, solve, export tables, verify, play, serve."""

from __future__ import annotations

import csv
import sys

import click

from .engine import (
    FullState,
    GameState,
    Player,
    apply_action,
    is_terminal,
    legal_actions,
    make_state,
    parse_action,
    start_game,
)
from .solver import Outcome, Solver, default_solver, enumerate_table
from . import theory, verify


def _parse_counts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise click.BadParameter(f"counts must be comma-separated integers, got {text!r}") from exc


@click.group()
def main() -> None:
    """Black hole decomposition games: solve, classify, verify, play."""


@main.command()
@click.option("--m", "m", type=int, required=True, help="Black hole column index.")
@click.option("--state", "state_text", required=True,
              help="Comma-separated column counts, e.g. 5,1,1.")
@click.option("--exact/--no-exact", default=True,
              help="Fall back to the exact solver when no closed form covers the board.")
def classify(m: int, state_text: str, exact: bool) -> None:
    """Classify a decomposition-phase board and list its winning moves."""
    state = make_state(m, _parse_counts(state_text))
    form = theory.classify_state(state)
    if form.covered:
        outcome, rule = form.outcome, form.rule
    elif exact:
        outcome, rule = default_solver().classify_position(state).outcome, "solver"
    else:
        raise click.ClickException(f"no closed form covers {state}; rerun with --exact")
    if outcome is Outcome.P:
        note = "terminal" if is_terminal(state) else "no winning move"
        click.echo(f"P; {note} [{rule}]")
        return
    wins = default_solver().winning_moves(state) if exact else []
    advice = theory.prescribed_decomposition_move(state)
    if advice is not None and advice.action not in wins:
        wins.insert(0, advice.action)
    shown = ", ".join(mv.label for mv in wins) if wins else "see --exact"
    click.echo(f"N; winning move: {shown} [{rule}]")


@main.command("solve-full")
@click.option("--m", "m", type=int, required=True)
@click.option("--state", "state_text", default=None,
              help="Comma-separated column counts (default: empty board).")
@click.option("--remaining", type=int, default=0,
              help="Pieces of value not yet placed (placement phase when > 0).")
def solve_full(m: int, state_text: str | None, remaining: int) -> None:
    """Exactly classify a two-phase position and list winning actions."""
    board = (make_state(m, _parse_counts(state_text))
             if state_text is not None else start_game(m, 1).board)
    fs = FullState(board, remaining)
    solver = default_solver()
    outcome = solver.classify_full(fs).outcome
    if outcome is Outcome.P:
        click.echo("P; no winning action [solver]")
        return
    wins = solver.winning_actions(fs)
    click.echo(f"N; winning action: {', '.join(a.label for a in wins)} [solver]")


@main.command()
@click.option("--m", "m", type=int, required=True)
@click.option("--n", "n", type=int, required=True, help="Starting total value.")
@click.option("--exact/--no-exact", default=False,
              help="Use the exact solver instead of the closed forms.")
def winner(m: int, n: int, exact: bool) -> None:
    """Winner of the full game from an empty board with total n."""
    if exact or m > 4:
        outcome = default_solver().classify_full(start_game(m, n)).outcome
        who = Player.ONE if outcome is Outcome.N else Player.TWO
        click.echo(f"{who} [solver]")
        return
    who, rule = theory.empty_board_winner(n, m)
    click.echo(f"{who} [{rule}]")


CSV_HEADER = ["m", "a", "b", "c", "remaining", "outcome"]


@main.command()
@click.option("--m", "m", type=int, required=True)
@click.option("--a-max", type=int, required=True)
@click.option("--b-max", type=int, default=0)
@click.option("--c-max", type=int, default=0)
@click.option("--b", "b_fixed", type=int, default=None,
              help="Fix the column 2 count (m=4) instead of sweeping it.")
@click.option("--format", "fmt", type=click.Choice(["csv"]), default="csv")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
              help="Write the table here instead of stdout.")
@click.option("--figure", type=click.Path(dir_okay=False), default=None,
              help="Also render the table as a P/N grid image at this path.")
def table(m: int, a_max: int, b_max: int, c_max: int, b_fixed: int | None,
          fmt: str, output: str | None, figure: str | None) -> None:
    """Classify every board in a box and emit a CSV win/loss table."""
    if b_fixed is not None:
        b_max = b_fixed
    rows = list(enumerate_table(m, a_max, b_max, c_max))
    if b_fixed is not None:
        rows = [(s, c) for s, c in rows if s.counts[1] == b_fixed]
    out = open(output, "w", newline="") if output else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER)
        for state, cls in rows:
            padded = list(state.counts[:3]) + [""] * (3 - min(3, len(state.counts)))
            writer.writerow([m, *padded, 0, cls.outcome.value])
    finally:
        if output:
            out.close()
    if figure:
        from .plots import render_outcome_grid

        render_outcome_grid(rows, figure, m, b_fixed or 0)
        click.echo(f"figure written to {figure}", err=True)


@main.command("verify")
@click.option("--extended", is_flag=True, default=False,
              help="Run every check on larger boxes (slower).")
def verify_cmd(extended: bool) -> None:
    """Run the bundled verification battery and print one line per claim."""
    reports = verify.standard_report(extended=extended)
    failed = False
    for report in reports:
        click.echo(report.line())
        for failure in report.failures:
            click.echo(f"    {failure}")
        failed = failed or not report.passed
    if failed:
        raise click.ClickException("verification failed")
    click.echo(f"all {len(reports)} claims verified")


def _engine_action(fs: FullState, engine_role: Player, n: int, solver: Solver):
    """Engine policy: prescribed rule when covered, else solver, else first legal."""
    if fs.placing:
        try:
            return theory.prescribed_placement(fs, engine_role, n).action
        except (theory.UncoveredError, ValueError):
            pass
    else:
        advice = theory.prescribed_decomposition_move(fs.board)
        if advice is not None:
            return advice.action
        form = theory.classify_state(fs.board)
        if form.covered:  # covered P position: resist with the first legal move
            return legal_actions(fs)[0]
    wins = solver.winning_actions(fs)
    return wins[0] if wins else legal_actions(fs)[0]


@main.command()
@click.option("--m", "m", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--human", "human", type=click.Choice(["1", "2"]), default="1",
              help="Which player the human controls.")
def play(m: int, n: int, human: str) -> None:
    """Interactive text game against the engine."""
    human_role = Player.ONE if human == "1" else Player.TWO
    solver = default_solver()
    fs = start_game(m, n)
    to_move = Player.ONE
    click.echo(f"Black hole at column {m}; total to place: {n}")
    while True:
        actions = legal_actions(fs)
        if not actions:
            winner_ = to_move.other
            click.echo(f"Game over: {winner_} wins"
                       + (" (you win!)" if winner_ is human_role else " (engine wins)"))
            return
        click.echo(f"board {fs.board}  remaining {fs.remaining}  to move: {to_move}")
        if to_move is human_role:
            labels = ", ".join(a.label for a in actions)
            while True:
                raw = click.prompt(f"your action [{labels}]")
                try:
                    action = parse_action(raw)
                except ValueError:
                    click.echo("unrecognized action label")
                    continue
                if action in actions:
                    break
                click.echo(f"illegal here; choose one of: {labels}")
        else:
            action = _engine_action(fs, to_move, n, solver)
            click.echo(f"engine plays {action.label}")
        fs = apply_action(fs, action)
        to_move = to_move.other


@main.command()
@click.option("--port", type=int, default=8000)
@click.option("--host", default="127.0.0.1")
def serve(port: int, host: str) -> None:
    """Start the HTTP play service."""
    import uvicorn

    from .api import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
