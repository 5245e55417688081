"""Command-line client for the septoku service.

By default commands run against an in-process copy of the service; pass
``--server http://host:port`` to target a running one (see ``septoku serve``).

Exit codes: 0 success (solutions found / feasible / equivalent), 1 runtime
failure or not-equivalent, 2 malformed input, 3 no solutions / infeasible.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

from . import topology
from .formats import PuzzleFormatError, format_grid, parse_filled, parse_puzzle
from .topology import Family

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_NO_SOLUTION = 3

FAMILIES = [f.value for f in Family]


class Client:
    """Thin HTTP client; in-process ASGI when no server URL is given."""

    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            from fastapi.testclient import TestClient

            from .service import app
            self._client = TestClient(app)

    def call(self, method: str, path: str, **kwargs) -> dict:
        response = self._client.request(method, path, **kwargs)
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except Exception:
                detail = response.text
            raise ClickServiceError(f"{detail}", response.status_code)
        return response.json()


class ClickServiceError(click.ClickException):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.exit_code = EXIT_BAD_INPUT if status < 500 else EXIT_FAILURE


def _read_puzzle(path: str):
    try:
        return parse_puzzle(Path(path).read_text())
    except OSError as exc:
        raise click.ClickException(str(exc)) from None
    except PuzzleFormatError as exc:
        err = click.ClickException(f"{path}: {exc}")
        err.exit_code = EXIT_BAD_INPUT
        raise err from None


def _read_filled(path: str):
    try:
        return parse_filled(Path(path).read_text())
    except OSError as exc:
        raise click.ClickException(str(exc)) from None
    except PuzzleFormatError as exc:
        err = click.ClickException(f"{path}: {exc}")
        err.exit_code = EXIT_BAD_INPUT
        raise err from None


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running septoku server (default: in-process).")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Septoku boards: solve, census, generate, export, compare."""
    ctx.obj = Client(server)


@main.command()
@click.option("--board", "family", type=click.Choice(FAMILIES), default=None,
              help="Board family (defaults to the puzzle file's header).")
@click.option("--puzzle", "puzzle_file", type=click.Path(exists=True),
              help="Puzzle file; omitted means the empty puzzle.")
@click.option("--cap", type=int, default=None, help="Stop after N solutions.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]),
              default="text")
@click.pass_obj
def solve(client: Client, family: str | None, puzzle_file: str | None,
          cap: int | None, fmt: str) -> None:
    """Print every solution of a puzzle (exit 3 when there are none)."""
    if puzzle_file:
        puzzle = _read_puzzle(puzzle_file)
        if family and puzzle.board.family.value != family:
            raise click.UsageError(
                f"--board {family} contradicts the file header "
                f"({puzzle.board.family.value})")
        family = puzzle.board.family.value
        seeds = puzzle.seeds
    else:
        if not family:
            raise click.UsageError("provide --board or --puzzle")
        seeds = {}
    data = client.call("POST", "/solve",
                       json={"family": family, "seeds": seeds, "cap": cap})
    board = topology.board(Family(family))
    if fmt == "structured":
        for values in data["solutions"]:
            click.echo(json.dumps({"family": family, "values": values}))
    else:
        for i, values in enumerate(data["solutions"], 1):
            click.echo(f"solution {i}")
            click.echo(format_grid(board, dict(zip(board.cell_ids(), values))), nl=False)
    click.echo(f"{data['solution_count']} solutions "
               f"({data['status']}, {data['node_count']} nodes)")
    if data["solution_count"] == 0:
        sys.exit(EXIT_NO_SOLUTION)


@main.command()
@click.option("--board", "family", type=click.Choice(FAMILIES), required=True)
@click.option("--out", "out_file", type=click.Path(), default=None,
              help="Write the full report to a file.")
@click.option("--skip-center-check", is_flag=True,
              help="Skip the center-circle redundancy re-enumeration.")
@click.pass_obj
def census(client: Client, family: str, out_file: str | None,
           skip_center_check: bool) -> None:
    """Enumerate equivalence classes of valid boards."""
    data = client.call(
        "GET", f"/census/{family}",
        params={"center_circle_check": not skip_center_check})
    if out_file:
        Path(out_file).write_text(data["report_text"])
    else:
        click.echo(data["report_text"], nl=False)
    click.echo(f"classes={len(data['classes'])} total={data['total_labeled_boards']}")


@main.command()
@click.option("--board", "family", type=click.Choice(FAMILIES), default="hexagon")
@click.option("--seeds", "seed_count", type=int, default=6)
@click.option("--rng-seed", type=int, default=0)
@click.option("--count", type=int, default=1)
@click.option("--attempts", type=int, default=2000)
@click.option("--check-minimal", is_flag=True,
              help="Require that dropping any seed destroys uniqueness.")
@click.option("--out-dir", type=click.Path(file_okay=False), default=None,
              help="Write puzzle files here instead of stdout.")
@click.pass_obj
def generate(client: Client, family: str, seed_count: int, rng_seed: int,
             count: int, attempts: int, check_minimal: bool,
             out_dir: str | None) -> None:
    """Generate puzzles with unique solutions (at least 6 seeds)."""
    if seed_count < 6:
        raise click.UsageError(
            "at least 6 seeds are required: with fewer, two symbols are "
            "absent from the seeds and swapping them in any solution "
            "produces another one")
    data = client.call("POST", "/generate", json={
        "family": family, "seed_count": seed_count, "rng_seed": rng_seed,
        "count": count, "attempts": attempts, "check_minimal": check_minimal,
    })
    for i, info in enumerate(data["puzzles"], 1):
        if info["uniqueness"] != "unique":
            raise click.ClickException(
                f"generated puzzle {i} re-verified as {info['uniqueness']}")
        if out_dir:
            path = Path(out_dir)
            path.mkdir(parents=True, exist_ok=True)
            target = path / f"{family}_{seed_count}seeds_{rng_seed + i - 1}.puz"
            target.write_text(info["text"])
            click.echo(f"wrote {target}")
        else:
            click.echo(f"# puzzle {i} (unique solution)")
            click.echo(info["text"], nl=False)


@main.command("export-model")
@click.option("--puzzle", "puzzle_file", type=click.Path(exists=True), required=True)
@click.option("--format", "fmt", type=click.Choice(["lp", "gams"]), default="lp")
@click.option("--nogood", "nogood_files", type=click.Path(exists=True),
              multiple=True, help="Filled-board file to exclude (repeatable).")
@click.option("--out", "out_file", type=click.Path(), default=None)
@click.pass_obj
def export_model(client: Client, puzzle_file: str, fmt: str,
                 nogood_files: tuple[str, ...], out_file: str | None) -> None:
    """Write the integer-programming model of a puzzle."""
    puzzle = _read_puzzle(puzzle_file)
    nogoods = [list(_read_filled(f).values) for f in nogood_files]
    data = client.call("POST", "/export-model", json={
        "family": puzzle.board.family.value, "seeds": puzzle.seeds,
        "nogoods": nogoods, "format": fmt,
    })
    if out_file:
        Path(out_file).write_text(data["model_text"])
        click.echo(f"wrote {out_file}: {data['variable_count']} binaries, "
                   f"{data['constraint_count']} constraints")
    else:
        click.echo(data["model_text"], nl=False)


@main.command("solve-model")
@click.argument("model_file", type=click.Path(exists=True))
@click.option("--oracle", type=click.Choice(["native", "feasibility"]),
              default="native")
@click.pass_obj
def solve_model(client: Client, model_file: str, oracle: str) -> None:
    """Solve a model file; prints 'cell symbol' lines (exit 3 if infeasible)."""
    text = Path(model_file).read_text()
    data = client.call("POST", "/solve-model",
                       json={"model_text": text, "oracle": oracle})
    if not data["feasible"]:
        click.echo("infeasible")
        sys.exit(EXIT_NO_SOLUTION)
    for cell, symbol in data["assignment"]:
        click.echo(f"{cell} {symbol}")


@main.command()
@click.argument("board_file", type=click.Path(exists=True))
@click.pass_obj
def canonical(client: Client, board_file: str) -> None:
    """Print the canonical form of a filled board."""
    filled = _read_filled(board_file)
    data = client.call("POST", "/canonical", json={
        "family": filled.board.family.value, "values": list(filled.values)})
    click.echo(data["text"], nl=False)


@main.command()
@click.argument("board_a", type=click.Path(exists=True))
@click.argument("board_b", type=click.Path(exists=True))
@click.pass_obj
def equivalent(client: Client, board_a: str, board_b: str) -> None:
    """Print a transform carrying board A to board B, if one exists."""
    fa = _read_filled(board_a)
    fb = _read_filled(board_b)
    if fa.board.family is not fb.board.family:
        raise click.UsageError("boards belong to different families")
    data = client.call("POST", "/equivalent", json={
        "family": fa.board.family.value,
        "values1": list(fa.values), "values2": list(fb.values)})
    if data["equivalent"]:
        click.echo(data["transform"])
    else:
        click.echo("not equivalent")
        sys.exit(EXIT_FAILURE)


@main.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.pass_obj
def board(client: Client, family: str) -> None:
    """Print the board description (cells and regions)."""
    data = client.call("GET", f"/board/{family}")
    click.echo(data["description"], nl=False)


@main.command("standard-puzzles")
@click.pass_obj
def standard_puzzles(client: Client) -> None:
    """Print the four standard hexagon puzzles and their solution counts."""
    data = client.call("GET", "/standard-puzzles")
    for i, info in enumerate(data["puzzles"], 1):
        click.echo(f"# standard puzzle {i}: {info['solution_count']} solutions")
        click.echo(info["text"], nl=False)
    click.echo(f"total solutions: {data['total_solutions']}")


@main.command("verify-lower-bound")
@click.option("--sample-size", type=int, default=1000)
@click.option("--rng-seed", type=int, default=0)
@click.pass_obj
def verify_lower_bound(client: Client, sample_size: int, rng_seed: int) -> None:
    """Check the 6-seed lower bound empirically on the hexagon."""
    data = client.call("POST", "/verify-lower-bound", json={
        "family": "hexagon", "sample_size": sample_size, "rng_seed": rng_seed})
    click.echo(data["text"], nl=False)
    if not data["passed"]:
        sys.exit(EXIT_FAILURE)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the septoku HTTP service."""
    import uvicorn

    uvicorn.run("septoku.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
