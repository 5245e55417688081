"""Text formats for puzzles and filled boards.

A puzzle file starts with a ``family:`` header; the body is either seed lines
or a hex-layout grid, e.g. for the 9-seed standard puzzle::

    family: hexagon
       . . . .
      . . . 1 .
     . . 1 2 . .
    1 . 6 7 3 . .
     . . 5 4 . .
      . . . . .
       . . . .

or equivalently::

    family: hexagon
    8=1
    12=1
    ...

Grid tokens are read left-to-right, top-to-bottom and assigned to cells in
row-major id order, so indentation is cosmetic.  ``.`` marks an empty cell.
Filled boards use the same grid with no dots.
"""

from __future__ import annotations

import re

from .solver import Puzzle
from .symmetry import FilledBoard
from .topology import BoardSpec, Family, board as family_board


class PuzzleFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _rows_of(board: BoardSpec) -> list[list[int]]:
    """Cell ids grouped by grid row, in id order."""
    rows: dict[int, list[int]] = {}
    for cell in board.cell_ids():
        rows.setdefault(board.coord_of(cell).r, []).append(cell)
    return [rows[r] for r in sorted(rows)]


def format_grid(board: BoardSpec, values: dict[int, int]) -> str:
    """Hex-layout grid; ``values`` maps cells to symbols, others show ``.``."""
    xs = [2 * c.q + c.r for c in board.coords]
    minx = min(xs)
    lines = []
    for row in _rows_of(board):
        chars: dict[int, str] = {}
        for cell in row:
            coord = board.coord_of(cell)
            col = 2 * coord.q + coord.r - minx
            chars[col] = str(values.get(cell, "."))
        width = max(chars) + 1
        lines.append("".join(chars.get(i, " ") for i in range(width)))
    return "\n".join(lines) + "\n"


def format_puzzle(puzzle: Puzzle, style: str = "grid") -> str:
    header = f"family: {puzzle.board.family.value}\n"
    if style == "grid":
        return header + format_grid(puzzle.board, puzzle.seeds)
    if style == "seeds":
        body = "".join(f"{c}={v}\n" for c, v in sorted(puzzle.seeds.items()))
        return header + body
    raise ValueError(f"unknown puzzle style {style!r}")


def format_filled(filled: FilledBoard) -> str:
    values = {c: filled.value(c) for c in filled.board.cell_ids()}
    return (f"family: {filled.board.family.value}\n"
            + format_grid(filled.board, values))


_SEED_RE = re.compile(r"^(\d+)\s*=\s*(\d+)$")


def parse_puzzle(text: str) -> Puzzle:
    """Parse either puzzle form; raises PuzzleFormatError with a line number."""
    family = None
    seeds: dict[int, int] = {}
    grid_tokens: list[tuple[int, str]] = []
    saw_seed_lines = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if family is None:
            m = re.match(r"^\s*family\s*:\s*(\w+)\s*$", line)
            if not m:
                raise PuzzleFormatError("expected 'family: <name>' header", lineno)
            try:
                family = Family(m.group(1).lower())
            except ValueError:
                raise PuzzleFormatError(f"unknown family {m.group(1)!r}", lineno) from None
            continue
        m = _SEED_RE.match(line.strip())
        if m:
            saw_seed_lines = True
            cell, symbol = int(m.group(1)), int(m.group(2))
            if cell in seeds:
                raise PuzzleFormatError(f"cell {cell} seeded twice", lineno)
            seeds[cell] = symbol
            continue
        for token in line.split():
            if token != "." and not re.fullmatch(r"[1-7]", token):
                raise PuzzleFormatError(
                    f"bad token {token!r} (expected '.' or a symbol 1-7)", lineno)
            grid_tokens.append((lineno, token))
    if family is None:
        raise PuzzleFormatError("missing 'family:' header")
    board = family_board(family)
    if saw_seed_lines and grid_tokens:
        raise PuzzleFormatError("mix of seed lines and grid tokens")
    if grid_tokens:
        if len(grid_tokens) != board.cell_count:
            raise PuzzleFormatError(
                f"expected {board.cell_count} grid tokens for "
                f"{family.value}, found {len(grid_tokens)}",
                grid_tokens[-1][0] if grid_tokens else None)
        for cell, (lineno, token) in enumerate(grid_tokens, 1):
            if token != ".":
                seeds[cell] = int(token)
    for cell, symbol in seeds.items():
        if not 1 <= cell <= board.cell_count:
            raise PuzzleFormatError(f"cell {cell} is not on the {family.value} board")
        if not 1 <= symbol <= board.symbol_count:
            raise PuzzleFormatError(f"symbol {symbol} out of range for cell {cell}")
    return Puzzle(board, seeds)


def parse_filled(text: str) -> FilledBoard:
    """Parse a totally assigned board."""
    puzzle = parse_puzzle(text)
    if len(puzzle.seeds) != puzzle.board.cell_count:
        missing = puzzle.board.cell_count - len(puzzle.seeds)
        raise PuzzleFormatError(f"board is not fully assigned ({missing} cells empty)")
    values = tuple(puzzle.seeds[c] for c in puzzle.board.cell_ids())
    return FilledBoard(puzzle.board, values)
