"""Complete search over partial assignments: one, all, or capped solutions."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .symmetry import FilledBoard
from .topology import BoardSpec, Region

_INITIAL_BUFFER = 1 << 18  # rows; grows on overflow


class MalformedPuzzleError(ValueError):
    pass


class Uniqueness(str, enum.Enum):
    UNSOLVABLE = "unsolvable"
    UNIQUE = "unique"
    MULTIPLE = "multiple"


class SolveStatus(str, enum.Enum):
    COMPLETE = "complete"
    CAPPED = "capped"


@dataclass
class Puzzle:
    """A board plus seeds. Seeds may be inconsistent; solving reports that."""

    board: BoardSpec
    seeds: dict[int, int] = field(default_factory=dict)

    def validate(self) -> None:
        for cell, symbol in self.seeds.items():
            if not 1 <= cell <= self.board.cell_count:
                raise MalformedPuzzleError(f"seed cell {cell} is not on the board")
            if not 1 <= symbol <= self.board.symbol_count:
                raise MalformedPuzzleError(
                    f"seed symbol {symbol} out of range 1..{self.board.symbol_count}")

    def seed_items(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.seeds.items()))


@dataclass(frozen=True)
class SolveOutcome:
    solutions: tuple[FilledBoard, ...]
    node_count: int
    status: SolveStatus


def check_filled(filled: FilledBoard) -> bool:
    """True iff every region of the board holds pairwise-distinct symbols."""
    values = filled.values
    for region in filled.board.regions:
        seen = 0
        for c in region.cells:
            bit = 1 << values[c - 1]
            if seen & bit:
                return False
            seen |= bit
    return True


def _compile(board: BoardSpec):
    """CSR-style arrays for the kernel; 7-cell regions are 'exact' (must
    contain every symbol) which powers hidden-single propagation."""
    regions = [tuple(c - 1 for c in r.cells) for r in board.regions]
    n = board.cell_count
    reg_ptr, reg_cell = [0], []
    for reg in regions:
        reg_cell.extend(reg)
        reg_ptr.append(len(reg_cell))
    by_cell: list[list[int]] = [[] for _ in range(n)]
    for ri, reg in enumerate(regions):
        for c in reg:
            by_cell[c].append(ri)
    cellreg_ptr, cellreg_idx = [0], []
    for c in range(n):
        cellreg_idx.extend(by_cell[c])
        cellreg_ptr.append(len(cellreg_idx))
    exact_ids = [ri for ri, reg in enumerate(regions) if len(reg) == 7]
    exact_by_cell: list[list[int]] = [[] for _ in range(n)]
    for e, ri in enumerate(exact_ids):
        for c in regions[ri]:
            exact_by_cell[c].append(e)
    cell_exact_ptr, cell_exact_idx = [0], []
    for c in range(n):
        cell_exact_idx.extend(exact_by_cell[c])
        cell_exact_ptr.append(len(cell_exact_idx))
    i32 = lambda xs: np.asarray(xs, dtype=np.int32)
    return (i32(reg_ptr), i32(reg_cell), i32(cellreg_ptr), i32(cellreg_idx),
            i32(exact_ids), i32(cell_exact_ptr), i32(cell_exact_idx))


_compiled: dict[BoardSpec, tuple] = {}


def _arrays_for(board: BoardSpec):
    arrs = _compiled.get(board)
    if arrs is None:
        arrs = _compiled[board] = _compile(board)
    return arrs


def solve_raw(board: BoardSpec, seeds: dict[int, int] | None = None, *,
              cap: int | None = None,
              tie_high: bool = False) -> tuple[np.ndarray, int, SolveStatus]:
    """Enumerate solutions as an (n_solutions, n_cells) int8 array.

    Deterministic; ``tie_high`` flips the MRV tie-break (used to cross-check
    that the solution set does not depend on the search order).
    """
    seeds = seeds or {}
    seed_arr = np.asarray(
        sorted((c - 1, v) for c, v in seeds.items()), dtype=np.int32
    ).reshape(-1, 2)
    bufsize = cap if cap else _INITIAL_BUFFER
    arrs = _arrays_for(board)
    while True:
        out = np.zeros((bufsize, board.cell_count), dtype=np.int8)
        count, nodes, status = _kernel.enumerate_boards(
            board.cell_count, *arrs, seed_arr, cap or 0, int(tie_high), out)
        if status == _kernel.OVERFLOW:
            bufsize = max(bufsize * 4, count)
            continue
        return (out[:count],
                nodes,
                SolveStatus.CAPPED if status == _kernel.CAPPED else SolveStatus.COMPLETE)


def solve(puzzle: Puzzle, cap: int | None = None, *,
          tie_high: bool = False) -> SolveOutcome:
    """All solutions extending the seeds (or the first ``cap`` of them)."""
    if cap is not None and cap < 1:
        raise ValueError("cap must be >= 1 (or None for unlimited)")
    puzzle.validate()
    arr, nodes, status = solve_raw(puzzle.board, puzzle.seeds,
                                   cap=cap, tie_high=tie_high)
    boards = tuple(FilledBoard(puzzle.board, tuple(int(v) for v in row))
                   for row in arr)
    return SolveOutcome(boards, nodes, status)


def classify_uniqueness(puzzle: Puzzle) -> Uniqueness:
    outcome = solve(puzzle, cap=2)
    if not outcome.solutions:
        return Uniqueness.UNSOLVABLE
    if len(outcome.solutions) == 1:
        return Uniqueness.UNIQUE
    return Uniqueness.MULTIPLE
