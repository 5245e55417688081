"""Minimal-seed puzzle generation and the 6-seed lower bound.

Six seeds are the floor for a unique puzzle on every family: with five or
fewer distinct seed symbols, two symbols are absent from the seeds, and
swapping them throughout any solution yields a second solution.  The
generator therefore samples six-cell sub-assignments of valid boards whose
values are pairwise distinct and keeps the first with a unique solution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import census, solver, symmetry, topology
from .solver import Puzzle, Uniqueness
from .symmetry import FilledBoard
from .topology import Family

MIN_SEEDS = 6
DEFAULT_ATTEMPTS = 2000


@dataclass
class GenerationStats:
    attempts: int = 0
    histogram: dict[str, int] = field(default_factory=dict)

    def record(self, outcome: Uniqueness) -> None:
        self.attempts += 1
        self.histogram[outcome.value] = self.histogram.get(outcome.value, 0) + 1


class GenerationError(RuntimeError):
    def __init__(self, message: str, stats: GenerationStats):
        super().__init__(f"{message} (attempts={stats.attempts}, "
                         f"histogram={stats.histogram})")
        self.stats = stats


def _random_valid_board(family: Family, rng: random.Random) -> FilledBoard:
    """A uniformly chosen class representative under a random transform, so
    generated puzzles are not all in standard form."""
    report = census.enumerate_classes(family, center_circle_check=False)
    board = topology.board(family)
    cls = report.classes[rng.randrange(len(report.classes))]
    group = symmetry.symmetry_group(board)
    sym = group[rng.randrange(len(group))]
    perm = list(range(1, 8))
    rng.shuffle(perm)
    t = symmetry.Transform(sym, symmetry.SymbolPermutation(tuple(perm)))
    return symmetry.apply_transform(cls.filled(board), t)


def generate_puzzle(family: Family | str, seed_count: int = MIN_SEEDS, *,
                    rng_seed: int = 0,
                    attempts: int = DEFAULT_ATTEMPTS,
                    check_minimal: bool = False) -> Puzzle:
    """A puzzle with ``seed_count`` seeds and a verified-unique solution.

    Deterministic for a given ``rng_seed``.  Raises GenerationError with the
    attempt statistics when the budget is exhausted.
    """
    family = Family(family)
    if seed_count < MIN_SEEDS:
        raise ValueError(
            f"a unique puzzle needs at least {MIN_SEEDS} seeds: with fewer, "
            "two symbols are absent and swapping them gives a second solution")
    if attempts < 1:
        raise ValueError("attempts must be >= 1")
    board = topology.board(family)
    rng = random.Random(rng_seed)
    stats = GenerationStats()
    while stats.attempts < attempts:
        filled = _random_valid_board(family, rng)
        cells = rng.sample(range(1, board.cell_count + 1), seed_count)
        values = [filled.value(c) for c in cells]
        if len(set(values)) != seed_count:
            continue  # seeds must use pairwise-distinct symbols
        puzzle = Puzzle(board, dict(zip(cells, values)))
        outcome = solver.classify_uniqueness(puzzle)
        stats.record(outcome)
        if outcome is Uniqueness.UNIQUE:
            if check_minimal and not _is_minimal(puzzle):
                continue
            return puzzle
    raise GenerationError(
        f"no unique {seed_count}-seed {family.value} puzzle found", stats)


def _is_minimal(puzzle: Puzzle) -> bool:
    """Dropping any single seed must destroy uniqueness."""
    for cell in list(puzzle.seeds):
        rest = {c: v for c, v in puzzle.seeds.items() if c != cell}
        if solver.classify_uniqueness(Puzzle(puzzle.board, rest)) is Uniqueness.UNIQUE:
            return False
    return True


@dataclass(frozen=True)
class SwapWitness:
    """Two distinct solutions obtained by swapping two seed-absent symbols."""

    puzzle: Puzzle
    absent: tuple[int, int]
    solutions: tuple[FilledBoard, FilledBoard]


def swap_witness(puzzle: Puzzle) -> SwapWitness | None:
    """For a puzzle whose seeds use at most five distinct symbols, a pair of
    distinct solutions differing by a swap of two absent symbols (or None if
    the puzzle is unsolvable)."""
    used = set(puzzle.seeds.values())
    absent = [s for s in range(1, 8) if s not in used]
    if len(absent) < 2:
        raise ValueError("seeds leave fewer than two symbols unused")
    a, b = absent[0], absent[1]
    outcome = solver.solve(puzzle, cap=1)
    if not outcome.solutions:
        return None
    first = outcome.solutions[0]
    swapped = tuple(b if v == a else a if v == b else v for v in first.values)
    second = FilledBoard(puzzle.board, swapped)
    assert solver.check_filled(second) and second != first
    return SwapWitness(puzzle, (a, b), (first, second))


@dataclass(frozen=True)
class LowerBoundReport:
    family: Family
    swap_trials: int
    swap_unsolvable: int
    swap_witnessed: int
    subset_trials: int
    subset_histogram: dict[str, int]
    passed: bool

    def to_text(self) -> str:
        hist = ", ".join(f"{k}={v}" for k, v in sorted(self.subset_histogram.items()))
        return (
            f"seed lower bound {self.family.value}: "
            f"{'pass' if self.passed else 'FAIL'}\n"
            f"  <=5-symbol seed sets tried: {self.swap_trials} "
            f"(unsolvable {self.swap_unsolvable}, "
            f"second solution by swap {self.swap_witnessed})\n"
            f"  5-seed sub-puzzles tried: {self.subset_trials} ({hist})\n"
        )


def verify_seed_lower_bound(family: Family | str = Family.HEXAGON, *,
                            sample_size: int = 1000,
                            rng_seed: int = 0,
                            swap_trials: int = 50) -> LowerBoundReport:
    """Exercise both halves of the 6-seed lower bound argument.

    (a) seed sets with at most 5 distinct symbols: whenever solvable, a
        second solution is exhibited by swapping two absent symbols;
    (b) random 5-seed subsets of generated unique 6-seed puzzles are never
        unique.
    """
    family = Family(family)
    board = topology.board(family)
    rng = random.Random(rng_seed)

    unsolvable = 0
    witnessed = 0
    for trial in range(swap_trials):
        k = rng.randint(1, 5)
        cells = rng.sample(range(1, board.cell_count + 1), k)
        if trial % 2 == 0:
            filled = _random_valid_board(family, rng)
            seeds = {c: filled.value(c) for c in cells}
        else:
            # arbitrary (possibly inconsistent) seeds over a 5-symbol palette
            palette = rng.sample(range(1, 8), 5)
            seeds = {c: rng.choice(palette) for c in cells}
        witness = swap_witness(Puzzle(board, seeds))
        if witness is None:
            unsolvable += 1
        else:
            witnessed += 1

    sources = [generate_puzzle(family, rng_seed=rng_seed + i) for i in range(4)]
    histogram: dict[str, int] = {}
    ok = True
    for _ in range(sample_size):
        puzzle = sources[rng.randrange(len(sources))]
        drop = rng.choice(list(puzzle.seeds))
        rest = {c: v for c, v in puzzle.seeds.items() if c != drop}
        outcome = solver.classify_uniqueness(Puzzle(board, rest))
        histogram[outcome.value] = histogram.get(outcome.value, 0) + 1
        if outcome is Uniqueness.UNIQUE:
            ok = False

    return LowerBoundReport(
        family=family,
        swap_trials=swap_trials,
        swap_unsolvable=unsolvable,
        swap_witnessed=witnessed,
        subset_trials=sample_size,
        subset_histogram=histogram,
        passed=ok and witnessed + unsolvable == swap_trials,
    )
