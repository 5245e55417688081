import pytest

from septoku import solver, topology
from septoku.generator import (
    GenerationError,
    generate_puzzle,
    swap_witness,
    verify_seed_lower_bound,
)
from septoku.solver import Puzzle, Uniqueness, classify_uniqueness

from reference_data import reference_solution


def test_generate_hexagon_six_seeds():
    puzzle = generate_puzzle("hexagon", 6, rng_seed=1)
    assert len(puzzle.seeds) == 6
    assert len(set(puzzle.seeds.values())) == 6
    assert classify_uniqueness(puzzle) is Uniqueness.UNIQUE


@pytest.mark.parametrize("family", ["star", "flower", "rhombus"])
def test_generate_variants(family):
    puzzle = generate_puzzle(family, 6, rng_seed=2)
    assert len(puzzle.seeds) == 6
    assert classify_uniqueness(puzzle) is Uniqueness.UNIQUE


def test_generate_is_deterministic():
    a = generate_puzzle("hexagon", 6, rng_seed=7)
    b = generate_puzzle("hexagon", 6, rng_seed=7)
    assert a.seeds == b.seeds
    assert generate_puzzle("hexagon", 6, rng_seed=8).seeds != a.seeds


def test_generate_refuses_fewer_than_six_seeds():
    with pytest.raises(ValueError, match="at least 6"):
        generate_puzzle("hexagon", 5)


def test_generate_attempt_budget_exhaustion():
    with pytest.raises(GenerationError) as exc_info:
        generate_puzzle("hexagon", 6, rng_seed=0, attempts=1)
    assert exc_info.value.stats.attempts == 1


def test_generated_seeds_extend_a_valid_board():
    puzzle = generate_puzzle("hexagon", 7, rng_seed=3)
    outcome = solver.solve(puzzle, cap=1)
    assert outcome.solutions  # solvable by construction


def test_minimality_flag():
    puzzle = generate_puzzle("hexagon", 6, rng_seed=4, check_minimal=True)
    for cell in puzzle.seeds:
        rest = {c: v for c, v in puzzle.seeds.items() if c != cell}
        assert classify_uniqueness(Puzzle(puzzle.board, rest)) is not Uniqueness.UNIQUE


def test_swap_witness_on_four_distinct_seeds(hexagon):
    base = reference_solution("SOL1")
    cells = [1, 3, 8, 19]
    seeds = {c: base[c - 1] for c in cells}
    assert len(set(seeds.values())) == 4
    witness = swap_witness(Puzzle(hexagon, seeds))
    assert witness is not None
    first, second = witness.solutions
    assert first != second
    assert solver.check_filled(first) and solver.check_filled(second)
    a, b = witness.absent
    assert all(seeds[c] not in (a, b) for c in seeds)
    for cell, symbol in seeds.items():
        assert first.value(cell) == symbol and second.value(cell) == symbol


def test_swap_witness_none_when_unsolvable(hexagon):
    witness = swap_witness(Puzzle(hexagon, {1: 1, 2: 1}))
    assert witness is None


def test_swap_witness_needs_two_absent_symbols(hexagon, sol1):
    seeds = {c: sol1.value(c) for c in range(1, 15)}
    with pytest.raises(ValueError):
        swap_witness(Puzzle(hexagon, seeds))


def test_empty_puzzle_is_multiple(hexagon):
    assert classify_uniqueness(Puzzle(hexagon, {})) is Uniqueness.MULTIPLE


def test_lower_bound_report_small_sample():
    report = verify_seed_lower_bound("hexagon", sample_size=60, rng_seed=5,
                                     swap_trials=12)
    assert report.passed
    assert report.subset_trials == 60
    assert report.subset_histogram.get("unique", 0) == 0
    assert report.swap_witnessed + report.swap_unsolvable == 12
    assert "pass" in report.to_text()
