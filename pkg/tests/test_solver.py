import random

import pytest

from septoku import solver, symmetry, topology
from septoku.solver import (
    MalformedPuzzleError,
    Puzzle,
    SolveStatus,
    Uniqueness,
    check_filled,
    classify_uniqueness,
    solve,
    solve_raw,
)
from septoku.symmetry import FilledBoard, SymbolPermutation, Transform

from reference_data import (
    reference_regions,
    reference_seeds,
    reference_solution,
    reference_solutions,
)


def test_check_filled_accepts_reference_solutions(hexagon):
    for values in reference_solutions().values():
        assert check_filled(FilledBoard(hexagon, values))


def test_check_filled_rejects_a_single_swap(hexagon):
    values = list(reference_solution("SOL1"))
    values[0], values[1] = values[1], values[0]
    # oracle: scan the reference region table directly for a duplicate
    table = reference_regions()
    dup = any(
        len({values[c - 1] for c in cells}) < len(cells)
        for cells in table.values()
    )
    assert dup
    assert not check_filled(FilledBoard(hexagon, tuple(values)))


def test_check_filled_rejects_constant_board(hexagon):
    assert not check_filled(FilledBoard(hexagon, (1,) * 37))


def test_standard_puzzle_has_the_four_reference_solutions(standard_puzzle):
    outcome = solve(standard_puzzle)
    assert outcome.status is SolveStatus.COMPLETE
    assert len(outcome.solutions) == 4
    got = {s.values for s in outcome.solutions}
    assert got == set(reference_solutions().values())


def test_solutions_satisfy_seeds_and_regions(standard_puzzle):
    for sol in solve(standard_puzzle).solutions:
        assert check_filled(sol)
        for cell, symbol in standard_puzzle.seeds.items():
            assert sol.value(cell) == symbol


def test_empty_hexagon_has_120960_solutions(hexagon):
    arr, nodes, status = solve_raw(hexagon)
    assert status is SolveStatus.COMPLETE
    assert arr.shape == (120960, 37)
    assert nodes > 0


def test_solution_set_is_order_independent(hexagon):
    seeds = dict(list(reference_seeds().items())[:5])
    low = solve(Puzzle(hexagon, seeds))
    high = solve(Puzzle(hexagon, seeds), tie_high=True)
    assert {s.values for s in low.solutions} == {s.values for s in high.solutions}


def test_solve_is_deterministic(standard_puzzle):
    a = solve(standard_puzzle)
    b = solve(standard_puzzle)
    assert [s.values for s in a.solutions] == [s.values for s in b.solutions]
    assert a.node_count == b.node_count


def test_cap_truncates_deterministically(hexagon):
    outcome = solve(Puzzle(hexagon, {}), cap=5)
    assert outcome.status is SolveStatus.CAPPED
    assert len(outcome.solutions) == 5
    full = solve(Puzzle(hexagon, reference_seeds()), cap=100)
    assert full.status is SolveStatus.COMPLETE
    assert len(full.solutions) == 4


def test_malformed_puzzles_rejected(hexagon):
    with pytest.raises(MalformedPuzzleError):
        solve(Puzzle(hexagon, {99: 1}))
    with pytest.raises(MalformedPuzzleError):
        solve(Puzzle(hexagon, {1: 9}))
    with pytest.raises(ValueError):
        solve(Puzzle(hexagon, {}), cap=0)


def test_inconsistent_seeds_are_unsolvable_not_an_error(hexagon):
    outcome = solve(Puzzle(hexagon, {1: 1, 2: 1}))  # same row
    assert outcome.solutions == ()
    assert classify_uniqueness(Puzzle(hexagon, {1: 1, 2: 1})) is Uniqueness.UNSOLVABLE


def test_classify_uniqueness(standard_puzzle, hexagon, sol1):
    assert classify_uniqueness(standard_puzzle) is Uniqueness.MULTIPLE
    fully_seeded = Puzzle(hexagon, {c: sol1.value(c) for c in hexagon.cell_ids()})
    assert classify_uniqueness(fully_seeded) is Uniqueness.UNIQUE


def test_solver_commutes_with_transforms(hexagon, sol1):
    rng = random.Random(3)
    group = symmetry.symmetry_group(hexagon)
    for trial in range(4):
        cells = rng.sample(range(1, 38), 8)
        seeds = {c: sol1.value(c) for c in cells}
        t = Transform(group[rng.randrange(len(group))],
                      SymbolPermutation(tuple(rng.sample(range(1, 8), 7))))
        moved = {t.symmetry.apply_to_cell(c): t.permutation(v)
                 for c, v in seeds.items()}
        direct = solve(Puzzle(hexagon, moved))
        mapped = {symmetry.apply_transform(s, t).values
                  for s in solve(Puzzle(hexagon, seeds)).solutions}
        assert {s.values for s in direct.solutions} == mapped


@pytest.mark.parametrize("family,count", [
    ("rhombus", 20160), ("star", 20160), ("flower", 15120),
])
def test_variant_solution_counts(family, count):
    arr, _, status = solve_raw(topology.board(family))
    assert status is SolveStatus.COMPLETE
    assert arr.shape[0] == count


def test_dropping_center_circle_changes_nothing(hexagon):
    # the redundancy claim, exercised through the solver on a seeded puzzle
    center_circle = next(r for r in hexagon.circles() if r.center == 19)
    reduced = hexagon.without_region(center_circle.cells)
    seeds = reference_seeds()
    a = {s.values for s in solve(Puzzle(hexagon, seeds)).solutions}
    b = {s.values for s in solve(Puzzle(reduced, seeds)).solutions}
    assert a == b
