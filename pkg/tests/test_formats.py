import random

import pytest
from hypothesis import given, settings, strategies as st

from septoku import topology
from septoku.formats import (
    PuzzleFormatError,
    format_filled,
    format_grid,
    format_puzzle,
    parse_filled,
    parse_puzzle,
)
from septoku.solver import Puzzle
from septoku.symmetry import FilledBoard

from reference_data import reference_seeds, reference_solution


def test_grid_round_trip(standard_puzzle):
    text = format_puzzle(standard_puzzle)
    back = parse_puzzle(text)
    assert back.seeds == standard_puzzle.seeds
    assert back.board.family == standard_puzzle.board.family


def test_seed_style_round_trip(standard_puzzle):
    text = format_puzzle(standard_puzzle, style="seeds")
    back = parse_puzzle(text)
    assert back.seeds == standard_puzzle.seeds


def test_filled_round_trip(hexagon, sol1):
    text = format_filled(sol1)
    assert parse_filled(text) == sol1
    assert "." not in text


def test_comments_and_blank_lines_ok(hexagon):
    text = "# a puzzle\nfamily: hexagon\n\n8=1  # center\n16=1\n"
    puzzle = parse_puzzle(text)
    assert puzzle.seeds == {8: 1, 16: 1}


@pytest.mark.parametrize("family", ["hexagon", "rhombus", "star", "flower"])
def test_round_trip_every_family(family):
    board = topology.board(family)
    rng = random.Random(family.__len__())
    seeds = {c: rng.randint(1, 7)
             for c in rng.sample(range(1, board.cell_count + 1), 10)}
    puzzle = Puzzle(board, seeds)
    for style in ("grid", "seeds"):
        assert parse_puzzle(format_puzzle(puzzle, style=style)).seeds == seeds


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(st.integers(1, 37), st.integers(1, 7), max_size=37))
def test_round_trip_random_seed_sets(seeds):
    puzzle = Puzzle(topology.board("hexagon"), seeds)
    assert parse_puzzle(format_puzzle(puzzle)).seeds == seeds


def test_parse_errors_carry_line_numbers():
    with pytest.raises(PuzzleFormatError) as err:
        parse_puzzle("family: hexagon\n1=1\n2=9\n")
    assert "symbol 9" in str(err.value)

    with pytest.raises(PuzzleFormatError) as err:
        parse_puzzle("family: hexagon\n. . X .\n")
    assert err.value.line == 2

    with pytest.raises(PuzzleFormatError) as err:
        parse_puzzle("family: nonagon\n")
    assert err.value.line == 1

    with pytest.raises(PuzzleFormatError):
        parse_puzzle("1=1\n")  # missing header

    with pytest.raises(PuzzleFormatError):
        parse_puzzle("family: hexagon\n1=1\n1=2\n")  # cell seeded twice

    with pytest.raises(PuzzleFormatError):
        parse_puzzle("family: hexagon\n99=1\n")  # off the board


def test_grid_token_count_enforced():
    with pytest.raises(PuzzleFormatError) as err:
        parse_puzzle("family: hexagon\n. . .\n")
    assert "37" in str(err.value)


def test_partial_board_rejected_as_filled():
    with pytest.raises(PuzzleFormatError):
        parse_filled("family: hexagon\n8=1\n")


def test_grid_alignment_is_cosmetic(hexagon, sol1):
    text = format_filled(sol1)
    stripped = "\n".join(line.strip() for line in text.splitlines())
    assert parse_filled(stripped) == sol1


def test_format_grid_blank_cells(hexagon):
    text = format_grid(hexagon, {19: 7})
    tokens = text.split()
    assert tokens.count("7") == 1
    assert tokens.count(".") == 36
