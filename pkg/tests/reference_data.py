"""Independently tabulated reference data for the 37-cell hexagon board.

The region table and the four solutions of the standard nine-seed puzzle
below come from a hand-checked GAMS listing of the same model ("R.M" and
"M.N" pairs).  Tests use them as oracles against the geometric construction
and the solver; nothing here is computed by the package under test.
"""

from collections import defaultdict

# 28 regions as "region.cell" pairs: 1-7 horizontal rows, 8-14 up-right rows,
# 15-21 down-right rows, 22-28 circles centered at 6,8,17,19,21,30,32
REGION_TABLE = """
     1.1  1.2  1.3  1.4
     2.5  2.6  2.7  2.8  2.9
     3.10 3.11 3.12 3.13 3.14 3.15
     4.16 4.17 4.18 4.19 4.20 4.21 4.22
     5.23 5.24 5.25 5.26 5.27 5.28
     6.29 6.30 6.31 6.32 6.33
     7.34 7.35 7.36 7.37
     8.1  8.5  8.10 8.16
     9.2  9.6  9.11 9.17 9.23
    10.3 10.7 10.12 10.18 10.24 10.29
    11.4 11.8 11.13 11.19 11.25 11.30 11.34
    12.9 12.14 12.20 12.26 12.31 12.35
    13.15 13.21 13.27 13.32 13.36
    14.22 14.28 14.33 14.37
    15.4 15.9 15.15 15.22
    16.3 16.8 16.14 16.21 16.28
    17.2 17.7 17.13 17.20 17.27 17.33
    18.1 18.6 18.12 18.19 18.26 18.32 18.37
    19.5 19.11 19.18 19.25 19.31 19.36
    20.10 20.17 20.24 20.30 20.35
    21.16 21.23 21.29 21.34
    22.1 22.2 22.5 22.6 22.7 22.11 22.12
    23.3 23.4 23.7 23.8 23.9 23.13 23.14
    24.10 24.11 24.16 24.17 24.18 24.23 24.24
    25.12 25.13 25.18 25.19 25.20 25.25 25.26
    26.14 26.15 26.20 26.21 26.22 26.27 26.28
    27.24 27.25 27.29 27.30 27.31 27.34 27.35
    28.26 28.27 28.31 28.32 28.33 28.36 28.37
"""

# the standard nine-seed puzzle and its four solutions, as "cell.symbol" pairs
SEED_TABLE = "12.1 13.2 20.3 26.4 25.5 18.6 19.7 8.1 16.1"

SOLUTION_TABLES = {
    "SOL1": """ 1.2  2.5  3.4  4.3  5.3  6.6  7.7  8.1  9.5
               10.5 11.4 12.1 13.2 14.6 15.7
               16.1 17.2 18.6 19.7 20.3 21.5 22.4
               23.7 24.3 25.5 26.4 27.1 28.2
               29.2 30.4 31.7 32.3 33.6 34.6 35.1 36.2 37.5""",
    "SOL2": """ 1.2  2.6  3.4  4.3  5.7  6.3  7.5  8.1  9.6
               10.3 11.4 12.1 13.2 14.7 15.5
               16.1 17.5 18.6 19.7 20.3 21.2 22.4
               23.2 24.7 25.5 26.4 27.1 28.6
               29.3 30.4 31.2 32.6 33.7 34.6 35.1 36.3 37.5""",
    "SOL3": """ 1.5  2.6  3.4  4.3  5.2  6.3  7.7  8.1  9.6
               10.3 11.4 12.1 13.2 14.5 15.7
               16.1 17.5 18.6 19.7 20.3 21.2 22.4
               23.7 24.2 25.5 26.4 27.1 28.6
               29.3 30.4 31.7 32.6 33.5 34.6 35.1 36.3 37.2""",
    "SOL4": """ 1.2  2.7  3.4  4.3  5.3  6.6  7.5  8.1  9.7
               10.7 11.4 12.1 13.2 14.6 15.5
               16.1 17.5 18.6 19.7 20.3 21.2 22.4
               23.2 24.3 25.5 26.4 27.1 28.7
               29.7 30.4 31.2 32.3 33.6 34.6 35.1 36.7 37.5""",
}


def _pairs(table: str) -> list[tuple[int, int]]:
    return [tuple(int(x) for x in token.split(".")) for token in table.split()]


def reference_regions() -> dict[int, frozenset[int]]:
    regions = defaultdict(set)
    for region_id, cell in _pairs(REGION_TABLE):
        regions[region_id].add(cell)
    assert len(regions) == 28
    return {rid: frozenset(cells) for rid, cells in regions.items()}


def reference_region_sets() -> frozenset[frozenset[int]]:
    return frozenset(reference_regions().values())


def reference_seeds() -> dict[int, int]:
    return dict(_pairs(SEED_TABLE))


def reference_solution(name: str) -> tuple[int, ...]:
    values = [0] * 37
    for cell, symbol in _pairs(SOLUTION_TABLES[name]):
        values[cell - 1] = symbol
    assert 0 not in values
    return tuple(values)


def reference_solutions() -> dict[str, tuple[int, ...]]:
    return {name: reference_solution(name) for name in SOLUTION_TABLES}
