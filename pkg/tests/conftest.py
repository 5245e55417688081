import pytest

from septoku import census, solver, topology
from septoku.symmetry import FilledBoard

from reference_data import reference_seeds, reference_solution


@pytest.fixture(scope="session")
def hexagon():
    return topology.board("hexagon")


@pytest.fixture(scope="session", autouse=True)
def warm_kernel(hexagon):
    """Force the JIT compile once so timed tests measure the search only."""
    solver.solve(solver.Puzzle(hexagon, reference_seeds()), cap=1)


@pytest.fixture(scope="session")
def hexagon_report():
    return census.enumerate_classes("hexagon", center_circle_check=False)


@pytest.fixture(scope="session")
def standard_puzzle(hexagon):
    return solver.Puzzle(hexagon, reference_seeds())


@pytest.fixture(scope="session")
def sol1(hexagon):
    return FilledBoard(hexagon, reference_solution("SOL1"))
