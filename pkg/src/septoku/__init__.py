"""Septoku boards as region-constraint systems.

Core surface: board construction (:mod:`septoku.topology`), the transform
group and canonical forms (:mod:`septoku.symmetry`), complete search
(:mod:`septoku.solver`), the exhaustive census (:mod:`septoku.census`),
puzzle generation (:mod:`septoku.generator`) and integer-programming export
(:mod:`septoku.modelexport`).  A FastAPI service (:mod:`septoku.service`)
wraps all of it; the ``septoku`` CLI is a thin client.
"""

from .topology import BoardSpec, Family, HexCoord, Region, board, build_board
from .symmetry import (
    BoardSymmetry,
    FilledBoard,
    SymbolPermutation,
    Transform,
    apply_transform,
    are_equivalent,
    canonical_form,
    orbit_size,
    stabilizer,
    symmetry_group,
)
from .solver import (
    Puzzle,
    SolveOutcome,
    Uniqueness,
    check_filled,
    classify_uniqueness,
    solve,
)
from .census import (
    CensusReport,
    PairingStructure,
    check_theorem,
    classify,
    derive_standard_puzzles,
    enumerate_classes,
    pairing_of,
)
from .generator import generate_puzzle, verify_seed_lower_bound
from .modelexport import enumerate_by_exclusion, export_model

__version__ = "0.1.0"

__all__ = [
    "BoardSpec", "Family", "HexCoord", "Region", "board", "build_board",
    "BoardSymmetry", "FilledBoard", "SymbolPermutation", "Transform",
    "apply_transform", "are_equivalent", "canonical_form", "orbit_size",
    "stabilizer", "symmetry_group",
    "Puzzle", "SolveOutcome", "Uniqueness", "check_filled",
    "classify_uniqueness", "solve",
    "CensusReport", "PairingStructure", "check_theorem", "classify",
    "derive_standard_puzzles", "enumerate_classes", "pairing_of",
    "generate_puzzle", "verify_seed_lower_bound",
    "enumerate_by_exclusion", "export_model",
    "__version__",
]
