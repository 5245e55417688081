"""Request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class SolveRequest(BaseModel):
    family: str = "hexagon"
    seeds: dict[int, int] = Field(default_factory=dict)
    cap: int | None = None


class SolveResponse(BaseModel):
    family: str
    status: str
    node_count: int
    solution_count: int
    solutions: list[list[int]]
    uniqueness: str


class CheckRequest(BaseModel):
    family: str
    values: list[int]


class CheckResponse(BaseModel):
    valid: bool


class ClassInfo(BaseModel):
    label: str
    canonical: list[int]
    stabilizer_size: int
    orbit_size: int
    profile: list[int]


class TheoremInfo(BaseModel):
    theorem_id: str
    passed: bool
    detail: str
    witness: str | None = None


class CensusResponse(BaseModel):
    family: str
    group_size: int
    solution_count: int
    total_labeled_boards: int
    classes: list[ClassInfo]
    theorems: dict[str, TheoremInfo]
    notes: dict[str, str]
    report_text: str


class ClassifyRequest(BaseModel):
    family: str
    values: list[int]


class ClassifyResponse(BaseModel):
    label: str


class GenerateRequest(BaseModel):
    family: str = "hexagon"
    seed_count: int = 6
    rng_seed: int = 0
    count: int = 1
    attempts: int = 2000
    check_minimal: bool = False


class PuzzleInfo(BaseModel):
    family: str
    seeds: dict[int, int]
    text: str
    uniqueness: str


class GenerateResponse(BaseModel):
    puzzles: list[PuzzleInfo]


class ExportModelRequest(BaseModel):
    family: str
    seeds: dict[int, int] = Field(default_factory=dict)
    nogoods: list[list[int]] = Field(default_factory=list)
    format: str = "lp"


class ExportModelResponse(BaseModel):
    model_text: str
    variable_count: int
    constraint_count: int


class SolveModelRequest(BaseModel):
    model_text: str
    oracle: str = "native"


class SolveModelResponse(BaseModel):
    feasible: bool
    assignment: list[tuple[int, int]] | None


class ExclusionRequest(BaseModel):
    family: str
    seeds: dict[int, int] = Field(default_factory=dict)
    max_iterations: int = 100000
    oracle: str = "native"


class ExclusionResponse(BaseModel):
    status: str
    oracle_calls: int
    solutions: list[list[int]]


class CanonicalRequest(BaseModel):
    family: str
    values: list[int]


class CanonicalResponse(BaseModel):
    values: list[int]
    text: str


class EquivalentRequest(BaseModel):
    family: str
    values1: list[int]
    values2: list[int]


class EquivalentResponse(BaseModel):
    equivalent: bool
    symmetry: str | None = None
    permutation: str | None = None
    transform: str | None = None


class StandardPuzzleInfo(BaseModel):
    seeds: dict[int, int]
    text: str
    solution_count: int


class StandardPuzzlesResponse(BaseModel):
    puzzles: list[StandardPuzzleInfo]
    total_solutions: int


class LowerBoundRequest(BaseModel):
    family: str = "hexagon"
    sample_size: int = 1000
    rng_seed: int = 0


class LowerBoundResponse(BaseModel):
    passed: bool
    swap_trials: int
    swap_unsolvable: int
    swap_witnessed: int
    subset_trials: int
    subset_histogram: dict[str, int]
    text: str


class BoardResponse(BaseModel):
    family: str
    cell_count: int
    region_count: int
    circle_count: int
    symmetry_count: int
    description: str
