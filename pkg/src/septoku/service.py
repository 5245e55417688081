"""FastAPI service wrapping the core package.

Censuses are computed once per family and cached for the life of the
process, so a long-running server amortizes the expensive enumerations
across clients.  The CLI talks to this app either in-process or over HTTP.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import census, generator, modelexport, solver, symmetry, topology
from .formats import format_filled, format_puzzle
from .solver import MalformedPuzzleError, Puzzle
from .symmetry import FilledBoard
from .topology import Family
from .schemas import (
    BoardResponse,
    CanonicalRequest,
    CanonicalResponse,
    CensusResponse,
    CheckRequest,
    CheckResponse,
    ClassifyRequest,
    ClassifyResponse,
    ClassInfo,
    EquivalentRequest,
    EquivalentResponse,
    ExclusionRequest,
    ExclusionResponse,
    ExportModelRequest,
    ExportModelResponse,
    GenerateRequest,
    GenerateResponse,
    LowerBoundRequest,
    LowerBoundResponse,
    PuzzleInfo,
    SolveModelRequest,
    SolveModelResponse,
    SolveRequest,
    SolveResponse,
    StandardPuzzleInfo,
    StandardPuzzlesResponse,
    TheoremInfo,
)

app = FastAPI(
    title="septoku",
    description="Septoku boards: solving, census, symmetry, generation, "
                "and integer-programming export",
)

_ORACLES = {
    "native": modelexport.native_oracle,
    "feasibility": modelexport.feasibility_oracle,
}


def _family(name: str) -> Family:
    try:
        return Family(name.lower())
    except ValueError:
        raise HTTPException(400, f"unknown family {name!r}") from None


def _filled(family: str, values: list[int]) -> FilledBoard:
    board = topology.board(_family(family))
    try:
        return FilledBoard(board, tuple(values))
    except ValueError as exc:
        raise HTTPException(400, str(exc)) from None


def _puzzle(family: str, seeds: dict[int, int]) -> Puzzle:
    puzzle = Puzzle(topology.board(_family(family)), dict(seeds))
    try:
        puzzle.validate()
    except MalformedPuzzleError as exc:
        raise HTTPException(400, str(exc)) from None
    return puzzle


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "families": [f.value for f in Family]}


@app.get("/board/{family}", response_model=BoardResponse)
def board_description(family: str) -> BoardResponse:
    board = topology.board(_family(family))
    return BoardResponse(
        family=board.family.value,
        cell_count=board.cell_count,
        region_count=len(board.regions),
        circle_count=len(board.circles()),
        symmetry_count=len(symmetry.symmetry_group(board)),
        description=board.describe(),
    )


@app.post("/solve", response_model=SolveResponse)
def solve_puzzle(req: SolveRequest) -> SolveResponse:
    puzzle = _puzzle(req.family, req.seeds)
    if req.cap is not None and req.cap < 1:
        raise HTTPException(400, "cap must be >= 1")
    outcome = solver.solve(puzzle, cap=req.cap)
    if not outcome.solutions:
        uniqueness = solver.Uniqueness.UNSOLVABLE
    elif len(outcome.solutions) == 1 and outcome.status is solver.SolveStatus.COMPLETE:
        uniqueness = solver.Uniqueness.UNIQUE
    else:
        uniqueness = solver.Uniqueness.MULTIPLE
    return SolveResponse(
        family=puzzle.board.family.value,
        status=outcome.status.value,
        node_count=outcome.node_count,
        solution_count=len(outcome.solutions),
        solutions=[list(s.values) for s in outcome.solutions],
        uniqueness=uniqueness.value,
    )


@app.post("/check", response_model=CheckResponse)
def check_board(req: CheckRequest) -> CheckResponse:
    return CheckResponse(valid=solver.check_filled(_filled(req.family, req.values)))


def _census_response(report: census.CensusReport) -> CensusResponse:
    return CensusResponse(
        family=report.family.value,
        group_size=report.group_size,
        solution_count=report.solution_count,
        total_labeled_boards=report.total_labeled_boards,
        classes=[
            ClassInfo(
                label=c.label,
                canonical=list(c.canonical),
                stabilizer_size=c.stabilizer_size,
                orbit_size=c.orbit_size,
                profile=list(c.profile),
            )
            for c in report.classes
        ],
        theorems={
            tid: TheoremInfo(theorem_id=res.theorem_id, passed=res.passed,
                             detail=res.detail, witness=res.witness)
            for tid, res in report.theorem_results.items()
        },
        notes=dict(report.notes),
        report_text=report.to_text(),
    )


@app.get("/census/{family}", response_model=CensusResponse)
def family_census(family: str, center_circle_check: bool = True) -> CensusResponse:
    report = census.enumerate_classes(
        _family(family), center_circle_check=center_circle_check)
    return _census_response(report)


@app.post("/classify", response_model=ClassifyResponse)
def classify_board(req: ClassifyRequest) -> ClassifyResponse:
    filled = _filled(req.family, req.values)
    report = census.enumerate_classes(filled.board.family, center_circle_check=False)
    try:
        label = census.classify(filled, report)
    except census.ClassificationError as exc:
        raise HTTPException(400, str(exc)) from None
    return ClassifyResponse(label=label)


@app.post("/generate", response_model=GenerateResponse)
def generate(req: GenerateRequest) -> GenerateResponse:
    family = _family(req.family)
    if req.seed_count < generator.MIN_SEEDS:
        raise HTTPException(
            400, f"a unique puzzle needs at least {generator.MIN_SEEDS} seeds; "
                 f"{req.seed_count} cannot pin down a single solution")
    if req.count < 1:
        raise HTTPException(400, "count must be >= 1")
    puzzles = []
    for i in range(req.count):
        try:
            puzzle = generator.generate_puzzle(
                family, req.seed_count, rng_seed=req.rng_seed + i,
                attempts=req.attempts, check_minimal=req.check_minimal)
        except generator.GenerationError as exc:
            raise HTTPException(503, str(exc)) from None
        uniqueness = solver.classify_uniqueness(puzzle)
        puzzles.append(PuzzleInfo(
            family=family.value,
            seeds=puzzle.seeds,
            text=format_puzzle(puzzle),
            uniqueness=uniqueness.value,
        ))
    return GenerateResponse(puzzles=puzzles)


@app.post("/export-model", response_model=ExportModelResponse)
def export_model(req: ExportModelRequest) -> ExportModelResponse:
    puzzle = _puzzle(req.family, req.seeds)
    if req.format not in ("lp", "gams"):
        raise HTTPException(400, f"unknown model format {req.format!r}")
    try:
        model = modelexport.build_model(puzzle, req.nogoods)
    except (symmetry.FamilyMismatchError, ValueError) as exc:
        raise HTTPException(400, str(exc)) from None
    return ExportModelResponse(
        model_text=model.emit(req.format),
        variable_count=model.variable_count,
        constraint_count=model.constraint_count,
    )


@app.post("/solve-model", response_model=SolveModelResponse)
def solve_model(req: SolveModelRequest) -> SolveModelResponse:
    oracle = _ORACLES.get(req.oracle)
    if oracle is None:
        raise HTTPException(400, f"unknown oracle {req.oracle!r}")
    try:
        assignment = oracle(req.model_text)
    except modelexport.ModelFormatError as exc:
        raise HTTPException(400, str(exc)) from None
    return SolveModelResponse(feasible=assignment is not None, assignment=assignment)


@app.post("/enumerate-exclusion", response_model=ExclusionResponse)
def enumerate_exclusion(req: ExclusionRequest) -> ExclusionResponse:
    puzzle = _puzzle(req.family, req.seeds)
    oracle = _ORACLES.get(req.oracle)
    if oracle is None:
        raise HTTPException(400, f"unknown oracle {req.oracle!r}")
    outcome = modelexport.enumerate_by_exclusion(
        puzzle, oracle, max_iterations=req.max_iterations)
    return ExclusionResponse(
        status=outcome.status.value,
        oracle_calls=outcome.oracle_calls,
        solutions=[list(s.values) for s in outcome.solutions],
    )


@app.post("/canonical", response_model=CanonicalResponse)
def canonical(req: CanonicalRequest) -> CanonicalResponse:
    filled = _filled(req.family, req.values)
    canon = symmetry.canonical_form(filled)
    return CanonicalResponse(values=list(canon.values), text=format_filled(canon))


@app.post("/equivalent", response_model=EquivalentResponse)
def equivalent(req: EquivalentRequest) -> EquivalentResponse:
    f1 = _filled(req.family, req.values1)
    f2 = _filled(req.family, req.values2)
    witness = symmetry.are_equivalent(f1, f2)
    if witness is None:
        return EquivalentResponse(equivalent=False)
    return EquivalentResponse(
        equivalent=True,
        symmetry=witness.symmetry.name,
        permutation=witness.permutation.to_cycles(),
        transform=witness.describe(),
    )


@app.get("/standard-puzzles", response_model=StandardPuzzlesResponse)
def standard_puzzles() -> StandardPuzzlesResponse:
    out = []
    total = 0
    for puzzle in census.derive_standard_puzzles():
        count = len(solver.solve(puzzle).solutions)
        total += count
        out.append(StandardPuzzleInfo(
            seeds=puzzle.seeds, text=format_puzzle(puzzle), solution_count=count))
    return StandardPuzzlesResponse(puzzles=out, total_solutions=total)


@app.post("/verify-lower-bound", response_model=LowerBoundResponse)
def verify_lower_bound(req: LowerBoundRequest) -> LowerBoundResponse:
    family = _family(req.family)
    if family is not Family.HEXAGON:
        raise HTTPException(400, "the lower-bound report is a hexagon check")
    report = generator.verify_seed_lower_bound(
        family, sample_size=req.sample_size, rng_seed=req.rng_seed)
    return LowerBoundResponse(
        passed=report.passed,
        swap_trials=report.swap_trials,
        swap_unsolvable=report.swap_unsolvable,
        swap_witnessed=report.swap_witnessed,
        subset_trials=report.subset_trials,
        subset_histogram=report.subset_histogram,
        text=report.to_text(),
    )
