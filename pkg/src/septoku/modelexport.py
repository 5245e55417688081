"""Integer-programming export of puzzles and enumeration by exclusion.

A puzzle becomes a pure 0/1 feasibility model over variables ``x_M_N`` ("cell
M holds symbol N"):

* one ``= 1`` row per cell (exactly one symbol),
* one ``<= 1`` row per (region, symbol) pair (no duplicates),
* one ``= 1`` row per seed,
* one no-good cut per excluded board: the sum of its |cells| matching
  variables is capped at |cells| - 1, which forbids exactly that assignment
  and nothing else.

Two textual formats are emitted.  The default ``lp`` format is a small,
documented subset of the common LP file layout (see LP_GRAMMAR); ``gams``
mirrors a classic GAMS listing for the same model.  Both are byte-stable
given identical inputs.

Enumeration works by repeatedly asking an oracle for one solution of the
exported model and cutting it off with a fresh no-good until the model goes
infeasible.  The shipped ``native_oracle`` answers from the native search;
``feasibility_oracle`` is a solver-agnostic 0/1 propagation search over the
parsed constraint rows and exercises the full model semantics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import solver, topology
from .solver import Puzzle
from .symmetry import FilledBoard, FamilyMismatchError
from .topology import BoardSpec, Family

LP_GRAMMAR = """\
model     :=  comment* "Minimize" objective "Subject To" constraint+
              "Binary" variable+ "End"
comment   :=  "\\" <text to end of line>        ; "\\ key: value" lines carry
                                                 ; metadata (e.g. family)
objective :=  "obj:" sum
constraint:=  name ":" sum sense integer
sum       :=  variable ("+" variable)*          ; unit coefficients only
sense     :=  "<=" | "=" | ">="
variable  :=  "x_" cell "_" symbol
Solutions are written one "cell symbol" pair per line, sorted by cell.
"""

Oracle = Callable[[str], "list[tuple[int, int]] | None"]


class ModelFormatError(ValueError):
    pass


class OracleError(RuntimeError):
    pass


def _var(cell: int, symbol: int) -> str:
    return f"x_{cell}_{symbol}"


@dataclass(frozen=True)
class IPModel:
    """The assembled model for one puzzle plus its no-good cuts."""

    board: BoardSpec
    seeds: tuple[tuple[int, int], ...]
    nogoods: tuple[tuple[int, ...], ...]

    @property
    def variable_count(self) -> int:
        return self.board.cell_count * self.board.symbol_count

    @property
    def cell_constraint_count(self) -> int:
        return self.board.cell_count

    @property
    def region_constraint_count(self) -> int:
        return len(self.board.regions) * self.board.symbol_count

    @property
    def constraint_count(self) -> int:
        return (self.cell_constraint_count + self.region_constraint_count
                + len(self.seeds) + len(self.nogoods))

    def emit(self, format: str = "lp") -> str:
        if format == "lp":
            return self._emit_lp()
        if format == "gams":
            return self._emit_gams()
        raise ValueError(f"unknown model format {format!r}")

    def _emit_lp(self) -> str:
        board = self.board
        n = board.cell_count
        syms = range(1, board.symbol_count + 1)
        lines = [
            "\\ septoku binary feasibility model",
            f"\\ family: {board.family.value}",
            f"\\ cells: {n}",
            f"\\ regions: {len(board.regions)}",
            f"\\ seeds: {len(self.seeds)}",
            f"\\ nogoods: {len(self.nogoods)}",
            "Minimize",
            " obj: " + " + ".join(_var(c, s) for c in range(1, n + 1) for s in syms),
            "Subject To",
        ]
        for c in range(1, n + 1):
            terms = " + ".join(_var(c, s) for s in syms)
            lines.append(f" cell_{c}: {terms} = 1")
        for region in board.regions:
            for s in syms:
                terms = " + ".join(_var(c, s) for c in region.cells)
                lines.append(f" region_{region.id}_sym_{s}: {terms} <= 1")
        for i, (c, s) in enumerate(self.seeds, 1):
            lines.append(f" seed_{i}: {_var(c, s)} = 1")
        for i, ng in enumerate(self.nogoods, 1):
            terms = " + ".join(_var(c + 1, ng[c]) for c in range(n))
            lines.append(f" nogood_{i}: {terms} <= {n - 1}")
        lines.append("Binary")
        lines.extend(f" {_var(c, s)}" for c in range(1, n + 1) for s in syms)
        lines.append("End")
        return "\n".join(lines) + "\n"

    def _emit_gams(self) -> str:
        board = self.board
        n = board.cell_count
        out = [
            f"$TITLE Septoku {board.family.value} model",
            "* binary feasibility model for one puzzle",
            "",
            "SETS",
            f"M cells   /1*{n}/",
            f"N labels  /1*{board.symbol_count}/",
            f"R regions /1*{len(board.regions)}/",
            "",
            "SET REGIONS (R,M)",
        ]
        pairs = [f"{r.id}.{c}" for r in board.regions for c in r.cells]
        out.append("     /" + _wrap(pairs) + "/;")
        out.append("")
        out.append("SET SEEDS (M,N)")
        out.append("      /" + _wrap([f"{c}.{s}" for c, s in self.seeds]) + "/;")
        for i, ng in enumerate(self.nogoods, 1):
            out.append(f"SET NOGOOD{i} (M,N)")
            out.append("      /" + _wrap([f"{c + 1}.{ng[c]}" for c in range(n)]) + "/;")
        if self.nogoods:
            out.append("")
            out.append("SCALARS")
            for i in range(1, len(self.nogoods) + 1):
                out.append(f"ALLOW{i} Set to {n} to allow NOGOOD{i} "
                           f"and {n - 1} to not allow it /{n - 1}/")
            out[-1] += ";"
        out += [
            "",
            "VARIABLES",
            "X(M,N) Equal to one if cell M is labeled N",
            "OBJECT Objective function (unimportant)",
            "",
            "BINARY VARIABLES X;",
            "",
            "EQUATIONS",
            "OBJ          The sum of all labels (unimportant)",
            "ALLFILLED(M) All cells must have exactly one entry",
            "REGDIST(R,N) Each region must have distinct entries",
            "PUZZLE       The seeds defining the puzzle",
        ]
        for i in range(1, len(self.nogoods) + 1):
            out.append(f"UNIQ{i}        Determines if NOGOOD{i} is allowed or not")
        out[-1] += ";"
        out += [
            "",
            "OBJ..",
            "     SUM((M,N),X(M,N)) =E= OBJECT;",
            "ALLFILLED(M)..",
            "     SUM(N,X(M,N)) =E= 1;",
            "REGDIST(R,N)..",
            "     SUM(M$REGIONS(R,M),X(M,N)) =L= 1;",
            "PUZZLE..",
            "     SUM(SEEDS,X(SEEDS)) =G= CARD(SEEDS);",
        ]
        for i in range(1, len(self.nogoods) + 1):
            out.append(f"UNIQ{i}..")
            out.append(f"     SUM(NOGOOD{i},X(NOGOOD{i})) =L= ALLOW{i};")
        out += [
            "",
            "MODEL SEPTOKU /all/;",
            "",
            "OPTION OPTCR=.0001;",
            "SOLVE SEPTOKU USING MIP MINIMIZING OBJECT;",
            "",
            "DISPLAY X.L;",
        ]
        return "\n".join(out) + "\n"


def _wrap(items: Sequence[str], per_line: int = 8) -> str:
    chunks = [", ".join(items[i:i + per_line]) for i in range(0, len(items), per_line)]
    return ",\n       ".join(chunks)


def _nogood_values(board: BoardSpec, nogood) -> tuple[int, ...]:
    if isinstance(nogood, FilledBoard):
        if nogood.board.family is not board.family:
            raise FamilyMismatchError(
                f"no-good board family {nogood.board.family.value} does not "
                f"match puzzle family {board.family.value}")
        return nogood.values
    values = tuple(int(v) for v in nogood)
    if len(values) != board.cell_count:
        raise FamilyMismatchError(
            f"no-good has {len(values)} values, board has {board.cell_count} cells")
    return values


def build_model(puzzle: Puzzle, nogoods: Iterable = ()) -> IPModel:
    puzzle.validate()
    board = puzzle.board
    return IPModel(
        board=board,
        seeds=puzzle.seed_items(),
        nogoods=tuple(_nogood_values(board, ng) for ng in nogoods),
    )


def export_model(puzzle: Puzzle, nogoods: Iterable = (), *,
                 format: str = "lp") -> str:
    """The model document for a puzzle plus no-good cuts (byte-stable)."""
    return build_model(puzzle, nogoods).emit(format)


# -- parsing the lp format -----------------------------------------------------

@dataclass(frozen=True)
class ParsedConstraint:
    name: str
    variables: tuple[str, ...]
    sense: str
    rhs: int


@dataclass(frozen=True)
class ParsedModel:
    meta: dict[str, str]
    objective: tuple[str, ...]
    constraints: tuple[ParsedConstraint, ...]
    binaries: tuple[str, ...]


_CON_RE = re.compile(r"^\s*(\w+):\s*(.*?)\s*(<=|>=|=)\s*(-?\d+)\s*$")


def parse_model(text: str) -> ParsedModel:
    """Parse a document in the lp format (see LP_GRAMMAR)."""
    meta: dict[str, str] = {}
    objective: list[str] = []
    constraints: list[ParsedConstraint] = []
    binaries: list[str] = []
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("\\"):
            body = line[1:].strip()
            if ":" in body:
                key, _, value = body.partition(":")
                meta[key.strip()] = value.strip()
            continue
        lowered = line.lower()
        if lowered == "minimize":
            section = "objective"
            continue
        if lowered == "subject to":
            section = "constraints"
            continue
        if lowered == "binary":
            section = "binary"
            continue
        if lowered == "end":
            section = "end"
            continue
        if section == "objective":
            name, _, rest = line.partition(":")
            if name.strip() != "obj":
                raise ModelFormatError(f"line {lineno}: expected obj row")
            objective.extend(t for t in rest.split() if t != "+")
        elif section == "constraints":
            m = _CON_RE.match(line)
            if not m:
                raise ModelFormatError(f"line {lineno}: bad constraint: {line!r}")
            name, terms, sense, rhs = m.groups()
            variables = tuple(t for t in terms.split() if t != "+")
            if not variables or any(not _is_var(t) for t in variables):
                raise ModelFormatError(
                    f"line {lineno}: only unit-coefficient sums of variables "
                    f"are supported: {line!r}")
            constraints.append(ParsedConstraint(name, variables, sense, int(rhs)))
        elif section == "binary":
            if not _is_var(line):
                raise ModelFormatError(f"line {lineno}: bad variable {line!r}")
            binaries.append(line)
        elif section == "end":
            raise ModelFormatError(f"line {lineno}: content after End")
        else:
            raise ModelFormatError(f"line {lineno}: content before Minimize")
    if section != "end":
        raise ModelFormatError("missing End")
    return ParsedModel(meta, tuple(objective), tuple(constraints), tuple(binaries))


def _is_var(token: str) -> bool:
    return re.fullmatch(r"[A-Za-z]\w*", token) is not None


def _decode_var(name: str) -> tuple[int, int]:
    m = re.fullmatch(r"x_(\d+)_(\d+)", name)
    if not m:
        raise ModelFormatError(f"variable {name!r} is not of the form x_cell_symbol")
    return int(m.group(1)), int(m.group(2))


# -- the generic 0/1 feasibility search -----------------------------------------

class BinaryFeasibility:
    """Depth-first 0/1 feasibility with bound propagation.

    Constraints are unit-coefficient sums; for each the number of variables
    fixed to one (L) and the number still free (F) bound the achievable sum to
    [L, L+F], which forces variables whenever a bound goes tight.
    """

    def __init__(self, variables: Sequence[str]):
        self.index = {v: i for i, v in enumerate(variables)}
        self.cons: list[tuple[tuple[int, ...], str, int]] = []
        self.var_cons: list[list[int]] = [[] for _ in variables]

    def add(self, variables: Iterable[str], sense: str, rhs: int) -> None:
        vs = tuple(self.index[v] for v in variables)
        ci = len(self.cons)
        self.cons.append((vs, sense, rhs))
        for v in vs:
            self.var_cons[v].append(ci)

    def solve(self) -> list[int] | None:
        nv = len(self.index)
        cons = self.cons
        var_cons = self.var_cons
        val = [-1] * nv
        ones = [0] * len(cons)
        free = [len(c[0]) for c in cons]
        trail: list[int] = []
        pending: list[int] = []

        def fix(v: int, b: int) -> bool:
            if val[v] >= 0:
                return val[v] == b
            val[v] = b
            trail.append(v)
            for ci in var_cons[v]:
                free[ci] -= 1
                if b:
                    ones[ci] += 1
                pending.append(ci)
            return True

        def examine(ci: int) -> bool:
            vs, sense, rhs = cons[ci]
            low = ones[ci]
            high = low + free[ci]
            if sense == "<=":
                if low > rhs:
                    return False
                if low == rhs and free[ci]:
                    return all(fix(v, 0) for v in vs if val[v] < 0)
            elif sense == "=":
                if low > rhs or high < rhs:
                    return False
                if free[ci]:
                    if low == rhs:
                        return all(fix(v, 0) for v in vs if val[v] < 0)
                    if high == rhs:
                        return all(fix(v, 1) for v in vs if val[v] < 0)
            else:
                if high < rhs:
                    return False
                if high == rhs and free[ci]:
                    return all(fix(v, 1) for v in vs if val[v] < 0)
            return True

        def propagate() -> bool:
            while pending:
                if not examine(pending.pop()):
                    pending.clear()
                    return False
            return True

        def branch_var() -> int:
            best, best_free = -1, 1 << 30
            for ci, (vs, sense, rhs) in enumerate(cons):
                if sense == "=" and free[ci] and rhs - ones[ci] >= 1:
                    if free[ci] < best_free:
                        best, best_free = ci, free[ci]
            if best >= 0:
                for v in cons[best][0]:
                    if val[v] < 0:
                        return v
            for v in range(nv):
                if val[v] < 0:
                    return v
            return -1

        def dfs() -> bool:
            v = branch_var()
            if v < 0:
                return True
            for b in (1, 0):
                mark = len(trail)
                if fix(v, b) and propagate():
                    if dfs():
                        return True
                while len(trail) > mark:
                    u = trail.pop()
                    for ci in var_cons[u]:
                        free[ci] += 1
                        if val[u]:
                            ones[ci] -= 1
                    val[u] = -1
                pending.clear()
            return False

        pending.extend(range(len(cons)))
        if not propagate():
            return None
        return val[:] if dfs() else None


# -- oracles ---------------------------------------------------------------------

def feasibility_oracle(model_text: str) -> list[tuple[int, int]] | None:
    """Solve the parsed model rows directly; no puzzle knowledge involved."""
    model = parse_model(model_text)
    search = BinaryFeasibility(model.binaries)
    for con in model.constraints:
        search.add(con.variables, con.sense, con.rhs)
    result = search.solve()
    if result is None:
        return None
    out = []
    for name, v in zip(model.binaries, result):
        if v == 1:
            out.append(_decode_var(name))
    out.sort()
    return out


def native_oracle(model_text: str) -> list[tuple[int, int]] | None:
    """Rebuild the puzzle from the model document and answer from the native
    search, skipping assignments excluded by no-good rows."""
    model = parse_model(model_text)
    family = model.meta.get("family")
    if family is None:
        raise ModelFormatError("model lacks a '\\ family:' line")
    board = topology.board(Family(family))
    if len(model.binaries) != board.cell_count * board.symbol_count:
        raise ModelFormatError("variable count does not match the board")

    seeds: dict[int, int] = {}
    excluded: set[tuple[int, ...]] = set()
    for con in model.constraints:
        if con.sense == "=" and con.rhs == 1 and len(con.variables) == 1:
            cell, sym = _decode_var(con.variables[0])
            seeds[cell] = sym
        elif (con.sense == "<=" and len(con.variables) == board.cell_count
              and con.rhs == board.cell_count - 1):
            board_values = [0] * board.cell_count
            for name in con.variables:
                cell, sym = _decode_var(name)
                board_values[cell - 1] = sym
            if 0 in board_values:
                continue  # not a full-assignment cut
            excluded.add(tuple(board_values))

    outcome = solver.solve(Puzzle(board, seeds), cap=len(excluded) + 1)
    for sol in outcome.solutions:
        if sol.values not in excluded:
            return [(c, sol.values[c - 1]) for c in board.cell_ids()]
    return None


def format_assignment(assignment: list[tuple[int, int]]) -> str:
    return "\n".join(f"{cell} {symbol}" for cell, symbol in assignment) + "\n"


def parse_assignment(text: str) -> list[tuple[int, int]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ModelFormatError(f"line {lineno}: expected 'cell symbol'")
        out.append((int(parts[0]), int(parts[1])))
    return out


# -- enumeration by exclusion ------------------------------------------------------

@dataclass(frozen=True)
class ExclusionOutcome:
    solutions: tuple[FilledBoard, ...]
    oracle_calls: int
    status: solver.SolveStatus


def enumerate_by_exclusion(puzzle: Puzzle, oracle: Oracle | None = None,
                           max_iterations: int = 100000) -> ExclusionOutcome:
    """Solve, cut, repeat until infeasible (or the iteration cap).

    With a sound and complete oracle the result equals the native solution
    set.  Each returned assignment is verified before being trusted.
    """
    if oracle is None:
        oracle = native_oracle
    puzzle.validate()
    board = puzzle.board
    found: list[FilledBoard] = []
    calls = 0
    while len(found) < max_iterations:
        text = export_model(puzzle, found)
        assignment = oracle(text)
        calls += 1
        if assignment is None:
            return ExclusionOutcome(tuple(found), calls, solver.SolveStatus.COMPLETE)
        values = [0] * board.cell_count
        for cell, symbol in assignment:
            if not (1 <= cell <= board.cell_count and 1 <= symbol <= 7):
                raise OracleError(f"oracle assigned symbol {symbol} to cell {cell}")
            if values[cell - 1]:
                raise OracleError(f"oracle assigned cell {cell} twice")
            values[cell - 1] = symbol
        if 0 in values:
            raise OracleError("oracle left cells unassigned")
        filled = FilledBoard(board, tuple(values))
        if not solver.check_filled(filled):
            raise OracleError("oracle returned an invalid board")
        for cell, symbol in puzzle.seeds.items():
            if filled.value(cell) != symbol:
                raise OracleError("oracle ignored a seed")
        if filled in found:
            raise OracleError("oracle repeated an excluded solution")
        found.append(filled)
    return ExclusionOutcome(tuple(found), calls, solver.SolveStatus.CAPPED)
