"""Exhaustive census of valid boards per family, with structural checks.

Every family's full solution set is enumerated and partitioned into
equivalence classes under the family's transform group.  The classes carry
canonical forms (exact lexicographic minima over every transform), stabilizer
and orbit sizes, and symbol-count profiles.  Alongside the census a set of
structural facts is verified over *all* solutions:

T1  the seven circle centers carry seven distinct symbols (hexagon);
T2  the six corners plus the center carry seven distinct symbols (hexagon);
T3  every symbol occurs at least 5 times and the count profile is
    {5,5,5,5,5,6,6} or {5,5,5,5,5,5,7}; in the latter case the 7-fold symbol
    sits at the center and appears in all 28 regions (hexagon);
T7  symbols split into three pairs plus the center symbol, and cells swapped
    by the 180-degree rotation carry a pair (or twice the center symbol);
T8  deleting the center-circle region leaves the hexagon solution set
    unchanged.

T7 is checked for every family (all four are centrally symmetric); T1/T2/T3/
T8 are hexagon statements.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field, replace

import numpy as np

from . import solver, symmetry, topology
from .solver import Puzzle
from .symmetry import FilledBoard
from .topology import BoardSpec, Family

THEOREM_IDS = ("T1", "T2", "T3", "T7", "T8")

# the standard-form center circle: value pattern of the central disc used to
# seed the four canonical puzzles
STANDARD_CENTER_SEEDS = {12: 1, 13: 2, 18: 6, 19: 7, 20: 3, 25: 5, 26: 4}

_ALL_PERMS = np.array(list(itertools.permutations(range(1, 8))), dtype=np.int8)


class ClassificationError(ValueError):
    pass


class PairingError(ValueError):
    """Raised when no antipodal pairing exists (would falsify T7)."""


class TheoremScopeError(ValueError):
    pass


@dataclass(frozen=True)
class TheoremResult:
    theorem_id: str
    passed: bool
    detail: str
    witness: str | None = None


@dataclass(frozen=True)
class PairingStructure:
    """Three symbol pairs plus the unpaired symbol at the central cell."""

    pairs: frozenset[frozenset[int]]
    fixed_symbol: int

    def partner(self, symbol: int) -> int:
        if symbol == self.fixed_symbol:
            return symbol
        for pair in self.pairs:
            if symbol in pair:
                (other,) = pair - {symbol}
                return other
        raise KeyError(symbol)


@dataclass(frozen=True)
class CensusClass:
    label: str
    canonical: tuple[int, ...]
    stabilizer_size: int
    orbit_size: int
    profile: tuple[int, ...]  # per-symbol counts, ascending

    def filled(self, board: BoardSpec) -> FilledBoard:
        return FilledBoard(board, self.canonical)


@dataclass(frozen=True)
class CensusReport:
    family: Family
    group_size: int
    solution_count: int
    classes: tuple[CensusClass, ...]
    theorem_results: dict[str, TheoremResult]
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def total_labeled_boards(self) -> int:
        return sum(c.orbit_size for c in self.classes)

    def class_by_label(self, label: str) -> CensusClass:
        for cls in self.classes:
            if cls.label == label:
                return cls
        raise ClassificationError(f"no class labeled {label!r}")

    def to_text(self) -> str:
        lines = [
            f"census {self.family.value}",
            f"symmetries: {self.group_size}",
            f"transforms: {self.group_size * 5040}",
            f"solutions: {self.solution_count}",
            f"classes: {len(self.classes)}",
            f"total: {self.total_labeled_boards}",
        ]
        for cls in self.classes:
            profile = ",".join(str(c) for c in cls.profile)
            values = "".join(str(v) for v in cls.canonical)
            lines.append(
                f"class {cls.label} stabilizer={cls.stabilizer_size} "
                f"orbit={cls.orbit_size} profile={profile} canonical={values}")
        for tid in sorted(self.theorem_results):
            res = self.theorem_results[tid]
            status = "pass" if res.passed else "FAIL"
            lines.append(f"theorem {tid}: {status} ({res.detail})")
        for key in sorted(self.notes):
            lines.append(f"note {key}: {self.notes[key]}")
        return "\n".join(lines) + "\n"


# -- orbit machinery ---------------------------------------------------------

def _orbit(vec: np.ndarray, cell_maps: list[np.ndarray], n: int) -> set[bytes]:
    """Every image of one solution under (symmetry, permutation)."""
    out: set[bytes] = set()
    for cm in cell_maps:
        relocated = np.zeros(n, dtype=np.int8)
        relocated[cm] = vec
        images = _ALL_PERMS[:, relocated - 1]
        buf = images.tobytes()
        out.update(buf[i * n:(i + 1) * n] for i in range(len(_ALL_PERMS)))
    return out


def _partition_classes(solutions: np.ndarray,
                       group: tuple[symmetry.BoardSymmetry, ...]):
    """Split the solution array into orbits; returns (canonical, orbit size)."""
    n = solutions.shape[1]
    cell_maps = [np.asarray(sym.cell_map, dtype=np.intp) - 1 for sym in group]
    buf = solutions.tobytes()
    seen: set[bytes] = set()
    out = []
    for i in range(solutions.shape[0]):
        key = buf[i * n:(i + 1) * n]
        if key in seen:
            continue
        orbit = _orbit(solutions[i], cell_maps, n)
        seen |= orbit
        canonical = min(orbit)
        out.append((tuple(int(b) for b in canonical), len(orbit)))
    out.sort()
    return out


# -- vectorized structural checks ---------------------------------------------

def _hex_corners(board: BoardSpec) -> list[int]:
    out = []
    for i, c in enumerate(board.coords):
        if sorted((abs(c.q), abs(c.r), abs(c.q + c.r))) == [0, 3, 3]:
            out.append(i + 1)
    return out


def _all_distinct_columns(a: np.ndarray) -> np.ndarray:
    s = np.sort(a, axis=1)
    return (np.diff(s, axis=1) != 0).all(axis=1)


def _check_t1(board: BoardSpec, sols: np.ndarray) -> TheoremResult:
    centers = [r.center for r in board.circles()]
    ok = _all_distinct_columns(sols[:, np.asarray(centers) - 1])
    return _summ("T1", ok, f"circle centers distinct on {len(sols)} boards")


def _check_t2(board: BoardSpec, sols: np.ndarray) -> TheoremResult:
    cells = _hex_corners(board) + [board.center_cell]
    ok = _all_distinct_columns(sols[:, np.asarray(cells) - 1])
    return _summ("T2", ok, f"corners+center distinct on {len(sols)} boards")


def _symbol_counts(sols: np.ndarray) -> np.ndarray:
    return np.stack([(sols == s).sum(axis=1) for s in range(1, 8)], axis=1)


def _check_t3(board: BoardSpec, sols: np.ndarray) -> TheoremResult:
    counts = _symbol_counts(sols)
    profile = np.sort(counts, axis=1)
    p1 = (profile == np.array([5, 5, 5, 5, 5, 6, 6])).all(axis=1)
    p2 = (profile == np.array([5, 5, 5, 5, 5, 5, 7])).all(axis=1)
    ok = (counts.min(axis=1) >= 5) & (p1 | p2)
    # boards with a 7-fold symbol: that symbol is the center value and shows
    # up in every region
    heavy = np.where(p2)[0]
    coverage = np.ones(len(sols), dtype=bool)
    if len(heavy):
        hsols = sols[heavy]
        seven = np.argmax(counts[heavy] == 7, axis=1) + 1
        cover = seven == hsols[:, board.center_cell - 1]
        for region in board.regions:
            idx = np.asarray(region.cells) - 1
            cover &= (hsols[:, idx] == seven[:, None]).any(axis=1)
        coverage[heavy] = cover
    ok &= coverage
    detail = (f"{int(p1.sum())} boards with profile 5x5+6+6, "
              f"{int(p2.sum())} with 6x5+7; center symbol covers all "
              f"{len(board.regions)} regions on the latter")
    return _summ("T3", ok, detail)


def _check_t7(board: BoardSpec, sols: np.ndarray) -> TheoremResult:
    nsols = len(sols)
    center = board.center_cell
    partner = np.zeros((nsols, 8), dtype=np.int16)
    bad = np.zeros(nsols, dtype=bool)

    def learn(svals, tvals):
        nonlocal bad
        rows = np.arange(nsols)
        cur = partner[rows, svals]
        bad |= (cur != 0) & (cur != tvals)
        partner[rows, svals] = tvals

    for cell in board.cell_ids():
        mate = board.antipode(cell)
        if mate <= cell:
            continue  # unordered pairs once; center pairs with itself
        s = sols[:, cell - 1].astype(np.int16)
        t = sols[:, mate - 1].astype(np.int16)
        learn(s, t)
        learn(t, s)

    rows = np.arange(nsols)
    ok = ~bad
    fixed = np.zeros(nsols, dtype=np.int16)
    fixed_count = np.zeros(nsols, dtype=np.int16)
    for s in range(1, 8):
        mate = partner[:, s]
        ok &= mate != 0                       # involution is total
        ok &= partner[rows, mate] == s        # and self-inverse
        is_fixed = mate == s
        fixed_count += is_fixed
        fixed = np.where(is_fixed, s, fixed)
    ok &= fixed_count == 1
    ok &= fixed == sols[:, center - 1]
    return _summ("T7", ok,
                 f"antipodal pairing (3 pairs + center symbol) on {nsols} boards")


def _summ(tid: str, ok: np.ndarray, detail: str) -> TheoremResult:
    if bool(ok.all()):
        return TheoremResult(tid, True, detail)
    idx = int(np.argmin(ok))
    return TheoremResult(tid, False, detail, witness=f"solution index {idx}")


def _check_t8(board: BoardSpec) -> TheoremResult:
    """Deleting the center circle must not change the solution set."""
    center_circle = next(r for r in board.circles() if r.center == board.center_cell)
    reduced = board.without_region(center_circle.cells)
    full_sols, _, _ = solver.solve_raw(board)
    red_sols, _, _ = solver.solve_raw(reduced)
    n = board.cell_count
    as_set = lambda a: {a.tobytes()[i * n:(i + 1) * n] for i in range(len(a))}
    same = as_set(full_sols) == as_set(red_sols)
    return TheoremResult(
        "T8", same,
        f"{len(full_sols)} solutions with the center circle, "
        f"{len(red_sols)} without",
        witness=None if same else "solution sets differ")


# -- individual-board checks ---------------------------------------------------

def pairing_of(filled: FilledBoard) -> PairingStructure:
    """The symbol pairing realized by the 180-degree rotation."""
    board = filled.board
    center = board.center_cell
    partner: dict[int, int] = {}
    for cell in board.cell_ids():
        mate = board.antipode(cell)
        if mate < cell:
            continue
        a, b = filled.value(cell), filled.value(mate)
        for x, y in ((a, b), (b, a)):
            if partner.setdefault(x, y) != y:
                raise PairingError(
                    f"cells {cell}/{mate} break the pairing: "
                    f"{x} maps to both {partner[x]} and {y}")
    fixed = [s for s, t in partner.items() if s == t]
    if len(fixed) != 1 or len(partner) != 7:
        raise PairingError(f"no three-pair structure: partner map {partner}")
    if fixed[0] != filled.value(center):
        raise PairingError(
            f"unpaired symbol {fixed[0]} differs from center value "
            f"{filled.value(center)}")
    pairs = frozenset(frozenset((s, t)) for s, t in partner.items() if s != t)
    return PairingStructure(pairs, fixed[0])


def check_theorem(subject, theorem_id: str) -> TheoremResult:
    """Check one structural fact for a FilledBoard (T1/T2/T3/T7) or a
    family/BoardSpec (T8)."""
    tid = theorem_id.upper()
    if tid not in THEOREM_IDS:
        raise TheoremScopeError(f"unknown theorem id {theorem_id!r}; "
                                f"known: {', '.join(THEOREM_IDS)}")
    if tid == "T8":
        if isinstance(subject, (Family, str)):
            board = topology.board(Family(subject))
        elif isinstance(subject, BoardSpec):
            board = subject
        elif isinstance(subject, CensusReport):
            board = topology.board(subject.family)
        else:
            raise TheoremScopeError("T8 applies to a family, not a single board")
        if board.family is not Family.HEXAGON:
            raise TheoremScopeError("T8 is a hexagon statement")
        return _check_t8(board)

    if not isinstance(subject, FilledBoard):
        raise TheoremScopeError(f"{tid} applies to a filled board")
    board = subject.board
    if tid in ("T1", "T2", "T3") and board.family is not Family.HEXAGON:
        raise TheoremScopeError(f"{tid} is a hexagon statement")
    sols = np.asarray([subject.values], dtype=np.int8)
    if tid == "T1":
        return _check_t1(board, sols)
    if tid == "T2":
        return _check_t2(board, sols)
    if tid == "T3":
        return _check_t3(board, sols)
    try:
        pairing_of(subject)
    except PairingError as exc:
        return TheoremResult("T7", False, "no antipodal pairing", witness=str(exc))
    return TheoremResult("T7", True, "antipodal pairing exists")


# -- standard-form puzzles ------------------------------------------------------

def derive_standard_puzzles() -> list[Puzzle]:
    """The four canonical hexagon puzzles.

    Fix the standard center circle, then place a 1 at circle center 8 or 21
    and a 1 at a corner, keeping only placements that do not collide inside
    any region; finally drop candidates equivalent under transforms fixing
    the center seeds.  Exactly four puzzles survive.
    """
    board = topology.board(Family.HEXAGON)
    corners = _hex_corners(board)

    def consistent(seeds: dict[int, int]) -> bool:
        for region in board.regions:
            vals = [seeds[c] for c in region.cells if c in seeds]
            if len(vals) != len(set(vals)):
                return False
        return True

    candidates = []
    for center in (8, 21):
        for corner in corners:
            seeds = dict(STANDARD_CENTER_SEEDS)
            seeds[center] = 1
            seeds[corner] = 1
            if len(seeds) == len(STANDARD_CENTER_SEEDS) + 2 and consistent(seeds):
                candidates.append(seeds)

    fixing = _center_fixing_transforms(board)
    kept: list[dict[int, int]] = []
    seen: set[frozenset] = set()
    for seeds in candidates:
        if frozenset(seeds.items()) in seen:
            continue
        kept.append(seeds)
        for sym, perm in fixing:
            image = {sym.apply_to_cell(c): perm(v) for c, v in seeds.items()}
            seen.add(frozenset(image.items()))
    return [Puzzle(board, seeds) for seeds in kept]


def _center_fixing_transforms(board: BoardSpec):
    """Transforms that leave the standard center-circle seeds in place."""
    out = []
    for sym in symmetry.symmetry_group(board):
        mapping = [0] * 8
        ok = True
        for cell, value in STANDARD_CENTER_SEEDS.items():
            target = STANDARD_CENTER_SEEDS.get(sym.apply_to_cell(cell))
            if target is None:
                ok = False
                break
            if mapping[value] == 0:
                mapping[value] = target
            elif mapping[value] != target:
                ok = False
                break
        if not ok:
            continue
        spare_src = [s for s in range(1, 8) if mapping[s] == 0]
        spare_dst = [s for s in range(1, 8) if s not in mapping[1:]]
        for src, dst in zip(spare_src, spare_dst):
            mapping[src] = dst
        out.append((sym, symmetry.SymbolPermutation(tuple(mapping[1:]))))
    return out


# -- the census ----------------------------------------------------------------

_cache_lock = threading.Lock()
_base_reports: dict[Family, CensusReport] = {}
_t8_results: dict[Family, TheoremResult] = {}


def _labels_for(family: Family, classes) -> list[str]:
    if family is not Family.HEXAGON:
        return [str(i + 1) for i in range(len(classes))]
    # A..C carry two 6-fold symbols, D..F a 7-fold one; canonical order within
    heavy = sorted((cls[0] for cls in classes if 7 in cls[2]))
    light = sorted((cls[0] for cls in classes if 7 not in cls[2]))
    label_of = dict(zip(light, "ABC"))
    label_of.update(zip(heavy, "DEF"))
    return [label_of[cls[0]] for cls in classes]


def _build_report(family: Family) -> CensusReport:
    board = topology.board(family)
    group = symmetry.symmetry_group(board)
    sols, _, status = solver.solve_raw(board)
    assert status is solver.SolveStatus.COMPLETE

    raw_classes = _partition_classes(sols, group)
    ntrans = len(group) * 5040
    with_profiles = []
    for canonical, orbit in raw_classes:
        arr = np.asarray(canonical, dtype=np.int8)
        profile = tuple(sorted(int((arr == s).sum()) for s in range(1, 8)))
        with_profiles.append((canonical, orbit, profile))
    labels = _labels_for(family, with_profiles)

    classes = []
    for label, (canonical, orbit, profile) in zip(labels, with_profiles):
        rep = FilledBoard(board, canonical)
        stab = len(symmetry.stabilizer(rep))
        if stab * orbit != ntrans:
            raise AssertionError(
                f"orbit-stabilizer mismatch for class {label}: {stab}*{orbit}")
        classes.append(CensusClass(label, canonical, stab, orbit, profile))
    classes.sort(key=lambda c: c.label)

    theorems: dict[str, TheoremResult] = {}
    notes: dict[str, str] = {}
    theorems["T7"] = _check_t7(board, sols)
    if family is Family.HEXAGON:
        theorems["T1"] = _check_t1(board, sols)
        theorems["T2"] = _check_t2(board, sols)
        theorems["T3"] = _check_t3(board, sols)
        _standard_form_cross_check(board, classes, notes)

    report = CensusReport(
        family=family,
        group_size=len(group),
        solution_count=int(sols.shape[0]),
        classes=tuple(classes),
        theorem_results=theorems,
        notes=notes,
    )
    if report.total_labeled_boards != report.solution_count:
        raise AssertionError("orbit sizes do not add up to the raw count")
    return report


def _standard_form_cross_check(board, classes, notes) -> None:
    """Re-derive the classes from the four standard puzzles."""
    puzzles = derive_standard_puzzles()
    counts = []
    pooled: list[FilledBoard] = []
    per_puzzle_labels = []
    by_canonical = {cls.canonical: cls.label for cls in classes}
    for puz in puzzles:
        outcome = solver.solve(puz)
        counts.append(len(outcome.solutions))
        labels = []
        for sol in outcome.solutions:
            canon = symmetry.canonical_form(sol).values
            label = by_canonical.get(canon)
            if label is None:
                raise AssertionError("standard puzzle solution outside census")
            labels.append(label)
            pooled.append(sol)
        per_puzzle_labels.append(labels)
    if sorted(counts) != [0, 4, 4, 4]:
        raise AssertionError(f"standard puzzles solved to {counts}")
    covered = {l for labels in per_puzzle_labels for l in labels}
    if covered != {c.label for c in classes}:
        raise AssertionError("standard-form seeding missed a class")
    notes["standard_puzzle_counts"] = ",".join(str(c) for c in counts)
    notes["standard_puzzle_classes"] = ";".join(
        ",".join(labels) or "-" for labels in per_puzzle_labels)


def enumerate_classes(family: Family | str, *,
                      center_circle_check: bool = True) -> CensusReport:
    """Census of one family; results are cached (boards are immutable).

    ``center_circle_check`` controls the T8 re-enumeration (hexagon only),
    which costs two further full enumerations.
    """
    family = Family(family)
    with _cache_lock:
        report = _base_reports.get(family)
    if report is None:
        report = _build_report(family)
        if family is Family.RHOMBUS:
            _annotate_rhombus_cores(report)
        with _cache_lock:
            report = _base_reports.setdefault(family, report)

    if center_circle_check and family is Family.HEXAGON:
        with _cache_lock:
            t8 = _t8_results.get(family)
        if t8 is None:
            t8 = _check_t8(topology.board(family))
            with _cache_lock:
                _t8_results[family] = t8
        merged = dict(report.theorem_results)
        merged["T8"] = t8
        report = replace(report, theorem_results=merged)
    return report


def _annotate_rhombus_cores(report: CensusReport) -> None:
    """Record which hexagon classes the rhombus boards restrict to.

    The rhombus cells cover the hexagon; restricting a valid rhombus board to
    the hexagon cells yields a valid hexagon board (every hexagon region is
    contained in a rhombus region).  The observed correspondence is recorded,
    not asserted.
    """
    rhombus = topology.board(Family.RHOMBUS)
    hexagon = topology.board(Family.HEXAGON)
    hex_report = enumerate_classes(Family.HEXAGON, center_circle_check=False)
    cores = []
    for cls in report.classes:
        values = [cls.canonical[rhombus.cell_at(coord) - 1]
                  for coord in hexagon.coords]
        core = FilledBoard(hexagon, tuple(values))
        cores.append(classify(core, hex_report))
    report.notes["hexagon_core_classes"] = ",".join(cores)


def classify(filled: FilledBoard, report: CensusReport) -> str:
    """The label of the class containing a valid filled board."""
    if filled.board.family is not report.family:
        raise ClassificationError(
            f"board family {filled.board.family.value} does not match the "
            f"{report.family.value} census")
    if not solver.check_filled(filled):
        raise ClassificationError("board violates a region constraint")
    canon = symmetry.canonical_form(filled).values
    for cls in report.classes:
        if cls.canonical == canon:
            return cls.label
    raise ClassificationError(
        "valid board missing from the census (internal inconsistency)")
