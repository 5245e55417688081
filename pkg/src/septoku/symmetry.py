"""Board symmetries, symbol permutations and their action on filled boards.

A *transform* is a pair (board symmetry, symbol permutation) acting on a
filled board in postfix order, matching the conventional notation
``A(Rot)(654321)``: the symmetry relocates cells first, the permutation then
renames symbols, i.e. ``result(cell) = perm(values(symmetry^-1(cell)))``.
Composition is therefore left-to-right: ``(Flx)(Rot)`` is Flx first, Rot
second.

Each family's symmetry group is discovered from the 12 dihedral motions of
the lattice: a motion qualifies when it maps the cell set onto itself and
every region onto a region.  The hexagon and star admit all 12, the rhombus
4, and the flower (a chiral board) only the 6 rotations.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .topology import BoardSpec, Family, HexCoord, SYMBOLS

Coord = tuple[int, int]


def _rot60(c: Coord) -> Coord:
    """Rotate one axial step clockwise."""
    q, r = c
    return (-r, q + r)


def _flx(c: Coord) -> Coord:
    """Reflect across the horizontal axis through the origin."""
    q, r = c
    return (q + r, -r)


def _motion(flipped: bool, k: int) -> Callable[[Coord], Coord]:
    def f(c: Coord) -> Coord:
        if flipped:
            c = _flx(c)
        for _ in range(k % 6):
            c = _rot60(c)
        return c
    return f


def _motion_name(flipped: bool, k: int) -> str:
    k %= 6
    if k == 0:
        rot = ""
    elif k == 1:
        rot = "Rot"
    elif k <= 3:
        rot = f"Rot^{k}"
    else:
        rot = f"Rot^{k - 6}"
    if flipped:
        return f"Flx {rot}".strip()
    return rot or "Id"


class UnsupportedSymmetryError(ValueError):
    pass


class FamilyMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class SymbolPermutation:
    """Bijection on the symbols 1..7, stored as the image tuple."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.mapping) != list(range(1, SYMBOLS + 1)):
            raise ValueError(f"not a permutation of 1..{SYMBOLS}: {self.mapping}")

    @classmethod
    def identity(cls) -> "SymbolPermutation":
        return cls(tuple(range(1, SYMBOLS + 1)))

    @classmethod
    def from_cycles(cls, text: str) -> "SymbolPermutation":
        """Parse cycle notation such as ``(14)(25)(36)`` or ``(654321)``."""
        text = text.strip()
        if text in ("", "()", "id"):
            return cls.identity()
        if not re.fullmatch(r"(\(\d+\)\s*)+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        mapping = list(range(1, SYMBOLS + 1))
        for group in re.findall(r"\((\d+)\)", text):
            digits = [int(ch) for ch in group]
            if any(not 1 <= d <= SYMBOLS for d in digits):
                raise ValueError(f"symbol out of range in cycle ({group})")
            if len(set(digits)) != len(digits):
                raise ValueError(f"repeated symbol in cycle ({group})")
            for i, d in enumerate(digits):
                mapping[d - 1] = digits[(i + 1) % len(digits)]
        if sorted(mapping) != list(range(1, SYMBOLS + 1)):
            raise ValueError(f"cycles overlap in {text!r}")
        return cls(tuple(mapping))

    def to_cycles(self) -> str:
        """Canonical cycle notation; fixed points omitted, identity is ``()``."""
        seen = set()
        out = []
        for start in range(1, SYMBOLS + 1):
            if start in seen:
                continue
            cyc = [start]
            cur = self(start)
            while cur != start:
                cyc.append(cur)
                cur = self(cur)
            seen.update(cyc)
            if len(cyc) > 1:
                out.append("(" + "".join(str(d) for d in cyc) + ")")
        return "".join(out) or "()"

    def __call__(self, symbol: int) -> int:
        return self.mapping[symbol - 1]

    def then(self, other: "SymbolPermutation") -> "SymbolPermutation":
        """Apply self first, then other."""
        return SymbolPermutation(tuple(other(v) for v in self.mapping))

    def inverse(self) -> "SymbolPermutation":
        inv = [0] * SYMBOLS
        for i, v in enumerate(self.mapping):
            inv[v - 1] = i + 1
        return SymbolPermutation(tuple(inv))

    def __repr__(self) -> str:
        return f"SymbolPermutation({self.to_cycles()})"


@dataclass(frozen=True)
class BoardSymmetry:
    """A rigid motion of a board: name plus the induced cell bijection.

    ``cell_map[c - 1]`` is the image cell of cell ``c``.
    """

    family: Family
    name: str
    cell_map: tuple[int, ...]

    def apply_to_cell(self, cell: int) -> int:
        return self.cell_map[cell - 1]

    def inverse_map(self) -> tuple[int, ...]:
        inv = [0] * len(self.cell_map)
        for i, img in enumerate(self.cell_map):
            inv[img - 1] = i + 1
        return tuple(inv)

    def __repr__(self) -> str:
        return f"BoardSymmetry({self.family.value}, {self.name})"


@dataclass(frozen=True)
class Transform:
    """Board symmetry followed by a symbol permutation (postfix order)."""

    symmetry: BoardSymmetry
    permutation: SymbolPermutation

    def then(self, other: "Transform") -> "Transform":
        if other.symmetry.family is not self.symmetry.family:
            raise FamilyMismatchError("cannot compose transforms across families")
        cm1, cm2 = self.symmetry.cell_map, other.symmetry.cell_map
        composed = tuple(cm2[c - 1] for c in cm1)
        sym = _find_symmetry(self.symmetry.family, composed)
        return Transform(sym, self.permutation.then(other.permutation))

    def inverse(self) -> "Transform":
        sym = _find_symmetry(self.symmetry.family, self.symmetry.inverse_map())
        return Transform(sym, self.permutation.inverse())

    def describe(self) -> str:
        return f"({self.symmetry.name.replace(' ', ')(')}) {self.permutation.to_cycles()}"


@dataclass(frozen=True)
class FilledBoard:
    """A total assignment cell -> symbol. Validity is the solver's concern."""

    board: BoardSpec
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.board.cell_count:
            raise ValueError(
                f"expected {self.board.cell_count} values, got {len(self.values)}")
        if any(not 1 <= v <= self.board.symbol_count for v in self.values):
            raise ValueError("symbol out of range")

    def value(self, cell: int) -> int:
        return self.values[cell - 1]


# -- group discovery ---------------------------------------------------------

@lru_cache(maxsize=None)
def symmetry_group(board: BoardSpec) -> tuple[BoardSymmetry, ...]:
    """All dihedral motions preserving the cell set and the region system.

    Checked exhaustively at construction; the result is cached per board.
    """
    index = {(c.q, c.r): i + 1 for i, c in enumerate(board.coords)}
    region_sets = board.region_sets()
    out = []
    for flipped in (False, True):
        for k in range(6):
            motion = _motion(flipped, k)
            cell_map = []
            for c in board.coords:
                img = index.get(motion((c.q, c.r)))
                if img is None:
                    break
                cell_map.append(img)
            else:
                cm = tuple(cell_map)
                if all(frozenset(cm[c - 1] for c in reg) in region_sets
                       for reg in region_sets):
                    out.append(BoardSymmetry(board.family, _motion_name(flipped, k), cm))
    return tuple(out)


def _find_symmetry(family: Family, cell_map: tuple[int, ...]) -> BoardSymmetry:
    from .topology import board as _board
    for sym in symmetry_group(_board(family)):
        if sym.cell_map == cell_map:
            return sym
    raise UnsupportedSymmetryError("cell map is not a symmetry of this family")


_TOKEN_RE = re.compile(r"(rot|flx|id)(?:\^(-?\d+))?", re.IGNORECASE)


def symmetry_cell_map(board: BoardSpec, descriptor: str) -> BoardSymmetry:
    """Resolve a symmetry descriptor like ``Rot^-1``, ``Flx Rot`` or ``Id``.

    Tokens compose postfix (left to right).  Raises UnsupportedSymmetryError
    when the motion is not a symmetry of the family (e.g. Flx on the flower).
    """
    cleaned = descriptor.replace("(", " ").replace(")", " ").strip()
    if not cleaned:
        raise UnsupportedSymmetryError(f"empty symmetry descriptor: {descriptor!r}")
    pos = 0
    flipped, k = False, 0
    for m in _TOKEN_RE.finditer(cleaned):
        if cleaned[pos:m.start()].strip():
            raise UnsupportedSymmetryError(f"bad symmetry descriptor: {descriptor!r}")
        pos = m.end()
        kind = m.group(1).lower()
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if kind == "id":
            continue
        if kind == "flx":
            for _ in range(abs(exp) % 2):
                # postfix: existing motion first, then Flx; conjugate the
                # accumulated rotation through the reflection
                flipped = not flipped
                k = -k
        else:
            k += exp
    if cleaned[pos:].strip():
        raise UnsupportedSymmetryError(f"bad symmetry descriptor: {descriptor!r}")
    name = _motion_name(flipped, k)
    for sym in symmetry_group(board):
        if sym.name == name:
            return sym
    raise UnsupportedSymmetryError(
        f"{name!r} is not a symmetry of the {board.family.value} board")


def transform_count(board: BoardSpec) -> int:
    import math
    return len(symmetry_group(board)) * math.factorial(SYMBOLS)


def all_transforms(board: BoardSpec) -> Iterator[Transform]:
    """Every (symmetry, permutation) pair, in deterministic order."""
    for sym in symmetry_group(board):
        for perm in itertools.permutations(range(1, SYMBOLS + 1)):
            yield Transform(sym, SymbolPermutation(perm))


def identity_transform(board: BoardSpec) -> Transform:
    for sym in symmetry_group(board):
        if sym.name == "Id":
            return Transform(sym, SymbolPermutation.identity())
    raise AssertionError("group lacks identity")  # pragma: no cover


# -- the action --------------------------------------------------------------

def apply_transform(filled: FilledBoard, t: Transform) -> FilledBoard:
    """Relocate cells along the symmetry, then rename symbols."""
    if t.symmetry.family is not filled.board.family:
        raise FamilyMismatchError(
            f"transform is for {t.symmetry.family.value}, "
            f"board is {filled.board.family.value}")
    out = [0] * len(filled.values)
    cm = t.symmetry.cell_map
    pm = t.permutation.mapping
    for c, v in enumerate(filled.values):
        out[cm[c] - 1] = pm[v - 1]
    return FilledBoard(filled.board, tuple(out))


def _relocated(filled: FilledBoard, sym: BoardSymmetry) -> tuple[int, ...]:
    """Values after the cell motion alone (permutation still to choose)."""
    out = [0] * len(filled.values)
    cm = sym.cell_map
    for c, v in enumerate(filled.values):
        out[cm[c] - 1] = v
    return tuple(out)


def _first_seen_relabel(values: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest renaming of a value vector.

    Renaming symbols in order of first appearance is the greedy optimum over
    all 5040 permutations: each position takes the smallest value consistent
    with the renames already forced.
    """
    label: dict[int, int] = {}
    out = []
    for v in values:
        if v not in label:
            label[v] = len(label) + 1
        out.append(label[v])
    return tuple(out)


def canonical_form(filled: FilledBoard) -> FilledBoard:
    """The lexicographically smallest value vector over every transform."""
    best = None
    for sym in symmetry_group(filled.board):
        cand = _first_seen_relabel(_relocated(filled, sym))
        if best is None or cand < best:
            best = cand
    return FilledBoard(filled.board, best)


def _forced_permutation(src: tuple[int, ...], dst: tuple[int, ...]) -> SymbolPermutation | None:
    """The permutation p with p(src) == dst pointwise, if one exists.

    Symbols absent from src are mapped onto the unused targets in ascending
    order, making the witness deterministic.
    """
    mapping = [0] * SYMBOLS
    used = [False] * SYMBOLS
    for a, b in zip(src, dst):
        if mapping[a - 1] == 0:
            if used[b - 1]:
                return None
            mapping[a - 1] = b
            used[b - 1] = True
        elif mapping[a - 1] != b:
            return None
    spare = [s for s in range(1, SYMBOLS + 1) if not used[s - 1]]
    it = iter(spare)
    for i in range(SYMBOLS):
        if mapping[i] == 0:
            mapping[i] = next(it)
    return SymbolPermutation(tuple(mapping))


def are_equivalent(f1: FilledBoard, f2: FilledBoard) -> Transform | None:
    """A transform carrying f1 to f2, or None.

    Searches the whole transform set, but per symmetry the permutation is
    forced by matching symbols, so only |group| candidates are examined.
    """
    if f1.board.family is not f2.board.family:
        raise FamilyMismatchError("boards belong to different families")
    for sym in symmetry_group(f1.board):
        perm = _forced_permutation(_relocated(f1, sym), f2.values)
        if perm is not None:
            return Transform(sym, perm)
    return None


def stabilizer(filled: FilledBoard) -> list[Transform]:
    """All transforms fixing the board; contains at least the identity."""
    out = []
    for sym in symmetry_group(filled.board):
        src = _relocated(filled, sym)
        mapping = [0] * SYMBOLS
        ok = True
        for a, b in zip(src, filled.values):
            if mapping[a - 1] == 0:
                mapping[a - 1] = b
            elif mapping[a - 1] != b:
                ok = False
                break
        if not ok or len({v for v in mapping if v}) != len([v for v in mapping if v]):
            continue
        fixed_targets = {v for v in mapping if v}
        free_slots = [i for i in range(SYMBOLS) if mapping[i] == 0]
        free_targets = [s for s in range(1, SYMBOLS + 1) if s not in fixed_targets]
        for completion in itertools.permutations(free_targets):
            full = mapping[:]
            for slot, target in zip(free_slots, completion):
                full[slot] = target
            out.append(Transform(sym, SymbolPermutation(tuple(full))))
    return out


def orbit_size(filled: FilledBoard) -> int:
    return transform_count(filled.board) // len(stabilizer(filled))
