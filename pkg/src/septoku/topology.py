"""Board geometry: cell sets, region systems and geometric queries.

Four board families are supported, all built on the same axial hex lattice
(pointy-top, q growing east, r growing south-east):

* ``hexagon`` -- the classic 37-cell side-4 board with 21 rows + 7 circles.
* ``rhombus`` -- a 7x7 parallelogram of 49 cells with 9 circles.
* ``star``    -- a 73-cell six-pointed star; rows longer than 7 cells are
  constrained through sliding 7-cell windows.
* ``flower``  -- 49 cells tiled by 7 pairwise-disjoint circles.

Cells are numbered 1..N row-major (top to bottom, left to right), which for
the hexagon reproduces the conventional numbering:

            1   2   3   4
          5  <6>  7  <8>  9
       10  11  12  13  14  15
     16 <17> 18 <19> 20 <21> 22
       23  24  25  26  27  28
         29 <30> 31 <32> 33
           34  35  36  37

A *region* is any cell subset required to hold pairwise-distinct symbols:
maximal straight runs of length >= 2 ("rows"), 7-cell windows of longer runs,
and 7-cell discs around the marked centers ("circles").
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

SYMBOLS = 7
FULL_MASK = (1 << SYMBOLS) - 1

# axial neighbor offsets: E, W, SE, NW, NE, SW
NEIGHBOR_OFFSETS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


class Family(str, enum.Enum):
    HEXAGON = "hexagon"
    RHOMBUS = "rhombus"
    STAR = "star"
    FLOWER = "flower"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


class HexCoord(NamedTuple):
    q: int
    r: int

    def __add__(self, other):  # type: ignore[override]
        return HexCoord(self.q + other[0], self.r + other[1])

    def neighbors(self) -> list["HexCoord"]:
        return [self + d for d in NEIGHBOR_OFFSETS]


class Direction(str, enum.Enum):
    """The three row directions of the lattice."""

    E = "e"    # (1, 0), horizontal
    SE = "se"  # (0, 1), down-right
    SW = "sw"  # (-1, 1), down-left

    @property
    def step(self) -> tuple[int, int]:
        return {"e": (1, 0), "se": (0, 1), "sw": (-1, 1)}[self.value]


class RegionKind(str, enum.Enum):
    ROW = "row"
    WINDOW = "window"
    CIRCLE = "circle"


class UnknownCellError(KeyError):
    pass


class UnknownRegionError(KeyError):
    pass


@dataclass(frozen=True)
class Region:
    """A duplicate-free cell subset. Identity for comparisons is the cell set;
    ids are stable within one BoardSpec but otherwise arbitrary."""

    id: int
    kind: RegionKind
    cells: tuple[int, ...]
    direction: Direction | None = None  # rows and windows
    center: int | None = None           # circles
    offset: int | None = None           # windows: start index within the run

    def __post_init__(self) -> None:
        if len(set(self.cells)) != len(self.cells):
            raise ValueError(f"region {self.id} has repeated cells")
        if not 2 <= len(self.cells) <= 7:
            raise ValueError(f"region {self.id} has {len(self.cells)} cells")
        if self.kind is RegionKind.CIRCLE and len(self.cells) != 7:
            raise ValueError(f"circle region {self.id} must have 7 cells")

    @property
    def cell_set(self) -> frozenset[int]:
        return frozenset(self.cells)

    def describe(self) -> str:
        cells = ",".join(str(c) for c in self.cells)
        if self.kind is RegionKind.CIRCLE:
            return f"region {self.id} circle center={self.center} cells={cells}"
        if self.kind is RegionKind.WINDOW:
            return (f"region {self.id} window {self.direction.value} "
                    f"offset={self.offset} cells={cells}")
        return f"region {self.id} row {self.direction.value} cells={cells}"


@dataclass(frozen=True)
class BoardSpec:
    """Immutable board description: cells with coordinates plus all regions."""

    family: Family
    coords: tuple[HexCoord, ...]          # coords[i] = coordinate of cell i+1
    regions: tuple[Region, ...]
    symbol_count: int = SYMBOLS
    _coord_index: dict[HexCoord, int] = field(repr=False, compare=False, default_factory=dict)
    _cell_regions: dict[int, tuple[int, ...]] = field(repr=False, compare=False, default_factory=dict)
    _antipode: dict[int, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        index = {c: i + 1 for i, c in enumerate(self.coords)}
        by_cell: dict[int, list[int]] = {c: [] for c in range(1, len(self.coords) + 1)}
        for reg in self.regions:
            for c in reg.cells:
                if not 1 <= c <= len(self.coords):
                    raise ValueError(f"region {reg.id} references unknown cell {c}")
                by_cell[c].append(reg.id)
        anti = {}
        for i, c in enumerate(self.coords):
            mirror = HexCoord(-c.q, -c.r)
            if mirror not in index:
                raise ValueError("board lacks 180-degree rotational symmetry")
            anti[i + 1] = index[mirror]
        object.__setattr__(self, "_coord_index", index)
        object.__setattr__(self, "_cell_regions",
                           {c: tuple(ids) for c, ids in by_cell.items()})
        object.__setattr__(self, "_antipode", anti)

    # -- basic queries -----------------------------------------------------

    @property
    def cell_count(self) -> int:
        return len(self.coords)

    def cell_ids(self) -> range:
        return range(1, len(self.coords) + 1)

    def coord_of(self, cell: int) -> HexCoord:
        if not 1 <= cell <= len(self.coords):
            raise UnknownCellError(cell)
        return self.coords[cell - 1]

    def cell_at(self, coord: HexCoord) -> int | None:
        return self._coord_index.get(HexCoord(*coord))

    def region_by_id(self, region_id: int) -> Region:
        if not 1 <= region_id <= len(self.regions):
            raise UnknownRegionError(region_id)
        return self.regions[region_id - 1]

    def region_cells(self, region_id: int) -> frozenset[int]:
        return self.region_by_id(region_id).cell_set

    def regions_of_cell(self, cell: int) -> tuple[int, ...]:
        try:
            return self._cell_regions[cell]
        except KeyError:
            raise UnknownCellError(cell) from None

    def region_sets(self) -> frozenset[frozenset[int]]:
        """Region identity as a set of cell-sets (ids are internal)."""
        return frozenset(r.cell_set for r in self.regions)

    def antipode(self, cell: int) -> int:
        try:
            return self._antipode[cell]
        except KeyError:
            raise UnknownCellError(cell) from None

    @property
    def center_cell(self) -> int | None:
        return self.cell_at(HexCoord(0, 0))

    def circles(self) -> list[Region]:
        return [r for r in self.regions if r.kind is RegionKind.CIRCLE]

    def without_region(self, cells: Iterable[int]) -> "BoardSpec":
        """A copy with the region matching the given cell set removed."""
        target = frozenset(cells)
        kept = [r for r in self.regions if r.cell_set != target]
        if len(kept) == len(self.regions):
            raise UnknownRegionError(sorted(target))
        renumbered = tuple(
            Region(i + 1, r.kind, r.cells, r.direction, r.center, r.offset)
            for i, r in enumerate(kept)
        )
        return BoardSpec(self.family, self.coords, renumbered, self.symbol_count)

    # -- export ------------------------------------------------------------

    def describe(self) -> str:
        """Stable structured-text board description (cells and regions)."""
        lines = [
            f"family: {self.family.value}",
            f"cells: {self.cell_count}",
            f"symbols: {self.symbol_count}",
        ]
        for i, c in enumerate(self.coords):
            lines.append(f"cell {i + 1} q={c.q} r={c.r}")
        lines.append(f"regions: {len(self.regions)}")
        lines.extend(r.describe() for r in self.regions)
        return "\n".join(lines) + "\n"


# -- cell sets per family ---------------------------------------------------

def _hexagon_cells() -> set[HexCoord]:
    # hexagonal disk of radius 3 around the origin
    return {HexCoord(q, r)
            for r in range(-3, 4)
            for q in range(max(-3, -3 - r), min(3, 3 - r) + 1)}


def _rhombus_cells() -> set[HexCoord]:
    # the hexagon with the two |q+r| > 3 corner triangles filled in
    return {HexCoord(q, r) for q in range(-3, 4) for r in range(-3, 4)}


def _star_cells() -> set[HexCoord]:
    # union of two opposed side-10 triangles; their intersection is the hexagon
    t1 = {HexCoord(q, r)
          for r in range(-3, 7) for q in range(-3, 7) if q + r <= 3}
    return t1 | {HexCoord(-q, -r) for (q, r) in t1}


def _flower_centers() -> list[HexCoord]:
    # origin plus one rotation orbit of the squared-norm-7 lattice vectors;
    # discs around these seven points tile 49 cells with no overlap
    centers = [HexCoord(0, 0)]
    c = HexCoord(2, 1)
    for _ in range(6):
        centers.append(c)
        c = HexCoord(-c.r, c.q + c.r)
    return centers


def _flower_cells() -> set[HexCoord]:
    cells: set[HexCoord] = set()
    for c in _flower_centers():
        cells.add(c)
        cells.update(c.neighbors())
    return cells


_CELL_BUILDERS = {
    Family.HEXAGON: _hexagon_cells,
    Family.RHOMBUS: _rhombus_cells,
    Family.STAR: _star_cells,
    Family.FLOWER: _flower_cells,
}


# -- region construction -----------------------------------------------------

def maximal_runs(cells: set[HexCoord], direction: Direction) -> list[list[HexCoord]]:
    """All maximal straight runs of the cell set along one direction."""
    dq, dr = direction.step
    runs = []
    for c in sorted(cells, key=lambda c: (c.r, c.q)):
        if HexCoord(c.q - dq, c.r - dr) in cells:
            continue  # not the start of a run
        run, cur = [], c
        while cur in cells:
            run.append(cur)
            cur = HexCoord(cur.q + dq, cur.r + dr)
        runs.append(run)
    return runs


def row_windows(run: list, max_len: int = 7) -> list[list]:
    """Contiguous windows covering a straight run.

    A run of at most ``max_len`` cells is returned as-is; a longer run yields
    every window of exactly ``max_len`` cells, which constrains all connected
    subsets of up to ``max_len`` cells.
    """
    if len(run) <= max_len:
        return [list(run)]
    return [list(run[i:i + max_len]) for i in range(len(run) - max_len + 1)]


def _circle_centers(family: Family, cells: set[HexCoord]) -> list[HexCoord]:
    if family is Family.FLOWER:
        return _flower_centers()
    # hexagon/rhombus/star: the even sublattice spanned by the hexagon's
    # centers; a center counts when its whole 7-cell disc fits on the board
    out = []
    for c in sorted(cells, key=lambda c: (c.r, c.q)):
        if c.q % 2 == 0 and c.r % 2 == 0 and all(n in cells for n in c.neighbors()):
            out.append(c)
    return out


def build_board(family: Family | str) -> BoardSpec:
    """Construct the BoardSpec of a family (pure function of the family)."""
    family = Family(family)
    cells = _CELL_BUILDERS[family]()
    order = sorted(cells, key=lambda c: (c.r, c.q))
    index = {c: i + 1 for i, c in enumerate(order)}

    regions: list[Region] = []

    def add(kind, coords, **kw):
        regions.append(Region(len(regions) + 1, kind,
                              tuple(index[c] for c in coords), **kw))

    for direction in Direction:
        for run in maximal_runs(cells, direction):
            if len(run) < 2:
                continue  # 1-cell runs impose nothing
            if len(run) <= 7:
                add(RegionKind.ROW, run, direction=direction)
            else:
                for off, window in enumerate(row_windows(run)):
                    add(RegionKind.WINDOW, window, direction=direction, offset=off)

    for center in _circle_centers(family, cells):
        disc = sorted([center] + center.neighbors(), key=lambda c: (c.r, c.q))
        add(RegionKind.CIRCLE, disc, center=index[center])

    return BoardSpec(family, tuple(order), tuple(regions))


_BOARD_CACHE: dict[Family, BoardSpec] = {}


def board(family: Family | str) -> BoardSpec:
    """Cached accessor; BoardSpec is immutable so sharing is safe."""
    family = Family(family)
    if family not in _BOARD_CACHE:
        _BOARD_CACHE[family] = build_board(family)
    return _BOARD_CACHE[family]
