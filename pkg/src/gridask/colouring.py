"""Partial colourings of rectangular grids and the blank-closure
admissibility test.

A partial colouring assigns colours to some cells of [d] x [e] (1-based);
uncoloured cells are blank.  Each colour's fibre encodes one linear
relation among matrix entries, with unit coefficients supplied separately.
A colouring is admissible when every non-empty colour-closed product
subgrid contains a blank cell.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


Cell = tuple[int, int]


class ParseError(Exception):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class NonUnitCoefficient(Exception):
    pass


class EmptySeed(Exception):
    pass


@dataclass(frozen=True)
class PartialColouring:
    d: int
    e: int
    colour_of: Mapping[Cell, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "colour_of", dict(self.colour_of))
        for (i, j) in self.colour_of:
            if not (1 <= i <= self.d and 1 <= j <= self.e):
                raise ValueError(f"cell {(i, j)} outside {self.d}x{self.e}")

    def colour(self, cell: Cell) -> str | None:
        return self.colour_of.get(cell)

    def is_blank(self, cell: Cell) -> bool:
        return cell not in self.colour_of

    def colours(self) -> list[str]:
        seen: dict[str, None] = {}
        for c in self.colour_of.values():
            seen.setdefault(c)
        return list(seen)

    def fibre(self, colour: str) -> list[Cell]:
        return sorted(c for c, col in self.colour_of.items() if col == colour)

    def cells(self) -> Iterable[Cell]:
        return ((i, j) for i in range(1, self.d + 1) for j in range(1, self.e + 1))


@dataclass(frozen=True)
class UnitAssignment:
    d: int
    e: int
    u: Mapping[Cell, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        filled = {(i, j): 1 for i in range(1, self.d + 1) for j in range(1, self.e + 1)}
        for cell, val in dict(self.u).items():
            if val == 0:
                raise NonUnitCoefficient(f"u{cell} = 0")
            filled[cell] = val
        object.__setattr__(self, "u", filled)

    def __getitem__(self, cell: Cell) -> int:
        return self.u[cell]

    def transpose(self) -> "UnitAssignment":
        return UnitAssignment(self.e, self.d, {(j, i): v for (i, j), v in self.u.items()})

    @staticmethod
    def ones(d: int, e: int) -> "UnitAssignment":
        return UnitAssignment(d, e, {})


Subgrid = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class ParsedGrid:
    family: str | None
    colouring: PartialColouring
    units: UnitAssignment


def parse_grid(text: str) -> ParsedGrid:
    """Parse the grid file format.

    Optional "family: rho|gamma|sigma" header, then "grid:" followed by d
    rows of whitespace-separated tokens ("." = blank), then an optional
    "units:" block of d rows of non-zero integers.  "#" starts a comment.
    """
    family: str | None = None
    grid_rows: list[list[str]] = []
    unit_rows: list[list[int]] = []
    section: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("family:"):
            family = line.split(":", 1)[1].strip().lower()
            if family not in ("rho", "gamma", "sigma"):
                raise ParseError(f"unknown family {family!r}", lineno)
            continue
        if line.lower() == "grid:":
            section = "grid"
            continue
        if line.lower() == "units:":
            section = "units"
            continue
        if section == "grid":
            grid_rows.append(line.split())
        elif section == "units":
            try:
                unit_rows.append([int(tok) for tok in line.split()])
            except ValueError as exc:
                raise ParseError(f"bad unit entry: {exc}", lineno) from None
        else:
            # headerless files: bare rows are the grid body
            section = "grid"
            grid_rows.append(line.split())
    if not grid_rows:
        raise ParseError("no grid rows")
    d = len(grid_rows)
    e = len(grid_rows[0])
    for idx, row in enumerate(grid_rows):
        if len(row) != e:
            raise ParseError(f"grid row {idx + 1} has {len(row)} tokens, expected {e}")
    colour_of = {}
    for i, row in enumerate(grid_rows, start=1):
        for j, tok in enumerate(row, start=1):
            if tok != ".":
                colour_of[(i, j)] = tok
    colouring = PartialColouring(d, e, colour_of)
    if unit_rows:
        if len(unit_rows) != d or any(len(r) != e for r in unit_rows):
            raise ParseError("units block shape does not match grid")
        u = {(i, j): unit_rows[i - 1][j - 1]
             for i in range(1, d + 1) for j in range(1, e + 1)}
        units = UnitAssignment(d, e, u)
    else:
        units = UnitAssignment.ones(d, e)
    return ParsedGrid(family, colouring, units)


def parse_colouring(text: str) -> tuple[PartialColouring, UnitAssignment]:
    parsed = parse_grid(text)
    return parsed.colouring, parsed.units


def colour_closure(beta: PartialColouring, seed: Subgrid) -> Subgrid:
    """Smallest colour-closed product subgrid containing the seed.

    Iterates to a fixpoint: whenever a colour appears inside the current
    I' x J', all rows and columns met by that colour's fibre are added.
    """
    I = set(seed[0])
    J = set(seed[1])
    if not I or not J:
        raise EmptySeed("seed subgrid must be non-empty")
    fibres = {c: beta.fibre(c) for c in beta.colours()}
    changed = True
    while changed:
        changed = False
        for colour, cells in fibres.items():
            if any(i in I and j in J for (i, j) in cells):
                for (i, j) in cells:
                    if i not in I:
                        I.add(i)
                        changed = True
                    if j not in J:
                        J.add(j)
                        changed = True
    return (tuple(sorted(I)), tuple(sorted(J)))


def is_colour_closed(beta: PartialColouring, sub: Subgrid) -> bool:
    I, J = set(sub[0]), set(sub[1])
    for colour in beta.colours():
        cells = beta.fibre(colour)
        if any(i in I and j in J for (i, j) in cells):
            if not all(i in I and j in J for (i, j) in cells):
                return False
    return True


def has_blank(beta: PartialColouring, sub: Subgrid) -> bool:
    return any(beta.is_blank((i, j)) for i in sub[0] for j in sub[1])


@dataclass(frozen=True)
class RectVerdict:
    admissible: bool
    witness: Subgrid | None = None  # a blank-free colour-closed subgrid


def is_admissible_rect(beta: PartialColouring) -> RectVerdict:
    """Blank-closure admissibility test.

    The colouring is admissible iff the closure of every coloured cell
    contains a blank cell: any blank-free closed subgrid contains the
    closure of each of its cells, so checking single-cell closures
    suffices.
    """
    for cell in sorted(beta.colour_of):
        closure = colour_closure(beta, ((cell[0],), (cell[1],)))
        if not has_blank(beta, closure):
            return RectVerdict(False, closure)
    return RectVerdict(True)


def transpose_colouring(beta: PartialColouring) -> PartialColouring:
    return PartialColouring(beta.e, beta.d,
                            {(j, i): c for (i, j), c in beta.colour_of.items()})


def sl_colouring(d: int) -> PartialColouring:
    """One colour on the main diagonal of [d] x [d] (trace-zero relation)."""
    return PartialColouring(d, d, {(i, i): "t" for i in range(1, d + 1)})


def all_blank(d: int, e: int) -> PartialColouring:
    return PartialColouring(d, e, {})
