"""Independent brute-force reference implementations used only by tests.

Everything here is written directly from the definitions, with no reuse of
the library's elimination, closure, or greedy-play code, so that agreement
between the two is meaningful evidence.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from gridask.boardgame import build_grid, induce_colouring, isolated_blank_cells
from gridask.colouring import PartialColouring
from gridask.linalg import Mat


# ---------------------------------------------------------------------------
# Linear algebra oracles.
# ---------------------------------------------------------------------------

def naive_rank_modp(int_rows: list[list[int]], p: int) -> int:
    """Textbook row reduction over F_p on integer input rows."""
    rows = [[x % p for x in r] for r in int_rows]
    rank = 0
    n_cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = pow(rows[pivot_row][col], p - 2, p)
        rows[pivot_row] = [(x * inv) % p for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                c = rows[r][col]
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank


def brute_kernel_size(m: Mat) -> int:
    """Count row vectors x with x m = 0 by full enumeration."""
    ring = m.ring
    zero = ring.from_int(0)
    count = 0
    for x in itertools.product(list(ring.elements()), repeat=m.rows):
        if all(v == zero for v in m.act_left(x)):
            count += 1
    return count


def brute_image_size(m: Mat) -> int:
    """Count distinct images x m by full enumeration."""
    images = set()
    for x in itertools.product(list(m.ring.elements()), repeat=m.rows):
        images.add(m.act_left(x))
    return len(images)


# ---------------------------------------------------------------------------
# ask oracle.
# ---------------------------------------------------------------------------

def naive_ask(rep, ring) -> Fraction:
    """Average kernel size straight from the definition: enumerate every
    coefficient tuple, count each element's kernel by vector enumeration."""
    elems = list(ring.elements())
    total = 0
    count = 0
    for coeffs in itertools.product(elems, repeat=rep.rank):
        total += brute_kernel_size(rep.element(ring, coeffs))
        count += 1
    return Fraction(total, count)


# ---------------------------------------------------------------------------
# Rectangular admissibility from the quantified definition.
# ---------------------------------------------------------------------------

def _is_closed(beta: PartialColouring, I: frozenset, J: frozenset) -> bool:
    for colour in beta.colours():
        fibre = beta.fibre(colour)
        if any(i in I and j in J for (i, j) in fibre):
            if not all(i in I and j in J for (i, j) in fibre):
                return False
    return True


def exhaustive_rect_admissible(beta: PartialColouring) -> bool:
    """Quantify over ALL non-empty product subgrids: admissible iff every
    colour-closed one contains a blank cell."""
    rows = range(1, beta.d + 1)
    cols = range(1, beta.e + 1)
    for ri in range(1, beta.d + 1):
        for I in itertools.combinations(rows, ri):
            for rj in range(1, beta.e + 1):
                for J in itertools.combinations(cols, rj):
                    If, Jf = frozenset(I), frozenset(J)
                    if _is_closed(beta, If, Jf):
                        if all((i, j) in beta.colour_of for i in I for j in J):
                            return False
    return True


# ---------------------------------------------------------------------------
# Board-game oracle: exhaustive move-tree reachability.
# ---------------------------------------------------------------------------

def exhaustive_game_clearable(master, I, J) -> bool:
    """Can SOME legal move sequence from (I, J) delete every column?
    Explores the whole move tree with memoisation on the column set."""
    I = tuple(sorted(set(I)))
    seen: dict[frozenset, bool] = {}

    def explore(cols: frozenset) -> bool:
        if not cols:
            return True
        if cols in seen:
            return seen[cols]
        seen[cols] = False  # cycle guard; columns only shrink, so unused
        gc = induce_colouring(
            master, build_grid(master.grid.family, I, sorted(cols)))
        result = any(explore(cols - {cell[1]})
                     for cell in isolated_blank_cells(gc))
        seen[cols] = result
        return result

    return explore(frozenset(J))


# ---------------------------------------------------------------------------
# Random instance generators (seeded by the caller).
# ---------------------------------------------------------------------------

def random_colouring(d: int, e: int, n_colours: int,
                     rng: random.Random) -> PartialColouring:
    names = [f"c{k}" for k in range(1, n_colours + 1)]
    colour_of = {}
    for i in range(1, d + 1):
        for j in range(1, e + 1):
            choice = rng.randrange(n_colours + 1)
            if choice:
                colour_of[(i, j)] = names[choice - 1]
    return PartialColouring(d, e, colour_of)


def random_symmetric_colouring(d: int, n_colours: int,
                               rng: random.Random) -> PartialColouring:
    names = [f"c{k}" for k in range(1, n_colours + 1)]
    colour_of = {}
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            choice = rng.randrange(n_colours + 1)
            if choice:
                colour_of[(i, j)] = names[choice - 1]
                colour_of[(j, i)] = names[choice - 1]
    return PartialColouring(d, d, colour_of)


def random_rep(max_shape: int, max_gens: int, rng: random.Random):
    from gridask.modrep import ModuleRep
    dI = rng.randrange(1, max_shape + 1)
    dJ = rng.randrange(1, max_shape + 1)
    k = rng.randrange(1, max_gens + 1)
    gens = tuple(
        tuple(tuple(rng.randrange(-3, 4) for _ in range(dJ)) for _ in range(dI))
        for _ in range(k))
    return ModuleRep(tuple(f"g{t}" for t in range(k)),
                     tuple(range(1, dI + 1)), tuple(range(1, dJ + 1)), gens)
