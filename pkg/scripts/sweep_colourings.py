#!/usr/bin/env python3
"""Sweep every canonical partial colouring of a small grid and report how
many are admissible, cross-checking the closure test against the
column-deletion game.

Usage: python3 scripts/sweep_colourings.py [ROWS] [COLS] [MAX_COLOURS]
"""
import sys
import time

from gridask.boardgame import is_admissible_game, master_rho
from gridask.colouring import PartialColouring, is_admissible_rect


def canonical_colourings(d, e, max_colours):
    cells = [(i, j) for i in range(1, d + 1) for j in range(1, e + 1)]

    def rec(idx, used, assign):
        if idx == len(cells):
            yield dict(assign)
            return
        yield from rec(idx + 1, used, assign)
        for c in range(min(used + 1, max_colours)):
            assign[cells[idx]] = f"c{c + 1}"
            yield from rec(idx + 1, max(used, c + 1), assign)
            del assign[cells[idx]]

    yield from rec(0, 0, {})


def main() -> None:
    d = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    e = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    max_colours = int(sys.argv[3]) if len(sys.argv) > 3 else 3
    total = admissible = 0
    start = time.time()
    for colour_of in canonical_colourings(d, e, max_colours):
        beta = PartialColouring(d, e, colour_of)
        rect = is_admissible_rect(beta).admissible
        game = is_admissible_game(master_rho(beta), 0).admissible
        if rect != game:
            raise SystemExit(f"checker disagreement on {colour_of}")
        total += 1
        admissible += rect
    elapsed = time.time() - start
    print(f"{d}x{e} grids, <= {max_colours} colours (canonical): {total}")
    print(f"admissible: {admissible} ({admissible / total:.1%})")
    print(f"closure test and game agreed on every instance [{elapsed:.1f}s]")


if __name__ == "__main__":
    main()
