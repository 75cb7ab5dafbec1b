"""
Plain-text diagrams for the CLI.

Numbers are right-aligned to the widest entry of the diagram and separated
by one space; lines carry no trailing spaces and the empty diagram is "".
Shifted rows are indented one cell per row so columns line up with D(λ).
"""

from __future__ import annotations

from barlens.abacus import abacus_from, cell_hook_lengths, validate_modulus
from barlens.bars import shifted_bar_table
from barlens.partitions import BarPartition, Partition, double

BEAD = "●"
GAP = "·"

_BOLD = "\x1b[1m"
_RESET = "\x1b[0m"


def _grid(rows: list[list[int]], indent: bool = False, bold: set[tuple[int, int]] | None = None) -> str:
    """rows[i][k] is drawn right-aligned; bold holds (i, k) positions to highlight."""
    if not rows or not any(rows):
        return ""
    width = max(len(str(v)) for row in rows for v in row)
    bold = bold or set()
    lines = []
    for i, row in enumerate(rows):
        cells = []
        for k, v in enumerate(row):
            cell = str(v).rjust(width)
            cells.append(f"{_BOLD}{cell}{_RESET}" if (i, k) in bold else cell)
        pad = " " * ((width + 1) * i) if indent else ""
        lines.append(pad + " ".join(cells))
    return "\n".join(lines)


def _hook_rows(p: Partition) -> list[list[int]]:
    by_cell = cell_hook_lengths(p)
    return [[by_cell[(r, c)] for c in range(1, a + 1)] for r, a in enumerate(p.parts, start=1)]


def young(p: Partition) -> str:
    return _grid(_hook_rows(p))


def doubled(lam: BarPartition, color: bool = False) -> str:
    dp = double(lam)
    # part hooks sit in column m + 1 of the first m rows
    bold = {(r, lam.m) for r in range(lam.m)} if color else None
    return _grid(_hook_rows(dp), bold=bold)


def shifted(lam: BarPartition, color: bool = False) -> str:
    table = shifted_bar_table(lam)
    bold = None
    if color:
        # row r (1-based) starts at column r + 1 of D(λ)
        bold = {(r - 1, lam.m - r) for r in range(1, lam.m + 1)}
    return _grid(table, indent=True, bold=bold)


def residues(p: Partition, d: int) -> str:
    validate_modulus(d)
    return _grid([[(c - r) % d for c in range(1, a + 1)] for r, a in enumerate(p.parts, start=1)])


def abacus(p: Partition, d: int) -> str:
    ab = abacus_from(p, d)
    lines = []
    for row in range(ab.depth):
        lines.append(" ".join(BEAD if row * d + i in ab.positions else GAP for i in range(d)))
    return "\n".join(lines)
