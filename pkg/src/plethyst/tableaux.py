"""Semistandard Young tableaux: enumeration, words, weights, Kostka numbers.

A tableau is a tuple of rows, each row a tuple of positive integers.  Rows
weakly increase left to right and columns strictly increase top to bottom.
Tableaux of equal shape are ordered by the lexicographic order on their
reading words (rows concatenated top to bottom); at fixed shape the word
determines the tableau, so this is a total order.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import ShapeMismatchError, SizeMismatchError
from .partitions import Partition, as_partition

Tableau = tuple[tuple[int, ...], ...]
Weight = tuple[int, ...]


def shape_of(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def word(t: Tableau) -> tuple[int, ...]:
    """Reading word: rows concatenated from the top row down."""
    return tuple(x for row in t for x in row)


def weight(t: Tableau) -> Weight:
    """Multiplicity vector of the entries, trailing zeros trimmed."""
    top = max((x for row in t for x in row), default=0)
    counts = [0] * top
    for row in t:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def is_semistandard(t: Tableau) -> bool:
    rows = tuple(tuple(r) for r in t)
    lengths = shape_of(rows)
    if any(a < b for a, b in zip(lengths, lengths[1:])) or (lengths and lengths[-1] == 0):
        return False
    for row in rows:
        if any(x < 1 for x in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def tableau_cmp(t: Tableau, u: Tableau) -> int:
    """Compare same-shape tableaux by their reading words; returns -1, 0 or 1."""
    if shape_of(t) != shape_of(u):
        raise ShapeMismatchError(
            f"cannot compare tableaux of shapes {shape_of(t)} and {shape_of(u)}"
        )
    wt, wu = word(t), word(u)
    return (wt > wu) - (wt < wu)


def format_tableau(t: Tableau) -> str:
    """Compact debug form: rows of digits joined by '/', e.g. '112/3'."""
    return "/".join("".join(str(x) for x in row) for row in t)


def enumerate_ssyt(shape: Iterable[int], max_entry: int) -> list[Tableau]:
    """All SSYT of the given shape with entries in 1..max_entry.

    Cells are filled row-major with ascending candidate values, so the result
    comes out sorted by ascending reading word.  An empty result is valid
    (``max_entry`` smaller than the number of rows).
    """
    lam = as_partition(shape)
    if max_entry < 0:
        raise ValueError(f"max_entry must be non-negative, got {max_entry}")
    if not lam:
        return [()]
    cells = [(i, j) for i, length in enumerate(lam) for j in range(length)]
    grid = [[0] * length for length in lam]
    out: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            grid[i][j] = v
            fill(pos + 1)

    fill(0)
    return out


def enumerate_ssyt_with_weight(shape: Iterable[int], w: Sequence[int]) -> list[Tableau]:
    """All SSYT of the given shape whose entry multiplicities equal ``w``.

    ``w`` may contain interior zeros; its total must equal the number of
    cells.  Results are sorted by ascending reading word.
    """
    lam = as_partition(shape)
    counts = list(w)
    while counts and counts[-1] == 0:
        counts.pop()
    if any(c < 0 for c in counts):
        raise ValueError(f"weight entries must be non-negative, got {tuple(w)}")
    if sum(counts) != sum(lam):
        raise SizeMismatchError(
            f"weight {tuple(w)} has total {sum(counts)}, shape {lam} has {sum(lam)} cells"
        )
    if not lam:
        return [()]
    cells = [(i, j) for i, length in enumerate(lam) for j in range(length)]
    grid = [[0] * length for length in lam]
    out: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, len(counts) + 1):
            if counts[v - 1] == 0:
                continue
            counts[v - 1] -= 1
            grid[i][j] = v
            fill(pos + 1)
            counts[v - 1] += 1

    fill(0)
    return out


def kostka(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Kostka number: count of SSYT of shape ``lam`` and weight ``mu``."""
    shape = as_partition(lam)
    wt = as_partition(mu)
    if sum(shape) != sum(wt):
        raise SizeMismatchError(
            f"Kostka number needs |lam| == |mu|, got {sum(shape)} and {sum(wt)}"
        )
    return len(enumerate_ssyt_with_weight(shape, wt))
