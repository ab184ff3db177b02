"""South-west diagrams and non-attacking rook placements.

The south-west diagram of w is O_w = {(i, w_j) : i < j, w_i < w_j},
drawn in matrix coordinates (row i from the top, column v from the
left).  Row i of O_w holds a_i(w) = n - i - c_i(w) cells, where c is the
Lehmer code.  The rook count of w is the number of ways to place n
non-attacking rooks on the complement of O_w inside the n x n board; it
is computed as the permanent of the complement's 0/1 matrix via the
Ryser inclusion-exclusion formula, with a backtracking oracle for
cross-checks.

>>> w = Permutation((2, 5, 1, 3, 4))
>>> sorted(southwest_diagram(w).cells)
[(1, 3), (1, 4), (1, 5), (3, 3), (3, 4), (4, 4)]
>>> southwest_diagram(w).row_counts()
(3, 0, 2, 1, 0)
>>> rook_count(w)
16
>>> complement_row_freedom(w)
(2, 5, 3, 4, 5)
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation, lehmer_code
from .qpoly import checked_int64

MAX_PERMANENT_N = 12


@dataclass(frozen=True)
class Board:
    """A set of cells (row, column) inside the n x n grid, 1-based."""

    n: int
    cells: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for r, c in self.cells:
            if not (1 <= r <= self.n and 1 <= c <= self.n):
                raise ValueError(f"cell ({r}, {c}) outside the {self.n} x {self.n} board")

    def row_counts(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for r, _ in self.cells:
            counts[r - 1] += 1
        return tuple(counts)

    def row_masks(self) -> tuple[int, ...]:
        """Column bit masks per row; bit c - 1 set when (row, c) is on the board."""
        masks = [0] * self.n
        for r, c in self.cells:
            masks[r - 1] |= 1 << (c - 1)
        return tuple(masks)

    def complement(self) -> "Board":
        full = frozenset(
            (r, c) for r in range(1, self.n + 1) for c in range(1, self.n + 1)
        )
        return Board(self.n, full - self.cells)


def southwest_diagram(w: Permutation) -> Board:
    """O_w = {(i, w_j) : i < j, w_i < w_j}.

    >>> sorted(southwest_diagram(Permutation((3, 1, 2))).cells)
    [(2, 2)]
    >>> southwest_diagram(Permutation.longest(4)).cells
    frozenset()
    """
    word = w.word
    n = w.n
    cells = set()
    for i in range(n):
        for j in range(i + 1, n):
            if word[i] < word[j]:
                cells.add((i + 1, word[j]))
    return Board(n, frozenset(cells))


def _permanent_of_row_masks(masks: tuple[int, ...], n: int) -> int:
    """Ryser inclusion-exclusion over column subsets S:
    perm = sum over S of (-1)^(n - |S|) * prod_i popcount(row_i & S)."""
    total = 0
    for subset in range(1 << n):
        prod = 1
        for mask in masks:
            prod *= (mask & subset).bit_count()
            if prod == 0:
                break
        if prod:
            total += prod if (n - subset.bit_count()) % 2 == 0 else -prod
    return checked_int64(total)


def count_rook_placements(board: Board) -> int:
    """Placements of n non-attacking rooks on the board's cells.

    >>> full = Board(3, frozenset((r, c) for r in (1, 2, 3) for c in (1, 2, 3)))
    >>> count_rook_placements(full)
    6
    >>> count_rook_placements(Board(2, frozenset({(1, 1), (2, 2)})))
    1
    """
    if board.n > MAX_PERMANENT_N:
        raise ValueError(
            f"rook counting supports n <= {MAX_PERMANENT_N}, got n={board.n}"
        )
    return _permanent_of_row_masks(board.row_masks(), board.n)


def count_rook_placements_by_backtracking(board: Board) -> int:
    """Oracle for count_rook_placements: place rooks row by row."""
    n = board.n
    masks = board.row_masks()
    full = (1 << n) - 1

    def place(row: int, free: int) -> int:
        if row == n:
            return 1
        total = 0
        available = masks[row] & free
        while available:
            bit = available & -available
            available ^= bit
            total += place(row + 1, free ^ bit)
        return total

    return place(0, full)


def rook_count(w: Permutation) -> int:
    """Rook placements on the complement of the south-west diagram.

    Equals both the region count of w's inversion arrangement and the
    number of acyclic orientations of its inversion graph.

    >>> rook_count(Permutation((3, 1, 2)))
    4
    >>> rook_count(Permutation.identity(4))
    1
    """
    if w.n > MAX_PERMANENT_N:
        raise ValueError(f"rook_count supports n <= {MAX_PERMANENT_N}, got n={w.n}")
    full = (1 << w.n) - 1
    diagram = southwest_diagram(w).row_masks()
    complement_rows = tuple(full ^ mask for mask in diagram)
    return _permanent_of_row_masks(complement_rows, w.n)


def is_right_justified_ferrers(board: Board) -> bool:
    """Whether each row is a right-justified run and row lengths weakly decrease.

    True for the south-west diagram of every 312-avoiding permutation.

    >>> is_right_justified_ferrers(southwest_diagram(Permutation((2, 3, 1))))
    True
    >>> is_right_justified_ferrers(southwest_diagram(Permutation((3, 1, 2))))
    False
    """
    n = board.n
    masks = board.row_masks()
    counts = board.row_counts()
    for a, b in zip(counts, counts[1:]):
        if a < b:
            return False
    for count, mask in zip(counts, masks):
        if mask != ((1 << count) - 1) << (n - count):
            return False
    return True


def complement_row_freedom(w: Permutation) -> tuple[int, ...]:
    """Free columns per row of the complement board: n - a_i(w) = c_i(w) + i.

    >>> complement_row_freedom(Permutation((2, 5, 1, 3, 4)))
    (2, 5, 3, 4, 5)
    >>> complement_row_freedom(Permutation.identity(3))
    (1, 2, 3)
    """
    n = w.n
    code = lehmer_code(w)
    return tuple(code[i] + i + 1 for i in range(n))
