"""Unit tests for diagrams, rook counts, and board shapes."""

from math import factorial

import pytest

from invarr.perm import (
    PATTERN_312,
    Permutation,
    contains_pattern,
    iter_words,
    lehmer_code,
)
from invarr.rook import (
    Board,
    complement_row_freedom,
    count_rook_placements,
    count_rook_placements_by_backtracking,
    is_right_justified_ferrers,
    rook_count,
    southwest_diagram,
)

W25134 = Permutation((2, 5, 1, 3, 4))


class TestBoard:
    def test_cell_validation(self):
        with pytest.raises(ValueError, match="outside"):
            Board(3, frozenset({(0, 1)}))
        with pytest.raises(ValueError, match="outside"):
            Board(3, frozenset({(1, 4)}))

    def test_row_views(self):
        board = Board(3, frozenset({(1, 2), (1, 3), (3, 1)}))
        assert board.row_counts() == (2, 0, 1)
        assert board.row_masks() == (0b110, 0, 0b001)

    def test_complement(self):
        board = Board(2, frozenset({(1, 1)}))
        assert board.complement().cells == frozenset({(1, 2), (2, 1), (2, 2)})
        assert board.complement().complement() == board


class TestSouthwestDiagram:
    def test_examples(self):
        assert southwest_diagram(Permutation.longest(4)).cells == frozenset()
        assert sorted(southwest_diagram(Permutation.identity(3)).cells) == [
            (1, 2),
            (1, 3),
            (2, 3),
        ]
        assert sorted(southwest_diagram(W25134).cells) == [
            (1, 3),
            (1, 4),
            (1, 5),
            (3, 3),
            (3, 4),
            (4, 4),
        ]

    def test_row_count_identity(self):
        """Row i of the diagram holds n - i - c_i cells, for every word."""
        for n in range(1, 8):
            for word in iter_words(n):
                w = Permutation(word)
                counts = southwest_diagram(w).row_counts()
                code = lehmer_code(w)
                for i in range(n):
                    assert counts[i] == n - (i + 1) - code[i], (word, i)


class TestRookCount:
    def test_frozen_examples(self):
        assert rook_count(W25134) == 16
        assert rook_count(Permutation((3, 1, 2))) == 4
        assert rook_count(Permutation.identity(4)) == 1
        for n in range(2, 7):
            assert rook_count(Permutation.longest(n)) == factorial(n)

    def test_full_and_empty_boards(self):
        full = Board(4, frozenset((r, c) for r in range(1, 5) for c in range(1, 5)))
        assert count_rook_placements(full) == factorial(4)
        assert count_rook_placements(Board(4, frozenset())) == 0

    def test_permanent_matches_backtracking(self):
        for n in range(1, 6):
            for word in iter_words(n):
                board = southwest_diagram(Permutation(word)).complement()
                fast = count_rook_placements(board)
                slow = count_rook_placements_by_backtracking(board)
                assert fast == slow, word

    def test_caps(self):
        with pytest.raises(ValueError, match="n <= 12"):
            rook_count(Permutation.longest(13))
        big = Board(13, frozenset())
        with pytest.raises(ValueError, match="n <= 12"):
            count_rook_placements(big)


class TestShape:
    def test_examples(self):
        assert is_right_justified_ferrers(southwest_diagram(Permutation((2, 3, 1))))
        assert not is_right_justified_ferrers(southwest_diagram(Permutation((3, 1, 2))))
        assert is_right_justified_ferrers(Board(3, frozenset()))
        # right-justified rows of lengths (2, 1)
        assert is_right_justified_ferrers(Board(3, frozenset({(1, 2), (1, 3), (2, 3)})))
        # equal length but left-justified second row
        assert not is_right_justified_ferrers(
            Board(3, frozenset({(1, 2), (1, 3), (2, 1)}))
        )
        # increasing row lengths
        assert not is_right_justified_ferrers(
            Board(3, frozenset({(1, 3), (2, 2), (2, 3)}))
        )

    def test_avoiding_312_forces_ferrers_shape(self):
        for n in range(1, 8):
            for word in iter_words(n):
                w = Permutation(word)
                if not contains_pattern(w, PATTERN_312):
                    assert is_right_justified_ferrers(southwest_diagram(w)), word


class TestComplementFreedom:
    def test_examples(self):
        assert complement_row_freedom(Permutation.identity(3)) == (1, 2, 3)
        assert complement_row_freedom(W25134) == (2, 5, 3, 4, 5)
        assert complement_row_freedom(Permutation.longest(4)) == (4, 4, 4, 4)

    def test_equals_code_plus_row_index(self):
        for n in range(1, 7):
            for word in iter_words(n):
                w = Permutation(word)
                code = lehmer_code(w)
                freedom = complement_row_freedom(w)
                assert freedom == tuple(code[i] + i + 1 for i in range(n))
                counts = southwest_diagram(w).row_counts()
                assert freedom == tuple(n - counts[i] for i in range(n))
