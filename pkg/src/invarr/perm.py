"""Permutations of {1, ..., n} in one-line notation.

A permutation is the word (w_1, ..., w_n) of its values; positions and
values are 1-based at every public boundary.  This module owns the
vocabulary the rest of the library consumes: inversion sets realized as
bit masks over the C(n, 2) position pairs, Lehmer codes and their
products, pattern containment, and the transitivity test that
characterizes which pair sets are inversion sets.

The inversion set of w is I(w) = {(i, j) : i < j, w_i > w_j}, a set of
POSITION pairs.  Pair (i, j) with i < j is assigned the bit slot given
by its rank in lexicographic order of all such pairs, so masks of
different permutations of the same n are directly comparable.

>>> w = parse_permutation("25134")
>>> sorted(inversion_set(w).pairs())
[(1, 3), (2, 3), (2, 4), (2, 5)]
>>> lehmer_code(w)
(1, 3, 0, 0, 0)
>>> code_product(w)
8
>>> str(inverse(w))
'31452'
"""

from __future__ import annotations

import itertools
import re as _re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .qpoly import checked_int64

Word = tuple[int, ...]

# Largest n for the factorial-time helpers (full-group mask tables).
MAX_GROUP_N = 10
# code_product of the longest element is n!; 20! < 2^63 <= 21!.
MAX_CODE_PRODUCT_N = 20


@dataclass(frozen=True)
class Permutation:
    """One-line notation word, validated to be a bijection on 1..n."""

    word: Word

    def __post_init__(self) -> None:
        word = tuple(int(v) for v in self.word)
        n = len(word)
        if n == 0:
            raise ValueError("empty permutation")
        seen = 0
        for v in word:
            if not 1 <= v <= n:
                raise ValueError(
                    f"value {v} out of range 1..{n}: not a permutation of 1..{n}"
                )
            bit = 1 << v
            if seen & bit:
                raise ValueError(f"duplicate value {v}: not a permutation of 1..{n}")
            seen |= bit
        object.__setattr__(self, "word", word)

    @property
    def n(self) -> int:
        return len(self.word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The order-reversing word n, n-1, ..., 1."""
        return cls(tuple(range(n, 0, -1)))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return " ".join(str(v) for v in self.word)

    def __len__(self) -> int:
        return len(self.word)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation, compact ("25134") or separated ("2,5,1,3,4").

    Words with any comma or whitespace are split on runs of those
    separators; otherwise every character must be a single digit.  Words
    longer than 9 letters must use separators, since compact digits would
    be ambiguous.

    >>> parse_permutation("312").word
    (3, 1, 2)
    >>> parse_permutation("10 2 3 4 5 6 7 8 9 1").word
    (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
    >>> parse_permutation("2 5 1,3,4") == parse_permutation("25134")
    True
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation")
    if _re.search(r"[,\s]", stripped):
        tokens = [t for t in _re.split(r"[,\s]+", stripped) if t]
        values = []
        for tok in tokens:
            try:
                values.append(int(tok))
            except ValueError:
                raise ValueError(f"invalid token {tok!r} in permutation") from None
        return Permutation(tuple(values))
    if not stripped.isdigit():
        bad = next(ch for ch in stripped if not ch.isdigit())
        raise ValueError(f"invalid character {bad!r} in permutation")
    if len(stripped) > 9:
        raise ValueError(
            "compact digit form is ambiguous beyond 9 letters; separate values "
            "with spaces or commas"
        )
    return Permutation(tuple(int(ch) for ch in stripped))


@lru_cache(maxsize=None)
def _pair_tables(n: int) -> tuple[dict[tuple[int, int], int], tuple[tuple[int, int], ...]]:
    """Bit slots for pairs (i, j), 1 <= i < j <= n, in lexicographic order."""
    pairs = tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    index = {pair: slot for slot, pair in enumerate(pairs)}
    return index, pairs


def pair_slot(n: int, i: int, j: int) -> int:
    """Bit position of the pair (i, j) in an n-element inversion mask."""
    index, _ = _pair_tables(n)
    try:
        return index[(i, j)]
    except KeyError:
        raise ValueError(f"({i}, {j}) is not a pair with 1 <= i < j <= {n}") from None


@dataclass(frozen=True)
class InversionSet:
    """A set of position pairs (i, j), i < j, as a bit mask over C(n, 2) slots."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        slots = self.n * (self.n - 1) // 2
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.mask < 1 << slots:
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        if not 1 <= i < j <= self.n:
            return False
        return bool(self.mask >> pair_slot(self.n, i, j) & 1)

    def pairs(self) -> frozenset[tuple[int, int]]:
        _, pairs = _pair_tables(self.n)
        return frozenset(pairs[s] for s in range(len(pairs)) if self.mask >> s & 1)

    def issubset(self, other: "InversionSet") -> bool:
        if self.n != other.n:
            raise ValueError(f"mixed sizes: n={self.n} vs n={other.n}")
        return self.mask & ~other.mask == 0


def inversion_mask(word: Word) -> int:
    """Bit mask of I(w) for a bare word; slot order matches pair_slot."""
    n = len(word)
    mask = 0
    slot = 0
    for i in range(n):
        wi = word[i]
        for j in range(i + 1, n):
            if wi > word[j]:
                mask |= 1 << slot
            slot += 1
    return mask


def inversion_set(w: Permutation) -> InversionSet:
    """I(w) = {(i, j) : i < j, w_i > w_j} as position pairs.

    >>> sorted(inversion_set(Permutation((3, 1, 2))).pairs())
    [(1, 2), (1, 3)]
    >>> len(inversion_set(Permutation.longest(4)))
    6
    """
    return InversionSet(w.n, inversion_mask(w.word))


def inversion_count(w: Permutation) -> int:
    return inversion_mask(w.word).bit_count()


def is_inversion_set(s: InversionSet) -> bool:
    """Whether s is the inversion set of some permutation.

    A pair set is an inversion set exactly when, for every i < j < k:
    (i, j) and (j, k) present forces (i, k) present, and (i, k) present
    forces at least one of (i, j), (j, k) present.

    >>> is_inversion_set(InversionSet(3, 0b101))
    False
    >>> all(is_inversion_set(inversion_set(Permutation(w)))
    ...     for w in itertools.permutations(range(1, 5)))
    True
    """
    n, mask = s.n, s.mask
    index, _ = _pair_tables(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ij = mask >> index[(i, j)] & 1
            for k in range(j + 1, n + 1):
                jk = mask >> index[(j, k)] & 1
                ik = mask >> index[(i, k)] & 1
                if ij and jk and not ik:
                    return False
                if ik and not (ij or jk):
                    return False
    return True


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """c_i(w) = #{j > i : w_j < w_i}, the inversions opened at position i.

    >>> lehmer_code(Permutation((4, 1, 3, 8, 2, 6, 5, 7)))
    (3, 0, 1, 4, 0, 1, 0, 0)
    >>> lehmer_code(Permutation.identity(5))
    (0, 0, 0, 0, 0)
    """
    word = w.word
    n = len(word)
    return tuple(
        sum(1 for j in range(i + 1, n) if word[j] < word[i]) for i in range(n)
    )


def code_product(w: Permutation) -> int:
    """The product of (c_i(w) + 1) over all positions.

    Equals the number of elements below w in left weak order.  Capped at
    n <= 20 so the result always fits in a signed 64-bit word.

    >>> code_product(Permutation((2, 5, 1, 3, 4)))
    8
    >>> code_product(Permutation.longest(4))
    24
    """
    if w.n > MAX_CODE_PRODUCT_N:
        raise ValueError(f"code_product supports n <= {MAX_CODE_PRODUCT_N}, got n={w.n}")
    out = 1
    for c in lehmer_code(w):
        out = checked_int64(out * (c + 1))
    return out


def inverse(w: Permutation) -> Permutation:
    """w^-1; position and value swap roles.

    >>> str(inverse(Permutation((2, 5, 1, 3, 4))))
    '31452'
    >>> inverse(inverse(Permutation((4, 1, 3, 8, 2, 6, 5, 7)))).word
    (4, 1, 3, 8, 2, 6, 5, 7)
    """
    out = [0] * w.n
    for pos, val in enumerate(w.word, start=1):
        out[val - 1] = pos
    return Permutation(tuple(out))


def reverse_complement(w: Permutation) -> Permutation:
    """Reverse the word and complement the values: v -> n + 1 - v.

    Containment of a pattern p in w is equivalent to containment of the
    reverse complement of p in the reverse complement of w.

    >>> str(reverse_complement(Permutation((2, 3, 1))))
    '312'
    >>> str(reverse_complement(Permutation((2, 5, 1, 3, 4))))
    '23514'
    """
    n = w.n
    return Permutation(tuple(n + 1 - v for v in reversed(w.word)))


def contains_pattern(w: Permutation, pattern: Permutation) -> bool:
    """Whether some subsequence of w is order-isomorphic to ``pattern``.

    Backtracking over pattern positions left to right, pruning any
    partial choice whose pairwise comparisons already disagree with the
    pattern.

    >>> contains_pattern(Permutation((2, 5, 1, 3, 4)), Permutation((2, 3, 1)))
    True
    >>> contains_pattern(Permutation((1, 2, 3, 4)), Permutation((2, 1)))
    False
    """
    k, n = pattern.n, w.n
    if k > n:
        return False
    pword, wword = pattern.word, w.word
    chosen: list[int] = []

    def extend(t: int, start: int) -> bool:
        if t == k:
            return True
        for pos in range(start, n - (k - t) + 1):
            v = wword[pos]
            if all((v > c) == (pword[t] > pword[s]) for s, c in enumerate(chosen)):
                chosen.append(v)
                if extend(t + 1, pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def avoids_all(w: Permutation, patterns: tuple[Permutation, ...]) -> bool:
    """True when w contains none of ``patterns``."""
    return not any(contains_pattern(w, p) for p in patterns)


# Pattern bundles for the equality characterizations: weak-order interval
# size vs code product (231), code product vs rook count via the diagram
# shape (312), region count vs Bruhat interval size (the four patterns),
# and the region distance enumerator matching the Bruhat Poincare
# polynomial (3412 and 4231).
PATTERN_231 = Permutation((2, 3, 1))
PATTERN_312 = Permutation((3, 1, 2))
WEAK_EQUALITY_PATTERNS = (PATTERN_231, PATTERN_312)
REGION_BRUHAT_EQUALITY_PATTERNS = (
    Permutation((4, 2, 3, 1)),
    Permutation((3, 5, 1, 4, 2)),
    Permutation((4, 2, 5, 1, 3)),
    Permutation((3, 5, 1, 6, 2, 4)),
)
POINCARE_MATCH_PATTERNS = (Permutation((3, 4, 1, 2)), Permutation((4, 2, 3, 1)))


def iter_words(n: int):
    """All words of S_n in lexicographic order, as bare tuples."""
    return itertools.permutations(range(1, n + 1))


def unrank_lex(n: int, rank: int) -> Permutation:
    """The permutation at 0-based ``rank`` in lexicographic order.

    >>> unrank_lex(3, 0).word
    (1, 2, 3)
    >>> unrank_lex(3, 5).word
    (3, 2, 1)
    >>> all(unrank_lex(4, r).word == w
    ...     for r, w in enumerate(iter_words(4)))
    True
    """
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    available = list(range(1, n + 1))
    out = []
    block = factorial(n)
    for remaining in range(n, 0, -1):
        block //= remaining
        pick, rank = divmod(rank, block)
        out.append(available.pop(pick))
    return Permutation(tuple(out))


@lru_cache(maxsize=4)
def all_inversion_masks(n: int) -> tuple[int, ...]:
    """Inversion masks of every word of S_n, in lexicographic word order.

    Cached; the factorial-size table backs region enumeration and the
    exhaustive sweeps.
    """
    if n > MAX_GROUP_N:
        raise ValueError(f"full-group tables support n <= {MAX_GROUP_N}, got n={n}")
    return tuple(inversion_mask(word) for word in iter_words(n))
