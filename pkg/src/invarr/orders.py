"""Weak and Bruhat order on the symmetric group.

Left weak order is containment of inversion sets: u <= w exactly when
I(u) is a subset of I(w).  Intervals [id, w] are computed by breadth-first
search upward from the identity, multiplying on the left by adjacent
transpositions and keying visited states by inversion mask, so each state
is O(n) work.  Bruhat order uses the sorted-prefix dominance criterion;
a slow chain-closure oracle implements the definition directly
(downward transposition steps, each strictly dropping the inversion
count) for cross-validation.

>>> w = Permutation((2, 5, 1, 3, 4))
>>> weak_interval(w).size
7
>>> print(weak_interval(w).poincare)
1 + q + 2q^2 + 2q^3 + q^4
>>> bruhat_interval(Permutation((3, 1, 2))).size
4
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .perm import (
    PATTERN_231,
    Permutation,
    Word,
    _pair_tables,
    inversion_mask,
    inversion_set,
    iter_words,
    lehmer_code,
)
from .qpoly import QPolynomial

# Weak intervals grow with wk(w), up to n! states; the hard cap only
# rejects sizes where even the identity's tables would be unreasonable.
MAX_WEAK_N = 12
MAX_BRUHAT_N = 8
MAX_FILTER_ORACLE_N = 8
MAX_CHAIN_ORACLE_N = 6


@dataclass(frozen=True)
class IntervalSummary:
    """Size, rank generating function, and top rank of an interval [id, w].

    ``poincare`` counts elements by inversion number, so
    ``poincare(1) == size`` and ``degree == max_length``.  ``elements``
    is filled (sorted lexicographically) only when requested.
    """

    size: int
    poincare: QPolynomial
    max_length: int
    elements: tuple[Permutation, ...] | None = None


def _require_same_n(u: Permutation, w: Permutation) -> None:
    if u.n != w.n:
        raise ValueError(f"mixed sizes: n={u.n} vs n={w.n}")


def weak_leq(u: Permutation, w: Permutation) -> bool:
    """Left weak order: I(u) contained in I(w).

    >>> weak_leq(Permutation((1, 3, 2)), Permutation((2, 3, 1)))
    True
    >>> weak_leq(Permutation((2, 1, 3, 4, 5)), Permutation((2, 5, 1, 3, 4)))
    False
    """
    _require_same_n(u, w)
    return inversion_set(u).issubset(inversion_set(w))


def weak_interval(w: Permutation, with_elements: bool = False) -> IntervalSummary:
    """The interval [id, w] in left weak order, graded by inversion count.

    BFS from the identity: multiplying u on the left by the adjacent
    transposition s_v swaps the values v and v + 1; when v sits at
    position p and v + 1 at position q with p < q, the step adds exactly
    the inversion (p, q), which must lie in I(w).  States are keyed by
    inversion mask.

    >>> weak_interval(Permutation.longest(3), with_elements=True).elements[0].word
    (1, 2, 3)
    >>> weak_interval(Permutation((2, 5, 1, 3, 4))).size
    7
    """
    n = w.n
    if n > MAX_WEAK_N:
        raise ValueError(f"weak_interval supports n <= {MAX_WEAK_N}, got n={n}")
    index, _ = _pair_tables(n)
    target = inversion_mask(w.word)

    id_word = tuple(range(1, n + 1))
    # position_of[v - 1] is the 1-based position of value v
    frontier: list[tuple[Word, Word, int]] = [(id_word, id_word, 0)]
    visited = {0}
    level_sizes: list[int] = []
    words: list[Word] = []
    while frontier:
        level_sizes.append(len(frontier))
        if with_elements:
            words.extend(entry[0] for entry in frontier)
        nxt: list[tuple[Word, Word, int]] = []
        for word, position_of, mask in frontier:
            for v in range(1, n):
                p = position_of[v - 1]
                q = position_of[v]
                if p > q:
                    continue  # s_v would remove an inversion
                slot = index[(p, q)]
                if not target >> slot & 1:
                    continue
                child_mask = mask | 1 << slot
                if child_mask in visited:
                    continue
                visited.add(child_mask)
                child_word = list(word)
                child_word[p - 1], child_word[q - 1] = v + 1, v
                child_pos = list(position_of)
                child_pos[v - 1], child_pos[v] = q, p
                nxt.append((tuple(child_word), tuple(child_pos), child_mask))
        frontier = nxt
    elements = None
    if with_elements:
        elements = tuple(Permutation(word) for word in sorted(words))
    return IntervalSummary(
        size=len(visited),
        poincare=QPolynomial(tuple(level_sizes)),
        max_length=target.bit_count(),
        elements=elements,
    )


def weak_interval_by_filter(w: Permutation, with_elements: bool = False) -> IntervalSummary:
    """Oracle for weak_interval: filter all of S_n by inversion-set containment."""
    n = w.n
    if n > MAX_FILTER_ORACLE_N:
        raise ValueError(
            f"filter oracle supports n <= {MAX_FILTER_ORACLE_N}, got n={n}"
        )
    target = inversion_mask(w.word)
    by_rank: dict[int, int] = {}
    kept: list[Word] = []
    for word in iter_words(n):
        mask = inversion_mask(word)
        if mask & ~target == 0:
            by_rank[mask.bit_count()] = by_rank.get(mask.bit_count(), 0) + 1
            if with_elements:
                kept.append(word)
    top = max(by_rank)
    coeffs = tuple(by_rank.get(d, 0) for d in range(top + 1))
    elements = tuple(Permutation(word) for word in kept) if with_elements else None
    return IntervalSummary(
        size=sum(by_rank.values()),
        poincare=QPolynomial(coeffs),
        max_length=target.bit_count(),
        elements=elements,
    )


def _bruhat_leq_words(u: Word, w: Word) -> bool:
    """Sorted-prefix dominance: every descending k-prefix of u is
    entrywise <= that of w; equivalently compare ascending sorted prefixes."""
    n = len(u)
    au: list[int] = []
    aw: list[int] = []
    for k in range(n - 1):
        bisect.insort(au, u[k])
        bisect.insort(aw, w[k])
        for a, b in zip(au, aw):
            if a > b:
                return False
    return True


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Bruhat order via the prefix dominance criterion.

    >>> bruhat_leq(Permutation((2, 1, 3, 4, 5)), Permutation((2, 5, 1, 3, 4)))
    True
    >>> bruhat_leq(Permutation((3, 2, 1)), Permutation((2, 3, 1)))
    False
    """
    _require_same_n(u, w)
    return _bruhat_leq_words(u.word, w.word)


def bruhat_interval(w: Permutation, with_elements: bool = False) -> IntervalSummary:
    """The interval [id, w] in Bruhat order, by filtering S_n with dominance.

    >>> summary = bruhat_interval(Permutation((3, 1, 2)), with_elements=True)
    >>> summary.size
    4
    >>> [str(u) for u in summary.elements]
    ['123', '132', '213', '312']
    """
    n = w.n
    if n > MAX_BRUHAT_N:
        raise ValueError(f"bruhat_interval supports n <= {MAX_BRUHAT_N}, got n={n}")
    target = w.word
    by_rank: dict[int, int] = {}
    kept: list[Word] = []
    for word in iter_words(n):
        if _bruhat_leq_words(word, target):
            d = inversion_mask(word).bit_count()
            by_rank[d] = by_rank.get(d, 0) + 1
            if with_elements:
                kept.append(word)
    top = max(by_rank)
    coeffs = tuple(by_rank.get(d, 0) for d in range(top + 1))
    elements = tuple(Permutation(word) for word in kept) if with_elements else None
    return IntervalSummary(
        size=sum(by_rank.values()),
        poincare=QPolynomial(coeffs),
        max_length=inversion_mask(target).bit_count(),
        elements=elements,
    )


def bruhat_interval_by_chains(w: Permutation, with_elements: bool = False) -> IntervalSummary:
    """Definitional oracle for bruhat_interval.

    u <= w exactly when some chain of transpositions climbs from u to w
    with the inversion count strictly increasing at each step; reversed,
    [id, w] is the closure of {w} under swapping any inverted pair of
    positions (each such swap strictly lowers the inversion count).
    """
    n = w.n
    if n > MAX_CHAIN_ORACLE_N:
        raise ValueError(
            f"chain-closure oracle supports n <= {MAX_CHAIN_ORACLE_N}, got n={n}"
        )
    visited: set[Word] = {w.word}
    frontier: list[Word] = [w.word]
    while frontier:
        nxt: list[Word] = []
        for word in frontier:
            for i in range(n - 1):
                for j in range(i + 1, n):
                    if word[i] > word[j]:
                        child = list(word)
                        child[i], child[j] = child[j], child[i]
                        key = tuple(child)
                        if key not in visited:
                            visited.add(key)
                            nxt.append(key)
        frontier = nxt
    by_rank: dict[int, int] = {}
    for word in visited:
        d = inversion_mask(word).bit_count()
        by_rank[d] = by_rank.get(d, 0) + 1
    top = max(by_rank)
    coeffs = tuple(by_rank.get(d, 0) for d in range(top + 1))
    elements = tuple(Permutation(word) for word in sorted(visited)) if with_elements else None
    return IntervalSummary(
        size=len(visited),
        poincare=QPolynomial(coeffs),
        max_length=inversion_mask(w.word).bit_count(),
        elements=elements,
    )


def product_q_formula(w: Permutation) -> QPolynomial:
    """The product of q-integers [c_i(w) + 1] over the Lehmer code.

    Its value at q = 1 is code_product(w); it equals the weak-order
    Poincare polynomial of [id, w] exactly when w avoids 231.

    >>> print(product_q_formula(Permutation((2, 5, 1, 3, 4))))
    1 + 2q + 2q^2 + 2q^3 + q^4
    """
    out = QPolynomial.one()
    for c in lehmer_code(w):
        out = out * QPolynomial.q_integer(c + 1)
    return out


def code_monotone_check(u: Permutation, w: Permutation) -> bool:
    """Whether the Lehmer code of u is entrywise <= that of w.

    Implied by weak_leq(u, w); the converse fails.

    >>> code_monotone_check(Permutation((2, 1, 3, 4, 5)), Permutation((2, 5, 1, 3, 4)))
    True
    """
    _require_same_n(u, w)
    return all(a <= b for a, b in zip(lehmer_code(u), lehmer_code(w)))


def witness_231_reduction(
    w: Permutation,
) -> tuple[tuple[int, int, int], Permutation] | None:
    """Lex-smallest adjacent 231 witness and the reduced word it yields.

    Returns ``((i, j, j + 1), w')`` for the lexicographically smallest
    positions i < j with w_{j+1} < w_i < w_j, or None when w avoids 231.
    The reduced word keeps w_1 .. w_{j-1}, promotes w_{j+1} to position
    j, and rearranges the remaining values {w_j, w_{j+2}, ..., w_n} in
    the relative order of (w_{j+1}, w_{j+2}, ..., w_n).  The reduction
    strictly decreases the j-th Lehmer code entry and leaves the rest
    unchanged, so the result sits strictly below w in the code order
    while never lying below it in weak order.

    >>> triple, reduced = witness_231_reduction(Permutation((4, 1, 3, 8, 2, 6, 5, 7)))
    >>> triple
    (1, 4, 5)
    >>> str(reduced)
    '41325768'
    >>> witness_231_reduction(Permutation((3, 1, 2))) is None
    True
    """
    word = w.word
    n = w.n
    witness = None
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            if word[j + 1] < word[i] < word[j]:
                witness = (i, j)
                break
        if witness:
            break
    if witness is None:
        return None
    i, j = witness
    # values past position j, with w_j swapped in for the promoted w_{j+1}
    tail_pattern = (word[j + 1],) + word[j + 2 :]
    tail_values = sorted((word[j],) + word[j + 2 :])
    ranks = sorted(range(len(tail_pattern)), key=tail_pattern.__getitem__)
    rearranged = [0] * len(tail_pattern)
    for rank, pos in enumerate(ranks):
        rearranged[pos] = tail_values[rank]
    reduced = word[:j] + (word[j + 1],) + tuple(rearranged)
    return (i + 1, j + 1, j + 2), Permutation(reduced)
