"""
Bruhat order, reduced words and Schubert-variety smoothness on permutations
of ``range(n)``.

A reduced word ``(a_1, ..., a_l)`` of ``w`` satisfies ``w = s_{a_1} ... s_{a_l}``
as a composition of maps, where ``s_i`` exchanges ``i`` and ``i+1`` (0-indexed).
Right multiplication by ``s_i`` swaps positions ``i`` and ``i+1`` of the
one-line notation, so the last letter of a reduced word is always a descent.

>>> w0 = WindowPermutation.reversal(3)
>>> reduced_words(w0)
[(0, 1, 0), (1, 0, 1)]
>>> reduced_words_count(WindowPermutation.reversal(4))
16
>>> saturated_bruhat_chains_count(w0)
4
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .perm_core import WindowPermutation

__all__ = [
    "SMOOTHNESS_PATTERNS", "ReducedWordCapExceeded",
    "window_rank", "rank_table", "bruhat_leq", "reduced_words",
    "reduced_words_count", "saturated_bruhat_chains_count", "contains_pattern",
    "pattern_occurrence", "is_smooth_schubert", "smoothness_witness",
    "tangent_dim", "singular_strata", "all_permutations",
]

DEFAULT_WORD_CAP = 12
DEFAULT_STRATA_CAP = 7

# 0-indexed one-line patterns; 1-indexed names are 3412 and 4231
SMOOTHNESS_PATTERNS = {
    "3412": WindowPermutation((2, 3, 0, 1)),
    "4231": WindowPermutation((3, 1, 2, 0)),
}


class ReducedWordCapExceeded(ValueError):
    pass


def all_permutations(n: int) -> list[WindowPermutation]:
    return [WindowPermutation(p) for p in permutations(range(n))]


def window_rank(sigma: WindowPermutation, a: int, b: int) -> int:
    """``#{a' >= a : sigma(a') >= b}``."""
    return sum(1 for v in sigma.images[a:] if v >= b)


@lru_cache(maxsize=1 << 16)
def rank_table(sigma: WindowPermutation) -> tuple[tuple[int, ...], ...]:
    """``rank_table(sigma)[a][b] == window_rank(sigma, a, b)`` for ``0 <= a, b <= n``."""
    n = sigma.n
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for a in range(n - 1, -1, -1):
        v = sigma[a]
        for b in range(n + 1):
            table[a][b] = table[a + 1][b] + (1 if v >= b else 0)
    return tuple(tuple(row) for row in table)


def bruhat_leq(sigma: WindowPermutation, tau: WindowPermutation) -> bool:
    """``sigma <= tau`` iff the rank function of sigma dominates that of tau."""
    if sigma.n != tau.n:
        raise ValueError("permutations of different sizes are incomparable")
    rs, rt = rank_table(sigma), rank_table(tau)
    n = sigma.n
    return all(rs[a][b] >= rt[a][b] for a in range(n) for b in range(n))


def reduced_words(w: WindowPermutation, cap: int = DEFAULT_WORD_CAP) -> list[tuple[int, ...]]:
    """All reduced words of ``w`` in lexicographic order."""
    length = w.length()
    if length > cap:
        raise ReducedWordCapExceeded(f"length {length} exceeds the enumeration cap {cap}")
    return sorted(_words(w))


@lru_cache(maxsize=4096)
def _words(w: WindowPermutation) -> tuple[tuple[int, ...], ...]:
    descents = w.descents()
    if not descents:
        return ((),)
    return tuple(word + (i,) for i in descents for word in _words(w.swap(i)))


# lru_cache keeps its bookkeeping consistent under threads, and a race
# can only cause a duplicate computation of the same value
@lru_cache(maxsize=1 << 20)
def reduced_words_count(w: WindowPermutation) -> int:
    """Number of reduced words, by recursion over descents."""
    descents = w.descents()
    if not descents:
        return 1
    return sum(reduced_words_count(w.swap(i)) for i in descents)


def _lower_covers(w: WindowPermutation) -> list[WindowPermutation]:
    """Elements ``w * t`` with length one less: inversions (i, j) with no value between."""
    images = w.images
    covers = []
    for i, j in combinations(range(w.n), 2):
        hi, lo = images[i], images[j]
        if hi > lo and not any(lo < images[k] < hi for k in range(i + 1, j)):
            swapped = list(images)
            swapped[i], swapped[j] = lo, hi
            covers.append(WindowPermutation(tuple(swapped)))
    return covers


@lru_cache(maxsize=1 << 18)
def saturated_bruhat_chains_count(w: WindowPermutation) -> int:
    """Number of maximal chains from the identity to ``w`` in Bruhat order."""
    covers = _lower_covers(w)
    if not covers:
        return 1
    return sum(saturated_bruhat_chains_count(u) for u in covers)


def pattern_occurrence(w: WindowPermutation, p: WindowPermutation) -> tuple[int, ...] | None:
    """Positions of the first occurrence of pattern ``p`` in ``w``, or None."""
    k = p.n
    target = p.images
    n = w.n
    chosen: list[int] = []

    # extend position by position, pruning as soon as the relative order of
    # the chosen values disagrees with the pattern's prefix; the first full
    # match found is the lexicographically first occurrence
    def extend(start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        for i in range(start, n - (k - depth) + 1):
            v = w[i]
            if all((v > w[j]) == (target[depth] > target[t]) for t, j in enumerate(chosen)):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def contains_pattern(w: WindowPermutation, p: WindowPermutation) -> bool:
    return pattern_occurrence(w, p) is not None


def smoothness_witness(sigma: WindowPermutation) -> tuple[str, tuple[int, ...]] | None:
    """A (pattern name, positions) pair obstructing smoothness, if any."""
    for name, pattern in SMOOTHNESS_PATTERNS.items():
        positions = pattern_occurrence(sigma, pattern)
        if positions is not None:
            return name, positions
    return None


def is_smooth_schubert(sigma: WindowPermutation) -> bool:
    """Smoothness of the Schubert variety of ``sigma``: avoid 3412 and 4231."""
    return smoothness_witness(sigma) is None


def _transposed(w: WindowPermutation, i: int, j: int) -> WindowPermutation:
    images = list(w.images)
    images[i], images[j] = images[j], images[i]
    return WindowPermutation(tuple(images))


def tangent_dim(tau: WindowPermutation, sigma: WindowPermutation) -> int:
    """Number of transpositions ``t`` with ``tau * t <= sigma``."""
    if not bruhat_leq(tau, sigma):
        raise ValueError("tangent space requires tau <= sigma")
    return sum(1 for i, j in combinations(range(tau.n), 2)
               if bruhat_leq(_transposed(tau, i, j), sigma))


def singular_strata(sigma: WindowPermutation, cap: int = DEFAULT_STRATA_CAP) -> set[WindowPermutation]:
    """All ``tau <= sigma`` at which the Schubert variety of sigma is singular."""
    if sigma.n > cap:
        raise ValueError(f"n = {sigma.n} exceeds the singular-strata cap {cap}")
    length = sigma.length()
    below = _bruhat_interval(sigma)
    return {tau for tau in below if tangent_dim(tau, sigma) > length}


def _bruhat_interval(sigma: WindowPermutation) -> set[WindowPermutation]:
    """The lower interval ``[id, sigma]``, via lower covers."""
    seen = {sigma}
    stack = [sigma]
    while stack:
        for u in _lower_covers(stack.pop()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def clear_caches() -> None:
    for fn in (rank_table, _words, reduced_words_count, saturated_bruhat_chains_count):
        fn.cache_clear()
