"""
Dot arrays, their rank functions and essential sets, the expected dimension
``rho_g(d, Pi)``, and the bijection with (d,g)-confined permutations.

A dot ``(a, b)`` sits in row ``a`` and column ``b``; both count from 0 at the
upper-left corner.

>>> pi = to_confined(DotArray.parse("0:1,2:0,3:3"), d=12, g=12)
>>> [pi(n) for n in range(-4, 5)]
[4, 2, -1, -2, 1, -3, 0, 3, -4]
>>> rho(12, 12, DotArray.parse("0:1,2:0,3:3"))
1
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .perm_core import (
    WindowPermutation, ZPermutation, essential_set_z, inverse, rank_fn,
)

__all__ = [
    "DotArray", "EssVersion",
    "rank", "row_col_sequences", "essential_set", "rho", "to_confined",
    "from_confined", "essential_set_perm", "essential_set_perm_by_rank",
    "ess_versions_check", "bijective_square",
]


@dataclass(frozen=True)
class DotArray:
    """Finite set of grid points in N x N, no two sharing a row or a column."""
    dots: tuple[tuple[int, int], ...]

    def __post_init__(self):
        dots = tuple(sorted((int(a), int(b)) for a, b in self.dots))
        rows = [a for a, _ in dots]
        cols = [b for _, b in dots]
        if any(a < 0 or b < 0 for a, b in dots):
            raise ValueError("dots must have nonnegative coordinates")
        if len(set(rows)) != len(rows):
            raise ValueError("two dots share a row")
        if len(set(cols)) != len(cols):
            raise ValueError("two dots share a column")
        object.__setattr__(self, "dots", dots)

    @classmethod
    def of(cls, dots: Iterable[tuple[int, int]]) -> DotArray:
        return cls(tuple(dots))

    @classmethod
    def antidiagonal(cls, r: int) -> DotArray:
        """The generic array ``{(0, r), (1, r-1), ..., (r, 0)}``."""
        return cls(tuple((i, r - i) for i in range(r + 1)))

    @classmethod
    def parse(cls, text: str) -> DotArray:
        """Parse ``"a:b,a:b,..."``; the empty string is the empty array."""
        text = text.strip()
        if not text:
            return cls(())
        dots = []
        for item in text.split(","):
            a, sep, b = item.strip().partition(":")
            if not sep:
                raise ValueError(f"malformed dot {item!r}; expected 'a:b'")
            dots.append((int(a), int(b)))
        return cls(tuple(dots))

    @classmethod
    def from_json(cls, data) -> DotArray:
        if isinstance(data, str):
            data = json.loads(data)
        dots = []
        for pair in data:
            if len(pair) != 2:
                raise ValueError(f"malformed dot {pair!r}")
            dots.append((int(pair[0]), int(pair[1])))
        return cls(tuple(dots))

    def to_json(self) -> list[list[int]]:
        return [[a, b] for a, b in self.dots]

    def __str__(self) -> str:
        return ",".join(f"{a}:{b}" for a, b in self.dots)

    def __len__(self) -> int:
        return len(self.dots)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.dots)

    @property
    def r(self) -> int:
        return len(self.dots) - 1


def rank(pi: DotArray, a: int, b: int) -> int:
    """Number of dots weakly southeast of ``(a, b)``; -1 is read as 0."""
    a, b = max(a, 0), max(b, 0)
    return sum(1 for x, y in pi if x >= a and y >= b)


def row_col_sequences(pi: DotArray) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(sorted(a for a, _ in pi)), tuple(sorted(b for _, b in pi))


def essential_set(pi: DotArray) -> set[tuple[int, int]]:
    """Boxes where the rank function has a southeast corner."""
    if not pi.dots:
        return set()
    rows, cols = row_col_sequences(pi)
    ess = set()
    # rank(a, b) > rank(a+1, b) >= 0 forces a <= max row, b <= max column
    for a in range(rows[-1] + 1):
        for b in range(cols[-1] + 1):
            r = rank(pi, a, b)
            if (rank(pi, a - 1, b) == rank(pi, a, b - 1) == r
                    and r > rank(pi, a + 1, b) == rank(pi, a, b + 1)):
                ess.add((a, b))
    return ess


def rho(g: int, d: int, pi: DotArray) -> int:
    """
    Expected dimension of the Brill-Noether degeneracy locus.

    Defined for every dot array, though it only has geometric meaning when
    ``len(pi) >= d + 1 - g``. The empty array gives ``g``.
    """
    if not pi.dots:
        return g
    r = pi.r
    rows, cols = row_col_sequences(pi)
    ascents = sum(1 for a, b in pi for a2, b2 in pi if a < a2 and b < b2)
    return (g - (r + 1) * (g - d + r)
            - sum(a - i for i, a in enumerate(rows))
            - sum(b - i for i, b in enumerate(cols))
            - ascents)


def to_confined(pi: DotArray, d: int, g: int) -> ZPermutation:
    """
    The unique (d,g)-confined permutation whose graph in N x N is ``pi``.

    Off the rows of ``pi`` the permutation is the decreasing bijection onto
    the complement of the columns that agrees with ``n -> d-g-n`` far out.
    """
    if len(pi) < d + 1 - g:
        raise ValueError(
            f"dot array has {len(pi)} dots; a confined extension needs at least d+1-g = {d + 1 - g}")
    m = d - g
    rows, cols = row_col_sequences(pi)
    a_max = rows[-1] if rows else 0
    b_max = cols[-1] if cols else 0
    # outside [lo, hi] the map is n -> m - n, sending the complement of
    # [lo, hi] onto the complement of [m - hi, m - lo]; [lo, hi] must contain
    # every row and [m - hi, m - lo] every column
    lo = min(0, m - b_max) - 1
    hi = max(a_max, m) + 1
    graph = dict(pi.dots)
    free_rows = [n for n in range(lo, hi + 1) if n not in graph]
    taken = set(cols)
    free_cols = [v for v in range(m - hi, m - lo + 1) if v not in taken]
    free_cols.reverse()
    table = dict(graph)
    table.update(zip(free_rows, free_cols))
    return ZPermutation.from_function(m, lo, hi, table.__getitem__)


def from_confined(pi: ZPermutation) -> DotArray:
    """The part of the graph of ``pi`` lying in N x N."""
    if not pi.is_descending:
        raise ValueError("expected a descending tail")
    m = pi.tail_shift
    dots = [(a, v) for a, v in pi.items() if a >= 0 and v >= 0]
    # tail points n -> m - n with both coordinates nonnegative
    dots += [(a, m - a) for a in range(0, m + 1) if not pi.lo <= a <= pi.hi]
    return DotArray(tuple(dots))


def essential_set_perm(sigma: WindowPermutation) -> set[tuple[int, int]]:
    """Essential set of a permutation of ``range(n)``, from its ascents."""
    n = sigma.n
    inv = sigma.inverse()
    ess = set()
    for a in range(1, n):
        for b in range(sigma[a - 1] + 1, sigma[a] + 1):
            if 1 <= b < n and inv[b - 1] < a <= inv[b]:
                ess.add((a, b))
    return ess


def essential_set_perm_by_rank(sigma: WindowPermutation) -> set[tuple[int, int]]:
    """Same set, characterised by the corner condition on the rank function."""
    from .bruhat import window_rank
    n = sigma.n

    def r(a, b):
        return window_rank(sigma, a, b)

    return {
        (a, b)
        for a in range(1, n) for b in range(1, n)
        if r(a - 1, b) == r(a, b - 1) == r(a, b) > r(a + 1, b) == r(a, b + 1)
    }


class EssVersion(enum.Enum):
    EQUAL = "Equal"
    CORNER_CASE = "CornerCase"


def ess_versions_check(pi: DotArray, d: int, g: int) -> EssVersion:
    """
    Compare the essential set of ``pi`` with that of its confined permutation.

    They agree except when ``g-d+r == 0`` and the array has a dot in row 0 and
    a dot in column 0, where the array's set gains exactly ``(0, 0)``.
    """
    ess_dots = essential_set(pi)
    ess_perm = essential_set_z(to_confined(pi, d, g))
    rows, cols = row_col_sequences(pi)
    corner = (g - d + pi.r == 0 and rows and rows[0] == 0 and cols[0] == 0)
    if corner:
        if (0, 0) in ess_perm or ess_dots != ess_perm | {(0, 0)}:
            raise AssertionError(f"corner case violated: {ess_dots} vs {ess_perm}")
        return EssVersion.CORNER_CASE
    if ess_dots != ess_perm:
        raise AssertionError(f"essential sets differ: {ess_dots} vs {ess_perm}")
    return EssVersion.EQUAL


def bijective_square(pi: ZPermutation, d: int, g: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """
    The square ``[d-g-b_r, a_r] x [d-g-a_r, b_r]`` that ``pi`` maps bijectively.

    Also checks that ``pi`` equals ``n -> d-g-n`` outside the square, that
    ``pi`` decreases on ``[a_r, inf)`` and its inverse on ``[b_r, inf)``.
    """
    dots = from_confined(pi)
    if not dots.dots:
        raise ValueError("bijective square needs a nonempty dot array")
    m = d - g
    if pi.tail_shift != m:
        raise ValueError("permutation is not (d,g)-confined for this d-g")
    rows, cols = row_col_sequences(dots)
    a_r, b_r = rows[-1], cols[-1]
    dom, cod = (m - b_r, a_r), (m - a_r, b_r)
    image = sorted(pi(n) for n in range(dom[0], dom[1] + 1))
    if image != list(range(cod[0], cod[1] + 1)):
        raise AssertionError("square is not mapped onto itself")
    if pi.table and (pi.lo < dom[0] or pi.hi > dom[1]):
        raise AssertionError("permutation leaves the tail outside the square")
    inv = inverse(pi)
    # beyond the window both maps follow the decreasing tail
    if any(pi(n) <= pi(n + 1) for n in range(a_r, max(a_r, pi.hi) + 1)):
        raise AssertionError("not decreasing on [a_r, inf)")
    if any(inv(n) <= inv(n + 1) for n in range(b_r, max(b_r, inv.hi) + 1)):
        raise AssertionError("inverse not decreasing on [b_r, inf)")
    return dom, cod


def rank_agrees(pi: DotArray, d: int, g: int) -> bool:
    """Whether the confined extension reproduces the rank function on N x N."""
    perm = to_confined(pi, d, g)
    rows, cols = row_col_sequences(pi)
    top = max(rows + cols + (0,)) + 2
    return all(rank(pi, a, b) == rank_fn(perm, a, b) for a in range(top) for b in range(top))
