"""
Permutations of the integers that agree with a fixed affine map outside a
finite window, and permutations of ``range(n)`` in one-line notation.

A :class:`ZPermutation` has one of two tails:

* descending, ``n -> m - n`` (``tail_shift == m``), the shape of a confined
  permutation and of the descending permutation ``omega(m)``;
* identity (``tail_shift is None``), the shape of ``omega(m) * pi`` when that
  product has finite length.

>>> pi = ZPermutation.from_table(0, -4, (4, 2, -1, -2, 1, -3, 0, 3, -4))
>>> pi(1), pi(100)
(-3, -100)
>>> finite_length(compose(omega(0), pi))
11
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "WindowPermutation", "ZPermutation",
    "omega", "identity", "shift_conjugate",
    "evaluate", "compose", "inverse", "finite_length", "rank_fn",
    "is_dg_confined", "slide", "restrict_to_window", "essential_set_z",
]


@dataclass(frozen=True, order=True)
class WindowPermutation:
    """A permutation of ``range(n)``; ``images[i]`` is the image of ``i``."""
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of range({len(images)}): {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> WindowPermutation:
        return cls(tuple(range(n)))

    @classmethod
    def reversal(cls, n: int) -> WindowPermutation:
        return cls(tuple(range(n - 1, -1, -1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __str__(self) -> str:
        return ",".join(map(str, self.images))

    def inverse(self) -> WindowPermutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            inv[v] = i
        return WindowPermutation(tuple(inv))

    def __mul__(self, other: WindowPermutation) -> WindowPermutation:
        """Composition ``(self * other)(i) == self(other(i))``."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return WindowPermutation(tuple(self.images[v] for v in other.images))

    def swap(self, i: int) -> WindowPermutation:
        """Right multiplication by s_i: swap positions ``i`` and ``i+1``."""
        images = list(self.images)
        images[i], images[i + 1] = images[i + 1], images[i]
        return WindowPermutation(tuple(images))

    def length(self) -> int:
        """Number of inversions."""
        w = self.images
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def descents(self) -> list[int]:
        """Positions ``i`` with ``w(i) > w(i+1)``."""
        w = self.images
        return [i for i in range(len(w) - 1) if w[i] > w[i + 1]]


@dataclass(frozen=True)
class ZPermutation:
    """
    Bijection of Z equal to its tail map outside ``[lo, hi]``.

    The window is kept minimal, so structural equality is equality of maps.
    An empty window is stored as ``lo = 0, hi = -1``.
    """
    tail_shift: int | None
    lo: int
    hi: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != max(0, self.hi - self.lo + 1):
            raise ValueError("table length does not match window")
        values = set(self.table)
        if len(values) != len(self.table):
            raise ValueError("table is not injective")
        if self.table:
            # a bijection that equals the tail outside [lo, hi] must map
            # [lo, hi] onto the tail image of [lo, hi]
            lo_img, hi_img = self._tail(self.lo), self._tail(self.hi)
            if values != set(range(min(lo_img, hi_img), max(lo_img, hi_img) + 1)):
                raise ValueError("table does not complete the tail to a bijection of Z")
            if self.table[0] == lo_img or self.table[-1] == hi_img:
                raise ValueError("window is not minimal; use ZPermutation.from_table")

    def _tail(self, n: int) -> int:
        return n if self.tail_shift is None else self.tail_shift - n

    @classmethod
    def from_table(cls, tail_shift: int | None, lo: int, table) -> ZPermutation:
        """Build from an arbitrary (possibly non-minimal) window and trim it."""
        table = [int(v) for v in table]
        tail = (lambda n: n) if tail_shift is None else (lambda n: tail_shift - n)
        hi = lo + len(table) - 1
        while table and table[0] == tail(lo):
            table.pop(0)
            lo += 1
        while table and table[-1] == tail(hi):
            table.pop()
            hi -= 1
        if not table:
            return cls(tail_shift, 0, -1, ())
        return cls(tail_shift, lo, hi, tuple(table))

    @classmethod
    def from_function(cls, tail_shift: int | None, lo: int, hi: int, fn) -> ZPermutation:
        return cls.from_table(tail_shift, lo, [fn(n) for n in range(lo, hi + 1)])

    @property
    def is_descending(self) -> bool:
        return self.tail_shift is not None

    def __call__(self, n: int) -> int:
        if self.lo <= n <= self.hi:
            return self.table[n - self.lo]
        return self._tail(n)

    def items(self) -> list[tuple[int, int]]:
        return [(n, self.table[n - self.lo]) for n in range(self.lo, self.hi + 1)]


def omega(m: int) -> ZPermutation:
    """The descending permutation ``n -> m - n``."""
    return ZPermutation(m, 0, -1, ())


def identity() -> ZPermutation:
    return ZPermutation(None, 0, -1, ())


def evaluate(pi: ZPermutation, n: int) -> int:
    return pi(n)


def _tail_preimage_interval(pi: ZPermutation, lo: int, hi: int) -> tuple[int, int]:
    # the tail map is an involution or the identity, so it is its own inverse
    a, b = pi._tail(lo), pi._tail(hi)
    return min(a, b), max(a, b)


def compose(a: ZPermutation, b: ZPermutation) -> ZPermutation:
    """Return ``a * b``, i.e. ``n -> a(b(n))``."""
    if a.is_descending and b.is_descending:
        if a.tail_shift != b.tail_shift:
            # n -> a.m - (b.m - n) is a nonzero shift, which has no representation
            raise ValueError("composite tail is a translation, not identity or descending")
        tail = None
    elif a.is_descending:
        tail = a.tail_shift
    elif b.is_descending:
        tail = b.tail_shift
    else:
        tail = None
    # outside b's window and outside b-tail-preimage of a's window,
    # a(b(n)) is the composite tail
    spans = []
    if b.table:
        spans.append((b.lo, b.hi))
    if a.table:
        spans.append(_tail_preimage_interval(b, a.lo, a.hi))
    if not spans:
        return ZPermutation(tail, 0, -1, ())
    lo = min(s[0] for s in spans)
    hi = max(s[1] for s in spans)
    return ZPermutation.from_function(tail, lo, hi, lambda n: a(b(n)))


def inverse(pi: ZPermutation) -> ZPermutation:
    if not pi.table:
        return pi
    lo, hi = _tail_preimage_interval(pi, pi.lo, pi.hi)
    inv = {v: n for n, v in pi.items()}
    return ZPermutation.from_function(pi.tail_shift, lo, hi, lambda n: inv.get(n, pi._tail(n)))


def shift_conjugate(pi: ZPermutation, m: int, n: int) -> ZPermutation:
    """Return ``alpha(n) * pi * alpha(m)^-1``, i.e. ``k -> n + pi(k - m)``."""
    tail = None if pi.tail_shift is None else pi.tail_shift + m + n
    if tail is None and m != n:
        raise ValueError("shifting an identity tail by unequal amounts leaves the class")
    if not pi.table:
        return ZPermutation(tail, 0, -1, ())
    return ZPermutation(tail, pi.lo + m, pi.hi + m, tuple(v + n for v in pi.table))


def finite_length(tau: ZPermutation) -> int:
    """Number of inversions of a permutation with identity tail."""
    if tau.is_descending:
        raise ValueError("a permutation with descending tail has infinite length")
    # identity tail: [lo, hi] is mapped onto itself and every point outside is
    # fixed, so an inversion (x < y, tau(x) > tau(y)) cannot involve a fixed
    # point outside the window
    t = tau.table
    return sum(1 for i in range(len(t)) for j in range(i + 1, len(t)) if t[i] > t[j])


def _count_tail(m: int, lo: int, hi: int, b: int) -> int:
    """#{x in [lo, hi] : m - x >= b}."""
    hi = min(hi, m - b)
    return max(0, hi - lo + 1)


def rank_fn(pi: ZPermutation, a: int, b: int) -> int:
    """``#{a' >= a : pi(a') >= b}``; finite only for a descending tail."""
    if not pi.is_descending:
        raise ValueError("rank function is infinite for an identity tail")
    m = pi.tail_shift
    count = sum(1 for x, v in pi.items() if x >= a and v >= b)
    if not pi.table:
        # whole line is tail; use an upper bound that is never reached
        return _count_tail(m, a, m - b, b)
    if a < pi.lo:
        count += _count_tail(m, a, pi.lo - 1, b)
    count += _count_tail(m, max(a, pi.hi + 1), m - b, b)
    return count


def _decreasing_on_negatives(pi: ZPermutation) -> bool:
    # tail is strictly decreasing, so checking the window plus one point
    # past its left edge covers all of (-inf, -1]
    start = min(pi.lo, -1) - 1
    return all(pi(n) > pi(n + 1) for n in range(start, -1))


def is_dg_confined(pi: ZPermutation, d: int, g: int) -> bool:
    """Both ``pi`` and its inverse decrease on (-inf, -1] and omega(d-g)*pi has finite length."""
    if pi.tail_shift != d - g:
        return False
    return _decreasing_on_negatives(pi) and _decreasing_on_negatives(inverse(pi))


def slide(pi: ZPermutation, m: int, n: int) -> ZPermutation:
    """``alpha(n) * pi * alpha(m)^-1`` for a descending-tail ``pi``."""
    if not pi.is_descending:
        raise ValueError("slide expects a descending tail")
    return shift_conjugate(pi, m, n)


def restrict_to_window(pi: ZPermutation, lo: int, hi: int) -> WindowPermutation:
    """Restrict ``pi`` to an invariant interval and reindex it as ``range(hi-lo+1)``."""
    if hi < lo:
        raise ValueError("empty interval")
    values = [pi(x) for x in range(lo, hi + 1)]
    if sorted(values) != list(range(lo, hi + 1)):
        raise ValueError(f"[{lo}, {hi}] is not invariant under the permutation")
    return WindowPermutation(tuple(v - lo for v in values))


def essential_set_z(pi: ZPermutation) -> set[tuple[int, int]]:
    """
    Essential set of a descending-tail permutation of Z: pairs ``(a, b)`` with
    ``pi(a-1) < b <= pi(a)`` and ``pi^-1(b-1) < a <= pi^-1(b)``.
    """
    if not pi.is_descending:
        raise ValueError("essential set is infinite for an identity tail")
    inv = inverse(pi)
    ess = set()
    # ascents pi(a-1) < pi(a) only occur with a-1 or a inside the window
    for a in range(pi.lo, pi.hi + 2):
        for b in range(pi(a - 1) + 1, pi(a) + 1):
            if inv(b - 1) < a <= inv(b):
                ess.add((a, b))
    return ess
