"""Shared hypothesis strategies and seeded generators."""

import random

from hypothesis import strategies as st

from bndegen.dot_array import DotArray
from bndegen.perm_core import WindowPermutation


@st.composite
def dot_arrays(draw, max_dots=6, max_coord=8):
    k = draw(st.integers(0, max_dots))
    rows = draw(st.lists(st.integers(0, max_coord), min_size=k, max_size=k, unique=True))
    cols = draw(st.lists(st.integers(0, max_coord), min_size=k, max_size=k, unique=True))
    return DotArray(tuple(zip(rows, cols)))


@st.composite
def valid_inputs(draw, max_dots=6, max_coord=8, min_dots=0):
    """``(dots, d, g)`` with ``len(dots) >= d + 1 - g`` and ``d - g`` in ``[-4, 6]``."""
    dots = draw(dot_arrays(max_dots, max_coord))
    if len(dots) < min_dots:
        dots = DotArray.antidiagonal(min_dots - 1)
    g = draw(st.integers(1, 12))
    shift = draw(st.integers(-4, min(6, len(dots) - 1)))
    d = g + shift
    if d < 1:
        d, g = 1, 1 - shift
    return dots, d, g


@st.composite
def window_perms(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return WindowPermutation(tuple(draw(st.permutations(range(n)))))


def random_valid_input(rng: random.Random, max_dots=6, max_coord=8):
    """Seeded counterpart of :func:`valid_inputs` for corpus-style tests."""
    while True:
        k = rng.randint(0, max_dots)
        rows = rng.sample(range(max_coord + 1), k)
        cols = rng.sample(range(max_coord + 1), k)
        dots = DotArray(tuple(zip(rows, cols)))
        shift = rng.randint(-4, 6)
        g = rng.randint(max(1, 1 - shift), 12)
        d = g + shift
        if len(dots) >= d + 1 - g:
            return dots, d, g
