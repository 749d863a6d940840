from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from bndegen.bruhat import all_permutations, reduced_words_count
from bndegen.perm_core import WindowPermutation as W
from bndegen.schubert_poly import (
    SparsePoly, bjs_schubert, chow_coefficient, compatible_sequences, divided_difference,
    double_schubert, exponential_substitution, schubert_via_divided_diff,
)

x, y, const = SparsePoly.x, SparsePoly.y, SparsePoly.const


def e(k, g):
    """Elementary symmetric polynomial ``e_k(x1..xg)``."""
    total = const(0)
    for subset in _subsets(range(1, g + 1), k):
        term = const(1)
        for i in subset:
            term = term * x(i)
        total = total + term
    return total


def _subsets(items, k):
    from itertools import combinations
    return combinations(items, k)


class TestSparsePoly:
    def test_arithmetic(self):
        p = (x(1) + y(2)) * (x(1) - y(2))
        assert p == x(1) * x(1) - y(2) * y(2)
        assert p - p == 0
        assert const(3) * x(2) == x(2) + x(2) + x(2)

    def test_rendering(self):
        assert str(x(1) * x(1) * x(2) - x(1) * x(1) * y(1)) == "x1^2*x2 - x1^2*y1"
        assert str(const(Fraction(1, 2)) * x(2) + const(-3)) == "1/2*x2 - 3"
        assert str(const(0)) == "0"

    def test_rendering_orders_by_degree_then_lex(self):
        p = x(2) + x(1) * x(2) + x(1) + const(1)
        assert str(p) == "x1*x2 + x1 + x2 + 1"

    def test_degree_and_homogeneity(self):
        p = x(1) * x(2) + x(3) * x(3)
        assert p.degree() == 2 and p.is_homogeneous(2)
        assert not (p + x(1)).is_homogeneous(2)

    def test_swaps(self):
        assert (x(1) * y(2)).swap_blocks() == y(1) * x(2)
        assert x(1).swap_x(1) == x(2)


class TestBJS:
    def test_examples(self):
        assert bjs_schubert(W.identity(3)) == 1
        assert bjs_schubert(W((1, 0, 2))) == x(1)
        assert bjs_schubert(W((0, 2, 1))) == x(1) + x(2)

    def test_compatible_sequences(self):
        # word (2, 1): i1 <= 2, i2 <= 1, descent allows equality
        assert sorted(compatible_sequences((2, 1))) == [(1, 1)]
        assert sorted(compatible_sequences((1, 2))) == [(1, 2)]

    def test_known_polynomial(self):
        # 1-indexed 1432
        assert bjs_schubert(W((0, 3, 2, 1))) == (
            x(1) * x(1) * x(2) + x(1) * x(1) * x(3) + x(1) * x(2) * x(2)
            + x(1) * x(2) * x(3) + x(2) * x(2) * x(3))


class TestDividedDifference:
    def test_examples(self):
        assert divided_difference(x(1), 1) == 1
        assert divided_difference(x(1) * x(2), 1) == 0
        assert divided_difference(x(1) * x(1), 1) == x(1) + x(2)

    def test_leaves_y_alone(self):
        assert divided_difference(x(1) * y(1), 1) == y(1)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3)),
                    max_size=5),
           st.integers(1, 2))
    def test_matches_definition(self, terms, i):
        p = const(0)
        for a, b, c in terms:
            p = p + const(c) * _mono(a, b)
        q = divided_difference(p, i)
        assert q * (x(i) - x(i + 1)) == p - p.swap_x(i)


def _mono(a, b):
    out = const(1)
    for _ in range(a):
        out = out * x(1)
    for _ in range(b):
        out = out * x(2)
    return out


class TestViaDividedDifferences:
    def test_examples(self):
        assert schubert_via_divided_diff(W.reversal(3)) == x(1) * x(1) * x(2)
        assert schubert_via_divided_diff(W.identity(4)) == 1
        assert schubert_via_divided_diff(W((1, 0, 2))) == x(1)

    def test_cap(self):
        with pytest.raises(ValueError):
            schubert_via_divided_diff(W.identity(8))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_agrees_with_bjs(self, n):
        for w in all_permutations(n):
            p = bjs_schubert(w)
            assert p == schubert_via_divided_diff(w)
            assert p.is_homogeneous(w.length())


class TestDouble:
    def test_examples(self):
        assert double_schubert(W.identity(3)) == 1
        assert double_schubert(W((1, 0))) == x(1) - y(1)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_symmetry(self, n):
        for w in all_permutations(n):
            lhs = double_schubert(w)
            rhs = double_schubert(w.inverse()).swap_blocks()
            assert lhs == (rhs if w.length() % 2 == 0 else -rhs)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_y_zero_is_single(self, n):
        for w in all_permutations(n):
            assert double_schubert(w).set_y_zero() == bjs_schubert(w)


class TestExponentialSubstitution:
    def test_elementary(self):
        assert exponential_substitution(e(2, 3), 3) == {2: Fraction(1, 2)}
        assert exponential_substitution(const(3) * e(1, 4), 4) == {1: Fraction(3)}

    def test_non_elementary_vanishes(self):
        m2 = x(1) * x(1) + x(2) * x(2) + x(3) * x(3)
        assert exponential_substitution(m2, 3) == {}

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            exponential_substitution(x(1), 2)

    def test_rejects_y(self):
        with pytest.raises(ValueError):
            exponential_substitution(y(1), 2)


class TestChow:
    def test_examples(self):
        assert chow_coefficient(W.identity(3), 4) == (Fraction(1), 0)
        assert chow_coefficient(W.reversal(3), 2) == (Fraction(0), 3)
        assert chow_coefficient(W.reversal(3), 3) == (Fraction(2, 6), 3)

    def test_point_count_case(self):
        w = W.reversal(4)
        coeff, power = chow_coefficient(w, 6)
        assert power == 6 and coeff * factorial(6) == reduced_words_count(w) == 16


def _increasing_prefix(w, g):
    return all(w[i] < w[i + 1] for i in range(min(g, w.n) - 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_substitution_reproduces_reduced_word_count(n):
    for w in all_permutations(n):
        length = w.length()
        for g in range(1, length + 1):
            if not _increasing_prefix(w, g):
                continue
            poly = bjs_schubert(w).truncate_x(g)
            got = exponential_substitution(poly, g)
            expected = {length: Fraction(reduced_words_count(w), factorial(length))} \
                if length <= g else {}
            assert got == expected, (w, g)


@pytest.mark.parametrize("n", range(2, 6))
def test_symmetric_when_no_early_descent(n):
    for w in all_permutations(n):
        for g in range(2, n + 1):
            if _increasing_prefix(w, g):
                assert bjs_schubert(w).is_symmetric_in(g)
