from fractions import Fraction

import pytest

from bndegen.linalg import (
    GF, QQ, SplitMix64, extend_basis, field_from_spec, intersect, nullspace_left, rank, rref,
    span_contains,
)


class TestField:
    def test_coercion(self):
        assert QQ("3/6") == Fraction(1, 2)
        assert GF(7)(Fraction(1, 2)) == 4
        assert GF(7)(-1) == 6

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QQ.div(Fraction(1), Fraction(0))
        with pytest.raises(ZeroDivisionError):
            GF(5).div(1, 0)

    def test_prime_checks(self):
        with pytest.raises(ValueError):
            GF(9)
        with pytest.raises(ValueError):
            GF(2**31 + 11)

    def test_specs(self):
        assert field_from_spec("q") == QQ
        assert field_from_spec("prime 101") == GF(101)
        assert field_from_spec("101") == GF(101)
        assert field_from_spec(5) == GF(5)

    def test_json_scalars(self):
        assert QQ.to_json(Fraction(-2, 4)) == "-1/2"
        assert QQ.to_json(Fraction(3)) == "3"
        assert GF(101).to_json(7) == 7


class TestSplitMix64:
    def test_reference_values(self):
        # published outputs for seed 0
        rng = SplitMix64(0)
        assert rng.next() == 0xE220A8397B1DCDAF
        assert rng.next() == 0x6E789E6AA1B965F4

    def test_below_is_in_range(self):
        rng = SplitMix64(42)
        assert all(0 <= rng.below(7) < 7 for _ in range(200))


class TestElimination:
    def test_rref_and_rank(self):
        rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
        red, pivots = rref(rows, QQ)
        assert pivots == [0, 1]
        assert red == [[1, 0, 1], [0, 1, 1]]
        assert rank(rows, QQ) == 2
        assert rank([], QQ) == 0

    def test_rank_depends_on_characteristic(self):
        rows = [[1, 1], [1, -1]]
        assert rank(rows, QQ) == 2
        assert rank(rows, GF(2)) == 1

    def test_left_nullspace(self):
        rows = [[1, 0], [0, 1], [1, 1]]
        (z,) = nullspace_left(rows, QQ)
        assert [sum(z[i] * rows[i][j] for i in range(3)) for j in range(2)] == [0, 0]

    def test_intersection(self):
        u = [[1, 0, 0], [0, 1, 0]]
        v = [[0, 1, 0], [0, 0, 1]]
        assert intersect(u, v, QQ, 3) == [[0, 1, 0]]
        assert intersect(u, [], QQ, 3) == []

    def test_span_and_extend(self):
        base = [[1, 0, 0]]
        assert span_contains(base, [[2, 0, 0]], QQ)
        assert not span_contains(base, [[0, 1, 0]], QQ)
        chosen = extend_basis(base, [[3, 0, 0], [0, 1, 0], [0, 2, 0]], QQ, 1)
        assert chosen == [[0, 1, 0]]
        with pytest.raises(ArithmeticError):
            extend_basis(base, [[1, 0, 0]], QQ, 1)
