import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normlds.exactlinalg import (
    IntMatrix,
    complete_primitive,
    det,
    hnf_column,
    inverse_unimodular,
    snf,
    xgcd,
)


def test_xgcd_bezout():
    for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (1, 1), (-3, -9), (0, 0)]:
        g, s, t = xgcd(a, b)
        assert g == math.gcd(a, b)
        assert s * a + t * b == g


class TestDet:
    def test_identity(self):
        assert det(IntMatrix.identity(4)) == 1

    def test_2x2_cofactor(self):
        assert det(IntMatrix.from_rows([[1, 1], [1, 0]])) == -1

    def test_power_module_matrix_is_unimodular(self):
        # the explicit quartic change-of-basis matrix at T = 10
        a = IntMatrix.from_rows([[0, 0, 1, 0], [1, 0, 0, 1], [1, 0, 0, 0], [11, 1, 0, 0]])
        assert det(a) in (1, -1)

    def test_singular(self):
        assert det(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            det(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))

    def test_matches_permutation_expansion(self):
        rng = random.Random(11)
        from itertools import permutations

        def brute(rows):
            n = len(rows)
            total = 0
            for perm in permutations(range(n)):
                sign = 1
                seen = list(perm)
                for i in range(n):
                    for j in range(i + 1, n):
                        if seen[i] > seen[j]:
                            sign = -sign
                total += sign * math.prod(rows[i][perm[i]] for i in range(n))
            return total

        for _ in range(25):
            rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
            assert det(IntMatrix.from_rows(rows)) == brute(rows)


class TestHnf:
    def test_identity(self):
        dec = hnf_column(IntMatrix.identity(3))
        assert dec.h == IntMatrix.identity(3)
        assert dec.c == IntMatrix.identity(3)

    def test_simple_2x2(self):
        b = IntMatrix.from_rows([[2, 1], [0, 3]])
        dec = hnf_column(b)
        assert b @ dec.c == dec.h
        assert det(dec.c) in (1, -1)
        assert dec.h.entries[0][1] == 0

    def test_rank_deficient_rejected(self):
        with pytest.raises(ValueError, match="rank"):
            hnf_column(IntMatrix.from_rows([[1, 2], [2, 4]]))

    @given(
        st.lists(
            st.lists(st.integers(-50, 50), min_size=3, max_size=3),
            min_size=3,
            max_size=3,
        )
    )
    @settings(max_examples=150, deadline=None)
    def test_witness_properties(self, rows):
        b = IntMatrix.from_rows(rows)
        if det(b) == 0:
            return
        dec = hnf_column(b)
        assert b @ dec.c == dec.h
        assert det(dec.c) in (1, -1)
        n = dec.h.rows
        for i in range(n):
            assert dec.h.entries[i][i] > 0
            for j in range(i + 1, n):
                assert dec.h.entries[i][j] == 0
            for j in range(i):
                assert 0 <= dec.h.entries[i][j] < dec.h.entries[i][i]


class TestSnf:
    def test_family_matrix_m2(self):
        b = IntMatrix.from_rows([[1, 0, 0, 0], [0, 1, 1, 0], [5, 0, 0, 2], [0, 11, 9, 0]])
        assert snf(b).d == (1, 1, 2, 2)

    def test_identity(self):
        assert snf(IntMatrix.identity(4)).d == (1, 1, 1, 1)

    def test_diag_4_6(self):
        # oracle: d1 = gcd of entries, d1*d2 = |det|
        b = IntMatrix.from_rows([[4, 0], [0, 6]])
        expected_d1 = math.gcd(4, 6)
        expected_d2 = abs(det(b)) // expected_d1
        assert snf(b).d == (expected_d1, expected_d2)

    def test_zero_matrix(self):
        assert snf(IntMatrix.from_rows([[0, 0], [0, 0]])).d == (0, 0)

    @given(
        st.lists(
            st.lists(st.integers(-50, 50), min_size=4, max_size=4),
            min_size=4,
            max_size=4,
        )
    )
    @settings(max_examples=150, deadline=None)
    def test_witness_properties(self, rows):
        b = IntMatrix.from_rows(rows)
        dec = snf(b)
        assert dec.x @ b @ dec.y == IntMatrix.diagonal(list(dec.d))
        assert det(dec.x) in (1, -1)
        assert det(dec.y) in (1, -1)
        for i in range(3):
            if dec.d[i] == 0:
                assert dec.d[i + 1] == 0
            else:
                assert dec.d[i + 1] % dec.d[i] == 0
        assert all(x >= 0 for x in dec.d)


class TestCompletePrimitive:
    def test_unit_vector(self):
        assert complete_primitive([1, 0, 0, 0]) == IntMatrix.identity(4)

    def test_3_5(self):
        u = complete_primitive([3, 5])
        assert u.column(0) == (3, 5)
        assert det(u) in (1, -1)

    def test_family_lift_vector(self):
        u = complete_primitive([0, 2, -4, 1])
        assert u.column(0) == (0, 2, -4, 1)
        assert det(u) in (1, -1)

    def test_imprimitive_rejected(self):
        with pytest.raises(ValueError, match="primitive"):
            complete_primitive([2, 4])

    @given(st.lists(st.integers(-30, 30), min_size=2, max_size=4))
    @settings(max_examples=200, deadline=None)
    def test_random_primitive_vectors(self, vec):
        if math.gcd(*vec) != 1:
            return
        u = complete_primitive(vec)
        assert u.column(0) == tuple(vec)
        assert det(u) in (1, -1)


class TestInverseUnimodular:
    def test_identity(self):
        assert inverse_unimodular(IntMatrix.identity(3)) == IntMatrix.identity(3)

    def test_2x2(self):
        m = IntMatrix.from_rows([[1, 1], [1, 0]])
        assert inverse_unimodular(m) == IntMatrix.from_rows([[0, 1], [1, -1]])

    def test_family_transform_witness(self):
        # the closed-form Smith transform for the m=2 family matrix
        x = IntMatrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, -9, 0, 1], [-5, 0, 1, 0]])
        inv = inverse_unimodular(x)
        assert x @ inv == IntMatrix.identity(4)
        assert inv @ x == IntMatrix.identity(4)

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError, match="unimodular"):
            inverse_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))

    def test_two_sided(self):
        rng = random.Random(5)
        count = 0
        while count < 20:
            m = IntMatrix.from_rows([[rng.randint(-6, 6) for _ in range(3)] for _ in range(3)])
            if det(m) in (1, -1):
                inv = inverse_unimodular(m)
                assert m @ inv == IntMatrix.identity(3)
                assert inv @ m == IntMatrix.identity(3)
                count += 1
