from fractions import Fraction

import pytest

from lvweights import (
    CountTable,
    count_distinguished,
    leading_coefficient,
    partitions_mult,
    telephone,
)

# Closed polynomials for n = 1..6 that the recursion must reproduce.
POLYNOMIALS = {
    1: lambda k: 1,
    2: lambda k: k + 1,
    3: lambda k: 2 * k + 1,
    4: lambda k: k * k + 3 * k + 1,
    5: lambda k: 2 * k * k + 4 * k + 1,
    6: lambda k: (4 * k**3 + 27 * k**2 + 29 * k + 6) // 6,
}


class TestPartitionsMult:
    def test_four(self):
        got = [p.parts for p in partitions_mult(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_zero(self):
        assert [p.parts for p in partitions_mult(0)] == [()]

    def test_six_has_eleven(self):
        assert len(partitions_mult(6)) == 11

    def test_all_distinct_and_sum(self):
        for n in range(9):
            ps = partitions_mult(n)
            assert len(set(ps)) == len(ps)
            assert all(p.n == n for p in ps)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            partitions_mult(-1)


class TestCountDistinguished:
    def test_spot_values(self):
        assert count_distinguished(4, 2) == 11
        assert count_distinguished(6, 2) == 34
        assert count_distinguished(5, 3) == 31

    def test_zero_budget(self):
        for n in range(9):
            assert count_distinguished(n, 0) == 1

    def test_tiny_lengths(self):
        for k in range(5):
            assert count_distinguished(0, k) == 1
            assert count_distinguished(1, k) == 1

    def test_polynomials_exact(self):
        for n, poly in POLYNOMIALS.items():
            for k in range(26):
                assert count_distinguished(n, k) == poly(k), (n, k)

    def test_six_division_is_exact(self):
        for k in range(26):
            assert (4 * k**3 + 27 * k**2 + 29 * k + 6) % 6 == 0

    def test_monotone_in_k(self):
        for n in range(2, 9):
            vals = [count_distinguished(n, k) for k in range(15)]
            assert all(a <= b for a, b in zip(vals, vals[1:]))

    def test_fresh_table_matches_shared(self):
        table = CountTable()
        assert table.count(6, 10) == count_distinguished(6, 10)

    def test_degree_via_finite_differences(self):
        # For n <= 6 the count is a polynomial of degree floor(n/2): one
        # more difference of the sequence over k = 0..20 vanishes.
        for n in range(1, 7):
            seq = [count_distinguished(n, k) for k in range(21)]
            for _ in range(n // 2 + 1):
                seq = [b - a for a, b in zip(seq, seq[1:])]
            assert all(v == 0 for v in seq), n

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            count_distinguished(-1, 0)
        with pytest.raises(ValueError):
            count_distinguished(2, -1)


class TestTelephone:
    def test_base(self):
        assert telephone(0) == 1
        assert telephone(1) == 1

    def test_small_values(self):
        # a_4 = a_3 + 3 a_2 = 4 + 6; a_6 = a_5 + 5 a_4 = 26 + 50.
        assert telephone(4) == 10
        assert telephone(6) == 76

    def test_prefix(self):
        assert [telephone(i) for i in range(7)] == [1, 1, 2, 4, 10, 26, 76]

    def test_recursion_holds(self):
        for i in range(2, 30):
            assert telephone(i) == telephone(i - 1) + (i - 1) * telephone(i - 2)


class TestLeadingCoefficient:
    def test_base_values(self):
        assert [leading_coefficient(n) for n in range(5)] == [
            Fraction(1), Fraction(1), Fraction(1), Fraction(2), Fraction(1)
        ]

    def test_even_case(self):
        assert leading_coefficient(6) == Fraction(2, 3)

    def test_odd_case(self):
        # a_4 / 3! = 10/6, cross-checked against the odd recursion inside.
        assert leading_coefficient(7) == Fraction(5, 3)

    def test_both_paths_agree_up_to_60(self):
        # leading_coefficient raises internally on any mismatch.
        for n in range(61):
            leading_coefficient(n)

    def test_matches_polynomial_leading_terms(self):
        # Leading coefficients of the exact polynomials for n = 2, 4, 5, 6.
        assert leading_coefficient(2) == 1
        assert leading_coefficient(4) == 1
        assert leading_coefficient(5) == 2
        assert leading_coefficient(6) == Fraction(4, 6)
