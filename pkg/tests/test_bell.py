import pytest
from hypothesis import given, settings, strategies as st

from bellkit.bell import (
    ALGORITHMS,
    AlgorithmId,
    Partition,
    bell,
    bell_closed_form,
    bell_convolution,
    bell_partition,
    bell_recurrence,
    bell_series_oracle,
    bell_series_recurrence,
    binomial_chains,
    enumerate_partitions,
)
from bellkit.errors import InvalidIndex, InvalidSplit
from bellkit.polyalgebra import Polynomial, evaluate
from bellkit.reference import published
from bellkit.render import parse_text
from oracles import bell_by_set_partitions, bell_three_direct, bell_two_direct, partitions_brute

P = parse_text


class TestEnumeratePartitions:
    def test_three_into_two(self):
        assert enumerate_partitions(3, 2) == [Partition((1, 1))]

    def test_five_into_two(self):
        got = enumerate_partitions(5, 2)
        assert [p.counts for p in got] == partitions_brute(5, 2)
        assert sorted(p.parts for p in got) == [(3, 2), (4, 1)]

    def test_thirteen_into_seven(self):
        # one partition per monomial of the published B(13, 7)
        assert len(enumerate_partitions(13, 7)) == 11 == len(published(13))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_matches_brute_force(self, n):
        for k in range(1, n + 1):
            got = enumerate_partitions(n, k)
            assert [p.counts for p in got] == partitions_brute(n, k)
            assert all(p.n == n and p.k == k for p in got)

    @pytest.mark.parametrize("n,k", [(3, 4), (3, 0), (0, 0)])
    def test_invalid(self, n, k):
        with pytest.raises(InvalidIndex):
            enumerate_partitions(n, k)


class TestBellPartition:
    def test_b87(self):
        assert bell_partition(8, 7) == P("28*x1^6*x2")

    @pytest.mark.parametrize("k", range(1, 11))
    def test_diagonal(self, k):
        assert bell_partition(k, k) == Polynomial.var(1) ** k

    def test_b42(self):
        assert bell_partition(4, 2) == P("4*x1*x3 + 3*x2^2")

    def test_invalid(self):
        with pytest.raises(InvalidIndex):
            bell_partition(2, 3)


class TestBellRecurrence:
    def test_b97(self):
        assert bell_recurrence(9, 7) == P("378*x1^5*x2^2 + 84*x1^6*x3")

    def test_base_case(self):
        assert bell_recurrence(5, 5) == P("x1^5")

    def test_one_step(self):
        assert bell_recurrence(3, 2) == P("3*x1*x2")

    def test_matches_power_recurrence_over_polynomials(self):
        for n in range(1, 10):
            for k in range(1, n + 1):
                assert bell_recurrence(n, k) == bell_series_recurrence(n, k)


class TestBellConvolution:
    def test_b10_7_default_split(self):
        assert bell_convolution(10, 7, (6, 1)) == P("3150*x1^4*x2^3 + 2520*x1^5*x2*x3 + 210*x1^6*x4")

    @pytest.mark.parametrize("n", range(2, 9))
    def test_k2_matches_direct_double_product_sum(self, n):
        assert bell_convolution(n, 2, (1, 1)) == bell_two_direct(n)

    def test_diagonal_split(self):
        assert bell_convolution(4, 4, (2, 2)) == P("x1^4")

    @pytest.mark.parametrize("n,k", [(9, 6), (12, 5), (10, 4)])
    def test_split_independence(self, n, k):
        results = {bell_convolution(n, k, (j, k - j)) for j in range(1, k)}
        assert len(results) == 1

    @pytest.mark.parametrize("split", [(3, 3), (0, 5), (5, 0), (-1, 6)])
    def test_invalid_split(self, split):
        with pytest.raises(InvalidSplit):
            bell_convolution(8, 5, split)


class TestBellClosedForm:
    def test_b12_7(self):
        got = bell_closed_form(12, 7)
        assert got == published(12)
        assert got.coefficient(P("x1^2*x2^5").sorted_terms()[0][0]) == 62370

    @pytest.mark.parametrize("n", range(1, 9))
    def test_k1(self, n):
        assert bell_closed_form(n, 1) == Polynomial.var(n)

    def test_b43_matches_direct_triple_product_sum(self):
        # terms (a, b) = (2, 1), (3, 1), (3, 2) each contribute 12 x1^2 x2
        assert bell_three_direct(4) == P("6*x1^2*x2")
        assert bell_closed_form(4, 3) == bell_three_direct(4)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_k3_direct(self, n):
        assert bell_closed_form(n, 3) == bell_three_direct(n)

    def test_chain_count_is_compositions(self):
        # one lattice point per composition of n into k positive parts
        from math import comb

        for n in range(1, 12):
            for k in range(1, n + 1):
                chains = list(binomial_chains(n, k))
                assert len(chains) == comb(n - 1, k - 1)
                assert all(sum(parts) == n and min(parts) >= 1 for _, parts in chains)


class TestBellSeriesOracle:
    def test_b13_7(self):
        got = bell_series_oracle(13, 7)
        assert len(got) == 11
        assert got.sorted_terms()[0] == (P("x1*x2^6").sorted_terms()[0][0], 135135)

    def test_empty_product(self):
        assert bell_series_oracle(0, 0) == Polynomial.one()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_k0_vanishes(self, n):
        assert bell_series_oracle(n, 0).is_zero()

    def test_b63(self):
        assert bell_series_oracle(6, 3) == bell_partition(6, 3)


class TestDispatch:
    def test_b11_7(self):
        got = bell(11, 7, AlgorithmId.CLOSED_FORM)
        assert len(got) == 5 and got.coefficients()[0] == 17325

    @pytest.mark.parametrize("algo", ALGORITHMS)
    def test_b11(self, algo):
        assert bell(1, 1, algo) == P("x1")

    def test_large_cross_algorithm(self):
        assert bell(20, 10, "partition") == bell(20, 10, "recurrence")

    def test_unknown_algorithm(self):
        with pytest.raises(ValueError):
            bell(3, 2, "magic")


class TestAgainstSetPartitions:
    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("algo", ALGORITHMS)
    def test_combinatorial_definition(self, n, algo):
        for k in range(1, n + 1):
            assert bell(n, k, algo) == bell_by_set_partitions(n, k)


@st.composite
def scaling_case(draw):
    n = draw(st.integers(1, 10))
    k = draw(st.integers(1, n))
    c = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
    v = {a: draw(st.fractions(min_value=-2, max_value=2, max_denominator=3)) for a in range(1, n + 1)}
    return n, k, c, v


class TestScalingLaws:
    @given(scaling_case())
    @settings(max_examples=60, deadline=None)
    def test_homogeneous_and_isobaric(self, case):
        n, k, c, v = case
        b = bell_partition(n, k)
        base = evaluate(b, v)
        assert evaluate(b, {a: c * x for a, x in v.items()}) == c ** k * base
        assert evaluate(b, {a: c ** a * x for a, x in v.items()}) == c ** n * base
