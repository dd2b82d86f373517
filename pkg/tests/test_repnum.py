import math
from fractions import Fraction

import pytest

from thetacharge import (
    ConvergenceError,
    CountInconsistencyError,
    NotPositiveDefiniteError,
    QuadForm,
    an_form,
    brute_form_count,
    brute_squares,
    brute_squares_table,
    form_table,
    four_squares_divisor,
    nonzero_form_count,
    nonzero_form_table,
    nonzero_squares_binomial,
    nonzero_squares_table,
    parse_form_text,
    squares_table,
    squares_tables,
    theta3_series,
    theta_form_value,
    theta_transform_check,
    three_squares_possible,
    two_squares_divisor,
)


class TestThetaSeries:
    def test_theta3_coefficients(self):
        # 1 + 2q + 2q^4 + 2q^9 + ...
        s = theta3_series(16)
        expect = tuple(2 if math.isqrt(n) ** 2 == n and n else (1 if n == 0 else 0)
                       for n in range(17))
        assert s.coeffs == expect

    def test_square_counts_start(self):
        t = squares_table(2, 12)
        assert tuple(t.counts) == (1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8, 0, 0)

    def test_single_square(self):
        t = squares_table(1, 25)
        for n in range(26):
            root = math.isqrt(n)
            assert t[n] == (1 if n == 0 else (2 if root * root == n else 0))


class TestSquaresAgainstBrute:
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
    def test_plain(self, k):
        assert squares_table(k, 50).counts == brute_squares_table(k, 50).counts

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
    def test_nonzero(self, k):
        direct = nonzero_squares_table(k, 50)
        brute = brute_squares_table(k, 50, require_nonzero=True)
        assert direct.counts == brute.counts

    def test_single_value_helper(self):
        assert brute_squares(3, 3) == 8
        assert brute_squares(4, 3, require_nonzero=True) == 0

    def test_binomial_sieve(self):
        rtabs = squares_tables(5, 60)
        for k in range(1, 6):
            direct = nonzero_squares_table(k, 60)
            for N in range(1, 61):
                assert nonzero_squares_binomial(k, N, rtabs) == direct[N]

    def test_binomial_sieve_rejects_bad_tables(self):
        broken = list(squares_tables(3, 20))
        broken[1] = squares_table(4, 20)  # wrong table in the k=2 slot
        with pytest.raises(CountInconsistencyError):
            for N in range(1, 21):
                nonzero_squares_binomial(3, N, broken)

    def test_specific_values(self):
        assert squares_table(2, 5)[5] == 8
        assert nonzero_squares_table(3, 6)[6] == 24
        assert nonzero_squares_table(2, 2)[2] == 4
        assert nonzero_squares_table(5, 5)[5] == 32
        assert squares_table(4, 4)[4] == 24


class TestClassicalLaws:
    def test_two_square_divisor(self):
        t = squares_table(2, 300)
        for N in range(1, 301):
            assert t[N] == two_squares_divisor(N)

    def test_four_square_divisor(self):
        t = squares_table(4, 300)
        for N in range(1, 301):
            assert t[N] == four_squares_divisor(N)

    def test_three_square_criterion(self):
        t = squares_table(3, 400)
        for N in range(1, 401):
            assert (t[N] > 0) == three_squares_possible(N)
        # the excluded residues themselves
        assert not three_squares_possible(7)
        assert not three_squares_possible(28)
        assert not three_squares_possible(112)
        assert three_squares_possible(27)

    def test_three_square_quarter_invariance(self):
        t = squares_table(3, 1600)
        for N in range(1, 101):
            assert t[N] == t[4 * N] == t[16 * N]


class TestQuadForm:
    def test_validation(self):
        with pytest.raises(ValueError):
            QuadForm(((2, 1), (2, 2)))  # asymmetric
        with pytest.raises(ValueError):
            QuadForm(((1, 0), (0, 2)))  # odd diagonal
        with pytest.raises(NotPositiveDefiniteError):
            QuadForm(((2, 3), (3, 2)))  # indefinite
        with pytest.raises(NotPositiveDefiniteError):
            QuadForm(((-2, 0), (0, -2)),)

    def test_value_is_even(self):
        Q = an_form(3)
        for x in [(1, 0, 0), (1, -1, 2), (3, 2, 1)]:
            assert Q.value(x) % 2 == 0

    def test_an_determinant(self):
        for n in range(1, 11):
            assert an_form(n).determinant() == n + 1

    def test_leading_minors_positive(self):
        minors = an_form(5).leading_minors()
        assert tuple(minors) == (2, 3, 4, 5, 6)

    def test_deleted(self):
        Q = an_form(3)
        assert Q.deleted((2,)).entries == an_form(2).entries
        assert Q.deleted((0, 1)).entries == ((2,),)

    def test_inverse(self):
        Q = QuadForm(((2, 1), (1, 4)))
        inv = Q.inverse()
        n = Q.n
        for i in range(n):
            for j in range(n):
                acc = sum(Fraction(Q.entries[i][p]) * inv[p][j] for p in range(n))
                assert acc == (1 if i == j else 0)

    def test_parse_form_text(self):
        Q = parse_form_text("2\n2 1\n1 2\n")
        assert Q.entries == an_form(2).entries
        with pytest.raises(ValueError):
            parse_form_text("2\n2 1\n")
        with pytest.raises(ValueError):
            parse_form_text("x\n")


class TestFormCounts:
    def test_a2_small_values(self):
        Q = an_form(2)
        t = form_table(Q, 7)
        # x^2 + xy + y^2 takes values 0,1,3,4,7 below 8
        assert tuple(t.counts) == (1, 6, 0, 6, 6, 0, 0, 12)
        assert nonzero_form_count(Q, 1) == 2
        assert nonzero_form_count(Q, 3) == 6

    def test_identity_form_matches_squares(self):
        for k in range(1, 5):
            Q = QuadForm(tuple(tuple(2 if i == j else 0 for j in range(k))
                               for i in range(k)))
            plain = form_table(Q, 40)
            squares = squares_table(k, 40)
            assert plain.counts == squares.counts
            nz = nonzero_form_table(Q, 40)
            nz_squares = nonzero_squares_table(k, 40)
            assert nz.counts == nz_squares.counts

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_against_box_scan(self, n):
        Q = an_form(n)
        t = form_table(Q, 25)
        for N in range(1, 26):
            assert t[N] == brute_form_count(Q, N)
            assert nonzero_form_count(Q, N) == brute_form_count(Q, N, True)

    def test_off_diagonal_form(self):
        Q = QuadForm(((4, 1), (1, 6)))
        t = form_table(Q, 30)
        for N in range(1, 31):
            assert t[N] == brute_form_count(Q, N)
            assert nonzero_form_count(Q, N) == brute_form_count(Q, N, True)

    def test_nonzero_table_matches_per_value(self):
        Q = an_form(2)
        t = nonzero_form_table(Q, 20)
        for N in range(1, 21):
            assert t[N] == nonzero_form_count(Q, N)


class TestThetaTransform:
    @pytest.mark.parametrize("z", [1j, 2j, 0.3 + 1.2j])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_inversion_law(self, n, z):
        chk = theta_transform_check(an_form(n), z, cutoff=1e-10)
        assert chk.absdiff < 1e-6

    def test_value_converges(self):
        v = theta_form_value(an_form(1), 1j, cutoff=1e-12)
        # one-dimensional sum of exp(-2 pi m^2), checked against a direct sum
        direct = sum(math.exp(-2 * math.pi * m * m) for m in range(-20, 21))
        assert abs(v - direct) < 1e-10

    def test_rejects_lower_half_plane(self):
        with pytest.raises(ValueError):
            theta_form_value(an_form(1), 1 - 1j)

    def test_unreachable_cutoff(self):
        with pytest.raises(ConvergenceError):
            theta_form_value(an_form(1), 1e-9j, cutoff=1e-300)
