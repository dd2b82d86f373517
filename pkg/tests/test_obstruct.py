from fractions import Fraction as F

import pytest

from thetacharge import (
    BundleTopology,
    HolonomyClass,
    an_form,
    chern_weil_charge,
    flat_constraints,
    obstruction_diagonal,
    obstruction_general,
    witness_enumerate,
)


class TestFlatConstraints:
    def test_zero_holonomy(self):
        H = HolonomyClass((F(0), F(0)))
        sol = flat_constraints(H, 5)
        assert sol.l == (F(0), F(0))
        assert sol.k == 0
        assert sol.consistent

    def test_balanced_failure_reported_not_raised(self):
        H = HolonomyClass((F(1, 2), F(1, 2)))
        sol = flat_constraints(H, 4)
        assert sol.l == (F(2), F(2))
        assert sol.diagnostics.l_integral
        assert not sol.diagnostics.l_sum_zero
        assert not sol.consistent

    def test_integrality_failure(self):
        H = HolonomyClass((F(2, 3), F(1, 3), F(0)))
        sol = flat_constraints(H, 2)
        assert sol.l == (F(4, 3), F(2, 3), F(0))
        assert not sol.diagnostics.l_integral

    def test_zero_self_intersection(self):
        H = HolonomyClass((F(3, 4), F(1, 4)))
        sol = flat_constraints(H, 0)
        assert sol.l == (F(0), F(0))
        assert sol.k == 0
        assert sol.consistent

    def test_forced_instanton_number(self):
        H = HolonomyClass((F(1, 2), F(1, 2)))
        sol = flat_constraints(H, 4)
        # k = -sum(l^2)/(2 sigma) = -(4+4)/8
        assert sol.k == -1

    def test_round_trip_charge_vanishes(self):
        # whenever the diagnostics pass, the reconstructed bundle is flat
        cases = [
            (HolonomyClass((F(0), F(0), F(0))), 3),
            (HolonomyClass((F(0),) * 2), -5),
            (HolonomyClass((F(2, 3), F(1, 3), F(0))), 0),
            (HolonomyClass((F(5, 6), F(1, 2), F(1, 3), F(1, 3))), 0),
        ]
        for H, sigma in cases:
            sol = flat_constraints(H, sigma)
            assert sol.consistent
            B = BundleTopology(int(sol.k), tuple(int(v) for v in sol.l), sigma)
            assert chern_weil_charge(B, H) == 0

    def test_algebraic_round_trip_without_integrality(self):
        # the identity behind the round trip holds before any rounding
        for H, sigma in [
            (HolonomyClass((F(1, 2), F(1, 2))), 4),
            (HolonomyClass((F(2, 3), F(1, 3), F(0))), 2),
            (HolonomyClass((F(3, 4), F(1, 4))), -6),
        ]:
            sol = flat_constraints(H, sigma)
            value = (sol.k + sum(a * li for a, li in zip(H.alpha, sol.l))
                     - F(sigma) * sum(a * a for a in H.alpha) / 2)
            assert value == 0


class TestObstructionDiagonal:
    def test_sigma_three_obstructed(self):
        rep = obstruction_diagonal(1, 3)
        assert rep.verdict == "Obstructed"
        assert rep.bound == 9
        assert rep.witnesses == ()

    def test_sigma_two_obstructed(self):
        rep = obstruction_diagonal(1, 2)
        assert rep.verdict == "Obstructed"
        assert rep.bound == 4

    def test_sigma_four_witness(self):
        rep = obstruction_diagonal(1, 4)
        assert rep.verdict == "Inconclusive"
        assert rep.witnesses == ((4, 2),)

    def test_negative_sigma_matches_positive(self):
        a = obstruction_diagonal(1, -4)
        b = obstruction_diagonal(1, 4)
        assert a.verdict == b.verdict
        assert a.witnesses == b.witnesses

    def test_report_dict_shape(self):
        d = obstruction_diagonal(2, 3).as_dict()
        assert d["group"] == "SU(3)"
        assert d["case"] == "diagonal"
        assert d["bound"] == 18
        assert d["verdict"] in ("Obstructed", "Inconclusive")
        assert isinstance(d["hypotheses"], list)
        for w in d["witnesses"]:
            assert set(w) == {"N", "count"}

    def test_input_validation(self):
        with pytest.raises(ValueError):
            obstruction_diagonal(0, 3)
        with pytest.raises(ValueError):
            obstruction_diagonal(1, 0)


class TestObstructionGeneral:
    def test_rank_one_cases_coincide(self):
        for sigma in (2, 3, 4, 5):
            d = obstruction_diagonal(1, sigma)
            g = obstruction_general(1, sigma)
            assert d.verdict == g.verdict
            assert d.bound == g.bound
            assert d.witnesses == g.witnesses

    def test_unit_self_intersection_scans_everything(self):
        # sigma = 1 admits every N below the bound, so the witness list
        # pins down exactly which N carry nonzero counts
        rep = obstruction_general(2, 1)
        assert rep.bound == 3
        assert rep.witnesses == ((1, 2),)

    def test_rank_two_sigma_two(self):
        rep = obstruction_general(2, 2)
        assert rep.bound == 12
        assert rep.verdict == "Inconclusive"
        assert (4, 2) in rep.witnesses
        witness_ns = [w[0] for w in rep.witnesses]
        assert all(N % 2 == 0 and N < 12 for N in witness_ns)

    def test_witness_counts_match_form_counts(self):
        from thetacharge import nonzero_form_count
        rep = obstruction_general(3, 4)
        Q = an_form(3)
        for N, count in rep.witnesses:
            assert count == nonzero_form_count(Q, N) > 0


class TestWitnessEnumerate:
    def test_rank_one_examples(self):
        assert witness_enumerate(1, 3) == []
        assert witness_enumerate(1, 4) == [(2,)]
        assert witness_enumerate(2, -2) == []

    def test_sign_convention(self):
        for vec in witness_enumerate(2, -5):
            assert all(v < 0 for v in vec)
        for vec in witness_enumerate(2, 5):
            assert all(v > 0 for v in vec)

    def test_both_signs_superset(self):
        narrow = set(witness_enumerate(1, 4))
        wide = set(witness_enumerate(1, 4, both_signs=True))
        assert narrow <= wide
        assert (-2,) in wide

    def test_quadratic_value_below_general_bound(self):
        for n in (1, 2, 3):
            for sigma in (2, 3, 4, 5, 6, -3):
                Q = an_form(n)
                for vec in witness_enumerate(n, sigma):
                    N = Q.value(vec) // 2
                    assert 0 < N < n * (n + 1) // 2 * sigma * sigma
                    assert N % abs(sigma) == 0

    def test_nonempty_forces_inconclusive(self):
        for n in (1, 2, 3):
            for sigma in [s for s in range(-6, 7) if s]:
                if witness_enumerate(n, sigma):
                    rep = obstruction_general(n, sigma)
                    assert rep.verdict == "Inconclusive", (n, sigma)

    def test_vectors_realize_nonzero_representations(self):
        from thetacharge import brute_form_count
        Q = an_form(2)
        for vec in witness_enumerate(2, 3):
            N = Q.value(vec) // 2
            assert brute_form_count(Q, N, require_nonzero=True) > 0
