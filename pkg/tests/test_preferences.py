import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from edurace.economy import Economy, SkillDistribution, Technology, income_moments
from edurace.errors import DegenerateModelError, ModelDomainError
from edurace.montecarlo import SimulationConfig, simulate
from edurace.optimize import golden_section_max
from edurace.preferences import (
    Preference, cutoff_risk_aversion, expected_utility, log_abs_expected_utility, optimal_plateau,
    utility_curvature_c, utility_gradient_c, utility_ratio,
)

SKILLS = SkillDistribution(100, 15)


def econ(b, c, skills=SKILLS):
    return Economy(Technology.from_log(b, c), skills)


class TestPreference:
    @pytest.mark.parametrize("phi", [1.0, 0.0, -2.0, math.inf])
    def test_rejected(self, phi):
        with pytest.raises(ModelDomainError):
            Preference(phi)

    def test_bypass_for_risk_neutrality(self):
        assert Preference._unchecked(0.0).phi == 0.0


class TestExpectedUtility:
    def test_risk_neutral_is_mean_income(self, econ_2024):
        eu = expected_utility(econ_2024, Preference._unchecked(0.0))
        assert eu == pytest.approx(income_moments(econ_2024).mean, rel=1e-14)

    def test_against_monte_carlo(self, econ_2024):
        pref = Preference(2.0)
        s = simulate(econ_2024, SimulationConfig(n=1_000_000, seed=31), pref=pref)
        assert abs(s.utility_mean - expected_utility(econ_2024, pref)) <= 3 * s.utility_std_error

    def test_sign_and_monotonicity_in_b(self):
        pref = Preference(3.0)
        values = [expected_utility(econ(b, 0.0579), pref) for b in (5.0, 5.5, 6.0)]
        assert all(v < 0 for v in values)
        assert abs(values[0]) > abs(values[1]) > abs(values[2])
        assert expected_utility(econ(5.5, 0.0579), Preference(0.5)) > 0

    def test_log_abs(self, econ_2024):
        for phi in (0.5, 2.0, 3.0):
            pref = Preference(phi)
            assert math.exp(log_abs_expected_utility(econ_2024, pref)) == pytest.approx(
                abs(expected_utility(econ_2024, pref)), rel=1e-12)


def _with_c(e, c):
    return Economy(Technology.from_log(e.tech.b_coef, c), e.skills)


class TestGradient:
    def test_against_central_differences(self):
        rng = np.random.default_rng(41)
        for _ in range(200):
            mu, sigma = rng.uniform(1, 10), rng.uniform(0.5, 3)
            phi = rng.choice([rng.uniform(0.1, 0.9), rng.uniform(1.1, 5)])
            e = econ(rng.uniform(-1, 1), rng.uniform(0.05, 1.0), SkillDistribution(mu, sigma))
            pref = Preference(phi)
            c, h = e.tech.c_coef, 1e-6 * max(e.tech.c_coef, 1e-3)
            fd = (expected_utility(_with_c(e, c + h), pref) - expected_utility(_with_c(e, c - h), pref)) / (2 * h)
            assert utility_gradient_c(e, pref) == pytest.approx(fd, rel=1e-6)

    def test_curvature_against_differences(self):
        e, pref = econ(0.0, 0.2, SkillDistribution(2, 1)), Preference(3.0)
        h = 1e-5
        fd = (utility_gradient_c(_with_c(e, 0.2 + h), pref) - utility_gradient_c(_with_c(e, 0.2 - h), pref)) / (2 * h)
        assert utility_curvature_c(e, pref) == pytest.approx(fd, rel=1e-6)


class TestPlateau:
    def test_formula(self):
        assert optimal_plateau(SKILLS, Preference(2.5)) == pytest.approx(100 / (1.5 * 225), rel=1e-15)
        assert optimal_plateau(SKILLS, Preference(2.5)) == pytest.approx(0.296296, abs=1e-6)

    def test_numeric_maximization(self):
        pref = Preference(2.5)
        c_num, _ = golden_section_max(lambda c: expected_utility(econ(5.5, c), pref), 0.01, 1.0, tol=1e-14)
        assert c_num == pytest.approx(optimal_plateau(SKILLS, pref), abs=1e-6)

    def test_cancellation(self):
        assert optimal_plateau(SkillDistribution(4, 2), Preference(2.0)) == pytest.approx(1.0, rel=1e-15)

    def test_unbounded_below_unit_risk_aversion(self):
        assert optimal_plateau(SKILLS, Preference(0.5)) == math.inf

    def test_soc_holds_at_plateau(self):
        for phi in (1.5, 2.5, 4.0):
            pref = Preference(phi)
            c_star = optimal_plateau(SKILLS, pref)
            assert utility_curvature_c(econ(5.5, c_star), pref) < 0
            assert utility_gradient_c(econ(5.5, c_star), pref) == pytest.approx(0.0, abs=1e-12 * abs(
                expected_utility(econ(5.5, c_star), pref)) * 100)

    def test_single_peaked(self):
        pref = Preference(2.5)
        c_star = optimal_plateau(SKILLS, pref)
        below = [expected_utility(econ(5.5, c_star * k), pref) for k in (0.5, 0.9, 1.0)]
        above = [expected_utility(econ(5.5, c_star * k), pref) for k in (1.0, 1.1, 2.0)]
        assert below[0] < below[1] < below[2]
        assert above[0] > above[1] > above[2]

    def test_no_plateau_below_one(self):
        pref = Preference(0.5)
        cs = np.linspace(0.01, 10, 200)
        # positive utilities: compare logs, the levels overflow beyond c ~ 1.5
        values = [log_abs_expected_utility(econ(5.5, c), pref) for c in cs]
        assert np.all(np.diff(values) > 0)
        assert all(utility_gradient_c(econ(5.5, c), pref) > 0 for c in cs)

    def test_mu_must_be_positive(self):
        with pytest.raises(ModelDomainError):
            optimal_plateau(SkillDistribution(0, 15), Preference(2.0))


E1975 = econ(7.2, 0.0376)
E2024 = econ(5.5, 0.0579)


class TestRatioAndCutoff:
    def test_identity(self):
        assert utility_ratio(E2024, E2024, Preference(3.0)) == 1.0

    def test_matches_quotient(self):
        rng = np.random.default_rng(51)
        for _ in range(100):
            a = econ(rng.uniform(4, 8), rng.uniform(0.01, 0.08))
            b = econ(rng.uniform(4, 8), rng.uniform(0.01, 0.08))
            pref = Preference(rng.choice([0.5, 2.0, 3.0]))
            q = expected_utility(a, pref) / expected_utility(b, pref)
            assert utility_ratio(a, b, pref) == pytest.approx(q, rel=1e-10)

    def test_paper_cutoff(self):
        phi = cutoff_risk_aversion(E2024, E1975)
        assert phi == pytest.approx(2.51, abs=0.02)
        assert utility_ratio(E2024, E1975, Preference(phi)) == pytest.approx(1.0, abs=1e-9)

    def test_direction_at_three(self):
        pref = Preference(3.0)
        # both utilities negative: ratio above one means 2024 is worse
        assert utility_ratio(E2024, E1975, pref) > 1
        assert expected_utility(E1975, pref) > expected_utility(E2024, pref)
        # and below the cutoff 2024 is preferred
        assert expected_utility(E2024, Preference(2.0)) > expected_utility(E1975, Preference(2.0))

    def test_symmetric(self):
        assert cutoff_risk_aversion(E1975, E2024) == pytest.approx(cutoff_risk_aversion(E2024, E1975), rel=1e-14)

    @given(st.floats(4, 8), st.floats(0.01, 0.08), st.floats(4, 8), st.floats(0.01, 0.08))
    def test_indifference_at_cutoff(self, ba, ca, bb, cb):
        a, b = econ(ba, ca), econ(bb, cb)
        if abs(ca - cb) < 1e-3:
            return
        phi = cutoff_risk_aversion(a, b)
        if not (phi > 0 and abs(phi - 1) > 1e-3):
            return
        pref = Preference(phi)
        # relative 1e-9 on E[U] is absolute 1e-9 on its log; levels may overflow
        assert log_abs_expected_utility(a, pref) == pytest.approx(log_abs_expected_utility(b, pref), abs=1e-9)

    def test_equal_c_degenerate(self):
        with pytest.raises(DegenerateModelError):
            cutoff_risk_aversion(econ(5.0, 0.05), econ(6.0, 0.05))

    def test_different_skills_rejected(self):
        other = econ(5.5, 0.0579, SkillDistribution(100, 16))
        with pytest.raises(ModelDomainError):
            utility_ratio(E2024, other, Preference(2.0))
        with pytest.raises(ModelDomainError):
            cutoff_risk_aversion(E2024, other)
