"""Quadrature oracle tests: convergence-region gates, agreement with the
closed form on the full admissible grid, mesh-refinement monotonicity,
determinism, and the vanishing-integral checks."""

from fractions import Fraction
from itertools import product

import pytest

from branchzeta.errors import ConvergenceFailure, DomainError
from branchzeta.gammaratio import RnmParams, rnm_closed_form
from branchzeta.quadrature import (
    QuadConfig,
    radial_mass,
    rnm_quadrature,
    vanishing_integral_check,
    vanishing_symbolic_cancellation,
)

GRID_PAIRS = [
    (Fraction(-3, 5), Fraction(-7, 10)),
    (Fraction(-2, 3), Fraction(-2, 3)),
    (Fraction(-11, 20), Fraction(-19, 20)),
]


def in_convergence_region(alpha: Fraction, n: int, beta: Fraction, m: int) -> bool:
    return (
        2 * alpha + n > -2
        and 2 * beta + m > -2
        and 2 * alpha + n + 2 * beta + m < -2
    )


class TestConfig:
    def test_defaults(self):
        cfg = QuadConfig()
        assert cfg.rel_tol == 1e-5
        assert cfg.r_max == 1e3

    @pytest.mark.parametrize(
        "bad",
        [
            dict(rel_tol=0.0),
            dict(rel_tol=-1e-3),
            dict(r_max=1.5),
            dict(zero_split=0.7),
            dict(one_split=0.0),
            dict(max_subdivisions=2),
        ],
    )
    def test_invalid(self, bad):
        with pytest.raises(DomainError):
            QuadConfig(**bad)


class TestGates:
    def test_total_power_gate(self):
        # Re sum = -0.4 is not below -2
        p = RnmParams(alpha=Fraction(-1, 10), n=0, beta=Fraction(-1, 10), m=0, lam=1.0)
        with pytest.raises(DomainError):
            rnm_quadrature(p)

    def test_shifted_case_outside_region(self):
        # 2*(-3/5)+1 + 2*(-7/10) = -1.6 > -2: the oracle's own precondition
        # excludes this parameter point, closed form only
        p = RnmParams(alpha=Fraction(-3, 5), n=1, beta=Fraction(-7, 10), m=0, lam=1.0)
        assert rnm_closed_form(p).order == 0
        with pytest.raises(DomainError):
            rnm_quadrature(p)

    def test_alpha_gate(self):
        p = RnmParams(alpha=Fraction(-3, 2), n=0, beta=Fraction(-3, 5), m=0, lam=1.0)
        with pytest.raises(DomainError):
            rnm_quadrature(p)

    def test_beta_gate(self):
        p = RnmParams(alpha=Fraction(-4, 5), n=2, beta=Fraction(-19, 20), m=-1, lam=1.0)
        with pytest.raises(DomainError):
            rnm_quadrature(p)

    def test_lambda_gate(self):
        for lam in (-1.0, 1 + 1j):
            p = RnmParams(alpha=Fraction(-3, 5), n=0, beta=Fraction(-3, 5), m=0, lam=lam)
            with pytest.raises(DomainError):
                rnm_quadrature(p)

    def test_budget_exhaustion(self):
        # (2 beta + m) + 2 = 0.1 needs hundreds of shells; an 8-shell budget
        # cannot certify the singular core
        p = RnmParams(alpha=Fraction(-11, 20), n=0, beta=Fraction(-19, 20), m=0, lam=1.0)
        with pytest.raises(ConvergenceFailure):
            rnm_quadrature(p, QuadConfig(max_subdivisions=8))


class TestOracleAgreement:
    def test_grid_intersection_is_nm_zero(self):
        # the reference grid n, m in {-2..2}^2 meets the convergence region
        # only at n = m = 0 for all three (alpha, beta) pairs
        admissible = set()
        for (a, b), n, m in product(GRID_PAIRS, range(-2, 3), range(-2, 3)):
            if in_convergence_region(a, n, b, m):
                admissible.add((a, b, n, m))
        assert admissible == {(a, b, 0, 0) for (a, b) in GRID_PAIRS}

    @pytest.mark.parametrize("pair", GRID_PAIRS, ids=str)
    @pytest.mark.parametrize("lam", [1.0, 2.0])
    def test_grid_agreement(self, pair, lam):
        a, b = pair
        p = RnmParams(alpha=a, n=0, beta=b, m=0, lam=lam)
        closed = rnm_closed_form(p)
        assert closed.order == 0
        quad = rnm_quadrature(p)
        rel = abs(quad - closed.value) / abs(closed.value)
        assert rel <= 1e-4, (pair, lam, rel)

    @pytest.mark.parametrize(
        "kw",
        [
            dict(alpha=Fraction(-4, 5), n=1, beta=Fraction(-9, 10), m=0, lam=1.0),
            dict(alpha=Fraction(-4, 5), n=0, beta=Fraction(-9, 10), m=1, lam=1.0),
            dict(alpha=Fraction(1, 5), n=-1, beta=Fraction(-9, 10), m=0, lam=2.0),
            dict(alpha=Fraction(-4, 5), n=0, beta=Fraction(-1, 4), m=-1, lam=1.0),
        ],
    )
    def test_oscillatory_cases(self, kw):
        # nonzero Fourier index n and binomial index m inside the region
        p = RnmParams(**kw)
        assert in_convergence_region(p.alpha, p.n, p.beta, p.m)
        closed = rnm_closed_form(p)
        assert closed.order == 0
        quad = rnm_quadrature(p)
        rel = abs(quad - closed.value) / abs(closed.value)
        assert rel <= 1e-4, (kw, rel)

    def test_lambda_only_scales_prefactor(self):
        a, b = Fraction(-3, 5), Fraction(-7, 10)
        q1 = rnm_quadrature(RnmParams(alpha=a, n=0, beta=b, m=0, lam=1.0))
        q2 = rnm_quadrature(RnmParams(alpha=a, n=0, beta=b, m=0, lam=2.0))
        scale = 2.0 ** -(2 * float(a) + 0 + 2)
        assert abs(q2 - q1 * scale) <= 1e-14 * abs(q1)

    def test_smaller_r_max_still_converges(self):
        p = RnmParams(alpha=Fraction(-2, 3), n=0, beta=Fraction(-2, 3), m=0, lam=1.0)
        closed = rnm_closed_form(p).value
        quad = rnm_quadrature(p, QuadConfig(r_max=4.0))
        assert abs(quad - closed) / abs(closed) <= 1e-4


class TestRefinement:
    @pytest.mark.parametrize(
        "kw",
        [
            dict(alpha=Fraction(-3, 5), n=0, beta=Fraction(-7, 10), m=0, lam=1.0),
            dict(alpha=Fraction(-3, 5), n=0, beta=Fraction(-7, 10), m=0, lam=2.0),
            dict(alpha=Fraction(-2, 3), n=0, beta=Fraction(-2, 3), m=0, lam=1.0),
            dict(alpha=Fraction(-11, 20), n=0, beta=Fraction(-19, 20), m=0, lam=1.0),
            dict(alpha=Fraction(-4, 5), n=1, beta=Fraction(-9, 10), m=0, lam=1.0),
        ],
    )
    def test_halving_rel_tol_never_increases_deviation(self, kw):
        p = RnmParams(**kw)
        closed = rnm_closed_form(p).value
        devs = []
        rel_tol = 1e-3
        for _ in range(6):
            q = rnm_quadrature(p, QuadConfig(rel_tol=rel_tol))
            devs.append(abs(q - closed) / abs(closed))
            rel_tol /= 2
        for coarse, fine in zip(devs, devs[1:]):
            assert fine <= coarse, devs

    def test_bit_identical_reruns(self):
        p = RnmParams(alpha=Fraction(-2, 3), n=0, beta=Fraction(-2, 3), m=0, lam=1.0)
        runs = {rnm_quadrature(p, QuadConfig()) for _ in range(3)}
        assert len(runs) == 1


class TestVanishing:
    @pytest.mark.parametrize(
        "n,alpha,R",
        [(1, Fraction(-1, 4), 1.0), (3, Fraction(-3, 4), 2.0), (-1, Fraction(1, 4), 1.5)],
    )
    def test_angular_orthogonality(self, n, alpha, R):
        res = vanishing_integral_check(n, alpha, R)
        mass = radial_mass(n, alpha, R)
        assert mass > 0
        assert abs(res) <= 1e-8 * mass

    def test_radial_mass_closed_form(self):
        # 2 pi R^{2a+n+2} / (2a+n+2) at n=1, a=-1/4, R=1
        import math

        assert abs(radial_mass(1, Fraction(-1, 4), 1.0) - 2 * math.pi / 2.5) <= 1e-14

    def test_rejects_n_zero(self):
        with pytest.raises(DomainError):
            vanishing_integral_check(0, Fraction(-1, 4), 1.0)

    def test_rejects_nonintegrable(self):
        with pytest.raises(DomainError):
            vanishing_integral_check(-2, Fraction(-1, 3), 1.0)
        with pytest.raises(DomainError):
            vanishing_integral_check(1, Fraction(-1, 4), -1.0)

    def test_symbolic_cancellation_exact(self):
        for alpha in [Fraction(-1, 4), Fraction(-3, 4), Fraction(2, 3), Fraction(5)]:
            out = vanishing_symbolic_cancellation(alpha)
            assert isinstance(out, Fraction)
            assert out == 0

    def test_symbolic_pole_rejected(self):
        with pytest.raises(DomainError):
            vanishing_symbolic_cancellation(Fraction(-1))
