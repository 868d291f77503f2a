"""Acceptance suite: one test per shipped criterion, asserting the stated
tolerance and runtime budget.  Exact criteria run in Fraction arithmetic with
zero tolerance; numeric criteria assert their relative-error bounds."""

import time
from fractions import Fraction
from itertools import product

from branchzeta.branch import (
    CharSeq,
    PlaneSemigroup,
    charseq_from_semigroup,
    derive_numerics,
)
from branchzeta.curves import (
    SparsePoly,
    deformation_family,
    monomial_curve_equations,
    plane_equation,
)
from branchzeta.gammaratio import (
    RnmParams,
    hypergeom_sum_at_1,
    rnm_closed_form,
    symmetry_check,
)
from branchzeta.poles import (
    candidate_pole,
    log_canonical_threshold,
    pi_multisets,
    yano_multiset,
)
from branchzeta.quadrature import (
    radial_mass,
    rnm_quadrature,
    vanishing_integral_check,
    vanishing_symbolic_cancellation,
)
from branchzeta.toric import linear_forms, toric_steps

GRID_PAIRS = [
    (Fraction(-3, 5), Fraction(-7, 10)),
    (Fraction(-2, 3), Fraction(-2, 3)),
    (Fraction(-11, 20), Fraction(-19, 20)),
]


def in_convergence_region(alpha, n, beta, m):
    return (
        2 * alpha + n > -2
        and 2 * beta + m > -2
        and 2 * alpha + n + 2 * beta + m < -2
    )


def test_criterion_1_quartic_branch_pole_ladder():
    start = time.monotonic()
    bn = derive_numerics(CharSeq(4, (9,)))
    for nu in range(1000):
        assert candidate_pole(bn, 1, nu).sigma == Fraction(-(13 + nu), 36)
    c = candidate_pole(bn, 1, 2)
    assert c.sigma == Fraction(-5, 12)
    assert c.eps1 == Fraction(-9, 4)
    assert c.eps2 == Fraction(-4, 3)
    # residue kernel at this pole: Gamma pairs (eps1+3, -eps1-2),
    # (eps2+2, -eps2-1), (sigma, 1-sigma), i.e. the closed form at
    # (alpha, n, beta, m) = (eps1+2, 0, eps2+1, 0)
    rv = rnm_closed_form(RnmParams(alpha=c.eps1 + 2, n=0, beta=c.eps2 + 1, m=0))
    assert rv.order == 0
    assert rv.value is not None
    assert 0 < abs(rv.value) < float("inf")
    assert time.monotonic() - start < 1.0


def test_criterion_2_corpus_identities_exact(corpus_numerics):
    start = time.monotonic()
    for bn in corpus_numerics:
        # (a) residue-number relation, (b) integrality equivalences
        for i in range(1, bn.g + 1):
            betabar, e_prev = bn.gens[i], bn.e[i - 1]
            for nu in range(1000):
                c = candidate_pole(bn, i, nu)
                assert c.eps1 + c.eps2 + c.eps3 + nu + 2 == 0
                assert ((betabar * c.sigma).denominator == 1) == (
                    c.eps1.denominator == 1
                )
                assert ((e_prev * c.sigma).denominator == 1) == (
                    c.eps2.denominator == 1
                )

        # (c) multiset size, (d) generating-series match, positive counts
        _, merged = pi_multisets(bn)
        assert merged.total == bn.milnor == bn.conductor
        assert merged.entries == yano_multiset(bn).entries
        assert all(mult > 0 for mult in merged.entries.values())

        # (e) total-transform order identity and extremal bounds on
        # exhaustive exponent tuples (entries <= 3), slices nu <= 40
        steps = toric_steps(bn)
        for i in range(1, bn.g + 1):
            st = steps[i - 1]
            dd = st.c * bn.nn[i - 1] * bn.mbar[i - 1] + st.d
            aa = st.a * bn.nn[i - 1] * bn.mbar[i - 1] + st.b
            for j in range(i, bn.g + 1):
                tail = bn.nprod(i + 1, j)
                slices = {}
                for ks in product(range(4), repeat=j + 1):
                    rho, a, cc = linear_forms(bn, i, j, ks)
                    cross = sum(
                        bn.nprod(i + 1, l - 1) * ks[l] for l in range(i + 1, j + 1)
                    )
                    assert a + cc + cross == rho + tail
                    if 0 <= rho <= 40:
                        slices.setdefault(rho, []).append((a, cc))
                for nu, pairs in slices.items():
                    assert min(p[0] for p in pairs) >= Fraction(st.a, st.n) * nu
                    assert min(p[1] for p in pairs) >= Fraction(dd, bn.mbar[i]) * nu
                    assert (
                        max(p[0] for p in pairs)
                        <= Fraction(aa, bn.mbar[i]) * nu + tail
                    )
                    assert (
                        max(p[1] for p in pairs)
                        <= Fraction(st.c, st.n) * nu + tail
                    )
    assert time.monotonic() - start < 120.0


def test_criterion_3_cusp_goldens_exact():
    bn = derive_numerics(CharSeq(2, (3,)))
    _, merged = pi_multisets(bn)
    assert merged.entries == {Fraction(5, 6): 1, Fraction(7, 6): 1}
    assert log_canonical_threshold(bn) == Fraction(5, 6)
    assert bn.milnor == 2


def test_criterion_4_quadrature_grid_and_symmetry():
    cases = [
        (alpha, n, beta, m, lam)
        for (alpha, beta) in GRID_PAIRS
        for n in range(-2, 3)
        for m in range(-2, 3)
        for lam in (1.0, 2.0)
        if in_convergence_region(alpha, n, beta, m)
    ]
    # the grid meets the oracle's admissible region only at n = m = 0
    assert len(cases) == 6
    for alpha, n, beta, m, lam in cases:
        p = RnmParams(alpha=alpha, n=n, beta=beta, m=m, lam=lam)
        t0 = time.monotonic()
        got = rnm_quadrature(p)
        elapsed = time.monotonic() - t0
        ref = rnm_closed_form(p).value
        assert abs(got - ref) <= 1e-4 * abs(ref)
        assert elapsed <= 60.0
    for (alpha, beta), n, m, lam in product(
        GRID_PAIRS, range(-2, 3), range(-2, 3), (1.0, 2.0)
    ):
        p = RnmParams(alpha=alpha, n=n, beta=beta, m=m, lam=lam)
        assert symmetry_check(p, rel_tol=1e-10)


def test_criterion_5_hypergeometric_partial_sums():
    for a, b, c in [
        (Fraction(1, 2), Fraction(1, 2), Fraction(2)),
        (Fraction(1, 3), Fraction(2, 3), Fraction(2)),
    ]:
        _, _, relerr = hypergeom_sum_at_1(a, b, c, 10**4)
        assert relerr <= 1e-3
    _, _, relerr = hypergeom_sum_at_1(1, 1, 3, 10**4)
    # the (1,1,3) series telescopes: the tail after K terms is exactly
    # 1/(K+1), so relerr at K = 1e4 is 1/10001
    assert relerr <= 1e-6


def test_criterion_6_vanishing_integral():
    for n, alpha, R in [(1, Fraction(-1, 4), 1.0), (3, Fraction(-3, 4), 2.0)]:
        residual = vanishing_integral_check(n, alpha, R)
        mass = radial_mass(n, alpha, R)
        assert mass > 0
        assert abs(residual) <= 1e-8 * mass
    out = vanishing_symbolic_cancellation(Fraction(-1, 4))
    assert isinstance(out, Fraction)
    assert out == 0


def test_criterion_7_curve_generation(corpus_numerics):
    bn49 = derive_numerics(CharSeq(4, (9,)))
    assert str(plane_equation(bn49)) == "y^4 - x^9"

    bn4613 = derive_numerics(charseq_from_semigroup(PlaneSemigroup((4, 6, 13))))
    x = SparsePoly.variable(("x", "y"), "x")
    y = SparsePoly.variable(("x", "y"), "y")
    assert plane_equation(bn4613) == (y**2 - x**3) ** 2 - x**5 * y

    for bn in corpus_numerics:
        for h in monomial_curve_equations(bn):
            assert h.substitute_powers(bn.gens).is_zero()

    fam = deformation_family(bn49, weight_cutoff=38)
    assert {t.exponents for t in fam.terms} == {(7, 1), (5, 2)}
