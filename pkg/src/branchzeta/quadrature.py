"""Numerical oracle for the residue kernel and the vanishing integral.

rnm_quadrature integrates z^{alpha'} conj(z)^alpha (1-lambda z)^{beta'}
(1-conj(lambda z))^beta over the complex plane in polar coordinates
lambda z = r e^{i theta}, with the measure convention dz dconj(z) =
-2i r dr dtheta.  For real lambda > 0 and integer n = alpha' - alpha,
m = beta' - beta the integrand reduces to

    r^{2 alpha + n + 1} e^{i n theta} s^beta (1 - r e^{i theta})^m,
    s = |1 - r e^{i theta}|^2 = (1-r)^2 + 4 r sin^2(theta/2),

which is branch-free.  Conjugate symmetry in theta folds the angular range
to [0, pi] with twice the real part.  The plan is deterministic: dyadic
panels graded toward r = 0, L-infinity dyadic shells around the integrable
singularity at (r, theta) = (1, 0), smooth mid-range rectangles, and dyadic
radial panels outward from cfg.r_max until an analytic power-law remainder
bound certifies the neglected tail below tolerance.  All omitted regions
(shell core, innermost disk, far tail) are controlled by explicit bounds,
so tightening rel_tol only ever adds panels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceFailure, DomainError
from .gammaratio import RnmParams


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and mesh geometry for the quadrature oracle.

    rel_tol: target relative accuracy; each neglected-region bound is pushed
        below rel_tol/10 of the accumulated integral.
    r_max: radius (in the scaled variable r = |lambda z|) where the finely
        subdivided region ends; dyadic extension panels continue past it
        until the analytic tail bound is satisfied.  The z-plane requirement
        r_max > 2/|lambda| is exactly r_max > 2 in this variable.
    max_subdivisions: cap on each refinement loop (inner grading, singular
        shells, tail doublings) before ConvergenceFailure.
    zero_split: outer radius of the graded region around r = 0.
    one_split: half-width of the singular box around (r, theta) = (1, 0).
    """

    rel_tol: float = 1e-5
    r_max: float = 1e3
    max_subdivisions: int = 512
    zero_split: float = 0.5
    one_split: float = 0.5

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if not self.r_max > 2:
            raise DomainError("r_max must exceed 2 (i.e. 2/|lambda| in z units)")
        if not (0 < self.zero_split <= 0.5 and 0 < self.one_split <= 0.5):
            raise DomainError("split radii must lie in (0, 1/2]")
        if self.max_subdivisions < 8:
            raise DomainError("max_subdivisions too small")


@lru_cache(maxsize=None)
def _gauss(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def _panel(f, a, b, c, d, order=24, sub=2):
    """Tensor Gauss-Legendre of f over [a,b] x [c,d], split sub x sub."""
    x, w = _gauss(order)
    total = 0.0
    rs = np.linspace(a, b, sub + 1)
    ts = np.linspace(c, d, sub + 1)
    for i in range(sub):
        half_r = 0.5 * (rs[i + 1] - rs[i])
        mid_r = 0.5 * (rs[i + 1] + rs[i])
        rn = mid_r + half_r * x
        for j in range(sub):
            half_t = 0.5 * (ts[j + 1] - ts[j])
            mid_t = 0.5 * (ts[j + 1] + ts[j])
            tn = mid_t + half_t * x
            vals = f(rn[:, None], tn[None, :])
            total += half_r * half_t * float(w @ vals @ w)
    return total


def _integrand(p0: float, beta: float, n: int, m: int):
    """Folded integrand on theta in [0, pi] (the x2 fold factor is applied
    by the caller): r^{p0} s^beta Re[e^{i n theta} (1 - r e^{i theta})^m],
    s = (1-r)^2 + 4 r sin^2(theta/2)."""

    def f(r, t):
        sh = np.sin(0.5 * t)
        s = (1.0 - r) ** 2 + 4.0 * r * sh * sh
        acc = np.power(r, p0) * np.power(s, beta)
        if n == 0 and m == 0:
            return acc
        phase = np.exp(1j * n * t)
        if m != 0:
            lin = (1.0 - r) + 2.0 * r * sh * (sh - 1j * np.cos(0.5 * t))
            phase = phase * lin**m
        return acc * np.real(phase)

    return f


def _integrand_local(p0: float, beta: float, n: int, m: int):
    """Same integrand near the singular point, parametrized by u = r - 1 so
    that (1 - r) = -u stays exact for subdivision depths far below the
    floating-point spacing around r = 1."""

    def f(u, t):
        r = 1.0 + u
        sh = np.sin(0.5 * t)
        s = u * u + 4.0 * r * sh * sh
        acc = np.power(r, p0) * np.power(s, beta)
        if n == 0 and m == 0:
            return acc
        phase = np.exp(1j * n * t)
        if m != 0:
            lin = -u + 2.0 * r * sh * (sh - 1j * np.cos(0.5 * t))
            phase = phase * lin**m
        return acc * np.real(phase)

    return f


def _require_real_positive_lambda(p: RnmParams) -> float:
    lam = complex(p.lam)
    if lam.imag != 0 or lam.real <= 0:
        raise DomainError("quadrature oracle requires real lambda > 0")
    return lam.real


def rnm_quadrature(p: RnmParams, cfg: QuadConfig = QuadConfig()) -> complex:
    """Numerically integrate the kernel in its absolute-convergence region.

    Preconditions (DomainError otherwise): Re(alpha'+alpha) > -2,
    Re(beta'+beta) > -2, Re(alpha'+alpha+beta'+beta) < -2, lambda real > 0.
    Raises ConvergenceFailure when a refinement loop exhausts its budget.
    Deterministic: fixed mesh construction and summation order.
    """
    lam = _require_real_positive_lambda(p)
    alpha = float(p.alpha)
    beta = float(p.beta)
    n, m = p.n, p.m
    two_a = 2.0 * alpha + n
    two_b = 2.0 * beta + m
    if not two_a > -2:
        raise DomainError(f"Re(alpha'+alpha) = {two_a} must exceed -2")
    if not two_b > -2:
        raise DomainError(f"Re(beta'+beta) = {two_b} must exceed -2")
    if not two_a + two_b < -2:
        raise DomainError(f"Re(alpha'+alpha+beta'+beta) = {two_a + two_b} must be below -2")

    p0 = two_a + 1.0  # radial power at r = 0, > -1
    w = two_b  # local exponent at (r, theta) = (1, 0), > -2
    pt = two_a + two_b + 1.0  # radial power at infinity, < -1
    f = _integrand(p0, beta, n, m)
    floc = _integrand_local(p0, beta, n, m)
    eps_frac = cfg.rel_tol / 10.0
    d0 = cfg.zero_split
    d1 = cfg.one_split
    pieces: list[float] = []

    # fixed smooth mid-range rectangles
    if d0 < 1.0 - d1:
        pieces.append(_panel(f, d0, 1.0 - d1, 0.0, math.pi, sub=4))
    pieces.append(_panel(floc, -d1, d1, d1, math.pi, sub=4))
    pieces.append(_panel(f, 1.0 + d1, 2.0, 0.0, math.pi, sub=4))

    # dyadic radial panels from 2 out to r_max
    r_lo = 2.0
    while r_lo < cfg.r_max:
        r_hi = min(2.0 * r_lo, cfg.r_max)
        pieces.append(_panel(f, r_lo, r_hi, 0.0, math.pi, sub=2))
        r_lo = r_hi

    # neglected-region bounds; all constants are crude upper envelopes
    def inner_bound(r_in: float) -> float:
        # |s^beta (1-re^{it})^m| <= cw on r <= 1/2
        cw = (1.0 - r_in) ** w if w < 0 else (1.0 + r_in) ** w
        return math.pi * cw * r_in ** (p0 + 1.0) / (p0 + 1.0)

    def core_bound(h: float) -> float:
        cr = max((1.0 - d1) ** p0, (1.0 + d1) ** p0)
        cw = math.sqrt(2.0 / math.pi**2) if w < 0 else 2.0
        return cr * cw**w * 4.0 * h ** (w + 2.0) / (w + 2.0)

    def tail_bound(r_out: float) -> float:
        c = 2.0 ** (2.0 * abs(beta)) * 2.0 ** abs(m)
        return math.pi * c * r_out ** (pt + 1.0) / (-(pt + 1.0))

    # refinement state
    inner_lo = d0  # inner graded panels cover [inner_lo, d0]
    shells = 0  # shells cover max(|r-1|, theta) in [h_shells, d1]
    tail_hi = r_lo  # integrated out to tail_hi

    def add_inner():
        nonlocal inner_lo
        nxt = inner_lo / 2.0
        pieces.append(_panel(f, nxt, inner_lo, 0.0, math.pi, sub=2))
        inner_lo = nxt

    def add_shell():
        # one L-infinity dyadic shell around (1, 0), in local coordinates
        nonlocal shells
        h = d1 * 2.0**-shells
        hh = h / 2.0
        pieces.append(_panel(floc, -h, -hh, 0.0, h, sub=2))
        pieces.append(_panel(floc, hh, h, 0.0, h, sub=2))
        pieces.append(_panel(floc, -hh, hh, hh, h, sub=2))
        shells += 1

    def add_tail():
        nonlocal tail_hi
        nxt = 2.0 * tail_hi
        pieces.append(_panel(f, tail_hi, nxt, 0.0, math.pi, sub=2))
        tail_hi = nxt

    for _ in range(8):
        add_inner()
        add_shell()

    for _ in range(16):
        scale = max(abs(math.fsum(pieces)), 1e-300)
        tol = eps_frac * scale
        refined = False
        while inner_bound(inner_lo) >= tol:
            add_inner()
            refined = True
            if d0 / inner_lo > 2.0**cfg.max_subdivisions:
                raise ConvergenceFailure("inner grading budget exhausted")
        while core_bound(d1 * 2.0**-shells) >= tol:
            add_shell()
            refined = True
            if shells > cfg.max_subdivisions:
                raise ConvergenceFailure("singular-shell budget exhausted")
        while tail_bound(tail_hi) >= tol:
            add_tail()
            refined = True
            if tail_hi > 1e60:
                raise ConvergenceFailure("tail decays too slowly to certify")
        if not refined:
            break
    else:
        raise ConvergenceFailure("refinement did not stabilize")

    total = 2.0 * math.fsum(pieces)  # theta fold
    return -2j * lam ** (-(two_a + 2.0)) * total


def vanishing_integral_check(n: int, alpha, R: float, cfg: QuadConfig = QuadConfig()) -> complex:
    """Integrate z^{alpha+n} conj(z)^alpha over |z| <= R numerically.

    The angular factor integrates to exactly zero for n != 0; the returned
    magnitude is the numerical residual, to be compared against
    1e-8 x (radial mass).  The n = 0 case is analytic-continuation
    cancellation, handled symbolically by vanishing_symbolic_cancellation.
    """
    n = int(n)
    if n == 0:
        raise DomainError("n = 0 is checked symbolically, not numerically")
    a = float(alpha)
    power = 2.0 * a + n + 1.0
    if not power > -1:
        raise DomainError(f"radial power {power} is not integrable at 0")
    if not R > 0:
        raise DomainError("R must be positive")

    x, wts = _gauss(24)

    def radial(g):
        total = []
        lo_edge = R / 2.0**40
        edges = [0.0, lo_edge]
        while edges[-1] < R:
            edges.append(min(2.0 * edges[-1], R))
        for a_, b_ in zip(edges[:-1], edges[1:]):
            half, mid = 0.5 * (b_ - a_), 0.5 * (b_ + a_)
            rn = mid + half * x
            total.append(half * float(wts @ g(rn)))
        return math.fsum(total)

    rad = radial(lambda r: np.power(r, power))
    panels = max(8, 4 * abs(n))
    ang_parts = []
    for k in range(panels):
        a_, b_ = 2.0 * math.pi * k / panels, 2.0 * math.pi * (k + 1) / panels
        half, mid = 0.5 * (b_ - a_), 0.5 * (b_ + a_)
        tn = mid + half * x
        ang_parts.append(half * complex(np.sum(wts * np.exp(1j * n * tn))))
    angular = sum(ang_parts)
    return -2j * rad * angular


def radial_mass(n: int, alpha, R: float) -> float:
    """2 pi int_0^R r^{2 alpha + n + 1} dr, the comparison scale for the
    vanishing check (closed form)."""
    a = float(alpha)
    power = 2.0 * a + n + 2.0
    if not power > 0:
        raise DomainError("radial mass diverges")
    return 2.0 * math.pi * R**power / power


def vanishing_symbolic_cancellation(alpha) -> Fraction:
    """Exact cancellation of the two analytic continuations at n = 0.

    Both continuations of the radial integral carry the coefficient
    -2 pi i R^{2(alpha+1)}/(alpha+1) with opposite signs; their sum is
    identically zero as an exact rational coefficient, for every R.
    Returns that coefficient sum (always Fraction(0)).
    """
    a = Fraction(alpha)
    if a == -1:
        raise DomainError("alpha = -1 is outside the cancellation identity")
    inward = Fraction(-2) / (a + 1)
    outward = Fraction(2) / (a + 1)
    return inward + outward
