"""Candidate poles of the complex zeta function and everything built on them:
residue numbers, generic pole sets (b-exponents), the Yano exponent multiset,
monodromy-eigenvalue distinctness, and the aggregated branch report.

The candidate attached to rupture divisor i and shift nu is
sigma_{i,nu} = -(m_i + n_1...n_i + nu) / (n_i betabar_i).  A candidate is
excluded when the dead-end divisor (betabar_i sigma integral) or the
previous-step divisor chain (e_{i-1} sigma integral) forces the residue to
vanish; the survivors, written as b-exponents -sigma, form the sets Pi_i.
Everything here is exact rational arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .branch import (
    BranchNumerics,
    CharSeq,
    PlaneSemigroup,
    charseq_from_semigroup,
    derive_numerics,
)
from .errors import IndexOutOfRange, NegativeCoefficient
from .toric import DivisorNumerics, ToricStep, divisor_numerics, toric_steps


class PoleStatus(Enum):
    POLE_CANDIDATE = "PoleCandidate"
    EXCLUDED_DEADEND = "ExcludedDeadEnd"
    EXCLUDED_PREVIOUS = "ExcludedPrevious"
    EXCLUDED_BOTH = "ExcludedBoth"


@dataclass(frozen=True)
class CandidatePole:
    i: int
    nu: int
    sigma: Fraction
    eps1: Fraction
    eps2: Fraction
    eps3: Fraction
    status: PoleStatus

    def __post_init__(self):
        assert self.eps1 + self.eps2 + self.eps3 + self.nu + 2 == 0


@dataclass
class ExponentMultiset:
    """Map from exact rational exponent to multiplicity.

    Signed counts are allowed transiently while assembling Yano's series;
    finalize() enforces non-negativity and drops zeros.
    """

    entries: dict = field(default_factory=dict)

    def add(self, exponent: Fraction, mult: int = 1) -> None:
        cur = self.entries.get(exponent, 0) + mult
        if cur == 0:
            self.entries.pop(exponent, None)
        else:
            self.entries[exponent] = cur

    def merge(self, other: "ExponentMultiset") -> None:
        for exp, mult in other.entries.items():
            self.add(exp, mult)

    def finalize(self) -> "ExponentMultiset":
        for exp, mult in self.entries.items():
            if mult < 0:
                raise NegativeCoefficient(exp, mult)
        return self

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self) -> list[tuple[Fraction, int]]:
        return sorted(self.entries.items())


def residue_numbers(bn: BranchNumerics, steps, i: int, nu: int) -> tuple[Fraction, Fraction]:
    """The two residue numbers (eps_{1,nu}, eps_{2,nu}) at rupture index i.

    eps1 + 1 = (-a_i nu + 1)/n_i and
    eps2 + 1 = (-(c_i n_{i-1} mbar_{i-1} + d_i) nu
               + m_{i-1} - n_{i-1} mbar_{i-1} + n_1...n_{i-1}) / mbar_i,
    with the boundary conventions n_0 = m_0 = 0, mbar_0 = 1.
    """
    if not (1 <= i <= len(steps)) or nu < 0:
        raise IndexOutOfRange(f"need 1 <= i <= {len(steps)} and nu >= 0, got i={i}, nu={nu}")
    st = steps[i - 1]
    dd = st.c * bn.nn[i - 1] * bn.mbar[i - 1] + st.d
    eps1 = -1 + Fraction(-st.a * nu + 1, st.n)
    top = -dd * nu + bn.mm[i - 1] - bn.nn[i - 1] * bn.mbar[i - 1] + bn.nprod(1, i - 1)
    eps2 = -1 + Fraction(top, bn.mbar[i])
    return eps1, eps2


def candidate_pole(bn: BranchNumerics, i: int, nu: int) -> CandidatePole:
    """Assemble one candidate with its exclusion status.

    Integrality tests reduce to divisibility of r_i + nu: the dead-end value
    betabar_i*sigma is integral iff n_i | (r_i + nu), and e_{i-1}*sigma is
    integral iff mbar_i | (r_i + nu), since n_i betabar_i = e_{i-1} mbar_i.
    """
    if not (1 <= i <= bn.g) or nu < 0:
        raise IndexOutOfRange(f"need 1 <= i <= {bn.g} and nu >= 0, got i={i}, nu={nu}")
    r = bn.mm[i] + bn.nprod(1, i)
    big_n = bn.nn[i] * bn.gens[i]
    sigma = Fraction(-(r + nu), big_n)
    eps1, eps2 = residue_numbers(bn, toric_steps(bn), i, nu)
    eps3 = bn.e[i] * sigma
    dead = (r + nu) % bn.nn[i] == 0
    prev = (r + nu) % bn.mbar[i] == 0
    if dead and prev:
        status = PoleStatus.EXCLUDED_BOTH
    elif dead:
        status = PoleStatus.EXCLUDED_DEADEND
    elif prev:
        status = PoleStatus.EXCLUDED_PREVIOUS
    else:
        status = PoleStatus.POLE_CANDIDATE
    return CandidatePole(i=i, nu=nu, sigma=sigma, eps1=eps1, eps2=eps2, eps3=eps3, status=status)


def pi_multisets(bn: BranchNumerics) -> tuple[list[ExponentMultiset], ExponentMultiset]:
    """Generic pole sets as b-exponents -sigma, one per rupture index, plus
    their merged union.  One full period 0 <= nu < n_i betabar_i per index;
    the survivor count is n_i betabar_i - betabar_i - n_i e_i + e_i and the
    merged total equals the Milnor number."""
    sets = []
    merged = ExponentMultiset()
    for i in range(1, bn.g + 1):
        r = bn.mm[i] + bn.nprod(1, i)
        big_n = bn.nn[i] * bn.gens[i]
        pi_i = ExponentMultiset()
        for nu in range(big_n):
            top = r + nu
            if top % bn.nn[i] == 0 or top % bn.mbar[i] == 0:
                continue
            pi_i.add(Fraction(top, big_n))
        expected = big_n - bn.gens[i] - bn.nn[i] * bn.e[i] + bn.e[i]
        assert pi_i.total == expected, "survivor count disagrees with inclusion-exclusion"
        sets.append(pi_i.finalize())
        merged.merge(pi_i)
    assert merged.total == bn.milnor
    return sets, merged.finalize()


def yano_multiset(bn: BranchNumerics) -> ExponentMultiset:
    """Expand Yano's generating series into an exact exponent multiset.

    Uses (1 - t)/(1 - t^{1/R}) = sum_{j<R} t^{j/R}: each positive block
    contributes exponents (r_i + j)/R_i, each negative block subtracts
    (r'_i + j)/R'_i (the i = 0 block being (2 + j)/n), and the trailing +t
    restores the doubly-subtracted exponent 1.  Raises NegativeCoefficient
    if the signed assembly ever finalizes below zero.
    """
    ms = ExponentMultiset()
    for i in range(1, bn.g + 1):
        # R_i from its defining sum; equals n_i betabar_i (cross-checked)
        top = bn.betas[i - 1] * bn.e[i - 1] + sum(
            bn.betas[l - 1] * (bn.e[l - 1] - bn.e[l]) for l in range(1, i)
        )
        assert top % bn.e[i] == 0
        big_r = top // bn.e[i]
        assert big_r == bn.nn[i] * bn.gens[i]
        r = (bn.betas[i - 1] + bn.n) // bn.e[i]
        assert r == bn.mm[i] + bn.nprod(1, i)
        for j in range(big_r):
            ms.add(Fraction(r + j, big_r), +1)
        rp = (r * bn.e[i]) // bn.e[i - 1] + 1
        rbig_p = big_r // bn.nn[i]
        assert rbig_p == bn.gens[i]
        for j in range(rbig_p):
            ms.add(Fraction(rp + j, rbig_p), -1)
    for j in range(bn.n):
        ms.add(Fraction(2 + j, bn.n), -1)
    ms.add(Fraction(1), +1)
    ms.finalize()
    assert ms.total == bn.milnor
    return ms


@dataclass(frozen=True)
class EigenvalueAnalysis:
    distinct: bool
    # fractional part -> sorted (exponent, multiplicity) pairs in that class
    classes: tuple[tuple[Fraction, tuple[tuple[Fraction, int], ...]], ...]


def eigenvalue_analysis(pi: ExponentMultiset) -> EigenvalueAnalysis:
    """Group b-exponents by fractional part (= monodromy eigenvalue class).

    The eigenvalues e^{-2 pi i alpha} coincide exactly when the exponents
    agree mod 1; they are pairwise different iff every class is a singleton
    with multiplicity one.
    """
    groups: dict[Fraction, list[tuple[Fraction, int]]] = {}
    for exp, mult in pi.sorted_items():
        frac = exp - (exp.numerator // exp.denominator)
        groups.setdefault(frac, []).append((exp, mult))
    classes = tuple((frac, tuple(items)) for frac, items in sorted(groups.items()))
    distinct = all(len(items) == 1 and items[0][1] == 1 for _, items in classes)
    return EigenvalueAnalysis(distinct=distinct, classes=classes)


def log_canonical_threshold(bn: BranchNumerics) -> Fraction:
    """lct = (m_1 + n_1)/(n_1 betabar_1), the opposite of the largest pole."""
    return Fraction(bn.mm[1] + bn.nn[1], bn.nn[1] * bn.gens[1])


@dataclass(frozen=True)
class Resonance:
    sigma: Fraction
    occurrences: tuple[tuple[int, int, PoleStatus], ...]  # (i, nu, status)


@dataclass(frozen=True)
class BranchReport:
    input_text: str
    kind: str  # "charseq" | "semigroup"
    bn: BranchNumerics
    steps: tuple[ToricStep, ...]
    divisors: tuple[DivisorNumerics, ...]
    lct: Fraction
    candidates: tuple[CandidatePole, ...]
    pi_sets: tuple[ExponentMultiset, ...]
    pi_merged: ExponentMultiset
    yano: ExponentMultiset
    eigenvalues: EigenvalueAnalysis
    resonances: tuple[Resonance, ...]
    verdict: str  # "proved-distinct" | "conjectural-generic"

    # The strict transform contributes the pole ladder -1, -2, -3, ...
    strict_transform_poles: str = "all negative integers"


def _parse_kind(text: str):
    from .branch import parse_input

    parsed = parse_input(text)
    if isinstance(parsed, PlaneSemigroup):
        return "semigroup", derive_numerics(charseq_from_semigroup(parsed))
    return "charseq", derive_numerics(parsed)


def branch_report(input_spec, nu_max: int | None = None) -> BranchReport:
    """Aggregate every invariant into one report.

    input_spec may be a CharSeq, a PlaneSemigroup, or an input string in
    either CLI syntax.  The candidate list covers one full period
    0 <= nu < n_i betabar_i per rupture index; nu_max extends it.
    """
    if isinstance(input_spec, CharSeq):
        kind, bn, text = "charseq", derive_numerics(input_spec), str(input_spec)
    elif isinstance(input_spec, PlaneSemigroup):
        kind = "semigroup"
        bn = derive_numerics(charseq_from_semigroup(input_spec))
        text = "semigroup:" + ",".join(str(v) for v in input_spec.gens)
    else:
        text = str(input_spec)
        kind, bn = _parse_kind(text)

    steps = tuple(toric_steps(bn))
    divisors = tuple(divisor_numerics(bn))
    candidates: list[CandidatePole] = []
    by_sigma: dict[Fraction, list[CandidatePole]] = {}
    for i in range(1, bn.g + 1):
        hi = bn.nn[i] * bn.gens[i]
        if nu_max is not None:
            hi = max(hi, nu_max + 1)
        for nu in range(hi):
            cand = candidate_pole(bn, i, nu)
            candidates.append(cand)
            by_sigma.setdefault(cand.sigma, []).append(cand)

    resonances = []
    for sigma, group in sorted(by_sigma.items(), reverse=True):
        if len({c.i for c in group}) >= 2:
            resonances.append(
                Resonance(sigma, tuple((c.i, c.nu, c.status) for c in group))
            )

    pi_sets, pi_merged = pi_multisets(bn)
    yano = yano_multiset(bn)
    eigen = eigenvalue_analysis(pi_merged)
    lct = log_canonical_threshold(bn)

    assert pi_merged.total == bn.milnor
    assert lct == -candidates[0].sigma  # nu = 0 at i = 1 comes first
    pole_values = [-c.sigma for c in candidates if c.status is PoleStatus.POLE_CANDIDATE]
    assert lct == min(pole_values)

    return BranchReport(
        input_text=text,
        kind=kind,
        bn=bn,
        steps=steps,
        divisors=divisors,
        lct=lct,
        candidates=tuple(candidates),
        pi_sets=pi_sets,
        pi_merged=pi_merged,
        yano=yano,
        eigenvalues=eigen,
        resonances=tuple(resonances),
        verdict="proved-distinct" if eigen.distinct else "conjectural-generic",
    )
