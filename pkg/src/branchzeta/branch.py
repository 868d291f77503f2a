"""Characteristic sequences, plane-branch semigroups, derived integer data.

An irreducible plane curve germ is described by its characteristic sequence
(n; beta_1, ..., beta_g).  From it we derive the gcd chain e_i, the quotients
n_i = e_{i-1}/e_i, the reduced exponents m_i = beta_i/e_i, the semigroup
generators betabar_i with their reductions mbar_i = betabar_i/e_i, the
auxiliary q_i = m_i - n_i m_{i-1}, and the conductor c (equal to the Milnor
number mu).  BranchNumerics bundles all of those integers and is the single
source of truth for every downstream formula.

Index conventions: arrays have length g+1 and slot 0 holds the boundary
values n_0 = 0, m_0 = 0, mbar_0 = 1, betabar_0 = n, e_0 = n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidCharSeq, NotInSemigroup, NotPlaneBranchSemigroup


@dataclass(frozen=True)
class CharSeq:
    """Characteristic sequence (n; beta_1, ..., beta_g), validated on build."""

    n: int
    betas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(int(b) for b in self.betas))
        object.__setattr__(self, "n", int(self.n))
        if self.n < 2:
            raise InvalidCharSeq(f"multiplicity n = {self.n} must be >= 2")
        if len(self.betas) < 1:
            raise InvalidCharSeq("at least one characteristic exponent required (g >= 1)")
        prev = self.n
        for i, b in enumerate(self.betas, start=1):
            if b <= prev:
                raise InvalidCharSeq(
                    f"entries must increase strictly: beta_{i} = {b} <= {prev}"
                )
            prev = b
        e = self.n
        for i, b in enumerate(self.betas, start=1):
            if b % e == 0:
                raise InvalidCharSeq(
                    f"gcd chain stalls: e_{i - 1} = {e} divides beta_{i} = {b}"
                )
            e = math.gcd(e, b)
        if e != 1:
            raise InvalidCharSeq(f"gcd chain must end at 1, got e_g = {e}")

    @property
    def g(self) -> int:
        return len(self.betas)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in (self.n, *self.betas)) + ")"


@dataclass(frozen=True)
class ConditionCheck:
    """One line of a semigroup validation report."""

    name: str
    passed: bool
    detail: str
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ValidationReport:
    gens: tuple[int, ...]
    conditions: tuple[ConditionCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    def first_failure(self) -> ConditionCheck | None:
        for c in self.conditions:
            if not c.passed:
                return c
        return None


@dataclass(frozen=True)
class PlaneSemigroup:
    """Semigroup <betabar_0, ..., betabar_g> of a plane branch; validated."""

    gens: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(int(v) for v in self.gens))
        report = validate_plane_semigroup(self.gens)
        if not report.ok:
            bad = report.first_failure()
            raise NotPlaneBranchSemigroup(f"{bad.name}: {bad.detail}")

    @property
    def g(self) -> int:
        return len(self.gens) - 1


@dataclass(frozen=True)
class BranchNumerics:
    """All derived integers of a characteristic sequence (see module doc)."""

    cs: CharSeq
    gens: tuple[int, ...]   # gens[0] = n, gens[i] = betabar_i
    e: tuple[int, ...]      # e[0] = n, e[i] = gcd(e[i-1], beta_i); e[g] = 1
    nn: tuple[int, ...]     # nn[0] = 0, nn[i] = e[i-1] // e[i]  (n_i >= 2)
    mm: tuple[int, ...]     # mm[0] = 0, mm[i] = beta_i // e[i]
    qq: tuple[int, ...]     # qq[0] = 0, qq[1] = mm[1], qq[i] = mm[i] - nn[i]*mm[i-1]
    mbar: tuple[int, ...]   # mbar[0] = 1, mbar[i] = gens[i] // e[i]
    conductor: int
    milnor: int

    @property
    def g(self) -> int:
        return self.cs.g

    @property
    def n(self) -> int:
        return self.cs.n

    @property
    def betas(self) -> tuple[int, ...]:
        return self.cs.betas

    def nprod(self, lo: int, hi: int) -> int:
        """Product n_lo * ... * n_hi; empty (lo > hi) products are 1."""
        out = 1
        for l in range(lo, hi + 1):
            out *= self.nn[l]
        return out


def derive_numerics(cs: CharSeq) -> BranchNumerics:
    """Compute every derived integer of a characteristic sequence.

    Generators follow the recursion betabar_1 = beta_1 and
    betabar_i = n_{i-1} betabar_{i-1} - beta_{i-1} + beta_i; the conductor is
    c = sum (n_i - 1) betabar_i - n + 1, which coincides with the Milnor
    number and with n_g betabar_g - beta_g - (n - 1).
    """
    g = cs.g
    e = [cs.n]
    for b in cs.betas:
        e.append(math.gcd(e[-1], b))
    nn = [0] + [e[i - 1] // e[i] for i in range(1, g + 1)]
    mm = [0] + [cs.betas[i - 1] // e[i] for i in range(1, g + 1)]
    gens = [cs.n, cs.betas[0]]
    for i in range(2, g + 1):
        gens.append(nn[i - 1] * gens[i - 1] - cs.betas[i - 2] + cs.betas[i - 1])
    mbar = [1] + [gens[i] // e[i] for i in range(1, g + 1)]
    qq = [0] + [mm[i] - nn[i] * mm[i - 1] for i in range(1, g + 1)]

    conductor = sum((nn[i] - 1) * gens[i] for i in range(1, g + 1)) - cs.n + 1
    alt = nn[g] * gens[g] - cs.betas[g - 1] - (cs.n - 1)
    assert conductor == alt, "conductor formulas disagree"
    for i in range(1, g + 1):
        assert gens[i] % e[i] == 0 and math.gcd(mbar[i], nn[i]) == 1
        if i >= 2:
            assert mbar[i] == nn[i] * nn[i - 1] * mbar[i - 1] + qq[i]

    return BranchNumerics(
        cs=cs,
        gens=tuple(gens),
        e=tuple(e),
        nn=tuple(nn),
        mm=tuple(mm),
        qq=tuple(qq),
        mbar=tuple(mbar),
        conductor=conductor,
        milnor=conductor,
    )


def conductor_and_milnor(bn: BranchNumerics) -> tuple[int, int]:
    """Conductor and Milnor number (equal for a plane branch)."""
    return bn.conductor, bn.milnor


def membership(gens, s: int) -> tuple[bool, tuple[int, ...] | None]:
    """Decide s in <gens> by dynamic programming over 0..s.

    Returns (True, representation) with representation k such that
    s = sum k_l * gens[l], or (False, None).
    """
    gens = tuple(int(v) for v in gens)
    if s < 0:
        return False, None
    # choice[v] = index of the generator used to reach v, -1 at v = 0
    choice = [-2] * (s + 1)
    choice[0] = -1
    for v in range(1, s + 1):
        for idx, gv in enumerate(gens):
            if gv <= v and choice[v - gv] != -2:
                choice[v] = idx
                break
    if choice[s] == -2:
        return False, None
    rep = [0] * len(gens)
    v = s
    while v > 0:
        idx = choice[v]
        rep[idx] += 1
        v -= gens[idx]
    return True, tuple(rep)


def validate_plane_semigroup(gens) -> ValidationReport:
    """Check the plane-branch semigroup characterization, condition by condition.

    Conditions: structural sanity (positive, strictly increasing, first entry
    >= 2); gcd of all generators equals 1; strict divisibility of the gcd
    chain (every n_i >= 2, so the listed generators are genuinely needed);
    n_i betabar_i in <betabar_0..betabar_{i-1}> with a witness representation;
    and n_i betabar_i < betabar_{i+1}.  Failures are report content, never
    exceptions.
    """
    gens = tuple(int(v) for v in gens)
    checks: list[ConditionCheck] = []

    structural = True
    if len(gens) < 2:
        structural, why = False, "need at least two generators (g >= 1)"
    elif gens[0] < 2:
        structural, why = False, f"multiplicity betabar_0 = {gens[0]} must be >= 2"
    elif any(gens[i] <= gens[i - 1] for i in range(1, len(gens))):
        structural, why = False, "generators must increase strictly"
    else:
        why = "positive, strictly increasing, betabar_0 >= 2"
    checks.append(ConditionCheck("structure", structural, why))
    if not structural:
        return ValidationReport(gens, tuple(checks))

    g = len(gens) - 1
    e = [gens[0]]
    for v in gens[1:]:
        e.append(math.gcd(e[-1], v))
    ok_gcd = e[-1] == 1
    checks.append(
        ConditionCheck(
            "gcd-one", ok_gcd, f"gcd(all generators) = {e[-1]}" + ("" if ok_gcd else " != 1")
        )
    )

    nn = [0] + [e[i - 1] // e[i] for i in range(1, g + 1)]
    ok_min = all(nn[i] >= 2 for i in range(1, g + 1))
    detail = "every n_i = e_{i-1}/e_i is >= 2"
    if not ok_min:
        bad = next(i for i in range(1, g + 1) if nn[i] < 2)
        detail = f"n_{bad} = {nn[bad]} < 2: generator betabar_{bad} is redundant"
    checks.append(ConditionCheck("strict-divisibility", ok_min, detail))

    for i in range(1, g + 1):
        inside, rep = membership(gens[:i], nn[i] * gens[i])
        detail = f"n_{i}*betabar_{i} = {nn[i] * gens[i]}"
        detail += " in" if inside else " not in"
        detail += f" <{','.join(str(v) for v in gens[:i])}>"
        checks.append(ConditionCheck(f"membership-{i}", inside, detail, rep))

    for i in range(1, g):
        ok_growth = nn[i] * gens[i] < gens[i + 1]
        checks.append(
            ConditionCheck(
                f"growth-{i}",
                ok_growth,
                f"n_{i}*betabar_{i} = {nn[i] * gens[i]} "
                + ("<" if ok_growth else ">=")
                + f" betabar_{i + 1} = {gens[i + 1]}",
            )
        )
    return ValidationReport(gens, tuple(checks))


def charseq_from_semigroup(sg: PlaneSemigroup) -> CharSeq:
    """Invert the generator recursion: beta_i = betabar_i - n_{i-1} betabar_{i-1} + beta_{i-1}."""
    gens = sg.gens
    g = len(gens) - 1
    e = [gens[0]]
    for v in gens[1:]:
        e.append(math.gcd(e[-1], v))
    nn = [0] + [e[i - 1] // e[i] for i in range(1, g + 1)]
    betas = [gens[1]]
    for i in range(2, g + 1):
        betas.append(gens[i] - nn[i - 1] * gens[i - 1] + betas[-1])
    try:
        cs = CharSeq(gens[0], tuple(betas))
    except InvalidCharSeq as exc:  # pragma: no cover - blocked by validation
        raise NotPlaneBranchSemigroup(f"inversion produced invalid sequence: {exc}") from exc
    back = derive_numerics(cs)
    if back.gens != gens:
        raise NotPlaneBranchSemigroup(
            f"round trip failed: {back.gens} != {gens}"
        )  # pragma: no cover - provably unreachable for validated input
    return cs


def canonical_representation(bn: BranchNumerics, s: int) -> tuple[int, ...]:
    """Unique representation s = sum k_l betabar_l with 0 <= k_l < n_l for l >= 1.

    Works top-down: at level l the residue of s/e_l modulo n_l determines k_l
    because mbar_l is invertible mod n_l; what remains is divisible by
    e_{l-1}.  Raises NotInSemigroup when the leftover at level 0 is negative.
    """
    if s < 0:
        raise NotInSemigroup(f"{s} < 0")
    rem = s
    ks = [0] * (bn.g + 1)
    for l in range(bn.g, 0, -1):
        q, r = divmod(rem, bn.e[l])
        assert r == 0, "residue not divisible by e_l; invariant broken upstream"
        k = (q * pow(bn.mbar[l], -1, bn.nn[l])) % bn.nn[l]
        ks[l] = k
        rem -= k * bn.gens[l]
        if rem < 0:
            raise NotInSemigroup(f"{s} not in <{','.join(map(str, bn.gens))}>")
    q, r = divmod(rem, bn.n)
    if r != 0:  # pragma: no cover - divisibility is automatic at level 0
        raise NotInSemigroup(f"{s} not in <{','.join(map(str, bn.gens))}>")
    ks[0] = q
    return tuple(ks)


def parse_input(text: str):
    """Parse an input string: "n,b1,..,bg" (CharSeq) or "semigroup:g0,..,gg".

    Syntax problems raise ValueError; domain failures raise InvalidCharSeq or
    NotPlaneBranchSemigroup from the respective constructors.
    """
    body = text.strip()
    is_semigroup = False
    if body.lower().startswith("semigroup:"):
        is_semigroup = True
        body = body[len("semigroup:") :]
    parts = [p.strip() for p in body.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"empty entry in input {text!r}")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"input entries must be integers, got {text!r}") from None
    if is_semigroup:
        return PlaneSemigroup(tuple(values))
    if len(values) < 2:
        raise ValueError("characteristic sequence needs n plus at least one exponent")
    return CharSeq(values[0], tuple(values[1:]))


def random_charseq(rng, max_n: int = 12, max_beta: int = 400) -> CharSeq:
    """Draw a uniformly-scattered valid characteristic sequence.

    Construction guarantees validity: factor n into quotients n_i >= 2, then
    pick reduced exponents m_i coprime to n_i with m_1 > n_1 and
    m_i > n_i m_{i-1}, so beta_i = e_i m_i increases and keeps the gcd chain.
    """
    while True:
        n = rng.randint(2, max_n)
        factors = []
        rem = n
        while rem > 1:
            d = rng.choice([d for d in range(2, rem + 1) if rem % d == 0])
            factors.append(d)
            rem //= d
        rng.shuffle(factors)
        e = [n]
        for d in factors:
            e.append(e[-1] // d)
        betas: list[int] = []
        ms: list[int] = []
        ok = True
        for i, ni in enumerate(factors, start=1):
            lo = ni + 1 if i == 1 else ni * ms[-1] + 1
            hi = max_beta // e[i]
            cands = [m for m in range(lo, hi + 1) if math.gcd(m, ni) == 1]
            if not cands:
                ok = False
                break
            m = rng.choice(cands)
            ms.append(m)
            betas.append(e[i] * m)
        if ok:
            return CharSeq(n, tuple(betas))


def gaps(bn: BranchNumerics) -> tuple[int, ...]:
    """All positive integers outside the semigroup (there are c/2 of them)."""
    c = bn.conductor
    member = [False] * c
    if c > 0:
        member[0] = True
        for v in range(1, c):
            member[v] = any(gv <= v and member[v - gv] for gv in bn.gens)
    return tuple(v for v in range(c) if not member[v])
