"""Command-line front end.

Four subcommands: analyze (full invariant report for a branch), residue
(one kernel evaluation), verify (self-checking suites with a TSV table),
and generate (curve equations and deformation families).

Output conventions, kept byte-stable for golden tests:
* JSON is canonical: sorted keys, two-space indent, rationals as "p/q"
  strings in lowest terms, complex numbers as {"re":, "im":} objects;
  parsing emitted JSON and re-serializing it reproduces the bytes.
* Exit codes: 0 success, 1 input syntax error, 2 domain validation
  failure, 3 verification failure.
* Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .branch import validate_plane_semigroup
from .curves import deformation_family, monomial_curve_equations, plane_equation
from .errors import BranchZetaError, InvalidCharSeq, NotPlaneBranchSemigroup
from .gammaratio import RnmParams, rnm_closed_form, symmetry_check
from .poles import PoleStatus, branch_report
from .quadrature import (
    QuadConfig,
    radial_mass,
    rnm_quadrature,
    vanishing_integral_check,
    vanishing_symbolic_cancellation,
)


class _SyntaxError(Exception):
    """Raised in place of argparse's sys.exit(2) so main can return 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _SyntaxError(message)


def _frac(x) -> str:
    return str(Fraction(x))


def _cx(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _fmt_cx(z: complex) -> str:
    return f"{z.real:.12e}{z.imag:+.12e}i"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _poly_dict(p) -> dict:
    return {
        "text": str(p),
        "variables": list(p.variables),
        "terms": [
            {"exponents": list(e), "coefficient": _frac(c)}
            for e, c in p.canonical_terms()
        ],
    }


def _multiset_list(ms) -> list:
    return [
        {"exponent": _frac(exp), "multiplicity": mult}
        for exp, mult in ms.sorted_items()
    ]


def report_to_dict(rep) -> dict:
    bn = rep.bn
    return {
        "input": {"text": rep.input_text, "kind": rep.kind},
        "numerics": {
            "n": bn.n,
            "g": bn.g,
            "betas": list(bn.cs.betas),
            "betabar": list(bn.gens),
            "e": list(bn.e),
            "nn": list(bn.nn),
            "mm": list(bn.mm),
            "qq": list(bn.qq),
            "mbar": list(bn.mbar),
            "conductor": bn.conductor,
        },
        "mu": bn.milnor,
        "lct": _frac(rep.lct),
        "toric_steps": [
            {"i": s.i, "n": s.n, "q": s.q, "a": s.a, "b": s.b, "c": s.c, "d": s.d}
            for s in rep.steps
        ],
        "divisors": [
            {
                "i": d.i,
                "N_rupture": d.N_rupture,
                "k_rupture_plus1": d.k_rupture_plus1,
                "N_deadend": d.N_deadend,
                "k_deadend_plus1": d.k_deadend_plus1,
            }
            for d in rep.divisors
        ],
        "candidates": [
            {
                "i": c.i,
                "nu": c.nu,
                "sigma": _frac(c.sigma),
                "eps1": _frac(c.eps1),
                "eps2": _frac(c.eps2),
                "eps3": _frac(c.eps3),
                "status": c.status.value,
            }
            for c in rep.candidates
        ],
        "pi": _multiset_list(rep.pi_merged),
        "pi_levels": [_multiset_list(ms) for ms in rep.pi_sets],
        "yano": _multiset_list(rep.yano),
        "eigenvalues": {
            "distinct": rep.eigenvalues.distinct,
            "classes": [
                {
                    "fraction": _frac(frac),
                    "members": [
                        {"exponent": _frac(e), "multiplicity": m} for e, m in items
                    ],
                }
                for frac, items in rep.eigenvalues.classes
            ],
        },
        "resonances": [
            {
                "sigma": _frac(r.sigma),
                "occurrences": [
                    {"i": i, "nu": nu, "status": st.value} for i, nu, st in r.occurrences
                ],
            }
            for r in rep.resonances
        ],
        "strict_transform": rep.strict_transform_poles,
        "verdict": rep.verdict,
    }


def _candidate_rows(rep) -> list[list[str]]:
    return [
        [str(c.i), str(c.nu), _frac(c.sigma), _frac(c.eps1), _frac(c.eps2),
         _frac(c.eps3), c.status.value]
        for c in rep.candidates
    ]


def _print_analyze_text(rep) -> None:
    bn = rep.bn
    print(f"input {rep.input_text} kind {rep.kind}")
    print(
        f"n {bn.n}  g {bn.g}  betabar {','.join(map(str, bn.gens))}"
        f"  conductor {bn.conductor}  mu {bn.milnor}"
    )
    print(f"lct {rep.lct}")
    print(f"verdict {rep.verdict}")
    print("toric steps:")
    for s in rep.steps:
        print(f"  i={s.i} n={s.n} q={s.q} a={s.a} b={s.b} c={s.c} d={s.d}")
    print("divisors:")
    for d in rep.divisors:
        print(
            f"  i={d.i} rupture N={d.N_rupture} k+1={d.k_rupture_plus1}"
            f" deadend N={d.N_deadend} k+1={d.k_deadend_plus1}"
        )
    print("candidates (i, nu, sigma, eps1, eps2, eps3, status):")
    for row in _candidate_rows(rep):
        print("  " + " ".join(f"{v:>12}" for v in row[:6]) + f"  {row[6]}")
    print(f"pi ({rep.pi_merged.total} exponents with multiplicity):")
    for exp, mult in rep.pi_merged.sorted_items():
        print(f"  {str(exp):>12} x{mult}")
    print("yano:")
    for exp, mult in rep.yano.sorted_items():
        print(f"  {str(exp):>12} x{mult}")
    print(f"eigenvalues distinct: {str(rep.eigenvalues.distinct).lower()}")
    for r in rep.resonances:
        where = ", ".join(f"(i={i}, nu={nu})" for i, nu, _ in r.occurrences)
        print(f"resonance sigma={r.sigma} at {where}")
    print(f"strict transform poles: {rep.strict_transform_poles}")


def cmd_analyze(ns) -> int:
    try:
        rep = branch_report(ns.input, nu_max=ns.nu_max)
    except (InvalidCharSeq, NotPlaneBranchSemigroup) as exc:
        _emit_validation_failure(ns.input, exc, ns.format)
        return 2
    if ns.format == "json":
        print(canonical_json(report_to_dict(rep)))
    elif ns.format == "tsv":
        print("\t".join(["i", "nu", "sigma", "eps1", "eps2", "eps3", "status"]))
        for row in _candidate_rows(rep):
            print("\t".join(row))
    else:
        _print_analyze_text(rep)
    return 0


def _emit_validation_failure(text: str, exc: Exception, fmt: str) -> None:
    conditions = None
    if text.startswith("semigroup:"):
        try:
            gens = tuple(int(v) for v in text[len("semigroup:"):].split(","))
            rep = validate_plane_semigroup(gens)
            conditions = [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in rep.conditions
            ]
        except ValueError:
            pass
    if conditions is None:
        conditions = [{"name": "charseq", "passed": False, "detail": str(exc)}]
    payload = {"error": "validation", "input": text, "conditions": conditions}
    if fmt == "json":
        print(canonical_json(payload))
    else:
        print(f"invalid input {text}", file=sys.stderr)
        for c in conditions:
            flag = "ok" if c["passed"] else "FAIL"
            print(f"{c['name']}\t{flag}\t{c['detail']}")


def cmd_residue(ns) -> int:
    p = RnmParams(alpha=ns.alpha, n=ns.n, beta=ns.beta, m=ns.m, lam=ns.lam)
    out = rnm_closed_form(p)
    if ns.format == "json":
        print(
            canonical_json(
                {
                    "order": out.order,
                    "value": None if out.value is None else _cx(out.value),
                    "reason": [{"factor": lbl, "order": k} for lbl, k in out.reason],
                }
            )
        )
    elif ns.format == "tsv":
        val = "none" if out.value is None else _fmt_cx(out.value)
        reason = ",".join(f"{lbl}:{k}" for lbl, k in out.reason)
        print("\t".join(["order", "value", "reason"]))
        print("\t".join([str(out.order), val, reason]))
    else:
        print(f"order {out.order}")
        print("value " + ("none (pole)" if out.value is None else _fmt_cx(out.value)))
        print("reason " + " ".join(f"{lbl}:{k:+d}" for lbl, k in out.reason))
    return 0


GRID_PAIRS = (
    (Fraction(-3, 5), Fraction(-7, 10)),
    (Fraction(-2, 3), Fraction(-2, 3)),
    (Fraction(-11, 20), Fraction(-19, 20)),
)

SYMMETRY_CASES = (
    RnmParams(alpha=Fraction(-3, 5), n=1, beta=Fraction(-7, 10), m=0, lam=1.0),
    RnmParams(alpha=Fraction(-3, 5), n=0, beta=Fraction(-3, 5), m=0, lam=1.0),
    RnmParams(alpha=Fraction(-1, 3), n=-2, beta=Fraction(-5, 4), m=1, lam=2.0),
)

VANISHING_CASES = (
    (1, Fraction(-1, 4), 1.0),
    (3, Fraction(-3, 4), 2.0),
    (-1, Fraction(1, 4), 1.5),
)

COMBINATORIC_CASES = ("2,3", "4,9", "4,6,7", "6,9,22")


def _suite_rnm(tol: float, rel_tol: float) -> list[tuple[str, str, str, float, bool]]:
    rows = []
    cfg = QuadConfig(rel_tol=rel_tol)
    for (a, b) in GRID_PAIRS:
        for lam in (1.0, 2.0):
            p = RnmParams(alpha=a, n=0, beta=b, m=0, lam=lam)
            want = rnm_closed_form(p).value
            got = rnm_quadrature(p, cfg)
            rel = abs(got - want) / abs(want)
            case = f"rnm(alpha={a},n=0,beta={b},m=0,lambda={lam:g})"
            rows.append((case, _fmt_cx(want), _fmt_cx(got), rel, rel <= tol))
    for p in SYMMETRY_CASES:
        a = rnm_closed_form(p)
        swapped = RnmParams(
            alpha=p.alpha_prime, n=-p.n, beta=p.beta_prime, m=-p.m,
            lam=complex(p.lam).conjugate(),
        )
        b = rnm_closed_form(swapped)
        ok = symmetry_check(p, rel_tol=1e-10)
        if a.order == 0 and b.order == 0:
            rel = abs(a.value - b.value) / max(abs(a.value), abs(b.value))
            exp_s, got_s = _fmt_cx(a.value), _fmt_cx(b.value)
        else:
            rel = 0.0 if a.order == b.order else float("inf")
            exp_s, got_s = f"order={a.order}", f"order={b.order}"
        case = (
            f"symmetry(alpha={p.alpha},n={p.n},beta={p.beta},m={p.m},"
            f"lambda={complex(p.lam).real:g})"
        )
        rows.append((case, exp_s, got_s, rel, ok))
    return rows


def _suite_combinatorics() -> list[tuple[str, str, str, float, bool]]:
    rows = []

    def exact(case: str, expected, got) -> None:
        ok = expected == got
        rows.append((case, str(expected), str(got), 0.0 if ok else float("inf"), ok))

    for text in COMBINATORIC_CASES:
        rep = branch_report(text)
        bn = rep.bn
        exact(f"pi-total({text})", bn.milnor, rep.pi_merged.total)
        exact(
            f"pi-vs-yano({text})",
            "equal",
            "equal" if rep.pi_merged.entries == rep.yano.entries else "differ",
        )
        poles = [
            -c.sigma for c in rep.candidates if c.status is PoleStatus.POLE_CANDIDATE
        ]
        exact(f"lct-min-pole({text})", rep.lct, min(poles))
        worst = max(
            abs(c.eps1 + c.eps2 + c.eps3 + c.nu + 2) for c in rep.candidates
        )
        exact(f"sigma-relation({text})", Fraction(0), worst)
        dead_ok = all(
            (c.eps1.denominator == 1)
            == (c.status in (PoleStatus.EXCLUDED_DEADEND, PoleStatus.EXCLUDED_BOTH))
            for c in rep.candidates
        )
        exact(f"integrality-deadend({text})", True, dead_ok)
        prev_ok = all(
            (c.eps2.denominator == 1)
            == (c.status in (PoleStatus.EXCLUDED_PREVIOUS, PoleStatus.EXCLUDED_BOTH))
            for c in rep.candidates
        )
        exact(f"integrality-previous({text})", True, prev_ok)
        exact(f"conductor-eq-milnor({text})", bn.conductor, bn.milnor)
        class_total = sum(
            m for _, items in rep.eigenvalues.classes for _, m in items
        )
        exact(f"eigenvalue-count({text})", bn.milnor, class_total)
    return rows


def _suite_vanishing() -> list[tuple[str, str, str, float, bool]]:
    rows = []
    for n, alpha, R in VANISHING_CASES:
        res = vanishing_integral_check(n, alpha, R)
        mass = radial_mass(n, alpha, R)
        rel = abs(res) / mass
        case = f"vanishing(n={n},alpha={alpha},R={R:g})"
        rows.append((case, "0", f"{abs(res):.6e}", rel, rel <= 1e-8))
    out = vanishing_symbolic_cancellation(Fraction(-1, 4))
    rows.append(
        ("vanishing-symbolic(alpha=-1/4)", "0", str(out), 0.0 if out == 0 else float("inf"), out == 0)
    )
    return rows


def cmd_verify(ns) -> int:
    rows: list[tuple[str, str, str, float, bool]] = []
    if ns.suite in ("rnm", "all"):
        rows += _suite_rnm(ns.tol, ns.rel_tol)
    if ns.suite in ("combinatorics", "all"):
        rows += _suite_combinatorics()
    if ns.suite in ("vanishing", "all"):
        rows += _suite_vanishing()

    if ns.format == "json":
        payload = {
            "suite": ns.suite,
            "passed": all(ok for *_, ok in rows),
            "rows": [
                {"case": c, "expected": e, "got": g, "relerr": r, "pass": ok}
                for c, e, g, r, ok in rows
            ],
        }
        print(canonical_json(payload))
    elif ns.format == "text":
        width = max(len(c) for c, *_ in rows)
        for c, e, g, r, ok in rows:
            flag = "ok  " if ok else "FAIL"
            print(f"{flag} {c:<{width}}  expected {e}  got {g}  relerr {r:.6e}")
    else:
        print("\t".join(["case", "expected", "got", "relerr"]))
        for c, e, g, r, _ in rows:
            print("\t".join([c, e, g, f"{r:.6e}"]))

    failures = [c for c, *_, ok in rows if not ok]
    if failures:
        for c in failures:
            print(f"FAILED {c}", file=sys.stderr)
        return 3
    return 0


def cmd_generate(ns) -> int:
    try:
        rep = branch_report(ns.input)
    except (InvalidCharSeq, NotPlaneBranchSemigroup) as exc:
        _emit_validation_failure(ns.input, exc, ns.format)
        return 2
    bn = rep.bn
    plane = plane_equation(bn)
    hs = monomial_curve_equations(bn)
    fam = None
    fiber = None
    if ns.deform:
        lambdas = None
        if ns.lambdas is not None:
            lambdas = [Fraction(v) for v in ns.lambdas.split(",")] if ns.lambdas else []
        fam = deformation_family(
            bn,
            weight_cutoff=ns.cutoff,
            lambdas=lambdas,
            coefficient_source=ns.seed,
        )
        if ns.seed is not None:
            fiber = fam.instantiate()

    if ns.format == "json":
        payload = {
            "input": {"text": rep.input_text, "kind": rep.kind},
            "plane": _poly_dict(plane),
            "monomial_curve": [_poly_dict(h) for h in hs],
            "deformation": None,
        }
        if fam is not None:
            payload["deformation"] = {
                "cutoff": fam.weight_cutoff,
                "lambdas": [_frac(v) for v in fam.lambdas],
                "base": _poly_dict(fam.base),
                "terms": [
                    {
                        "parameter": t.parameter,
                        "level": t.level,
                        "exponents": list(t.exponents),
                        "weight": t.weight,
                        "monomial": _poly_dict(t.monomial),
                        "coefficient": None if t.coefficient is None else _frac(t.coefficient),
                    }
                    for t in fam.terms
                ],
                "fiber": None if fiber is None else _poly_dict(fiber),
            }
        print(canonical_json(payload))
    elif ns.format == "tsv":
        print("\t".join(["object", "exponents", "coefficient"]))

        def poly_rows(name, p):
            for e, c in p.canonical_terms():
                print("\t".join([name, ",".join(map(str, e)), _frac(c)]))

        poly_rows("plane", plane)
        for i, h in enumerate(hs, start=1):
            poly_rows(f"h{i}", h)
        if fam is not None:
            for t in fam.terms:
                coeff = t.parameter if t.coefficient is None else _frac(t.coefficient)
                print("\t".join([t.parameter, ",".join(map(str, t.exponents)), coeff]))
            if fiber is not None:
                poly_rows("fiber", fiber)
    else:
        print(plane)
        for i, h in enumerate(hs, start=1):
            print(f"h{i} = {h}")
        if fam is not None:
            lam_s = ",".join(str(v) for v in fam.lambdas) or "-"
            print(f"deformation cutoff={fam.weight_cutoff} lambdas={lam_s}")
            for t in fam.terms:
                coeff = "symbolic" if t.coefficient is None else str(t.coefficient)
                print(
                    f"  {t.parameter} level={t.level} weight={t.weight}"
                    f" monomial={t.monomial} coeff={coeff}"
                )
            if fiber is not None:
                print(f"fiber = {fiber}")
    return 0


def _scalar(text: str):
    # rational syntax accepted for convenience; the scale is a float/complex
    try:
        return float(Fraction(text))
    except ValueError:
        return complex(text)


_VALUE_FLAGS = {"--alpha", "--beta", "--lambda", "--n", "--m", "--nu-max",
                "--cutoff", "--seed", "--tol", "--rel-tol"}


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ["--alpha", "-3/5"] as ["--alpha=-3/5"].

    argparse treats a bare "-3/5" as an option string, so spaced negative
    values for known value flags are merged into the = form.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok in _VALUE_FLAGS
            and nxt is not None
            and len(nxt) > 1
            and nxt[0] == "-"
            and (nxt[1].isdigit() or nxt[1] == ".")
        ):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def build_parser() -> _Parser:
    parser = _Parser(prog="branchzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default):
        p.add_argument("--format", choices=("json", "tsv", "text"), default=default)

    p = sub.add_parser("analyze", help="full invariant report for a branch")
    p.add_argument("input", help='"n,b1,..,bg" or "semigroup:g0,..,gg"')
    p.add_argument("--nu-max", type=int, default=None)
    add_format(p, "text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("residue", help="evaluate one residue kernel value")
    p.add_argument("--alpha", type=Fraction, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", type=Fraction, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_scalar, default=1.0)
    add_format(p, "text")
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument("--suite", choices=("rnm", "combinatorics", "vanishing", "all"), default="all")
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--rel-tol", type=float, default=1e-5, help="quadrature target")
    add_format(p, "tsv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="curve equations and deformations")
    p.add_argument("input", help='"n,b1,..,bg" or "semigroup:g0,..,gg"')
    p.add_argument("--deform", action="store_true")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--lambdas", type=str, default=None,
                   help="comma-separated values for levels 2..g")
    add_format(p, "text")
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_negative_values(list(argv))
    try:
        ns = parser.parse_args(argv)
    except _SyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return ns.func(ns)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BranchZetaError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        print(canonical_json({"error": "domain", "reason": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
