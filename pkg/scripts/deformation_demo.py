#!/usr/bin/env python3
"""Generate the plane equation of a branch and enumerate its higher-weight
deformation monomials, optionally instantiating a random fiber.

Examples:
    python scripts/deformation_demo.py 4,9 --cutoff 38
    python scripts/deformation_demo.py 4,6,7 --seed 7
"""

import argparse

from branchzeta.branch import (
    PlaneSemigroup,
    charseq_from_semigroup,
    derive_numerics,
    parse_input,
)
from branchzeta.curves import deformation_family, monomial_curve_equations, plane_equation


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("input", help="characteristic sequence 'n,b1,..' or 'semigroup:g0,g1,..'")
    ap.add_argument("--cutoff", type=int, default=None, help="weight cutoff for the enumeration")
    ap.add_argument("--seed", type=int, default=None, help="draw rational coefficients and print the fiber")
    args = ap.parse_args()

    parsed = parse_input(args.input)
    if isinstance(parsed, PlaneSemigroup):
        parsed = charseq_from_semigroup(parsed)
    bn = derive_numerics(parsed)
    print(f"plane equation: {plane_equation(bn)}")
    for k, h in enumerate(monomial_curve_equations(bn), start=1):
        print(f"h{k} = {h}")

    fam = deformation_family(bn, weight_cutoff=args.cutoff, coefficient_source=args.seed)
    print(f"deformation cutoff {fam.weight_cutoff}: {len(fam.terms)} monomials")
    for t in fam.terms:
        print(f"  weight {t.weight:3d}  {t.parameter}  {t.monomial}")
    if args.seed is not None:
        print(f"fiber: {fam.instantiate()}")


if __name__ == "__main__":
    main()
