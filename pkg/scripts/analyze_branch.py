#!/usr/bin/env python3
"""Print the pole-candidate ledger and exponent multisets for one branch.

Examples:
    python scripts/analyze_branch.py 4,9
    python scripts/analyze_branch.py semigroup:6,9,22 --nu-max 12
"""

import argparse

from branchzeta.poles import branch_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("input", help="characteristic sequence 'n,b1,..' or 'semigroup:g0,g1,..'")
    ap.add_argument("--nu-max", type=int, default=None, help="extend candidate ladders to this shift")
    args = ap.parse_args()

    rep = branch_report(args.input, nu_max=args.nu_max)
    bn = rep.bn
    print(f"input {rep.input_text} ({rep.kind})")
    print(f"gcd chain e = {bn.e}")
    print(f"generators  = {bn.gens}")
    print(f"conductor   = {bn.conductor}   milnor = {bn.milnor}   lct = {rep.lct}")
    print()
    print("rupture ladders (i, nu, sigma, eps1, eps2, status):")
    for c in rep.candidates:
        print(f"  {c.i}  {c.nu:3d}  {str(c.sigma):>10}  {str(c.eps1):>10}  {str(c.eps2):>10}  {c.status.value}")
    print()
    print("pole exponent multiset (value: multiplicity):")
    for value, mult in rep.pi_merged.sorted_items():
        print(f"  {value}: {mult}")
    print()
    print(f"eigenvalue classes: {rep.eigenvalues.distinct} distinct")
    print(f"verdict: {rep.verdict}")


if __name__ == "__main__":
    main()
