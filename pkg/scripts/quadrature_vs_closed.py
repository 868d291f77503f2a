#!/usr/bin/env python3
"""Compare the residue-kernel quadrature against the closed form on the
admissible parameter grid and report relative errors and timings."""

import argparse
import time
from fractions import Fraction
from itertools import product

from branchzeta.gammaratio import RnmParams, rnm_closed_form
from branchzeta.quadrature import QuadConfig, rnm_quadrature

PAIRS = [
    (Fraction(-3, 5), Fraction(-7, 10)),
    (Fraction(-2, 3), Fraction(-2, 3)),
    (Fraction(-11, 20), Fraction(-19, 20)),
]


def admissible(alpha, n, beta, m):
    return (
        2 * alpha + n > -2
        and 2 * beta + m > -2
        and 2 * alpha + n + 2 * beta + m < -2
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rel-tol", type=float, default=1e-5, help="quadrature refinement target")
    args = ap.parse_args()
    cfg = QuadConfig(rel_tol=args.rel_tol)

    print("alpha\tn\tbeta\tm\tlambda\tclosed\tquadrature\trelerr\tseconds")
    for (alpha, beta), n, m, lam in product(PAIRS, range(-2, 3), range(-2, 3), (1.0, 2.0)):
        if not admissible(alpha, n, beta, m):
            continue
        p = RnmParams(alpha=alpha, n=n, beta=beta, m=m, lam=lam)
        ref = rnm_closed_form(p).value
        t0 = time.monotonic()
        got = rnm_quadrature(p, cfg)
        dt = time.monotonic() - t0
        relerr = abs(got - ref) / abs(ref)
        print(
            f"{alpha}\t{n}\t{beta}\t{m}\t{lam}\t{ref:.10g}\t{got:.10g}\t{relerr:.3e}\t{dt:.2f}"
        )


if __name__ == "__main__":
    main()
