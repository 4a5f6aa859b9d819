#!/usr/bin/env python3
"""Sweep the pointwise data-vs-model residual F over a grid of alpha.

For each alpha the script records |h|, |W|, the arc membership, and the
residual F = h^2 W^2 - (model h)^2 (model W)^2.  On the arcs the model should
track the data; off the arcs the model is zero by construction, so |F| there
is just |h W|^2.  Output is a TSV ready for plotting.
"""

import argparse
import sys
from fractions import Fraction

from cubesquares.arcs import ArcDissection
from cubesquares.generating import F_diagnostic
from cubesquares.params import derive_params
from cubesquares.smooth import estimate_c_eta
from cubesquares.weights import build_weight_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--P", type=int, default=8, help="scale parameter (N = P^6)")
    ap.add_argument("--points", type=int, default=200, help="alpha grid size")
    ap.add_argument("--denominator", type=int, default=1009, help="alpha grid denominator (prime keeps fractions exact)")
    ap.add_argument("--wide", action="store_true", help="use the wide dissection instead of the narrow one")
    ap.add_argument("--out", default="-", help="output TSV path, - for stdout")
    args = ap.parse_args()

    pp = derive_params(args.P**6)
    ta = build_weight_table(pp, "a")
    tb = build_weight_table(pp, "b")
    primes = pp.default_primes()
    d = ArcDissection.wide(pp.P, pp.N) if args.wide else ArcDissection.narrow(pp.P, pp.N)
    c1 = estimate_c_eta(pp.P, pp.R)
    c2 = estimate_c_eta(max(int(pp.H3), 1), pp.R)

    rows = []
    for i in range(args.points):
        alpha = Fraction(i * args.denominator // args.points % args.denominator, args.denominator)
        diag = F_diagnostic(alpha, ta, tb, primes, d, pp, c1, c2)
        rows.append(
            (
                float(alpha),
                abs(diag.h),
                abs(diag.W),
                int(diag.on_arc),
                abs(diag.F),
            )
        )

    fh = sys.stdout if args.out == "-" else open(args.out, "w")
    try:
        fh.write("alpha\tabs_h\tabs_W\ton_arc\tabs_F\n")
        for row in rows:
            fh.write("\t".join(f"{x:.6g}" for x in row) + "\n")
    finally:
        if fh is not sys.stdout:
            fh.close()
            print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
