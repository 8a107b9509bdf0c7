#!/usr/bin/env python3
"""Recompute the conditional C_ell table: for each odd prime ell < 100,
the least power of ten past which the 38(l-1)^2 (log f)^6 log log f < f inequality and the
sharper intermediate condition hold, compared with the published values."""

import argparse

from normeuclid.bounds import derive_C_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell", type=int, action="append", help="restrict to these ell (repeatable)")
    args = ap.parse_args()

    reports = derive_C_table(args.ell)
    print(f"{'ell':>4} {'thm5':>6} {'ugly':>6} {'table':>6}  {'log10 thm5':>10} {'log10 ugly':>10}  match")
    for r in reports:
        print(f"{r.ell:>4} {r.crossover_theorem5:>6} {r.crossover_ugly:>6} {r.table2_value:>6}  "
              f"{r.threshold_theorem5:>10.4f} {r.threshold_ugly:>10.4f}  {r.match_flag}")
    findings = [r.finding for r in reports if r.finding]
    if findings:
        print("\nfindings:")
        for msg in findings:
            print(" ", msg)


if __name__ == "__main__":
    main()
