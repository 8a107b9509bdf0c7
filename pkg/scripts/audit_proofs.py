#!/usr/bin/env python3
"""Replay the numeric chains behind the GRH bounds for q2 and r over a grid
of conductors and degrees and report the tightest margin of each step."""

import argparse

import numpy as np

from normeuclid.audit import audit_q2_proof, audit_r_proof

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def _margins(reports):
    worst = {}
    for rep in reports:
        for s in rep.steps:
            gap = abs(s.claimed - s.exact) if s.passed else -abs(s.claimed - s.exact)
            if s.label not in worst or gap < worst[s.label][0]:
                worst[s.label] = (gap, rep.ell, rep.f, s.passed)
    return worst


def _show(title, worst):
    print(title)
    for label, (gap, ell, f, ok) in worst.items():
        where = f"f={f:.3g}" + (f" ell={ell}" if ell is not None else "")
        print(f"  {'PASS' if ok else 'FAIL'}  {label:<28} margin {gap:.5g}  at {where}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=25, help="log-spaced conductors per decade range")
    args = ap.parse_args()

    q2 = [audit_q2_proof(f) for f in np.logspace(9, 20, args.points)]
    r = [audit_r_proof(ell, f) for ell in ODD_PRIMES for f in np.logspace(8, 20, args.points)]
    _show(f"q2 chain, {len(q2)} conductors:", _margins(q2))
    _show(f"r chain, {len(r)} (ell, f) pairs:", _margins(r))
    failed = sum(not rep.passed for rep in q2 + r)
    print(f"\n{failed} failing reports")


if __name__ == "__main__":
    main()
