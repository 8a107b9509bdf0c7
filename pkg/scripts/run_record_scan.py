#!/usr/bin/env python3
"""Scan prime conductors f = 1 (mod ell) for record values of the least
inert prime q1, printing record lines as they are found.

    python scripts/run_record_scan.py --max 1e8
    python scripts/run_record_scan.py --min 1e10 --max 2e10 --workers 8 --checkpoint scan.ck
"""

import argparse
import logging
import sys
import time
from pathlib import Path

from normeuclid.survey import DEFAULT_SEGMENT, SurveyConfig, scan_records


def _int(text):
    """Accept 1e8 style integers."""
    return int(float(text)) if "e" in text.lower() else int(text)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ell", type=_int, default=3)
    ap.add_argument("--min", dest="f_min", type=_int, default=2)
    ap.add_argument("--max", dest="f_max", type=_int, default=10**8)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--segment-size", type=_int, default=DEFAULT_SEGMENT)
    ap.add_argument("--checkpoint", type=Path)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")

    cfg = SurveyConfig(args.f_min, args.f_max, ell=args.ell, segment_size=args.segment_size,
                       workers=args.workers, checkpoint=args.checkpoint)
    t0 = time.perf_counter()
    recs = scan_records(cfg, on_record=lambda r: print(r, flush=True))
    print(f"{len(recs)} records in [{args.f_min}, {args.f_max}) in {time.perf_counter() - t0:.1f}s",
          file=sys.stderr)


if __name__ == "__main__":
    main()
