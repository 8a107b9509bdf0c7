"""Range scans over prime conductors f = 1 (mod ell): least inert prime q1
per conductor, record values, and ceiling verification.

Work is split into fixed segments [lo, lo + segment_size).  Each segment
is sieved and its q1 values computed in one vectorised pass; workers hand
back per-segment summaries that a sequential reducer replays in ascending
order, so the output does not depend on the worker count.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Optional

import numpy as np

from .characters import build_character
from .errors import NormEuclidError, RangeError, SearchExhausted
from .modmath import batch_pow_mod
from .nonresidue import PRIME_CAP, find_q1, iter_primes
from .sieve import SIEVE_CEILING, primes_in_segment

log = logging.getLogger(__name__)

MIN_SEGMENT = 1 << 16
DEFAULT_SEGMENT = 1 << 22


@dataclass(frozen=True)
class RecordEntry:
    f: int
    q1: int

    def to_dict(self) -> dict:
        return asdict(self)

    def __str__(self) -> str:
        return f"Record: f={self.f}, q1={self.q1}"


@dataclass
class SurveyConfig:
    f_min: int
    f_max: int
    ell: int = 3
    segment_size: int = DEFAULT_SEGMENT
    workers: int = 1
    q1_ceiling: Optional[int] = None
    checkpoint: Optional[Path] = None

    def __post_init__(self):
        if not 0 <= self.f_min < self.f_max <= SIEVE_CEILING:
            raise RangeError(f"need 0 <= f_min < f_max <= 1e12, got [{self.f_min}, {self.f_max})")
        if self.segment_size < MIN_SEGMENT:
            raise RangeError(f"segment_size must be >= {MIN_SEGMENT}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.ell < 3 or self.ell % 2 == 0 or self.ell > 97:
            raise ValueError(f"ell must be an odd prime <= 97, got {self.ell}")

    def segments(self, start: Optional[int] = None) -> Iterator[tuple[int, int]]:
        lo = self.f_min if start is None else start
        while lo < self.f_max:
            hi = min(lo + self.segment_size, self.f_max)
            yield lo, hi
            lo = hi


@dataclass
class CeilingReport:
    max_q1: int
    argmax_f: int
    violations: list[RecordEntry] = field(default_factory=list)
    conductors: int = 0

    def to_dict(self) -> dict:
        return {"max_q1": self.max_q1, "argmax_f": self.argmax_f,
                "violations": [v.to_dict() for v in self.violations],
                "conductors": self.conductors}


# --- per-segment kernels -----------------------------------------------------


def conductors_in_segment(ell: int, lo: int, hi: int) -> np.ndarray:
    p = primes_in_segment(lo, hi)
    return p[p % ell == 1]


def q1_batch(ell: int, conductors: np.ndarray, cap: int = PRIME_CAP) -> np.ndarray:
    """Least inert prime for every conductor in the array."""
    F = np.asarray(conductors, dtype=np.int64)
    q1 = np.zeros_like(F)
    if F.size == 0:
        return q1
    active = np.arange(F.size)
    E = (F - 1) // ell
    for q in iter_primes(cap):
        Fa = F[active]
        vals = batch_pow_mod(np.full(Fa.shape, q, dtype=np.int64), E[active], Fa)
        inert = (vals != 1) & (q % Fa != 0)
        q1[active[inert]] = q
        active = active[~inert]
        if active.size == 0:
            return q1
    raise SearchExhausted(f"no inert prime below {cap} for f={int(F[active[0]])}")


def segment_q1(ell: int, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    F = conductors_in_segment(ell, lo, hi)
    return F, q1_batch(ell, F)


def _segment_records(args: tuple[int, int, int]) -> list[tuple[int, int]]:
    """Strict prefix maxima of q1 within one segment.

    Any global record is a prefix maximum of its own segment, so these are
    a sufficient summary for the ordered reducer.
    """
    ell, lo, hi = args
    F, Q = segment_q1(ell, lo, hi)
    if F.size == 0:
        return []
    running = np.maximum.accumulate(Q)
    is_new = np.empty(Q.size, dtype=bool)
    is_new[0] = True
    is_new[1:] = Q[1:] > running[:-1]
    return [(int(f), int(q)) for f, q in zip(F[is_new], Q[is_new])]


def _segment_ceiling(args: tuple[int, int, int, int]) -> tuple[int, int, list[tuple[int, int]], int]:
    ell, lo, hi, ceiling = args
    F, Q = segment_q1(ell, lo, hi)
    if F.size == 0:
        return 0, 0, [], 0
    i = int(np.argmax(Q))  # first occurrence
    bad = Q > ceiling
    return int(Q[i]), int(F[i]), [(int(f), int(q)) for f, q in zip(F[bad], Q[bad])], int(F.size)


def _map_ordered(fn, tasks: list, workers: int):
    """Yield fn(task) in task order, fanning out to a process pool if asked."""
    if workers == 1 or len(tasks) <= 1:
        for t in tasks:
            yield fn(t)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, tasks)


# --- checkpoints ---------------------------------------------------------------


def write_checkpoint(path: Path, ell: int, next_f: int, current_record: int) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(f"ell={ell} next_f={next_f} current_record={current_record}\n")
    os.replace(tmp, path)


def read_checkpoint(path: Path) -> dict[str, int]:
    fields = dict(tok.split("=", 1) for tok in Path(path).read_text().split())
    try:
        return {k: int(fields[k]) for k in ("ell", "next_f", "current_record")}
    except (KeyError, ValueError) as exc:
        raise NormEuclidError(f"malformed checkpoint {path}: {exc}") from None


# --- public scans ------------------------------------------------------------------


def verify_record(ell: int, f: int, q1: int) -> None:
    """Scalar re-check: chi(p) = 1 for all primes p < q1 and chi(q1) != 1."""
    chi = build_character(ell, f)
    for p in iter_primes(q1):
        j = chi.exponent(p)
        if j is not None and j != 0:
            raise AssertionError(f"f={f}: prime {p} < q1={q1} is already inert")
    j = chi.exponent(q1)
    if j is None or j == 0:
        raise AssertionError(f"f={f}: q1={q1} is not inert")


def scan_records(cfg: SurveyConfig, on_record: Optional[Callable[[RecordEntry], None]] = None) -> list[RecordEntry]:
    start, best = cfg.f_min, 0
    if cfg.checkpoint is not None and Path(cfg.checkpoint).exists():
        ck = read_checkpoint(cfg.checkpoint)
        if ck["ell"] != cfg.ell:
            raise NormEuclidError(f"checkpoint is for ell={ck['ell']}, not {cfg.ell}")
        start, best = max(start, ck["next_f"]), ck["current_record"]
        log.info("resuming at f=%d with current record q1=%d", start, best)
    segs = list(cfg.segments(start))
    tasks = [(cfg.ell, lo, hi) for lo, hi in segs]
    records = []
    for (lo, hi), local in zip(segs, _map_ordered(_segment_records, tasks, cfg.workers)):
        for f, q in local:
            if q > best:
                best = q
                verify_record(cfg.ell, f, q)
                rec = RecordEntry(f, q)
                records.append(rec)
                if on_record is not None:
                    on_record(rec)
        if cfg.checkpoint is not None:
            write_checkpoint(cfg.checkpoint, cfg.ell, hi, best)
    return records


def verify_q1_ceiling(cfg: SurveyConfig) -> CeilingReport:
    if cfg.q1_ceiling is None:
        raise ValueError("verify_q1_ceiling needs cfg.q1_ceiling")
    segs = list(cfg.segments())
    tasks = [(cfg.ell, lo, hi, cfg.q1_ceiling) for lo, hi in segs]
    report = CeilingReport(0, 0)
    for mx, arg, bad, n in _map_ordered(_segment_ceiling, tasks, cfg.workers):
        if mx > report.max_q1:
            report.max_q1, report.argmax_f = mx, arg
        report.violations.extend(RecordEntry(f, q) for f, q in bad)
        report.conductors += n
    if report.conductors:
        verify_record(cfg.ell, report.argmax_f, report.max_q1)
    return report


def spot_check(ell: int, f: int) -> RecordEntry:
    return RecordEntry(f, find_q1(build_character(ell, f)))
