"""Benchmark runs: one (system, strategy) pair at a time, CSV in and out."""
from __future__ import annotations

import csv
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Optional

from .engine import GBResult, certify, incremental_gb
from .oracle import buchberger, ideals_equal
from .systems import SystemSpec, load_system, named_system

CSV_COLUMNS = ("system", "strategy", "pairs_reduced", "zero_reductions",
               "basis_size", "skipped_inputs", "time_ms")

# ceiling on reduced pairs when the redundancy gate is switched off
DEFAULT_PAIR_CEILING = 200_000


@dataclass
class RunStats:
    system: str
    strategy: str
    pairs_reduced: int
    zero_reductions: int
    basis_size: int
    skipped_inputs: int
    time_ms: float

    def __post_init__(self):
        if self.zero_reductions > self.pairs_reduced:
            raise ValueError("more zero reductions than pairs reduced")

    def row(self) -> dict:
        return asdict(self)


@dataclass
class RunOutcome:
    stats: RunStats
    basis: list
    verified: Optional[bool] = None
    certified: Optional[bool] = None
    result: Optional[GBResult] = None


def resolve_system(name: str, p: int = 32003) -> SystemSpec:
    """A generator name like ``cyclic7`` or a path to a ``.poly`` file."""
    path = Path(name)
    if path.suffix == ".poly" or path.exists():
        spec = load_system(path)
        if p != 32003 and spec.ring.p != p:
            raise ValueError(f"{path} declares char {spec.ring.p}, --char asks for {p}")
        return spec
    return named_system(name, p)


def run_one(spec: SystemSpec, strategy: str, *, verify: bool = False,
            certify_run: bool = False, use_redundancy_check: bool = True,
            tail_reduce: bool = False, timeout: Optional[float] = None,
            max_pairs: Optional[int] = None, check: bool = False) -> RunOutcome:
    t0 = time.perf_counter()
    if strategy == "buchberger":
        st = {}
        basis = buchberger(spec.polys, st)
        ms = (time.perf_counter() - t0) * 1e3
        stats = RunStats(spec.name, strategy, st["pairs_reduced"],
                         st["zero_reductions"], len(basis), 0, round(ms, 1))
        return RunOutcome(stats, basis, verified=True if verify else None)
    if not use_redundancy_check and max_pairs is None:
        max_pairs = DEFAULT_PAIR_CEILING
    res = incremental_gb(spec.polys, strategy, tail_reduce=tail_reduce,
                         certify=certify_run, check=check,
                         use_redundancy_check=use_redundancy_check,
                         max_pairs=max_pairs, timeout=timeout)
    ms = (time.perf_counter() - t0) * 1e3
    stats = RunStats(spec.name, strategy, res.stats.pairs_reduced,
                     res.stats.zero_reductions, len(res.basis),
                     len(res.skipped_inputs), round(ms, 1))
    out = RunOutcome(stats, res.basis, result=res)
    if verify:
        out.verified = ideals_equal(res.basis, buchberger(spec.polys))
    if certify_run:
        out.certified = all(certify(w) for w in res.witnesses)
    return out


def _job(args):
    system, strategy, p, kw = args
    return run_one(resolve_system(system, p), strategy, **kw).stats


def worker_count(jobs: int) -> int:
    cap = os.environ.get("SIGGB_THREADS")
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, min(n, jobs))


def run_benchmark(systems: Iterable[str], strategies: Iterable[str], p: int = 32003,
                  **kw) -> list[RunStats]:
    """Every system under every strategy; runs share nothing, so they fan
    out over worker processes (at most ``SIGGB_THREADS``)."""
    jobs = [(s, st, p, kw) for s in systems for st in strategies]
    n = worker_count(len(jobs))
    if n == 1:
        return [_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(_job, jobs))


def write_csv(rows: Iterable[RunStats], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        w.writeheader()
        for r in rows:
            w.writerow(r.row())


def read_csv(path) -> list[RunStats]:
    types = {f.name: f.type for f in fields(RunStats)}
    out = []
    with open(path, newline="") as fh:
        for rec in csv.DictReader(fh):
            vals = {}
            for k, v in rec.items():
                t = types[k]
                vals[k] = v if t == "str" else (float(v) if t == "float" else int(v))
            out.append(RunStats(**vals))
    return out
