"""Acceptance criteria 1-8.

Each test records a verdict; a one-line summary per criterion is printed
at the end of the session (see ``conftest.pytest_terminal_summary``).
Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import copy
import time
from collections import defaultdict
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from siggb import PolyRing
from siggb.bench import DEFAULT_PAIR_CEILING
from siggb.engine import MonSig, certify, incremental_gb
from siggb.oracle import buchberger, interreduce
from siggb.systems import named_system

STRATEGIES = ["f5", "f5p", "ggv", "arri", "minmon"]
DESK = ["katsura4", "katsura5", "katsura6", "katsura7", "cyclic4", "cyclic5",
        "cyclic6", "eco5", "eco6", "eco7"]
PAIR_TOLERANCE = 0.02

# (system, strategy) -> (pairs reduced, zero reductions)
REFERENCE_COUNTS = {
    ("katsura9", "f5"): (886, 0), ("katsura9", "ggv"): (886, 0),
    ("katsura9", "arri"): (886, 0),
    ("cyclic7", "f5"): (1063, 44), ("cyclic7", "ggv"): (3108, 36),
    ("cyclic7", "arri"): (781, 36),
    ("eco8", "f5"): (830, 322), ("eco8", "ggv"): (2012, 57),
    ("eco8", "arri"): (694, 57),
    ("eco8", "f5p"): (565, 57), ("eco9", "f5p"): (1278, 120),
}

NAMES = {
    1: "oracle equivalence",
    2: "reference pair counts",
    3: "strategy ordering",
    4: "reduction fixpoint invariants",
    5: "certify mode",
    6: "redundancy check forms agree",
    7: "termination without redundancy check",
    8: "timings (informational)",
}

RESULTS = defaultdict(list)  # criterion -> [(ok, detail)]
TIMINGS = {}


def record(n, ok, detail):
    RESULTS[n].append((bool(ok), detail))
    print(f"[criterion {n}] {'ok' if ok else 'FAIL'}: {detail}")


def summary_lines():
    lines = []
    for n, name in NAMES.items():
        rows = RESULTS.get(n)
        if not rows:
            continue
        bad = [d for ok, d in rows if not ok]
        verdict = "PASS" if not bad else "FAIL"
        tail = f"{len(rows) - len(bad)}/{len(rows)} checks"
        if bad:
            tail += "; failing: " + "; ".join(bad)
        lines.append(f"criterion {n} ({name}): {verdict} [{tail}]")
    return lines


@lru_cache(maxsize=None)
def run(system, strategy, **kw):
    t = time.perf_counter()
    res = incremental_gb(named_system(system).polys, strategy, **kw)
    if not kw:
        TIMINGS[(system, strategy)] = time.perf_counter() - t
    return res


@lru_cache(maxsize=None)
def oracle(system):
    return buchberger(named_system(system).polys)


# -- 1 -----------------------------------------------------------------------

@pytest.mark.parametrize("system", DESK + ["toy"])
@pytest.mark.parametrize("strategy", STRATEGIES)
def test_oracle_equivalence(system, strategy):
    got = interreduce(run(system, strategy).basis)
    ok = got == interreduce(oracle(system))
    record(1, ok, f"{system}/{strategy}")
    assert ok


def _random_poly(R, draw_terms):
    return R.from_terms(((e, c) for e, c in draw_terms))


term = st.tuples(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                 st.integers(1, 32002))
system_st = st.lists(st.lists(term, min_size=1, max_size=4), min_size=1, max_size=3)


def test_oracle_equivalence_random():
    R = PolyRing(["x", "y", "z"])
    seen = []

    @settings(max_examples=40, deadline=None, database=None,
              suppress_health_check=[HealthCheck.too_slow])
    @given(system_st)
    def prop(raw):
        F = [f for f in (_random_poly(R, t) for t in raw) if f]
        if not F:
            return
        want = buchberger(F)
        for s in STRATEGIES:
            got = interreduce(incremental_gb(F, s).basis)
            assert got == want, f"{s} on {[str(f) for f in F]}"
        seen.append(len(F))

    try:
        prop()
    except AssertionError as e:
        record(1, False, f"random systems: {str(e).splitlines()[0]}")
        raise
    record(1, True, f"{len(seen)} random 3-variable systems x 5 strategies")


# -- 2 -----------------------------------------------------------------------

@pytest.mark.slow
@pytest.mark.parametrize("system,strategy", list(REFERENCE_COUNTS))
def test_reference_counts(system, strategy):
    want_p, want_z = REFERENCE_COUNTS[(system, strategy)]
    s = run(system, strategy).stats
    dev = (s.pairs_reduced - want_p) / want_p
    ok = s.zero_reductions == want_z and abs(dev) <= PAIR_TOLERANCE
    record(2, ok, f"{system}/{strategy} {s.pairs_reduced};{s.zero_reductions} "
                  f"vs {want_p};{want_z} ({dev:+.1%})")
    assert s.zero_reductions == want_z
    assert abs(dev) <= PAIR_TOLERANCE


# -- 3 -----------------------------------------------------------------------

@pytest.mark.parametrize("system", [
    "cyclic6", pytest.param("cyclic7", marks=pytest.mark.slow), "eco7", "eco8"])
def test_strategy_ordering(system):
    a, f, g = (run(system, s).stats.pairs_reduced for s in ("arri", "f5", "ggv"))
    ok = a <= f <= g
    record(3, ok, f"{system} arri {a} <= f5 {f} <= ggv {g}")
    assert ok


# -- 4 -----------------------------------------------------------------------

@pytest.mark.parametrize("system", ["cyclic5", "katsura5"])
@pytest.mark.parametrize("strategy", STRATEGIES)
def test_fixpoint_invariants(system, strategy):
    ck = run(system, strategy, check=True).stats.checks
    ok = (ck["fixpoints"] > 0 and ck["type_a_left"] == 0 and ck["type_b_left"] == 0
          and ck["orientation_bad"] == 0)
    record(4, ok, f"{system}/{strategy} fixpoints={ck['fixpoints']} "
                  f"A={ck['type_a_left']} B={ck['type_b_left']} "
                  f"bad pairs={ck['orientation_bad']}/{ck['pairs_checked']}")
    assert ok


# -- 5 -----------------------------------------------------------------------

@pytest.mark.parametrize("strategy", STRATEGIES)
def test_certify(strategy):
    res = run("cyclic5", strategy, certify=True)
    ok = bool(res.witnesses) and all(certify(w) for w in res.witnesses)
    record(5, ok, f"cyclic5/{strategy} {len(res.witnesses)} increments")
    assert ok


def test_certify_catches_corruption():
    res = run("cyclic5", "arri", certify=True)
    w = copy.deepcopy(res.witnesses[-1])
    top = len(w.inputs)
    e = next(e for e, _ in w.entries if e.poly and e.sig.index == top
             and not e.sig.monomial.is_one())
    x1 = e.poly.ring.gens[0].lm
    e.sig = MonSig(e.sig.monomial * x1, e.sig.index)
    ok = not certify(w)
    record(5, ok, "corrupted signature rejected")
    assert ok


# -- 6 -----------------------------------------------------------------------

@pytest.mark.parametrize("system", DESK)
@pytest.mark.parametrize("strategy", STRATEGIES)
def test_redundancy_forms_agree(system, strategy):
    ck = run(system, strategy, check=True).stats.checks
    calls = ck["redundancy_calls"] + ck["gs_calls"]
    bad = ck["redundancy_disagree"] + ck["gs_disagree"]
    ok = calls > 0 and bad == 0
    record(6, ok, f"{system}/{strategy} {bad} disagreements in {calls} calls")
    assert ok


# -- 7 -----------------------------------------------------------------------

@pytest.mark.parametrize("system", DESK)
@pytest.mark.parametrize("strategy", STRATEGIES)
def test_terminates_without_redundancy_check(system, strategy):
    res = run(system, strategy, use_redundancy_check=False,
              max_pairs=DEFAULT_PAIR_CEILING)
    ok = (res.stats.pairs_reduced <= DEFAULT_PAIR_CEILING
          and interreduce(res.basis) == interreduce(oracle(system)))
    record(7, ok, f"{system}/{strategy} {res.stats.pairs_reduced} pairs")
    assert ok


# -- 8 -----------------------------------------------------------------------

def test_timings_reported():
    for (system, strategy), t in sorted(TIMINGS.items()):
        if (system, strategy) in REFERENCE_COUNTS:
            record(8, True, f"{system}/{strategy} {t:.1f}s")
    if not RESULTS.get(8):
        record(8, True, "no timed runs in this session")
