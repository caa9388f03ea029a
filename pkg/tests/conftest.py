"""Shared fixtures plus a dict-based reference arithmetic."""
import itertools

import pytest

from siggb import PolyRing

P = 32003


def dict_add(a, b, p=P):
    out = dict(a)
    for m, c in b.items():
        out[m] = (out.get(m, 0) + c) % p
    return {m: c for m, c in out.items() if c}


def dict_neg(a, p=P):
    return {m: (-c) % p for m, c in a.items()}


def dict_mul(a, b, p=P):
    out = {}
    for (ma, ca), (mb, cb) in itertools.product(a.items(), b.items()):
        m = tuple(x + y for x, y in zip(ma, mb))
        out[m] = (out.get(m, 0) + ca * cb) % p
    return {m: c for m, c in out.items() if c}


def degrevlex_greater(a, b):
    """Definition: higher degree, or equal degree and the last nonzero
    entry of ``a - b`` is negative."""
    if sum(a) != sum(b):
        return sum(a) > sum(b)
    diff = [x - y for x, y in zip(a, b)]
    for d in reversed(diff):
        if d:
            return d < 0
    return False


def dict_lead(a):
    best = None
    for m in a:
        if best is None or degrevlex_greater(m, best):
            best = m
    return best


@pytest.fixture
def R2():
    return PolyRing(["x", "y"])


@pytest.fixture
def R3():
    return PolyRing(["x", "y", "z"])


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
