"""Benchmark systems and the ``.poly`` text format.

Format::

    # comment
    name: cyclic3          (optional)
    vars: x, y, z
    char: 32003
    x + y + z
    x*y + y*z + z*x
    x*y*z - 1

Terms are ``c*x^e*y^f``; ``*`` and ``^`` are mandatory, whitespace is
ignored, terms are separated by ``+`` or ``-``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .field import MAX_CHARACTERISTIC, PrimeField, is_prime
from .monomial import EXP_MAX
from .poly import Polynomial, PolyRing


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class SystemSpec:
    name: str
    ring: PolyRing
    polys: list

    @property
    def variables(self):
        return self.ring.names


def _ring(names, p=32003):
    return PolyRing(names, PrimeField(p))


def gen_cyclic(n: int, p: int = 32003) -> SystemSpec:
    """Cyclic-n: the elementary cyclic sums of degree 1..n-1, then prod - 1."""
    if n < 2:
        raise ValueError("cyclic-n needs n >= 2")
    R = _ring([f"x{k}" for k in range(1, n + 1)], p)
    x = R.gens
    polys = []
    for d in range(1, n):
        s = R.zero
        for i in range(n):
            t = R.one
            for j in range(d):
                t = t * x[(i + j) % n]
            s = s + t
        polys.append(s)
    prod = R.one
    for v in x:
        prod = prod * v
    polys.append(prod - 1)
    return SystemSpec(f"cyclic{n}", R, polys)


def gen_katsura(n: int, p: int = 32003) -> SystemSpec:
    """Katsura-n in ``n+1`` variables ``x0..xn``: the quadrics
    ``sum_l x_|l| x_|m-l| - x_m`` for ``m = 0..n-1`` first, the linear
    equation ``x0 + 2(x1 + ... + xn) - 1`` last."""
    if n < 1:
        raise ValueError("katsura-n needs n >= 1")
    R = _ring([f"x{k}" for k in range(n + 1)], p)
    x = R.gens

    def u(k):
        k = abs(k)
        return x[k] if k <= n else None

    polys = []
    for m in range(n):
        s = R.zero
        for l in range(-n, n + 1):
            a, b = u(l), u(m - l)
            if a is not None and b is not None:
                s = s + a * b
        polys.append(s - x[m])
    polys.append(x[0] + sum((2 * x[k] for k in range(1, n + 1)), R.zero) - 1)
    return SystemSpec(f"katsura{n}", R, polys)


def gen_eco(n: int, p: int = 32003, homogeneous: bool = True) -> SystemSpec:
    """Eco-n: ``(x_k + sum_{i<=n-k-1} x_i x_{i+k}) x_n - k`` for
    ``k = 1..n-1``, then ``x_1 + ... + x_{n-1} + 1``.

    By default each equation is homogenized with an extra variable ``h``,
    smallest in the order; ``homogeneous=False`` gives the affine system.
    """
    if n < 2:
        raise ValueError("eco-n needs n >= 2")
    R = _ring([f"x{k}" for k in range(1, n + 1)], p)
    x = [None] + R.gens
    polys = []
    for k in range(1, n):
        s = x[k]
        for i in range(1, n - k):
            s = s + x[i] * x[i + k]
        polys.append(s * x[n] - k)
    polys.append(sum((x[i] for i in range(1, n)), R.zero) + 1)
    if not homogeneous:
        return SystemSpec(f"eco{n}", R, polys)
    H = _ring(list(R.names) + ["h"], p)
    return SystemSpec(f"eco{n}", H, [homogenize(f, H) for f in polys])


def homogenize(f: Polynomial, H: PolyRing) -> Polynomial:
    """Homogenize ``f`` into ``H``, whose last variable is the new one."""
    d = f.degree
    return H.from_terms((m.exponents + (d - m.degree,), c) for m, c in f.terms())


def toy_system(p: int = 32003) -> SystemSpec:
    R = _ring(["x", "y"], p)
    x, y = R.gens
    return SystemSpec("toy", R, [x**2 - y, x * y - 1])


GENERATORS = {"katsura": gen_katsura, "cyclic": gen_cyclic, "eco": gen_eco}

_NAMED = re.compile(r"^(katsura|cyclic|eco)-?(\d+)$")


def named_system(name: str, p: int = 32003) -> SystemSpec:
    """``katsura9``, ``cyclic-7``, ``eco8`` or ``toy``."""
    key = name.strip().lower()
    if key == "toy":
        return toy_system(p)
    m = _NAMED.match(key)
    if not m:
        raise ValueError(f"unknown system {name!r}")
    return GENERATORS[m.group(1)](int(m.group(2)), p)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _parse_poly(text: str, lineno: int, ring: PolyRing, index: dict) -> Polynomial:
    pos = 0
    n = len(text)

    def err(msg, at):
        raise ParseError(msg, lineno, at + 1)

    def peek():
        m = _TOKEN.match(text, pos)
        if not m or m.lastindex is None:
            return None, None, None, n
        return m, m.lastindex, m.group(m.lastindex), m.start(m.lastindex)

    terms = []
    sign = 1
    m, kind, val, at = peek()
    if m is not None and kind == 3 and val in "+-":
        sign = -1 if val == "-" else 1
        pos = m.end()
    while True:
        coef = 1
        exps = [0] * ring.nvars
        while True:  # factor ('*' factor)*
            m, kind, val, at = peek()
            if m is None:
                err("term expected", n)
            pos = m.end()
            if kind == 1:
                coef *= int(val)
            elif kind == 2:
                if val not in index:
                    err(f"unknown variable {val!r}", at)
                e = 1
                m2, k2, v2, _ = peek()
                if m2 is not None and k2 == 3 and v2 == "^":
                    pos = m2.end()
                    m3, k3, v3, at3 = peek()
                    if m3 is None or k3 != 1:
                        err("exponent expected after '^'", at3)
                    pos = m3.end()
                    e = int(v3)
                exps[index[val]] += e
                if exps[index[val]] > EXP_MAX:
                    err("exponent too large", at)
            else:
                err(f"unexpected {val!r}", at)
            m, kind, val, at = peek()
            if m is not None and kind == 3 and val == "*":
                pos = m.end()
                continue
            break
        terms.append((exps, sign * coef))
        if m is None:
            break
        if kind == 3 and val in "+-":
            sign = -1 if val == "-" else 1
            pos = m.end()
            continue
        err(f"expected '+' or '-', got {val!r}", at)
    return ring.from_terms(terms)


def parse_system(text: str, name: str = "system") -> SystemSpec:
    names = None
    char = 32003
    ring = None
    index = {}
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head = line.strip().lower()
        if head.startswith("vars:") or head.startswith("char:") or head.startswith("name:"):
            if ring is not None:
                raise ParseError("header after the first polynomial", lineno, 1)
            key, _, val = line.partition(":")
            key = key.strip().lower()
            val = val.strip()
            if key == "vars":
                names = [v.strip() for v in val.split(",")]
                for v in names:
                    if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                        raise ParseError(f"bad variable name {v!r}", lineno,
                                         raw.find(v) + 1 if v else 1)
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable", lineno, 1)
            elif key == "char":
                if not val.isdigit():
                    raise ParseError(f"bad characteristic {val!r}", lineno, raw.find(":") + 2)
                char = int(val)
                if not 2 < char < MAX_CHARACTERISTIC or not is_prime(char):
                    raise ParseError(f"characteristic {char} is not a prime in (2, 2^31)",
                                     lineno, 1)
            else:
                name = val
            continue
        if ring is None:
            if names is None:
                raise ParseError("missing 'vars:' header", lineno, 1)
            try:
                ring = _ring(names, char)
            except ValueError as e:
                raise ParseError(str(e), lineno, 1) from None
            index = {v: k for k, v in enumerate(names)}
        polys.append(_parse_poly(line, lineno, ring, index))
    if ring is None:
        if names is None:
            raise ParseError("missing 'vars:' header", 1, 1)
        raise ParseError("no polynomials", len(text.splitlines()) or 1, 1)
    return SystemSpec(name, ring, polys)


def load_system(path: str | Path) -> SystemSpec:
    path = Path(path)
    return parse_system(path.read_text(), name=path.stem)


def render(spec: SystemSpec) -> str:
    """Inverse of ``parse_system`` up to reduction of coefficients mod p."""
    lines = [f"name: {spec.name}", f"vars: {', '.join(spec.ring.names)}",
             f"char: {spec.ring.p}"]
    lines += [render_poly(f) for f in spec.polys]
    return "\n".join(lines) + "\n"


def render_poly(f: Polynomial) -> str:
    """Signed coefficients, e.g. ``x^2 - 3*y + 1``."""
    if not f:
        return "0"
    names = f.ring.names
    out = []
    for mono, c in f.terms():
        c = f.ring.field.to_signed(c)
        factors = [] if abs(c) == 1 and not mono.is_one() else [str(abs(c))]
        for v, e in zip(names, mono.exponents):
            if e == 1:
                factors.append(v)
            elif e:
                factors.append(f"{v}^{e}")
        term = "*".join(factors)
        if not out:
            out.append(("-" if c < 0 else "") + term)
        else:
            out.append(("- " if c < 0 else "+ ") + term)
    return " ".join(out)
