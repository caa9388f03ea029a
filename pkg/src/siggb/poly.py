"""Sparse multivariate polynomials over a prime field, degrevlex ordered."""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .field import PrimeField
from .monomial import EXP_MAX, ExponentOverflow, Monomial, MonomialOrder


class PolyRing:
    """``F_p[x1, ..., xn]`` with x1 > x2 > ... > xn in degrevlex."""

    def __init__(self, names: Sequence[str] | int, field: PrimeField | int = 32003):
        if isinstance(names, int):
            names = [f"x{i}" for i in range(1, names + 1)]
        names = tuple(str(v) for v in names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        self.names = names
        self.nvars = len(names)
        self.field = field if isinstance(field, PrimeField) else PrimeField(field)
        self.p = self.field.p
        self.order = MonomialOrder(self.nvars)
        self.width = self.nvars + 1

    def __repr__(self):
        return f"PolyRing({list(self.names)}, p={self.p})"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.names == self.names
                and other.p == self.p)

    def __hash__(self):
        return hash((self.names, self.p))

    # constructors ---------------------------------------------------------
    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, np.empty((0, self.width), np.int32),
                          np.empty(0, np.int64))

    @property
    def one(self) -> "Polynomial":
        return self.term(1, Monomial.one(self.nvars))

    @property
    def gens(self) -> list["Polynomial"]:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(self.term(1, Monomial(e)))
        return out

    def monomial(self, exponents: Iterable[int]) -> Monomial:
        m = Monomial(exponents)
        if m.nvars != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {m.nvars}")
        return m

    def term(self, coef: int, mono: Monomial) -> "Polynomial":
        c = int(coef) % self.p
        if c == 0:
            return self.zero
        if mono.nvars != self.nvars:
            raise ValueError("monomial dimension does not match the ring")
        return Polynomial(self, mono.row()[None, :], np.array([c], np.int64))

    def from_terms(self, terms: Iterable[tuple]) -> "Polynomial":
        """Build from ``(monomial or exponent tuple, coefficient)`` pairs."""
        rows = []
        coefs = []
        for mono, c in terms:
            if not isinstance(mono, Monomial):
                mono = self.monomial(mono)
            elif mono.nvars != self.nvars:
                raise ValueError("monomial dimension does not match the ring")
            rows.append(mono.row())
            coefs.append(int(c) % self.p)
        if not rows:
            return self.zero
        m, c = kernels.sort_combine(np.array(rows, np.int32),
                                    np.array(coefs, np.int64), self.p)
        return Polynomial(self, m, c)

    def from_dict(self, d: Mapping[tuple, int]) -> "Polynomial":
        return self.from_terms(d.items())

    def from_arrays(self, monos, coeffs) -> "Polynomial":
        return Polynomial(self, monos, coeffs)


class Polynomial:
    """Terms strictly descending in the ring's order, no zero coefficients.

    Instances are values; the wrapped arrays must not be mutated.
    """

    __slots__ = ("ring", "monos", "coeffs")

    def __init__(self, ring: PolyRing, monos: np.ndarray, coeffs: np.ndarray):
        monos = np.ascontiguousarray(monos, dtype=np.int32)
        coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
        if monos.shape[0] and monos[0, 0] > EXP_MAX:
            raise ExponentOverflow(f"degree {monos[0, 0]} exceeds {EXP_MAX}")
        self.ring = ring
        self.monos = monos
        self.coeffs = coeffs

    # inspection -------------------------------------------------------------
    def __bool__(self):
        return self.coeffs.shape[0] > 0

    def is_zero(self) -> bool:
        return self.coeffs.shape[0] == 0

    def __len__(self):
        return self.coeffs.shape[0]

    nterms = property(__len__)

    def _nonzero(self):
        if not self.coeffs.shape[0]:
            raise ValueError("the zero polynomial has no leading term")

    @property
    def lm(self) -> Monomial:
        self._nonzero()
        return Monomial.from_row(self.monos[0])

    @property
    def lc(self) -> int:
        self._nonzero()
        return int(self.coeffs[0])

    @property
    def lt(self) -> tuple[Monomial, int]:
        return self.lm, self.lc

    @property
    def degree(self) -> int:
        return int(self.monos[0, 0]) if self.coeffs.shape[0] else -1

    def terms(self):
        for row, c in zip(self.monos, self.coeffs):
            yield Monomial.from_row(row), int(c)

    def as_dict(self) -> dict[tuple, int]:
        return {tuple(int(e) for e in row[1:]): int(c)
                for row, c in zip(self.monos, self.coeffs)}

    # arithmetic -------------------------------------------------------------
    def _same_ring(self, other):
        if other.ring != self.ring:
            raise ValueError("polynomials belong to different rings")

    def _wrap(self, m, c):
        return Polynomial(self.ring, m, c)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.one * other
        self._same_ring(other)
        p = self.ring.p
        zero = np.zeros(self.ring.width, np.int32)
        return self._wrap(*kernels.sub_mul(self.monos, self.coeffs, p - 1, zero,
                                           other.monos, other.coeffs, p))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.one * other
        self._same_ring(other)
        zero = np.zeros(self.ring.width, np.int32)
        return self._wrap(*kernels.sub_mul(self.monos, self.coeffs, 1, zero,
                                           other.monos, other.coeffs,
                                           self.ring.p))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self.scale(self.ring.p - 1)

    def scale(self, c: int) -> "Polynomial":
        c = int(c) % self.ring.p
        if c == 0:
            return self.ring.zero
        return self._wrap(self.monos.copy(), (self.coeffs * c) % self.ring.p)

    def mul_term(self, coef: int, mono: Monomial) -> "Polynomial":
        coef = int(coef) % self.ring.p
        if coef == 0 or not self:
            return self.ring.zero
        if mono.nvars != self.ring.nvars:
            raise ValueError("monomial dimension does not match the ring")
        return self._wrap(*kernels.mul_term(self.monos, self.coeffs, coef,
                                            mono.row(), self.ring.p))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, Monomial):
            return self.mul_term(1, other)
        self._same_ring(other)
        if not self or not other:
            return self.ring.zero
        m = (self.monos[:, None, :] + other.monos[None, :, :]).reshape(-1, self.ring.width)
        c = (self.coeffs[:, None] * other.coeffs[None, :]).reshape(-1) % self.ring.p
        return self._wrap(*kernels.sort_combine(m, c, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.ring.one
        for _ in range(int(e)):
            out = out * self
        return out

    def monic(self) -> "Polynomial":
        if not self:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    # comparison / display ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.one * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.ring == other.ring
                and np.array_equal(self.monos, other.monos)
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.monos.tobytes(), self.coeffs.tobytes()))

    def sort_key(self):
        """Key ordering polynomials by leading monomial, then all terms."""
        return tuple(self.ring.order.row_key(r) for r in self.monos)

    def __str__(self):
        if not self:
            return "0"
        names = self.ring.names
        field = self.ring.field
        parts = []
        for row, c in zip(self.monos, self.coeffs):
            c = field.to_signed(int(c))
            factors = []
            for v, e in zip(names, row[1:]):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mon = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mon:
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{a}*{mon}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"


def s_polynomial(p: Polynomial, q: Polynomial) -> Polynomial:
    """``(t/t_p) p - (c_p/c_q)(t/t_q) q`` with ``t = lcm(lm p, lm q)``."""
    if not p or not q:
        raise ValueError("S-polynomial of the zero polynomial")
    ring = p.ring
    lcm = np.maximum(p.monos[0], q.monos[0])
    lcm[0] = lcm[1:].sum()
    u = lcm - p.monos[0]
    v = lcm - q.monos[0]
    up_m, up_c = kernels.mul_term(p.monos, p.coeffs, 1, u, ring.p)
    a = ring.field.div(p.lc, q.lc)
    return Polynomial(ring, *kernels.sub_mul(up_m, up_c, a, v, q.monos,
                                             q.coeffs, ring.p))


class ReducerTable:
    """Growable flat storage of reducer polynomials for the kernels.

    Row ``j`` records the polynomial's terms (a slice of the pool), its
    leading monomial, inverse leading coefficient, a signature (monomial row
    and index; zeros when unused) and whether it may act as a reducer.
    """

    def __init__(self, ring: PolyRing, capacity: int = 64):
        w = ring.width
        self.ring = ring
        self.count = 0
        self.used = 0
        self._pool_m = np.zeros((capacity * 8, w), np.int32)
        self._pool_c = np.zeros(capacity * 8, np.int64)
        self._starts = np.zeros(capacity, np.int64)
        self._ends = np.zeros(capacity, np.int64)
        self._lm = np.zeros((capacity, w), np.int32)
        self._lcinv = np.zeros(capacity, np.int64)
        self._sigm = np.zeros((capacity, w), np.int32)
        self._sigi = np.zeros(capacity, np.int64)
        self._active = np.zeros(capacity, np.bool_)
        self._nterms = np.zeros(capacity, np.int64)
        self._dmask = np.zeros(capacity, np.int64)

    def _grow_rows(self):
        cap = self._starts.shape[0] * 2
        for name in ("_starts", "_ends", "_lm", "_lcinv", "_sigm", "_sigi",
                     "_active", "_nterms", "_dmask"):
            old = getattr(self, name)
            new = np.zeros((cap,) + old.shape[1:], old.dtype)
            new[: old.shape[0]] = old
            setattr(self, name, new)

    def _grow_pool(self, need):
        cap = max(self._pool_c.shape[0] * 2, need)
        m = np.zeros((cap, self.ring.width), np.int32)
        c = np.zeros(cap, np.int64)
        m[: self.used] = self._pool_m[: self.used]
        c[: self.used] = self._pool_c[: self.used]
        self._pool_m, self._pool_c = m, c

    def append(self, poly: Polynomial, sig_row=None, sig_idx: int = 0,
               active: bool = True) -> int:
        j = self.count
        if j == self._starts.shape[0]:
            self._grow_rows()
        k = len(poly)
        if self.used + k > self._pool_c.shape[0]:
            self._grow_pool(self.used + k)
        self._pool_m[self.used: self.used + k] = poly.monos
        self._pool_c[self.used: self.used + k] = poly.coeffs
        self._starts[j] = self.used
        self._ends[j] = self.used + k
        self.used += k
        self._nterms[j] = k
        if k:
            self._lm[j] = poly.monos[0]
            self._lcinv[j] = self.ring.field.inv(int(poly.coeffs[0]))
            self._dmask[j] = kernels.dmask(poly.monos[0])
        self._active[j] = bool(k) and active
        if sig_row is not None:
            self._sigm[j] = sig_row
        self._sigi[j] = sig_idx
        self.count += 1
        return j

    def set_active(self, j: int, flag: bool):
        self._active[j] = flag and self._nterms[j] > 0

    @property
    def pool_m(self):
        return self._pool_m[: self.used]

    @property
    def pool_c(self):
        return self._pool_c[: self.used]

    def __getattr__(self, name):
        # starts, ends, lm, lcinv, sigm, sigi, active, nterms as live views
        if name in ("starts", "ends", "lm", "lcinv", "sigm", "sigi", "active",
                    "nterms", "dmask"):
            return self.__dict__["_" + name][: self.__dict__["count"]]
        raise AttributeError(name)

    def poly(self, j: int) -> Polynomial:
        s, e = self._starts[j], self._ends[j]
        return Polynomial(self.ring, self._pool_m[s:e].copy(),
                          self._pool_c[s:e].copy())


def top_reduce_full(p: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Full normal form of ``p`` modulo ``G``: no term is divisible by any lm(g)."""
    table = ReducerTable(p.ring, capacity=max(len(G), 1))
    for g in G:
        table.append(g)
    return reduce_with_table(p, table)


def reduce_with_table(p: Polynomial, table: ReducerTable) -> Polynomial:
    if not p or table.count == 0:
        return p
    m, c, _ = kernels.normal_form(p.monos, p.coeffs, table.pool_m, table.pool_c,
                                  table.starts, table.ends, table.lm,
                                  table.dmask, table.lcinv, table.active, p.ring.p)
    return Polynomial(p.ring, m, c)
