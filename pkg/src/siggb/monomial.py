"""Monomials and the degree reverse lexicographic order."""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

# exponents are 16-bit quantities; degree bounds every exponent
EXP_MAX = 2**15 - 1

LT, EQ, GT = -1, 0, 1


class ExponentOverflow(OverflowError):
    pass


class Monomial:
    """Immutable exponent vector with its total degree cached."""

    __slots__ = ("exponents", "degree", "_hash")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        deg = sum(exps)
        if deg > EXP_MAX:
            raise ExponentOverflow(f"degree {deg} exceeds {EXP_MAX}")
        self.exponents = exps
        self.degree = deg
        self._hash = hash(exps)

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def from_row(cls, row) -> "Monomial":
        return cls(int(e) for e in row[1:])

    def row(self) -> np.ndarray:
        return np.array((self.degree,) + self.exponents, dtype=np.int32)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def _check(self, other: "Monomial"):
        if len(other.exponents) != len(self.exponents):
            raise ValueError(
                f"monomials live in different rings ({len(self.exponents)} vs "
                f"{len(other.exponents)} variables)")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return Monomial(a - b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def is_one(self) -> bool:
        return self.degree == 0

    def __eq__(self, other):
        return isinstance(other, Monomial) and other.exponents == self.exponents

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self.exponents})"


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def mono_quot(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; raises when ``b`` does not divide ``a``."""
    return a / b


class MonomialOrder:
    """Degree reverse lexicographic order on ``nvars`` variables, x1 > ... > xn.

    Other orders would subclass this; only degrevlex is provided.
    """

    kind = "degrevlex"

    def __init__(self, nvars: int):
        self.nvars = int(nvars)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and other.kind == self.kind
                and other.nvars == self.nvars)

    def __hash__(self):
        return hash((self.kind, self.nvars))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, nvars={self.nvars})"

    def key(self, m: Monomial) -> tuple:
        """Sort key: ``key(a) < key(b)`` iff ``a < b``."""
        return (m.degree,) + tuple(-e for e in reversed(m.exponents))

    @staticmethod
    def row_key(row: Sequence[int]) -> tuple:
        return (int(row[0]),) + tuple(-int(e) for e in row[:0:-1])

    def cmp(self, a: Monomial, b: Monomial) -> int:
        if a.nvars != self.nvars or b.nvars != self.nvars:
            raise ValueError("monomial dimension does not match the order")
        if a.degree != b.degree:
            return GT if a.degree > b.degree else LT
        for x, y in zip(reversed(a.exponents), reversed(b.exponents)):
            if x != y:
                return GT if x < y else LT
        return EQ


def mono_cmp(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    return order.cmp(a, b)
