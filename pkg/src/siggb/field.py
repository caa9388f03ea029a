"""Prime fields F_p with canonical residues in ``[0, p)``."""
from __future__ import annotations

DEFAULT_CHARACTERISTIC = 32003
MAX_CHARACTERISTIC = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The field of integers modulo an odd prime ``2 < p < 2**31``."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_CHARACTERISTIC):
        p = int(p)
        if not 2 < p < MAX_CHARACTERISTIC or not is_prime(p):
            raise ValueError(f"characteristic must be a prime in (2, 2^31), got {p}")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __call__(self, a: int) -> int:
        return int(a) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.p

    def to_signed(self, a: int) -> int:
        """Symmetric representative in ``(-p/2, p/2]``, for printing."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a
