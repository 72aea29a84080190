"""Arithmetic in the prime field GF(p) and binomial coefficients mod p."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Prime(int):
    """An int that is known to be prime.  Construction fails otherwise."""

    def __new__(cls, p):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return super().__new__(cls, p)


class FieldElem:
    __slots__ = ("value", "p")

    def __init__(self, value, p):
        p = int(p)
        self.p = p
        self.value = int(value) % p

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise ValueError(f"characteristic mismatch: {self.p} vs {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElem(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value, self.p)

    def inverse(self) -> FieldElem:
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p)")
        return FieldElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * FieldElem(v, self.p).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElem(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElem({self.value}, p={self.p})"

    def __str__(self):
        return str(self.value)


@lru_cache(maxsize=None)
def _small_binom(a: int, b: int, p: int) -> int:
    return comb(a, b) % p


def binom_int_mod_p(a: int, b: int, p: int) -> int:
    """C(a, b) mod p via Lucas' theorem, as a plain int."""
    if b < 0 or a < 0 or b > a:
        return 0
    out = 1
    while a or b:
        a, ai = divmod(a, p)
        b, bi = divmod(b, p)
        if bi > ai:
            return 0
        out = out * _small_binom(ai, bi, p) % p
    return out


def binom_mod_p(a: int, b: int, p: int) -> FieldElem:
    return FieldElem(binom_int_mod_p(a, b, p), p)


def binom_general(a: int, b: int) -> int:
    """Generalised binomial C(a, b) over the integers, any integer a, b >= 0."""
    if b < 0:
        return 0
    num = 1
    for k in range(b):
        num *= a - k
    return num // factorial(b)


def orbit_size_mod_p(lam, p: int) -> FieldElem:
    """|S_p / S_lambda| mod p for a partition with exactly p parts."""
    lam = list(lam)
    if len(lam) != p:
        raise ValueError(f"expected {p} parts, got {len(lam)}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("parts must be weakly decreasing")
    mult = Counter(lam).values()
    size = factorial(p)
    for m in mult:
        size //= factorial(m)
    return FieldElem(size, p)
