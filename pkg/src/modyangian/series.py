"""Truncated power series in u^{-1} with coefficients in a PBW algebra.

A series knows its coefficients of u^0 .. u^{-trunc} exactly; anything
beyond ``trunc`` is unknown, and asking for it raises PrecisionError rather
than returning zero.
"""

from __future__ import annotations

import os

from .algebra import ContextMismatch, Element, PrecisionError
from .field import binom_int_mod_p

DEFAULT_TRUNC = int(os.environ.get("MODYANGIAN_TRUNC", "8"))


class Series:
    __slots__ = ("alg", "trunc", "coeffs")

    def __init__(self, alg, coeffs, trunc: int):
        if trunc < 0:
            raise ValueError("trunc must be nonnegative")
        self.alg = alg
        self.trunc = trunc
        cs = list(coeffs)[: trunc + 1]
        zero = alg.zero()
        cs += [zero] * (trunc + 1 - len(cs))
        for c in cs:
            if c.alg is not alg:
                raise ContextMismatch("coefficient from a different algebra")
        self.coeffs = cs

    # -- constructors ------------------------------------------------------
    @classmethod
    def constant(cls, alg, c, trunc):
        if not isinstance(c, Element):
            c = alg.scalar(c)
        return cls(alg, [c], trunc)

    @classmethod
    def one(cls, alg, trunc):
        return cls(alg, [alg.one()], trunc)

    @classmethod
    def zero(cls, alg, trunc):
        return cls(alg, [], trunc)

    # -- access --------------------------------------------------------------
    def coefficient(self, r: int) -> Element:
        if r < 0:
            raise ValueError("negative exponent")
        if r > self.trunc:
            raise PrecisionError(f"coefficient u^-{r} requested, series known to u^-{self.trunc}")
        return self.coeffs[r]

    __getitem__ = coefficient

    def _check(self, other):
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.alg is not self.alg:
            raise ContextMismatch(f"{self.alg!r} vs {other.alg!r}")

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise PrecisionError(f"cannot extend precision {self.trunc} to {trunc}")
        return Series(self.alg, self.coeffs, trunc)

    # -- ring operations -------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        N = min(self.trunc, other.trunc)
        return Series(self.alg, [a + b for a, b in zip(self.coeffs[: N + 1], other.coeffs)], N)

    def __sub__(self, other):
        self._check(other)
        N = min(self.trunc, other.trunc)
        return Series(self.alg, [a - b for a, b in zip(self.coeffs[: N + 1], other.coeffs)], N)

    def __neg__(self):
        return Series(self.alg, [-a for a in self.coeffs], self.trunc)

    def scale(self, c):
        return Series(self.alg, [a.scale(c) for a in self.coeffs], self.trunc)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, e: int):
        out = Series.one(self.alg, self.trunc)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.alg is other.alg and self.trunc == other.trunc and self.coeffs == other.coeffs

    def agrees_with(self, other) -> bool:
        """Equality of all coefficients known to both series."""
        self._check(other)
        N = min(self.trunc, other.trunc)
        return self.coeffs[: N + 1] == other.coeffs[: N + 1]

    def first_difference(self, other):
        N = min(self.trunc, other.trunc)
        for r in range(N + 1):
            if self.coeffs[r] != other.coeffs[r]:
                return r
        return None

    def __repr__(self):
        body = ", ".join(f"u^-{r}: {c!r}" for r, c in enumerate(self.coeffs) if c)
        return f"Series(trunc={self.trunc}, {{{body}}})"


def mul(f: Series, g: Series) -> Series:
    """Cauchy product truncated at min(trunc f, trunc g)."""
    f._check(g)
    N = min(f.trunc, g.trunc)
    out = []
    alg = f.alg
    fc, gc = f.coeffs, g.coeffs
    for r in range(N + 1):
        acc = alg.zero()
        for s in range(r + 1):
            a, b = fc[s], gc[r - s]
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return Series(alg, out, N)


def product(series, trunc=None) -> Series:
    series = list(series)
    out = series[0]
    for s in series[1:]:
        out = mul(out, s)
    return out


def invert(f: Series) -> Series:
    """Two-sided inverse g with g_r = -f_0^{-1} sum_{t=1}^r f_t g_{r-t}.

    The constant term must be a nonzero scalar.
    """
    alg = f.alg
    c0 = f.coeffs[0]
    if set(c0.terms) - {()} or not c0.terms:
        raise ValueError("constant term is not an invertible scalar")
    inv0 = pow(c0.terms[()], -1, alg.p)
    g = [alg.scalar(inv0)]
    for r in range(1, f.trunc + 1):
        acc = alg.zero()
        for t in range(1, r + 1):
            if f.coeffs[t] and g[r - t]:
                acc = acc + f.coeffs[t] * g[r - t]
        g.append(acc.scale(-inv0))
    return Series(alg, g, f.trunc)


def shift_arg(f: Series, c) -> Series:
    """f(u - c): coefficient of u^{-t} is sum_{s=1}^{t} C(t-1, t-s) c^{t-s} f_s (plus f_0 at t=0)."""
    alg = f.alg
    p = alg.p
    c = int(c) % p
    if c == 0:
        return f
    out = [f.coeffs[0]]
    for t in range(1, f.trunc + 1):
        acc = alg.zero()
        for s in range(1, t + 1):
            if not f.coeffs[s]:
                continue
            k = binom_int_mod_p(t - 1, t - s, p) * pow(c, t - s, p) % p
            if k:
                acc = acc + f.coeffs[s].scale(k)
        out.append(acc)
    return Series(alg, out, f.trunc)


def coefficient(f: Series, r: int) -> Element:
    return f.coefficient(r)


def generator_series(alg, i, j, trunc=DEFAULT_TRUNC) -> Series:
    """T_{i,j}(u) = delta_ij + sum_r T_{i,j}^{(r)} u^{-r}."""
    return Series(alg, [alg.T(i, j, r) for r in range(trunc + 1)], trunc)


class MatrixSeries:
    """Square matrix of series with a common truncation."""

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise ValueError("matrix must be square")
        truncs = {e.trunc for row in entries for e in row}
        if len(truncs) != 1:
            raise ValueError("entries must share one truncation")
        algs = {id(e.alg) for row in entries for e in row}
        if len(algs) != 1:
            raise ContextMismatch("entries from different algebras")
        self.entries = entries
        self.n = n
        self.trunc = truncs.pop()
        self.alg = entries[0][0].alg

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def __mul__(self, other):
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Series.zero(self.alg, min(self.trunc, other.trunc))
                for k in range(n):
                    acc = acc + mul(self.entries[i][k], other.entries[k][j])
                row.append(acc)
            out.append(row)
        return MatrixSeries(out)

    def agrees_with(self, other) -> bool:
        return all(
            self.entries[i][j].agrees_with(other.entries[i][j]) for i in range(self.n) for j in range(self.n)
        )

    def map(self, fn):
        return MatrixSeries([[fn(e) for e in row] for row in self.entries])


def T_matrix(alg, trunc=DEFAULT_TRUNC) -> MatrixSeries:
    n = alg.n
    return MatrixSeries([[generator_series(alg, i, j, trunc) for j in range(1, n + 1)] for i in range(1, n + 1)])


def series_to_json(f: Series) -> dict:
    from .io import element_to_json

    return {
        "trunc": f.trunc,
        "coeffs": {str(r): element_to_json(c) for r, c in enumerate(f.coeffs) if c},
    }


def series_from_json(d: dict, alg) -> Series:
    from .io import element_from_json

    N = int(d["trunc"])
    cs = [alg.zero()] * (N + 1)
    for r, e in d["coeffs"].items():
        cs[int(r)] = element_from_json(e, alg)
    return Series(alg, cs, N)
