"""Gauss factorization T(u) = F(u) D(u) E(u) and Drinfeld generators.

F is lower unitriangular, D diagonal, E upper unitriangular.  The series
F_{i,j}(u) (i < j) sits at matrix position (j, i).  The factorization is
computed by repeated Schur complements; the quasideterminant expressions
are kept as an independent oracle that inverts leading minors by a Neumann
series instead.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import PrecisionError, commutator
from .pbw import yangian
from .series import DEFAULT_TRUNC, MatrixSeries, Series, T_matrix, invert, mul, shift_arg


class GaussData:
    """D_i, D~_i, E_{i,j}, F_{i,j} series of one (n, p, trunc)."""

    def __init__(self, n, p, trunc):
        self.alg = alg = yangian(n, p)
        self.n, self.p, self.trunc = n, p, trunc
        T = T_matrix(alg, trunc)
        self.T = T
        self.D, self.E, self.F = _schur(T)
        self.Dt = [None] + [invert(d) for d in self.D[1:]]
        self._Eroot = {}
        self._Froot = {}

    # coefficient accessors ----------------------------------------------
    def _need(self, r):
        if r > self.trunc:
            raise PrecisionError(f"superscript {r} exceeds truncation {self.trunc}")

    def Dc(self, i, r):
        self._need(r)
        return self.D[i].coeffs[r]

    def Dtc(self, i, r):
        self._need(r)
        return self.Dt[i].coeffs[r]

    def Ec(self, i, r):
        """E_i^{(r)}, with E_i^{(0)} = 0."""
        self._need(r)
        return self.E[(i, i + 1)].coeffs[r]

    def Fc(self, i, r):
        self._need(r)
        return self.F[(i, i + 1)].coeffs[r]

    def E_series(self, i, j=None):
        return self.E[(i, i + 1 if j is None else j)]

    def F_series(self, i, j=None):
        return self.F[(i, i + 1 if j is None else j)]

    def higher_root_E(self, i, j, r):
        """E_{i,j}^{(r)} = [E_{i,j-1}^{(r)}, E_{j-1}^{(1)}], base case E_i^{(r)}."""
        if not (1 <= i < j <= self.n) or r < 1:
            raise ValueError(f"no root element E_{{{i},{j}}}^({r})")
        key = (i, j, r)
        if key not in self._Eroot:
            if j == i + 1:
                x = self.Ec(i, r)
            else:
                x = commutator(self.higher_root_E(i, j - 1, r), self.Ec(j - 1, 1))
            self._Eroot[key] = x
        return self._Eroot[key]

    def higher_root_F(self, i, j, r):
        """F_{i,j}^{(r)} = [F_{j-1}^{(1)}, F_{i,j-1}^{(r)}]."""
        if not (1 <= i < j <= self.n) or r < 1:
            raise ValueError(f"no root element F_{{{i},{j}}}^({r})")
        key = (i, j, r)
        if key not in self._Froot:
            if j == i + 1:
                x = self.Fc(i, r)
            else:
                x = commutator(self.Fc(j - 1, 1), self.higher_root_F(i, j - 1, r))
            self._Froot[key] = x
        return self._Froot[key]

    def H_series(self, i):
        if not 1 <= i < self.n:
            raise ValueError(f"H_{i} needs 1 <= i < n")
        return -mul(self.D[i + 1], self.Dt[i])

    def matrices(self):
        """(F, D, E) as MatrixSeries."""
        n, alg, N = self.n, self.alg, self.trunc
        one, zero = Series.one(alg, N), Series.zero(alg, N)
        Fm = [[one if a == b else (self.F[(b, a)] if b < a else zero) for b in range(1, n + 1)] for a in range(1, n + 1)]
        Dm = [[self.D[a] if a == b else zero for b in range(1, n + 1)] for a in range(1, n + 1)]
        Em = [[one if a == b else (self.E[(a, b)] if a < b else zero) for b in range(1, n + 1)] for a in range(1, n + 1)]
        return MatrixSeries(Fm), MatrixSeries(Dm), MatrixSeries(Em)


def _check_T(T: MatrixSeries):
    for a in range(1, T.n + 1):
        for b in range(1, T.n + 1):
            c0 = T[a, b].coeffs[0]
            want = 1 if a == b else 0
            if c0 != T.alg.scalar(want):
                raise ValueError(f"entry ({a},{b}) has constant term {c0!r}, expected {want}")


def _schur(T: MatrixSeries):
    _check_T(T)
    n = T.n
    cur = {(a, b): T[a, b] for a in range(1, n + 1) for b in range(1, n + 1)}
    D = [None] * (n + 1)
    E, F = {}, {}
    for k in range(1, n + 1):
        D[k] = cur[(k, k)]
        inv = invert(D[k])
        for j in range(k + 1, n + 1):
            E[(k, j)] = mul(inv, cur[(k, j)])
            F[(k, j)] = mul(cur[(j, k)], inv)
        nxt = {}
        for a in range(k + 1, n + 1):
            left = mul(cur[(a, k)], inv)
            for b in range(k + 1, n + 1):
                nxt[(a, b)] = cur[(a, b)] - mul(left, cur[(k, b)])
        cur = nxt
    return D, E, F


def gauss_factorize(T: MatrixSeries):
    """(F, D, E) with F D E = T up to the truncation of T."""
    D, E, F = _schur(T)
    n, alg, N = T.n, T.alg, T.trunc
    one, zero = Series.one(alg, N), Series.zero(alg, N)
    Fm = [[one if a == b else (F[(b, a)] if b < a else zero) for b in range(1, n + 1)] for a in range(1, n + 1)]
    Dm = [[D[a] if a == b else zero for b in range(1, n + 1)] for a in range(1, n + 1)]
    Em = [[one if a == b else (E[(a, b)] if a < b else zero) for b in range(1, n + 1)] for a in range(1, n + 1)]
    return MatrixSeries(Fm), MatrixSeries(Dm), MatrixSeries(Em)


@lru_cache(maxsize=None)
def gauss_data(n: int, p: int, trunc: int = DEFAULT_TRUNC) -> GaussData:
    return GaussData(n, p, trunc)


# -- quasideterminant oracle ------------------------------------------------


def _neumann_inverse(M):
    """Inverse of a square matrix of series I + N with N = O(u^-1)."""
    m = len(M)
    alg = M[0][0].alg
    N_ = M[0][0].trunc
    one, zero = Series.one(alg, N_), Series.zero(alg, N_)
    neg = [[(M[a][b] - one if a == b else M[a][b]).scale(-1) for b in range(m)] for a in range(m)]
    for a in range(m):
        for b in range(m):
            if neg[a][b].coeffs[0]:
                raise ValueError("leading minor is not unipotent at u = infinity")

    def matmul(X, Y):
        out = []
        for a in range(m):
            row = []
            for b in range(m):
                acc = zero
                for c in range(m):
                    acc = acc + mul(X[a][c], Y[c][b])
                row.append(acc)
            out.append(row)
        return out

    total = [[one if a == b else zero for b in range(m)] for a in range(m)]
    power = total
    # (-N)^k vanishes below u^-k, so trunc terms suffice
    for _ in range(N_):
        power = matmul(power, neg)
        total = [[total[a][b] + power[a][b] for b in range(m)] for a in range(m)]
    return total


def _qdet_entry(T, i, a, b):
    """T_{a,b} - T_{a,<i} M^{-1} T_{<i,b} with M the leading (i-1)-minor."""
    base = T[a, b]
    if i == 1:
        return base
    M = [[T[x, y] for y in range(1, i)] for x in range(1, i)]
    Minv = _neumann_inverse(M)
    corr = Series.zero(T.alg, T.trunc)
    for x in range(1, i):
        for y in range(1, i):
            corr = corr + mul(mul(T[a, x], Minv[x - 1][y - 1]), T[y, b])
    return base - corr


def quasideterminant_D(alg, i, trunc=DEFAULT_TRUNC) -> Series:
    T = T_matrix(alg, trunc)
    if not 1 <= i <= alg.n:
        raise ValueError(f"index {i} out of range")
    return _qdet_entry(T, i, i, i)


def quasideterminant_E(alg, i, j, trunc=DEFAULT_TRUNC) -> Series:
    """E_{i,j}(u) = D_i(u)^{-1} times the (i, j) quasideterminant."""
    T = T_matrix(alg, trunc)
    Dt = invert(_qdet_entry(T, i, i, i))
    return mul(Dt, _qdet_entry(T, i, i, j))


def quasideterminant_F(alg, i, j, trunc=DEFAULT_TRUNC) -> Series:
    """F_{i,j}(u) = the (j, i) quasideterminant times D_i(u)^{-1}."""
    T = T_matrix(alg, trunc)
    Dt = invert(_qdet_entry(T, i, i, i))
    return mul(_qdet_entry(T, i, j, i), Dt)


def H_series(n, p, i, trunc=DEFAULT_TRUNC) -> Series:
    """H_i(u) = -D_{i+1}(u) D_i(u)^{-1}."""
    return gauss_data(n, p, trunc).H_series(i)


def higher_root_E(n, p, i, j, r, trunc=DEFAULT_TRUNC):
    return gauss_data(n, p, max(trunc, r)).higher_root_E(i, j, r)


def higher_root_F(n, p, i, j, r, trunc=DEFAULT_TRUNC):
    return gauss_data(n, p, max(trunc, r)).higher_root_F(i, j, r)


__all__ = [
    "GaussData",
    "gauss_data",
    "gauss_factorize",
    "quasideterminant_D",
    "quasideterminant_E",
    "quasideterminant_F",
    "H_series",
    "higher_root_E",
    "higher_root_F",
    "shift_arg",
]


# -- Drinfeld relations -------------------------------------------------------


def verify_drinfeld_relations(n, p, R, trunc=None):
    """Every relation instance whose superscripts are all at most R.

    Returns a list of Check records, one per instance.
    """
    from .report import compare

    trunc = R if trunc is None else trunc
    if trunc < R:
        raise PrecisionError(f"truncation {trunc} is below the superscript bound {R}")
    g = gauss_data(n, p, trunc)
    alg = g.alg
    zero = alg.zero()
    D, Dt, E, F = g.Dc, g.Dtc, g.Ec, g.Fc
    br = commutator
    out = []
    rng = range(1, R + 1)
    idx = range(1, n)

    def chk(name, params, lhs, rhs):
        out.append(compare(name, params, lhs, rhs))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for r in rng:
                for s in rng:
                    chk("DD", {"i": i, "j": j, "r": r, "s": s}, br(D(i, r), D(j, s)), zero)
    for i in idx:
        for j in idx:
            for r in rng:
                for s in rng:
                    if r + s - 1 > R:
                        continue
                    rhs = zero
                    if i == j:
                        for t in range(r + s):
                            rhs = rhs - D(i + 1, r + s - 1 - t) * Dt(i, t)
                    chk("EF", {"i": i, "j": j, "r": r, "s": s}, br(E(i, r), F(j, s)), rhs)
    for i in range(1, n + 1):
        for j in idx:
            for r in rng:
                for s in rng:
                    if r + s - 1 > R:
                        continue
                    c = (i == j) - (i == j + 1)
                    rhsE = zero
                    rhsF = zero
                    if c:
                        for t in range(r):
                            rhsE = rhsE + D(i, t) * E(j, r + s - 1 - t)
                            rhsF = rhsF + F(j, r + s - 1 - t) * D(i, t)
                    ps = {"i": i, "j": j, "r": r, "s": s}
                    chk("DE", ps, br(D(i, r), E(j, s)), rhsE.scale(c))
                    chk("DF", ps, br(D(i, r), F(j, s)), rhsF.scale(-c))
    for i in idx:
        for r in rng:
            for s in rng:
                if r < s and r + s - 1 <= R:
                    rhs = zero
                    for t in range(r, s):
                        rhs = rhs + E(i, t) * E(i, r + s - 1 - t)
                    chk("EE", {"i": i, "r": r, "s": s}, br(E(i, r), E(i, s)), rhs)
                if r > s and r + s - 1 <= R:
                    rhs = zero
                    for t in range(s, r):
                        rhs = rhs + F(i, r + s - 1 - t) * F(i, t)
                    chk("FF", {"i": i, "r": r, "s": s}, br(F(i, r), F(i, s)), rhs)
    for i in range(1, n - 1):
        for r in range(1, R):
            for s in range(1, R):
                ps = {"i": i, "r": r, "s": s}
                lhs = br(E(i, r + 1), E(i + 1, s)) - br(E(i, r), E(i + 1, s + 1))
                chk("EE_adjacent", ps, lhs, E(i, r) * E(i + 1, s))
                lhs = br(F(i, r), F(i + 1, s + 1)) - br(F(i, r + 1), F(i + 1, s))
                chk("FF_adjacent", ps, lhs, F(i + 1, s) * F(i, r))
    for i in idx:
        for j in idx:
            if abs(i - j) > 1:
                for r in rng:
                    for s in rng:
                        ps = {"i": i, "j": j, "r": r, "s": s}
                        chk("EE_far", ps, br(E(i, r), E(j, s)), zero)
                        chk("FF_far", ps, br(F(i, r), F(j, s)), zero)
    for i in idx:
        for j in idx:
            if abs(i - j) != 1:
                continue
            for t in rng:
                inner_E = {r: br(E(i, r), E(j, t)) for r in rng}
                inner_F = {r: br(F(i, r), F(j, t)) for r in rng}
                for r in rng:
                    for s in rng:
                        ps = {"i": i, "j": j, "r": r, "s": s, "t": t}
                        if r < s:
                            lhs = br(E(i, r), inner_E[s]) + br(E(i, s), inner_E[r])
                            chk("E_serre", ps, lhs, zero)
                            lhs = br(F(i, r), inner_F[s]) + br(F(i, s), inner_F[r])
                            chk("F_serre", ps, lhs, zero)
                        elif r == s:
                            chk("E_serre_diagonal", ps, br(E(i, r), inner_E[r]), zero)
                            chk("F_serre_diagonal", ps, br(F(i, r), inner_F[r]), zero)
    return out


DRINFELD_RELATIONS = (
    "DD",
    "EF",
    "DE",
    "DF",
    "EE",
    "FF",
    "EE_adjacent",
    "FF_adjacent",
    "EE_far",
    "FF_far",
    "E_serre",
    "F_serre",
    "E_serre_diagonal",
    "F_serre_diagonal",
)
