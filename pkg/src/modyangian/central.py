"""Central series of Y_n over GF(p) and a bounded centrality certifier.

Families: the quantum determinant C(u) (as a signed sum and as a product
of the D_i), B_i(u), BC(u), P/Q (p-th powers of root series), S_{i,j}(u)
and A_i(u).  Coefficients are exact elements; only the number of computed
coefficients is bounded.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .algebra import commutator
from .gauss import gauss_data
from .pbw import yangian
from .report import Check, Report, compare_series
from .series import DEFAULT_TRUNC, Series, generator_series, invert, mul, product, shift_arg


class SeriesMismatch(AssertionError):
    """Two expressions that must agree do not; indicates an engine bug."""


def _sign(perm):
    sign = 1
    seen = set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length = 0
        k = start
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def shifted_product(f: Series, count: int) -> Series:
    """f(u) f(u-1) ... f(u-count+1)."""
    return product(shift_arg(f, k) for k in range(count))


@lru_cache(maxsize=None)
def qdet(n, p, trunc=DEFAULT_TRUNC) -> Series:
    """sum_g sgn(g) T_{g(1),1}(u) T_{g(2),2}(u-1) ... T_{g(n),n}(u-n+1)."""
    alg = yangian(n, p)
    cols = [[shift_arg(generator_series(alg, a, b, trunc), b - 1) for b in range(1, n + 1)] for a in range(1, n + 1)]
    total = Series.zero(alg, trunc)
    for g in permutations(range(n)):
        term = product(cols[g[b]][b] for b in range(n))
        total = total + term.scale(_sign(g))
    return total


@lru_cache(maxsize=None)
def C_product(n, p, trunc=DEFAULT_TRUNC) -> Series:
    """D_1(u) D_2(u-1) ... D_n(u-n+1)."""
    g = gauss_data(n, p, trunc)
    return product(shift_arg(g.D[i], i - 1) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def B_series(n, p, i, trunc=DEFAULT_TRUNC) -> Series:
    """B_i(u) = D_i(u) D_i(u-1) ... D_i(u-p+1)."""
    g = gauss_data(n, p, trunc)
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range")
    return shifted_product(g.D[i], p)


@lru_cache(maxsize=None)
def BC_series(n, p, trunc=DEFAULT_TRUNC) -> Series:
    """B_1(u) B_2(u-1) ... B_n(u-n+1), checked against C(u) C(u-1) ... C(u-p+1)."""
    left = product(shift_arg(B_series(n, p, i, trunc), i - 1) for i in range(1, n + 1))
    right = shifted_product(C_product(n, p, trunc), p)
    r = left.first_difference(right)
    if r is not None:
        raise SeriesMismatch(f"BC products differ at u^-{r}")
    return left


@lru_cache(maxsize=None)
def P_series(n, p, i, j, trunc=DEFAULT_TRUNC) -> Series:
    """E_{i,j}(u)^p."""
    if not 1 <= i < j <= n:
        raise ValueError("P_{i,j} needs i < j")
    return gauss_data(n, p, trunc).E[(i, j)] ** p


@lru_cache(maxsize=None)
def Q_series(n, p, i, j, trunc=DEFAULT_TRUNC) -> Series:
    """F_{i,j}(u)^p."""
    if not 1 <= i < j <= n:
        raise ValueError("Q_{i,j} needs i < j")
    return gauss_data(n, p, trunc).F[(i, j)] ** p


@lru_cache(maxsize=None)
def S_series(n, p, i, j, trunc=DEFAULT_TRUNC) -> Series:
    """T_{i,j}(u) T_{i,j}(u-1) ... T_{i,j}(u-p+1)."""
    return shifted_product(generator_series(yangian(n, p), i, j, trunc), p)


@lru_cache(maxsize=None)
def A_series(n, p, i, trunc=DEFAULT_TRUNC) -> Series:
    """H_i(u) H_i(u-1) ... H_i(u-p+1), checked against -B_{i+1}(u) B_i(u)^{-1}."""
    g = gauss_data(n, p, trunc)
    left = shifted_product(g.H_series(i), p)
    right = -mul(B_series(n, p, i + 1, trunc), invert(B_series(n, p, i, trunc)))
    r = left.first_difference(right)
    if r is not None:
        raise SeriesMismatch(f"A_{i} expressions differ at u^-{r}")
    return left


def certify_central(x, smax: int = 4) -> Report:
    """Bounded certificate: [x, T_{k,l}^{(s)}] = 0 for all k, l and s <= smax.

    Passing is evidence at the given bound, not a proof of centrality.
    """
    alg = x.alg
    n = alg.n
    rep = Report({"n": n, "p": alg.p, "smax": smax, "bounded": True})
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            for s in range(1, smax + 1):
                c = commutator(x, alg.gen(k, l, s))
                ps = {"k": k, "l": l, "s": s}
                if c:
                    rep.add(Check("commutator", ps, False, f"[x, T[{k},{l},{s}]] = {c!r}"))
                else:
                    rep.add(Check("commutator", ps, True))
    return rep


def is_central(x, smax: int = 4) -> bool:
    alg = x.alg
    n = alg.n
    return all(
        not commutator(x, alg.gen(k, l, s))
        for s in range(1, smax + 1)
        for k in range(1, n + 1)
        for l in range(1, n + 1)
    )


FAMILIES = ("C", "B", "BC", "P", "Q", "S", "A")


def family_series(name, n, p, trunc, i=1, j=2) -> Series:
    """Dispatch used by the CLI."""
    if name == "C":
        return C_product(n, p, trunc)
    if name == "B":
        return B_series(n, p, i, trunc)
    if name == "BC":
        return BC_series(n, p, trunc)
    if name == "P":
        return P_series(n, p, i, j, trunc)
    if name == "Q":
        return Q_series(n, p, i, j, trunc)
    if name == "S":
        return S_series(n, p, i, j, trunc)
    if name == "A":
        return A_series(n, p, i, trunc)
    raise ValueError(f"unknown family {name!r}")


__all__ = [
    "A_series",
    "BC_series",
    "B_series",
    "C_product",
    "FAMILIES",
    "P_series",
    "Q_series",
    "S_series",
    "SeriesMismatch",
    "certify_central",
    "compare_series",
    "family_series",
    "is_central",
    "qdet",
    "shifted_product",
]
