"""The Yangian Y_n over GF(p) in its RTT generators T_{i,j}^{(r)}.

Generators are ordered by (i, j, r) lexicographically.  The straightening
rule for a pair of generators is the commutator relation

    [T_ij^(r), T_kl^(s)] = sum_{t=0}^{min(r,s)-1}
                           T_kj^(t) T_il^(r+s-1-t) - T_kj^(r+s-1-t) T_il^(t)

with T^(0) = delta.  Every correction has total superscript r+s-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Element, PBWAlgebra, PrecisionError, commutator, pth_power  # noqa: F401
from .field import Prime, binom_int_mod_p

RBASE = 1 << 12


@dataclass(frozen=True, order=True)
class Gen:
    i: int
    j: int
    r: int


class Yangian(PBWAlgebra):
    kind = "yangian"
    symbol = "T"

    def __init__(self, n: int, p: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        super().__init__(Prime(p))
        self.n = n

    def __repr__(self):
        return f"Yangian(n={self.n}, p={self.p})"

    def context(self):
        return {"p": self.p, "n": self.n}

    def encode(self, i, j, r):
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"index ({i},{j}) out of range for n={n}")
        if not 1 <= r < RBASE:
            raise ValueError(f"superscript {r} out of range")
        return ((i - 1) * n + (j - 1)) * RBASE + r

    def decode(self, code):
        ij, r = divmod(code, RBASE)
        i, j = divmod(ij, self.n)
        return (i + 1, j + 1, r)

    def weight(self, code):
        return code % RBASE

    def bracket_words(self, a, b):
        i, j, r = self.decode(a)
        k, l, s = self.decode(b)
        enc = self.encode
        out = {}

        def put(w, c):
            out[w] = out.get(w, 0) + c

        top = r + s - 1
        # t = 0 term: T^(0) = delta
        if k == j:
            put((enc(i, l, top),), 1)
        if i == l:
            put((enc(k, j, top),), -1)
        for t in range(1, min(r, s)):
            put((enc(k, j, t), enc(i, l, top - t)), 1)
            put((enc(k, j, top - t), enc(i, l, t)), -1)
        return out

    # -- convenience -------------------------------------------------------
    def T(self, i, j, r) -> Element:
        """T_{i,j}^{(r)} including the r = 0 convention."""
        if r == 0:
            return self.one() if i == j else self.zero()
        return self.gen(i, j, r)

    def generators(self, rmax):
        n = self.n
        return [(i, j, r) for i in range(1, n + 1) for j in range(1, n + 1) for r in range(1, rmax + 1)]


@lru_cache(maxsize=None)
def yangian(n: int, p: int) -> Yangian:
    """Shared algebra instance per (n, p); elements compare by identity of context."""
    return Yangian(n, p)


def swap_rule(alg: Yangian, g1: Gen, g2: Gen) -> Element:
    """[T_{g1}, T_{g2}] in normal form."""
    a = alg.gen(g1.i, g1.j, g1.r)
    b = alg.gen(g2.i, g2.j, g2.r)
    return commutator(a, b)


def multiply(a: Element, b: Element) -> Element:
    return a * b


# -- (anti)automorphisms ------------------------------------------------------


def apply_translation(a: Element, c) -> Element:
    """eta_c: T_ij(u) -> T_ij(u - c)."""
    alg = a.alg
    p = alg.p
    c = int(c) % p
    if c == 0:
        return a

    def image(code):
        i, j, r = alg.decode(code)
        terms = {}
        for s in range(1, r + 1):
            coeff = binom_int_mod_p(r - 1, r - s, p) * pow(c, r - s, p) % p
            if coeff:
                terms[(alg.encode(i, j, s),)] = coeff
        return alg.element(terms)

    return a.map_generators(image)


def apply_mul_series(a: Element, f, trunc: int) -> Element:
    """mu_f: T_ij(u) -> f(u) T_ij(u) for a scalar series f = [a_0 = 1, a_1, ...].

    ``f`` is given by its first ``trunc + 1`` coefficients.
    """
    alg = a.alg
    p = alg.p
    f = [int(x) % p for x in f]
    if not f or f[0] != 1:
        raise ValueError("f must have constant term 1")
    if len(f) < trunc + 1:
        f = f + [0] * (trunc + 1 - len(f))
    for m in a.terms:
        for g in m:
            if alg.decode(g)[2] > trunc:
                raise PrecisionError(f"superscript {alg.decode(g)[2]} exceeds precision {trunc} of f")

    def image(code):
        i, j, r = alg.decode(code)
        out = alg.zero()
        for s in range(0, r + 1):
            if f[s]:
                out = out + alg.T(i, j, r - s).scale(f[s])
        return out

    return a.map_generators(image)


def apply_transpose(a: Element) -> Element:
    """The anti-automorphism tau: T_ij^(r) -> T_ji^(r)."""
    alg = a.alg

    def image(code):
        i, j, r = alg.decode(code)
        return alg.gen(j, i, r)

    return a.map_generators(image, anti=True)


def apply_permutation(a: Element, w) -> Element:
    """T_ij^(r) -> T_{w(i), w(j)}^(r).  ``w`` maps 1..n to 1..n (dict or 0-padded list)."""
    alg = a.alg
    n = alg.n
    if isinstance(w, dict):
        wmap = {k: w.get(k, k) for k in range(1, n + 1)}
    else:
        w = list(w)
        if len(w) == n:
            wmap = {k + 1: w[k] for k in range(n)}
        else:
            raise ValueError("permutation must list the images of 1..n")
    if sorted(wmap.values()) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {wmap}")

    def image(code):
        i, j, r = alg.decode(code)
        return alg.gen(wmap[i], wmap[j], r)

    return a.map_generators(image)


def transposition(n: int, a: int, b: int) -> dict:
    w = {k: k for k in range(1, n + 1)}
    w[a], w[b] = b, a
    return w


def normalize(a: Element) -> Element:
    """Re-straighten every monomial; the identity on normal-form input."""
    alg = a.alg
    out = alg.zero()
    for m, c in a.terms.items():
        out = out + alg.from_word(m, c)
    return out
