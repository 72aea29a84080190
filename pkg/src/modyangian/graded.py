"""U(gl_n[t]), the associated graded of Y_n under the loop filtration.

T_{i,j}^{(r)} sits in filtered degree r-1 and its image in the graded
algebra is e_{i,j} t^{r-1}.  Since PBW monomials in the T's map to PBW
monomials in the e's (same (i, j, r) order), the top-degree part of a
normal-form element maps monomial-wise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Element, PBWAlgebra
from .field import Prime

TBASE = 1 << 12


@dataclass(frozen=True, order=True)
class LoopGen:
    i: int
    j: int
    r: int


class CurrentAlgebra(PBWAlgebra):
    """U(gl_n[t]) with generators e_{i,j} t^r, r >= 0."""

    kind = "current"
    symbol = "e"

    def __init__(self, n: int, p: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        super().__init__(Prime(p))
        self.n = n

    def __repr__(self):
        return f"CurrentAlgebra(n={self.n}, p={self.p})"

    def context(self):
        return {"p": self.p, "n": self.n}

    def encode(self, i, j, r):
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"index ({i},{j}) out of range for n={n}")
        if not 0 <= r < TBASE:
            raise ValueError(f"power of t {r} out of range")
        return ((i - 1) * n + (j - 1)) * TBASE + r

    def decode(self, code):
        ij, r = divmod(code, TBASE)
        i, j = divmod(ij, self.n)
        return (i + 1, j + 1, r)

    def weight(self, code):
        # a Lie correction replaces two letters by one
        return 1

    def bracket_words(self, a, b):
        i, j, r = self.decode(a)
        k, l, s = self.decode(b)
        out = {}
        if k == j:
            w = (self.encode(i, l, r + s),)
            out[w] = out.get(w, 0) + 1
        if l == i:
            w = (self.encode(k, j, r + s),)
            out[w] = out.get(w, 0) - 1
        return out

    def e(self, i, j, r) -> Element:
        return self.gen(i, j, r)


@lru_cache(maxsize=None)
def current_algebra(n: int, p: int) -> CurrentAlgebra:
    return CurrentAlgebra(n, p)


def ug_multiply(a: Element, b: Element) -> Element:
    return a * b


def ug_normal_form(alg: CurrentAlgebra, word) -> Element:
    """Normal form of a word given as a sequence of (i, j, r) labels."""
    return alg.from_word([alg.encode(*lab) for lab in word])


def _mono_degree(alg, m):
    return sum(alg.weight(g) - 1 for g in m)


def loop_degree(x: Element) -> int:
    if not x.terms:
        raise ValueError("loop degree of 0 is undefined")
    alg = x.alg
    return max(_mono_degree(alg, m) for m in x.terms)


def leading_term(x: Element, d: int) -> Element:
    """gr_d x in U(gl_n[t]).  Raises if x has loop degree above d."""
    yalg = x.alg
    ug = current_algebra(yalg.n, yalg.p)
    if not x.terms:
        return ug.zero()
    deg = loop_degree(x)
    if deg > d:
        raise ValueError(f"element has loop degree {deg} > {d}")
    if deg < d:
        return ug.zero()
    out = ug.zero()
    for m, c in x.terms.items():
        if _mono_degree(yalg, m) != d:
            continue
        word = []
        for g in m:
            i, j, r = yalg.decode(g)
            word.append(ug.encode(i, j, r - 1))
        out = out + ug.from_word(word, c)
    return out


def zr(n: int, p: int, r: int) -> Element:
    """z_r = sum_i e_{i,i} t^r, central in U(gl_n[t])."""
    ug = current_algebra(n, p)
    out = ug.zero()
    for i in range(1, n + 1):
        out = out + ug.e(i, i, r)
    return out


def p_centre_gen(n: int, p: int, i: int, j: int, r: int) -> Element:
    """(e_{i,j} t^r)^p - delta_{ij} e_{i,j} t^{rp}."""
    ug = current_algebra(n, p)
    x = ug.e(i, j, r) ** p
    if i == j:
        x = x - ug.e(i, j, r * p)
    return x
