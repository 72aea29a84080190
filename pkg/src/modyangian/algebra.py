"""Generic PBW straightening engine over GF(p).

An algebra instance fixes a totally ordered set of generators (encoded as
ints, compared numerically) and a rule for the bracket of two generators.
Monomials are nondecreasing tuples of generator codes; an element is a dict
``monomial -> coefficient`` with coefficients reduced to ``[0, p)``.

Products are straightened by moving a generator leftwards one adjacent
transposition at a time.  Every rewrite ``x*g -> g*x + [x, g]`` with ``x > g``
either removes an inversion or replaces the pair by terms of lower
``weight`` (see :meth:`PBWAlgebra.weight`), so the rewrite loop terminates.
Results of ``monomial * monomial`` are memoized per algebra instance.
"""

from __future__ import annotations

from bisect import bisect_right
from itertools import groupby

from .field import FieldElem


class ContextMismatch(ValueError):
    pass


class PrecisionError(ValueError):
    """A coefficient beyond the known truncation order was requested."""


def _acc(target, terms, c, p):
    for m, v in terms.items():
        target[m] = (target.get(m, 0) + c * v) % p


def _clean(d):
    return {m: c for m, c in d.items() if c}


class PBWAlgebra:
    """Base class.  Subclasses provide ``bracket_words`` and the code <-> label maps."""

    kind = "abstract"
    symbol = "x"

    def __init__(self, p: int):
        self.p = int(p)
        self._swap_cache = {}
        self._mul_cache = {}

    # -- to be provided by subclasses -------------------------------------
    def bracket_words(self, a: int, b: int):
        """[a, b] as a dict ``word -> int``; words need not be ordered."""
        raise NotImplementedError

    def weight(self, code: int) -> int:
        """Nonnegative degree that bracket corrections strictly decrease."""
        return 0

    def decode(self, code: int) -> tuple:
        raise NotImplementedError

    def encode(self, *label) -> int:
        raise NotImplementedError

    def context(self) -> dict:
        return {"p": self.p}

    # -- straightening -----------------------------------------------------
    def normal_form_word(self, word) -> dict:
        """Normal form of an arbitrary word (tuple of codes)."""
        out = {(): 1}
        p = self.p
        for g in word:
            nxt = {}
            for m, c in out.items():
                _acc(nxt, self.mul_mono(m, (g,)), c, p)
            out = _clean(nxt)
        return out

    def _swap(self, x: int, g: int) -> dict:
        """Normal form of the word (x, g) when x > g."""
        key = (x, g)
        hit = self._swap_cache.get(key)
        if hit is not None:
            return hit
        p = self.p
        out = {(g, x): 1}
        for w, c in self.bracket_words(x, g).items():
            c %= p
            if not c:
                continue
            # termination measure: corrections have strictly smaller weight
            if sum(self.weight(h) for h in w) >= self.weight(x) + self.weight(g):
                raise AssertionError(f"bracket of {x},{g} does not lower the weight")
            if len(w) == 2 and w[0] > w[1]:
                _acc(out, self._swap(w[0], w[1]), c, p)
            else:
                _acc(out, {w: 1}, c, p)
        out = _clean(out)
        self._swap_cache[key] = out
        return out

    def mul_mono(self, a: tuple, b: tuple) -> dict:
        """Normal form of the product of two ordered monomials."""
        if not a or not b or a[-1] <= b[0]:
            return {a + b: 1}
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        p = self.p
        if len(b) == 1:
            g = b[0]
            k = bisect_right(a, g)
            prefix, tail = a[:k], a[k:]
            if prefix:
                out = {}
                for w, c in self.mul_mono(tail, b).items():
                    _acc(out, self.mul_mono(prefix, w), c, p)
            else:
                # every letter of tail exceeds g
                head, x = tail[:-1], tail[-1]
                out = {}
                for w, c in self._swap(x, g).items():
                    _acc(out, self.mul_mono(head, w), c, p)
        else:
            out = {}
            for w, c in self.mul_mono(a, b[:1]).items():
                _acc(out, self.mul_mono(w, b[1:]), c, p)
        out = _clean(out)
        self._mul_cache[key] = out
        return out

    def clear_cache(self):
        self._swap_cache.clear()
        self._mul_cache.clear()

    # -- element constructors ---------------------------------------------
    def element(self, terms=None) -> Element:
        p = self.p
        if not terms:
            return Element(self, {})
        return Element(self, {m: c % p for m, c in terms.items() if c % p})

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {(): 1})

    def scalar(self, c) -> Element:
        c = int(c) % self.p
        return Element(self, {(): c} if c else {})

    def gen(self, *label) -> Element:
        return Element(self, {(self.encode(*label),): 1})

    def from_word(self, word, coeff=1) -> Element:
        nf = self.normal_form_word(tuple(word))
        return self.element({m: coeff * c for m, c in nf.items()})


class Element:
    """An element of a PBW algebra, always in normal form.  Treat as immutable."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: PBWAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    # -- helpers -----------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.alg is not self.alg:
            raise ContextMismatch(f"{self.alg!r} vs {other.alg!r}")

    def _scalar(self, c):
        if isinstance(c, FieldElem):
            if c.p != self.alg.p:
                raise ContextMismatch("scalar from a different field")
            return c.value
        return int(c)

    # -- ring operations -----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, FieldElem)):
            other = self.alg.scalar(self._scalar(other))
        self._check(other)
        p = self.alg.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.alg.p
        return Element(self.alg, {m: (-c) % p for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, FieldElem)):
            other = self.alg.scalar(self._scalar(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Element:
        c = self._scalar(c) % self.alg.p
        if not c:
            return self.alg.zero()
        p = self.alg.p
        return Element(self.alg, {m: v * c % p for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self.scale(other)
        self._check(other)
        if not self.terms or not other.terms:
            return self.alg.zero()
        alg = self.alg
        p = alg.p
        mul = alg.mul_mono
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                if not m1 or not m2 or m1[-1] <= m2[0]:
                    m = m1 + m2
                    out[m] = out.get(m, 0) + c
                else:
                    for m, v in mul(m1, m2).items():
                        out[m] = out.get(m, 0) + c * v
        return Element(alg, {m: c % p for m, c in out.items() if c % p})

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined")
        out = self.alg.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    # -- comparisons -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.alg.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.alg), frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def monomials(self):
        return sorted(self.terms)

    def map_generators(self, f, anti=False) -> Element:
        """Extend ``f: code -> Element`` (multiplicatively, or anti-multiplicatively)."""
        alg = self.alg
        p = alg.p
        cache = {}
        out = {}
        for m, c in self.terms.items():
            prod = alg.one()
            letters = reversed(m) if anti else m
            for g in letters:
                img = cache.get(g)
                if img is None:
                    img = cache[g] = f(g)
                prod = prod * img
            _acc(out, prod.terms, c, p)
        return Element(alg, _clean(out))

    def __repr__(self):
        from .io import to_text

        return to_text(self)


def runs(monomial):
    """Collapse a monomial tuple into ``[(code, exponent), ...]``."""
    return [(g, len(list(grp))) for g, grp in groupby(monomial)]


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def pth_power(a: Element) -> Element:
    return a ** a.alg.p


def ad_power(a: Element, b: Element, k: int) -> Element:
    for _ in range(k):
        b = commutator(a, b)
    return b


class CommutativeAlgebra(PBWAlgebra):
    """Polynomial ring over GF(p) in indeterminates labelled by tuples of ints.

    Serves as the independent oracle for closed-form series identities.
    """

    kind = "commutative"
    symbol = "x"

    def __init__(self, p: int, arity: int = 1, base: int = 1 << 10):
        super().__init__(p)
        self.arity = arity
        self.base = base

    def bracket_words(self, a, b):
        return {}

    def encode(self, *label):
        if len(label) != self.arity:
            raise ValueError(f"expected {self.arity} indices")
        code = 0
        for x in label:
            if not 0 <= x < self.base:
                raise ValueError(f"index {x} out of range")
            code = code * self.base + x
        return code

    def decode(self, code):
        out = []
        for _ in range(self.arity):
            code, x = divmod(code, self.base)
            out.append(x)
        return tuple(reversed(out))

    def context(self):
        return {"p": self.p, "arity": self.arity}

    def __repr__(self):
        return f"CommutativeAlgebra(p={self.p}, arity={self.arity})"
