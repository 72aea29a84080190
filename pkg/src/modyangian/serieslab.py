"""Series of types I-IV over an arbitrary coefficient algebra.

Type I is X(u)^p.  Type II multiplies n series at the shifted arguments
u, u-1, ..., u-n+1.  Types III and IV multiply p shifted copies of one
series whose constant term is forced to 1 (III) or 0 (IV).  The closed
forms for the coefficients of types II and III are implemented separately
so they can be compared against direct expansion in a commutative
polynomial ring.
"""

from __future__ import annotations

import random
from itertools import permutations, product

from .algebra import CommutativeAlgebra, Element
from .field import FieldElem, binom_general
from .series import Series, mul, shift_arg


# -- compositions and partitions ---------------------------------------------


def compositions(n: int, r: int):
    """Lambda(n, r): all n-tuples of naturals summing to r, in lexicographic order."""
    if n == 0:
        if r == 0:
            yield ()
        return
    if n == 1:
        yield (r,)
        return
    for first in range(r, -1, -1):
        for rest in compositions(n - 1, r - first):
            yield (first,) + rest


def partitions(n: int, r: int):
    """Lambda^+(n, r): weakly decreasing n-tuples summing to r."""

    def go(k, left, cap):
        if k == 0:
            if left == 0:
                yield ()
            return
        for first in range(min(left, cap), -1, -1):
            for rest in go(k - 1, left - first, first):
                yield (first,) + rest

    yield from go(n, r, r)


def length(lam) -> int:
    return sum(1 for x in lam if x)


def distinct_rearrangements(mu):
    """The S_p-orbit of mu; one representative per coset g S_mu."""
    return sorted(set(permutations(mu)))


# -- the four series types ---------------------------------------------------


def series_typeI(X: Series) -> Series:
    if X.coeffs[0]:
        raise ValueError("type I series needs zero constant term")
    return X ** X.alg.p


def series_typeII(Xs) -> Series:
    Xs = list(Xs)
    if not Xs:
        raise ValueError("type II needs at least one series")
    for X in Xs:
        if X.coeffs[0] != X.alg.one():
            raise ValueError("type II series need constant term 1")
    out = Xs[0]
    for i, X in enumerate(Xs[1:], start=1):
        out = mul(out, shift_arg(X, i))
    return out


def _with_constant(X: Series, c) -> Series:
    cs = list(X.coeffs)
    cs[0] = X.alg.scalar(c)
    return Series(X.alg, cs, X.trunc)


def _shifted_p_fold(X: Series) -> Series:
    out = X
    for i in range(1, X.alg.p):
        out = mul(out, shift_arg(X, i))
    return out


def series_typeIII(X: Series) -> Series:
    """prod_{i=1}^p X(u-i+1) with X^{(0)} := 1."""
    return _shifted_p_fold(_with_constant(X, 1))


def series_typeIV(X: Series) -> Series:
    """prod_{i=1}^p X(u-i+1) with X^{(0)} := 0."""
    return _shifted_p_fold(_with_constant(X, 0))


# -- closed forms ------------------------------------------------------------


def _binom_mod(a, b, p):
    return binom_general(a, b) % p


def typeII_closed_form(Xs, r: int) -> Element:
    """sum over lambda in Lambda(n,r), mu within lambda, of
    prod_i C(lambda_i - 1, lambda_i - mu_i) (i-1)^(lambda_i - mu_i) X^(mu)."""
    Xs = list(Xs)
    n = len(Xs)
    alg = Xs[0].alg
    p = alg.p
    out = alg.zero()
    for lam in compositions(n, r):
        for mu in product(*(range(l + 1) for l in lam)):
            c = 1
            for i in range(n):
                d = lam[i] - mu[i]
                c = c * _binom_mod(lam[i] - 1, d, p) * pow(i, d, p) % p
                if not c:
                    break
            if not c:
                continue
            term = alg.scalar(c)
            for i in range(n):
                term = term * Xs[i].coefficient(mu[i])
            out = out + term
    return out


def gamma_coeff(r: int, mu, points, p: int) -> FieldElem:
    """gamma^{(r)}_mu(points) for mu with p parts and |mu| <= r."""
    mu = tuple(mu)
    points = [int(x) % p for x in points]
    if len(mu) != p or len(points) != p:
        raise ValueError(f"need {p} parts and {p} points")
    rest = r - sum(mu)
    if rest < 0:
        raise ValueError("|mu| exceeds r")
    total = 0
    arrangements = distinct_rearrangements(mu)
    for nu in compositions(p, rest):
        mono = 1
        for i in range(p):
            mono = mono * pow(points[i], nu[i], p) % p
        if not mono:
            continue
        for m in arrangements:
            c = mono
            for i in range(p):
                c = c * _binom_mod(m[i] + nu[i] - 1, nu[i], p) % p
                if not c:
                    break
            total += c
    return FieldElem(total, p)


def typeIII_closed_form(X: Series, r: int) -> Element:
    """sum_s sum_{mu in Lambda^+(p,s)} gamma^{(r)}_mu(0,1,...,p-1) X^(mu), X^(0) = 1."""
    alg = X.alg
    p = alg.p
    pts = list(range(p))
    out = alg.zero()
    for s in range(r + 1):
        for mu in partitions(p, s):
            g = gamma_coeff(r, mu, pts, p)
            if not g:
                continue
            term = alg.scalar(int(g))
            for k in mu:
                term = term * (alg.one() if k == 0 else X.coefficient(k))
            out = out + term
    return out


# -- optimality, power sums, Newton --------------------------------------------


def d_mu(d, mu) -> int:
    return sum(d(m) for m in mu)


def is_optimal(r: int, d, n: int) -> bool:
    """r is optimal for d if d_mu < d_r whenever |mu| < r, or |mu| = r and mu has several nonzero parts."""
    if r <= 1:
        raise ValueError("optimality is defined for r > 1")
    if d(0) != 0:
        raise ValueError("degree sequence must have d_0 = 0")
    dr = d(r)
    for total in range(r + 1):
        for mu in compositions(n, total):
            if total == r and length(mu) <= 1:
                continue
            if d_mu(d, mu) >= dr:
                return False
    return True


def stepped_degree_sequence(m: int):
    """d_r = 0 for r < m and m*floor(r/m) - m otherwise."""
    return lambda r: 0 if r < m else m * (r // m) - m


def power_sum_eval(l: int, points, p: int) -> FieldElem:
    return FieldElem(sum(pow(int(x), l, p) for x in points), p)


def _elementary(alg, p, k):
    xs = [alg.gen(i) for i in range(1, p + 1)]
    out = alg.zero()

    def go(start, left, acc):
        nonlocal out
        if left == 0:
            out = out + acc
            return
        for i in range(start, p):
            go(i + 1, left - 1, acc * xs[i])

    go(0, k, alg.one())
    return out


def newton_check(k: int, p: int, samples: int = 8, seed: int = 0) -> bool:
    """k e_k = sum_{i=1}^k (-1)^{i-1} pi_i e_{k-i} in GF(p)[x_1..x_p].

    Checked symbolically, then at ``samples`` random points for good measure.
    """
    alg = CommutativeAlgebra(p)
    xs = [alg.gen(i) for i in range(1, p + 1)]
    e = [_elementary(alg, p, j) for j in range(k + 1)]
    pi = [None] + [sum((x ** i for x in xs), alg.zero()) for i in range(1, k + 1)]
    rhs = alg.zero()
    for i in range(1, k + 1):
        rhs = rhs + (pi[i] * e[k - i]).scale((-1) ** (i - 1))
    if e[k].scale(k) != rhs:
        return False
    rng = random.Random(seed)
    for _ in range(samples):
        pts = [rng.randrange(p) for _ in range(p)]

        def ev(j):
            tot = 0
            for idx in range(1 << p):
                chosen = [pts[b] for b in range(p) if idx >> b & 1]
                if len(chosen) == j:
                    v = 1
                    for c in chosen:
                        v = v * c % p
                    tot += v
            return tot % p

        lhs = k * ev(k) % p
        r = sum((-1) ** (i - 1) * int(power_sum_eval(i, pts, p)) * ev(k - i) for i in range(1, k + 1)) % p
        if lhs != r:
            return False
    return True


# -- commuting indeterminates as a test bed -------------------------------------


def indeterminate_series(alg: CommutativeAlgebra, trunc: int, tag: int | None = None, constant=0) -> Series:
    """sum_r x_r u^{-r} (or x_{tag,r} for arity-2 algebras) with the given constant term."""
    cs = [alg.scalar(constant)]
    for r in range(1, trunc + 1):
        cs.append(alg.gen(r) if tag is None else alg.gen(tag, r))
    return Series(alg, cs, trunc)
