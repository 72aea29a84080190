import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modyangian.algebra import CommutativeAlgebra
from modyangian.serieslab import (
    compositions,
    distinct_rearrangements,
    gamma_coeff,
    indeterminate_series,
    is_optimal,
    stepped_degree_sequence,
    newton_check,
    partitions,
    power_sum_eval,
    series_typeI,
    series_typeII,
    series_typeIII,
    series_typeIV,
    typeII_closed_form,
    typeIII_closed_form,
)
from modyangian.verify import golden_typeI_p2, golden_typeIII


def test_enumeration_counts():
    from math import comb

    for n in range(1, 4):
        for r in range(6):
            assert len(list(compositions(n, r))) == comb(n + r - 1, r)
    assert list(partitions(3, 3)) == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]
    assert distinct_rearrangements((1, 0, 0)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


@pytest.mark.parametrize("p,N", [(2, 6), (3, 6), (5, 6)])
def test_typeIII_closed_form(p, N):
    A = CommutativeAlgebra(p)
    S = series_typeIII(indeterminate_series(A, N))
    X = indeterminate_series(A, N, constant=1)
    for r in range(N + 1):
        assert typeIII_closed_form(X, r) == S.coeffs[r]


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2)])
def test_typeII_closed_form(p, n):
    A = CommutativeAlgebra(p, arity=2)
    Xs = [indeterminate_series(A, 5, tag=i, constant=1) for i in range(1, n + 1)]
    S = series_typeII(Xs)
    for r in range(6):
        assert typeII_closed_form(Xs, r) == S.coeffs[r]


def test_type_validation():
    A = CommutativeAlgebra(3)
    with pytest.raises(ValueError):
        series_typeI(indeterminate_series(A, 3, constant=1))
    with pytest.raises(ValueError):
        series_typeII([indeterminate_series(A, 3)])
    with pytest.raises(ValueError):
        gamma_coeff(1, (1, 1, 0), (0, 1, 2), 3)


def test_typeIV_low_coefficients_vanish():
    p = 3
    A = CommutativeAlgebra(p)
    S = series_typeIV(indeterminate_series(A, 5))
    assert all(S.coeffs[r] == 0 for r in range(p))
    x1 = A.gen(1)
    assert S.coeffs[p] == x1 ** p


def test_typeI_is_frobenius_on_commutative():
    A = CommutativeAlgebra(3)
    X = indeterminate_series(A, 6)
    S = series_typeI(X)
    assert S.coeffs[3] == A.gen(1) ** 3
    assert S.coeffs[6] == A.gen(2) ** 3
    assert S.coeffs[4] == 0 and S.coeffs[5] == 0


def test_golden_tables():
    assert all(c.ok for c in golden_typeI_p2())
    for p in (2, 3):
        assert all(c.ok for c in golden_typeIII(p))


def test_optimality():
    for m in (1, 2, 3):
        d = stepped_degree_sequence(m)
        for k in range(2, 8):
            assert is_optimal(k * m, d, 3)
    assert not is_optimal(3, lambda r: r, 2)
    with pytest.raises(ValueError):
        is_optimal(1, lambda r: r, 2)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(0, 20))
def test_power_sums_over_field(p, l):
    # sum_{x in GF(p)} x^l is -1 when (p-1) | l, l > 0, and 0 otherwise
    v = int(power_sum_eval(l, range(p), p))
    want = (p - 1) % p if l > 0 and l % (p - 1) == 0 else (0 if l > 0 else p % p)
    assert v == want


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (3, 2), (3, 3), (5, 4)])
def test_newton(p, k):
    assert newton_check(k, p, samples=4, seed=1)
