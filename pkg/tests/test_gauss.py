import pytest

from modyangian.algebra import PrecisionError, commutator
from modyangian.gauss import (
    DRINFELD_RELATIONS,
    gauss_data,
    gauss_factorize,
    higher_root_E,
    quasideterminant_D,
    quasideterminant_E,
    quasideterminant_F,
    verify_drinfeld_relations,
)
from modyangian.graded import current_algebra, leading_term, loop_degree
from modyangian.pbw import apply_transpose, yangian
from modyangian.series import T_matrix, invert, mul, shift_arg


@pytest.mark.parametrize("n,p,N", [(2, 2, 6), (3, 2, 6), (3, 3, 6)])
def test_reconstruction(n, p, N):
    Y = yangian(n, p)
    T = T_matrix(Y, N)
    F, D, E = gauss_factorize(T)
    assert (F * (D * E)).agrees_with(T)


@pytest.mark.parametrize("n,p", [(3, 2), (3, 3)])
def test_quasideterminants_agree(n, p):
    g = gauss_data(n, p, 6)
    Y = g.alg
    for i in range(1, n + 1):
        assert quasideterminant_D(Y, i, 6) == g.D[i]
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            assert quasideterminant_E(Y, i, j, 6) == g.E[(i, j)]
            assert quasideterminant_F(Y, i, j, 6) == g.F[(i, j)]


def test_n1_factorization_is_trivial():
    g = gauss_data(1, 3, 4)
    assert g.D[1] == T_matrix(g.alg, 4)[1, 1]
    assert g.E == {} and g.F == {}


def test_low_coefficients_hand_derived():
    g = gauss_data(2, 3, 4)
    Y = g.alg
    T = Y.gen
    assert g.Dc(2, 1) == T(2, 2, 1)
    assert g.Ec(1, 1) == T(1, 2, 1)
    assert g.Fc(1, 1) == T(2, 1, 1)
    # D_2 = T22 - T21 T11^{-1} T12, read off at u^-2
    assert g.Dc(2, 2) == T(2, 2, 2) - T(2, 1, 1) * T(1, 2, 1)
    # E_1 = T11^{-1} T12, read off at u^-2
    assert g.Ec(1, 2) == T(1, 2, 2) - T(1, 1, 1) * T(1, 2, 1)


def test_higher_roots():
    g = gauss_data(3, 3, 6)
    ug = current_algebra(3, 3)
    for r in range(1, 4):
        e = g.higher_root_E(1, 3, r)
        f = g.higher_root_F(1, 3, r)
        assert e == g.E[(1, 3)].coeffs[r]
        assert f == g.F[(1, 3)].coeffs[r]
        assert apply_transpose(e) == f
        assert loop_degree(e) == r - 1
        assert leading_term(e, r - 1) == ug.e(1, 3, r - 1)
    assert g.higher_root_E(1, 2, 2) == g.Ec(1, 2)
    with pytest.raises(ValueError):
        g.higher_root_E(2, 2, 1)
    assert higher_root_E(3, 3, 2, 3, 1) == g.Ec(2, 1)


def test_H_series():
    g = gauss_data(2, 3, 6)
    H = g.H_series(1)
    assert H.coeffs[0] == g.alg.scalar(-1)
    E = g.E_series(1)
    assert mul(H, shift_arg(E, 1)) == mul(shift_arg(E, -1), H)
    with pytest.raises(ValueError):
        g.H_series(2)


def test_dtilde_recursion():
    g = gauss_data(2, 2, 5)
    for r in range(1, 6):
        rec = g.alg.zero()
        for t in range(1, r + 1):
            rec = rec - g.Dc(1, t) * g.Dtc(1, r - t)
        assert g.Dtc(1, r) == rec
    assert invert(g.D[1]) == g.Dt[1]


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_drinfeld_relations(n, p):
    checks = verify_drinfeld_relations(n, p, 4, 4)
    bad = [c for c in checks if not c.ok]
    assert not bad, bad[:3]
    names = {c.name for c in checks}
    if n == 3:
        assert names == set(DRINFELD_RELATIONS) - {"EE_far", "FF_far"}


def test_far_relations_at_n4():
    checks = verify_drinfeld_relations(4, 2, 2, 2)
    assert {"EE_far", "FF_far"} <= {c.name for c in checks}
    assert all(c.ok for c in checks)


def test_adjacent_relation_needs_positive_superscripts():
    # with E^(0) = 0 the r = 0 instance would read [E_1^(1), E_2^(s)] = 0, which is false
    g = gauss_data(3, 2, 4)
    assert commutator(g.Ec(1, 1), g.Ec(2, 1)) != 0


def test_precision_rejected():
    with pytest.raises(PrecisionError):
        verify_drinfeld_relations(2, 2, 5, 4)
    with pytest.raises(PrecisionError):
        gauss_data(2, 2, 3).Ec(1, 4)
