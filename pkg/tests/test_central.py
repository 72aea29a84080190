import pytest

from modyangian import central
from modyangian.algebra import pth_power
from modyangian.gauss import gauss_data
from modyangian.graded import loop_degree
from modyangian.io import to_text
from modyangian.pbw import yangian
from modyangian.series import generator_series, invert, mul


def test_qdet_n1():
    Y = yangian(1, 3)
    assert central.qdet(1, 3, 5) == generator_series(Y, 1, 1, 5)


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_qdet_equals_C_product(n, p):
    C = central.C_product(n, p, 6)
    assert central.qdet(n, p, 6) == C
    Y = yangian(n, p)
    assert C.coeffs[1] == sum((Y.gen(i, i, 1) for i in range(1, n + 1)), Y.zero())


def test_qdet_frozen_value():
    # C^(2) for n = 2 expanded by hand from T11(u) T22(u-1) - T21(u) T12(u-1)
    Y = yangian(2, 3)
    T = Y.gen
    want = T(1, 1, 2) + T(2, 2, 2) + T(2, 2, 1) + T(1, 1, 1) * T(2, 2, 1) - T(2, 1, 1) * T(1, 2, 1)
    got = central.qdet(2, 3, 4).coeffs[2]
    assert got == want
    # normal-ordered form, frozen
    assert to_text(got) == (
        "1 * T[1,1,1] + 1 * T[1,1,1] * T[2,2,1] + 1 * T[1,1,2] + 2 * T[1,2,1] * T[2,1,1] + 1 * T[2,2,2]"
    )


def test_certify_identity_and_negative_control():
    Y = yangian(2, 2)
    assert central.certify_central(Y.one(), 4).ok
    rep = central.certify_central(Y.gen(1, 2, 1), 4)
    assert not rep.ok
    hit = [c for c in rep.failures() if c.params == {"k": 2, "l": 1, "s": 1}]
    assert hit and hit[0].witness == "[x, T[2,1,1]] = 1 * T[1,1,1] + 1 * T[2,2,1]"


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_C_coefficients_central(n, p):
    C = central.C_product(n, p, 6)
    for r in range(1, 6):
        assert central.is_central(C.coeffs[r], 4)


@pytest.mark.parametrize("p", [2, 3])
def test_B_series(p):
    B = central.B_series(2, p, 1, 8)
    Y = yangian(2, p)
    x = Y.gen(1, 1, 1)
    for r in range(1, p):
        assert B.coeffs[r] == 0
    if p == 2:
        assert B.coeffs[2] == x * x + x
    else:
        assert B.coeffs[3] == x ** 3 - x
    for r in range(1, min(8, 2 * p + 2) + 1):
        assert central.is_central(B.coeffs[r])
    for r in range(p + 1, 9):
        if r % p and B.coeffs[r]:
            assert loop_degree(B.coeffs[r]) <= r - p - 1


@pytest.mark.parametrize("p", [2, 3])
def test_BC_and_structural_identities(p):
    BC = central.BC_series(2, p, 8)
    assert BC.coeffs[0] == 1
    for r in range(1, p):
        assert BC.coeffs[r] == 0
    assert central.S_series(2, p, 1, 1, 8) == central.B_series(2, p, 1, 8)
    S12 = central.S_series(2, p, 1, 2, 8)
    assert S12 == mul(central.B_series(2, p, 1, 8), central.P_series(2, p, 1, 2, 8))
    A = central.A_series(2, p, 1, 8)
    assert A == -mul(central.B_series(2, p, 2, 8), invert(central.B_series(2, p, 1, 8)))
    assert A.coeffs[0] == (-1) ** p


def test_P_series_low_coefficients():
    g = gauss_data(2, 2, 6)
    P = central.P_series(2, 2, 1, 2, 6)
    assert P.coeffs[1] == 0
    assert P.coeffs[2] == pth_power(g.Ec(1, 1))
    assert P.coeffs[3] == g.Ec(1, 1) ** 2


@pytest.mark.parametrize("p", [3, 5])
def test_P_vanishes_at_p_plus_1(p):
    assert central.P_series(2, p, 1, 2, p + 1).coeffs[p + 1] == 0


def test_root_pth_powers_central():
    g = gauss_data(3, 2, 4)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        for r in (1, 2, 3):
            assert central.is_central(pth_power(g.higher_root_E(i, j, r)))
            assert central.is_central(pth_power(g.higher_root_F(i, j, r)))
    # the root element itself is not central
    assert not central.is_central(g.higher_root_E(1, 3, 1))


def test_mismatch_guard():
    with pytest.raises(ValueError):
        central.P_series(2, 2, 2, 1, 4)
    with pytest.raises(ValueError):
        central.family_series("Z", 2, 2, 4)
