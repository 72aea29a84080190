import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import element_as_labels, lie_bracket_current, naive_normal_form

from modyangian.algebra import commutator
from modyangian.graded import current_algebra, leading_term, loop_degree, p_centre_gen, ug_normal_form, zr
from modyangian.pbw import yangian

labels = st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(0, 3))


@settings(max_examples=60, deadline=None)
@given(st.lists(labels, min_size=1, max_size=4), st.sampled_from([2, 3]))
def test_normal_form_matches_oracle(word, p):
    ug = current_algebra(3, p)
    got = element_as_labels(ug_normal_form(ug, word))
    assert got == naive_normal_form(word, p, bracket=lie_bracket_current)


def test_bracket_rule():
    ug = current_algebra(2, 3)
    assert commutator(ug.e(1, 2, 1), ug.e(2, 1, 2)) == ug.e(1, 1, 3) - ug.e(2, 2, 3)
    assert commutator(ug.e(1, 2, 0), ug.e(1, 2, 5)) == 0


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_central_elements(n, p):
    ug = current_algebra(n, p)
    gens = [ug.e(i, j, r) for i in range(1, n + 1) for j in range(1, n + 1) for r in range(3)]
    for x in [zr(n, p, 1), p_centre_gen(n, p, 1, 2, 1), p_centre_gen(n, p, 1, 1, 1)]:
        for y in gens:
            assert commutator(x, y) == 0
    assert commutator(ug.e(1, 2, 1), ug.e(2, 1, 0)) != 0


def test_loop_degree_and_leading_term():
    Y = yangian(2, 3)
    ug = current_algebra(2, 3)
    x = Y.gen(1, 2, 3) * Y.gen(2, 1, 2) + Y.gen(1, 1, 1)
    assert loop_degree(x) == 3
    assert leading_term(x, 3) == ug.e(1, 2, 2) * ug.e(2, 1, 1)
    assert leading_term(x, 4) == 0
    with pytest.raises(ValueError):
        leading_term(x, 2)
    with pytest.raises(ValueError):
        loop_degree(Y.zero())
    assert leading_term(Y.zero(), 0) == 0


@settings(max_examples=40, deadline=None)
@given(labels, labels)
def test_leading_term_of_commutator(a, b):
    # gr [T^(r), T^(s)] = [gr T^(r), gr T^(s)] at degree r + s - 2
    Y = yangian(3, 3)
    ug = current_algebra(3, 3)
    (i, j, r), (k, l, s) = (a[0], a[1], a[2] + 1), (b[0], b[1], b[2] + 1)
    c = commutator(Y.gen(i, j, r), Y.gen(k, l, s))
    want = commutator(ug.e(i, j, r - 1), ug.e(k, l, s - 1))
    if c == 0:
        assert want == 0
    else:
        assert leading_term(c, r + s - 2) == want
