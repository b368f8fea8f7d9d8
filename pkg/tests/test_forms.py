from fractions import Fraction

import pytest
from conftest import P
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import det_fraction

from quadpencil.counterexamples import build_remark3_7, load_lind_reichardt
from quadpencil.errors import DegenerateForm, InvalidInput
from quadpencil.forms import (
    DiagonalFF,
    Pencil,
    QuadraticFormFF,
    QuadraticFormQ,
    det_poly,
    diagonalize_ff,
    diagonalize_q,
    diagonalize_q_with_basis,
    orth_sum,
    pencil_form,
    radical_q,
    same_square_class,
    scale,
    target_even,
    target_odd,
)
from quadpencil.globalq import is_isometric_Q
from quadpencil.ratfunc import RatFunc

H = QuadraticFormQ(((0, Fraction(1, 2)), (Fraction(1, 2), 0)))
f111 = QuadraticFormQ.diag([1, 1, 1])
g123 = QuadraticFormQ.diag([1, 2, 3])


def test_from_upper_halves_cross_terms():
    q = QuadraticFormQ.from_upper(2, [1, 3, 2])
    assert q.gram == ((1, Fraction(3, 2)), (Fraction(3, 2), 2))
    assert q.upper_coeffs() == [1, 3, 2]
    assert q([1, 1]) == 6
    with pytest.raises(InvalidInput):
        QuadraticFormQ.from_upper(2, [1, 2])


def test_pencil_form_examples():
    q = pencil_form(Pencil(f111, g123))
    assert [q.gram[i][i] for i in range(3)] == [RatFunc(P(1, 1)), RatFunc(P(2, 1)), RatFunc(P(3, 1))]
    assert pencil_form(Pencil(f111, QuadraticFormQ.zero(3))) == f111.to_ff()
    seven = pencil_form(build_remark3_7(load_lind_reichardt()))
    assert seven.gram[4][5] == RatFunc(Fraction(1, 2))
    assert seven.gram[4][6] == RatFunc(P(Fraction(1, 2), 0))


def test_det_poly_examples():
    assert det_poly(Pencil(f111, g123)) == P(1, 1) * P(2, 1) * P(3, 1)
    assert det_poly(Pencil(H, H)) == (P(1, 1) ** 2).scale(Fraction(-1, 4))
    assert det_poly(build_remark3_7(load_lind_reichardt())).is_zero()


def test_diagonalize_q_examples():
    assert is_isometric_Q(diagonalize_q(H), [1, -1])
    assert diagonalize_q(QuadraticFormQ.diag([1, 1, 1])) == [1, 1, 1]
    d = diagonalize_q(QuadraticFormQ(((1, 1), (1, 1))))
    assert sorted(d) == [0, 1]


def test_diagonalize_ff_examples():
    d = diagonalize_ff(pencil_form(Pencil(f111, g123)))
    assert set(d.entries) == {P(1, 1), P(2, 1), P(3, 1)}
    d = diagonalize_ff(QuadraticFormFF.diag([P(1, 0, 0), P(1, 0, 0, 0)]))
    assert d.entries == (P(1), P(1, 0))
    d = diagonalize_ff(pencil_form(Pencil(H, H)))
    assert len(d) == 2 and same_square_class(d.entries[0] * d.entries[1], -1)
    with pytest.raises(DegenerateForm):
        diagonalize_ff(QuadraticFormFF.diag([P(1, 0), P(0)]))


def test_radical_examples():
    assert radical_q(QuadraticFormQ.diag([1, 1])) == []
    (v,) = radical_q(QuadraticFormQ(((1, 1), (1, 1))))
    assert v[0] == -v[1] != 0
    assert len(radical_q(QuadraticFormQ.zero(3))) == 3


def test_targets():
    d = P(1, 0, 1)
    assert target_even(0, d) == QuadraticFormFF.diag([1, -1, -d])
    assert target_even(1, 1) == QuadraticFormFF.diag([1, -1, 1, -1, 1])
    assert target_odd(0) == QuadraticFormFF.diag([1, -1])
    assert target_odd(2) == QuadraticFormFF.diag([1, -1] * 3)
    with pytest.raises(InvalidInput):
        target_even(0, 0)


def test_orth_sum_and_scale():
    assert orth_sum(QuadraticFormQ.diag([1]), QuadraticFormQ.diag([-1])) == QuadraticFormQ.diag([1, -1])
    assert scale(QuadraticFormQ.diag([1, -1]), 5) == QuadraticFormQ.diag([5, -5])
    with pytest.raises(InvalidInput):
        scale(QuadraticFormQ.diag([1]), 0)


def test_diagonal_normal_form_rejects_zero():
    with pytest.raises(InvalidInput):
        DiagonalFF([P(0)])


sym = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(-5, 5), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2)
    .map(lambda cs: QuadraticFormQ.from_upper(n, cs)))


@settings(max_examples=120)
@given(sym)
def test_congruence_certificate(q):
    """P^T G P is the returned diagonal and det P != 0."""
    d, B = diagonalize_q_with_basis(q)
    n = q.dim
    cols = [[B[i][j] for i in range(n)] for j in range(n)]
    gram = q.restrict(cols)
    assert all(gram[i][j] == (d[i] if i == j else 0) for i in range(n) for j in range(n))
    assert det_fraction(B) != 0


@settings(max_examples=40)
@given(sym, sym)
def test_det_poly_matches_pointwise_determinant(f, g):
    if f.dim != g.dim:
        return
    D = det_poly(Pencil(f, g))
    for t0 in (-2, 3, Fraction(1, 2)):
        assert D(t0) == det_fraction(Pencil(f, g).at(t0).gram)
