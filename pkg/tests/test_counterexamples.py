import pytest

from quadpencil.counterexamples import (
    GenusOneInput,
    PadicWitness,
    RealWitness,
    bounded_global_search,
    build_remark3_7,
    build_remark3_10,
    is_totally_isotropic,
    lift_identity_holds,
    lift_to_3space,
    lift_to_5space,
    load_lind_reichardt,
    local_common_zero,
    remark3_demo,
)
from quadpencil.decision import Problem, check_hypothesis, decide
from quadpencil.errors import HypothesisViolation, InvalidInput
from quadpencil.forms import Pencil, QuadraticFormQ, det_poly, pencil_form, radical_ff
from quadpencil.local import REAL, Place
from quadpencil.poly import T
from quadpencil.ratfunc import RatFunc

SRC = load_lind_reichardt()


def test_shipped_input():
    assert SRC.q1.dim == SRC.q2.dim == 4
    assert "Lind" in SRC.provenance
    with pytest.raises(InvalidInput):
        GenusOneInput(QuadraticFormQ.diag([1, 1]), SRC.q2)


def test_seven_variable_pair():
    p = build_remark3_7(SRC)
    assert p.dim == 7 and det_poly(p).is_zero()
    (v,) = radical_ff(pencil_form(p))
    # proportional to (0,0,0,0,0,-t,1)
    assert all(x == RatFunc(0) for x in v[:5])
    assert v[5] == RatFunc(-T) * v[6]
    restricted = [[p.f.gram[i][j] for j in range(4)] for i in range(4)]
    assert restricted == [list(r) for r in SRC.q1.gram]


def test_ten_variable_pair():
    p = build_remark3_10(SRC)
    assert p.dim == 10 and det_poly(p).is_zero()
    assert [[p.g.gram[i][j] for j in range(4)] for i in range(4)] == [list(r) for r in SRC.q2.gram]
    # n = 2r+1 with r = 4
    with pytest.raises(HypothesisViolation):
        decide(Problem(p, 9, 4))


def test_hypothesis_violated_for_both():
    for build in (build_remark3_7, build_remark3_10):
        assert not check_hypothesis(build(SRC)).holds


@pytest.mark.parametrize("p", [3, 5, 7])
def test_local_zero_small_primes(p):
    w = local_common_zero(SRC.pencil, Place(p))
    assert isinstance(w, PadicWitness)
    assert any(c % p for c in w.point)
    for q in (SRC.q1, SRC.q2):
        assert q(w.point) % w.modulus == 0


def test_bad_primes_and_real_place():
    for p in (2, 17):
        assert local_common_zero(SRC.pencil, Place(p)) is not None
    w = local_common_zero(SRC.pencil, REAL)
    assert isinstance(w, RealWitness)


def test_definite_real_place_gives_none():
    pair = Pencil(QuadraticFormQ.diag([1, 1, 1]), QuadraticFormQ.diag([1, -1, 2]))
    assert local_common_zero(pair, REAL) is None


def test_no_zero_mod_p_gives_none():
    # x^2 + y^2 + z^2 = 0 and x^2 - y^2 = 0 over Q_7 force x^2 = y^2 and 2x^2 = -z^2,
    # and -2 is not a square modulo 7, so only 0 survives
    pair = Pencil(QuadraticFormQ.diag([1, 1, 1]), QuadraticFormQ.diag([1, -1, 0]))
    assert local_common_zero(pair, Place(7)) is None


def test_lift_to_3space_p_adic():
    w = local_common_zero(SRC.pencil, Place(7))
    basis = lift_to_3space(list(w.point), SRC, modulus=7**6)
    assert len(basis) == 3
    assert is_totally_isotropic(build_remark3_7(SRC), basis, modulus=7**6)
    assert lift_identity_holds(build_remark3_7(SRC), SRC)


def test_lift_errors():
    with pytest.raises(InvalidInput):
        lift_to_3space([0, 0, 0, 0], SRC)
    with pytest.raises(InvalidInput):
        lift_to_3space([1, 1, 1, 1], SRC)
    with pytest.raises(InvalidInput):
        lift_to_5space([1, 2, 3], SRC)


def test_exact_lift_on_a_pair_with_rational_points():
    src = GenusOneInput(QuadraticFormQ.diag([1, -1, 0, 0]), QuadraticFormQ.diag([0, 0, 1, -1]))
    basis = lift_to_3space([1, 1, 1, 1], src)
    assert is_totally_isotropic(build_remark3_7(src), basis)
    basis = lift_to_5space([1, -1, 1, -1], src)
    assert len(basis) == 5 and is_totally_isotropic(build_remark3_10(src), basis)


def test_bounded_global_search_finds_nothing():
    res = bounded_global_search(SRC, 10**4)
    assert res.points == [] and res.parameter_bound == 100


def test_global_search_finds_points_when_present():
    # (1 : 0 : 0 : 1) lies on X0*X2 = X1^2 and X0^2 - X2^2 = Y^2
    src = GenusOneInput(SRC.q1, QuadraticFormQ.diag([1, 0, -1, -1]))
    assert bounded_global_search(src, 100).points


def test_demo_report():
    rep = remark3_demo("7", prime_bound=20)
    assert rep["hypothesis"]["status"] == "violated"
    assert rep["locally_solvable_everywhere_checked"]
    assert [r["place"] for r in rep["local_solvability"]][:3] == ["inf", "2", "3"]
    with pytest.raises(InvalidInput):
        remark3_demo("8")
