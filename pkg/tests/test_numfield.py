
from conftest import P
from hypothesis import given, settings
from hypothesis import strategies as st

from quadpencil.numfield import is_square, isolate_real_roots, signature_at_roots
from quadpencil.poly import Poly


def test_root_isolation():
    ivs = isolate_real_roots(P(1, 0, -2))
    assert len(ivs) == 2
    assert isolate_real_roots(P(1, 0, 1)) == []


def test_signature_at_roots():
    sig = signature_at_roots([P(1), P(1, 0)], P(1, 0, -2))
    assert sorted(s for _, s in sig) == [0, 2]


def test_squares_in_quadratic_and_cubic_fields():
    p = P(1, 0, -2)  # Q(sqrt 2)
    assert is_square(P(2), p) is True
    assert is_square(P(3), p) is False
    c = P(1, 0, -1, -1)  # cubic, s^3 = s + 1
    assert is_square(P(1, 0, 0), c) is True
    assert is_square(P(2), c) is False
    assert is_square(P(1, 0), c) is False


@settings(max_examples=40)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_squares_are_recognized(cs):
    p = P(1, 0, -1, -1)
    u = Poly(cs)
    if u.is_zero():
        return
    assert is_square((u * u) % p, p) is True
