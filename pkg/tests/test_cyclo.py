from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qsl2.cyclo import (
    CycRat,
    cyclotomic_polynomial,
    euler_phi,
    multiplicative_order,
    parse_scalar,
)
from qsl2.errors import MixedOrders


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def phi_by_division(ell):
    # Independent oracle: divide x^ell - 1 by the product of all lower Phi_d
    # using Fraction arithmetic and long division from scratch.
    num = [Fraction(0)] * (ell + 1)
    num[0], num[ell] = Fraction(-1), Fraction(1)
    den = [Fraction(1)]
    for d in range(1, ell):
        if ell % d == 0:
            den = [Fraction(c) for c in poly_mul(den, list(phi_by_division(d)))]
    # long division num / den
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    num = list(num)
    for k in range(len(num) - 1, len(den) - 2, -1):
        c = num[k] / den[-1]
        out[k - len(den) + 1] = c
        for j in range(len(den)):
            num[k - len(den) + 1 + j] -= c * den[j]
    assert not any(num[: len(den) - 1])
    return tuple(out)


def test_cyclotomic_trivial_and_derived():
    assert cyclotomic_polynomial(1) == (-1, 1)  # x - 1
    assert cyclotomic_polynomial(4) == (1, 0, 1)  # x^2 + 1
    assert cyclotomic_polynomial(6) == (1, -1, 1)  # x^2 - x + 1
    for ell in [2, 3, 5, 8, 12]:
        expect = phi_by_division(ell)
        got = cyclotomic_polynomial(ell)
        assert tuple(Fraction(c) for c in got) == expect
        assert len(got) - 1 == euler_phi(ell)
        assert got[-1] == 1


def test_q_powers():
    assert CycRat.q_power(4, 2) == CycRat.from_rational(4, -1)
    q6 = CycRat.q_power(6, 1)
    assert q6**3 == -1
    assert multiplicative_order(q6**2) == 3
    q5 = CycRat.q_power(5, 1)
    assert q5.inverse() == q5**4
    assert multiplicative_order(q5**2) == 5
    assert multiplicative_order(CycRat.one(7)) == 1


@pytest.mark.parametrize("ell", [3, 4, 5, 6, 8])
def test_order_of_q_is_ell(ell):
    q = CycRat.q_power(ell, 1)
    assert multiplicative_order(q) == ell
    for k in range(ell + 1):
        assert CycRat.q_power(ell, k) * CycRat.q_power(ell, ell - k) == 1


def test_mixed_orders_rejected():
    with pytest.raises(MixedOrders):
        CycRat.one(3) + CycRat.one(4)


def test_invert_zero():
    with pytest.raises(ZeroDivisionError):
        CycRat.zero(5).inverse()
    with pytest.raises(ZeroDivisionError):
        multiplicative_order(CycRat.zero(5))


def elements(ell):
    phi = euler_phi(ell)
    rats = st.fractions(min_value=-30, max_value=30, max_denominator=9)
    return st.lists(rats, min_size=phi, max_size=phi).map(
        lambda cs: CycRat.from_coeffs(ell, cs)
    )


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5, 6, 8]).flatmap(
    lambda ell: st.tuples(elements(ell), elements(ell), elements(ell))
))
def test_field_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 5, 6]).flatmap(lambda ell: elements(ell)))
def test_render_roundtrip(a):
    assert parse_scalar(a.ell, a.render()) == a
