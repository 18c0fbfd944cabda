import cmath

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from u6n_integral.cyclotomic import CycValue, cyclotomic_poly, from_exponent_counts, root_power
from u6n_integral.group import ParameterError


def test_cyclotomic_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", range(1, 61))
def test_cyclotomic_matches_sympy(m):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_poly(m)) == [int(c) for c in expected]


def test_root_power_examples():
    assert root_power(4, 0) == 1
    assert root_power(4, 2) == -1
    total = sum((root_power(4, r) for r in range(1, 4)), CycValue.zero(4))
    assert total.as_integer() == -1


def test_ring_examples():
    w = root_power(4, 1)
    v = w + 7
    assert v + CycValue.zero(4) == v
    assert root_power(4, 1) * root_power(4, 3) == 1
    assert ((1 + w) * (1 - w)).as_integer() == 2
    with pytest.raises(ParameterError):
        root_power(4, 1) + root_power(6, 1)


def test_as_integer_and_numeric():
    assert CycValue.zero(6).as_integer() == 0
    assert root_power(4, 1).as_integer() is None
    assert CycValue.from_int(10, 5).numeric() == 5
    assert abs(root_power(4, 1).numeric() - 1j) < 1e-12
    v = root_power(12, 1) + root_power(12, -1)
    assert abs(v.numeric() - 3**0.5) < 1e-9


@pytest.mark.parametrize("n", range(1, 16))
def test_root_sum_identities(n):
    m = 2 * n
    assert sum((root_power(m, r) for r in range(1, m)), CycValue.zero(m)) == -1
    for l in range(2, m - 1, 2):
        assert sum((root_power(m, l * r) for r in range(1, n)), CycValue.zero(m)) == -1


cyc = st.integers(1, 40).flatmap(
    lambda m: st.tuples(
        *[st.lists(st.integers(-9, 9), min_size=m, max_size=m).map(lambda c, m=m: from_exponent_counts(m, c))] * 3
    )
)


@settings(max_examples=150)
@given(cyc)
def test_ring_axioms(uvw):
    u, v, w = uvw
    assert u + v == v + u
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert (u - v) + v == u
    assert abs((u + v).numeric() - (u.numeric() + v.numeric())) < 1e-9
    assert abs((u * v).numeric() - u.numeric() * v.numeric()) < 1e-6 * (1 + abs(u.numeric() * v.numeric()))
    assert abs(u.conjugate().numeric() - u.numeric().conjugate()) < 1e-9
    k = u.as_integer()
    if k is not None:
        assert abs(u.numeric() - k) < 1e-9


@given(st.integers(1, 40), st.integers(-100, 100))
def test_root_power_inverse(m, e):
    assert root_power(m, e) * root_power(m, m - e) == 1
    assert abs(root_power(m, e).numeric() - cmath.exp(2j * cmath.pi * e / m)) < 1e-9


def test_power():
    w = root_power(12, 1)
    assert w**12 == 1
    assert w**6 == -1
