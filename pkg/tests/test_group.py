import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from u6n_integral.group import (
    ConnectionSet,
    Element,
    InvalidConnectionSet,
    ParameterError,
    cayley_adjacency,
    conjugacy_classes,
    elements,
    generates,
    identity,
    inv,
    mul,
    parse_element,
)


def elem(draw_n):
    return st.builds(lambda i, j: Element(draw_n, i, j), st.integers(0, 2 * draw_n - 1), st.integers(0, 2))


triples = st.integers(1, 7).flatmap(lambda n: st.tuples(elem(n), elem(n), elem(n)))


def test_mul_examples():
    assert mul(Element(3, 0, 0), Element(3, 3, 1)) == Element(3, 3, 1)
    assert mul(Element(2, 1, 1), Element(2, 1, 0)) == Element(2, 2, 2)
    assert mul(Element(1, 1, 1), Element(1, 1, 1)) == identity(1)


def test_mul_rejects_mismatched_n():
    with pytest.raises(ParameterError):
        mul(Element(2, 1, 0), Element(3, 1, 0))


def test_inverse_examples():
    assert inv(Element(2, 1, 1)) == Element(2, 3, 1)
    assert inv(identity(5)) == identity(5)
    assert inv(Element(2, 2, 1)) == Element(2, 2, 2)


@given(triples)
def test_associative_and_inverse(xyz):
    x, y, z = xyz
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, inv(x)).is_identity
    assert mul(inv(x), x).is_identity


@pytest.mark.parametrize("n", range(1, 8))
def test_defining_relations(n):
    a, b = Element(n, 1, 0), Element(n, 0, 1)
    assert a.order() == 2 * n
    assert b.order() == 3
    assert mul(inv(a), mul(b, a)) == inv(b)
    assert len(set(elements(n))) == 6 * n


def test_n1_is_s3_like():
    orders = sorted(x.order() for x in elements(1))
    assert orders == [1, 2, 2, 2, 3, 3]


def test_n0_rejected():
    with pytest.raises(ParameterError):
        Element(0, 0, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_conjugacy_classes(n):
    classes = conjugacy_classes(n)
    assert len(classes) == 3 * n
    assert [len(c) for c in classes] == [1, 2, 3] * n
    flat = [x for c in classes for x in c]
    assert sorted(flat) == sorted(elements(n))
    for cls in classes:
        members = set(cls)
        for x, g in itertools.product(cls, elements(n)):
            assert mul(inv(g), mul(x, g)) in members


def test_conjugacy_small_cases():
    c1 = conjugacy_classes(1)
    assert [set(map(str, c)) for c in c1] == [{"1"}, {"b^1", "b^2"}, {"a^1", "a^1*b^1", "a^1*b^2"}]
    c2 = conjugacy_classes(2)
    assert len(c2) == 6
    assert c2[3] == [Element(2, 2, 0)]


@pytest.mark.parametrize(
    "token, ij",
    [("1", (0, 0)), ("a^3", (3, 0)), ("b^2", (0, 2)), ("a^1*b^1", (1, 1)), ("a", (1, 0)), ("a^-1*b^2", (3, 2))],
)
def test_parse_element(token, ij):
    x = parse_element(token, 2)
    assert (x.i, x.j) == ij


@pytest.mark.parametrize("bad", ["c", "a^x", "b*a", "a^1*", ""])
def test_parse_element_rejects(bad):
    with pytest.raises(ParameterError):
        parse_element(bad, 2)


def test_connection_set_validation():
    with pytest.raises(InvalidConnectionSet):
        ConnectionSet.parse(2, "1,a^2")
    with pytest.raises(InvalidConnectionSet):
        ConnectionSet.parse(2, "a^1")
    S = ConnectionSet.parse(2, "a^1,a^3")
    assert len(S) == 2 and Element(2, 3, 0) in S


def test_round_trip():
    S = ConnectionSet.parse(3, "a^2*b^1,a^4*b^2,a^1,a^5,b^1,b^2")
    assert ConnectionSet.parse(3, str(S)) == S
    assert ConnectionSet.parse(3, str(ConnectionSet(3))) == ConnectionSet(3)


def test_generates():
    assert not generates(ConnectionSet(2))
    assert generates(ConnectionSet.parse(2, "a^1,a^3,a^1*b^1,a^3*b^1,a^2"))
    assert not generates(ConnectionSet.parse(2, "a^2"))


def test_adjacency_empty_and_triangles():
    assert not cayley_adjacency(ConnectionSet(2)).any()
    A = cayley_adjacency(ConnectionSet.parse(1, "b^1,b^2"))
    assert (A.sum(axis=1) == 2).all()
    # two disjoint triangles: the cosets <b> and a<b>
    triangle = np.ones((3, 3), dtype=int) - np.eye(3, dtype=int)
    assert (A[:3, :3] == triangle).all() and (A[3:, 3:] == triangle).all()
    assert not A[:3, 3:].any()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_adjacency_symmetric_iff_inverse_closed(n, rng):
    for _ in range(40):
        mask = rng.getrandbits(6 * n) & ~1
        S = ConnectionSet(n, mask, validate=False)
        closed = True
        try:
            S.validate()
        except InvalidConnectionSet:
            closed = False
        A = cayley_adjacency(S)
        assert (A == A.T).all() == closed
        assert (A.sum(axis=1) == len(S)).all()
        assert not np.diag(A).any()
