import pytest

from conftest import parse
from u6n_integral.group import ConnectionSet, InvalidConnectionSet, generates
from u6n_integral.search import random_connection_set
from u6n_integral.spectral import babai_spectrum, brute_spectrum, discriminant, exact_integer_spectrum

FIRST_N2 = "a^2,a^1,a^3,a^1*b^1,a^3*b^1"
FIRST_N2_SPECTRUM = [5, 3, 3] + [-1] * 8 + [-3]
NON_INTEGRAL_N3 = "a^2*b^1,a^4*b^2,a^1,a^5"


@pytest.mark.parametrize("method", [babai_spectrum, brute_spectrum, exact_integer_spectrum])
def test_empty_set(method):
    spec = method(ConnectionSet(3))
    assert spec.entries == ((0, 18),) or (len(spec.entries) == 1 and abs(spec.entries[0][0]) < 1e-12)
    assert spec.total_multiplicity() == 18


def test_first_family_n2_all_methods():
    S = parse(2, FIRST_N2)
    assert babai_spectrum(S).values() == FIRST_N2_SPECTRUM
    assert exact_integer_spectrum(S).values() == FIRST_N2_SPECTRUM
    brute = brute_spectrum(S).values()
    assert max(abs(x - y) for x, y in zip(brute, FIRST_N2_SPECTRUM)) < 1e-8


def test_disjoint_triangles():
    assert babai_spectrum(parse(2, "b^1,b^2")).values() == [2] * 4 + [-1] * 8
    brute = brute_spectrum(parse(1, "b^1,b^2"))
    assert [k for _, k in brute.entries] == [2, 4]
    assert abs(brute.entries[0][0] - 2) < 1e-8 and abs(brute.entries[1][0] + 1) < 1e-8


def test_non_integral_example():
    S = parse(3, NON_INTEGRAL_N3)
    assert exact_integer_spectrum(S) is None
    b = babai_spectrum(S)
    assert not b.is_exact
    assert b.matches(brute_spectrum(S))


def test_babai_validates():
    with pytest.raises(InvalidConnectionSet):
        babai_spectrum(ConnectionSet(2, 1 << 3, validate=False))


def test_discriminant_examples():
    assert discriminant(ConnectionSet(2), 0).as_integer() == 0
    S = parse(2, "a^1*b^1,a^3*b^1")
    assert discriminant(S, 0).as_integer() == 16
    assert discriminant(S, 1).as_integer() == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_spectrum_invariants(n, rng):
    for _ in range(25):
        S = random_connection_set(n, rng)
        for spec in (babai_spectrum(S), brute_spectrum(S)):
            spec.check_invariants()
            if generates(S):
                assert abs(spec.values()[0] - len(S)) < 1e-7
        exact = exact_integer_spectrum(S)
        if exact is not None:
            exact.check_invariants()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_degree_two_roots_have_even_multiplicity(n, rng):
    from collections import Counter

    from u6n_integral.characters import char_sum, chi

    for _ in range(15):
        S = random_connection_set(n, rng)
        spec = babai_spectrum(S)
        if not spec.is_exact:
            continue
        rest = Counter(spec.values())
        rest.subtract(char_sum(chi(n, j), S.indices).as_integer() for j in range(2 * n))
        assert all(k >= 0 and k % 2 == 0 for k in rest.values())
