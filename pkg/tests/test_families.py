import pytest

from u6n_integral.families import FAMILIES, family, family_report, srg_check, verify_family
from u6n_integral.group import ConnectionSet, ParameterError, generates

RANGES = {"4-first": range(2, 7), "4-second": range(2, 7), "4-third": range(2, 7), "cor-3x": range(3, 6)}
DEGREE = {"4-first": lambda n: 3 * n - 1, "4-second": lambda n: 3 * n - 2, "4-third": lambda n: 6 * n - 3}


def test_first_n2():
    spec = family("4-first", 2)
    assert len(spec.S) == 5
    assert spec.predicted.values() == [5, 3, 3] + [-1] * 8 + [-3]


def test_third_n2():
    assert family("4-third", 2).predicted.values() == [9] + [0] * 8 + [-3] * 3


def test_cor3x_p3():
    spec = family("cor-3x", 3)
    assert spec.n == 6
    expected = sorted([-3] * 8 + [0] * 16 + [3] * 6 + [0] * 2 + [6] + [-9] * 2 + [18], reverse=True)
    assert spec.predicted.values() == expected


@pytest.mark.parametrize("fid", FAMILIES)
def test_families_verify(fid):
    for p in RANGES[fid]:
        spec = family(fid, p)
        assert verify_family(spec)
        assert generates(spec.S)
        assert spec.predicted.total_multiplicity() == 6 * spec.n
        degree = 7 * p - 3 if fid == "cor-3x" else DEGREE[fid](p)
        assert len(spec.S) == degree == spec.predicted.values()[0]


def test_parameter_ranges():
    with pytest.raises(ParameterError):
        family("cor-3x", 2)
    with pytest.raises(ParameterError):
        family("4-first", 1)
    with pytest.raises(ParameterError):
        family("4-fifth", 3)
    assert family("cor-4-first", 3).id == "4-first"


def test_mismatch_detected(caplog):
    spec = family("4-first", 3)
    wrong = family("4-second", 3)
    bad = type(spec)(spec.id, spec.param, spec.n, spec.S, wrong.predicted)
    assert not verify_family(bad)
    assert "mismatch" in caplog.text
    assert not family_report(bad)["ok"]


def test_srg():
    for n in range(2, 7):
        assert srg_check(family("4-third", n).S, 6 * n, 6 * n - 3, 6 * n - 6, 6 * n - 3)
    assert not srg_check(family("4-first", 2).S, 12, 5, 0, 5)
    complete = ConnectionSet(2, (1 << 12) - 2)
    for mu in (0, 3, 11):
        assert srg_check(complete, 12, 11, 10, mu)
