import math

import pytest
from hypothesis import given, strategies as st

from p2motive.hilb import HilbCache, hilb_class
from p2motive.lpoly import L, LPoly
from p2motive.moduli import (
    CoprimalityError,
    betti_tail,
    chi0,
    duality_symmetry,
    is_prime,
    motivic_tail,
    params,
    rho,
    verify_chi_independence,
)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize(
    "d,expected",
    [(5, 4), (4, 3), (9, 7), (1, 7), (2, 1), (3, 2), (6, 5), (8, 7), (10, 9), (12, 7), (14, 13), (15, 7)],
)
def test_rho(d, expected):
    assert rho(d) == expected


def test_rho_bad_input():
    with pytest.raises(ValueError):
        rho(0)


@pytest.mark.parametrize("d,chi,expected", [(4, 1, -5), (5, -7, -7), (6, 5, -7), (3, 1, -4), (1, 1, -1)])
def test_chi0(d, chi, expected):
    assert chi0(d, chi) == expected


def test_chi0_window_contents():
    # every strict-window value lies in the window and represents +-chi
    for d in range(1, 40):
        for chi in range(-3 * d, 3 * d + 1):
            c = chi0(d, chi)
            assert -3 * d / 2 <= c <= -d
            assert (c - chi) % d == 0 or (c + chi) % d == 0


def test_chi0_extended():
    assert chi0(4, 1, extended=True) == [-9, -7, -5, -3]
    assert chi0(4, 2, extended=True) == [-6]
    for d in range(1, 20):
        for chi in range(-2 * d, 2 * d + 1):
            ext = chi0(d, chi, extended=True)
            assert chi0(d, chi) in ext
            assert all(-2 * d - 1 <= c <= -d + 1 for c in ext)


def _fields(p):
    return (p.chi0, p.rho, p.dbar, p.shift, p.dim_m, p.level_scheme, p.stable_threshold)


def test_params_examples():
    assert _fields(params(4, 1)) == (-5, 3, 7, 3, 17, 14, 29)
    assert _fields(params(3, 1)) == (-4, 2, 4, 2, 10, 8, 17)
    assert _fields(params(5, 2)) == (-7, 4, 12, 2, 26, 22, 45)
    assert params(4, 1).coprime and not params(4, 2).coprime


@given(st.integers(1, 30), st.integers(-90, 90))
def test_params_invariants(d, chi):
    p = params(d, chi)
    assert p.shift + 2 * p.dbar == d * d + 1
    assert p.dbar >= 0
    if not p.vacuous:
        assert len(p.betti_indices) == 2 * p.rho
        assert len(p.determined_degrees) == p.rho


def test_vacuous_only_for_d1():
    assert params(1, 1).vacuous
    assert not any(params(d, 1).vacuous for d in range(2, 40))


def test_motivic_tail_d4():
    mt = motivic_tail(4, 1)
    assert mt.level == 14
    assert mt.tail.coefficient(17) == 1
    assert mt.tail.coefficient(16) == 2
    assert mt.tail.coefficient(16) == hilb_class(7).coefficient(13)
    assert mt.tail.min_degree == 15
    assert not mt.semistable_only and not mt.warnings


def test_motivic_tail_non_coprime(caplog):
    mt = motivic_tail(4, 2)
    assert mt.semistable_only
    assert any("semistable_only" in w for w in mt.warnings)
    assert mt.tail.max_degree == 17
    assert "semistable_only" in caplog.text


def test_motivic_tail_vacuous():
    mt = motivic_tail(1, 1)
    assert mt.vacuous and not mt.tail
    assert any("vacuous" in w for w in mt.warnings)


def test_motivic_tail_d2():
    mt = motivic_tail(2, 1)
    assert mt.tail == L**5


@pytest.mark.parametrize("d", range(2, 13))
def test_tail_invariants(d):
    for chi in range(-d, d + 1):
        mt = motivic_tail(d, chi)
        assert mt.tail.coefficient(d * d + 1) == 1
        assert mt.tail.min_degree > mt.level
        assert all(c > 0 for _, c in mt.tail.terms())


def test_betti_tail_d4():
    bt = betti_tail(4, 1)
    assert [i for i, _ in bt.entries] == list(range(29, 35))
    assert bt.betti(34) == 1
    assert bt.betti(33) == 0
    assert bt.betti(32) == 2
    assert bt.betti(32) == hilb_class(7).coefficient(16 - 3)
    assert dict(bt.hodge_diag) == {p: bt.betti(2 * p) for p in (15, 16, 17)}
    with pytest.raises(KeyError):
        bt.betti(28)


def test_betti_tail_refuses_non_coprime():
    with pytest.raises(CoprimalityError, match="coprime"):
        betti_tail(4, 2)
    with pytest.raises(CoprimalityError):
        betti_tail(6, 0)


@pytest.mark.parametrize("d", range(2, 13))
def test_betti_tail_invariants(d):
    for chi in range(-d, d + 1):
        if math.gcd(d, chi) != 1:
            continue
        bt = betti_tail(d, chi)
        assert len(bt.entries) == 2 * rho(d)
        assert all(b >= 0 for _, b in bt.entries)
        assert bt.entries[-1] == (2 * (d * d + 1), 1)
        assert all(b == 0 for i, b in bt.entries if i % 2)
        assert dict(bt.hodge_diag) == {i // 2: b for i, b in bt.entries if i % 2 == 0}


def test_betti_tail_vacuous():
    bt = betti_tail(1, 1)
    assert bt.vacuous and bt.entries == [] and bt.warnings


@pytest.mark.parametrize("d", range(3, 9))
def test_verify_chi_independence(d):
    r = verify_chi_independence(d)
    assert r.passed and not r.vacuous
    assert r.min_degree == d * d - rho(d) + 2
    assert all(math.gcd(d, c) == 1 for c in r.chi0_values)


def test_verify_examples():
    r3 = verify_chi_independence(3)
    assert -2 in r3.chi0_values and -4 in r3.chi0_values
    a = hilb_class(2).shift(6)
    b = hilb_class(4).shift(2)
    assert (a.coefficient(10), a.coefficient(9)) == (1, 2) == (b.coefficient(10), b.coefficient(9))
    assert verify_chi_independence(4).chi0_values == (-9, -7, -5, -3)


@pytest.mark.parametrize("d", range(3, 8))
def test_verify_including_non_coprime(d):
    r = verify_chi_independence(d, include_noncoprime=True)
    assert r.passed
    assert r.chi0_values == tuple(range(-2 * d - 1, -d + 2))


def test_verify_detects_discrepancy():
    cache = HilbCache()
    cache.get(30)
    # chi0=-2 at d=3 uses Hilb^2 shifted by 6; perturb its L^4 coefficient (degree 10)
    cache.classes[2] = cache.classes[2] + LPoly({4: 1})
    r = verify_chi_independence(3, cache)
    assert not r.passed
    assert r.first_discrepancy == 10
    assert -2 in r.discrepant_pair


def test_verify_rejects_small_d():
    with pytest.raises(ValueError):
        verify_chi_independence(2)


@pytest.mark.parametrize("d,chi", [(4, 1), (7, 3), (5, 0), (9, 4), (1, 0)])
def test_duality_symmetry(d, chi):
    assert duality_symmetry(d, chi)


def test_duality_symmetry_all():
    assert all(duality_symmetry(d, chi) for d in range(1, 25) for chi in range(-3 * d, 3 * d + 1))
