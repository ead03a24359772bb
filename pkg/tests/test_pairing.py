import math

import pytest
from hypothesis import given, strategies as st

from qinduce.ncpoly import NcPoly
from qinduce.pairing import PairingEngine, check_duality, exponents, pair
from qinduce.presentation import parse_bundle
from qinduce.scalar import ConfigurationError, ParamPoly

from conftest import nc_polys, param_polys
from test_presentation import STD


@pytest.fixture(scope="module")
def eng(std):
    return PairingEngine.from_bundle(std)


@pytest.fixture(scope="module")
def eng_rho(nonstd):
    return PairingEngine.from_bundle(nonstd)


@pytest.mark.parametrize("left, right, want", [
    ("K*P*H", "v*x*t", "1"),
    ("K^2", "v^2", "2"),
    ("P*K", "v*x", "1"),
    ("1", "1", "1"),
    ("K^2*P*H^3", "v^2*x*t^3", "12"),
    ("K*P", "v*t", "0"),
    ("P*K", "x^2", "2*omega"),
])
def test_pair_examples(eng, left, right, want):
    assert eng.parse_pair(left, right).canonical() == want


def test_nonstandard_examples(eng_rho):
    assert eng_rho.parse_pair("K*H*P", "v*t*x").canonical() == "1"
    assert eng_rho.parse_pair("H*K", "x^2").canonical() == "4*rho"


def test_wrong_side_rejected(eng, std):
    U, F = std.algebras["U_omega"], std.algebras["F_omega"]
    with pytest.raises(ConfigurationError):
        eng.pair(F.parse("v"), F.parse("v"))
    with pytest.raises(ConfigurationError):
        eng.pair(U.parse("K"), U.parse("K"))


def test_basis_duality_formula(eng):
    U, F = eng.upres, eng.fpres
    ws_u = U.rewriter.normal_words(3)
    ws_f = F.rewriter.normal_words(3)
    for u in ws_u:
        eu = exponents(u, ("K", "P", "H"))
        for f in ws_f:
            ef = exponents(f, ("v", "x", "t"))
            want = math.prod(map(math.factorial, eu)) if eu == ef else 0
            assert eng.pair_words(u, f) == want


@pytest.mark.parametrize("which", ["eng", "eng_rho"])
def test_duality_suite(which, request):
    rep = check_duality(request.getfixturevalue(which), 3)
    assert rep.ok, rep.text()
    assert {r.check for r in rep.results} == {
        "unit-pairs-to-counit", "pairs-with-unit-to-counit", "product-dual-to-coproduct",
        "coproduct-dual-to-product", "antipode-self-dual"}


def test_units_only(eng):
    rep = check_duality(eng, 0)
    assert rep.ok and len(rep.results) == 5


def test_flipped_convention_fails(std):
    rep = check_duality(PairingEngine.from_bundle(std, convention="flipped"), 2)
    assert not rep.ok


def test_dropped_cross_term_witness():
    b = parse_bundle(STD.replace("x = x (x) 1 + 1 (x) x - t (x) v;", "x = x (x) 1 + 1 (x) x;"))
    bad = check_duality(PairingEngine.from_bundle(b), 2).first_failure()
    assert bad is not None
    assert bad.check == "product-dual-to-coproduct"
    assert len(bad.monomial.split(", ")) == 3 and bad.lhs != bad.rhs


def test_module_function(eng, std):
    assert pair(std.algebras["U_omega"].parse("K"), std.algebras["F_omega"].parse("v"), eng) == 1


def test_bilinear(eng):
    U, F = eng.upres, eng.fpres
    A = U.alphabet
    us = nc_polys(A, U.generators, max_terms=2, max_len=3)
    fs = nc_polys(A, F.generators, max_terms=2, max_len=3)
    cs = param_polys(A, max_terms=2, max_exp=2)

    @given(us, us, fs, cs)
    def left(u1, u2, f, c):
        assert eng.pair(u1.scale(c) + u2, f) == c * eng.pair(u1, f) + eng.pair(u2, f)

    @given(us, fs, fs, cs)
    def right(u, f1, f2, c):
        assert eng.pair(u, f1.scale(c) + f2) == c * eng.pair(u, f1) + eng.pair(u, f2)

    left()
    right()
