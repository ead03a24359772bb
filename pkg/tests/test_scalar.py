from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from qinduce.scalar import (
    I,
    Alphabet,
    ConfigurationError,
    DivisibilityError,
    GaussianRational,
    NonTruncatableError,
    ParamPoly,
    poly_arith,
    poly_div_param,
    poly_exp_truncated,
    poly_substitute,
)

from conftest import OMEGA4, gaussians, param_polys

A = OMEGA4
w, a, b = (ParamPoly.param(A, n) for n in A.names)
ia = a * I


def sym(p):
    """Independent oracle: the same polynomial as a sympy expression."""
    syms = sympy.symbols(p.alphabet.names)
    out = sympy.Integer(0)
    for exps, c in p.terms.items():
        mono = sympy.Mul(*[s**e for s, e in zip(syms, exps)])
        out += (sympy.Rational(c.re.numerator, c.re.denominator)
                + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)) * mono
    return sympy.expand(out)


def sym_truncate(expr, alphabet):
    d = sympy.Symbol(alphabet.names[0])
    poly = sympy.Poly(sympy.expand(expr), d)
    return sympy.expand(sum(c * d**k for (k,), c in poly.terms() if k <= alphabet.truncate))


# ---- gaussian rationals


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    if y:
        assert (x / y) * y == x


def test_gaussian_text():
    assert str(I * I) == "-1"
    assert str(GaussianRational(Fraction(1, 2), 3)) == "(1/2+3*i)"


# ---- operation examples


def test_mul_ia_ia():
    assert poly_arith("mul", ia, ia) == -(a * a)


def test_mul_unit():
    p = w * a + ia
    assert poly_arith("mul", ParamPoly.const(A, 1), p) == p


def test_mul_square_binomial():
    p = w + ia
    got = poly_arith("mul", p, p)
    assert got == w * w + (w * a).scale(2 * I) - a * a
    assert sym(got) == sympy.expand(sym(p) ** 2)


def test_mismatched_policies_rejected():
    other = ParamPoly.param(Alphabet.galilei("omega", 2), "a")
    with pytest.raises(ConfigurationError):
        poly_arith("add", a, other)
    with pytest.raises(ConfigurationError):
        poly_arith("mul", a, ParamPoly.param(Alphabet.galilei("rho", 4), "a"))


def test_substitute_examples():
    assert poly_substitute(ia + w * a * a, "omega", 0) == ia
    assert poly_substitute(b * I, "omega", 0) == b * I
    p = w * w + (w * a).scale(2 * I) - a * a
    assert poly_substitute(p, "omega", 1) == 1 + a.scale(2 * I) - a * a


def test_substitute_unknown_parameter():
    with pytest.raises(KeyError):
        poly_substitute(a, "rho", 0)


def test_exp_examples():
    R2 = Alphabet.galilei("rho", 2)
    rho, ra = ParamPoly.param(R2, "rho"), ParamPoly.param(R2, "a")
    assert poly_exp_truncated(ParamPoly.zero(A)) == 1
    assert poly_exp_truncated((rho * ra).scale(-4 * I)) == 1 - (rho * ra).scale(4 * I) - (rho * rho * ra * ra).scale(8)
    W1 = Alphabet.galilei("omega", 1)
    c = Fraction(3, 7)
    assert poly_exp_truncated(ParamPoly.param(W1, "omega").scale(-2 * c)) == 1 - ParamPoly.param(W1, "omega").scale(2 * c)


def test_exp_rejects_degree_zero():
    with pytest.raises(NonTruncatableError):
        poly_exp_truncated(ia + w)


def test_div_examples():
    R = Alphabet.galilei("rho", 4)
    rho, ra = ParamPoly.param(R, "rho"), ParamPoly.param(R, "a")
    got = poly_div_param((rho * ra).scale(4 * I) + (rho * rho * ra * ra).scale(8), "rho")
    assert got == ra.scale(4 * I) + (rho * ra * ra).scale(8)
    assert poly_div_param(w, "omega") == 1
    with pytest.raises(DivisibilityError):
        poly_div_param(ia + w * a * a, "omega")


def test_shift_series_against_taylor():
    R2 = Alphabet.galilei("rho", 2)
    rho, ra = ParamPoly.param(R2, "rho"), ParamPoly.param(R2, "a")
    # evaluate one order higher so the division keeps order N
    R3 = R2.with_truncate(3)
    x = (ParamPoly.param(R3, "rho") * ParamPoly.param(R3, "a")).scale(-4 * I)
    got = poly_div_param(1 - poly_exp_truncated(x), "rho").scale(Fraction(1, 4)).retruncate(2)
    r, sa = sympy.symbols("rho a")
    taylor = sympy.series((1 - sympy.exp(-4 * sympy.I * sa * r)) / (4 * r), r, 0, 3).removeO()
    assert sym(got) == sympy.expand(taylor)
    assert got.retruncate(1) == (ra * I + (rho * ra * ra).scale(2)).retruncate(1)


def test_canonical_text():
    R = Alphabet.galilei("rho", 4)
    p = ParamPoly.param(R, "a") * I + (ParamPoly.param(R, "a") ** 2 * ParamPoly.param(R, "rho")).scale(2)
    assert p.canonical() == "(0+1*i)*a + 2*a^2*rho"
    assert ParamPoly.zero(R).canonical() == "0"


def test_truncation_drops_high_orders():
    assert (w**5).is_zero()
    assert all(k[0] <= A.truncate for k in (w**3 * w + a).raw)


# ---- ring properties against the sympy oracle

polys = param_polys()


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_product_matches_oracle(p, q):
    assert sym(p * q) == sym_truncate(sym(p) * sym(q), A)
    assert sym(p - q) == sympy.expand(sym(p) - sym(q))


@given(polys)
def test_no_zero_or_overflowing_terms(p):
    assert all(c != 0 for c in p.raw.values())
    assert all(k[0] <= A.truncate for k in p.raw)


@given(polys, polys, st.sampled_from(["omega", "a", "b"]))
def test_substitution_zero_is_ring_morphism(p, q, name):
    s = lambda x: poly_substitute(x, name, 0)
    assert s(p * q) == s(p) * s(q)
    assert s(p + q) == s(p) + s(q)


@given(polys, gaussians)
def test_substitution_matches_oracle(p, g):
    val = sympy.Rational(g.re.numerator, g.re.denominator) + sympy.I * sympy.Rational(g.im.numerator, g.im.denominator)
    assert sym(poly_substitute(p, "a", g)) == sympy.expand(sym(p).subs(sympy.Symbol("a"), val))


@given(param_polys(Alphabet.galilei("omega", 6), max_exp=3))
def test_div_inverts_multiplication(p):
    p = p.retruncate(5).retruncate(6)
    om = ParamPoly.param(p.alphabet, "omega")
    assert poly_div_param(p * om, "omega") == p


@given(param_polys(max_exp=3))
def test_exp_is_homomorphic(p):
    # exp(x) exp(-x) = 1 for truncatable x
    x = p * w
    assert poly_exp_truncated(x) * poly_exp_truncated(-x) == 1
