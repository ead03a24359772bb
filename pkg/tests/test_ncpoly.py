import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qinduce.ncpoly import (
    NcPoly,
    NonTerminationError,
    RewriteSystem,
    TensorNcPoly,
    coefficient_of,
    exp_generator,
    nc_mul,
    normal_order,
    tensor_mul,
)
from qinduce.scalar import Alphabet, NonTruncatableError, ParamPoly

from conftest import OMEGA4, RHO4, nc_polys, words

UGENS = ("K", "P", "H")
NGENS = ("K", "H", "P")


def W(A, *letters, c=None):
    return NcPoly.word(A, letters, c)


def om(A=OMEGA4, n=1):
    return ParamPoly.param(A, A.deform, n)


# ---- free product and coefficients


def test_nc_mul_examples():
    A = OMEGA4
    K, P, H = (W(A, g) for g in UGENS)
    assert nc_mul(K, P) == W(A, "K", "P")
    assert nc_mul(K + P, H) == W(A, "K", "H") + W(A, "P", "H")
    assert nc_mul(P.scale(om()), P) == W(A, "P", "P", c=om())


def test_coefficient_of():
    A = OMEGA4
    p = W(A, "K", "P") + W(A, "P", "P", c=om())
    assert coefficient_of(p, "KP") == 1
    assert coefficient_of(p, ("P", "P")) == om()
    assert coefficient_of(NcPoly.zero(A), ("H",)).is_zero()


# ---- normal ordering examples


def test_pk(U_omega):
    A = U_omega.alphabet
    got = U_omega.normal_order(W(A, "P", "K"))
    assert got == W(A, "K", "P") + W(A, "P", "P", c=om(A))
    assert got.canonical(UGENS) == "K*P + omega*P^2"


def test_hk2_by_manual_rewrites(U_omega):
    A = U_omega.alphabet
    # HK -> KH - P, then PK -> KP + omega P^2
    want = W(A, "K", "K", "H") - W(A, "K", "P").scale(2) - W(A, "P", "P", c=om(A))
    assert U_omega.normal_order(W(A, "H", "K", "K")) == want


def test_normal_word_untouched(U_omega):
    A = U_omega.alphabet
    w = W(A, "K", "K", "P", "H")
    assert U_omega.normal_order(w) == w


def test_step_budget_reports_word():
    A = OMEGA4
    # [B, A] = A B is not decreasing: rewriting loops
    rw = RewriteSystem(("A", "B"), {("B", "A"): W(A, "B", "A")}, A, step_budget=50)
    with pytest.raises(NonTerminationError) as err:
        rw.normal_order(W(A, "B", "A"))
    assert "B" in str(err.value)


# ---- truncated exponentials


def test_exp_generator_examples():
    A2 = Alphabet.galilei("omega", 2)
    e = exp_generator(om(A2).scale(-2), "H")
    assert e == 1 - W(A2, "H", c=om(A2).scale(2)) + W(A2, "H", "H", c=om(A2, 2).scale(2))
    assert exp_generator(ParamPoly.zero(OMEGA4), "H") == NcPoly.one(OMEGA4)
    R1 = Alphabet.galilei("rho", 1)
    assert exp_generator(om(R1).scale(-4), "P") == 1 - W(R1, "P", c=om(R1).scale(4))
    with pytest.raises(NonTruncatableError):
        exp_generator(ParamPoly.param(OMEGA4, "a"), "H")


# ---- tensors


def test_tensor_examples(U_omega):
    A = U_omega.alphabet
    one, K, P, H = NcPoly.one(A), W(A, "K"), W(A, "P"), W(A, "H")
    T = TensorNcPoly.pure
    assert tensor_mul(T(K, one), T(one, H)) == T(K, H)
    s = T(P, one) + T(one, P)
    assert tensor_mul(s, s, U_omega) == T(W(A, "P", "P"), one) + T(P, P).scale(ParamPoly.const(A, 2)) + T(one, W(A, "P", "P"))
    t = T(K, P) + T(H, one)
    assert tensor_mul(TensorNcPoly.one(A), t) == t


# ---- closed sums


def _coef(A, n, k=0):
    return ParamPoly.param(A, A.deform, k).scale(n)


@pytest.mark.parametrize("q", range(6))
def test_pkq_closed_sum(U_omega, q):
    A = U_omega.alphabet
    lhs = U_omega.normal_order(W(A, "P", *["K"] * q))
    want = NcPoly.zero(A)
    for k in range(q + 1):
        c = _coef(A, Fraction(math.factorial(q), math.factorial(q - k)), k)
        want = want + W(A, *["K"] * (q - k), *["P"] * (k + 1), c=c)
    assert lhs == want


@pytest.mark.parametrize("q", range(6))
def test_hkq_closed_sum_standard(U_omega, q):
    A = U_omega.alphabet
    lhs = U_omega.normal_order(W(A, "H", *["K"] * q))
    want = W(A, *["K"] * q, "H")
    for k in range(q):
        c = _coef(A, Fraction(math.factorial(q), (k + 1) * math.factorial(q - k - 1)), k)
        want = want - W(A, *["K"] * (q - k - 1), *["P"] * (k + 1), c=c)
    assert lhs == want


@pytest.mark.parametrize("q", range(6))
def test_hkq_closed_sum_nonstandard(U_rho, q):
    A = U_rho.alphabet
    lhs = U_rho.normal_order(W(A, "H", *["K"] * q))
    # (1 - e^{-4 rho P}) / (4 rho) = sum_{k>=1} (-1)^{k+1} (4 rho)^{k-1} P^k / k!
    want = W(A, *["K"] * q, "H")
    for k in range(1, A.truncate + 2):
        c = _coef(A, Fraction((-1) ** (k + 1) * 4 ** (k - 1) * q, math.factorial(k)), k - 1)
        want = want - W(A, *["K"] * (q - 1), *["P"] * k, c=c) if q else want
    assert lhs == want


# ---- rewriting properties


def _props(pres, gens):
    A = pres.alphabet
    polys = nc_polys(A, gens)

    @given(polys)
    def idempotent(p):
        n = pres.normal_order(p)
        assert pres.normal_order(n) == n
        assert all(pres.rewriter.is_normal(w) for w in n.words())

    @given(polys, polys)
    def morphism(p, q):
        assert pres.normal_order(nc_mul(p, q)) == pres.normal_order(nc_mul(pres.normal_order(p), pres.normal_order(q)))

    @given(words(gens), words(gens), words(gens))
    def associative(x, y, z):
        a, b, c = (W(A, *w) for w in (x, y, z))
        assert pres.mul(pres.mul(a, b), c) == pres.mul(a, pres.mul(b, c))

    idempotent()
    morphism()
    associative()


@pytest.mark.parametrize("name", ["U_omega", "F_omega", "U_rho", "F_rho"])
def test_rewriting_properties(name, request):
    pres = request.getfixturevalue(name)
    _props(pres, pres.generators)


@given(nc_polys(OMEGA4, UGENS), nc_polys(OMEGA4, UGENS), nc_polys(OMEGA4, UGENS))
def test_free_product_bilinear_associative(p, q, r):
    assert nc_mul(p, q + r) == nc_mul(p, q) + nc_mul(p, r)
    assert nc_mul(nc_mul(p, q), r) == nc_mul(p, nc_mul(q, r))


@given(nc_polys(OMEGA4, UGENS))
def test_truncation_coherent_with_normal_order(U_omega, p):
    lo = U_omega.with_truncate(2)
    assert U_omega.normal_order(p).retruncate(2) == lo.normal_order(p.retruncate(2))
