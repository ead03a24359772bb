import pytest
from hypothesis import given

from qinduce import hopfops
from qinduce.hopfops import BicrossOps, check_bicross_conditions, check_hopf_axioms
from qinduce.ncpoly import NcPoly, TensorNcPoly, exp_generator, tensor_mul
from qinduce.presentation import parse_bundle
from qinduce.scalar import ParamPoly

from conftest import nc_polys
from test_presentation import FREE, NONSTD, STD

T = TensorNcPoly.pure


def W(pres, *letters):
    return NcPoly.word(pres.alphabet, letters)


def om(pres, k=1):
    return ParamPoly.param(pres.alphabet, pres.alphabet.deform, k)


def test_coproduct_examples(U_omega):
    U = U_omega
    one, P, H = NcPoly.one(U.alphabet), W(U, "P"), W(U, "H")
    e = exp_generator(om(U).scale(-2), "H", U)
    assert hopfops.coproduct(P, U) == T(P, one) + T(e, P)
    assert hopfops.coproduct(one, U) == TensorNcPoly.one(U.alphabet)
    two = ParamPoly.const(U.alphabet, 2)
    assert hopfops.coproduct(W(U, "H", "H"), U) == T(W(U, "H", "H"), one) + T(H, H).scale(two) + T(one, W(U, "H", "H"))


def test_counit_examples(U_omega):
    U = U_omega
    assert hopfops.counit(W(U, "K", "P", "H"), U) == 0
    assert hopfops.counit(NcPoly.one(U.alphabet), U) == 1
    assert hopfops.counit(1 + W(U, "P").scale(om(U)), U) == 1


def test_antipode_examples(U_omega):
    U = U_omega
    e = exp_generator(om(U).scale(2), "H", U)
    assert hopfops.antipode(W(U, "P"), U) == -U.mul(e, W(U, "P"))
    assert hopfops.antipode(NcPoly.one(U.alphabet), U) == NcPoly.one(U.alphabet)
    gp, gk = hopfops.antipode(W(U, "P"), U), hopfops.antipode(W(U, "K"), U)
    assert hopfops.antipode(W(U, "K", "P"), U) == U.mul(gp, gk)


@pytest.mark.parametrize("name", ["U_omega", "F_omega", "U_rho", "F_rho"])
def test_hopf_axioms_shipped(name, request):
    rep = check_hopf_axioms(request.getfixturevalue(name), 3)
    assert rep.ok, rep.text()
    checks = {r.check for r in rep.results}
    assert {"coassociativity", "counit-left", "counit-right", "antipode-left", "antipode-right"} <= checks


def test_hopf_axioms_free_algebra():
    pres = parse_bundle(FREE).algebras["Ufree"]
    assert check_hopf_axioms(pres, 3).ok


def test_mutated_antipode_witness():
    b = parse_bundle(STD.replace("P = -exp(2*omega*H)*P;", "P = -P;"))
    rep = check_hopf_axioms(b.algebras["U_omega"], 2)
    bad = rep.first_failure()
    assert bad is not None and bad.check.startswith("antipode")
    assert bad.monomial == "P"
    assert bad.lhs != bad.rhs and "omega" in bad.lhs + bad.rhs


# ---- bicrossproduct structure


SPLITS = [("standard", "U_omega_split"), ("standard", "F_omega_split"),
          ("nonstandard", "U_rho_split"), ("nonstandard", "F_rho_split")]


@pytest.mark.parametrize("tag, split", SPLITS)
def test_bicross_conditions_shipped(tag, split, std, nonstd):
    b = std if tag == "standard" else nonstd
    spec = b.bicross[split]
    rep = check_bicross_conditions(spec, b.algebras[spec.algebra], 3)
    assert rep.ok, rep.text()
    checks = {r.check for r in rep.results}
    for c in ("c1", "c2", "c3", "c4", "c5"):
        assert any(x.startswith(c) for x in checks), c
    assert {"reconstruct-cross-relation", "reconstruct-product", "reconstruct-coproduct", "reconstruct-antipode"} <= checks


def test_counit_of_action_on_generators(std):
    spec = std.bicross["U_omega_split"]
    ops = BicrossOps(spec, std.algebras["U_omega"])
    assert ops.eps(ops.act_word(("H",), ("K",))) == 0


def test_semidirect_cross_relation(std, U_omega):
    ops = BicrossOps(std.bicross["U_omega_split"], U_omega)
    # (1 (x) H)(K (x) 1) = HK = KH - P
    assert ops.semidirect_product(("H",), ("K",)) == U_omega.normal_order(W(U_omega, "H", "K"))
    assert U_omega.normal_order(W(U_omega, "H", "K")) == W(U_omega, "K", "H") - W(U_omega, "P")


def test_coaction_reproduces_coproduct(std, U_omega):
    ops = BicrossOps(std.bicross["U_omega_split"], U_omega)
    assert ops.semidirect_coproduct(("K",)) == hopfops.coproduct(W(U_omega, "K"), U_omega)


def test_mutated_coaction_sign_witness():
    text = STD.replace("x = x (x) 1 - t (x) v;\n    t = t (x) 1;", "x = x (x) 1 + t (x) v;\n    t = t (x) 1;")
    assert text != STD
    b = parse_bundle(text)
    spec = b.bicross["F_omega_split"]
    rep = check_bicross_conditions(spec, b.algebras["F_omega"], 3)
    bad = rep.first_failure()
    assert bad is not None
    assert bad.check == "coaction-matches-coproduct" and bad.monomial == "x"
    assert "t" in bad.lhs + bad.rhs


def test_mutated_action_sign_witness():
    b = parse_bundle(STD.replace("H <| K = -P;", "H <| K = P;"))
    spec = b.bicross["U_omega_split"]
    rep = check_bicross_conditions(spec, b.algebras["U_omega"], 2)
    assert rep.first_failure().check == "action-table-matches-relations"


def test_relation_sign_needs_duality_to_detect():
    # [x, v] = +2 rho v still gives a Hopf algebra; only the pairing exposes it
    from qinduce.pairing import PairingEngine, check_duality
    b = parse_bundle(NONSTD.replace("[x, v] = -2*rho*v;", "[x, v] = 2*rho*v;"))
    assert check_hopf_axioms(b.algebras["F_rho"], 2).ok
    bad = check_duality(PairingEngine.from_bundle(b), 2).first_failure()
    assert bad is not None and bad.check == "product-dual-to-coproduct"
    assert (bad.monomial, bad.lhs, bad.rhs) == ("H, K, x^2", "4*rho", "0")


# ---- structure-map properties


@pytest.mark.parametrize("name", ["U_omega", "F_rho"])
def test_structure_maps_are_morphisms(name, request):
    pres = request.getfixturevalue(name)
    polys = nc_polys(pres.alphabet, pres.generators, max_terms=2, max_len=2)

    @given(polys, polys)
    def prop(p, q):
        pq = pres.mul(p, q)
        assert hopfops.counit(pq, pres) == hopfops.counit(p, pres) * hopfops.counit(q, pres)
        dp, dq = hopfops.coproduct(p, pres), hopfops.coproduct(q, pres)
        assert hopfops.coproduct(pq, pres) == tensor_mul(dp, dq, pres)
        assert hopfops.antipode(pq, pres) == pres.mul(hopfops.antipode(q, pres), hopfops.antipode(p, pres))

    prop()
