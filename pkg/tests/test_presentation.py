import pytest
from hypothesis import given, strategies as st

from qinduce import induce
from qinduce.presentation import (
    ParseError,
    load_bundle,
    parse_bundle,
    serialize_bundle,
    validate_presentation,
)

from conftest import bundle

STD = induce.shipped_bundle_text("standard")
NONSTD = induce.shipped_bundle_text("nonstandard")

FREE = """
algebra Ufree {
  param z truncate 2;
  generators A > B;
  relations { }
  coproduct { A = A (x) 1 + 1 (x) A; B = B (x) 1 + 1 (x) B; }
  counit { A = 0; B = 0; }
  antipode { A = -A; B = -B; }
}
"""


def test_shipped_standard_contents(std):
    assert sorted(std.algebras) == ["F_omega", "U_omega"]
    assert list(std.pairings) == ["pair_omega"]
    assert sorted(std.bicross) == ["F_omega_split", "U_omega_split"]
    assert list(std.characters) == ["chi_omega"]
    assert std.algebras["U_omega"].generators == ("K", "P", "H")
    assert std.pairings["pair_omega"].f_basis == ("v", "x", "t")


def test_nonstandard_basis_order(nonstd):
    spec = nonstd.pairings["pair_rho"]
    assert spec.u_basis == ("K", "H", "P")
    assert spec.f_basis == ("v", "t", "x")


@pytest.mark.parametrize("text", [STD, NONSTD], ids=["standard", "nonstandard"])
def test_round_trip(text):
    b = parse_bundle(text)
    s = serialize_bundle(b)
    assert parse_bundle(s) == b
    assert serialize_bundle(parse_bundle(s)) == s


def test_load_from_path(tmp_path):
    p = tmp_path / "g.hopf"
    p.write_text(STD, encoding="utf-8")
    assert load_bundle(p, 4) == bundle("standard")


def test_truncate_override():
    b = parse_bundle(STD, 2)
    assert b.algebras["U_omega"].alphabet.truncate == 2


def test_free_presentation():
    b = parse_bundle(FREE)
    pres = b.algebras["Ufree"]
    assert pres.parse("B*A").canonical(pres.generators) == "B*A"
    assert validate_presentation(pres).ok


@pytest.mark.parametrize("name", ["U_omega", "F_omega", "U_rho", "F_rho"])
def test_shipped_presentations_validate(name, std, nonstd):
    pres = {**std.algebras, **nonstd.algebras}[name]
    rep = validate_presentation(pres)
    assert rep.ok, rep.text()
    assert len(rep.results) > 10


def test_mutated_relation_breaks_counit():
    b = parse_bundle(STD.replace("[P, K] = omega*P^2;", "[P, K] = omega*P^2 + 1;"))
    rep = validate_presentation(b.algebras["U_omega"])
    bad = rep.first_failure()
    assert bad is not None and "counit" in bad.check
    assert {bad.lhs, bad.rhs} == {"0", "1"}


# ---- error paths


def _err(text):
    with pytest.raises(ParseError) as e:
        parse_bundle(text)
    return e.value


def test_unclosed_relations_block():
    text = "algebra U {\n  param z truncate 1;\n  generators K > P;\n  relations { [P, K] = -P\n"
    e = _err(text)
    assert e.line == 4


def test_syntax_error_location():
    e = _err(STD.replace("[H, K] = -P;", "[H, K] = -P *;"))
    assert e.line == 8
    assert "line 8, column" in str(e)


@pytest.mark.parametrize(
    "old, new, fragment",
    [
        ("[H, K] = -P;", "[H, K] = -Q;", "unknown generator"),
        ("[P, K] = omega*P^2;", "[K, P] = omega*P^2;", "order"),
        ("K = -exp(2*omega*H)*K;", "K = -exp(2+omega*H)*K;", "exp"),
        ("character chi_omega on U_omega", "character chi_omega on U_nope", "U_nope"),
        ("pairing pair_omega : U_omega, F_omega", "pairing pair_omega : U_omega, F_nope", "F_nope"),
        ("basis K*P*H , v*x*t;", "basis P*K*H , v*x*t;", "order"),
        ("sectors { K: K; L: P, H; }", "sectors { K: K, P; L: H; }", ""),
        ("P <| K = omega*P^2;", "P |> K = omega*P^2;", ""),
    ],
)
def test_rejected_bundles(old, new, fragment):
    assert old in STD
    e = _err(STD.replace(old, new))
    assert fragment.lower() in str(e).lower()


def test_noncommutative_kernel_rejected():
    e = _err(STD.replace("[H, P] = 0;", "[H, P] = omega*P;"))
    assert "kernel" in str(e).lower() or "commut" in str(e).lower()


def test_reserved_generator_name():
    _err(FREE.replace("generators A > B", "generators A > i").replace("B", "i"))


@given(st.text(max_size=40))
def test_parser_never_crashes(text):
    try:
        parse_bundle(text)
    except ParseError:
        pass
