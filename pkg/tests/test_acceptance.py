"""Acceptance criteria, one test each.

Every test prints ``AC<n> PASS|FAIL <seconds>s <label>`` to the terminal, so
``pytest -v`` output (or ``python tests/test_acceptance.py``) carries the
verdict lines.  Timings include bundle parsing; caches start cold because each
criterion parses its own bundle.
"""

import math
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from qinduce import hopfops, induce
from qinduce.induce import CORRECTED_SIGN, PRINTED_SIGN, InducedVector, action_table
from qinduce.ncpoly import NcPoly
from qinduce.pairing import PairingEngine, check_duality
from qinduce.presentation import parse_bundle, serialize_bundle
from qinduce.scalar import I, ParamPoly

_capsys = None


@pytest.fixture(autouse=True)
def _grab(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def _say(line):
    if _capsys is None:
        print(line)
    else:
        with _capsys.disabled():
            print("\n" + line)


@contextmanager
def criterion(n, label, limit):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        within = limit is None or dt < limit
        verdict = "PASS" if ok and within else "FAIL"
        lim = f" (limit {limit}s)" if limit else ""
        _say(f"AC{n} {verdict} {dt:.2f}s{lim} {label}")
    assert limit is None or dt < limit, f"AC{n} took {dt:.1f}s, limit {limit}s"


def fresh(tag, truncate=4):
    return parse_bundle(induce.shipped_bundle_text(tag), truncate)


def W(A, *letters, c=None):
    return NcPoly.word(A, letters, c)


def dp(A, k, n):
    return ParamPoly.param(A, A.deform, k).scale(n)


def test_ac01_normal_ordering_lemmas():
    with criterion(1, "normal ordering of P K^q and H K^q, q <= 5", 5):
        U = fresh("standard").algebras["U_omega"]
        R = fresh("nonstandard").algebras["U_rho"]
        A, B = U.alphabet, R.alphabet
        for q in range(6):
            Ks = ["K"] * q
            want = NcPoly.zero(A)
            for k in range(q + 1):
                want = want + W(A, *["K"] * (q - k), *["P"] * (k + 1), c=dp(A, k, Fraction(math.factorial(q), math.factorial(q - k))))
            assert U.normal_order(W(A, "P", *Ks)) == want
            want = W(A, *Ks, "H")
            for k in range(q):
                c = dp(A, k, Fraction(math.factorial(q), (k + 1) * math.factorial(q - k - 1)))
                want = want - W(A, *["K"] * (q - k - 1), *["P"] * (k + 1), c=c)
            assert U.normal_order(W(A, "H", *Ks)) == want
            # (1/(4 rho))(1 - e^{-4 rho P}) = sum_{k>=1} (-1)^{k+1} (4 rho)^{k-1} P^k / k!
            want = W(B, *Ks, "H")
            if q:
                for k in range(1, B.truncate + 2):
                    c = dp(B, k - 1, Fraction((-1) ** (k + 1) * 4 ** (k - 1) * q, math.factorial(k)))
                    want = want - W(B, *["K"] * (q - 1), *["P"] * k, c=c)
            assert R.normal_order(W(B, "H", *Ks)) == want


def test_ac02_hopf_axioms():
    with criterion(2, "Hopf axioms U_omega, F_omega, U_rho, F_rho at d=3, N=4", 60):
        algs = {**fresh("standard").algebras, **fresh("nonstandard").algebras}
        assert sorted(algs) == ["F_omega", "F_rho", "U_omega", "U_rho"]
        for pres in algs.values():
            rep = hopfops.check_hopf_axioms(pres, 3)
            assert rep.ok, rep.text()
            assert len(rep.results) > 0


def test_ac03_bicrossproduct_conditions():
    with criterion(3, "five compatibility conditions and reconstruction on four splits, d=3", 30):
        n = 0
        for tag in ("standard", "nonstandard"):
            b = fresh(tag)
            for spec in b.bicross.values():
                rep = hopfops.check_bicross_conditions(spec, b.algebras[spec.algebra], 3)
                assert rep.ok, rep.text()
                checks = {r.check for r in rep.results}
                for c in ("c1", "c2", "c3", "c4", "c5", "reconstruct-cross-relation", "reconstruct-coproduct"):
                    assert any(x.startswith(c) for x in checks), (spec.name, c)
                n += 1
        assert n == 4


def test_ac04_duality():
    with criterion(4, "duality identities for both pairings at d=3", 60):
        for tag in ("standard", "nonstandard"):
            rep = check_duality(PairingEngine.from_bundle(fresh(tag)), 3)
            assert rep.ok, rep.text()
            assert len({r.check for r in rep.results}) == 5


def test_ac05_standard_induction():
    with criterion(5, "standard pipeline equals the closed forms, m <= 4, D=8, N=6", 60):
        model = induce.model_from_bundle(fresh("standard", 6), "standard")
        rep = induce.verify_induction(model, 8, 4)
        assert rep.ok, rep.text()
        assert len(rep.results) == 15 and not rep.warnings


def test_ac06_nonstandard_induction():
    with criterion(6, "nonstandard pipeline equals the sign-corrected closed form; printed sign flagged", 60):
        model = induce.model_from_bundle(fresh("nonstandard", 6), "nonstandard")
        rep = induce.verify_induction(model, 8, 4, CORRECTED_SIGN)
        assert rep.ok, rep.text()
        assert any(r.check == "printed-sign-deviation" for r in rep.warnings)
        assert not induce.verify_induction(model, 8, 4, PRINTED_SIGN).ok
        assert induce.commutator_check(model, CORRECTED_SIGN, 8, 4).ok
        assert not induce.commutator_check(model, PRINTED_SIGN, 8, 4).ok


def test_ac07_classical_limit():
    with criterion(7, "omega -> 0 of the standard table: K = d/dv, P = ia, H = -iav at b=0", None):
        model = induce.model_from_bundle(fresh("standard"), "standard")
        A, D = model.alphabet, 8
        ia = ParamPoly.param(A, "a") * I
        table = action_table(model, D, 4).substitute("omega", 0).substitute("b", 0)
        for m in range(5):
            K = InducedVector.from_list(A, {m - 1: ParamPoly.const(A, m)} if m else {}, D)
            P = InducedVector.from_list(A, {m: ia}, D)
            H = InducedVector.from_list(A, {m + 1: -ia}, D)
            assert table.entries[("K", m)] == K
            assert table.entries[("P", m)] == P
            assert table.entries[("H", m)] == H
        assert induce.classical_limit(model, D, 4).ok


def test_ac08_module_axioms():
    with criterion(8, "f -| (XY) = (f -| X) -| Y, all pairs, both models, m <= 4, D=8", None):
        for tag in ("standard", "nonstandard"):
            model = induce.model_from_bundle(fresh(tag), tag)
            rep = induce.check_module_axioms(model, 8, 4)
            assert rep.ok, rep.text()
            laws = {r.monomial for r in rep.results if r.check == "right-module-law"}
            for m in range(5):
                for x in model.generators:
                    for y in model.generators:
                        assert f"v^{m} -| {x}*{y}" in laws


def test_ac09_invariant_subspace():
    with criterion(9, "span{1, v_0^n, v_1^n | n <= 3} invariant under K, P, exp(omega H), D=8", 60):
        rep = induce.check_invariant_subspace(D=8, n_max=3, truncate=4)
        assert rep.ok, rep.text()
        members = [r for r in rep.results if r.check == "member-of-span"]
        assert len(members) == 3 * 7
        assert any(r.check == "proper-subspace" and r.status == "PASS" for r in rep.results)


def test_ac10_ladder_and_phase():
    with criterion(10, "nonstandard ladder coefficients nonzero; (a,b) minus (a,0) is ib on H only", None):
        ns = induce.model_from_bundle(fresh("nonstandard"), "nonstandard")
        rep = induce.check_ladder_nonstandard(ns, 8, 3)
        assert rep.ok, rep.text()
        A = ns.alphabet
        for n in range(4):
            up = induce.induced_action(NcPoly.gen(A, "H"), InducedVector.basis(A, n, 8), ns, 8)[n + 1]
            assert not up.is_zero()
            assert up.substitute("rho", 0) == -(ParamPoly.param(A, "a") * I)
        for tag in ("standard", "nonstandard"):
            model = induce.model_from_bundle(fresh(tag), tag)
            A = model.alphabet
            ib = ParamPoly.param(A, "b") * I
            full = action_table(model, 8, 3)
            phase = action_table(model, 8, 3, model.character.substitute("b", 0))
            for (g, m), v in full.entries.items():
                diff = v - phase.entries[(g, m)]
                want = InducedVector.basis(A, m, 8).scale(ib) if g == "H" else InducedVector.zero(A, 8)
                assert diff == want, (tag, g, m)
            assert induce.check_pseudoequivalence(model, 8, 3).ok


MUTATIONS = {
    "wrong relation": ("[P, K] = omega*P^2;", "[P, K] = omega*P^2 + 1;"),
    "wrong coaction sign": ("x = x (x) 1 - t (x) v;\n    t = t (x) 1;", "x = x (x) 1 + t (x) v;\n    t = t (x) 1;"),
    "wrong antipode": ("P = -exp(2*omega*H)*P;", "P = -P;"),
}


def _first_witness(b):
    from qinduce.cli import check_reports

    for rep in check_reports(b, "all", 2):
        bad = rep.first_failure()
        if bad is not None:
            return bad
    return None


def test_ac11_round_trip_and_mutations():
    with criterion(11, "parse/serialize round trip; mutated bundles fail with a witness", None):
        for tag in ("standard", "nonstandard"):
            text = induce.shipped_bundle_text(tag)
            b = parse_bundle(text)
            s = serialize_bundle(b)
            assert parse_bundle(s) == b
            assert serialize_bundle(parse_bundle(s)) == s
        std = induce.shipped_bundle_text("standard")
        assert _first_witness(parse_bundle(std)) is None
        for name, (old, new) in MUTATIONS.items():
            assert old in std, name
            bad = _first_witness(parse_bundle(std.replace(old, new)))
            assert bad is not None, name
            assert bad.monomial and bad.lhs is not None and bad.rhs is not None and bad.lhs != bad.rhs, name
            _say(f"    {name}: {bad.suite}/{bad.check} @ {bad.monomial}: {bad.lhs} != {bad.rhs}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
