"""Coproduct, counit and antipode extended from generator tables, and the
executable axiom suites built on them.

Results are cached per presentation in ``pres.cache``; every cached value is
normal-ordered and truncated under that presentation's policy.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, List, Tuple

from .ncpoly import EMPTY, NcPoly, TensorNcPoly, Word, tensor_mul, word_str
from .presentation import AlgebraPresentation, BicrossSpec
from .report import AxiomReport
from .scalar import ConfigurationError, ParamPoly, raw_mul

Tensor = TensorNcPoly


# --------------------------------------------------------------------------
# extended structure maps
# --------------------------------------------------------------------------


def _cache(pres: AlgebraPresentation, name: str) -> dict:
    return pres.cache.setdefault(name, {})


def counit_word(w: Word, pres: AlgebraPresentation) -> ParamPoly:
    c = _cache(pres, "counit")
    hit = c.get(w)
    if hit is None:
        raw = {pres.alphabet.one_key: 1}
        for g in w:
            raw = raw_mul(raw, pres.counit[g].raw, pres.alphabet.truncate)
        hit = ParamPoly(pres.alphabet, raw)
        c[w] = hit
    return hit


def counit(p: NcPoly, pres: AlgebraPresentation) -> ParamPoly:
    out = ParamPoly.zero(pres.alphabet)
    for w, coeff in p.items():
        out = out + coeff * counit_word(w, pres)
    return out


def coproduct_word(w: Word, pres: AlgebraPresentation) -> TensorNcPoly:
    c = _cache(pres, "coproduct")
    hit = c.get(w)
    if hit is not None:
        return hit
    if not w:
        hit = TensorNcPoly.one(pres.alphabet)
    else:
        try:
            last = pres.coproduct[w[-1]]
        except KeyError:
            raise ConfigurationError(f"no coproduct entry for {w[-1]!r} in {pres.name}") from None
        hit = tensor_mul(coproduct_word(w[:-1], pres), last, pres)
    c[w] = hit
    return hit


def coproduct(p: NcPoly, pres: AlgebraPresentation) -> TensorNcPoly:
    out = TensorNcPoly.zero(pres.alphabet)
    for w, coeff in p.items():
        out = out + coproduct_word(w, pres).scale(coeff)
    return out


def antipode_word(w: Word, pres: AlgebraPresentation) -> NcPoly:
    c = _cache(pres, "antipode")
    hit = c.get(w)
    if hit is not None:
        return hit
    if not w:
        hit = pres.one()
    else:
        try:
            first = pres.antipode[w[0]]
        except KeyError:
            raise ConfigurationError(f"no antipode entry for {w[0]!r} in {pres.name}") from None
        hit = pres.rewriter.mul(antipode_word(w[1:], pres), first)
    c[w] = hit
    return hit


def antipode(p: NcPoly, pres: AlgebraPresentation) -> NcPoly:
    out = NcPoly.zero(pres.alphabet)
    for w, coeff in p.items():
        out = out + antipode_word(w, pres).scale(coeff)
    return out


def _eps_leg(pres):
    return lambda w: NcPoly.scalar(counit_word(w, pres))


def _gamma_leg(pres):
    return lambda w: antipode_word(w, pres)


def _delta_leg(pres):
    return lambda w: coproduct_word(w, pres)


def counit_left(p: NcPoly, pres) -> NcPoly:
    """``(eps (x) id) Delta``"""
    return coproduct(p, pres).map_leg(0, _eps_leg(pres)).contract(pres)


def counit_right(p: NcPoly, pres) -> NcPoly:
    """``(id (x) eps) Delta``"""
    return coproduct(p, pres).map_leg(1, _eps_leg(pres)).contract(pres)


def antipode_left(p: NcPoly, pres) -> NcPoly:
    """``m (gamma (x) id) Delta``"""
    return coproduct(p, pres).map_leg(0, _gamma_leg(pres)).contract(pres)


def antipode_right(p: NcPoly, pres) -> NcPoly:
    """``m (id (x) gamma) Delta``"""
    return coproduct(p, pres).map_leg(1, _gamma_leg(pres)).contract(pres)


# --------------------------------------------------------------------------
# Hopf axioms
# --------------------------------------------------------------------------


def check_hopf_axioms(pres: AlgebraPresentation, max_degree: int = 3) -> AxiomReport:
    """Coassociativity, counit and antipode laws on every normal monomial of degree <= d."""
    rep = AxiomReport(f"hopf:{pres.name}")
    g = pres.generators
    delta = _delta_leg(pres)
    for w in pres.rewriter.normal_words(max_degree):
        x = NcPoly.word(pres.alphabet, w)
        mono = word_str(w)
        d = coproduct_word(w, pres)
        rep.compare(
            "coassociativity",
            mono,
            d.map_leg(0, delta).canonical(g),
            d.map_leg(1, delta).canonical(g),
        )
        rep.compare("counit-left", mono, counit_left(x, pres).canonical(g), x.canonical(g))
        rep.compare("counit-right", mono, counit_right(x, pres).canonical(g), x.canonical(g))
        unit = NcPoly.scalar(counit_word(w, pres)).canonical(g)
        rep.compare("antipode-left", mono, antipode_left(x, pres).canonical(g), unit)
        rep.compare("antipode-right", mono, antipode_right(x, pres).canonical(g), unit)
    return rep


# --------------------------------------------------------------------------
# bicrossproduct structure
# --------------------------------------------------------------------------


def _terms(t: TensorNcPoly):
    for ws, c in t.items():
        yield ws, c


class BicrossOps:
    """Sector Hopf structures, action and coaction of a split ``K (x) L``.

    Sector structure maps are read off the presentation: ``Delta_S`` is the
    presentation coproduct with every factor projected to ``S`` (the other
    sector collapsed by its counit), and ``gamma_S`` is solved from the
    antipode law.  The action is extended from the table by the module
    algebra law; the coaction on products is extended by the comodule
    product law and compared with the projection of the presentation
    coproduct.
    """

    def __init__(self, spec: BicrossSpec, pres: AlgebraPresentation):
        if spec.algebra != pres.name:
            raise ConfigurationError(f"split {spec.name!r} is on {spec.algebra!r}, not {pres.name!r}")
        self.spec = spec
        self.pres = pres
        self.A = pres.alphabet
        self.sectors = {"K": set(spec.sector_k), "L": set(spec.sector_l)}
        self.right_left = spec.side == "right-left"
        self._delta: Dict = {}
        self._gamma: Dict = {}
        self._act: Dict = {}
        self._coact: Dict = {}
        self._gamma_pending: set = set()

    # basic helpers --------------------------------------------------------

    def one(self) -> NcPoly:
        return NcPoly.one(self.A)

    def word(self, w: Iterable[str]) -> NcPoly:
        return NcPoly.word(self.A, tuple(w))

    def mul(self, *ps: NcPoly) -> NcPoly:
        return self.pres.mul(*ps)

    def t2(self, c: ParamPoly, a: NcPoly, b: NcPoly) -> TensorNcPoly:
        return TensorNcPoly.pure(a, b).scale(c)

    def split(self, w: Word) -> Tuple[Word, Word]:
        j = 0
        while j < len(w) and w[j] in self.sectors["K"]:
            j += 1
        if any(g in self.sectors["K"] for g in w[j:]):
            raise ConfigurationError(f"word {word_str(w)} does not factor as K-part times L-part")
        return w[:j], w[j:]

    def proj(self, p: NcPoly, sector: str) -> NcPoly:
        """Keep the ``sector`` factor of each normal word, counit on the other."""
        out = NcPoly.zero(self.A)
        for w, c in p.items():
            k, l = self.split(w)
            keep, drop = (k, l) if sector == "K" else (l, k)
            e = counit_word(drop, self.pres)
            if e:
                out = out + self.word(keep).scale(c * e)
        return out

    def eps(self, p: NcPoly) -> ParamPoly:
        return counit(p, self.pres)

    def words(self, sector: str, max_degree: int) -> List[Word]:
        gens = self.sectors[sector]
        return [w for w in self.pres.rewriter.normal_words(max_degree) if all(g in gens for g in w)]

    # sector Hopf structure ------------------------------------------------

    def delta_word(self, w: Word, sector: str) -> TensorNcPoly:
        key = (w, sector)
        hit = self._delta.get(key)
        if hit is None:
            d = coproduct_word(w, self.pres)
            hit = TensorNcPoly.zero(self.A)
            for (w1, w2), c in _terms(d):
                a = self.proj(self.word(w1), sector)
                b = self.proj(self.word(w2), sector)
                if a and b:
                    hit = hit + self.t2(c, a, b)
            self._delta[key] = hit
        return hit

    def delta(self, p: NcPoly, sector: str) -> TensorNcPoly:
        out = TensorNcPoly.zero(self.A)
        for w, c in p.items():
            out = out + self.delta_word(w, sector).scale(c)
        return out

    def gamma_gen(self, g: str, sector: str) -> NcPoly:
        key = ((g,), sector)
        hit = self._gamma.get(key)
        if hit is not None:
            return hit
        if key in self._gamma_pending:
            raise ConfigurationError(f"sector antipode of {g!r} is defined circularly")
        self._gamma_pending.add(key)
        try:
            d = self.delta_word((g,), sector)
            lead = d.coefficient_of((g,), EMPTY)
            if lead != 1:
                raise ConfigurationError(f"sector coproduct of {g!r} lacks the term {g} (x) 1")
            rest = NcPoly.scalar(self.pres.counit[g])
            for (w1, w2), c in _terms(d):
                if (w1, w2) == ((g,), EMPTY):
                    continue
                rest = rest - self.mul(self.gamma_word(w1, sector), self.word(w2)).scale(c)
            self._gamma[key] = rest
            return rest
        finally:
            self._gamma_pending.discard(key)

    def gamma_word(self, w: Word, sector: str) -> NcPoly:
        if not w:
            return self.one()
        if len(w) == 1:
            return self.gamma_gen(w[0], sector)
        key = (w, sector)
        hit = self._gamma.get(key)
        if hit is None:
            hit = self.mul(self.gamma_word(w[1:], sector), self.gamma_gen(w[0], sector))
            self._gamma[key] = hit
        return hit

    def gamma(self, p: NcPoly, sector: str) -> NcPoly:
        out = NcPoly.zero(self.A)
        for w, c in p.items():
            out = out + self.gamma_word(w, sector).scale(c)
        return out

    # action ---------------------------------------------------------------

    @property
    def module_sector(self) -> str:
        return "L" if self.right_left else "K"

    @property
    def acting_sector(self) -> str:
        return "K" if self.right_left else "L"

    def table_action(self, m: str, a: str) -> NcPoly:
        try:
            return self.spec.action[(m, a)]
        except KeyError:
            raise ConfigurationError(f"action table of {self.spec.name!r} has no entry for ({m}, {a})") from None

    def derived_action(self, m: str, a: str) -> NcPoly:
        """Action of a generator read off the presentation's cross relation."""
        prod = self.mul(self.word((m,)), self.word((a,))) if self.right_left else self.mul(
            self.word((a,)), self.word((m,))
        )
        return self.proj(prod, self.module_sector)

    def act_word(self, m: Word, a: Word) -> NcPoly:
        """``m <| a`` (right-left) or ``a |> m`` (left-right) on words."""
        key = (m, a)
        hit = self._act.get(key)
        if hit is not None:
            return hit
        if not a:
            hit = self.word(m)
        elif len(a) > 1:
            # right action applies letters left to right, left action right to left
            if self.right_left:
                hit = self.act(self.act_word(m, a[:1]), a[1:])
            else:
                hit = self.act(self.act_word(m, a[-1:]), a[:-1])
        elif not m:
            hit = NcPoly.scalar(counit_word(a, self.pres))
        elif len(m) == 1:
            hit = self.table_action(m[0], a[0])
        else:
            hit = NcPoly.zero(self.A)
            for (h1, h2), c in _terms(self.delta_word(a, self.acting_sector)):
                hit = hit + self.mul(self.act_word(m[:1], h1), self.act_word(m[1:], h2)).scale(c)
        self._act[key] = hit
        return hit

    def act(self, m: NcPoly, a) -> NcPoly:
        a_items = [(tuple(a), ParamPoly.const(self.A, 1))] if isinstance(a, tuple) else list(a.items())
        out = NcPoly.zero(self.A)
        for wm, cm in m.items():
            for wa, ca in a_items:
                out = out + self.act_word(wm, wa).scale(cm * ca)
        return out

    # coaction -------------------------------------------------------------

    @property
    def comodule_sector(self) -> str:
        return self.acting_sector

    def derived_coaction_word(self, w: Word) -> TensorNcPoly:
        """Coaction projected from the presentation coproduct."""
        key = ("derived", w)
        hit = self._coact.get(key)
        if hit is None:
            # both sides land in L (x) K
            first, second = "L", "K"
            hit = TensorNcPoly.zero(self.A)
            for (w1, w2), c in _terms(coproduct_word(w, self.pres)):
                a = self.proj(self.word(w1), first)
                b = self.proj(self.word(w2), second)
                if a and b:
                    hit = hit + self.t2(c, a, b)
            self._coact[key] = hit
        return hit

    def coaction_word(self, w: Word) -> TensorNcPoly:
        """Coaction from the table, extended to products by the comodule product law."""
        key = ("table", w)
        hit = self._coact.get(key)
        if hit is not None:
            return hit
        if not w:
            hit = TensorNcPoly.one(self.A)
        elif len(w) == 1:
            try:
                hit = self.spec.coaction[w[0]]
            except KeyError:
                raise ConfigurationError(f"coaction table of {self.spec.name!r} has no entry for {w[0]}") from None
        else:
            hit = self.coaction_product(w[:1], w[1:], self.coaction_word)
        self._coact[key] = hit
        return hit

    def coaction_product(self, w: Word, w2: Word, beta: Callable[[Word], TensorNcPoly]) -> TensorNcPoly:
        """Coaction of the product ``w*w2`` in terms of the coactions of the factors."""
        out = TensorNcPoly.zero(self.A)
        if self.right_left:
            # (kk')^ = (k^(1) <| k'_(1)) k'_(2)^(1) (x) k^(2) k'_(2)^(2)
            for (a1, a2), ca in _terms(beta(w)):
                for (k1, k2), ck in _terms(self.delta_word(w2, "K")):
                    for (b1, b2), cb in _terms(beta(k2)):
                        left = self.mul(self.act_word(a1, k1), self.word(b1))
                        right = self.mul(self.word(a2), self.word(b2))
                        out = out + self.t2(ca * ck * cb, left, right)
        else:
            # (ll')^ = l_(1)^(1) l'^(1) (x) l_(1)^(2) (l_(2) |> l'^(2))
            for (l1, l2), cl in _terms(self.delta_word(w, "L")):
                for (a1, a2), ca in _terms(beta(l1)):
                    for (b1, b2), cb in _terms(beta(w2)):
                        left = self.mul(self.word(a1), self.word(b1))
                        right = self.mul(self.word(a2), self.act_word(b2, l2))
                        out = out + self.t2(cl * ca * cb, left, right)
        return out

    # semidirect structure -------------------------------------------------

    def semidirect_product(self, m: Word, a: Word) -> NcPoly:
        """Cross product ``l*k`` (right-left) or ``lambda*kappa`` (left-right)."""
        out = NcPoly.zero(self.A)
        if self.right_left:
            for (k1, k2), c in _terms(self.delta_word(a, "K")):
                out = out + self.mul(self.word(k1), self.act_word(m, k2)).scale(c)
        else:
            for (l1, l2), c in _terms(self.delta_word(a, "L")):
                out = out + self.mul(self.act_word(m, l1), self.word(l2)).scale(c)
        return out

    def semidirect_coproduct(self, w: Word) -> TensorNcPoly:
        k, l = self.split(w)
        out = TensorNcPoly.zero(self.A)
        beta = self.coaction_word
        if self.right_left:
            # Delta(kl) = k_(1) k_(2)^(1) l_(1) (x) k_(2)^(2) l_(2)
            for (k1, k2), ck in _terms(self.delta_word(k, "K")):
                for (b1, b2), cb in _terms(beta(k2)):
                    for (l1, l2), cl in _terms(self.delta_word(l, "L")):
                        left = self.mul(self.word(k1), self.word(b1), self.word(l1))
                        right = self.mul(self.word(b2), self.word(l2))
                        out = out + self.t2(ck * cb * cl, left, right)
        else:
            # Delta(kappa lambda) = kappa_(1) lambda_(1)^(1) (x) kappa_(2) lambda_(1)^(2) lambda_(2)
            for (k1, k2), ck in _terms(self.delta_word(k, "K")):
                for (l1, l2), cl in _terms(self.delta_word(l, "L")):
                    for (b1, b2), cb in _terms(beta(l1)):
                        left = self.mul(self.word(k1), self.word(b1))
                        right = self.mul(self.word(k2), self.word(b2), self.word(l2))
                        out = out + self.t2(ck * cl * cb, left, right)
        return out

    def semidirect_antipode(self, w: Word) -> NcPoly:
        k, l = self.split(w)
        out = NcPoly.zero(self.A)
        if self.right_left:
            # gamma(k l) = gamma_L(k^(1) l) gamma_K(k^(2))
            for (b1, b2), c in _terms(self.coaction_word(k)):
                inner = self.mul(self.word(b1), self.word(l))
                out = out + self.mul(self.gamma(inner, "L"), self.gamma_word(b2, "K")).scale(c)
        else:
            # gamma(kappa lambda) = gamma_L(lambda^(1)) gamma_K(kappa lambda^(2))
            for (b1, b2), c in _terms(self.coaction_word(l)):
                inner = self.mul(self.word(k), self.word(b2))
                out = out + self.mul(self.gamma_word(b1, "L"), self.gamma(inner, "K")).scale(c)
        return out


def _t3(c, a, b, d) -> TensorNcPoly:
    return TensorNcPoly.pure(a, b, d).scale(c)


def check_bicross_conditions(
    spec: BicrossSpec, pres: AlgebraPresentation, max_degree: int = 3
) -> AxiomReport:
    """Compatibility conditions, module/comodule axioms and reconstruction
    checks for one split, on sector words of degree <= ``max_degree``."""
    ops = BicrossOps(spec, pres)
    rep = AxiomReport(f"bicross:{spec.name}")
    g = pres.generators
    fmt = lambda x: x.canonical(g)  # noqa: E731
    W = ops.word
    mod, acting = ops.module_sector, ops.acting_sector
    mod_words = ops.words(mod, max_degree)
    act_words = ops.words(acting, max_degree)
    d = max_degree

    def small(*ws):
        return sum(len(w) for w in ws) <= d + 1

    # cross pairs must rewrite, so every normal word factors
    for kg in spec.sector_k:
        for lg in spec.sector_l:
            rep.add("cross-relation-declared", f"[{lg}, {kg}]", (lg, kg) in pres.relations)

    # table versus the presentation ------------------------------------
    for (m, a), v in spec.action.items():
        mono = f"{m} <| {a}" if ops.right_left else f"{a} |> {m}"
        rep.compare("action-table-matches-relations", mono, fmt(v), fmt(ops.derived_action(m, a)))
    for m in sorted(ops.sectors[mod]):
        for a in sorted(ops.sectors[acting]):
            mono = f"{m} <| {a}" if ops.right_left else f"{a} |> {m}"
            rep.add("action-table-complete", mono, (m, a) in spec.action)
    for w in act_words:
        mono = word_str(w)
        if len(w) == 1 and w[0] not in spec.coaction:
            rep.add("coaction-table-complete", mono, False)
            continue
        rep.compare("coaction-matches-coproduct", mono, fmt(ops.coaction_word(w)), fmt(ops.derived_coaction_word(w)))
    if rep.failures:
        return rep

    beta = ops.coaction_word
    # the five compatibility conditions ---------------------------------
    for a in act_words:
        for m in mod_words:
            if not small(a, m):
                continue
            mono = f"{word_str(m)}, {word_str(a)}"
            act = ops.act_word(m, a)
            rep.compare(
                "c1-counit-of-action",
                mono,
                ops.eps(act),
                counit_word(m, ops.pres) * counit_word(a, ops.pres),
            )
            rhs = TensorNcPoly.zero(ops.A)
            if ops.right_left:
                for (l1, l2), cl in _terms(ops.delta_word(m, "L")):
                    for (k1, k2), ck in _terms(ops.delta_word(a, "K")):
                        for (b1, b2), cb in _terms(beta(k2)):
                            rhs = rhs + ops.t2(
                                cl * ck * cb, ops.mul(ops.act_word(l1, k1), W(b1)), ops.act_word(l2, b2)
                            )
                rep.compare("c2-coproduct-of-action", mono, fmt(ops.delta(act, "L")), fmt(rhs))
            else:
                for (l1, l2), cl in _terms(ops.delta_word(a, "L")):
                    for (b1, b2), cb in _terms(beta(l1)):
                        for (k1, k2), ck in _terms(ops.delta_word(m, "K")):
                            rhs = rhs + ops.t2(
                                cl * cb * ck, ops.act_word(k1, b1), ops.mul(W(b2), ops.act_word(k2, l2))
                            )
                rep.compare("c2-coproduct-of-action", mono, fmt(ops.delta(act, "K")), fmt(rhs))
            # condition 5
            lhs = TensorNcPoly.zero(ops.A)
            rhs = TensorNcPoly.zero(ops.A)
            if ops.right_left:
                for (k1, k2), ck in _terms(ops.delta_word(a, "K")):
                    for (b1, b2), cb in _terms(beta(k1)):
                        lhs = lhs + ops.t2(ck * cb, ops.mul(W(b1), ops.act_word(m, k2)), W(b2))
                    for (b1, b2), cb in _terms(beta(k2)):
                        rhs = rhs + ops.t2(ck * cb, ops.mul(ops.act_word(m, k1), W(b1)), W(b2))
            else:
                for (l1, l2), cl in _terms(ops.delta_word(a, "L")):
                    for (b1, b2), cb in _terms(beta(l2)):
                        lhs = lhs + ops.t2(cl * cb, W(b1), ops.mul(ops.act_word(m, l1), W(b2)))
                    for (b1, b2), cb in _terms(beta(l1)):
                        rhs = rhs + ops.t2(cl * cb, W(b1), ops.mul(W(b2), ops.act_word(m, l2)))
            rep.compare("c5-action-coaction", mono, fmt(lhs), fmt(rhs))
    rep.compare("c3-coaction-of-unit", "1", fmt(beta(EMPTY)), fmt(TensorNcPoly.one(ops.A)))
    rep.compare("c3-coaction-of-unit-derived", "1", fmt(ops.derived_coaction_word(EMPTY)), fmt(TensorNcPoly.one(ops.A)))
    for w in act_words:
        for w2 in act_words:
            if not w or not w2 or not small(w, w2):
                continue
            prod = ops.mul(W(w), W(w2))
            lhs = TensorNcPoly.zero(ops.A)
            for wp, c in prod.items():
                lhs = lhs + ops.derived_coaction_word(wp).scale(c)
            rhs = ops.coaction_product(w, w2, ops.derived_coaction_word)
            rep.compare("c4-coaction-of-product", f"{word_str(w)}, {word_str(w2)}", fmt(lhs), fmt(rhs))

    # module algebra ------------------------------------------------------
    for a in act_words:
        rep.compare("module-unit", word_str(a), fmt(ops.act_word(EMPTY, a)), fmt(NcPoly.scalar(counit_word(a, pres))))
    for m in mod_words:
        rep.compare("module-identity", word_str(m), fmt(ops.act_word(m, EMPTY)), fmt(W(m)))
        for a in act_words:
            for a2 in act_words:
                if not a or not a2 or not small(m, a, a2):
                    continue
                mono = f"{word_str(m)}, {word_str(a)}, {word_str(a2)}"
                if ops.right_left:
                    lhs = ops.act(ops.act_word(m, a), a2)
                    prod = ops.mul(W(a), W(a2))
                else:
                    lhs = ops.act(ops.act_word(m, a2), a)
                    prod = ops.mul(W(a), W(a2))
                rep.compare("module-composition", mono, fmt(lhs), fmt(ops.act(W(m), prod)))
    for m in mod_words:
        for m2 in mod_words:
            if not m or not m2:
                continue
            for a in act_words:
                if not a or not small(m, m2, a):
                    continue
                mono = f"{word_str(m)}, {word_str(m2)}, {word_str(a)}"
                prod = ops.mul(W(m), W(m2))
                rhs = NcPoly.zero(ops.A)
                for (h1, h2), c in _terms(ops.delta_word(a, acting)):
                    rhs = rhs + ops.mul(ops.act_word(m, h1), ops.act_word(m2, h2)).scale(c)
                rep.compare("module-algebra", mono, fmt(ops.act(prod, a)), fmt(rhs))

    # comodule coalgebra --------------------------------------------------
    for w in act_words:
        mono = word_str(w)
        b = beta(w)
        if ops.right_left:
            # beta: K -> L (x) K
            lhs = TensorNcPoly.zero(ops.A)
            rhs = TensorNcPoly.zero(ops.A)
            for (b1, b2), c in _terms(b):
                for (x1, x2), cx in _terms(ops.delta_word(b1, "L")):
                    lhs = lhs + _t3(c * cx, W(x1), W(x2), W(b2))
                for (y1, y2), cy in _terms(beta(b2)):
                    rhs = rhs + _t3(c * cy, W(b1), W(y1), W(y2))
            rep.compare("comodule-coassociativity", mono, fmt(lhs), fmt(rhs))
            counit_side = NcPoly.zero(ops.A)
            for (b1, b2), c in _terms(b):
                counit_side = counit_side + W(b2).scale(c * counit_word(b1, pres))
            rep.compare("comodule-counit", mono, fmt(counit_side), fmt(W(w)))
            lhs = TensorNcPoly.zero(ops.A)
            for (b1, b2), c in _terms(b):
                for (x1, x2), cx in _terms(ops.delta_word(b2, "K")):
                    lhs = lhs + _t3(c * cx, W(b1), W(x1), W(x2))
            rhs = TensorNcPoly.zero(ops.A)
            for (c1, c2), cc in _terms(ops.delta_word(w, "K")):
                for (p1, p2), cp in _terms(beta(c1)):
                    for (q1, q2), cq in _terms(beta(c2)):
                        rhs = rhs + _t3(cc * cp * cq, ops.mul(W(p1), W(q1)), W(p2), W(q2))
            rep.compare("comodule-coalgebra", mono, fmt(lhs), fmt(rhs))
            lhs = NcPoly.zero(ops.A)
            for (b1, b2), c in _terms(b):
                lhs = lhs + W(b1).scale(c * counit_word(b2, pres))
            rep.compare("comodule-coalgebra-counit", mono, fmt(lhs), fmt(NcPoly.scalar(counit_word(w, pres))))
        else:
            # coaction: L -> L (x) K
            lhs = TensorNcPoly.zero(ops.A)
            rhs = TensorNcPoly.zero(ops.A)
            for (b1, b2), c in _terms(b):
                for (y1, y2), cy in _terms(beta(b1)):
                    lhs = lhs + _t3(c * cy, W(y1), W(y2), W(b2))
                for (x1, x2), cx in _terms(ops.delta_word(b2, "K")):
                    rhs = rhs + _t3(c * cx, W(b1), W(x1), W(x2))
            rep.compare("comodule-coassociativity", mono, fmt(lhs), fmt(rhs))
            counit_side = NcPoly.zero(ops.A)
            for (b1, b2), c in _terms(b):
                counit_side = counit_side + W(b1).scale(c * counit_word(b2, pres))
            rep.compare("comodule-counit", mono, fmt(counit_side), fmt(W(w)))
            lhs = TensorNcPoly.zero(ops.A)
            for (b1, b2), c in _terms(b):
                for (x1, x2), cx in _terms(ops.delta_word(b1, "L")):
                    lhs = lhs + _t3(c * cx, W(x1), W(x2), W(b2))
            rhs = TensorNcPoly.zero(ops.A)
            for (c1, c2), cc in _terms(ops.delta_word(w, "L")):
                for (p1, p2), cp in _terms(beta(c1)):
                    for (q1, q2), cq in _terms(beta(c2)):
                        rhs = rhs + _t3(cc * cp * cq, W(p1), W(q1), ops.mul(W(p2), W(q2)))
            rep.compare("comodule-coalgebra", mono, fmt(lhs), fmt(rhs))
            lhs = NcPoly.zero(ops.A)
            for (b1, b2), c in _terms(b):
                lhs = lhs + W(b2).scale(c * counit_word(b1, pres))
            rep.compare("comodule-coalgebra-counit", mono, fmt(lhs), fmt(NcPoly.scalar(counit_word(w, pres))))

    # reconstruction -------------------------------------------------------
    for (hi, lo), rhs in pres.relations.items():
        if hi in ops.sectors["L"] and lo in ops.sectors["K"]:
            mono = f"[{hi}, {lo}]"
            m, a = ((hi,), (lo,)) if ops.right_left else ((lo,), (hi,))
            cross = ops.semidirect_product(m, a) - ops.mul(W((lo,)), W((hi,)))
            rep.compare("reconstruct-cross-relation", mono, fmt(cross), fmt(rhs))
    for a in act_words:
        for m in mod_words:
            if not a or not m or not small(a, m):
                continue
            mono = f"{word_str(m)}, {word_str(a)}"
            direct = ops.mul(W(m), W(a)) if ops.right_left else ops.mul(W(a), W(m))
            rep.compare("reconstruct-product", mono, fmt(ops.semidirect_product(m, a)), fmt(direct))
    for w in pres.rewriter.normal_words(d):
        mono = word_str(w)
        rep.compare("reconstruct-coproduct", mono, fmt(ops.semidirect_coproduct(w)), fmt(coproduct_word(w, pres)))
        rep.compare("reconstruct-antipode", mono, fmt(ops.semidirect_antipode(w)), fmt(antipode_word(w, pres)))
    return rep


def check_hopf_all(presentations: Iterable[AlgebraPresentation], max_degree: int = 3) -> List[AxiomReport]:
    return [check_hopf_axioms(p, max_degree) for p in presentations]
