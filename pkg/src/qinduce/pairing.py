"""Factorial-delta dual pairing between a quantum algebra and its quantum group."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

from . import hopfops
from .ncpoly import EMPTY, NcPoly, TensorNcPoly, Word, word_str
from .presentation import AlgebraPresentation, Bundle, PairingSpec
from .report import AxiomReport
from .scalar import ConfigurationError, ParamPoly

# <u u', f> = sum <u, f_(1)> <u', f_(2)>: first tensor leg pairs with first leg.
# "flipped" pairs the first leg with the second instead.
TENSOR_CONVENTION = "direct"


def exponents(w: Word, basis: Tuple[str, ...]) -> Tuple[int, ...]:
    """Exponent vector of a normal word read against an ordered basis."""
    rank = {g: j for j, g in enumerate(basis)}
    out = [0] * len(basis)
    last = -1
    for g in w:
        r = rank[g]
        if r < last:
            raise ConfigurationError(f"word {word_str(w)} is not an ordered monomial in {'*'.join(basis)}")
        last = r
        out[r] += 1
    return tuple(out)


@dataclass
class PairingEngine:
    spec: PairingSpec
    upres: AlgebraPresentation
    fpres: AlgebraPresentation
    convention: str = TENSOR_CONVENTION
    _cache: Dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.upres.name != self.spec.u_algebra or self.fpres.name != self.spec.f_algebra:
            raise ConfigurationError(f"pairing {self.spec.name!r} expects {self.spec.u_algebra}, {self.spec.f_algebra}")
        if self.upres.alphabet != self.fpres.alphabet:
            raise ConfigurationError("paired algebras use different truncation policies")
        if self.convention not in ("direct", "flipped"):
            raise ConfigurationError(f"unknown tensor convention {self.convention!r}")

    @classmethod
    def from_bundle(cls, bundle: Bundle, name: str | None = None, **kw) -> "PairingEngine":
        if name is None:
            if len(bundle.pairings) != 1:
                raise ConfigurationError("bundle has several pairings; name one")
            name = next(iter(bundle.pairings))
        spec = bundle.pairings[name]
        return cls(spec, bundle.algebras[spec.u_algebra], bundle.algebras[spec.f_algebra], **kw)

    @property
    def alphabet(self):
        return self.upres.alphabet

    def pair_words(self, u: Word, f: Word) -> int:
        """Pairing of two normal words: the product of factorials on a diagonal match."""
        key = (u, f)
        hit = self._cache.get(key)
        if hit is None:
            eu = exponents(u, self.spec.u_basis)
            ef = exponents(f, self.spec.f_basis)
            hit = math.prod(math.factorial(e) for e in eu) if eu == ef else 0
            self._cache[key] = hit
        return hit

    def _check_side(self, p: NcPoly, pres: AlgebraPresentation, side: str) -> None:
        stray = p.generators() - set(pres.generators)
        if stray:
            raise ConfigurationError(f"generators {sorted(stray)} do not belong to the {side} side ({pres.name})")

    def pair(self, u: NcPoly, f: NcPoly) -> ParamPoly:
        self._check_side(u, self.upres, "algebra")
        self._check_side(f, self.fpres, "function")
        u = self.upres.normal_order(u)
        f = self.fpres.normal_order(f)
        out = ParamPoly.zero(self.alphabet)
        for wu, cu in u.items():
            for wf, cf in f.items():
                v = self.pair_words(wu, wf)
                if v:
                    out = out + (cu * cf).scale(v)
        return out

    def pair_tensor(self, s: TensorNcPoly, t: TensorNcPoly) -> ParamPoly:
        """``<s, t>`` on tensor squares, legs matched per the tensor convention."""
        out = ParamPoly.zero(self.alphabet)
        for (u1, u2), cu in s.items():
            for (f1, f2), cf in t.items():
                if self.convention == "flipped":
                    f1, f2 = f2, f1
                v = self.pair_words(u1, f1)
                if v:
                    v *= self.pair_words(u2, f2)
                if v:
                    out = out + (cu * cf).scale(v)
        return out

    def parse_pair(self, left: str, right: str) -> ParamPoly:
        return self.pair(self.upres.parse(left), self.fpres.parse(right))


def pair(u: NcPoly, f: NcPoly, engine: PairingEngine) -> ParamPoly:
    return engine.pair(u, f)


def check_duality(engine: PairingEngine, max_degree: int = 3) -> AxiomReport:
    """The five duality identities on all normal monomials of degree <= d."""
    U, F = engine.upres, engine.fpres
    rep = AxiomReport(f"duality:{engine.spec.name}")
    uw = U.rewriter.normal_words(max_degree)
    fw = F.rewriter.normal_words(max_degree)
    one_u, one_f = EMPTY, EMPTY
    W = NcPoly.word

    for f in fw:
        rep.compare("unit-pairs-to-counit", f"1, {word_str(f)}",
                    engine.pair_words(one_u, f), hopfops.counit_word(f, F))
    for u in uw:
        rep.compare("pairs-with-unit-to-counit", f"{word_str(u)}, 1",
                    engine.pair_words(u, one_f), hopfops.counit_word(u, U))

    # <u u', f> = <u (x) u', Delta f>
    deltas = {f: hopfops.coproduct_word(f, F) for f in fw}
    for u in uw:
        for u2 in uw:
            prod = U.mul(W(U.alphabet, u), W(U.alphabet, u2))
            pure = TensorNcPoly.pure(W(U.alphabet, u), W(U.alphabet, u2))
            for f in fw:
                lhs = engine.pair(prod, W(F.alphabet, f))
                rhs = engine.pair_tensor(pure, deltas[f])
                rep.compare("product-dual-to-coproduct", f"{word_str(u)}, {word_str(u2)}, {word_str(f)}",
                            lhs.canonical(), rhs.canonical())
    # <u, f g> = <Delta u, f (x) g>
    udeltas = {u: hopfops.coproduct_word(u, U) for u in uw}
    for f in fw:
        for f2 in fw:
            prod = F.mul(W(F.alphabet, f), W(F.alphabet, f2))
            pure = TensorNcPoly.pure(W(F.alphabet, f), W(F.alphabet, f2))
            for u in uw:
                lhs = engine.pair(W(U.alphabet, u), prod)
                rhs = engine.pair_tensor(udeltas[u], pure)
                rep.compare("coproduct-dual-to-product", f"{word_str(u)}, {word_str(f)}, {word_str(f2)}",
                            lhs.canonical(), rhs.canonical())
    # <gamma u, f> = <u, gamma f>
    for u in uw:
        gu = hopfops.antipode_word(u, U)
        for f in fw:
            lhs = engine.pair(gu, W(F.alphabet, f))
            rhs = engine.pair(W(U.alphabet, u), hopfops.antipode_word(f, F))
            rep.compare("antipode-self-dual", f"{word_str(u)}, {word_str(f)}", lhs.canonical(), rhs.canonical())
    return rep
