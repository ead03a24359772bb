"""Free associative algebra over :class:`ParamPoly`, with PBW normal ordering.

A word is a tuple of generator names.  An :class:`NcPoly` maps words to
raw scalar dicts (see :mod:`qinduce.scalar`); a :class:`TensorNcPoly` maps
tuples of words (one per tensor leg) to raw scalar dicts.  Both are treated
as immutable once built.

Normal ordering is done by :class:`RewriteSystem`: the leftmost adjacent
pair ``hi lo`` with ``rank(hi) > rank(lo)`` that has a rule is replaced by
``lo hi + [hi, lo]``, repeated to a fixpoint.  Pairs without a rule are
left alone, so a presentation with no relations rewrites nothing.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .scalar import (
    Alphabet,
    ConfigurationError,
    NonTruncatableError,
    ParamPoly,
    Raw,
    join_signed,
    raw_add_into,
    raw_addmul_into,
    raw_mul,
    raw_truncate,
)

Word = Tuple[str, ...]
EMPTY: Word = ()

DEFAULT_STEP_BUDGET = 10**6


class NonTerminationError(RuntimeError):
    def __init__(self, word: Word, steps: int):
        super().__init__(f"normal ordering exceeded {steps} rewrite steps at word {word_str(word)}")
        self.word = word
        self.steps = steps


def _add_term(dst: Dict, key, coeff: Raw, scale=1) -> None:
    cur = dst.get(key)
    if cur is None:
        cur = {}
        dst[key] = cur
    raw_add_into(cur, coeff, scale)
    if not cur:
        del dst[key]


def _addmul_term(dst: Dict, key, x: Raw, y: Raw, trunc: int, scale=1) -> None:
    cur = dst.get(key)
    if cur is None:
        cur = {}
        dst[key] = cur
    raw_addmul_into(cur, x, y, trunc, scale)
    if not cur:
        del dst[key]


# --------------------------------------------------------------------------
# NcPoly
# --------------------------------------------------------------------------


class NcPoly:
    __slots__ = ("alphabet", "_t")

    def __init__(self, alphabet: Alphabet, terms: Dict[Word, Raw] | None = None):
        self.alphabet = alphabet
        self._t: Dict[Word, Raw] = terms if terms is not None else {}

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPoly":
        return cls(alphabet, {})

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NcPoly":
        return cls.scalar(ParamPoly.const(alphabet, 1))

    @classmethod
    def scalar(cls, c: ParamPoly) -> "NcPoly":
        return cls(c.alphabet, {EMPTY: dict(c.raw)} if c else {})

    @classmethod
    def word(cls, alphabet: Alphabet, word: Iterable[str], coeff: ParamPoly | None = None) -> "NcPoly":
        c = coeff.raw if coeff is not None else {alphabet.one_key: Fraction(1)}
        return cls(alphabet, {tuple(word): dict(c)} if c else {})

    @classmethod
    def gen(cls, alphabet: Alphabet, g: str) -> "NcPoly":
        return cls.word(alphabet, (g,))

    @classmethod
    def from_pairs(cls, alphabet: Alphabet, pairs: Iterable[Tuple[Word, ParamPoly]]) -> "NcPoly":
        t: Dict[Word, Raw] = {}
        for w, c in pairs:
            _add_term(t, tuple(w), c.raw)
        return cls(alphabet, t)

    # views
    @property
    def raw(self) -> Dict[Word, Raw]:
        return self._t

    def items(self):
        for w, c in self._t.items():
            yield w, ParamPoly(self.alphabet, c, _trusted=True)

    def words(self):
        return self._t.keys()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def generators(self) -> set:
        return {g for w in self._t for g in w}

    def degree(self) -> int:
        return max((len(w) for w in self._t), default=-1)

    def scalar_part(self) -> ParamPoly:
        return ParamPoly(self.alphabet, dict(self._t.get(EMPTY, {})), _trusted=True)

    def is_scalar(self) -> bool:
        return all(not w for w in self._t)

    # arithmetic
    def _check(self, other: "NcPoly") -> None:
        if other.alphabet != self.alphabet:
            raise ConfigurationError(f"mismatched policies {self.alphabet} vs {other.alphabet}")

    def _lift(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, ParamPoly):
            if other.alphabet != self.alphabet:
                raise ConfigurationError("mismatched policies")
            return NcPoly.scalar(other)
        return NcPoly.scalar(ParamPoly.const(self.alphabet, other))

    def __add__(self, other):
        o = self._lift(other)
        t = {w: dict(c) for w, c in self._t.items()}
        for w, c in o._t.items():
            _add_term(t, w, c)
        return NcPoly(self.alphabet, t)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.alphabet, {w: {k: -v for k, v in c.items()} for w, c in self._t.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        return nc_mul(self, self._lift(other))

    def __rmul__(self, other):
        return nc_mul(self._lift(other), self)

    def __pow__(self, n: int):
        out = NcPoly.one(self.alphabet)
        for _ in range(n):
            out = nc_mul(out, self)
        return out

    def scale(self, c) -> "NcPoly":
        return nc_mul(self._lift(c), self)

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.alphabet == other.alphabet and self._t == other._t
        if isinstance(other, (ParamPoly, int, Fraction)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((w, frozenset(c.items())) for w, c in self._t.items()))

    def retruncate(self, n: int) -> "NcPoly":
        t = {}
        for w, c in self._t.items():
            c2 = raw_truncate(c, n)
            if c2:
                t[w] = c2
        return NcPoly(self.alphabet.with_truncate(n), t)

    def map_coefficients(self, f: Callable[[ParamPoly], ParamPoly]) -> "NcPoly":
        t = {}
        for w, c in self.items():
            c2 = f(c)
            if c2:
                t[w] = dict(c2.raw)
                alphabet = c2.alphabet
        return NcPoly(self.alphabet if not t else alphabet, t)

    # text
    def canonical(self, order: Sequence[str] | None = None) -> str:
        rank = _rank_map(order, self.generators())
        parts = []
        for w in sorted(self._t, key=lambda w: (len(w), [rank[g] for g in w])):
            parts.append(_coeff_word_str(ParamPoly(self.alphabet, self._t[w], _trusted=True), word_str(w)))
        return join_signed(parts)

    def __str__(self):
        return self.canonical()

    def __repr__(self):
        return f"NcPoly({self.canonical()!r})"


def _rank_map(order, gens) -> Dict[str, int]:
    order = list(order or [])
    rank = {g: j for j, g in enumerate(order)}
    for g in sorted(set(gens) - set(rank)):
        rank[g] = len(rank)
    return rank


def word_str(w: Word) -> str:
    if not w:
        return "1"
    bits = []
    j = 0
    while j < len(w):
        k = j
        while k < len(w) and w[k] == w[j]:
            k += 1
        n = k - j
        bits.append(w[j] if n == 1 else f"{w[j]}^{n}")
        j = k
    return "*".join(bits)


def _coeff_word_str(c: ParamPoly, ws: str) -> str:
    if ws == "1":
        return c.canonical()
    if c == 1:
        return ws
    if c == -1:
        return "-" + ws
    if len(c.terms) == 1:
        return f"{c.canonical()}*{ws}"
    return f"({c.canonical()})*{ws}"


def nc_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    """Concatenation product, no rewriting."""
    p._check(q)
    trunc = p.alphabet.truncate
    t: Dict[Word, Raw] = {}
    for w1, c1 in p._t.items():
        for w2, c2 in q._t.items():
            _addmul_term(t, w1 + w2, c1, c2, trunc)
    return NcPoly(p.alphabet, t)


def coefficient_of(p: NcPoly, w: Iterable[str]) -> ParamPoly:
    return ParamPoly(p.alphabet, dict(p._t.get(tuple(w), {})), _trusted=True)


# --------------------------------------------------------------------------
# rewriting
# --------------------------------------------------------------------------


class RewriteSystem:
    """Commutation rules ``hi*lo -> lo*hi + [hi, lo]`` for an ordered generator list."""

    def __init__(
        self,
        generators: Sequence[str],
        relations: Mapping[Tuple[str, str], NcPoly],
        alphabet: Alphabet,
        step_budget: int = DEFAULT_STEP_BUDGET,
    ):
        self.generators = tuple(generators)
        self.rank = {g: j for j, g in enumerate(self.generators)}
        if len(self.rank) != len(self.generators):
            raise ConfigurationError(f"repeated generator in {self.generators}")
        self.alphabet = alphabet
        self.step_budget = step_budget
        self.rules: Dict[Tuple[str, str], Dict[Word, Raw]] = {}
        for (hi, lo), rhs in relations.items():
            if rhs.alphabet != alphabet:
                raise ConfigurationError("relation built under a different policy")
            if self.rank[hi] <= self.rank[lo]:
                raise ConfigurationError(f"relation [{hi}, {lo}] is not on an out-of-order pair")
            self.rules[(hi, lo)] = rhs.raw
        self._cache: Dict[Word, Dict[Word, Raw]] = {}
        self.steps = 0

    def first_redex(self, w: Word) -> int:
        rules = self.rules
        for j in range(len(w) - 1):
            if (w[j], w[j + 1]) in rules:
                return j
        return -1

    def is_normal(self, w: Word) -> bool:
        return self.first_redex(w) < 0

    def normal_word(self, w: Word) -> Dict[Word, Raw]:
        """Normal form of a single word (coefficient 1), memoized."""
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        j = self.first_redex(w)
        if j < 0:
            out = {w: {self.alphabet.one_key: Fraction(1)}}
            self._cache[w] = out
            return out
        # iterative deepening keeps the Python stack shallow on long words
        stack = [w]
        while stack:
            top = stack[-1]
            if top in self._cache:
                stack.pop()
                continue
            j = self.first_redex(top)
            if j < 0:
                self._cache[top] = {top: {self.alphabet.one_key: Fraction(1)}}
                stack.pop()
                continue
            hi, lo = top[j], top[j + 1]
            pre, post = top[:j], top[j + 2 :]
            deps = [pre + (lo, hi) + post] + [pre + rw + post for rw in self.rules[(hi, lo)]]
            missing = [d for d in deps if d not in self._cache]
            if missing:
                stack.extend(missing)
                if len(stack) > self.step_budget:
                    raise NonTerminationError(top, self.step_budget)
                continue
            self.steps += 1
            if self.steps > self.step_budget:
                raise NonTerminationError(top, self.step_budget)
            trunc = self.alphabet.truncate
            out: Dict[Word, Raw] = {}
            for w2, c2 in self._cache[deps[0]].items():
                _add_term(out, w2, c2)
            for rw, rc in self.rules[(hi, lo)].items():
                for w2, c2 in self._cache[pre + rw + post].items():
                    _addmul_term(out, w2, rc, c2, trunc)
            self._cache[top] = out
            stack.pop()
        return self._cache[w]

    def normal_order(self, p: NcPoly) -> NcPoly:
        if p.alphabet != self.alphabet:
            raise ConfigurationError(f"mismatched policies {p.alphabet} vs {self.alphabet}")
        unknown = p.generators() - set(self.rank)
        if unknown:
            raise ConfigurationError(f"unknown generators {sorted(unknown)}")
        self.steps = 0
        trunc = self.alphabet.truncate
        out: Dict[Word, Raw] = {}
        for w, c in p._t.items():
            for w2, c2 in self.normal_word(w).items():
                _addmul_term(out, w2, c, c2, trunc)
        return NcPoly(self.alphabet, out)

    def mul(self, p: NcPoly, q: NcPoly) -> NcPoly:
        return self.normal_order(nc_mul(p, q))

    def normal_words(self, max_degree: int) -> list:
        """All irreducible words of degree <= max_degree in canonical order."""
        out = [EMPTY]
        frontier = [EMPTY]
        for _ in range(max_degree):
            nxt = []
            for w in frontier:
                for g in self.generators:
                    w2 = w + (g,)
                    if not w or (w[-1], g) not in self.rules:
                        nxt.append(w2)
            out.extend(nxt)
            frontier = nxt
        return out


def rewriter_of(pres) -> RewriteSystem:
    return pres if isinstance(pres, RewriteSystem) else pres.rewriter


def normal_order(p: NcPoly, pres) -> NcPoly:
    return rewriter_of(pres).normal_order(p)


def exp_nc(x: NcPoly, pres=None) -> NcPoly:
    """``sum_k x^k / k!`` up to the deformation truncation order."""
    for w, c in x.raw.items():
        if any(k[0] == 0 for k in c):
            raise NonTruncatableError(f"exp argument {x} has a deformation-degree-zero term")
    out = NcPoly.one(x.alphabet)
    power = NcPoly.one(x.alphabet)
    for k in range(1, x.alphabet.truncate + 1):
        power = nc_mul(power, x)
        if pres is not None:
            power = normal_order(power, pres)
        if power.is_zero():
            break
        out = out + power.scale(Fraction(1, math.factorial(k)))
    return out


def exp_generator(c: ParamPoly, g: str, pres=None) -> NcPoly:
    return exp_nc(NcPoly.word(c.alphabet, (g,), c), pres)


# --------------------------------------------------------------------------
# tensors
# --------------------------------------------------------------------------


class TensorNcPoly:
    """Finite sum of ``coeff * w_1 (x) ... (x) w_n``; ``arity`` is n."""

    __slots__ = ("alphabet", "arity", "_t")

    def __init__(self, alphabet: Alphabet, arity: int, terms: Dict[Tuple[Word, ...], Raw] | None = None):
        self.alphabet = alphabet
        self.arity = arity
        self._t: Dict[Tuple[Word, ...], Raw] = terms if terms is not None else {}

    @classmethod
    def zero(cls, alphabet: Alphabet, arity: int = 2) -> "TensorNcPoly":
        return cls(alphabet, arity, {})

    @classmethod
    def one(cls, alphabet: Alphabet, arity: int = 2) -> "TensorNcPoly":
        return cls(alphabet, arity, {(EMPTY,) * arity: {alphabet.one_key: Fraction(1)}})

    @classmethod
    def pure(cls, *legs: NcPoly) -> "TensorNcPoly":
        """``legs[0] (x) legs[1] (x) ...``"""
        alphabet = legs[0].alphabet
        trunc = alphabet.truncate
        terms: Dict[Tuple[Word, ...], Raw] = {(): {alphabet.one_key: Fraction(1)}}
        for leg in legs:
            if leg.alphabet != alphabet:
                raise ConfigurationError("mismatched policies")
            nxt: Dict[Tuple[Word, ...], Raw] = {}
            for ws, c in terms.items():
                for w, c2 in leg.raw.items():
                    _addmul_term(nxt, ws + (w,), c, c2, trunc)
            terms = nxt
        return cls(alphabet, len(legs), terms)

    @property
    def raw(self):
        return self._t

    def items(self):
        for ws, c in self._t.items():
            yield ws, ParamPoly(self.alphabet, c, _trusted=True)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def _check(self, o: "TensorNcPoly"):
        if o.alphabet != self.alphabet or o.arity != self.arity:
            raise ConfigurationError("mismatched tensor operands")

    def __add__(self, other: "TensorNcPoly"):
        # an empty sum carries no meaningful arity
        if not self._t and other.alphabet == self.alphabet:
            return other
        if not other._t and other.alphabet == self.alphabet:
            return self
        self._check(other)
        t = {w: dict(c) for w, c in self._t.items()}
        for w, c in other._t.items():
            _add_term(t, w, c)
        return TensorNcPoly(self.alphabet, self.arity, t)

    def __neg__(self):
        return TensorNcPoly(
            self.alphabet, self.arity, {w: {k: -v for k, v in c.items()} for w, c in self._t.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return tensor_mul(self, other)

    def scale(self, c: ParamPoly) -> "TensorNcPoly":
        trunc = self.alphabet.truncate
        t: Dict = {}
        for ws, c2 in self._t.items():
            _addmul_term(t, ws, c.raw, c2, trunc)
        return TensorNcPoly(self.alphabet, self.arity, t)

    def __eq__(self, other):
        if not isinstance(other, TensorNcPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.arity == other.arity and self._t == other._t

    def __hash__(self):
        return hash(frozenset((w, frozenset(c.items())) for w, c in self._t.items()))

    def retruncate(self, n: int) -> "TensorNcPoly":
        t = {}
        for w, c in self._t.items():
            c2 = raw_truncate(c, n)
            if c2:
                t[w] = c2
        return TensorNcPoly(self.alphabet.with_truncate(n), self.arity, t)

    def coefficient_of(self, *words: Iterable[str]) -> ParamPoly:
        key = tuple(tuple(w) for w in words)
        return ParamPoly(self.alphabet, dict(self._t.get(key, {})), _trusted=True)

    def normal_order(self, pres) -> "TensorNcPoly":
        """Normal-order every leg; ``pres`` may be one presentation or one per leg."""
        rws = pres if isinstance(pres, (list, tuple)) else [pres] * self.arity
        rws = [rewriter_of(r) for r in rws]
        trunc = self.alphabet.truncate
        out: Dict = {}
        for ws, c in self._t.items():
            partial: Dict = {(): c}
            for leg, w in enumerate(ws):
                nxt: Dict = {}
                for pre, pc in partial.items():
                    for w2, c2 in rws[leg].normal_word(w).items():
                        _addmul_term(nxt, pre + (w2,), pc, c2, trunc)
                partial = nxt
            for k, v in partial.items():
                _add_term(out, k, v)
        return TensorNcPoly(self.alphabet, self.arity, out)

    def map_leg(self, leg: int, f: Callable[[Word], "NcPoly | TensorNcPoly"]) -> "TensorNcPoly":
        """Apply a linear map given on words to one leg (arity grows for tensor-valued maps)."""
        trunc = self.alphabet.truncate
        out: Dict = {}
        arity = None
        cache: Dict[Word, object] = {}
        for ws, c in self._t.items():
            w = ws[leg]
            img = cache.get(w)
            if img is None:
                img = f(w)
                cache[w] = img
            if isinstance(img, NcPoly):
                pieces = (((w2,), c2) for w2, c2 in img.raw.items())
                width = 1
            else:
                pieces = img.raw.items()
                width = img.arity
            arity = self.arity - 1 + width
            for sub, c2 in pieces:
                _addmul_term(out, ws[:leg] + tuple(sub) + ws[leg + 1 :], c, c2, trunc)
        if arity is None:
            # zero input; arity unchanged for NcPoly-valued maps is the common case
            arity = self.arity
        return TensorNcPoly(self.alphabet, arity, out)

    def contract(self, pres=None) -> NcPoly:
        """Multiply all legs together (the product map ``m``)."""
        t: Dict[Word, Raw] = {}
        for ws, c in self._t.items():
            _add_term(t, sum(ws, ()), c)
        p = NcPoly(self.alphabet, t)
        return normal_order(p, pres) if pres is not None else p

    def canonical(self, order: Sequence[str] | None = None) -> str:
        gens = {g for ws in self._t for w in ws for g in w}
        rank = _rank_map(order, gens)

        def sort_key(ws):
            return tuple((len(w), [rank[g] for g in w]) for w in ws)

        parts = []
        for ws in sorted(self._t, key=sort_key):
            c = ParamPoly(self.alphabet, self._t[ws], _trusted=True)
            legs = [word_str(w) for w in ws]
            first = _coeff_word_str(c, legs[0])
            if legs[0] == "1" and len(c.terms) > 1:
                first = f"({c.canonical()})"
            parts.append(" (x) ".join([first] + legs[1:]))
        return join_signed(parts)

    def __str__(self):
        return self.canonical()

    def __repr__(self):
        return f"TensorNcPoly({self.canonical()!r})"


def tensor_mul(s: TensorNcPoly, t: TensorNcPoly, pres=None) -> TensorNcPoly:
    """Componentwise concatenation; legs normal-ordered when ``pres`` is given."""
    s._check(t)
    trunc = s.alphabet.truncate
    out: Dict = {}
    for ws1, c1 in s._t.items():
        for ws2, c2 in t._t.items():
            _addmul_term(out, tuple(a + b for a, b in zip(ws1, ws2)), c1, c2, trunc)
    r = TensorNcPoly(s.alphabet, s.arity, out)
    return r.normal_order(pres) if pres is not None else r
