"""The ``.hopf`` bundle format: algebra presentations, pairings, bicrossproduct
splits and characters.

Grammar (``#`` starts a comment, whitespace is free)::

    bundle     := block*
    block      := algebra | pairing | bicross | character
    algebra    := 'algebra' NAME '{' item* '}'
    item       := 'param' NAME 'truncate' INT ';'
                | 'generators' NAME ('>' NAME)* ';'
                | 'relations' '{' ('[' NAME ',' NAME ']' '=' expr ';')* '}'
                | 'coproduct' '{' (NAME '=' texpr ';')* '}'
                | 'counit'    '{' (NAME '=' expr ';')* '}'
                | 'antipode'  '{' (NAME '=' expr ';')* '}'
    pairing    := 'pairing' NAME ':' NAME ',' NAME
                  '{' 'basis' word ',' word ';' 'rule' 'factorial-delta' ';' '}'
    bicross    := 'bicross' NAME 'on' NAME '{' 'side' ('right-left' | 'left-right') ';'
                  'sectors' '{' 'K' ':' names ';' 'L' ':' names ';' '}'
                  'action' '{' (NAME ('<|' | '|>') NAME '=' expr ';')* '}'
                  'coaction' '{' (NAME '=' texpr ';')* '}' '}'
    character  := 'character' NAME 'on' NAME '{' (NAME '=' expr ';')* '}'

    expr       := ['-'] term (('+' | '-') term)*
    term       := factor (('*' | '/') factor)*
    factor     := atom ['^' INT]
    atom       := INT | NAME | 'i' | 'exp' '(' expr ')' | '(' expr ')' | '-' factor
    texpr      := ['-'] tterm (('+' | '-') tterm)*
    tterm      := term '(x)' term

The generator list is the normal order (leftmost first).  A relation
``[hi, lo] = expr`` must name an out-of-order pair, i.e. ``hi`` listed after
``lo``.  Division is only by a scalar monomial such as ``4*rho``; the
dividend is evaluated at a raised truncation order so the quotient is exact
to the declared order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .ncpoly import (
    EMPTY,
    NcPoly,
    RewriteSystem,
    TensorNcPoly,
    exp_nc,
    nc_mul,
    word_str,
)
from .report import AxiomReport
from .scalar import (
    Alphabet,
    ConfigurationError,
    DivisibilityError,
    GaussianRational,
    I,
    NonTruncatableError,
    ParamPoly,
)

DEFAULT_PARAM = "z"
RESERVED = {"i", "exp", "a", "b"}


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, column {col}: {msg}" if line else msg)
        self.msg = msg
        self.line = line
        self.col = col


# --------------------------------------------------------------------------
# tokens
# --------------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<tensor>\(x\))
  | (?P<op><\||\|>)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9']*)
  | (?P<sym>[{}\[\]();,:=+\-*/^>])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Tok]:
    toks = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            toks.append(Tok(kind, m.group(), line, m.start() - start + 1))
        pos = m.end()
    toks.append(Tok("eof", "", line, pos - start + 1))
    return toks


# --------------------------------------------------------------------------
# expression AST
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    op: str
    args: tuple = ()
    value: object = None
    line: int = 0
    col: int = 0


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.k = 0

    # helpers
    @property
    def tok(self) -> Tok:
        return self.toks[self.k]

    def peek(self, off=1) -> Tok:
        return self.toks[min(self.k + off, len(self.toks) - 1)]

    def error(self, msg, tok: Tok | None = None):
        tok = tok or self.tok
        if tok.kind == "eof":
            opened = []
            for t in self.toks[: self.k]:
                if t.text == "{":
                    opened.append(t)
                elif t.text == "}" and opened:
                    opened.pop()
            if opened:
                t = opened[-1]
                raise ParseError(f"unclosed '{{' ({msg} at line {tok.line})", t.line, t.col)
        raise ParseError(msg, tok.line, tok.col)

    def at(self, text) -> bool:
        return self.tok.text == text and self.tok.kind != "eof"

    def expect(self, text) -> Tok:
        if not self.at(text):
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")
        t = self.tok
        self.k += 1
        return t

    def name(self) -> Tok:
        if self.tok.kind != "name":
            self.error(f"expected a name, found {self.tok.text or 'end of input'!r}")
        t = self.tok
        self.k += 1
        return t

    def integer(self) -> int:
        if self.tok.kind != "int":
            self.error(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        t = self.tok
        self.k += 1
        return int(t.text)

    def hyphenated(self) -> str:
        parts = [self.name().text]
        while self.at("-") and self.peek().kind == "name":
            self.k += 1
            parts.append(self.name().text)
        return "-".join(parts)

    # expressions
    def expr(self) -> Node:
        t = self.tok
        if self.at("-"):
            self.k += 1
            node = Node("neg", (self.term(),), line=t.line, col=t.col)
        else:
            node = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok
            self.k += 1
            node = Node("add" if op.text == "+" else "sub", (node, self.term()), line=op.line, col=op.col)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.at("*") or self.at("/"):
            op = self.tok
            self.k += 1
            node = Node("mul" if op.text == "*" else "div", (node, self.factor()), line=op.line, col=op.col)
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self.at("^"):
            t = self.tok
            self.k += 1
            node = Node("pow", (node,), self.integer(), t.line, t.col)
        return node

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.k += 1
            return Node("num", value=Fraction(int(t.text)), line=t.line, col=t.col)
        if self.at("-"):
            self.k += 1
            return Node("neg", (self.factor(),), line=t.line, col=t.col)
        if self.at("("):
            self.k += 1
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "name":
            self.k += 1
            if t.text == "exp":
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Node("exp", (arg,), line=t.line, col=t.col)
            if t.text == "i":
                return Node("imag", line=t.line, col=t.col)
            return Node("name", value=t.text, line=t.line, col=t.col)
        self.error(f"unexpected {t.text or 'end of input'!r} in expression")

    def texpr(self) -> List[Tuple[int, Node, Node]]:
        sign = 1
        if self.at("-"):
            self.k += 1
            sign = -1
        out = [(sign,) + self.tterm()]
        while self.at("+") or self.at("-"):
            sign = 1 if self.tok.text == "+" else -1
            self.k += 1
            out.append((sign,) + self.tterm())
        return out

    def tterm(self) -> Tuple[Node, Node]:
        left = self.term()
        if self.tok.kind != "tensor":
            self.error("expected '(x)' in tensor expression")
        self.k += 1
        return left, self.term()


# --------------------------------------------------------------------------
# evaluation
# --------------------------------------------------------------------------


class _Evaluator:
    def __init__(self, alphabet: Alphabet, generators, where: str):
        self.alphabet = alphabet
        self.generators = set(generators)
        self.where = where

    def _extra(self, n: Node) -> int:
        """Truncation headroom needed so that divisions stay exact."""
        if n.op in ("num", "name", "imag"):
            return 0
        if n.op in ("neg", "exp"):
            return self._extra(n.args[0])
        if n.op in ("add", "sub"):
            return max(self._extra(a) for a in n.args)
        if n.op == "mul":
            return sum(self._extra(a) for a in n.args)
        if n.op == "pow":
            return n.value * self._extra(n.args[0])
        if n.op == "div":
            d = self._eval(n.args[1], self.alphabet.with_truncate(64))
            deg = max((k[0] for c in d.raw.values() for k in c), default=0)
            return self._extra(n.args[0]) + self._extra(n.args[1]) + deg
        raise AssertionError(n.op)

    def eval(self, n: Node) -> NcPoly:
        extra = self._extra(n)
        if extra == 0:
            return self._eval(n, self.alphabet)
        p = self._eval(n, self.alphabet.with_truncate(self.alphabet.truncate + extra))
        return NcPoly(self.alphabet, p.retruncate(self.alphabet.truncate).raw)

    def _eval(self, n: Node, A: Alphabet) -> NcPoly:
        op = n.op
        if op == "num":
            return NcPoly.scalar(ParamPoly.const(A, n.value))
        if op == "imag":
            return NcPoly.scalar(ParamPoly.const(A, I))
        if op == "name":
            if n.value in self.generators:
                return NcPoly.gen(A, n.value)
            if n.value in A.names:
                return NcPoly.scalar(ParamPoly.param(A, n.value))
            raise ParseError(f"unknown generator or parameter {n.value!r} in {self.where}", n.line, n.col)
        if op == "neg":
            return -self._eval(n.args[0], A)
        if op == "add":
            return self._eval(n.args[0], A) + self._eval(n.args[1], A)
        if op == "sub":
            return self._eval(n.args[0], A) - self._eval(n.args[1], A)
        if op == "mul":
            return nc_mul(self._eval(n.args[0], A), self._eval(n.args[1], A))
        if op == "pow":
            return self._eval(n.args[0], A) ** n.value
        if op == "exp":
            arg = self._eval(n.args[0], A)
            try:
                return exp_nc(arg)
            except NonTruncatableError:
                raise ParseError(
                    f"exp() argument must carry the deformation parameter in every term ({self.where})",
                    n.line,
                    n.col,
                ) from None
        if op == "div":
            num = self._eval(n.args[0], A)
            den = self._eval(n.args[1], A)
            return self._divide(num, den, n)
        raise AssertionError(op)

    def _divide(self, num: NcPoly, den: NcPoly, n: Node) -> NcPoly:
        terms = den.scalar_part().terms if den.is_scalar() else {}
        if len(terms) != 1:
            raise ParseError(f"can only divide by a nonzero scalar monomial ({self.where})", n.line, n.col)
        (exps, c), = terms.items()
        inv = GaussianRational(1) / c
        out = num.scale(ParamPoly.const(num.alphabet, inv))
        for j, e in enumerate(exps):
            for _ in range(e):
                try:
                    out = out.map_coefficients(lambda p, j=j: p.div_param(num.alphabet.names[j]))
                except DivisibilityError as exc:
                    raise ParseError(f"{exc} ({self.where})", n.line, n.col) from None
        return NcPoly(num.alphabet, out.raw)

    def scalar(self, n: Node) -> ParamPoly:
        p = self.eval(n)
        if not p.is_scalar():
            raise ParseError(f"expected a scalar in {self.where}", n.line, n.col)
        return p.scalar_part()

    def tensor(self, terms) -> TensorNcPoly:
        out = None
        for sign, left, right in terms:
            # each leg evaluated on its own; a division spanning legs is not expressible
            t = TensorNcPoly.pure(self.eval(left), self.eval(right))
            if sign < 0:
                t = -t
            out = t if out is None else out + t
        return out


# --------------------------------------------------------------------------
# data types
# --------------------------------------------------------------------------


class AlgebraPresentation:
    """Generators in normal order, commutation rules and Hopf structure tables."""

    def __init__(
        self,
        name: str,
        alphabet: Alphabet,
        generators: Tuple[str, ...],
        relations: Dict[Tuple[str, str], NcPoly],
        coproduct: Dict[str, TensorNcPoly],
        counit: Dict[str, ParamPoly],
        antipode: Dict[str, NcPoly],
    ):
        self.name = name
        self.alphabet = alphabet
        self.generators = tuple(generators)
        self.relations = dict(relations)
        self.rewriter = RewriteSystem(self.generators, self.relations, alphabet)
        self.coproduct = {g: t.normal_order(self) for g, t in coproduct.items()}
        self.counit = dict(counit)
        for g in self.generators:
            self.counit.setdefault(g, ParamPoly.zero(alphabet))
        self.antipode = {g: self.rewriter.normal_order(p) for g, p in antipode.items()}
        self.cache: Dict = {}

    @property
    def rank(self) -> Dict[str, int]:
        return self.rewriter.rank

    def gen(self, g: str) -> NcPoly:
        return NcPoly.gen(self.alphabet, g)

    def one(self) -> NcPoly:
        return NcPoly.one(self.alphabet)

    def normal_order(self, p: NcPoly) -> NcPoly:
        return self.rewriter.normal_order(p)

    def mul(self, *ps: NcPoly) -> NcPoly:
        out = self.one()
        for p in ps:
            out = self.rewriter.mul(out, p)
        return out

    def parse(self, text: str) -> NcPoly:
        """Evaluate an expression over this algebra's generators and normal-order it."""
        p = _Parser(text)
        node = p.expr()
        if p.tok.kind != "eof":
            p.error(f"unexpected {p.tok.text!r} after expression")
        ev = _Evaluator(self.alphabet, self.generators, f"expression {text!r}")
        return self.normal_order(ev.eval(node))

    def fmt(self, p) -> str:
        return p.canonical(self.generators)

    def with_truncate(self, n: int) -> "AlgebraPresentation":
        """Same presentation with the deformation truncated at order ``n``.

        Only lowering is exact; raising re-reads the stored tables, which were
        already truncated, so callers should re-parse the source instead.
        """
        return AlgebraPresentation(
            self.name,
            self.alphabet.with_truncate(n),
            self.generators,
            {k: _retr(v, n) for k, v in self.relations.items()},
            {k: _retr(v, n) for k, v in self.coproduct.items()},
            {k: v.retruncate(n) for k, v in self.counit.items()},
            {k: _retr(v, n) for k, v in self.antipode.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, AlgebraPresentation):
            return NotImplemented
        return (
            self.name == other.name
            and self.alphabet == other.alphabet
            and self.generators == other.generators
            and self.relations == other.relations
            and self.coproduct == other.coproduct
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, generators={self.generators})"


def _retr(x, n):
    return x.retruncate(n)


@dataclass(frozen=True)
class PairingSpec:
    name: str
    u_algebra: str
    f_algebra: str
    u_basis: Tuple[str, ...]
    f_basis: Tuple[str, ...]
    rule: str = "factorial-delta"


@dataclass(eq=False)
class BicrossSpec:
    """Split of an algebra as ``K (x) L``; ``K`` is the left factor in normal words.

    ``right-left``: ``L`` is a right ``K``-module algebra (``l <| k``) and ``K``
    a left ``L``-comodule coalgebra.  ``left-right``: ``K`` is a left
    ``L``-module algebra (``l |> k``) and ``L`` a right ``K``-comodule
    coalgebra.  In both cases the module algebra is the kernel.
    """

    name: str
    algebra: str
    side: str
    sector_k: Tuple[str, ...]
    sector_l: Tuple[str, ...]
    action: Dict[Tuple[str, str], NcPoly]
    coaction: Dict[str, TensorNcPoly]

    @property
    def kernel(self) -> Tuple[str, ...]:
        return self.sector_l if self.side == "right-left" else self.sector_k

    @property
    def acting(self) -> Tuple[str, ...]:
        return self.sector_k if self.side == "right-left" else self.sector_l

    @property
    def coacted(self) -> Tuple[str, ...]:
        """Generators of the comodule coalgebra."""
        return self.acting

    def __eq__(self, other):
        if not isinstance(other, BicrossSpec):
            return NotImplemented
        return (
            self.name,
            self.algebra,
            self.side,
            self.sector_k,
            self.sector_l,
            self.action,
            self.coaction,
        ) == (
            other.name,
            other.algebra,
            other.side,
            other.sector_k,
            other.sector_l,
            other.action,
            other.coaction,
        )


@dataclass(eq=False)
class CharacterSpec:
    name: str
    algebra: str
    values: Dict[str, ParamPoly]
    kernel: str = ""

    def __eq__(self, other):
        if not isinstance(other, CharacterSpec):
            return NotImplemented
        return (self.name, self.algebra, self.values, self.kernel) == (
            other.name,
            other.algebra,
            other.values,
            other.kernel,
        )


@dataclass(eq=False)
class Bundle:
    algebras: Dict[str, AlgebraPresentation] = field(default_factory=dict)
    pairings: Dict[str, PairingSpec] = field(default_factory=dict)
    bicross: Dict[str, BicrossSpec] = field(default_factory=dict)
    characters: Dict[str, CharacterSpec] = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, Bundle):
            return NotImplemented
        return (
            self.algebras == other.algebras
            and self.pairings == other.pairings
            and self.bicross == other.bicross
            and self.characters == other.characters
        )

    def algebra_for(self, generators) -> AlgebraPresentation:
        gens = set(generators)
        hits = [a for a in self.algebras.values() if gens <= set(a.generators)]
        if not hits:
            raise ConfigurationError(f"no algebra in the bundle has generators {sorted(gens)}")
        if len(hits) > 1 and gens:
            raise ConfigurationError(f"generators {sorted(gens)} are ambiguous; name the algebra")
        return hits[0]


# --------------------------------------------------------------------------
# parsing
# --------------------------------------------------------------------------


def parse_bundle(text: str, truncate: Optional[int] = None) -> Bundle:
    """Parse ``.hopf`` source; ``truncate`` overrides every declared truncation order."""
    p = _Parser(text)
    b = Bundle()
    while p.tok.kind != "eof":
        kw = p.tok
        if kw.text == "algebra":
            alg = _parse_algebra(p, truncate)
            if alg.name in b.algebras:
                p.error(f"duplicate algebra {alg.name!r}", kw)
            b.algebras[alg.name] = alg
        elif kw.text == "pairing":
            pr = _parse_pairing(p, b, kw)
            b.pairings[pr.name] = pr
        elif kw.text == "bicross":
            bc = _parse_bicross(p, b, kw)
            b.bicross[bc.name] = bc
        elif kw.text == "character":
            ch = _parse_character(p, b, kw)
            b.characters[ch.name] = ch
        else:
            p.error(f"expected a block keyword, found {kw.text!r}")
    for ch in b.characters.values():
        _resolve_character(b, ch)
    return b


def _block_entries(p: _Parser, entry):
    p.expect("{")
    while not p.at("}"):
        if p.tok.kind == "eof":
            p.error("unclosed block")
        entry()
    p.expect("}")
    if p.at(";"):
        p.k += 1


def _parse_algebra(p: _Parser, truncate) -> AlgebraPresentation:
    p.expect("algebra")
    name = p.name().text
    param, order = DEFAULT_PARAM, 0
    generators: List[str] = []
    sections: Dict[str, list] = {"relations": [], "coproduct": [], "counit": [], "antipode": []}
    p.expect("{")
    while not p.at("}"):
        t = p.tok
        if t.kind == "eof":
            p.error(f"unclosed algebra block {name!r}")
        if t.text == "param":
            p.k += 1
            param = p.name().text
            p.expect("truncate")
            order = p.integer()
            p.expect(";")
        elif t.text == "generators":
            p.k += 1
            gens = [p.name()]
            while p.at(">") or p.at(","):
                p.k += 1
                gens.append(p.name())
            p.expect(";")
            for g in gens:
                if g.text in RESERVED or g.text == param:
                    p.error(f"generator name {g.text!r} is reserved", g)
                if g.text in generators:
                    p.error(f"repeated generator {g.text!r}", g)
                generators.append(g.text)
        elif t.text == "relations":
            p.k += 1

            def rel():
                lb = p.expect("[")
                hi = p.name()
                p.expect(",")
                lo = p.name()
                p.expect("]")
                p.expect("=")
                sections["relations"].append((hi, lo, p.expr(), lb))
                p.expect(";")

            _block_entries(p, rel)
        elif t.text in ("coproduct", "counit", "antipode"):
            sect = t.text
            p.k += 1

            def ent(sect=sect):
                g = p.name()
                p.expect("=")
                sections[sect].append((g, p.texpr() if sect == "coproduct" else p.expr()))
                p.expect(";")

            _block_entries(p, ent)
        else:
            p.error(f"unexpected {t.text!r} in algebra block")
    p.expect("}")
    if truncate is not None:
        order = truncate
    if not generators:
        p.error(f"algebra {name!r} declares no generators")
    alphabet = Alphabet.galilei(param, order) if param not in ("a", "b") else None
    if alphabet is None:
        raise ParseError(f"parameter name {param!r} is reserved")
    rank = {g: j for j, g in enumerate(generators)}

    def check_gen(tok: Tok):
        if tok.text not in rank:
            raise ParseError(f"unknown generator {tok.text!r}", tok.line, tok.col)

    ev = _Evaluator(alphabet, generators, f"algebra {name}")
    relations: Dict[Tuple[str, str], NcPoly] = {}
    for hi, lo, node, lb in sections["relations"]:
        check_gen(hi)
        check_gen(lo)
        if rank[hi.text] <= rank[lo.text]:
            raise ParseError(
                f"relation [{hi.text}, {lo.text}] is on an unordered pair: "
                f"the first generator must come later in the normal order",
                lb.line,
                lb.col,
            )
        if (hi.text, lo.text) in relations:
            raise ParseError(f"duplicate relation [{hi.text}, {lo.text}]", lb.line, lb.col)
        relations[(hi.text, lo.text)] = ev.eval(node)
    coproduct, counit, antipode = {}, {}, {}
    for g, terms in sections["coproduct"]:
        check_gen(g)
        coproduct[g.text] = ev.tensor(terms)
    for g, node in sections["counit"]:
        check_gen(g)
        counit[g.text] = ev.scalar(node)
    for g, node in sections["antipode"]:
        check_gen(g)
        antipode[g.text] = ev.eval(node)
    try:
        return AlgebraPresentation(name, alphabet, tuple(generators), relations, coproduct, counit, antipode)
    except ConfigurationError as exc:
        raise ParseError(str(exc)) from None


def _word_names(p: _Parser) -> List[Tok]:
    toks = [p.name()]
    while p.at("*"):
        p.k += 1
        toks.append(p.name())
    return toks


def _parse_pairing(p: _Parser, b: Bundle, kw: Tok) -> PairingSpec:
    p.expect("pairing")
    name = p.name().text
    p.expect(":")
    u = p.name()
    p.expect(",")
    f = p.name()
    for t in (u, f):
        if t.text not in b.algebras:
            p.error(f"pairing {name!r} refers to unknown algebra {t.text!r}", t)
    p.expect("{")
    p.expect("basis")
    ub = _word_names(p)
    p.expect(",")
    fb = _word_names(p)
    p.expect(";")
    p.expect("rule")
    rt = p.tok
    rule = p.hyphenated()
    if rule != "factorial-delta":
        p.error(f"unsupported pairing rule {rule!r}", rt)
    p.expect(";")
    p.expect("}")
    if p.at(";"):
        p.k += 1
    ua, fa = b.algebras[u.text], b.algebras[f.text]
    if len(ub) != len(fb):
        p.error(f"pairing {name!r}: basis lengths differ ({len(ub)} vs {len(fb)})", kw)
    for toks, alg in ((ub, ua), (fb, fa)):
        names = tuple(t.text for t in toks)
        for t in toks:
            if t.text not in alg.generators:
                p.error(f"unknown generator {t.text!r} in pairing {name!r}", t)
        if names != alg.generators:
            p.error(
                f"pairing {name!r}: basis {'*'.join(names)} must list {alg.name}'s generators in normal order",
                toks[0],
            )
    if ua.alphabet != fa.alphabet:
        p.error(f"pairing {name!r}: algebras use different parameters or truncation", kw)
    return PairingSpec(name, u.text, f.text, tuple(t.text for t in ub), tuple(t.text for t in fb))


def _parse_bicross(p: _Parser, b: Bundle, kw: Tok) -> BicrossSpec:
    p.expect("bicross")
    name = p.name().text
    p.expect("on")
    at = p.name()
    if at.text not in b.algebras:
        p.error(f"bicross {name!r} refers to unknown algebra {at.text!r}", at)
    alg = b.algebras[at.text]
    p.expect("{")
    p.expect("side")
    st = p.tok
    side = p.hyphenated()
    if side not in ("right-left", "left-right"):
        p.error(f"side must be right-left or left-right, not {side!r}", st)
    p.expect(";")
    p.expect("sectors")
    p.expect("{")
    sectors = {}
    for label in ("K", "L"):
        p.expect(label)
        p.expect(":")
        names = [p.name()]
        while p.at(","):
            p.k += 1
            names.append(p.name())
        p.expect(";")
        for t in names:
            if t.text not in alg.generators:
                p.error(f"unknown generator {t.text!r} in bicross {name!r}", t)
        sectors[label] = tuple(t.text for t in names)
    p.expect("}")
    sk, sl = sectors["K"], sectors["L"]
    if set(sk) & set(sl) or set(sk) | set(sl) != set(alg.generators):
        p.error(f"bicross {name!r}: sectors must partition the generators of {alg.name}", kw)
    if max(alg.rank[g] for g in sk) > min(alg.rank[g] for g in sl):
        p.error(f"bicross {name!r}: the K sector must precede the L sector in the normal order", kw)
    kernel = sl if side == "right-left" else sk
    for hi in kernel:
        for lo in kernel:
            if alg.rank[hi] > alg.rank[lo]:
                rhs = alg.relations.get((hi, lo))
                if rhs is None or not rhs.is_zero():
                    p.error(
                        f"bicross {name!r}: kernel is not commutative, [{hi}, {lo}] = "
                        f"{alg.fmt(rhs) if rhs is not None else 'free'}",
                        kw,
                    )
    acting = sk if side == "right-left" else sl
    op = "<|" if side == "right-left" else "|>"
    ev = _Evaluator(alg.alphabet, alg.generators, f"bicross {name}")
    action: Dict[Tuple[str, str], NcPoly] = {}
    coaction: Dict[str, TensorNcPoly] = {}
    p.expect("action")

    def act():
        left = p.name()
        ot = p.tok
        if ot.text != op:
            p.error(f"{side} actions are written with {op!r}")
        p.k += 1
        right = p.name()
        p.expect("=")
        node = p.expr()
        p.expect(";")
        module, actor = (left, right) if side == "right-left" else (right, left)
        if module.text not in kernel:
            p.error(f"{module.text!r} is not in the module-algebra sector", module)
        if actor.text not in acting:
            p.error(f"{actor.text!r} is not in the acting sector", actor)
        action[(module.text, actor.text)] = alg.normal_order(ev.eval(node))

    _block_entries(p, act)
    p.expect("coaction")

    def coact():
        g = p.name()
        if g.text not in acting:
            p.error(f"coaction given on {g.text!r}, which is not in the comodule sector", g)
        p.expect("=")
        coaction[g.text] = ev.tensor(p.texpr()).normal_order(alg)
        p.expect(";")

    _block_entries(p, coact)
    p.expect("}")
    if p.at(";"):
        p.k += 1
    return BicrossSpec(name, alg.name, side, sk, sl, action, coaction)


def _parse_character(p: _Parser, b: Bundle, kw: Tok) -> CharacterSpec:
    p.expect("character")
    name = p.name().text
    p.expect("on")
    at = p.name()
    if at.text not in b.algebras:
        p.error(f"character {name!r} refers to unknown algebra {at.text!r}", at)
    alg = b.algebras[at.text]
    ev = _Evaluator(alg.alphabet, (), f"character {name}")
    values = {}

    def ent():
        g = p.name()
        if g.text not in alg.generators:
            p.error(f"unknown generator {g.text!r} in character {name!r}", g)
        p.expect("=")
        values[g.text] = ev.scalar(p.expr())
        p.expect(";")

    _block_entries(p, ent)
    return CharacterSpec(name, alg.name, values)


def _resolve_character(b: Bundle, ch: CharacterSpec) -> None:
    for bc in b.bicross.values():
        if bc.algebra == ch.algebra and set(bc.kernel) == set(ch.values):
            ch.kernel = bc.name
            return
    raise ParseError(
        f"character {ch.name!r}: no bicross split of {ch.algebra!r} has kernel {sorted(ch.values)}"
    )


def load_bundle(path, truncate: Optional[int] = None) -> Bundle:
    with open(path, encoding="utf-8") as fh:
        return parse_bundle(fh.read(), truncate)


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------


def serialize_bundle(b: Bundle) -> str:
    out: List[str] = []
    for alg in b.algebras.values():
        g = alg.generators
        out.append(f"algebra {alg.name} {{")
        out.append(f"  param {alg.alphabet.deform} truncate {alg.alphabet.truncate};")
        out.append(f"  generators {' > '.join(g)};")
        out.append("  relations {")
        for (hi, lo), rhs in sorted(alg.relations.items(), key=lambda kv: (alg.rank[kv[0][0]], alg.rank[kv[0][1]])):
            out.append(f"    [{hi}, {lo}] = {rhs.canonical(g)};")
        out.append("  }")
        for sect, table in (("coproduct", alg.coproduct), ("counit", alg.counit), ("antipode", alg.antipode)):
            out.append(f"  {sect} {{")
            for gen in g:
                if gen in table:
                    v = table[gen]
                    out.append(f"    {gen} = {v.canonical(g) if not isinstance(v, ParamPoly) else v.canonical()};")
            out.append("  }")
        out.append("}")
        out.append("")
    for pr in b.pairings.values():
        out.append(f"pairing {pr.name} : {pr.u_algebra}, {pr.f_algebra} {{")
        out.append(f"  basis {'*'.join(pr.u_basis)} , {'*'.join(pr.f_basis)};")
        out.append(f"  rule {pr.rule};")
        out.append("}")
        out.append("")
    for bc in b.bicross.values():
        g = b.algebras[bc.algebra].generators
        op = "<|" if bc.side == "right-left" else "|>"
        out.append(f"bicross {bc.name} on {bc.algebra} {{")
        out.append(f"  side {bc.side};")
        out.append(f"  sectors {{ K: {', '.join(bc.sector_k)}; L: {', '.join(bc.sector_l)}; }}")
        out.append("  action {")
        for (m, a), v in bc.action.items():
            left, right = (m, a) if bc.side == "right-left" else (a, m)
            out.append(f"    {left} {op} {right} = {v.canonical(g)};")
        out.append("  }")
        out.append("  coaction {")
        for gen, v in bc.coaction.items():
            out.append(f"    {gen} = {v.canonical(g)};")
        out.append("  }")
        out.append("}")
        out.append("")
    for ch in b.characters.values():
        out.append(f"character {ch.name} on {ch.algebra} {{")
        for gen, v in ch.values.items():
            out.append(f"  {gen} = {v.canonical()};")
        out.append("}")
        out.append("")
    return "\n".join(out)


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------


def _measure(word, rank, deg) -> Tuple[int, int]:
    inv = sum(1 for x in range(len(word)) for y in range(x + 1, len(word)) if rank[word[x]] > rank[word[y]])
    return (len(word) - deg, inv)


def validate_presentation(pres: AlgebraPresentation) -> AxiomReport:
    """Well-formedness checks: tables complete, relations compatible with
    counit, coproduct and antipode, antipode law on generators, and each rule
    strictly lowering the (length minus deformation degree, inversions) measure."""
    from . import hopfops

    rep = AxiomReport(f"validate:{pres.name}")
    fmt = pres.fmt
    complete = True
    for g in pres.generators:
        for sect, table in (("coproduct", pres.coproduct), ("antipode", pres.antipode)):
            if g not in table:
                complete = False
                rep.add(f"{sect}-defined", g, False, note=f"no {sect} entry")
    for (hi, lo), rhs in pres.relations.items():
        mono = f"[{hi}, {lo}]"
        eh, el = pres.counit[hi], pres.counit[lo]
        rep.compare("counit-respects-relation", mono, eh * el - el * eh, hopfops.counit(rhs, pres))
        for w, c in rhs.raw.items():
            deg = min(k[0] for k in c)
            ok = _measure(w, pres.rank, deg) < (2, 1)
            rep.add("rewrite-lowers-measure", mono, ok, lhs=word_str(w), rhs=f"deformation degree {deg}")
        if not complete:
            continue
        dh, dl = pres.coproduct[hi], pres.coproduct[lo]
        comm = (dh * dl - dl * dh).normal_order(pres)
        rep.compare("coproduct-respects-relation", mono, comm.canonical(pres.generators),
                    hopfops.coproduct(rhs, pres).canonical(pres.generators))
        sh, sl = pres.antipode[hi], pres.antipode[lo]
        acomm = pres.normal_order(sl * sh - sh * sl)
        rep.compare("antipode-respects-relation", mono, fmt(acomm), fmt(hopfops.antipode(rhs, pres)))
    if complete:
        for g in pres.generators:
            x = pres.gen(g)
            eps = NcPoly.scalar(pres.counit[g])
            rep.compare("counit-law", g, fmt(hopfops.counit_left(x, pres)), fmt(x))
            rep.compare("antipode-law-left", g, fmt(hopfops.antipode_left(x, pres)), fmt(eps))
            rep.compare("antipode-law-right", g, fmt(hopfops.antipode_right(x, pres)), fmt(eps))
    return rep
