"""Exact coefficient arithmetic.

Two layers live here:

* :class:`GaussianRational`, an exact complex number ``re + i*im`` with
  rational parts.
* :class:`ParamPoly`, a multivariate polynomial over the Gaussian rationals
  in a small parameter alphabet ``(deformation, a, b)``.  Only the
  deformation parameter is truncated; ``a`` and ``b`` are kept exactly.

Internally a polynomial is a ``dict`` from *keys* to :class:`fractions.Fraction`.
A key is the exponent vector over the alphabet followed by the power of
``i`` (0 or 1), so ``3*i*a^2*omega`` under the alphabet ``(omega, a, b)`` is
stored as ``{(1, 2, 0, 1): Fraction(3)}``.  The raw-dict helpers at the
bottom of the module are shared with :mod:`qinduce.ncpoly`, which stores
one such dict per word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Key = Tuple[int, ...]
Raw = Dict[Key, Fraction]


class ConfigurationError(ValueError):
    """Operands built under different alphabets or truncation policies."""


class DivisibilityError(ArithmeticError):
    pass


class NonTruncatableError(ArithmeticError):
    """An exponential whose argument has a term of deformation degree zero."""


# --------------------------------------------------------------------------
# Gaussian rationals
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x: "Number") -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return cls(Fraction(x))

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __pow__(self, n: int):
        out = GaussianRational(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return _frac_str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"({_frac_str(self.re)}{sign}{_frac_str(abs(self.im))}*i)"

    def __repr__(self):
        return f"GaussianRational({self})"


Number = Union[int, Fraction, GaussianRational]
_NUMBERS = (int, Fraction, GaussianRational)

I = GaussianRational(0, 1)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


# --------------------------------------------------------------------------
# Alphabets
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Alphabet:
    """Parameter names and truncation order of the first (deformation) one."""

    names: Tuple[str, ...]
    truncate: int

    def __post_init__(self):
        if self.truncate < 0:
            raise ConfigurationError("truncation order must be nonnegative")
        if len(set(self.names)) != len(self.names):
            raise ConfigurationError(f"repeated parameter in {self.names}")

    @classmethod
    def galilei(cls, deform: str, truncate: int) -> "Alphabet":
        return cls((deform, "a", "b"), truncate)

    @property
    def deform(self) -> str:
        return self.names[0]

    @property
    def one_key(self) -> Key:
        return (0,) * (len(self.names) + 1)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown parameter {name!r}") from None

    def with_truncate(self, n: int) -> "Alphabet":
        return Alphabet(self.names, n)


# --------------------------------------------------------------------------
# raw dict helpers
# --------------------------------------------------------------------------


def key_mul(k1: Key, k2: Key, trunc: int):
    """Product of two scalar monomials: ``(key, sign)`` or ``(None, 0)`` if truncated."""
    if k1[0] + k2[0] > trunc:
        return None, 0
    k = tuple([x + y for x, y in zip(k1, k2)])
    if k[-1] == 2:
        return k[:-1] + (0,), -1
    return k, 1


def raw_add_into(dst: Raw, src: Raw, scale: Fraction | int = 1) -> None:
    for k, c in src.items():
        v = dst.get(k, 0) + c * scale
        if v:
            dst[k] = v
        else:
            dst.pop(k, None)


def raw_addmul_into(dst: Raw, x: Raw, y: Raw, trunc: int, scale: Fraction | int = 1) -> None:
    """``dst += scale * x * y`` truncated at deformation order ``trunc``."""
    for k1, c1 in x.items():
        d1 = k1[0]
        for k2, c2 in y.items():
            if d1 + k2[0] > trunc:
                continue
            k, s = key_mul(k1, k2, trunc)
            v = dst.get(k, 0) + s * scale * c1 * c2
            if v:
                dst[k] = v
            else:
                del dst[k]


def raw_mul(x: Raw, y: Raw, trunc: int) -> Raw:
    out: Raw = {}
    raw_addmul_into(out, x, y, trunc)
    return out


def raw_truncate(x: Raw, trunc: int) -> Raw:
    return {k: c for k, c in x.items() if k[0] <= trunc}


def raw_from_gaussian(exps: Tuple[int, ...], g: GaussianRational) -> Raw:
    out: Raw = {}
    if g.re:
        out[tuple(exps) + (0,)] = g.re
    if g.im:
        out[tuple(exps) + (1,)] = g.im
    return out


# --------------------------------------------------------------------------
# ParamPoly
# --------------------------------------------------------------------------


class ParamPoly:
    """Polynomial in the alphabet's parameters with Gaussian rational coefficients."""

    __slots__ = ("alphabet", "_t")

    def __init__(self, alphabet: Alphabet, raw: Raw | None = None, *, _trusted=False):
        self.alphabet = alphabet
        if raw is None:
            self._t: Raw = {}
        elif _trusted:
            self._t = raw
        else:
            n = len(alphabet.names) + 1
            t: Raw = {}
            for k, c in raw.items():
                if len(k) != n or k[-1] not in (0, 1):
                    raise ConfigurationError(f"bad scalar key {k} for {alphabet.names}")
                if k[0] <= alphabet.truncate and c:
                    t[k] = Fraction(c)
            self._t = t

    # constructors ---------------------------------------------------------

    @classmethod
    def const(cls, alphabet: Alphabet, c: Number = 1) -> "ParamPoly":
        g = GaussianRational.coerce(c)
        return cls(alphabet, raw_from_gaussian((0,) * len(alphabet.names), g), _trusted=True)

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "ParamPoly":
        return cls(alphabet, {}, _trusted=True)

    @classmethod
    def param(cls, alphabet: Alphabet, name: str, power: int = 1) -> "ParamPoly":
        exps = [0] * len(alphabet.names)
        exps[alphabet.index(name)] = power
        return cls(alphabet, {tuple(exps) + (0,): Fraction(1)})

    @classmethod
    def from_terms(
        cls, alphabet: Alphabet, terms: Mapping[Tuple[int, ...], Number]
    ) -> "ParamPoly":
        raw: Raw = {}
        for exps, c in terms.items():
            raw_add_into(raw, raw_from_gaussian(tuple(exps), GaussianRational.coerce(c)))
        return cls(alphabet, raw)

    # views ----------------------------------------------------------------

    @property
    def raw(self) -> Raw:
        return self._t

    @property
    def terms(self) -> Dict[Tuple[int, ...], GaussianRational]:
        out: Dict[Tuple[int, ...], GaussianRational] = {}
        for k, c in self._t.items():
            g = GaussianRational(c) if k[-1] == 0 else GaussianRational(0, c)
            out[k[:-1]] = out.get(k[:-1], GaussianRational()) + g
        return {e: g for e, g in out.items() if g}

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def constant(self) -> GaussianRational:
        return self.terms.get((0,) * len(self.alphabet.names), GaussianRational())

    def is_constant(self) -> bool:
        return all(not any(k[:-1]) for k in self._t)

    def degree(self, name: str) -> int:
        j = self.alphabet.index(name)
        return max((k[j] for k in self._t), default=-1)

    def min_degree(self, name: str) -> int:
        j = self.alphabet.index(name)
        return min((k[j] for k in self._t), default=-1)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "ParamPoly":
        if isinstance(other, ParamPoly):
            if other.alphabet != self.alphabet:
                raise ConfigurationError(
                    f"mismatched policies {self.alphabet} vs {other.alphabet}"
                )
            return other
        return ParamPoly.const(self.alphabet, other)

    def __add__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        o = self._coerce(other)
        t = dict(self._t)
        raw_add_into(t, o._t)
        return ParamPoly(self.alphabet, t, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.alphabet, {k: -c for k, c in self._t.items()}, _trusted=True)

    def __sub__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        o = self._coerce(other)
        t = dict(self._t)
        raw_add_into(t, o._t, -1)
        return ParamPoly(self.alphabet, t, _trusted=True)

    def __rsub__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        o = self._coerce(other)
        return ParamPoly(
            self.alphabet, raw_mul(self._t, o._t, self.alphabet.truncate), _trusted=True
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ParamPoly.const(self.alphabet, 1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: Number) -> "ParamPoly":
        return self * ParamPoly.const(self.alphabet, c)

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.alphabet == other.alphabet and self._t == other._t
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == ParamPoly.const(self.alphabet, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.alphabet, frozenset(self._t.items())))

    # structural operations -----------------------------------------------

    def retruncate(self, n: int) -> "ParamPoly":
        a = self.alphabet.with_truncate(n)
        return ParamPoly(a, raw_truncate(self._t, n), _trusted=True)

    def substitute(self, name: str, value: Number) -> "ParamPoly":
        return poly_substitute(self, name, value)

    def div_param(self, name: str) -> "ParamPoly":
        return poly_div_param(self, name)

    # text -----------------------------------------------------------------

    def __str__(self):
        return self.canonical()

    def __repr__(self):
        return f"ParamPoly({self.canonical()!r})"

    def canonical(self) -> str:
        terms = self.terms
        if not terms:
            return "0"
        order = sorted(range(len(self.alphabet.names)), key=lambda j: self.alphabet.names[j])
        parts = []
        for exps in sorted(terms):
            mono = _monomial_str(exps, order, self.alphabet.names)
            parts.append(_term_str(terms[exps], mono))
        return join_signed(parts)


def _monomial_str(exps, order, names) -> str:
    bits = []
    for j in order:
        e = exps[j]
        if e == 1:
            bits.append(names[j])
        elif e > 1:
            bits.append(f"{names[j]}^{e}")
    return "*".join(bits)


def _term_str(c: GaussianRational, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def join_signed(parts: Iterable[str]) -> str:
    out = ""
    for s in parts:
        if not out:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out or "0"


_SCALARS = _NUMBERS + (ParamPoly,)


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------


def poly_arith(op: str, p: ParamPoly, q: ParamPoly) -> ParamPoly:
    if p.alphabet != q.alphabet:
        raise ConfigurationError(f"mismatched policies {p.alphabet} vs {q.alphabet}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def poly_substitute(p: ParamPoly, param: str, value: Number) -> ParamPoly:
    j = p.alphabet.index(param)
    g = GaussianRational.coerce(value)
    out: Raw = {}
    powers = {0: GaussianRational(1)}
    for exps, c in p.terms.items():
        e = exps[j]
        if e not in powers:
            powers[e] = g**e
        new = list(exps)
        new[j] = 0
        raw_add_into(out, raw_from_gaussian(tuple(new), c * powers[e]))
    return ParamPoly(p.alphabet, raw_truncate(out, p.alphabet.truncate), _trusted=True)


def poly_exp_truncated(p: ParamPoly, N: int | None = None) -> ParamPoly:
    """``sum_{k<=N} p^k / k!`` under the truncation policy ``N``."""
    if N is None:
        N = p.alphabet.truncate
    if any(k[0] == 0 for k in p.raw):
        raise NonTruncatableError(f"exp argument {p} has a deformation-degree-zero term")
    q = p.retruncate(N)
    out = ParamPoly.const(q.alphabet, 1)
    power = ParamPoly.const(q.alphabet, 1)
    for k in range(1, N + 1):
        power = power * q
        if power.is_zero():
            break
        out = out + power.scale(Fraction(1, math.factorial(k)))
    return out


def poly_div_param(p: ParamPoly, param: str) -> ParamPoly:
    j = p.alphabet.index(param)
    out: Raw = {}
    for k, c in p.raw.items():
        if k[j] < 1:
            raise DivisibilityError(f"{p} is not divisible by {param}")
        nk = list(k)
        nk[j] -= 1
        out[tuple(nk)] = c
    return ParamPoly(p.alphabet, out, _trusted=True)
