"""Exact coefficients, monomial orders and multivariate polynomials.

Polynomials are immutable mappings from exponent tuples to nonzero
coefficients.  Coefficients are :class:`fractions.Fraction` in
characteristic zero and :class:`ModP` in characteristic ``p``.

>>> R = PolyRing(("X", "Y", "Z"), grading=(1, 1, -1))
>>> f = R.parse("(X+Y)^2 - X^2")
>>> str(f)
'2*X*Y + Y^2'
>>> homogeneous_degree(R.parse("X*Z"))
0
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    ArityMismatch,
    BadCharacteristic,
    PolynomialSyntaxError,
    RingMismatch,
    UnknownVariable,
    ZeroPolynomialError,
)

Monomial = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# coefficients
# ---------------------------------------------------------------------------


class ModP:
    """An element of the prime field with ``p`` elements."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other) -> int:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise RingMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return v
        return ModP(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return v
        return ModP(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return v
        return ModP(v - self.value, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return v
        return ModP(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __truediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return v
        return self * ModP(pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return v
        return ModP(v * pow(self.value, -1, self.p), self.p)

    def __pow__(self, n: int):
        return ModP(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class RationalField:
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, ModP):
            raise RingMismatch("prime-field element used over QQ")
        return Fraction(x)

    def fraction(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if not (2 <= p < 2**31 and is_prime(p)):
            raise BadCharacteristic(f"characteristic must be a prime below 2^31, got {p}")
        self.characteristic = p

    def __call__(self, x) -> ModP:
        p = self.characteristic
        if isinstance(x, ModP):
            if x.p != p:
                raise RingMismatch(f"GF({x.p}) element used over GF({p})")
            return x
        if isinstance(x, Fraction):
            return self.fraction(x.numerator, x.denominator)
        return ModP(int(x), p)

    def fraction(self, num: int, den: int) -> ModP:
        p = self.characteristic
        if den % p == 0:
            raise BadCharacteristic(f"denominator {den} vanishes modulo {p}")
        return ModP(num * pow(den, -1, p), p)

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


def _grevlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a sort key (larger key = larger monomial).

    ``block`` orders with split ``k`` compare the first ``k`` exponents by
    grevlex first and fall back to grevlex on the rest; they eliminate the
    first ``k`` variables.
    """

    kind: str
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.split < 0:
            raise ValueError("block split must be non-negative")

    @cached_property
    def key(self):
        if self.kind == "lex":
            return tuple
        if self.kind == "grlex":
            return lambda m: (sum(m), m)
        if self.kind == "grevlex":
            return _grevlex_key
        k = self.split
        return lambda m: (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def __str__(self):
        return f"block({self.split})" if self.kind == "block" else self.kind


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")


def block_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


def order_from_name(name: str) -> MonomialOrder:
    return {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}[name]


def cmp_monomials(order: MonomialOrder, m1: Sequence[int], m2: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    if len(m1) != len(m2):
        raise ArityMismatch(f"monomials of length {len(m1)} and {len(m2)}")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring over QQ (characteristic 0) or GF(p).

    The grading is metadata: it does not take part in ring equality.
    """

    variables: tuple[str, ...]
    characteristic: int = 0
    grading: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        for v in self.variables:
            if not _IDENT.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        if self.grading is not None:
            object.__setattr__(self, "grading", tuple(int(w) for w in self.grading))
            if len(self.grading) != len(self.variables):
                raise ArityMismatch("grading length differs from variable count")

    @cached_property
    def field(self):
        return QQ if self.characteristic == 0 else PrimeField(self.characteristic)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(name) from None

    @cached_property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @cached_property
    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise ArityMismatch(f"expected {self.nvars} exponents, got {len(exps)}")
        return Polynomial(self, {tuple(exps): self.field(coeff)})

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial._raw(self, {tuple(exps): self.field(1)})

    @property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def fresh_name(self, base: str = "t") -> str:
        name = base
        n = 0
        while name in self._index:
            n += 1
            name = f"{base}{n}"
        return name

    def prepend(self, names: Sequence[str]) -> "PolyRing":
        """Ring with ``names`` placed before the current variables."""
        grading = None if self.grading is None else (0,) * len(names) + self.grading
        return PolyRing(tuple(names) + self.variables, self.characteristic, grading)

    def drop_leading(self, k: int) -> "PolyRing":
        grading = None if self.grading is None else self.grading[k:]
        return PolyRing(self.variables[k:], self.characteristic, grading)

    def __str__(self):
        base = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        return f"{base}[{','.join(self.variables)}]"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _add_into(acc: dict, terms: Mapping, scale=None, shift: Monomial | None = None) -> None:
    """``acc += scale * x^shift * terms`` in place, dropping cancelled terms."""
    for m, c in terms.items():
        if shift is not None:
            m = tuple(x + y for x, y in zip(m, shift))
        if scale is not None:
            c = c * scale
        v = acc.get(m)
        if v is None:
            acc[m] = c
        else:
            v = v + c
            if v:
                acc[m] = v
            else:
                del acc[m]


class Polynomial:
    """An immutable polynomial; equality is equality of term dictionaries."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object] | None = None):
        conv = ring.field
        n = ring.nvars
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise ArityMismatch(f"monomial {m} in a ring with {n} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = conv(c)
            if c:
                clean[m] = clean[m] + c if m in clean else c
                if not clean[m]:
                    del clean[m]
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> "Polynomial":
        # caller guarantees normalized terms and takes no further reference
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, object]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_coefficient(self):
        return self._terms.get((0,) * self.ring.nvars, self.ring.field(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self._terms), default=-1)

    def support(self) -> frozenset[int]:
        """Indices of variables that occur."""
        return frozenset(i for m in self._terms for i, e in enumerate(m) if e)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder):
        return self._terms[self.leading_monomial(order)]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, object]]:
        """Terms in descending order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, ModP)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        _add_into(acc, other._terms)
        return Polynomial._raw(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        _add_into(acc, other._terms, scale=-1)
        return Polynomial._raw(self.ring, acc)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ModP)):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict = {}
        for m, c in b.items():
            _add_into(acc, a, scale=c, shift=m)
        return Polynomial._raw(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, mono: Monomial, coeff=1) -> "Polynomial":
        c = self.ring.field(coeff)
        if not c:
            return self.ring.zero
        return Polynomial._raw(
            self.ring,
            {tuple(x + y for x, y in zip(m, mono)): v * c for m, v in self._terms.items()},
        )

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction, ModP)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, {self.ring})"

    # -- ring changes ------------------------------------------------------

    def embed(self, ring: PolyRing, positions: Sequence[int]) -> "Polynomial":
        """Send variable ``i`` to variable ``positions[i]`` of ``ring``."""
        n = ring.nvars
        out = {}
        for m, c in self._terms.items():
            e = [0] * n
            for i, x in enumerate(m):
                e[positions[i]] += x
            out[tuple(e)] = c
        return Polynomial(ring, out)

    def drop_leading(self, ring: PolyRing, k: int) -> "Polynomial":
        """Restrict to ``ring`` by removing the first ``k`` (unused) variables."""
        out = {}
        for m, c in self._terms.items():
            if any(m[:k]):
                raise ValueError(f"{self} involves an eliminated variable")
            out[m[k:]] = c
        return Polynomial._raw(ring, out)


def check_same_ring(*polys: Polynomial) -> PolyRing:
    ring = polys[0].ring
    for p in polys[1:]:
        if p.ring != ring:
            raise RingMismatch(f"{ring} vs {p.ring}")
    return ring


# ---------------------------------------------------------------------------
# printing and parsing
# ---------------------------------------------------------------------------


def _format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    if not f._terms:
        return "0"
    names = f.ring.variables
    out = []
    for i, (m, c) in enumerate(f.sorted_terms(order)):
        negative = isinstance(c, Fraction) and c < 0
        mag = -c if negative else c
        mono = _format_monomial(m, names)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch: str):
        kind, val, pos = self.take()
        if kind != "op" or val != ch:
            raise PolynomialSyntaxError(f"expected {ch!r}, found {val or 'end of input'!r}", pos)

    def is_op(self, ch: str) -> bool:
        kind, val, _ = self.peek()
        return kind == "op" and val == ch

    def expr(self) -> Polynomial:
        sign = 1
        if self.is_op("-") or self.is_op("+"):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.is_op("+") or self.is_op("-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.is_op("*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.base()
        if self.is_op("^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise PolynomialSyntaxError("exponent must be a natural number", pos)
            base = base ** int(val)
        return base

    def base(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "num":
            if self.is_op("/"):
                self.take()
                k2, den, p2 = self.take()
                if k2 != "num":
                    raise PolynomialSyntaxError("denominator must be a natural number", p2)
                if int(den) == 0:
                    raise PolynomialSyntaxError("zero denominator", p2)
                return self.ring.const(self.ring.field.fraction(int(val), int(den)))
            return self.ring.const(int(val))
        if kind == "var":
            if val not in self.ring.variables:
                raise UnknownVariable(val, pos)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolynomialSyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` (operators ``+ - * ^``, fractions ``a/b``) into ``ring``.

    Multiplication must be explicit: ``X*Z`` is a product, ``XZ`` is an
    unknown variable.
    """
    parser = _Parser(text, ring)
    result = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise PolynomialSyntaxError(f"unexpected {val!r}", pos)
    return result


# ---------------------------------------------------------------------------
# gradings
# ---------------------------------------------------------------------------


def _weights(f: Polynomial, weights: Sequence[int] | None) -> Sequence[int]:
    w = f.ring.grading if weights is None else weights
    if w is None:
        raise ValueError(f"{f.ring} carries no grading and no weights were given")
    if len(w) != f.ring.nvars:
        raise ArityMismatch("weight vector length differs from variable count")
    return w


def weighted_degree(m: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(m, weights))


def homogeneous_degree(f: Polynomial, weights: Sequence[int] | None = None) -> int | None:
    """Weighted degree of ``f`` if ``f`` is homogeneous, else ``None``."""
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no degree")
    w = _weights(f, weights)
    degrees = {weighted_degree(m, w) for m in f.terms}
    return degrees.pop() if len(degrees) == 1 else None


def occurring_degrees(f: Polynomial, weights: Sequence[int] | None = None) -> list[int]:
    w = _weights(f, weights)
    return sorted({weighted_degree(m, w) for m in f.terms})


def project_degree(f: Polynomial, d: int, weights: Sequence[int] | None = None) -> Polynomial:
    """The degree-``d`` homogeneous component of ``f``.

    For a grading whose degree-zero part is a subring ``A`` this is the
    ``A``-linear retraction exhibiting ``A`` as a direct summand.
    """
    if f.is_zero():
        return f
    w = _weights(f, weights)
    return Polynomial._raw(
        f.ring, {m: c for m, c in f.terms.items() if weighted_degree(m, w) == d}
    )


def poly_arith(op: str, f: Polynomial, g) -> Polynomial:
    """Dispatch helper mirroring the operator overloads (``add/sub/mul/scale``)."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        if not isinstance(g, Polynomial):
            raise TypeError("mul expects a polynomial; use 'scale' for coefficients")
        return f * g
    if op == "scale":
        if isinstance(g, Polynomial):
            raise TypeError("scale expects a coefficient")
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def iter_monomials(nvars: int, max_degree: int) -> Iterator[Monomial]:
    """All exponent vectors of total degree at most ``max_degree``."""
    if nvars == 0:
        yield ()
        return
    for d in range(max_degree + 1):
        for m in _compositions(d, nvars):
            yield m


def _compositions(total: int, parts: int) -> Iterator[Monomial]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def polys_from_text(ring: PolyRing, texts: Iterable[str]) -> list[Polynomial]:
    return [parse_poly(t, ring) for t in texts]


__all__ = [
    "GREVLEX",
    "GRLEX",
    "LEX",
    "ModP",
    "Monomial",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "QQ",
    "block_order",
    "check_same_ring",
    "cmp_monomials",
    "format_poly",
    "homogeneous_degree",
    "iter_monomials",
    "occurring_degrees",
    "order_from_name",
    "parse_poly",
    "poly_arith",
    "project_degree",
    "weighted_degree",
]
