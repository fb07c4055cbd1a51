"""A deliberately limited factorizer.

Only the shapes below are recognized; anything else is reported as
undecided (``None``) so callers can fall back to an honest "unknown":

* a variable dividing every term (monomial-times-polynomial split);
* binomials ``u^n - r^n v^n`` with a rational ``n``-th root ``r``;
* univariate polynomials of degree at most 4;
* bivariate polynomials of total degree at most 2 (characteristic 0);
* ``m*W - c`` with ``m`` a monomial, ``W`` a variable of degree one not
  in ``m`` and ``c`` a nonzero constant (irreducible by Gauss' lemma).

The univariate and bivariate cases defer to sympy's factorizer.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy

from .groebner import divide
from .polycore import GREVLEX, ModP, Polynomial

MAX_UNIVARIATE_DEGREE = 4


def _nth_root(q: Fraction, n: int) -> Fraction | None:
    def iroot(a: int) -> int | None:
        r = round(a ** (1.0 / n)) if a else 0
        for c in (r - 1, r, r + 1):
            if c >= 0 and c**n == a:
                return c
        lo, hi = 0, a
        while lo <= hi:
            mid = (lo + hi) // 2
            v = mid**n
            if v == a:
                return mid
            if v < a:
                lo = mid + 1
            else:
                hi = mid - 1
        return None

    sign = 1
    if q < 0:
        if n % 2 == 0:
            return None
        sign = -1
    num, den = iroot(abs(q.numerator)), iroot(q.denominator)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial | None:
    res = divide(f, [g], GREVLEX)
    return res.quotients[0] if res.remainder.is_zero() else None


def monomial_split(f: Polynomial) -> tuple[Polynomial, Polynomial] | None:
    """``(x, f/x)`` for the first variable ``x`` dividing ``f``, when both are non-units."""
    if f.total_degree() < 2:
        return None
    ring = f.ring
    for i in range(ring.nvars):
        if all(m[i] > 0 for m in f.terms):
            x = ring.var(ring.variables[i])
            return x, exact_quotient(f, x)
    return None


def binomial_split(f: Polynomial) -> tuple[Polynomial, Polynomial] | None:
    """Split ``c1*u^n + c2*v^n`` through the linear factor ``u - r*v``."""
    if len(f) != 2 or f.ring.characteristic != 0:
        return None
    (m1, c1), (m2, c2) = f.sorted_terms()
    if any(a and b for a, b in zip(m1, m2)):
        return None  # common variable: handled by monomial_split
    n = 0
    for e in m1 + m2:
        n = gcd(n, e)
    if n < 2:
        return None
    r = _nth_root(-c2 / c1, n)
    if r is None:
        return None
    ring = f.ring
    u = ring.monomial(tuple(e // n for e in m1))
    v = ring.monomial(tuple(e // n for e in m2))
    g = u - v * r
    h = exact_quotient(f, g)
    if h is None or h.is_constant():
        return None
    return g, h


def _to_sympy(f: Polynomial, idx: list[int]):
    syms = sympy.symbols([f"x{i}" for i in idx])
    data = {}
    for m, c in f.terms.items():
        key = tuple(m[i] for i in idx)
        if isinstance(c, ModP):
            data[key] = c.value
        else:
            data[key] = sympy.Rational(c.numerator, c.denominator)
    p = f.ring.characteristic
    if p:
        return sympy.Poly.from_dict(data, *syms, modulus=p)
    return sympy.Poly.from_dict(data, *syms, domain=sympy.QQ)


def _from_sympy(poly, f: Polynomial, idx: list[int]) -> Polynomial:
    ring = f.ring
    p = ring.characteristic
    out = {}
    for key, c in poly.as_dict().items():
        e = [0] * ring.nvars
        for i, k in zip(idx, key):
            e[i] = k
        if p:
            out[tuple(e)] = int(c) % p
        else:
            c = sympy.Rational(c)
            out[tuple(e)] = Fraction(int(c.p), int(c.q))
    return Polynomial(ring, out)


def sympy_factors(f: Polynomial) -> list[Polynomial] | None:
    """Irreducible factors (with multiplicity, unit dropped) in the supported range."""
    idx = sorted(f.support())
    deg = f.total_degree()
    if len(idx) == 1 and deg <= MAX_UNIVARIATE_DEGREE:
        pass
    elif len(idx) == 2 and deg <= 2 and f.ring.characteristic == 0:
        pass
    else:
        return None
    _, factors = _to_sympy(f, idx).factor_list()
    out = []
    for poly, mult in factors:
        out.extend([_from_sympy(poly, f, idx)] * mult)
    return out


def _linear_binomial(f: Polynomial) -> bool:
    if len(f) != 2:
        return False
    (m1, _), (m2, c2) = f.sorted_terms()
    if any(m2):
        return False
    return any(e == 1 for e in m1) and sum(m1) >= 1


def is_irreducible(f: Polynomial) -> bool | None:
    """True/False when decided by a recognized pattern, ``None`` otherwise."""
    if f.is_constant():
        return False
    if f.total_degree() == 1:
        return True
    if monomial_split(f) is not None:
        return False
    if _linear_binomial(f):
        return True
    if binomial_split(f) is not None:
        return False
    factors = sympy_factors(f)
    if factors is None:
        return None
    return len(factors) == 1


def splits(f: Polynomial) -> list[tuple[Polynomial, Polynomial]]:
    """Known factorizations ``f = a*b`` into non-units, most specific first."""
    out = []
    s = monomial_split(f)
    if s is not None:
        out.append(s)
    s = binomial_split(f)
    if s is not None:
        out.append(s)
    factors = sympy_factors(f)
    if factors and len(factors) > 1:
        for a in factors:
            a = a.monic(GREVLEX)
            out.append((a, exact_quotient(f, a)))
    return out
