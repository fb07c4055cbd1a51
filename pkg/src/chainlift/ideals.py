"""Ideals of polynomial rings and the operations built on elimination.

Intersection, quotient, saturation and radical membership all go through
one code path: adjoin an auxiliary variable in front and eliminate it with
a block order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from . import factor
from .errors import RingMismatch, ZeroPolynomialError
from .groebner import GroebnerBasis, buchberger, extended_reduce
from .polycore import GREVLEX, MonomialOrder, Polynomial, PolyRing, block_order, format_poly


class Ideal:
    """A finitely generated ideal with memoized reduced Groebner bases.

    ``==`` is ideal equality (same reduced grevlex basis), so ideals can be
    used in sets and as dictionary keys.
    """

    __slots__ = ("ring", "gens", "_gb_cache")

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = ()):
        gens = tuple(g for g in gens if not g.is_zero())
        for g in gens:
            if g.ring != ring:
                raise RingMismatch(f"generator {g} lives in {g.ring}, not {ring}")
        self.ring = ring
        self.gens = gens
        self._gb_cache: dict[tuple[MonomialOrder, bool], GroebnerBasis] = {}

    @classmethod
    def parse(cls, ring: PolyRing, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb_cache.get((order, False))
        if gb is None:
            gb = self._gb_cache.get((order, True))
        if gb is None:
            gb = buchberger(self.gens, order)
            self._gb_cache[(order, False)] = gb
        return gb

    def groebner_cofactors(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb_cache.get((order, True))
        if gb is None:
            gb = buchberger(self.gens, order, track_cofactors=True)
            self._gb_cache[(order, True)] = gb
        return gb

    def canonical(self) -> tuple[Polynomial, ...]:
        """Reduced grevlex basis, by degree, then largest leading monomial first."""
        polys = sorted(
            self.groebner(GREVLEX).polys,
            key=lambda g: GREVLEX.key(g.leading_monomial(GREVLEX)),
            reverse=True,
        )
        return tuple(sorted(polys, key=lambda g: g.total_degree()))

    def canonical_str(self) -> str:
        gb = self.canonical()
        return "(" + ", ".join(format_poly(g) for g in gb) + ")" if gb else "(0)"

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def __contains__(self, f: Polynomial) -> bool:
        return membership(f, self)

    def __add__(self, other: "Ideal") -> "Ideal":
        _same(self, other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _same(self, other)
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def scaled(self, f: Polynomial) -> "Ideal":
        return Ideal(self.ring, [f * g for g in self.gens])

    def with_gens(self, *polys: Polynomial) -> "Ideal":
        return Ideal(self.ring, self.gens + tuple(polys))

    def __le__(self, other: "Ideal") -> bool:
        return is_subideal(self, other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash((self.ring, self.canonical()))

    def __str__(self):
        return "(" + ", ".join(format_poly(g) for g in self.gens) + ")" if self.gens else "(0)"

    def __repr__(self):
        return f"Ideal{self} in {self.ring}"


def _same(I: Ideal, J: Ideal) -> None:
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")


def membership(f: Polynomial, I: Ideal, with_combination: bool = False):
    """``f in I``; with ``with_combination`` also return ``f = sum c_j * gens_j``.

    The combination is ``None`` when ``f`` is not a member.
    """
    if f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    if not with_combination:
        return I.groebner().contains(f)
    gb = I.groebner_cofactors()
    if not gb.polys:
        return (f.is_zero(), [] if f.is_zero() else None)
    rem, comb = extended_reduce(f, gb)
    return (True, comb) if rem.is_zero() else (False, None)


def is_subideal(J: Ideal, I: Ideal) -> bool:
    """``J`` contained in ``I``."""
    _same(J, I)
    gb = I.groebner()
    return all(gb.contains(g) for g in J.gens)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _same(I, J)
    return I.canonical() == J.canonical()


def eliminate(I: Ideal, k: int) -> Ideal:
    """``I`` intersected with the subring of all but the first ``k`` variables."""
    sub = I.ring.drop_leading(k)
    if k == 0:
        return Ideal(sub, I.gens)
    gb = I.groebner(block_order(k))
    keep = [g.drop_leading(sub, k) for g in gb if not any(any(m[:k]) for m in g.terms)]
    return Ideal(sub, keep)


def _with_aux(ring: PolyRing) -> tuple[PolyRing, Polynomial, list[int]]:
    big = ring.prepend([ring.fresh_name("t")])
    return big, big.var(big.variables[0]), list(range(1, big.nvars))


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    _same(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring)
    big, t, pos = _with_aux(I.ring)
    gens = [t * g.embed(big, pos) for g in I.gens]
    gens += [(1 - t) * g.embed(big, pos) for g in J.gens]
    return eliminate(Ideal(big, gens), 1)


def quotient(I: Ideal, f: Polynomial) -> Ideal:
    """``(I : f) = {g : g*f in I}``."""
    if f.is_zero():
        raise ZeroPolynomialError("quotient by the zero element")
    if f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    if f.is_constant():
        return Ideal(I.ring, I.gens)
    both = intersect(I, Ideal(I.ring, [f]))
    out = []
    for g in both.gens:
        q = factor.exact_quotient(g, f)
        assert q is not None, "intersection with (f) must be divisible by f"
        out.append(q)
    return Ideal(I.ring, out)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """``(I : f^∞)`` by eliminating ``t`` from ``I + (1 - t*f)``."""
    if f.is_zero():
        raise ZeroPolynomialError("saturation by the zero element")
    if f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    if f.is_constant():
        return Ideal(I.ring, I.gens)
    big, t, pos = _with_aux(I.ring)
    gens = [g.embed(big, pos) for g in I.gens] + [1 - t * f.embed(big, pos)]
    return eliminate(Ideal(big, gens), 1)


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """Whether some power of ``f`` lies in ``I`` (Rabinowitsch trick)."""
    if f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    if f.is_zero():
        return True
    big, t, pos = _with_aux(I.ring)
    gens = [g.embed(big, pos) for g in I.gens] + [1 - t * f.embed(big, pos)]
    return Ideal(big, gens).is_unit()


# ---------------------------------------------------------------------------
# primality bookkeeping
# ---------------------------------------------------------------------------


class Primality(enum.Enum):
    VERIFIED_PRIME = "VerifiedPrime"
    DISPROVED = "Disproved"
    ASSUMED = "Assumed"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PrimalityStatus:
    kind: Primality
    reason: str = ""
    witness: tuple[Polynomial, Polynomial] | None = None

    @property
    def ok_for_chain(self) -> bool:
        return self.kind in (Primality.VERIFIED_PRIME, Primality.ASSUMED)

    def __str__(self):
        return f"{self.kind.value}({self.reason})" if self.reason else self.kind.value


def assumed(reason: str = "asserted by caller") -> PrimalityStatus:
    return PrimalityStatus(Primality.ASSUMED, reason)


def _is_linear(g: Polynomial) -> bool:
    return g.total_degree() == 1


def primality_status(I: Ideal) -> PrimalityStatus:
    """Decide primality for the recognized patterns only.

    Verified: the zero ideal; ideals whose reduced basis is linear forms plus
    at most one irreducible polynomial.  In a reduced basis the leading
    variables of the linear forms occur nowhere else, so the quotient is a
    polynomial ring modulo that one polynomial.  Disproved: some basis element
    splits as ``a*b`` with neither factor in ``I``.
    """
    gb = I.groebner()
    if gb.is_unit():
        return PrimalityStatus(Primality.DISPROVED, "unit ideal")
    if not gb.polys:
        return PrimalityStatus(Primality.VERIFIED_PRIME, "zero ideal")
    linear = [g for g in gb if _is_linear(g)]
    rest = [g for g in gb if not _is_linear(g)]
    if all(g.is_monomial() for g in linear):
        names = I.ring.variables
        lin_text = "variables " + ", ".join(names[next(iter(g.support()))] for g in linear)
    else:
        lin_text = "linear forms " + ", ".join(format_poly(g) for g in linear)
    if not rest:
        return PrimalityStatus(Primality.VERIFIED_PRIME, f"generated by {lin_text}")
    if len(rest) == 1 and factor.is_irreducible(rest[0]):
        reason = f"irreducible {format_poly(rest[0])}"
        if linear:
            reason = f"{lin_text} plus {reason}"
        return PrimalityStatus(Primality.VERIFIED_PRIME, reason)
    for g in rest:
        for a, b in factor.splits(g):
            if not gb.contains(a) and not gb.contains(b):
                return PrimalityStatus(
                    Primality.DISPROVED, f"{format_poly(g)} = ({a})*({b})", (a, b)
                )
    return PrimalityStatus(Primality.UNKNOWN, "no recognized pattern")


# ---------------------------------------------------------------------------
# minimal primes
# ---------------------------------------------------------------------------


def _monomial_minimal_primes(ring: PolyRing, monomials: Sequence[Polynomial]) -> list[Ideal]:
    """Minimal vertex covers of the supports of ``monomials``."""
    supports = [g.support() for g in monomials]
    covers: list[frozenset[int]] = []
    for size in range(ring.nvars + 1):
        for cand in combinations(range(ring.nvars), size):
            cset = frozenset(cand)
            if any(c <= cset for c in covers):
                continue
            if all(s & cset for s in supports):
                covers.append(cset)
    return [Ideal(ring, [ring.var(ring.variables[i]) for i in sorted(c)]) for c in covers]


def ideal_sort_key(I: Ideal) -> tuple[int, str]:
    return (len(I.canonical()), I.canonical_str())


MAX_SPLIT_DEPTH = 24


class MinimalPrimes(NamedTuple):
    primes: list[Ideal]
    complete: bool
    unsplit: list[Ideal]


def minimal_primes_structured(I: Ideal) -> MinimalPrimes:
    """Minimal primes found by pattern-driven splitting.

    Returns ``(primes, complete, unsplit)``.  For monomial ideals the answer is exact.
    Otherwise a basis element ``a*b`` splits ``V(I)`` into ``V(I + (a))``
    and ``V(I : a^∞)``; branches ending in a recognized prime are kept, and
    any branch that cannot be split or verified makes ``complete`` false.
    """
    primes: list[Ideal] = []
    stuck: list[Ideal] = []
    _split(I, primes, stuck, 0)
    minimal: list[Ideal] = []
    for P in sorted(primes, key=ideal_sort_key):
        if not any(is_subideal(Q, P) for Q in minimal):
            minimal.append(P)
    return MinimalPrimes(minimal, not stuck, stuck)


def _split(I: Ideal, primes: list[Ideal], stuck: list[Ideal], depth: int) -> None:
    gb = I.groebner()
    if gb.is_unit():
        return
    if all(g.is_monomial() for g in gb):
        primes.extend(_monomial_minimal_primes(I.ring, gb.polys))
        return
    status = primality_status(I)
    if status.kind is Primality.VERIFIED_PRIME:
        primes.append(Ideal(I.ring, gb.polys))
        return
    if depth < MAX_SPLIT_DEPTH:
        for g in gb:
            for a, b in factor.splits(g):
                if gb.contains(a) or gb.contains(b):
                    continue
                _split(saturate(I, a), primes, stuck, depth + 1)
                _split(I.with_gens(a), primes, stuck, depth + 1)
                return
    stuck.append(I)
