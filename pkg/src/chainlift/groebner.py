"""Multivariate division and Buchberger's algorithm with cofactor tracking.

Everything here is deterministic: reducers are tried in list order and
S-pairs are processed by (degree of lcm, first index, second index), so a
cofactor matrix is reproducible run to run.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import MissingCofactors, ZeroPolynomialError
from .polycore import (
    Monomial,
    MonomialOrder,
    Polynomial,
    _add_into,
    check_same_ring,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)


@dataclass(frozen=True)
class DivisionResult:
    quotients: tuple[Polynomial, ...]
    remainder: Polynomial


def _reduce_terms(terms, lead, bodies, key):
    """Fully reduce a term dict by ``bodies`` (leading data in ``lead``).

    Returns ``(quotient dicts, remainder dict)``.
    """
    p = dict(terms)
    rem = {}
    quots = [{} for _ in bodies]
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lc) in enumerate(lead):
            if monomial_divides(lm, m):
                t = monomial_div(m, lm)
                coef = c / lc
                _add_into(quots[i], {t: coef})
                _add_into(p, bodies[i], scale=-coef, shift=t)
                break
        else:
            rem[m] = c
            del p[m]
    return quots, rem


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder) -> DivisionResult:
    """Multivariate division: ``f = sum(q_i * g_i) + r`` with ``r`` fully reduced."""
    ring = check_same_ring(f, *divisors) if divisors else f.ring
    if any(g.is_zero() for g in divisors):
        raise ZeroPolynomialError("division by the zero polynomial")
    lead = [(g.leading_monomial(order), g.leading_coefficient(order)) for g in divisors]
    quots, rem = _reduce_terms(f.terms, lead, [g.terms for g in divisors], order.key)
    return DivisionResult(
        tuple(Polynomial._raw(ring, q) for q in quots),
        Polynomial._raw(ring, rem),
    )


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis, ascending by leading monomial.

    ``cofactors[i][j]`` is the coefficient of ``generators[j]`` in
    ``polys[i]`` when tracking was requested.
    """

    polys: tuple[Polynomial, ...]
    order: MonomialOrder
    generators: tuple[Polynomial, ...]
    cofactors: tuple[tuple[Polynomial, ...], ...] | None = None

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.polys]

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.polys:
            return f
        return divide(f, self.polys, self.order).remainder

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = monomial_lcm(lf, lg)
    return f.mul_term(monomial_div(lcm, lf), 1 / f.leading_coefficient(order)) - g.mul_term(
        monomial_div(lcm, lg), 1 / g.leading_coefficient(order)
    )


def _combine(ring, cof_rows, weights, base=None):
    """``base + sum(w_k * cof_rows[k])`` for term-dict weights, row by row."""
    m = len(cof_rows[0]) if cof_rows else len(base)
    out = list(base) if base is not None else [ring.zero] * m
    for k, w in weights:
        if not w:
            continue
        wp = Polynomial._raw(ring, w)
        row = cof_rows[k]
        for j in range(m):
            if row[j]:
                out[j] = out[j] + wp * row[j]
    return out


def buchberger(
    gens: Sequence[Polynomial], order: MonomialOrder, track_cofactors: bool = False
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Zero generators are dropped.  With ``track_cofactors`` each basis
    element is expressed over the (nonzero) input generators.
    """
    gens = tuple(g for g in gens if not g.is_zero())
    if not gens:
        return GroebnerBasis((), order, (), () if track_cofactors else None)
    ring = check_same_ring(*gens)
    key = order.key
    m = len(gens)

    bodies: list[dict] = []
    lead: list[tuple[Monomial, object]] = []
    cofs: list[list[Polynomial]] = []

    pending: set[tuple[int, int]] = set()
    heap: list[tuple[int, int, int]] = []

    def add(terms: dict, cof: list[Polynomial] | None):
        lm = max(terms, key=key)
        inv = 1 / terms[lm]
        terms = {mm: c * inv for mm, c in terms.items()}
        n = len(bodies)
        bodies.append(terms)
        lead.append((lm, terms[lm]))
        if track_cofactors:
            cofs.append([c * inv for c in cof])
        for i in range(n):
            lcm = monomial_lcm(lead[i][0], lm)
            heapq.heappush(heap, (sum(lcm), i, n))
            pending.add((i, n))

    for j, g in enumerate(gens):
        unit = [ring.zero] * m
        unit[j] = ring.one
        add(dict(g.terms), unit)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = lead[i][0], lead[j][0]
        lcm = monomial_lcm(li, lj)
        if sum(lcm) == sum(li) + sum(lj):
            continue  # coprime leading monomials
        if _chain_criterion(i, j, lcm, lead, pending):
            continue
        ti, tj = monomial_div(lcm, li), monomial_div(lcm, lj)
        s: dict = {}
        _add_into(s, bodies[i], shift=ti)
        _add_into(s, bodies[j], scale=-1, shift=tj)
        quots, rem = _reduce_terms(s, lead, bodies, key)
        if not rem:
            continue
        cof = None
        if track_cofactors:
            base = _combine(ring, cofs, [(i, {ti: ring.field(1)}), (j, {tj: ring.field(-1)})])
            cof = _combine(ring, cofs, [(k, {mm: -c for mm, c in q.items()}) for k, q in enumerate(quots)], base)
        add(rem, cof)

    # minimalize: ascending by leading monomial, drop elements with a divisible head
    idx = sorted(range(len(bodies)), key=lambda k: key(lead[k][0]))
    kept: list[int] = []
    for k in idx:
        if not any(monomial_divides(lead[h][0], lead[k][0]) for h in kept):
            kept.append(k)

    # interreduce; leading monomials never change so one pass suffices
    cur_bodies = {k: bodies[k] for k in kept}
    cur_cofs = {k: cofs[k] for k in kept} if track_cofactors else None
    for k in kept:
        others = [h for h in kept if h != k]
        head = lead[k]
        tail = dict(cur_bodies[k])
        del tail[head[0]]
        quots, rem = _reduce_terms(
            tail, [lead[h] for h in others], [cur_bodies[h] for h in others], key
        )
        rem[head[0]] = head[1]
        cur_bodies[k] = rem
        if track_cofactors:
            rows = [cur_cofs[h] for h in others]
            cur_cofs[k] = _combine(
                ring, rows, [(n, {mm: -c for mm, c in q.items()}) for n, q in enumerate(quots)], cur_cofs[k]
            )

    polys = tuple(Polynomial._raw(ring, cur_bodies[k]) for k in kept)
    cof_matrix = tuple(tuple(cur_cofs[k]) for k in kept) if track_cofactors else None
    return GroebnerBasis(polys, order, gens, cof_matrix)


def _chain_criterion(i, j, lcm, lead, pending) -> bool:
    for k, (lk, _) in enumerate(lead):
        if k == i or k == j:
            continue
        if not monomial_divides(lk, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def extended_reduce(f: Polynomial, gb: GroebnerBasis) -> tuple[Polynomial, list[Polynomial]]:
    """Reduce ``f`` and express ``f - remainder`` over the original generators."""
    if gb.cofactors is None:
        raise MissingCofactors("Groebner basis was computed without cofactor tracking")
    ring = f.ring
    m = len(gb.generators)
    if not gb.polys:
        return f, []
    res = divide(f, gb.polys, gb.order)
    comb = [ring.zero] * m
    for q, row in zip(res.quotients, gb.cofactors):
        if q:
            for j in range(m):
                if row[j]:
                    comb[j] = comb[j] + q * row[j]
    return res.remainder, comb


def is_groebner(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    polys = [p for p in polys if p]
    for a in range(len(polys)):
        for b in range(a + 1, len(polys)):
            if divide(spoly(polys[a], polys[b], order), polys, order).remainder:
                return False
    return True
