"""Presented algebras, ring maps, extension and contraction of ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ArityMismatch, IllDefinedMap, RingMismatch
from .ideals import Ideal, eliminate, ideal_equal, is_subideal
from .polycore import GREVLEX, Polynomial, PolyRing


@dataclass(frozen=True)
class PresentedRing:
    """``ambient / relations``; a plain polynomial ring has no relations."""

    ambient: PolyRing
    relations: tuple[Polynomial, ...] = ()

    def __post_init__(self):
        rels = tuple(r for r in self.relations if not r.is_zero())
        for r in rels:
            if r.ring != self.ambient:
                raise RingMismatch(f"relation {r} does not live in {self.ambient}")
        object.__setattr__(self, "relations", rels)

    @property
    def relation_ideal(self) -> Ideal:
        return Ideal(self.ambient, self.relations)

    def ideal(self, gens: Iterable[Polynomial] = ()) -> Ideal:
        """The ideal generated by ``gens`` together with the relations."""
        return Ideal(self.ambient, tuple(gens) + self.relations)

    def parse_ideal(self, texts: Iterable[str]) -> Ideal:
        return self.ideal(self.ambient.parse(t) for t in texts)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if not self.relations:
            return f
        return self.relation_ideal.groebner(GREVLEX).reduce(f)

    def __str__(self):
        if not self.relations:
            return str(self.ambient)
        return f"{self.ambient}/({', '.join(map(str, self.relations))})"


def as_presented(ring: PolyRing | PresentedRing) -> PresentedRing:
    return ring if isinstance(ring, PresentedRing) else PresentedRing(ring)


@dataclass(frozen=True, eq=False)
class RingMap:
    """``phi: source -> target`` given by the images of the source variables."""

    source: PresentedRing
    target: PresentedRing
    images: tuple[Polynomial, ...]
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "source", as_presented(self.source))
        object.__setattr__(self, "target", as_presented(self.target))
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.source.ambient.nvars:
            raise ArityMismatch(
                f"{len(self.images)} images for {self.source.ambient.nvars} source variables"
            )
        for img in self.images:
            if img.ring != self.target.ambient:
                raise RingMismatch(f"image {img} does not live in {self.target.ambient}")
        if self.source.ambient.characteristic != self.target.ambient.characteristic:
            raise RingMismatch("source and target characteristics differ")
        if self.validate:
            bad = check_well_defined(self)
            if bad is not None:
                raise IllDefinedMap(bad)

    @classmethod
    def parse(cls, source, target, texts: Sequence[str], validate: bool = True) -> "RingMap":
        target = as_presented(target)
        return cls(source, target, tuple(target.ambient.parse(t) for t in texts), validate)

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply(self, f)

    def __str__(self):
        pairs = ", ".join(
            f"{v} -> {img}" for v, img in zip(self.source.ambient.variables, self.images)
        )
        return f"{self.source} -> {self.target}: {pairs}"


def substitute(f: Polynomial, images: Sequence[Polynomial], ring: PolyRing) -> Polynomial:
    powers: list[dict[int, Polynomial]] = [{0: ring.one} for _ in images]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        if e not in cache:
            cache[e] = images[i] ** e
        return cache[e]

    out = ring.zero
    for m, c in f.terms.items():
        term = ring.const(c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


def check_well_defined(phi: RingMap) -> Polynomial | None:
    """The first source relation whose image is not zero in the target, if any."""
    rels = phi.target.relation_ideal
    for rel in phi.source.relations:
        img = substitute(rel, phi.images, phi.target.ambient)
        if not rels.groebner().contains(img):
            return rel
    return None


def apply(phi: RingMap, f: Polynomial) -> Polynomial:
    """``phi(f)`` in normal form modulo the target relations."""
    if f.ring != phi.source.ambient:
        raise RingMismatch(f"{f} is not in {phi.source.ambient}")
    return phi.target.normal_form(substitute(f, phi.images, phi.target.ambient))


def extend_ideal(phi: RingMap, I: Ideal) -> Ideal:
    """``I*B``: images of the generators plus the target relations."""
    if I.ring != phi.source.ambient:
        raise RingMismatch(f"ideal lives in {I.ring}, not {phi.source.ambient}")
    return phi.target.ideal(apply(phi, g) for g in I.gens)


def _graph_ring(phi: RingMap) -> tuple[PolyRing, list[int], list[int]]:
    tvars = phi.target.ambient.variables
    taken = set(tvars)
    svars = []
    for v in phi.source.ambient.variables:
        name = v
        n = 0
        while name in taken:
            n += 1
            name = f"{v}_{n}"
        taken.add(name)
        svars.append(name)
    ring = PolyRing(tuple(tvars) + tuple(svars), phi.target.ambient.characteristic)
    nt = len(tvars)
    return ring, list(range(nt)), list(range(nt, nt + len(svars)))


def contract_ideal(phi: RingMap, J: Ideal) -> Ideal:
    """``phi^{-1}(J)`` via the graph ideal, eliminating the target variables."""
    if J.ring != phi.target.ambient:
        raise RingMismatch(f"ideal lives in {J.ring}, not {phi.target.ambient}")
    graph, tpos, spos = _graph_ring(phi)
    gens = [g.embed(graph, tpos) for g in J.gens + phi.target.relations]
    for j, img in enumerate(phi.images):
        y = graph.var(graph.variables[spos[j]])
        gens.append(y - img.embed(graph, tpos))
    elim = eliminate(Ideal(graph, gens), len(tpos))
    src = phi.source.ambient
    pulled = [Polynomial(src, g.terms) for g in elim.gens]
    return Ideal(src, tuple(pulled) + phi.source.relations)


def kernel(phi: RingMap) -> Ideal:
    return contract_ideal(phi, Ideal(phi.target.ambient))


@dataclass(frozen=True)
class ContractionCheck:
    """Outcome of comparing ``I`` with ``phi^{-1}(I*B)``."""

    ideal: Ideal
    contraction: Ideal
    witness: Polynomial | None

    @property
    def holds(self) -> bool:
        return self.witness is None

    def __str__(self):
        if self.holds:
            return f"Holds: contraction of {self.ideal} is itself"
        return f"Fails: {self.witness} lies in the contraction {self.contraction.canonical_str()} but not in {self.ideal}"


def contraction_property_check(phi: RingMap, I: Ideal) -> ContractionCheck:
    """Check ``I = phi^{-1}(I*B)`` for this one ideal."""
    I = phi.source.ideal(I.gens)
    C = contract_ideal(phi, extend_ideal(phi, I))
    if not is_subideal(I, C):
        raise RuntimeError(f"{I} is not contained in its own contraction {C}")
    if ideal_equal(I, C):
        return ContractionCheck(I, C, None)
    gb = I.groebner()
    witness = next(g for g in C.canonical() if not gb.contains(g))
    return ContractionCheck(I, C, witness)
