"""Ladders of ideals and multiplicative sets, obstruction certificates and
prime-chain lifting along a ring map.

A ladder is a list of ideals ``a_0..a_r`` in ``B`` together with
multiplicative sets ``F_0..F_r``.  It is *obstructed* when no chain of
primes ``q_0 ⊆ .. ⊆ q_r`` with ``a_i ⊆ q_i`` and ``q_i ∩ F_i = ∅`` can
exist.  Unrolling the recursive definition, obstruction happens exactly
when some product ``f_r···f_0`` (``f_i ∈ F_i``) lies in the telescoped ideal

    a_0 + f_0·a_1 + f_1f_0·a_2 + ... + f_{r-1}···f_0·a_r

and the coefficients of that membership form a certificate that can be
replayed with nothing but polynomial arithmetic.

The two formulations are converted into each other by
:func:`unroll_certificate` (membership to the recursive equations
``s_i + c_i = f_i·s_{i+1}``) and :func:`retelescope` (recursive equations
with arbitrary multipliers ``b_i`` back to a membership).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ArityMismatch, ChainError, LengthMismatch, RingMismatch, WitnessNotOutside
from .ideals import (
    Ideal,
    Primality,
    PrimalityStatus,
    assumed,
    ideal_equal,
    ideal_sort_key,
    is_subideal,
    membership,
    minimal_primes_structured,
    primality_status,
    saturate,
)
from .polycore import Polynomial, PolyRing
from .ringmaps import RingMap, apply, contract_ideal, extend_ideal

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# ladders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicativeSetFG:
    """The monoid of all finite products of ``gens`` (1 included)."""

    ring: PolyRing
    gens: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        if not self.gens:
            raise ValueError("a multiplicative set needs at least one generator")
        for g in self.gens:
            if g.is_zero():
                raise ValueError("0 cannot generate a multiplicative set used here")
            if g.ring != self.ring:
                raise RingMismatch(f"{g} does not live in {self.ring}")

    def element(self, exps: Sequence[int]) -> Polynomial:
        if len(exps) != len(self.gens):
            raise ArityMismatch(f"{len(exps)} exponents for {len(self.gens)} generators")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {tuple(exps)}")
        out = self.ring.one
        for g, e in zip(self.gens, exps):
            if e:
                out = out * g**e
        return out

    def __str__(self):
        return "<" + ", ".join(map(str, self.gens)) + ">"


@dataclass(frozen=True)
class LadderSpec:
    ring: PolyRing
    ideals: tuple[Ideal, ...]
    msets: tuple[MultiplicativeSetFG, ...]

    def __post_init__(self):
        object.__setattr__(self, "ideals", tuple(self.ideals))
        object.__setattr__(self, "msets", tuple(self.msets))
        if not self.ideals:
            raise ValueError("a ladder needs at least one level")
        if len(self.ideals) != len(self.msets):
            raise LengthMismatch(f"{len(self.ideals)} ideals but {len(self.msets)} sets")
        for obj in self.ideals + self.msets:
            if obj.ring != self.ring:
                raise RingMismatch(f"ladder component lives in {obj.ring}, not {self.ring}")

    @property
    def r(self) -> int:
        return len(self.ideals) - 1

    def picks_elements(self, picks: Sequence[Sequence[int]]) -> list[Polynomial]:
        if len(picks) != len(self.msets):
            raise ArityMismatch(f"{len(picks)} picks for {len(self.msets)} levels")
        return [F.element(e) for F, e in zip(self.msets, picks)]


def _prefixes(fs: Sequence[Polynomial], ring: PolyRing) -> list[Polynomial]:
    """``[1, f_0, f_1 f_0, ...]`` (one entry per level)."""
    out = [ring.one]
    for f in fs[:-1]:
        out.append(out[-1] * f)
    return out


def telescoped_ideal(ladder: LadderSpec, picks: Sequence[Sequence[int]]) -> Ideal:
    """``a_0 + f_0·a_1 + f_1 f_0·a_2 + ...`` for the picked ``f_i``."""
    fs = ladder.picks_elements(picks)
    return _telescoped(ladder, fs)


def _telescoped(ladder: LadderSpec, fs: Sequence[Polynomial]) -> Ideal:
    gens = []
    for pre, a in zip(_prefixes(fs, ladder.ring), ladder.ideals):
        gens.extend(pre * g for g in a.gens)
    return Ideal(ladder.ring, gens)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    difference: Polynomial

    @property
    def ok(self) -> bool:
        return self.difference.is_zero()


@dataclass(frozen=True)
class ObstructionCertificate:
    """``f_r···f_0 = sum_i sum_j coefficients[i][j] · f_{i-1}···f_0 · a_i.gens[j]``."""

    ladder: LadderSpec
    picks: tuple[tuple[int, ...], ...]
    coefficients: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "picks", tuple(tuple(p) for p in self.picks))
        object.__setattr__(self, "coefficients", tuple(tuple(c) for c in self.coefficients))
        if len(self.coefficients) != len(self.ladder.ideals):
            raise LengthMismatch("one coefficient row per ladder level is required")
        for row, a in zip(self.coefficients, self.ladder.ideals):
            if len(row) != len(a.gens):
                raise ArityMismatch(f"{len(row)} coefficients for {len(a.gens)} generators")
        self.ladder.picks_elements(self.picks)

    @property
    def elements(self) -> list[Polynomial]:
        return self.ladder.picks_elements(self.picks)

    def lhs(self) -> Polynomial:
        out = self.ladder.ring.one
        for f in self.elements:
            out = out * f
        return out

    def rhs(self) -> Polynomial:
        ring = self.ladder.ring
        out = ring.zero
        prefixes = _prefixes(self.elements, ring)
        for pre, row, a in zip(prefixes, self.coefficients, self.ladder.ideals):
            for c, g in zip(row, a.gens):
                if c:
                    out = out + c * pre * g
        return out


def verify_certificate(cert: ObstructionCertificate) -> IdentityCheck:
    """Replay the identity by exact arithmetic; no Groebner basis involved."""
    return IdentityCheck(cert.lhs() - cert.rhs())


@dataclass(frozen=True)
class UnrolledChain:
    """Equations ``f_0·s_1 = c_0`` and ``s_i + c_i = f_i·s_{i+1}`` with ``s_{r+1} = 1``.

    ``c_i`` lies in ``a_i``; ``s[i]`` holds ``s_i`` (``s[0]`` is 0).
    """

    f: tuple[Polynomial, ...]
    s: tuple[Polynomial, ...]
    c: tuple[Polynomial, ...]

    def holds(self) -> bool:
        r = len(self.f) - 1
        if self.f[0] * self.s[1] != self.c[0]:
            return False
        return all(self.s[i] + self.c[i] == self.f[i] * self.s[i + 1] for i in range(1, r + 1))


def unroll_certificate(cert: ObstructionCertificate) -> UnrolledChain:
    """Read a certificate as the recursive chain of equations.

    With ``c_k`` the level-``k`` part of the combination, set
    ``s_i = f_r···f_i - sum_{k>=i} c_k·f_{k-1}···f_i``.
    """
    ring = cert.ladder.ring
    fs = cert.elements
    r = len(fs) - 1
    cs = []
    for row, a in zip(cert.coefficients, cert.ladder.ideals):
        c = ring.zero
        for coef, g in zip(row, a.gens):
            c = c + coef * g
        cs.append(c)
    s = [ring.zero] * (r + 2)
    s[r + 1] = ring.one
    for i in range(r, 0, -1):
        s[i] = fs[i] * s[i + 1] - cs[i]
    return UnrolledChain(tuple(fs), tuple(s), tuple(cs))


def retelescope(
    ladder: LadderSpec,
    picks: Sequence[Sequence[int]],
    multipliers: Sequence[Polynomial],
    level_coeffs: Sequence[Sequence[Polynomial]],
) -> ObstructionCertificate:
    """Certificate from equations ``b_i·s_i + a_i = f_i·s_{i+1}`` (``a_0 = f_0·s_1``).

    ``multipliers[i]`` is ``b_i`` (``multipliers[0]`` is ignored) and
    ``level_coeffs[i]`` expresses ``a_i`` over the generators of level ``i``.
    Multiplying through by the prefixes and substituting downwards gives
    ``f_r···f_0 = sum_i b_r···b_{i+1}·a_i·f_{i-1}···f_0``.
    """
    ring = ladder.ring
    r = ladder.r
    rows = []
    for i in range(r + 1):
        tail = ring.one
        for j in range(i + 1, r + 1):
            tail = tail * multipliers[j]
        rows.append([tail * c for c in level_coeffs[i]])
    return ObstructionCertificate(ladder, tuple(tuple(p) for p in picks), rows)


@dataclass(frozen=True)
class ObstructionResult:
    """Either a certificate, or the statement that none exists up to ``bound``.

    The negative answer only covers exponents up to ``bound``; for an
    infinitely generated set it proves nothing beyond that.
    """

    bound: int
    certificate: ObstructionCertificate | None
    tested: int

    @property
    def obstructed(self) -> bool:
        return self.certificate is not None

    @property
    def verdict(self) -> str:
        return "Obstructed" if self.obstructed else f"NoObstructionUpToBound({self.bound})"


def _capped_compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Vectors with entry ``k`` in ``[0, caps[k]]`` summing to ``total``, lexicographically."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest_cap = sum(caps[1:])
    for first in range(max(0, total - rest_cap), min(caps[0], total) + 1):
        for tail in _capped_compositions(total - first, caps[1:]):
            yield (first,) + tail


def pick_order(ladder: LadderSpec, bound: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All picks with exponents ``<= bound``: by total degree, then lexicographically.

    Exponents of constant generators stay at zero: such factors are units
    and never change the verdict.
    """
    sizes = [len(F.gens) for F in ladder.msets]
    caps = [0 if g.is_constant() else bound for F in ladder.msets for g in F.gens]
    for total in range(sum(caps) + 1):
        for flat in _capped_compositions(total, caps):
            picks, k = [], 0
            for n in sizes:
                picks.append(flat[k : k + n])
                k += n
            yield tuple(picks)


def obstruction_search(ladder: LadderSpec, bound: int) -> ObstructionResult:
    """Search for a certificate of obstruction with pick exponents ``<= bound``."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    ring = ladder.ring
    cache: dict[tuple, tuple[list[Polynomial], Ideal]] = {}
    tested = 0
    for picks in pick_order(ladder, bound):
        tested += 1
        head = picks[:-1]
        if head not in cache:
            fs_head = [F.element(e) for F, e in zip(ladder.msets[:-1], head)]
            cache[head] = (fs_head, _telescoped(ladder, fs_head + [ring.one]))
        fs_head, T = cache[head]
        prod = ladder.msets[-1].element(picks[-1])
        for f in fs_head:
            prod = prod * f
        if not T.groebner().contains(prod):
            continue
        found, comb = membership(prod, T, with_combination=True)
        assert found
        cert = ObstructionCertificate(ladder, picks, _reshape(ladder, comb))
        check = verify_certificate(cert)
        if not check.ok:
            raise RuntimeError(f"certificate replay failed with difference {check.difference}")
        return ObstructionResult(bound, cert, tested)
    return ObstructionResult(bound, None, tested)


def _reshape(ladder: LadderSpec, comb: Sequence[Polynomial]) -> list[list[Polynomial]]:
    rows, k = [], 0
    for a in ladder.ideals:
        n = len(a.gens)
        rows.append(list(comb[k : k + n]))
        k += n
    return rows


# ---------------------------------------------------------------------------
# prime chains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeChain:
    """Strictly ascending primes with a primality status per level."""

    ideals: tuple[Ideal, ...]
    statuses: tuple[PrimalityStatus, ...]

    def __post_init__(self):
        object.__setattr__(self, "ideals", tuple(self.ideals))
        object.__setattr__(self, "statuses", tuple(self.statuses))
        if not self.ideals:
            raise ChainError("a chain needs at least one ideal")
        if len(self.statuses) != len(self.ideals):
            raise LengthMismatch("one status per level is required")
        ring = self.ideals[0].ring
        for i, (P, st) in enumerate(zip(self.ideals, self.statuses)):
            if P.ring != ring:
                raise RingMismatch("chain levels live in different rings")
            if not st.ok_for_chain:
                raise ChainError(f"level {i} {P} is not usable as a prime: {st}")
        for i in range(1, len(self.ideals)):
            lo, hi = self.ideals[i - 1], self.ideals[i]
            if not is_subideal(lo, hi):
                raise ChainError(f"level {i - 1} {lo} is not contained in level {i} {hi}")
            if ideal_equal(lo, hi):
                raise ChainError(f"levels {i - 1} and {i} are equal")

    @classmethod
    def of(cls, ideals: Sequence[Ideal], assume_unknown: bool = False) -> "PrimeChain":
        statuses = []
        for P in ideals:
            st = primality_status(P)
            if st.kind is Primality.UNKNOWN and assume_unknown:
                st = assumed("primality not decidable by the recognized patterns")
            statuses.append(st)
        return cls(tuple(ideals), tuple(statuses))

    @property
    def ring(self) -> PolyRing:
        return self.ideals[0].ring

    @property
    def length(self) -> int:
        return len(self.ideals) - 1

    def __len__(self):
        return len(self.ideals)

    def __str__(self):
        return "(" + ", ".join(P.canonical_str() for P in self.ideals) + ")"


@dataclass(frozen=True)
class ChainCheck:
    level: int
    check: str
    ok: bool
    failure: str | None = None
    detail: str = ""

    def __str__(self):
        mark = "ok" if self.ok else self.failure
        return f"level {self.level} {self.check}: {mark} {self.detail}".rstrip()


@dataclass(frozen=True)
class ChainReport:
    checks: tuple[ChainCheck, ...]
    statuses: tuple[PrimalityStatus, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[ChainCheck]:
        return [c for c in self.checks if not c.ok]

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


def _ideals_of(chain: PrimeChain | Sequence[Ideal]) -> tuple[Ideal, ...]:
    return chain.ideals if isinstance(chain, PrimeChain) else tuple(chain)


def verify_chain(
    phi: RingMap,
    source: PrimeChain | Sequence[Ideal],
    target: PrimeChain | Sequence[Ideal],
) -> ChainReport:
    """Check that ``target`` is a chain lying over ``source`` level by level.

    ``target`` may be a plain list of ideals so that broken proposals can be
    diagnosed; primality statuses are reported but do not affect ``ok``.
    """
    ps, qs = _ideals_of(source), _ideals_of(target)
    if len(ps) != len(qs):
        raise LengthMismatch(f"source has {len(ps)} levels, target has {len(qs)}")
    checks: list[ChainCheck] = []
    for i, (p, q) in enumerate(zip(ps, qs)):
        if q.is_unit():
            checks.append(ChainCheck(i, "proper", False, "UnitIdeal", f"{q} contains 1"))
            continue
        checks.append(ChainCheck(i, "proper", True))
        if i > 0:
            below = qs[i - 1]
            gb = q.groebner()
            missing = next((g for g in below.gens if not gb.contains(g)), None)
            if missing is not None:
                checks.append(
                    ChainCheck(i, "containment", False, "ContainmentFailure", f"{missing} not in {q}")
                )
            elif ideal_equal(below, q):
                checks.append(ChainCheck(i, "containment", False, "NotStrict", f"{q} equals level {i - 1}"))
            else:
                checks.append(ChainCheck(i, "containment", True))
        ext = extend_ideal(phi, phi.source.ideal(p.gens))
        gb = q.groebner()
        missing = next((g for g in ext.gens if not gb.contains(g)), None)
        if missing is not None:
            checks.append(ChainCheck(i, "extension", False, "ExtensionNotContained", f"{missing} not in {q}"))
        else:
            checks.append(ChainCheck(i, "extension", True))
        c = contract_ideal(phi, q)
        want = phi.source.ideal(p.gens)
        if ideal_equal(c, want):
            checks.append(ChainCheck(i, "contraction", True, None, f"contract{q} = {c.canonical_str()}"))
        else:
            checks.append(
                ChainCheck(
                    i,
                    "contraction",
                    False,
                    "ContractionMismatch",
                    f"contract{q} = {c.canonical_str()} != {want.canonical_str()}",
                )
            )
    statuses = target.statuses if isinstance(target, PrimeChain) else tuple(primality_status(q) for q in qs)
    return ChainReport(tuple(checks), tuple(statuses))


# ---------------------------------------------------------------------------
# extendability and lifting
# ---------------------------------------------------------------------------


def default_witnesses(phi: RingMap, p: Ideal) -> list[Polynomial]:
    """Source variables outside ``p``, plus 1."""
    src = phi.source.ambient
    gb = phi.source.ideal(p.gens).groebner()
    out = [x for x in src.gens if not gb.contains(x)]
    return out + [src.one]


def _checked_witnesses(phi: RingMap, level: int, p: Ideal, gs: Sequence[Polynomial]) -> list[Polynomial]:
    gb = phi.source.ideal(p.gens).groebner()
    images = []
    for g in gs:
        if gb.contains(g):
            raise WitnessNotOutside(level, g)
        f = apply(phi, g)
        if f.is_zero():
            raise WitnessNotOutside(level, g)
        images.append(f)
    return images


def extendability_ladder(
    phi: RingMap,
    q0: Ideal,
    source: PrimeChain | Sequence[Ideal],
    witnesses: Sequence[Sequence[Polynomial]] | None = None,
) -> LadderSpec:
    """Ladder ``a_0 = q0``, ``a_i = q0 + p_i B``, ``F_i`` = images of source witnesses."""
    ps = _ideals_of(source)
    if witnesses is None:
        witnesses = [default_witnesses(phi, p) for p in ps]
    if len(witnesses) != len(ps):
        raise LengthMismatch("one witness list per level is required")
    B = phi.target.ambient
    base = phi.target.ideal(q0.gens)
    ideals, msets = [], []
    for i, (p, ws) in enumerate(zip(ps, witnesses)):
        a = base if i == 0 else base + extend_ideal(phi, p)
        ideals.append(a)
        msets.append(MultiplicativeSetFG(B, _checked_witnesses(phi, i, p, ws)))
    return LadderSpec(B, tuple(ideals), tuple(msets))


def extendability_test(
    phi: RingMap,
    q0: Ideal,
    source: PrimeChain | Sequence[Ideal],
    witnesses: Sequence[Sequence[Polynomial]] | None = None,
    bound: int = 2,
) -> ObstructionResult:
    """Can ``q0`` start a chain over ``source``?  Witnesses are source elements."""
    return obstruction_search(extendability_ladder(phi, q0, source, witnesses), bound)


@dataclass(frozen=True)
class Candidate:
    ideal: Ideal
    contraction: Ideal
    rejected: tuple[str, ...]

    @property
    def survives(self) -> bool:
        return not self.rejected


@dataclass(frozen=True)
class LevelPool:
    level: int
    candidates: tuple[Candidate, ...]
    complete: bool

    @property
    def survivors(self) -> list[Ideal]:
        return [c.ideal for c in self.candidates if c.survives]


def level_candidates(
    phi: RingMap,
    level: int,
    p: Ideal,
    below: Ideal | None,
    witnesses: Sequence[Polynomial] | None = None,
    hints: Sequence[Ideal] = (),
) -> LevelPool:
    """Candidate primes over ``p`` above ``below``, with rejection reasons.

    The pool is the union of the structured minimal primes of
    ``(below + pB) : w^∞`` over the witnesses ``w``, plus ``hints``; a
    candidate survives when it is proper, strictly above ``below`` and
    contracts to exactly ``p``.
    """
    if witnesses is None:
        witnesses = default_witnesses(phi, p)
    images = _checked_witnesses(phi, level, p, witnesses)
    base = extend_ideal(phi, phi.source.ideal(p.gens))
    if below is not None:
        base = base + below
    pool: list[Ideal] = []
    complete = True
    for w in images:
        found = minimal_primes_structured(saturate(base, w))
        complete = complete and found.complete
        for P in found.primes:
            if P not in pool:
                pool.append(P)
    for H in hints:
        if H not in pool:
            pool.append(H)
    pool.sort(key=ideal_sort_key)
    want = phi.source.ideal(p.gens)
    out = []
    for q in pool:
        reasons = []
        c = contract_ideal(phi, q)
        if q.is_unit():
            reasons.append("unit ideal")
        if below is not None and not (is_subideal(below, q) and not ideal_equal(below, q)):
            reasons.append(f"not strictly above {below.canonical_str()}")
        if not ideal_equal(c, want):
            reasons.append(f"contraction {c.canonical_str()} != {want.canonical_str()}")
        out.append(Candidate(q, c, tuple(reasons)))
    return LevelPool(level, tuple(out), complete)


@dataclass(frozen=True)
class LiftResult:
    map: RingMap
    source: PrimeChain
    target: PrimeChain
    transcripts: tuple[dict, ...]
    report: ChainReport
    consistency: ObstructionResult | None = None


@dataclass(frozen=True)
class LiftNotFound:
    """No chain found among the explored candidates; not a proof of nonexistence."""

    source: PrimeChain
    pools: tuple[LevelPool, ...]


def lift_chain(
    phi: RingMap,
    source: PrimeChain,
    pool_hint: Sequence[Ideal] = (),
    bound: int = 1,
    witnesses: Sequence[Sequence[Polynomial]] | None = None,
) -> LiftResult | LiftNotFound:
    """Depth-first search for a chain of primes over ``source``.

    After a chain is found, the ladder it starts (``q_0`` over ``source``) is
    searched for obstructions up to ``bound`` as a consistency check: a
    certificate there would contradict the chain just verified.
    """
    ps = source.ideals
    if witnesses is None:
        witnesses = [default_witnesses(phi, p) for p in ps]
    explored: dict[int, LevelPool] = {}

    def dfs(level: int, below: Ideal | None, acc: list[Ideal]) -> list[Ideal] | None:
        if level == len(ps):
            return acc
        pool = level_candidates(phi, level, ps[level], below, witnesses[level], pool_hint)
        explored.setdefault(level, pool)
        for q in pool.survivors:
            found = dfs(level + 1, q, acc + [q])
            if found is not None:
                return found
        return None

    found = dfs(0, None, [])
    if found is None:
        return LiftNotFound(source, tuple(explored[k] for k in sorted(explored)))

    target = PrimeChain.of(found, assume_unknown=True)
    report = verify_chain(phi, source, target)
    if not report.ok:
        raise RuntimeError(f"lifted chain failed verification:\n{report}")
    transcripts = tuple(
        {
            "level": i,
            "q": q.canonical_str(),
            "contraction": contract_ideal(phi, q).canonical_str(),
            "p": phi.source.ideal(p.gens).canonical_str(),
            "equal": True,
        }
        for i, (p, q) in enumerate(zip(ps, found))
    )
    consistency = extendability_test(phi, found[0], source, witnesses, bound)
    if consistency.obstructed:
        raise RuntimeError("obstruction certificate found for a verified chain")
    return LiftResult(phi, source, target, transcripts, report, consistency)


@dataclass(frozen=True)
class ChainLengthReport:
    source_length: int
    target_length: int

    def __str__(self):
        return (
            f"source length {self.source_length}, lifted length {self.target_length}: "
            f"witnesses dim B >= {self.source_length}"
        )


def chain_length_report(lift: LiftResult) -> ChainLengthReport:
    report = ChainLengthReport(lift.source.length, lift.target.length)
    if report.source_length != report.target_length:
        raise RuntimeError("lifted chain length differs from the source chain length")
    return report
