from __future__ import annotations

import random
from fractions import Fraction

import pytest

from chainlift.chains import (
    LadderSpec,
    LiftNotFound,
    LiftResult,
    MultiplicativeSetFG,
    ObstructionCertificate,
    PrimeChain,
    UnrolledChain,
    chain_length_report,
    extendability_ladder,
    extendability_test,
    level_candidates,
    lift_chain,
    obstruction_search,
    retelescope,
    telescoped_ideal,
    unroll_certificate,
    verify_certificate,
    verify_chain,
)
from chainlift.errors import ArityMismatch, ChainError, LengthMismatch, WitnessNotOutside
from chainlift.ideals import Ideal, Primality, membership
from chainlift.polycore import PolyRing, format_poly

from conftest import ideal_of
from randomgen import random_ladder, random_nonzero_poly

K1 = PolyRing(("X",))
K2 = PolyRing(("X", "Y"))


def mset(ring, *texts):
    return MultiplicativeSetFG(ring, tuple(ring.parse(t) for t in texts))


def ladder(ring, ideals, msets):
    return LadderSpec(ring, tuple(ideal_of(ring, *g) for g in ideals), tuple(mset(ring, *m) for m in msets))


def xy_certificate():
    L = ladder(K2, [("X",), ("Y",)], [("Y",), ("X",)])
    return ObstructionCertificate(L, ((1,), (1,)), [[K2.parse("Y")], [K2.zero]])


# -- telescoped ideals -------------------------------------------------------


def test_telescoped_examples():
    L0 = ladder(K2, [("X",)], [("Y",)])
    assert telescoped_ideal(L0, ((2,),)) == ideal_of(K2, "X")
    L1 = ladder(K2, [("X",), ("Y",)], [("Y",), ("X",)])
    assert telescoped_ideal(L1, ((1,), (0,))) == ideal_of(K2, "X", "Y^2")
    B = PolyRing(("X", "Y", "Z"))
    L2 = ladder(B, [("X*Z",), ("Z",)], [("Y*Z",), ("1",)])
    assert telescoped_ideal(L2, ((1,), (0,))) == ideal_of(B, "X*Z", "Y*Z^2")


def test_picks_arity():
    L = ladder(K2, [("X",)], [("Y",)])
    with pytest.raises(ArityMismatch):
        telescoped_ideal(L, ((1, 1),))
    with pytest.raises(ArityMismatch):
        telescoped_ideal(L, ((1,), (1,)))


# -- obstruction search ------------------------------------------------------


def test_search_trivial_obstruction():
    res = obstruction_search(ladder(K1, [("X",)], [("X",)]), 1)
    assert res.obstructed
    assert res.certificate.picks == ((1,),)
    assert [list(r) for r in res.certificate.coefficients] == [[K1.one]]


def test_search_constant_term_blocks():
    res = obstruction_search(ladder(K1, [("X",)], [("1 + X",)]), 5)
    assert not res.obstructed
    assert res.verdict == "NoObstructionUpToBound(5)"
    assert res.tested == 6


def test_search_two_levels():
    L = ladder(K2, [("X",), ("Y",)], [("Y",), ("X",)])
    res = obstruction_search(L, 1)
    assert res.verdict == "Obstructed"
    # the first hit in the enumeration order is f0 = 1, f1 = X
    assert res.certificate.picks == ((0,), (1,))
    assert verify_certificate(res.certificate).ok
    assert membership(res.certificate.lhs(), telescoped_ideal(L, res.certificate.picks))


def test_search_rejects_negative_bound():
    with pytest.raises(ValueError):
        obstruction_search(ladder(K1, [("X",)], [("X",)]), -1)


def test_bound_zero_only_tries_the_empty_pick():
    res = obstruction_search(ladder(K1, [("X",)], [("X",)]), 0)
    assert res.verdict == "NoObstructionUpToBound(0)" and res.tested == 1
    res = obstruction_search(ladder(K1, [("1",)], [("X",)]), 0)
    assert res.obstructed and res.certificate.picks == ((0,),)


# -- certificates --------------------------------------------------------------


def test_verify_certificate_examples():
    cert = xy_certificate()
    assert verify_certificate(cert).ok
    tampered = ObstructionCertificate(cert.ladder, cert.picks, [[K2.parse("-Y")], [K2.zero]])
    check = verify_certificate(tampered)
    assert not check.ok
    assert check.difference == K2.parse("2*X*Y")
    trivial = ObstructionCertificate(ladder(K1, [("X",)], [("X",)]), ((1,),), [[K1.one]])
    assert verify_certificate(trivial).ok


def test_certificate_shape_checks():
    L = ladder(K2, [("X",), ("Y",)], [("Y",), ("X",)])
    with pytest.raises(LengthMismatch):
        ObstructionCertificate(L, ((1,), (1,)), [[K2.one]])
    with pytest.raises(ArityMismatch):
        ObstructionCertificate(L, ((1,), (1,)), [[K2.one, K2.one], [K2.zero]])


def _obstructed_ladders(count: int, seed: int):
    rnd = random.Random(seed)
    out = []
    while len(out) < count:
        L = random_ladder(rnd, K2)
        res = obstruction_search(L, 2)
        if res.obstructed and L.r >= 1:
            out.append(res.certificate)
    return out


def test_unroll_then_retelescope():
    for cert in _obstructed_ladders(15, 31):
        chain = unroll_certificate(cert)
        assert chain.holds()
        r = cert.ladder.r
        # each c_i lies in a_i
        for c, a in zip(chain.c, cert.ladder.ideals):
            assert membership(c, a)
        back = retelescope(cert.ladder, cert.picks, [K2.one] * (r + 1), cert.coefficients)
        assert verify_certificate(back).ok


def test_retelescope_with_nontrivial_multipliers():
    rnd = random.Random(5)
    for cert in _obstructed_ladders(10, 47):
        chain = unroll_certificate(cert)
        r = cert.ladder.r
        # rescale s_i by mu_i (mu_{r+1} = 1): b_i = mu_{i+1}/mu_i, a_i' = mu_{i+1}*c_i
        mu = [Fraction(rnd.choice([-3, -2, 2, 3, 5]), rnd.randint(1, 4)) for _ in range(r + 1)] + [Fraction(1)]
        b = [K2.one] + [K2.const(mu[i + 1] / mu[i]) for i in range(1, r + 1)]
        s = [chain.s[i] * mu[i] for i in range(r + 1)] + [K2.one]
        rows = [[c * mu[i + 1] for c in row] for i, row in enumerate(cert.coefficients)]
        fs = chain.f
        assert fs[0] * s[1] == chain.c[0] * mu[1]
        for i in range(1, r + 1):
            a_i = chain.c[i] * mu[i + 1]
            assert b[i] * s[i] + a_i == fs[i] * s[i + 1]
        assert verify_certificate(retelescope(cert.ladder, cert.picks, b, rows)).ok


def test_broken_unrolled_chain_is_detected():
    cert = xy_certificate()
    chain = unroll_certificate(cert)
    broken = UnrolledChain(chain.f, chain.s[:1] + (chain.s[1] + K2.one,) + chain.s[2:], chain.c)
    assert not broken.holds()


# -- compatible prime chains forbid certificates -------------------------------

PRIME_CHAINS = [
    [("X",), ("X", "Y")],
    [(), ("X",), ("X", "Y")],
    [("Y - X^2",), ("X", "Y")],
    [("X - 1",), ("X - 1", "Y + 2")],
    [(), ("X^2 + 1",)],
]


def test_compatible_chains_are_never_obstructed():
    rnd = random.Random(99)
    for gens in PRIME_CHAINS:
        qs = [ideal_of(K2, *g) for g in gens]
        chain = PrimeChain.of(qs)
        for _ in range(4):
            ideals, msets = [], []
            for q in chain.ideals:
                # a_i: random multiples of q_i's generators
                a = Ideal(K2, [random_nonzero_poly(rnd, K2, 1) * g for g in q.gens])
                ideals.append(a)
                outside = []
                while len(outside) < 2:
                    f = random_nonzero_poly(rnd, K2, 1)
                    if not membership(f, q):
                        outside.append(f)
                msets.append(MultiplicativeSetFG(K2, tuple(outside)))
            L = LadderSpec(K2, tuple(ideals), tuple(msets))
            E = 2 if L.r < 2 else 1
            res = obstruction_search(L, E)
            assert not res.obstructed, f"certificate against chain {gens}: picks {res.certificate.picks}"


# -- chains over the graded example ----------------------------------------------


def test_prime_chain_validation(graded_example):
    A, B, phi = graded_example
    with pytest.raises(ChainError):
        PrimeChain.of([ideal_of(A, "U*V")])
    with pytest.raises(ChainError):
        PrimeChain.of([ideal_of(A, "U", "V"), ideal_of(A, "U")])
    with pytest.raises(ChainError):
        PrimeChain.of([ideal_of(A, "U"), ideal_of(A, "U")])
    chain = PrimeChain.of([ideal_of(A, "U"), ideal_of(A, "U", "V")])
    assert chain.length == 1
    assert all(s.kind is Primality.VERIFIED_PRIME for s in chain.statuses)


def test_verify_chain_examples(graded_example):
    A, B, phi = graded_example
    P = [ideal_of(A, "U"), ideal_of(A, "U", "V")]
    rep = verify_chain(phi, P, [ideal_of(B, "X"), ideal_of(B, "X", "Y")])
    assert rep.ok
    assert all(s.kind is Primality.VERIFIED_PRIME for s in rep.statuses)

    rep = verify_chain(phi, [ideal_of(A, "U")], [ideal_of(B, "Z")])
    assert [c.failure for c in rep.failures] == ["ContractionMismatch"]
    assert "(U, V)" in rep.failures[0].detail

    q0 = ideal_of(B, "X", "Y^2*Z - 1")
    rep = verify_chain(phi, P, [q0, ideal_of(B, "X", "Z")])
    assert "ContainmentFailure" in [c.failure for c in rep.failures]
    rep = verify_chain(phi, P, [q0, ideal_of(B, "X", "Y^2*Z - 1", "Z")])
    assert "UnitIdeal" in [c.failure for c in rep.failures]

    with pytest.raises(LengthMismatch):
        verify_chain(phi, P, [ideal_of(B, "X")])


def test_extendability_examples(graded_example):
    A, B, phi = graded_example
    P = [ideal_of(A, "U"), ideal_of(A, "U", "V")]
    w = [[A.parse("V")], [A.one]]
    res = extendability_test(phi, ideal_of(B, "X"), P, w, bound=2)
    assert res.verdict == "NoObstructionUpToBound(2)"

    res = extendability_test(phi, ideal_of(B, "X", "Y^2*Z - 1"), P, w, bound=2)
    assert res.obstructed and verify_certificate(res.certificate).ok
    res = extendability_test(phi, ideal_of(B, "X", "Y^2*Z - 1"), P, bound=2)
    assert res.obstructed and verify_certificate(res.certificate).ok

    res = extendability_test(phi, ideal_of(B, "X"), [ideal_of(A, "U")], [[A.parse("V")]], bound=2)
    assert not res.obstructed


def test_witness_must_lie_outside(graded_example):
    A, B, phi = graded_example
    with pytest.raises(WitnessNotOutside):
        extendability_ladder(phi, ideal_of(B, "X"), [ideal_of(A, "U")], [[A.parse("U")]])


def test_lift_examples(graded_example):
    A, B, phi = graded_example
    res = lift_chain(phi, PrimeChain.of([ideal_of(A, "U"), ideal_of(A, "U", "V")]))
    assert isinstance(res, LiftResult)
    assert list(res.target.ideals) == [ideal_of(B, "X"), ideal_of(B, "X", "Y")]
    assert res.report.ok
    assert [t["contraction"] for t in res.transcripts] == ["(U)", "(U, V)"]

    res = lift_chain(phi, PrimeChain.of([ideal_of(A, "U", "V")]))
    assert list(res.target.ideals) == [ideal_of(B, "Z")]

    res = lift_chain(phi, PrimeChain.of([Ideal(A)]))
    assert res.target.ideals[0].is_zero()


def test_level_zero_pool_over_u(graded_example):
    A, B, phi = graded_example
    pool = level_candidates(phi, 0, ideal_of(A, "U"), None)
    by_ideal = {c.ideal.canonical_str(): c for c in pool.candidates}
    assert by_ideal["(Z)"].rejected
    assert by_ideal["(X)"].survives


def test_chain_lengths(graded_example):
    A, B, phi = graded_example
    one = lift_chain(phi, PrimeChain.of([ideal_of(A, "U"), ideal_of(A, "U", "V")]))
    rep = chain_length_report(one)
    assert (rep.source_length, rep.target_length) == (1, 1)
    zero = lift_chain(phi, PrimeChain.of([ideal_of(A, "U")]))
    assert chain_length_report(zero).source_length == 0
    two = lift_chain(phi, PrimeChain.of([Ideal(A), ideal_of(A, "U"), ideal_of(A, "U", "V")]))
    assert [q.canonical_str() for q in two.target.ideals] == ["(0)", "(X)", "(X, Y)"]
    rep = chain_length_report(two)
    assert (rep.source_length, rep.target_length) == (2, 2)


def test_lift_not_found_reports_pools():
    A = PolyRing(("U",))
    Bamb = PolyRing(("U", "X"))
    from chainlift.ringmaps import PresentedRing, RingMap

    Bq = PresentedRing(Bamb, (Bamb.parse("U*X - 1"),))
    phi = RingMap.parse(A, Bq, ["U"])
    res = lift_chain(phi, PrimeChain.of([ideal_of(A, "U")]))
    assert isinstance(res, LiftNotFound)
    assert all(not pool.survivors for pool in res.pools)


def test_lifted_chains_admit_no_certificate(graded_example):
    """Ladders started by lifted chains never produce certificates."""
    A, B, phi = graded_example
    rnd = random.Random(12)
    sources = [
        [ideal_of(A, "U")],
        [ideal_of(A, "U"), ideal_of(A, "U", "V")],
        [ideal_of(A, "V"), ideal_of(A, "U", "V")],
        [ideal_of(A, "U + V"), ideal_of(A, "U", "V")],
        [Ideal(A), ideal_of(A, "U"), ideal_of(A, "U", "V")],
    ]
    for ps in sources:
        chain = PrimeChain.of(ps)
        lifted = lift_chain(phi, chain)
        assert isinstance(lifted, LiftResult)
        q0 = lifted.target.ideals[0]
        for _ in range(2):
            witnesses = []
            for p in ps:
                while True:
                    g = random_nonzero_poly(rnd, A, 2)
                    if not membership(g, p):
                        break
                witnesses.append([g, A.one])
            for E in range(4):
                res = extendability_test(phi, q0, chain, witnesses, bound=E)
                assert not res.obstructed


def test_determinism(graded_example):
    A, B, phi = graded_example
    L1 = ladder(K2, [("X",), ("Y",)], [("Y",), ("X",)])
    L2 = ladder(K2, [("X",), ("Y",)], [("Y",), ("X",)])
    a, b = obstruction_search(L1, 2), obstruction_search(L2, 2)
    assert a.certificate.picks == b.certificate.picks
    assert [[format_poly(c) for c in row] for row in a.certificate.coefficients] == [
        [format_poly(c) for c in row] for row in b.certificate.coefficients
    ]
    # generator order of the ladder ideals does not change the verdict or picks
    L3 = ladder(K2, [("X^2", "X*Y + X"), ("Y",)], [("Y",), ("X",)])
    L4 = ladder(K2, [("X*Y + X", "X^2"), ("Y",)], [("Y",), ("X",)])
    c, d = obstruction_search(L3, 2), obstruction_search(L4, 2)
    assert c.verdict == d.verdict
    assert (c.certificate is None) == (d.certificate is None)
    if c.certificate is not None:
        assert c.certificate.picks == d.certificate.picks

    first = lift_chain(phi, PrimeChain.of([ideal_of(A, "U"), ideal_of(A, "U", "V")]))
    again = lift_chain(phi, PrimeChain.of([ideal_of(A, "U"), ideal_of(A, "V", "U")]))
    assert [q.canonical_str() for q in first.target.ideals] == [q.canonical_str() for q in again.target.ideals]
