from __future__ import annotations

import random

import pytest

from chainlift.errors import RingMismatch, ZeroPolynomialError
from chainlift.factor import exact_quotient
from chainlift.ideals import (
    Ideal,
    Primality,
    eliminate,
    ideal_equal,
    intersect,
    is_subideal,
    membership,
    minimal_primes_structured,
    primality_status,
    quotient,
    radical_membership,
    saturate,
)
from chainlift.polycore import PolyRing

from conftest import ideal_of
from oracles import member_by_linear_algebra, solvable
from randomgen import monomials_upto, random_nonzero_poly, random_poly

B = PolyRing(("X", "Y", "Z"))
R2 = PolyRing(("X", "Y"))


def P(text, ring=B):
    return ring.parse(text)


def I(*texts, ring=B):
    return ideal_of(ring, *texts)


# -- membership and equality -----------------------------------------------


def test_membership_examples():
    assert membership(P("X*Y"), I("X"))
    assert not membership(P("Y*Z"), I("X", "Y^2*Z - 1"))
    assert membership(B.one, I("X - 1", "X"))


def test_membership_combination():
    J = I("X - 1", "X")
    ok, comb = membership(B.one, J, with_combination=True)
    assert ok
    assert sum((c * g for c, g in zip(comb, J.gens)), B.zero) == B.one
    ok, comb = membership(P("Y"), J.__class__(B, [P("X")]), with_combination=True)
    assert not ok and comb is None


def test_membership_ring_mismatch():
    with pytest.raises(RingMismatch):
        membership(R2.one, I("X"))


def test_ideal_equal_examples():
    assert ideal_equal(I("X", "Y"), I("Y", "X + Y"))
    assert not ideal_equal(I("X"), I("X^2"))
    assert ideal_equal(Ideal(B), Ideal(B, [B.zero]))
    assert I("X", "Y") == I("Y", "X + Y")


def test_zero_generators_are_dropped():
    assert Ideal(B, [B.zero, P("X")]).gens == (P("X"),)
    assert Ideal(B).canonical_str() == "(0)"


# -- intersection, quotient, saturation --------------------------------------


def test_intersect_examples():
    assert intersect(I("Z"), I("X", "Y")) == I("X*Z", "Y*Z")
    J = I("X^2 + Y", "Y*Z")
    assert intersect(J, J) == J
    assert intersect(I("X"), I("Y")) == I("X*Y")


def test_intersect_random_principal():
    rnd = random.Random(21)
    for _ in range(15):
        h = random_nonzero_poly(rnd, R2, 1)
        f = random_nonzero_poly(rnd, R2, 2) * h
        g = random_nonzero_poly(rnd, R2, 1) * h
        inter = intersect(Ideal(R2, [f]), Ideal(R2, [g]))
        # f*g/h lies in both ideals, and every generator of the result lies in both
        q = exact_quotient(f * g, h)
        assert q is not None
        for c in inter.gens:
            assert member_by_linear_algebra(c, [f]) and member_by_linear_algebra(c, [g])
        assert membership(q, inter)


def test_quotient_examples():
    assert quotient(I("X*Z", "Y*Z"), P("Z")) == I("X", "Y")
    J = I("X^2 + Y", "Y*Z")
    assert quotient(J, B.one) == J
    assert quotient(I("X^2"), P("X")) == I("X")
    with pytest.raises(ZeroPolynomialError):
        quotient(J, B.zero)


def test_saturation_examples():
    assert saturate(I("X*Z", "Y*Z"), P("Z")) == I("X", "Y")
    J = I("X^2 + Y", "Y*Z")
    assert saturate(J, B.one) == J
    q = I("X", "Y^2*Z - 1")
    sat = saturate(q, P("Z"))
    assert sat == q
    # independent check of the equality through the linear-algebra oracle
    for g in sat.gens:
        assert member_by_linear_algebra(g, q.gens)


def test_colon_chain_and_stability():
    rnd = random.Random(4)
    for _ in range(10):
        J = Ideal(R2, [random_nonzero_poly(rnd, R2, 2, constant_term=False) for _ in range(2)])
        f = random_nonzero_poly(rnd, R2, 1, constant_term=False)
        Q = quotient(J, f)
        S = saturate(J, f)
        assert is_subideal(J, Q) and is_subideal(Q, S)
        assert saturate(S, f) == S
        assert quotient(S, f) == S


def test_eliminate_examples():
    T = PolyRing(("t", "X"))
    assert eliminate(ideal_of(T, "t*X - 1"), 1).is_zero()
    G = PolyRing(("X", "Y", "Z", "U", "V"))
    assert eliminate(ideal_of(G, "X*Z - U", "Y*Z - V"), 3).is_zero()
    S = PolyRing(("X", "Y"))
    assert eliminate(ideal_of(S, "X - Y^2"), 1).is_zero()
    S2 = PolyRing(("Y", "X"))
    assert eliminate(ideal_of(S2, "X - Y^2"), 1).is_zero()


def test_graph_of_example_map_has_no_low_degree_relations():
    # no polynomial relation between X*Z and Y*Z up to degree 6
    G = PolyRing(("X", "Y", "Z"))
    images = [G.parse("X*Z"), G.parse("Y*Z")]
    columns = []
    for m in monomials_upto(2, 6):
        columns.append(images[0] ** m[0] * images[1] ** m[1])
    # each power product is independent of the others
    for k, col in enumerate(columns):
        others = [(c, 0) for j, c in enumerate(columns) if j != k]
        assert not solvable(G, others, col)


def test_radical_membership_examples():
    assert radical_membership(P("X"), I("X^2"))
    assert not radical_membership(P("Z"), I("X*Z", "Y*Z"))
    assert radical_membership(P("X + Y"), I("X", "Y^2"))


def test_radical_membership_against_power_search():
    rnd = random.Random(13)
    for _ in range(12):
        J = Ideal(R2, [random_nonzero_poly(rnd, R2, 2, constant_term=False) for _ in range(2)])
        gb = J.groebner()
        for _ in range(3):
            f = random_poly(rnd, R2, 1, constant_term=False)
            power_hit = any(gb.contains(f**n) for n in range(1, 9))
            rad = radical_membership(f, J)
            if power_hit:
                assert rad
            if rad:
                assert power_hit


# -- primality and minimal primes --------------------------------------------


def test_primality_examples():
    st = primality_status(I("X", "Y^2*Z - 1"))
    assert st.kind is Primality.VERIFIED_PRIME
    st = primality_status(I("X*Y"))
    assert st.kind is Primality.DISPROVED
    a, b = st.witness
    assert {a, b} == {P("X"), P("Y")}
    assert membership(a * b, I("X*Y")) and not membership(a, I("X*Y")) and not membership(b, I("X*Y"))
    assert primality_status(I("Z")).kind is Primality.VERIFIED_PRIME
    assert primality_status(Ideal(B)).kind is Primality.VERIFIED_PRIME
    assert primality_status(I("1")).kind is Primality.DISPROVED


def test_primality_irreducible_patterns():
    assert primality_status(I("X^2 + 1")).kind is Primality.VERIFIED_PRIME
    assert primality_status(I("X^2 - 1")).kind is Primality.DISPROVED
    assert primality_status(I("X", "Y^3*Z - 2")).kind is Primality.VERIFIED_PRIME
    assert primality_status(I("X^2 + Y^2 - 1")).kind is Primality.VERIFIED_PRIME
    assert primality_status(I("X^2 - Y^2")).kind is Primality.DISPROVED


def test_linear_forms_are_prime():
    assert primality_status(I("X - 1", "Y + 2")).kind is Primality.VERIFIED_PRIME
    assert primality_status(I("X + Y", "Z^2 + X")).kind is Primality.VERIFIED_PRIME
    assert primality_status(I("X - Y", "Z^2 - X^2")).kind is Primality.DISPROVED


def test_unrecognized_pattern_is_unknown():
    st = primality_status(I("X^3 + Y^3 + Z^3 - 1"))
    assert st.kind in (Primality.UNKNOWN, Primality.VERIFIED_PRIME)
    assert st.kind is not Primality.DISPROVED


def test_minimal_primes_examples():
    found = minimal_primes_structured(I("X*Z", "Y*Z"))
    assert found.complete
    assert found.primes == [I("Z"), I("X", "Y")]
    assert minimal_primes_structured(I("X")).primes == [I("X")]
    assert minimal_primes_structured(I("X*Y")).primes == [I("X"), I("Y")]


def test_minimal_primes_split_non_monomial():
    found = minimal_primes_structured(I("X^2 - Y^2", "Z"))
    assert found.complete
    assert sorted(found.primes, key=str) == sorted([I("X - Y", "Z"), I("X + Y", "Z")], key=str)


def test_minimal_primes_properties():
    rnd = random.Random(17)
    suite = [
        I("X*Z", "Y*Z"),
        I("X^2*Y", "Y*Z^2"),
        I("X^2 - Y^2", "Z"),
        I("X*Y - X", "Z"),
        I("X^2 - 1", "Y*Z"),
    ]
    for J in suite:
        found = minimal_primes_structured(J)
        for Pm in found.primes:
            assert is_subideal(J, Pm)
            assert primality_status(Pm).kind is Primality.VERIFIED_PRIME
        if found.complete:
            inter = found.primes[0]
            for Pm in found.primes[1:]:
                inter = intersect(inter, Pm)
            for _ in range(50):
                f = random_poly(rnd, B, 2)
                assert radical_membership(f, inter) == radical_membership(f, J)
