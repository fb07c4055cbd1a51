from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from chainlift.polycore import PolyRing, Polynomial  # noqa: E402
from chainlift.ringmaps import PresentedRing, RingMap  # noqa: E402


@pytest.fixture(scope="session")
def graded_example():
    """``A = K[U,V] -> B = K[X,Y,Z]``, ``U -> X*Z``, ``V -> Y*Z``, deg (1,1,-1)."""
    A = PolyRing(("U", "V"))
    B = PolyRing(("X", "Y", "Z"), grading=(1, 1, -1))
    phi = RingMap.parse(A, B, ["X*Z", "Y*Z"])
    return A, B, phi


def ideal_of(ring: PolyRing, *texts: str):
    from chainlift.ideals import Ideal

    return Ideal.parse(ring, texts)


def poly_strategy(ring: PolyRing, max_degree: int = 3, max_terms: int = 5, fractions: bool = True):
    exps = st.tuples(*[st.integers(0, max_degree) for _ in range(ring.nvars)])
    if fractions and ring.characteristic == 0:
        coeff = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
    else:
        coeff = st.integers(-9, 9)
    terms = st.dictionaries(exps, coeff, max_size=max_terms)
    return terms.map(lambda d: sum((ring.monomial(m, c) for m, c in d.items()), ring.zero))


__all__ = ["Polynomial", "PresentedRing", "RingMap", "ideal_of", "poly_strategy"]
