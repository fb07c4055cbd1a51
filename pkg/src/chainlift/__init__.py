"""Exact commutative algebra for lifting chains of prime ideals along ring maps."""

__version__ = "0.1.0"

from .chains import (  # noqa: E402
    LadderSpec,
    MultiplicativeSetFG,
    ObstructionCertificate,
    PrimeChain,
    chain_length_report,
    extendability_test,
    lift_chain,
    obstruction_search,
    verify_certificate,
    verify_chain,
)
from .ideals import Ideal, membership, minimal_primes_structured, primality_status  # noqa: E402
from .polycore import PolyRing, Polynomial, parse_poly  # noqa: E402
from .ringmaps import PresentedRing, RingMap, contract_ideal, contraction_property_check  # noqa: E402
from .session import parse_session  # noqa: E402
