"""JSON serialization of obstruction certificates.

The document layout is fixed (``ladder``, ``picks``, ``coefficients``,
``identity_hash``) and every polynomial is printed in canonical form, so the
same certificate always produces the same bytes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .chains import LadderSpec, MultiplicativeSetFG, ObstructionCertificate, verify_certificate
from .errors import AlgebraError
from .ideals import Ideal
from .polycore import PolyRing, format_poly, parse_poly

FORMAT_VERSION = 1


def _ring_doc(ring: PolyRing) -> dict:
    return {
        "variables": list(ring.variables),
        "characteristic": ring.characteristic,
        "grading": None if ring.grading is None else list(ring.grading),
    }


def _payload(cert: ObstructionCertificate) -> dict:
    ladder = cert.ladder
    return {
        "ladder": {
            "ring": _ring_doc(ladder.ring),
            "r": ladder.r,
            "ideals": [[format_poly(g) for g in a.gens] for a in ladder.ideals],
            "mset_generators": [[format_poly(g) for g in F.gens] for F in ladder.msets],
        },
        "picks": [list(p) for p in cert.picks],
        "coefficients": [[format_poly(c) for c in row] for row in cert.coefficients],
    }


def identity_hash(payload: dict) -> str:
    blob = json.dumps(
        {k: payload[k] for k in ("ladder", "picks", "coefficients")},
        separators=(",", ":"),
        ensure_ascii=False,
    )
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def certificate_to_dict(cert: ObstructionCertificate) -> dict:
    doc = _payload(cert)
    doc["identity_hash"] = identity_hash(doc)
    return doc


def dumps(cert: ObstructionCertificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2, ensure_ascii=False) + "\n"


def write_certificate(cert: ObstructionCertificate, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(dumps(cert), encoding="utf-8")
    return path


class CertificateFormatError(AlgebraError):
    pass


def certificate_from_dict(doc: dict) -> ObstructionCertificate:
    try:
        lad = doc["ladder"]
        rd = lad["ring"]
        ring = PolyRing(tuple(rd["variables"]), int(rd["characteristic"]), rd.get("grading"))
        ideals = [Ideal(ring, [parse_poly(t, ring) for t in gens]) for gens in lad["ideals"]]
        msets = [
            MultiplicativeSetFG(ring, tuple(parse_poly(t, ring) for t in gens))
            for gens in lad["mset_generators"]
        ]
        ladder = LadderSpec(ring, tuple(ideals), tuple(msets))
        if ladder.r != lad["r"]:
            raise CertificateFormatError(f"r = {lad['r']} but {len(ideals)} levels given")
        coeffs = [[parse_poly(t, ring) for t in row] for row in doc["coefficients"]]
        return ObstructionCertificate(ladder, tuple(map(tuple, doc["picks"])), coeffs)
    except CertificateFormatError:
        raise
    except (KeyError, TypeError, ValueError, AlgebraError) as exc:
        raise CertificateFormatError(f"malformed certificate: {exc}") from exc


@dataclass(frozen=True)
class FileCheck:
    hash_ok: bool
    identity_ok: bool
    difference: str

    @property
    def ok(self) -> bool:
        return self.hash_ok and self.identity_ok


def check_document(doc: dict) -> FileCheck:
    cert = certificate_from_dict(doc)
    hash_ok = doc.get("identity_hash") == identity_hash(_payload(cert))
    check = verify_certificate(cert)
    return FileCheck(hash_ok, check.ok, format_poly(check.difference))


def read_certificate(path: str | Path) -> tuple[ObstructionCertificate, FileCheck]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return certificate_from_dict(doc), check_document(doc)
