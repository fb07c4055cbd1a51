"""Command-line front end: run session files, check certificate files, print bases."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import __version__
from .certificates import CertificateFormatError, certificate_to_dict, read_certificate, write_certificate
from .chains import LiftResult, PrimeChain, chain_length_report, extendability_test, lift_chain, obstruction_search, verify_chain
from .errors import AlgebraError, SessionError
from .ideals import minimal_primes_structured, primality_status
from .polycore import format_poly, order_from_name
from .ringmaps import contract_ideal, contraction_property_check, kernel
from .session import SessionScript, Task, parse_session

BUILTIN_PREFIX = "builtin:"

# Verdicts that count as success when a task carries no ``expect`` clause.
OK_VERDICTS = {"computed", "Holds", "ok", "Lifted", "complete", "VerifiedPrime", "Assumed"}


def is_ok_verdict(verdict: str) -> bool:
    return verdict in OK_VERDICTS or verdict.startswith("NoObstructionUpToBound")


@dataclass
class Report:
    task: str
    kind: str
    verdict: str
    passed: bool
    witness: dict = field(default_factory=dict)
    expected: str | None = None
    timing: float = 0.0
    version: str = __version__

    def to_dict(self, timing: bool = True) -> dict:
        doc = {
            "task": self.task,
            "kind": self.kind,
            "verdict": self.verdict,
            "passed": self.passed,
            "expected": self.expected,
            "witness": self.witness,
            "version": self.version,
        }
        if timing:
            doc["timing_s"] = round(self.timing, 6)
        return doc


def _ideal_list(ideals) -> list[str]:
    return [I.canonical_str() for I in ideals]


class _Runner:
    def __init__(self, script: SessionScript, bound: int | None, cert_dir: Path | None):
        self.script = script
        self.bound = bound
        self.cert_dir = cert_dir

    def _bound(self, task: Task, default: int) -> int:
        if self.bound is not None:
            return self.bound
        return default if task.bound is None else task.bound

    def _obstruction(self, task: Task, result) -> tuple[str, dict]:
        witness: dict = {"bound": result.bound, "tested": result.tested}
        if result.certificate is not None:
            doc = certificate_to_dict(result.certificate)
            witness["certificate"] = doc
            if self.cert_dir is not None:
                path = self.cert_dir / f"{task.name}.json"
                write_certificate(result.certificate, path)
                witness["certificate_file"] = path.name
        return result.verdict, witness

    def execute(self, task: Task) -> tuple[str, dict]:
        s = self.script
        kind, args = task.kind, task.args
        if kind == "contract":
            phi = s.maps[args[0]][2]
            C = contract_ideal(phi, s.ideals[args[1]][1])
            return "computed", {"ideal": s.ideals[args[1]][1].canonical_str(), "contraction": C.canonical_str()}
        if kind == "kernel":
            phi = s.maps[args[0]][2]
            return "computed", {"kernel": kernel(phi).canonical_str()}
        if kind == "check-contraction":
            phi = s.maps[args[0]][2]
            chk = contraction_property_check(phi, s.ideals[args[1]][1])
            witness = {"ideal": chk.ideal.canonical_str(), "contraction": chk.contraction.canonical_str()}
            if not chk.holds:
                witness["outside"] = format_poly(chk.witness)
            return ("Holds" if chk.holds else "Fails"), witness
        if kind == "obstruct":
            return self._obstruction(task, obstruction_search(s.ladders[args[0]], self._bound(task, 2)))
        if kind == "extendable":
            phi = s.maps[args[0]][2]
            q0 = s.ideals[args[1]][1]
            result = extendability_test(phi, q0, s.chain_ideals(args[2]), bound=self._bound(task, 2))
            return self._obstruction(task, result)
        if kind == "lift":
            phi = s.maps[args[0]][2]
            source = PrimeChain.of(s.chain_ideals(args[1]), assume_unknown=True)
            hints = [s.ideals[h][1] for h in task.hints]
            result = lift_chain(phi, source, hints, bound=self._bound(task, 1))
            if isinstance(result, LiftResult):
                lengths = chain_length_report(result)
                return "Lifted", {
                    "source": _ideal_list(source.ideals),
                    "target": _ideal_list(result.target.ideals),
                    "statuses": [str(st) for st in result.target.statuses],
                    "transcripts": list(result.transcripts),
                    "consistency": result.consistency.verdict if result.consistency else None,
                    "lengths": {"source": lengths.source_length, "target": lengths.target_length},
                }
            return "NotFound", {
                "source": _ideal_list(source.ideals),
                "pools": [
                    {
                        "level": pool.level,
                        "complete": pool.complete,
                        "candidates": [
                            {"ideal": c.ideal.canonical_str(), "rejected": list(c.rejected)}
                            for c in pool.candidates
                        ],
                    }
                    for pool in result.pools
                ],
            }
        if kind == "verify-chain":
            phi = s.maps[args[0]][2]
            report = verify_chain(phi, s.chain_ideals(args[1]), s.chain_ideals(args[2]))
            return ("ok" if report.ok else "failed"), {
                "checks": [
                    {"level": c.level, "check": c.check, "ok": c.ok, "failure": c.failure, "detail": c.detail}
                    for c in report.checks
                ],
                "statuses": [str(st) for st in report.statuses],
            }
        if kind == "minprimes":
            found = minimal_primes_structured(s.ideals[args[0]][1])
            return ("complete" if found.complete else "incomplete"), {
                "primes": _ideal_list(found.primes),
                "unsplit": _ideal_list(found.unsplit),
            }
        if kind == "primality":
            st = primality_status(s.ideals[args[0]][1])
            witness = {"reason": st.reason}
            if st.witness is not None:
                witness["factors"] = [format_poly(p) for p in st.witness]
            return st.kind.value, witness
        raise SessionError(f"unknown task kind {kind!r}", task.line)

    def run_task(self, task: Task) -> Report:
        start = time.perf_counter()
        try:
            verdict, witness = self.execute(task)
        except (AlgebraError, RuntimeError, ValueError, ZeroDivisionError) as exc:
            verdict, witness = "error", {"error": f"{type(exc).__name__}: {exc}"}
        elapsed = time.perf_counter() - start
        if task.expect is not None:
            passed = verdict == task.expect or (
                task.expect == "NoObstruction" and verdict.startswith("NoObstructionUpToBound")
            )
        else:
            passed = is_ok_verdict(verdict)
        return Report(task.name, task.kind, verdict, passed, witness, task.expect, elapsed)


def run(
    script: SessionScript,
    task: str | None = None,
    bound: int | None = None,
    parallel: bool = False,
    cert_dir: str | Path | None = None,
) -> list[Report]:
    """Run the selected tasks (all by default); reports come back in declaration order."""
    tasks = script.tasks
    if task is not None:
        tasks = [t for t in tasks if t.name == task]
        if not tasks:
            raise SessionError(f"no task named {task!r}")
    if cert_dir is not None:
        cert_dir = Path(cert_dir)
        cert_dir.mkdir(parents=True, exist_ok=True)
    runner = _Runner(script, bound, cert_dir)
    if parallel and len(tasks) > 1:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(runner.run_task, tasks))
    return [runner.run_task(t) for t in tasks]


def exit_code(reports: Sequence[Report]) -> int:
    return 0 if all(r.passed for r in reports) else 1


def reports_json(reports: Sequence[Report], timing: bool = True) -> str:
    doc = {"version": __version__, "reports": [r.to_dict(timing) for r in reports]}
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _summary(r: Report) -> str:
    w = r.witness
    if r.kind == "contract":
        return f"contract{w['ideal']} = {w['contraction']}"
    if r.kind == "kernel":
        return f"kernel = {w['kernel']}"
    if r.kind == "check-contraction":
        if "outside" in w:
            return f"{w['outside']} in contraction {w['contraction']} but not in {w['ideal']}"
        return f"{w['ideal']} is contracted"
    if r.kind in ("obstruct", "extendable") and "certificate" in w:
        return f"picks {w['certificate']['picks']} after {w['tested']} tries"
    if r.kind in ("obstruct", "extendable"):
        return f"{w['tested']} picks tested"
    if r.kind == "lift" and r.verdict == "Lifted":
        return " < ".join(w["target"]) + "  [" + ", ".join(w["statuses"]) + "]"
    if r.kind == "verify-chain":
        bad = [c for c in w["checks"] if not c["ok"]]
        return "; ".join(f"level {c['level']} {c['failure']}: {c['detail']}" for c in bad) or "all checks pass"
    if r.kind == "minprimes":
        return ", ".join(w["primes"])
    return w.get("error") or w.get("reason", "")


def reports_table(reports: Sequence[Report]) -> str:
    rows = [(r.task, r.kind, r.verdict, "PASS" if r.passed else "FAIL", f"{r.timing:.3f}s", _summary(r)) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(5)] if rows else [0] * 5
    lines = []
    for row in rows:
        head = "  ".join(cell.ljust(w) for cell, w in zip(row[:5], widths))
        lines.append(f"{head}  {row[5]}".rstrip())
    return "\n".join(lines)


def load_session_text(path: str) -> str:
    if path.startswith(BUILTIN_PREFIX):
        name = path[len(BUILTIN_PREFIX):]
        res = resources.files("chainlift") / "data" / f"{name}.session"
        if not res.is_file():
            raise FileNotFoundError(f"no bundled session {name!r}")
        return res.read_text(encoding="utf-8")
    return Path(path).read_text(encoding="utf-8")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chainlift", description="Chain lifting for ideals in polynomial rings.")
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run the tasks of a session file (builtin:graded for the bundled one)")
    p_run.add_argument("file")
    p_run.add_argument("--task")
    p_run.add_argument("--json", action="store_true")
    p_run.add_argument("--bound", type=int)
    p_run.add_argument("--parallel", action="store_true")
    p_run.add_argument("--cert-dir", help="write obstruction certificates here as <task>.json")
    p_cert = sub.add_parser("verify-cert", help="re-check a certificate file")
    p_cert.add_argument("file")
    p_gb = sub.add_parser("gb", help="print the reduced Groebner basis of a declared ideal")
    p_gb.add_argument("file")
    p_gb.add_argument("--ideal", required=True)
    p_gb.add_argument("--order", choices=["lex", "grlex", "grevlex"], default="grevlex")
    sub.add_parser("version")
    return parser


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2

    if args.command == "version":
        print(__version__)
        return 0

    if args.command == "verify-cert":
        try:
            _, check = read_certificate(args.file)
        except (OSError, json.JSONDecodeError, CertificateFormatError, AlgebraError) as exc:
            return _fail(str(exc))
        print(f"identity hash: {'ok' if check.hash_ok else 'MISMATCH'}")
        print(f"identity: {'ok' if check.identity_ok else 'FAILED, lhs - rhs = ' + check.difference}")
        return 0 if check.ok else 1

    if args.command == "run" and args.bound is not None and args.bound < 0:
        return _fail("--bound must be non-negative")
    try:
        script = parse_session(load_session_text(args.file))
    except OSError as exc:
        return _fail(str(exc))
    except SessionError as exc:
        return _fail(str(exc))

    if args.command == "gb":
        if args.ideal not in script.ideals:
            return _fail(f"undeclared ideal {args.ideal!r}")
        ideal = script.ideals[args.ideal][1]
        for g in ideal.groebner(order_from_name(args.order)):
            print(format_poly(g))
        return 0

    try:
        reports = run(script, args.task, args.bound, args.parallel, args.cert_dir)
    except SessionError as exc:
        return _fail(str(exc))
    print(reports_json(reports) if args.json else reports_table(reports))
    return exit_code(reports)


if __name__ == "__main__":
    sys.exit(main())
