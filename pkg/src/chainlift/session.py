"""Line-oriented session files.

One declaration per line, ``#`` starts a comment::

    ring B vars X,Y,Z char 0 grading 1,1,-1
    ring C vars U,X relations U*X - 1
    ideal q1 in B gens X, Y^2*Z - 1
    map phi A -> B images X*Z, Y*Z
    mset F0 in B gens Y*Z
    chain C in A levels p0, p1
    ladder L in B ideals a0, a1 msets F0, F1
    task t1 contract phi q1
    task t2 lift phi C bound 3 hints h1, h2
    task t3 obstruct L bound 2 expect Obstructed

Names must be unique and declared before use.  Ideals declared in a ring
with relations include those relations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .chains import LadderSpec, MultiplicativeSetFG
from .errors import AlgebraError, ResolutionError, SessionError
from .ideals import Ideal
from .ringmaps import PresentedRing, RingMap
from .polycore import PolyRing, Polynomial

TASK_KINDS = {
    "contract": ("map", "ideal"),
    "kernel": ("map",),
    "check-contraction": ("map", "ideal"),
    "obstruct": ("ladder",),
    "extendable": ("map", "ideal", "chain"),
    "lift": ("map", "chain"),
    "verify-chain": ("map", "chain", "chain"),
    "minprimes": ("ideal",),
    "primality": ("ideal",),
}


@dataclass
class Task:
    name: str
    kind: str
    args: tuple[str, ...]
    line: int
    bound: int | None = None
    hints: tuple[str, ...] = ()
    expect: str | None = None


@dataclass
class SessionScript:
    rings: dict[str, PresentedRing] = field(default_factory=dict)
    ideals: dict[str, tuple[str, Ideal]] = field(default_factory=dict)
    msets: dict[str, tuple[str, MultiplicativeSetFG]] = field(default_factory=dict)
    maps: dict[str, tuple[str, str, RingMap]] = field(default_factory=dict)
    chains: dict[str, tuple[str, tuple[str, ...]]] = field(default_factory=dict)
    ladders: dict[str, LadderSpec] = field(default_factory=dict)
    tasks: list[Task] = field(default_factory=list)

    def chain_ideals(self, name: str) -> list[Ideal]:
        return [self.ideals[n][1] for n in self.chains[name][1]]

    def kind_of(self, name: str) -> str | None:
        for kind in ("rings", "ideals", "msets", "maps", "chains", "ladders"):
            if name in getattr(self, kind):
                return kind[:-1]
        if any(t.name == name for t in self.tasks):
            return "task"
        return None


_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_PATTERNS = {
    "ring": re.compile(
        rf"ring\s+(?P<name>{_NAME})\s+vars\s+(?P<vars>[^ ]+(?:\s*,\s*[^ ,]+)*)"
        rf"(?:\s+char\s+(?P<char>\d+))?"
        rf"(?:\s+grading\s+(?P<grading>-?\d+(?:\s*,\s*-?\d+)*))?"
        rf"(?:\s+relations\s+(?P<rels>.+))?\Z"
    ),
    "ideal": re.compile(rf"ideal\s+(?P<name>{_NAME})\s+in\s+(?P<ring>{_NAME})\s+gens\s*(?P<gens>.*)\Z"),
    "mset": re.compile(rf"mset\s+(?P<name>{_NAME})\s+in\s+(?P<ring>{_NAME})\s+gens\s+(?P<gens>.+)\Z"),
    "map": re.compile(
        rf"map\s+(?P<name>{_NAME})\s+(?P<src>{_NAME})\s*->\s*(?P<tgt>{_NAME})\s+images\s+(?P<images>.+)\Z"
    ),
    "chain": re.compile(rf"chain\s+(?P<name>{_NAME})\s+in\s+(?P<ring>{_NAME})\s+levels\s+(?P<levels>.+)\Z"),
    "ladder": re.compile(
        rf"ladder\s+(?P<name>{_NAME})\s+in\s+(?P<ring>{_NAME})\s+ideals\s+(?P<ideals>.+?)\s+msets\s+(?P<msets>.+)\Z"
    ),
    "task": re.compile(
        rf"task\s+(?P<name>{_NAME})\s+(?P<kind>[a-z-]+)(?P<args>(?:\s+{_NAME})*?)"
        rf"(?:\s+bound\s+(?P<bound>\d+))?"
        rf"(?:\s+hints\s+(?P<hints>{_NAME}(?:\s*,\s*{_NAME})*))?"
        rf"(?:\s+expect\s+(?P<expect>\S+))?\s*\Z"
    ),
}


def _split_list(text: str) -> list[str]:
    return [p.strip() for p in text.split(",") if p.strip()]


class _Builder:
    def __init__(self):
        self.script = SessionScript()

    def fresh(self, name: str, line: int):
        if self.script.kind_of(name) is not None:
            raise SessionError(f"name {name!r} is already declared", line)

    def lookup(self, table: str, name: str, line: int):
        entries = getattr(self.script, table)
        if name not in entries:
            raise ResolutionError(f"undeclared {table[:-1]} {name!r}", line)
        return entries[name]

    def polys(self, ring: PolyRing, text: str, line: int) -> list[Polynomial]:
        try:
            return [ring.parse(t) for t in _split_list(text)]
        except AlgebraError as exc:
            raise SessionError(str(exc), line) from exc

    def ring(self, m, line):
        self.fresh(m["name"], line)
        names = tuple(_split_list(m["vars"]))
        grading = tuple(int(w) for w in _split_list(m["grading"])) if m["grading"] else None
        try:
            ring = PolyRing(names, int(m["char"] or 0), grading)
        except (AlgebraError, ValueError) as exc:
            raise SessionError(str(exc), line) from exc
        rels = self.polys(ring, m["rels"], line) if m["rels"] else []
        self.script.rings[m["name"]] = PresentedRing(ring, tuple(rels))

    def ideal(self, m, line):
        self.fresh(m["name"], line)
        ring = self.lookup("rings", m["ring"], line)
        gens = self.polys(ring.ambient, m["gens"], line)
        self.script.ideals[m["name"]] = (m["ring"], ring.ideal(gens))

    def mset(self, m, line):
        self.fresh(m["name"], line)
        ring = self.lookup("rings", m["ring"], line)
        gens = self.polys(ring.ambient, m["gens"], line)
        try:
            mset = MultiplicativeSetFG(ring.ambient, tuple(gens))
        except (AlgebraError, ValueError) as exc:
            raise SessionError(str(exc), line) from exc
        self.script.msets[m["name"]] = (m["ring"], mset)

    def map(self, m, line):
        self.fresh(m["name"], line)
        src = self.lookup("rings", m["src"], line)
        tgt = self.lookup("rings", m["tgt"], line)
        images = self.polys(tgt.ambient, m["images"], line)
        try:
            phi = RingMap(src, tgt, tuple(images))
        except AlgebraError as exc:
            raise SessionError(str(exc), line) from exc
        self.script.maps[m["name"]] = (m["src"], m["tgt"], phi)

    def chain(self, m, line):
        self.fresh(m["name"], line)
        self.lookup("rings", m["ring"], line)
        levels = tuple(_split_list(m["levels"]))
        for lv in levels:
            ring_name, _ = self.lookup("ideals", lv, line)
            if ring_name != m["ring"]:
                raise ResolutionError(f"ideal {lv!r} lives in {ring_name}, not {m['ring']}", line)
        self.script.chains[m["name"]] = (m["ring"], levels)

    def ladder(self, m, line):
        self.fresh(m["name"], line)
        ring = self.lookup("rings", m["ring"], line)
        ideals = [self.lookup("ideals", n, line)[1] for n in _split_list(m["ideals"])]
        msets = [self.lookup("msets", n, line)[1] for n in _split_list(m["msets"])]
        try:
            self.script.ladders[m["name"]] = LadderSpec(ring.ambient, tuple(ideals), tuple(msets))
        except (AlgebraError, ValueError) as exc:
            raise SessionError(str(exc), line) from exc

    def task(self, m, line):
        self.fresh(m["name"], line)
        kind = m["kind"]
        if kind not in TASK_KINDS:
            raise SessionError(f"unknown task kind {kind!r}", line)
        args = tuple(m["args"].split())
        wanted = TASK_KINDS[kind]
        if len(args) != len(wanted):
            raise SessionError(f"task {kind} takes {len(wanted)} arguments, got {len(args)}", line)
        for a, w in zip(args, wanted):
            self.lookup(w + "s", a, line)
        hints = tuple(_split_list(m["hints"])) if m["hints"] else ()
        for h in hints:
            self.lookup("ideals", h, line)
        bound = int(m["bound"]) if m["bound"] is not None else None
        self.script.tasks.append(Task(m["name"], kind, args, line, bound, hints, m["expect"]))


def parse_session(text: str) -> SessionScript:
    builder = _Builder()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword = line.split(None, 1)[0]
        pattern = _PATTERNS.get(keyword)
        if pattern is None:
            raise SessionError(f"unknown declaration {keyword!r}", lineno)
        m = pattern.match(line)
        if m is None:
            raise SessionError(f"malformed {keyword} declaration", lineno)
        getattr(builder, keyword)(m, lineno)
    return builder.script
