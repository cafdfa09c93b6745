"""Corpus entries: group specs with declared generator counts and baselines.

Corpus file format, one entry per line:

    sym 5 | d=2 | base=trivial | base=stab 0
    product alt 5 ; cyclic 4 | d=4 | base=cyclic-sub (5 6 7 8)

``#`` starts a comment.  ``d`` defaults to the construction's generator
count; baselines default to ``trivial`` plus ``stab 0`` when the action
is transitive.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructors import GroupSpec
from .errors import CorpusParseError, NotASubgroup
from .group import PermGroup
from .perm import Permutation


@dataclass(frozen=True)
class BaselineSpec:
    kind: str                   # trivial | stab | cyclic-sub
    param: str = ""

    def __str__(self) -> str:
        return self.kind if not self.param else f"{self.kind} {self.param}"

    @classmethod
    def parse(cls, text: str) -> "BaselineSpec":
        text = text.strip()
        if text == "trivial":
            return cls("trivial")
        if text.startswith("stab"):
            rest = text[4:].strip()
            if not rest.isdigit():
                raise CorpusParseError(f"bad stab baseline {text!r}")
            return cls("stab", rest)
        if text.startswith("cyclic-sub"):
            return cls("cyclic-sub", text[len("cyclic-sub"):].strip())
        raise CorpusParseError(f"unknown baseline {text!r}")

    def build(self, G: PermGroup) -> PermGroup:
        if self.kind == "trivial":
            return PermGroup(G.degree)
        if self.kind == "stab":
            pt = int(self.param)
            if pt >= G.degree:
                raise CorpusParseError(f"stab point {pt} out of range")
            return G.point_stabilizer(pt)
        g = Permutation.parse(self.param, G.degree)
        if g not in G:
            raise NotASubgroup(f"{g} does not lie in the group")
        return PermGroup(G.degree, [g])


@dataclass
class CorpusEntry:
    spec: GroupSpec
    d: int                      # declared generator count
    baselines: tuple[BaselineSpec, ...]
    _group: PermGroup | None = field(default=None, repr=False)

    def group(self) -> PermGroup:
        # d is metadata for the Sub_n bound; a deliberately wrong value is
        # allowed and simply makes sub-count fail with a witness
        if self._group is None:
            self._group = self.spec.build()
        return self._group

    def line(self) -> str:
        parts = [str(self.spec), f"d={self.d}"]
        parts += [f"base={b}" for b in self.baselines]
        return " | ".join(parts)


def parse_entry(line: str) -> CorpusEntry:
    parts = [p.strip() for p in line.split("|")]
    spec = GroupSpec.parse(parts[0])
    d: int | None = None
    baselines: list[BaselineSpec] = []
    for p in parts[1:]:
        if p.startswith("d="):
            try:
                d = int(p[2:])
            except ValueError:
                raise CorpusParseError(f"bad d in {line!r}") from None
        elif p.startswith("base="):
            baselines.append(BaselineSpec.parse(p[5:]))
        elif p:
            raise CorpusParseError(f"unknown corpus field {p!r}")
    G = spec.build()
    if d is None:
        d = len(G.generators)
    if not baselines:
        baselines = default_baselines(G)
    for b in baselines:
        try:
            b.build(G)
        except NotASubgroup as exc:
            raise CorpusParseError(f"baseline {b}: {exc}") from None
    return CorpusEntry(spec, d, tuple(baselines))


def default_baselines(G: PermGroup) -> list[BaselineSpec]:
    out = [BaselineSpec("trivial")]
    if _is_transitive(G):
        out.append(BaselineSpec("stab", "0"))
    return out


def _is_transitive(G: PermGroup) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        p = frontier.pop()
        for g in G.generators:
            q = g(p)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return len(seen) == G.degree


def parse_corpus(text: str) -> list[CorpusEntry]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            entries.append(parse_entry(line))
        except CorpusParseError as exc:
            raise CorpusParseError(f"line {lineno}: {exc}") from None
    return entries


DEFAULT_CORPUS_LINES = [
    "sym 3", "sym 4", "sym 5", "sym 6",
    "alt 4", "alt 5", "alt 6", "alt 7",
    "cyclic 2", "cyclic 6", "cyclic 12", "cyclic 30",
    "dihedral 3", "dihedral 5", "dihedral 7", "dihedral 11", "dihedral 13",
    "psl2 5", "psl2 7", "psl2 11", "psl2 13",
    "wreath 2 3", "wreath 3 4",
    "deleted 2 4", "deleted 3 5", "deleted 2 5",
    # cyclic-sub baselines give rel-reduce a non-trivial N inside Y
    "product sym 3 ; sym 3 | base=trivial | base=cyclic-sub (3 4 5)",
    "product alt 5 ; cyclic 4 | base=trivial | base=cyclic-sub (5 6 7 8)",
]


def default_corpus() -> list[CorpusEntry]:
    return parse_corpus("\n".join(DEFAULT_CORPUS_LINES))
