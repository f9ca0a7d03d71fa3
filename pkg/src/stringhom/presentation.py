"""Quiver presentations of string algebras: parsing, validation and path queries.

A presentation lists vertices, arrows and zero relations.  Paths are written
in traversal order, ``a.b.c`` meaning "first a, then b, then c"; the
algebraic product of that path is ``cba``.  ``compose(p, q)`` follows the
algebraic convention and means "p after q".

Example:
    >>> alg = validate(parse_presentation('''
    ... vertices: 1 2
    ... arrow a: 1 -> 2
    ... arrow b: 1 -> 2
    ... arrow g: 2 -> 1
    ... zero: g.a
    ... zero: g.b
    ... zero: b.g
    ... '''))
    >>> alg.dimension
    6
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

from .errors import (
    DegreeViolation,
    NotAdmissible,
    ParseError,
    StringConditionViolation,
    UnknownArrow,
    UnknownVertex,
)

if TYPE_CHECKING:
    from .words import FiniteWord

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
_LABEL = re.compile(r"[A-Za-z0-9_']+\Z")


@dataclass(frozen=True)
class Vertex:
    id: int
    label: str


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True, order=True)
class Path:
    """A path of the quiver, possibly trivial.

    ``start`` and ``end`` are vertex labels, ``arrows`` are arrow names in
    traversal order.  A trivial path has no arrows and ``start == end``.
    """

    start: str
    arrows: tuple[str, ...] = ()
    end: str = ""

    def __post_init__(self):
        if not self.end:
            if self.arrows:
                raise ValueError("a nontrivial Path needs an explicit end vertex")
            object.__setattr__(self, "end", self.start)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def trivial(self) -> bool:
        return not self.arrows

    @property
    def first(self) -> str | None:
        return self.arrows[0] if self.arrows else None

    @property
    def last(self) -> str | None:
        return self.arrows[-1] if self.arrows else None

    def __str__(self) -> str:
        return ".".join(self.arrows) if self.arrows else f"e{self.start}"


@dataclass(frozen=True)
class QuiverPresentation:
    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]
    forbidden: tuple[Path, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "_by_label", {v.label: v for v in self.vertices})
        object.__setattr__(self, "_by_name", {a.name: a for a in self.arrows})

    def vertex(self, label: str) -> Vertex:
        try:
            return self._by_label[str(label)]
        except KeyError:
            raise UnknownVertex(str(label)) from None

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownArrow(name) from None

    def has_vertex(self, label: str) -> bool:
        return str(label) in self._by_label

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def make_path(self, arrows: Iterable[str], start: str | None = None) -> Path:
        """Build a Path from arrow names, checking that they compose."""
        arrows = tuple(arrows)
        if not arrows:
            if start is None:
                raise ValueError("a trivial path needs its vertex")
            self.vertex(start)
            return Path(str(start))
        objs = [self.arrow(a) for a in arrows]
        for x, y in zip(objs, objs[1:]):
            if x.target != y.source:
                raise ValueError(f"arrows {x.name} and {y.name} do not compose")
        if start is not None and str(start) != objs[0].source:
            raise ValueError(f"path {'.'.join(arrows)} does not start at {start}")
        return Path(objs[0].source, arrows, objs[-1].target)

    def format(self) -> str:
        return format_presentation(self)


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_presentation(text: str) -> QuiverPresentation:
    """Parse the line-oriented presentation format.

    Raises ParseError for syntax problems, UnknownVertex / UnknownArrow for
    references to undeclared names.
    """
    vertices: list[Vertex] = []
    arrows: list[Arrow] = []
    relations: list[tuple[int, int, str]] = []
    seen_v: set[str] = set()
    seen_a: dict[str, Arrow] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        key, sep, rest = body.partition(":")
        key = key.strip()
        if key.startswith("arrow "):
            # "arrow a: 1 -> 2" splits at the first colon after the name
            name = key[len("arrow "):].strip()
            key = "arrow"
        else:
            name = ""
        if not sep:
            raise ParseError(lineno, col, "expected '<keyword>:'")
        rest_col = col + body.index(":") + 1

        if key == "vertices":
            labels = rest.split()
            if not labels:
                raise ParseError(lineno, rest_col, "empty vertex list")
            for lab in labels:
                if not _LABEL.match(lab):
                    raise ParseError(lineno, rest_col + rest.index(lab), f"bad vertex label {lab!r}")
                if lab in seen_v:
                    raise ParseError(lineno, rest_col + rest.index(lab), f"duplicate vertex {lab!r}")
                seen_v.add(lab)
                vertices.append(Vertex(len(vertices) + 1, lab))
        elif key == "arrow":
            if not _IDENT.match(name):
                raise ParseError(lineno, col + 6, f"bad arrow name {name!r}")
            if name in seen_a:
                raise ParseError(lineno, col + 6, f"duplicate arrow {name!r}")
            m = re.fullmatch(r"\s*(\S+)\s*->\s*(\S+)\s*", rest)
            if not m:
                raise ParseError(lineno, rest_col, "expected '<v> -> <w>'")
            src, tgt = m.group(1), m.group(2)
            for lab in (src, tgt):
                if lab not in seen_v:
                    raise UnknownVertex(lab, lineno)
            if name.startswith("e") and name[1:] in seen_v:
                raise ParseError(lineno, col + 6, f"arrow name {name!r} clashes with a trivial path")
            a = Arrow(name, src, tgt)
            seen_a[name] = a
            arrows.append(a)
        elif key == "zero":
            lit = rest.strip()
            if not lit:
                raise ParseError(lineno, rest_col, "empty relation")
            relations.append((lineno, rest_col + rest.index(lit), lit))
        else:
            raise ParseError(lineno, col, f"unknown keyword {key!r}")

    if not vertices:
        raise ParseError(1, 1, "no 'vertices:' line")
    pres = QuiverPresentation(tuple(vertices), tuple(arrows))
    forbidden = []
    for lineno, c, lit in relations:
        names = lit.split(".")
        for nm in names:
            if not pres.has_arrow(nm):
                raise UnknownArrow(nm, lineno)
        if len(names) < 2:
            raise ParseError(lineno, c, "zero relations need length >= 2")
        try:
            forbidden.append(pres.make_path(names))
        except ValueError as exc:
            raise ParseError(lineno, c, str(exc)) from None
    return QuiverPresentation(tuple(vertices), tuple(arrows), tuple(forbidden))


def format_presentation(p: QuiverPresentation) -> str:
    lines = ["vertices: " + " ".join(v.label for v in p.vertices)]
    lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in p.arrows]
    lines += [f"zero: {'.'.join(r.arrows)}" for r in p.forbidden]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class StringAlgebra:
    """A validated string algebra with its finite table of nonzero paths.

    Build one with :func:`validate`.  Instances are immutable.
    """

    presentation: QuiverPresentation
    nonzero_paths: frozenset
    _succ: dict = field(repr=False)
    _pred: dict = field(repr=False)

    # -- basic data ---------------------------------------------------
    @property
    def dimension(self) -> int:
        return len(self.nonzero_paths)

    @property
    def vertices(self) -> list[str]:
        return [v.label for v in self.presentation.vertices]

    @property
    def arrows(self) -> list[str]:
        return [a.name for a in self.presentation.arrows]

    @property
    def n(self) -> int:
        return len(self.presentation.vertices)

    def arrow(self, name: str) -> Arrow:
        return self.presentation.arrow(name)

    def out_arrows(self, v: str) -> list[str]:
        return sorted(a.name for a in self.presentation.arrows if a.source == str(v))

    def in_arrows(self, v: str) -> list[str]:
        return sorted(a.name for a in self.presentation.arrows if a.target == str(v))

    def successor(self, a: str) -> str | None:
        """The unique arrow b with a.b nonzero, if any."""
        return self._succ[a]

    def predecessor(self, a: str) -> str | None:
        """The unique arrow b with b.a nonzero, if any."""
        return self._pred[a]

    # -- paths --------------------------------------------------------
    def trivial(self, v) -> Path:
        self.presentation.vertex(str(v))
        return Path(str(v))

    def path(self, literal: str) -> Path:
        """Parse ``a.b.c`` or ``e<v>``; raise ValueError if the path is zero."""
        literal = literal.strip()
        if literal.startswith("e") and self.presentation.has_vertex(literal[1:]):
            return Path(literal[1:])
        p = self.presentation.make_path(literal.split("."))
        if p not in self.nonzero_paths:
            raise ValueError(f"path {literal} is zero in the algebra")
        return p

    def is_nonzero(self, p: Path) -> bool:
        return p in self.nonzero_paths

    def compose(self, p: Path, q: Path) -> Path | None:
        """``p`` after ``q``; None stands for zero."""
        if q.end != p.start:
            return None
        r = Path(q.start, q.arrows + p.arrows, p.end) if (p.arrows or q.arrows) else q
        return r if r in self.nonzero_paths else None

    def extend(self, p: Path, a: str) -> Path | None:
        """p followed by arrow a, or None if zero."""
        arr = self.arrow(a)
        if arr.source != p.end:
            return None
        r = Path(p.start, p.arrows + (a,), arr.target)
        return r if r in self.nonzero_paths else None

    def _extend_max(self, p: Path) -> Path:
        while p.arrows and (b := self._succ[p.arrows[-1]]) is not None:
            nxt = self.extend(p, b)
            if nxt is None:
                break
            p = nxt
        return p

    def longest_from_arrow(self, a: str) -> Path:
        """The maximal nonzero path whose first arrow is a."""
        arr = self.arrow(a)
        return self._extend_max(Path(arr.source, (a,), arr.target))

    def max_extension(self, p: Path, avoid: str | None = None) -> Path:
        """Longest path P with P after p nonzero (P starts at end(p)).

        For trivial p the companion's first arrow ``avoid`` must be given; the
        result is then the longest path from p's vertex not starting with it.
        """
        if p.arrows:
            full = self._extend_max(p)
            k = len(p.arrows)
            if len(full.arrows) == k:
                return Path(p.end)
            return Path(p.end, full.arrows[k:], full.end)
        if avoid is None:
            raise ValueError("max_extension of a trivial path needs the arrow to avoid")
        others = [a for a in self.out_arrows(p.start) if a != avoid]
        if not others:
            return Path(p.start)
        return self.longest_from_arrow(others[0])

    def chop_first(self, u: Path) -> Path | None:
        """Drop the first traversed arrow; None (zero) for trivial u."""
        if not u.arrows:
            return None
        a = self.arrow(u.arrows[0])
        return Path(a.target, u.arrows[1:], u.end)

    def branches(self, v: str) -> list[Path]:
        """Maximal nonzero paths from v, one per outgoing arrow, by arrow name."""
        return [self.longest_from_arrow(a) for a in self.out_arrows(v)]

    def projective_pair(self, v: str) -> tuple[Path, Path]:
        br = self.branches(str(v))
        while len(br) < 2:
            br.insert(0, Path(str(v)))
        return br[0], br[1]

    def paths_from(self, v: str) -> list[Path]:
        return sorted(p for p in self.nonzero_paths if p.start == str(v))

    def paths_to(self, v: str) -> list[Path]:
        return sorted(p for p in self.nonzero_paths if p.end == str(v))

    def nontrivial_paths(self) -> list[Path]:
        return sorted(p for p in self.nonzero_paths if p.arrows)

    def __repr__(self) -> str:
        return f"StringAlgebra(n={self.n}, arrows={len(self.arrows)}, dim={self.dimension})"


def _has_forbidden_suffix(arrows: tuple[str, ...], forb: set[tuple[str, ...]], maxlen: int) -> bool:
    for k in range(2, min(maxlen, len(arrows)) + 1):
        if arrows[-k:] in forb:
            return True
    return False


def _find_cycle(graph: dict) -> list | None:
    """Return one directed cycle of ``graph`` as a node list, or None."""
    color: dict = {}
    for root in graph:
        if root in color:
            continue
        stack = [(root, iter(graph[root]))]
        color[root] = 1
        trail = [root]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
                trail.pop()
                continue
            c = color.get(nxt, 0)
            if c == 1:
                return trail[trail.index(nxt):]
            if c == 0:
                color[nxt] = 1
                trail.append(nxt)
                stack.append((nxt, iter(graph[nxt])))
    return None


def validate(p: QuiverPresentation) -> StringAlgebra:
    """Check the string-algebra axioms and enumerate the nonzero paths.

    Raises DegreeViolation, StringConditionViolation or NotAdmissible.
    """
    for v in p.vertices:
        outs = [a for a in p.arrows if a.source == v.label]
        ins = [a for a in p.arrows if a.target == v.label]
        if len(outs) > 2:
            raise DegreeViolation(v.label, "outgoing", len(outs))
        if len(ins) > 2:
            raise DegreeViolation(v.label, "incoming", len(ins))

    forb = {r.arrows for r in p.forbidden}
    maxlen = max((len(r) for r in forb), default=2)

    succ: dict[str, str | None] = {}
    pred: dict[str, str | None] = {}
    for a in p.arrows:
        nxt = sorted(b.name for b in p.arrows if b.source == a.target and (a.name, b.name) not in forb)
        prv = sorted(b.name for b in p.arrows if b.target == a.source and (b.name, a.name) not in forb)
        if len(nxt) > 1:
            raise StringConditionViolation(a.name, "two nonzero successors", tuple(nxt))
        if len(prv) > 1:
            raise StringConditionViolation(a.name, "two nonzero predecessors", tuple(prv))
        succ[a.name] = nxt[0] if nxt else None
        pred[a.name] = prv[0] if prv else None

    # Suffix automaton: states are factor-free paths of length m; a cycle
    # means arbitrarily long factor-free paths exist.
    m = max(maxlen - 1, 1)
    out_of: dict[str, list[Arrow]] = {v.label: [] for v in p.vertices}
    for a in p.arrows:
        out_of[a.source].append(a)
    states: list[tuple[str, ...]] = []
    frontier = [(a.name,) for a in p.arrows]
    ends = {a.name: a.target for a in p.arrows}
    for _ in range(m - 1):
        nxt_front = []
        for s in frontier:
            for b in out_of[ends[s[-1]]]:
                t = s + (b.name,)
                if not _has_forbidden_suffix(t, forb, maxlen):
                    nxt_front.append(t)
        frontier = nxt_front
    states = frontier
    graph: dict[tuple[str, ...], list[tuple[str, ...]]] = {}
    for s in states:
        graph[s] = []
        for b in out_of[ends[s[-1]]]:
            t = s + (b.name,)
            if not _has_forbidden_suffix(t, forb, maxlen):
                graph[s].append(t[-m:])
    for s in list(graph):
        for t in graph[s]:
            graph.setdefault(t, [])
    cyc = _find_cycle(graph)
    if cyc is not None:
        raise NotAdmissible(tuple(s[-1] for s in cyc))

    paths: set[Path] = {Path(v.label) for v in p.vertices}
    queue = deque(Path(a.source, (a.name,), a.target) for a in p.arrows)
    while queue:
        q = queue.popleft()
        if q in paths:
            continue
        paths.add(q)
        for b in out_of[q.end]:
            t = q.arrows + (b.name,)
            if not _has_forbidden_suffix(t, forb, maxlen):
                queue.append(Path(q.start, t, b.target))

    alg = StringAlgebra(p, frozenset(paths), succ, pred)
    _assert_factor_closed(alg)
    return alg


def _assert_factor_closed(alg: StringAlgebra) -> None:
    # brute-force re-check of unique continuation and factor closure
    for q in alg.nonzero_paths:
        if len(q.arrows) >= 2:
            left = alg.presentation.make_path(q.arrows[1:])
            right = alg.presentation.make_path(q.arrows[:-1])
            assert left in alg.nonzero_paths and right in alg.nonzero_paths, q
    for a in alg.arrows:
        after = [b for b in alg.arrows if alg.extend(alg.path(a), b) is not None]
        assert len(after) <= 1, a


def load_algebra(text: str) -> StringAlgebra:
    return validate(parse_presentation(text))


def projective_word(alg: StringAlgebra, e: str) -> "FiniteWord":
    """The word A^-1 B whose string module is the projective cover of S_e."""
    from .words import FiniteWord

    a, b = alg.projective_pair(str(e))
    return FiniteWord(alg, ((a, b),))
