"""String and pseudo-band module descriptors.

The graph of a word has one node per letter boundary; an arrow letter
``a`` joins consecutive nodes, pointing from the node at ``source(a)`` to
the node at ``target(a)``.  Top nodes have no incoming edge, socle nodes no
outgoing one.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InfiniteModule, MalformedBandWord
from .presentation import StringAlgebra, projective_word
from .words import CenteredWord, EventuallyPeriodicWord, FiniteWord, Pair, is_primitive, power


@dataclass(frozen=True)
class DimVector:
    """Per-vertex counts, listed in vertex order."""

    counts: tuple[tuple[str, int], ...]

    @classmethod
    def from_counter(cls, alg: StringAlgebra, c: Counter | dict) -> "DimVector":
        return cls(tuple((v, int(c.get(v, 0))) for v in alg.vertices))

    @property
    def total(self) -> int:
        return sum(n for _, n in self.counts)

    def __getitem__(self, v) -> int:
        return dict(self.counts).get(str(v), 0)

    def as_dict(self, nonzero: bool = True) -> dict[str, int]:
        return {v: n for v, n in self.counts if n or not nonzero}

    def __eq__(self, other) -> bool:
        # zero entries are immaterial: the empty vector equals an all-zero one
        if not isinstance(other, DimVector):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.as_dict().items())))

    def __add__(self, other: "DimVector") -> "DimVector":
        o = dict(other.counts)
        if not self.counts:
            return other
        return DimVector(tuple((v, n + o.get(v, 0)) for v, n in self.counts))

    def scale(self, k: int) -> "DimVector":
        return DimVector(tuple((v, n * k) for v, n in self.counts))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{v}:{n}" for v, n in self.counts if n) + "}"


@dataclass
class WordGraph:
    """Nodes carry vertex labels; edges are (source node, target node, arrow)."""

    nodes: list[str]
    edges: list[tuple[int, int, str]]
    tops: list[int] = field(default_factory=list)
    glue: tuple[int, list[tuple[int, int]]] | None = None

    def incoming(self) -> Counter:
        return Counter(t for _, t, _ in self.edges)

    def outgoing(self) -> Counter:
        return Counter(s for s, _, _ in self.edges)

    def top_nodes(self) -> list[int]:
        inc = self.incoming()
        return [i for i in range(len(self.nodes)) if not inc[i]]

    def socle_nodes(self) -> list[int]:
        out = self.outgoing()
        return [i for i in range(len(self.nodes)) if not out[i]]


def word_graph(alg: StringAlgebra, pairs: Sequence[Pair]) -> WordGraph:
    """Graph of the string ``p_0^-1 q_0 ... p_t^-1 q_t`` (letters left to right)."""
    p0 = pairs[0][0]
    nodes = [p0.end]
    edges: list[tuple[int, int, str]] = []
    tops: list[int] = []
    for p, q in pairs:
        for a in reversed(p.arrows):
            arr = alg.arrow(a)
            nodes.append(arr.source)
            edges.append((len(nodes) - 1, len(nodes) - 2, a))
        tops.append(len(nodes) - 1)
        for a in q.arrows:
            arr = alg.arrow(a)
            nodes.append(arr.target)
            edges.append((len(nodes) - 2, len(nodes) - 1, a))
    return WordGraph(nodes, edges, tops)


def band_graph(alg: StringAlgebra, v: FiniteWord, r: int) -> WordGraph:
    """Graph of v^r with its last node glued onto the first socle node of each copy.

    ``glue`` records (node, [(copy index, node)]) for the identification.
    """
    g = word_graph(alg, power(v, r).pairs)
    L = len(v)
    last = len(g.nodes) - 1
    src, tgt, a = g.edges[-1]
    assert tgt == last
    # the final node becomes a combination of nodes 0, L, 2L, ...
    g.glue = (src, [(i, i * L) for i in range(r)])
    g.edges[-1] = (src, 0, a)
    g.nodes.pop()
    return g


@dataclass(frozen=True)
class StringModuleDescr:
    algebra: StringAlgebra
    word: FiniteWord | EventuallyPeriodicWord | CenteredWord

    def finite_word(self) -> FiniteWord:
        w = self.word
        if isinstance(w, CenteredWord):
            w = w.word
        if isinstance(w, EventuallyPeriodicWord):
            if not w.finite:
                raise InfiniteModule(f"St({w}) is infinite dimensional")
            w = w.as_finite()
        return w

    def graph(self) -> WordGraph:
        return word_graph(self.algebra, self.finite_word().pairs)

    def __str__(self) -> str:
        return f"St({self.word})"


@dataclass(frozen=True)
class PseudoBandDescr:
    algebra: StringAlgebra
    v: FiniteWord
    r: int = 1
    scalars: tuple[int, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "scalars", tuple(int(c) for c in self.scalars))
        if self.r < 1:
            raise MalformedBandWord("band power r must be positive")
        if len(self.scalars) != self.r:
            raise MalformedBandWord(f"band needs {self.r} scalars, got {len(self.scalars)}")
        if self.scalars[0] == 0:
            raise MalformedBandWord("first band scalar must be nonzero")
        if not is_primitive(self.v):
            raise MalformedBandWord(f"{self.v} is not a primitive band word")

    def graph(self) -> WordGraph:
        return band_graph(self.algebra, self.v, self.r)

    def __str__(self) -> str:
        return f"Bd(({self.v})^{self.r}, {','.join(map(str, self.scalars))})"


Module = StringModuleDescr | PseudoBandDescr


def _graph_of(m) -> tuple[StringAlgebra, WordGraph]:
    if isinstance(m, (FiniteWord,)):
        m = StringModuleDescr(m.alg, m)
    return m.algebra, m.graph()


def dim_vector(m) -> DimVector:
    alg, g = _graph_of(m)
    return DimVector.from_counter(alg, Counter(g.nodes))


def top(m) -> DimVector:
    alg, g = _graph_of(m)
    return DimVector.from_counter(alg, Counter(g.nodes[i] for i in g.top_nodes()))


def socle(m) -> DimVector:
    alg, g = _graph_of(m)
    return DimVector.from_counter(alg, Counter(g.nodes[i] for i in g.socle_nodes()))


def projective_keys(alg: StringAlgebra) -> dict:
    return {projective_word(alg, v).key(): v for v in alg.vertices}


def is_projective(m) -> bool:
    w = m.finite_word() if isinstance(m, StringModuleDescr) else m
    return w.key() in projective_keys(w.alg)


def projective_vertex(w: FiniteWord) -> str | None:
    """Vertex e with St(w) isomorphic to the projective cover of S_e, if any."""
    return projective_keys(w.alg).get(w.key())


# ---------------------------------------------------------------------------
# DOT rendering


def _dot_escape(s: str) -> str:
    return s.replace('"', r"\"")


def render_dot(m, window: int = 3, name: str = "M") -> str:
    """Layered DOT graph of a string or band module.

    Periodic words are cut to ``window`` pairs on either side of the center
    and the cut ends are drawn as ellipsis nodes.
    """
    ellipsis_left = ellipsis_right = False
    center = None
    if isinstance(m, PseudoBandDescr):
        alg, g = m.algebra, m.graph()
    else:
        if isinstance(m, FiniteWord):
            m = StringModuleDescr(m.alg, m)
        w = m.word
        alg = m.algebra
        c = 0
        if isinstance(w, CenteredWord):
            c, w = w.center, w.word
            center = c
        if isinstance(w, FiniteWord):
            w = EventuallyPeriodicWord.from_finite(w)
        lo, hi = c - window, c + window
        if not w.left:
            lo = max(lo, 0)
        else:
            ellipsis_left = True
        if not w.right:
            hi = min(hi, len(w.core) - 1)
        else:
            ellipsis_right = True
        pairs = [w.pair_at(i) for i in range(lo, hi + 1)]
        g = word_graph(alg, pairs)
        if center is not None:
            center = g.tops[center - lo]

    # radical layer = longest path from a top node
    # (the glued edge of a band closes a cycle, so it is left out here)
    layered = g.edges[:-1] if g.glue is not None else g.edges
    depth = [0] * len(g.nodes)
    for _ in range(len(g.nodes)):
        for s, t, _ in layered:
            depth[t] = max(depth[t], depth[s] + 1)
    lines = [f'digraph "{_dot_escape(name)}" {{', "  rankdir=TB;", "  node [shape=plaintext];"]
    for i, lab in enumerate(g.nodes):
        extra = ', shape=circle' if i == center else ""
        lines.append(f'  n{i} [label="{_dot_escape(lab)}", pos="{i},{-depth[i]}"{extra}];')
    for d in sorted(set(depth)):
        same = " ".join(f"n{i};" for i, x in enumerate(depth) if x == d)
        lines.append(f"  {{ rank=same; {same} }}")
    for s, t, a in g.edges:
        lines.append(f'  n{s} -> n{t} [label="{_dot_escape(a)}", arrowhead=none];')
    if g.glue is not None:
        src, targets = g.glue
        for _, node in targets[1:]:
            lines.append(f"  n{src} -> n{node} [style=dashed, arrowhead=none];")
    if ellipsis_left:
        lines.append('  left [label="..."];')
        lines.append("  left -> n0 [style=dotted, arrowhead=none];")
    if ellipsis_right:
        lines.append('  right [label="..."];')
        lines.append(f"  n{len(g.nodes) - 1} -> right [style=dotted, arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
