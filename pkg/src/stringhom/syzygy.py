"""Syzygies of string and band modules and the dimensions they determine.

Every first syzygy of a string or band module is a direct sum of cyclic
string modules St(P^-1 Q) where P, Q are maximal continuations of the
syllables around a valley, plus uniserial end terms.  Projective dimension
is then a longest-path question on the finite graph whose nodes are cyclic
words; a reachable cycle means infinite projective dimension.
"""
from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .modules import DimVector, PseudoBandDescr, StringModuleDescr, dim_vector, projective_keys
from .presentation import Path, StringAlgebra
from .words import CenteredWord, EventuallyPeriodicWord, FiniteWord, Pair, primitive_root


class _Infinite:
    """Projective dimension infinity; absorbs addition and beats every int."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("infinite")

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"


INFINITE = _Infinite()
PDim = int | _Infinite


def is_finite(d) -> bool:
    return d is not INFINITE


def format_pdim(d) -> str:
    return str(d)


# ---------------------------------------------------------------------------
# syzygy terms


def uniserial(alg: StringAlgebra, u: Path | None) -> FiniteWord | None:
    if u is None:
        return None
    return FiniteWord(alg, ((Path(u.start), u),)).canonical()


def end_term(alg: StringAlgebra, outer: Path, inner: Path) -> FiniteWord | None:
    """Summand contributed by a free end of a word.

    ``outer`` is the flanking syllable (p_0 or q_t), ``inner`` its partner in
    the same pair.  None stands for the zero module.
    """
    if outer.arrows:
        ext = alg.max_extension(outer)
    else:
        ext = alg.max_extension(outer, avoid=inner.first or "")
    return uniserial(alg, alg.chop_first(ext))


def valley_term(alg: StringAlgebra, q: Path, p_next: Path) -> FiniteWord:
    """St(P^-1 Q) for the valley where q meets p_next."""
    P = alg.max_extension(p_next)
    Q = alg.max_extension(q)
    return FiniteWord(alg, ((P, Q),)).canonical()


@dataclass(frozen=True)
class SyzygyDecomposition:
    """Multiset of cyclic string words.

    ``summands`` is the finite part; ``left_tail`` / ``right_tail`` hold the
    summands contributed by one repetition of a left or right period and
    occur infinitely often.
    """

    summands: tuple[tuple[FiniteWord, int], ...]
    left_tail: tuple[tuple[FiniteWord, int], ...] | None = None
    right_tail: tuple[tuple[FiniteWord, int], ...] | None = None
    left_period: int = 0
    right_period: int = 0

    @staticmethod
    def collect(words: Iterable[FiniteWord | None], scale: int = 1) -> tuple[tuple[FiniteWord, int], ...]:
        c: Counter = Counter()
        rep = {}
        for w in words:
            if w is None:
                continue
            k = w.key()
            c[k] += scale
            rep[k] = w.canonical()
        return tuple((rep[k], c[k]) for k in sorted(c))

    @property
    def periodic(self) -> bool:
        return self.left_tail is not None or self.right_tail is not None

    @property
    def zero(self) -> bool:
        return not self.summands and not self.periodic

    def words(self) -> list[FiniteWord]:
        out = [w for w, _ in self.summands]
        for tail in (self.left_tail, self.right_tail):
            if tail:
                out += [w for w, _ in tail]
        return out

    def dim_vector(self) -> DimVector:
        if self.periodic:
            raise ValueError("periodic decomposition is infinite dimensional")
        alg = self.summands[0][0].alg if self.summands else None
        if alg is None:
            return DimVector(())
        total = DimVector.from_counter(alg, {})
        for w, m in self.summands:
            total = total + dim_vector(w).scale(m)
        return total

    def to_json(self) -> dict:
        def rows(ts):
            return [{"word": str(w), "mult": m} for w, m in ts]

        out: dict = {"summands": rows(self.summands), "periodic": {}}
        if self.left_tail is not None:
            out["periodic"]["left"] = {"summands": rows(self.left_tail), "period": self.left_period}
        if self.right_tail is not None:
            out["periodic"]["right"] = {"summands": rows(self.right_tail), "period": self.right_period}
        return out

    def __str__(self) -> str:
        parts = [f"{m}x St({w})" if m > 1 else f"St({w})" for w, m in self.summands]
        if self.left_tail is not None:
            parts.append("left period: " + ", ".join(f"St({w})" for w, _ in self.left_tail))
        if self.right_tail is not None:
            parts.append("right period: " + ", ".join(f"St({w})" for w, _ in self.right_tail))
        return " + ".join(parts) if parts else "0"


def _simple_terms(alg: StringAlgebra, e: str) -> list[FiniteWord | None]:
    return [uniserial(alg, alg.chop_first(b)) for b in alg.branches(e)]


def syzygy_cyclic(alg: StringAlgebra, p: Path, q: Path, e: str | None = None) -> SyzygyDecomposition:
    """First syzygy of St(p^-1 q), both paths starting at e."""
    w = FiniteWord(alg, ((p, q),))
    if e is not None and p.start != str(e):
        raise ValueError(f"paths do not start at {e}")
    return syzygy_string(w)


def _terms(w: FiniteWord) -> list[FiniteWord | None]:
    alg = w.alg
    if w.trivial:
        return _simple_terms(alg, w.pairs[0][0].start)
    pairs = w.pairs
    out = [end_term(alg, pairs[0][0], pairs[0][1])]
    for (p, q), (pn, qn) in zip(pairs, pairs[1:]):
        out.append(valley_term(alg, q, pn))
    out.append(end_term(alg, pairs[-1][1], pairs[-1][0]))
    return out


def syzygy_string(w: FiniteWord) -> SyzygyDecomposition:
    """First syzygy of a finite string module."""
    if isinstance(w, EventuallyPeriodicWord):
        return syzygy_string_periodic(w)
    return SyzygyDecomposition(SyzygyDecomposition.collect(_terms(w)))


def _cyclic_valleys(alg: StringAlgebra, pairs: tuple[Pair, ...]) -> list[FiniteWord]:
    n = len(pairs)
    return [valley_term(alg, pairs[i][1], pairs[(i + 1) % n][0]) for i in range(n)]


def syzygy_string_periodic(w: EventuallyPeriodicWord | CenteredWord) -> SyzygyDecomposition:
    """First syzygy of St(...uuu core vvv...).

    The finite part holds the end terms of finite sides and the valleys of the
    core including its junctions with the periods.
    """
    if isinstance(w, CenteredWord):
        w = w.word
    if w.finite:
        return syzygy_string(w.as_finite())
    alg = w.alg
    u = primitive_root(w.left) if w.left else ()
    v = primitive_root(w.right) if w.right else ()
    core = w.core
    seq = (u[-1:] if u else ()) + core + (v[:1] if v else ())
    finite: list[FiniteWord | None] = []
    if not u:
        finite.append(end_term(alg, seq[0][0], seq[0][1]))
    if not v:
        finite.append(end_term(alg, seq[-1][1], seq[-1][0]))
    for (p, q), (pn, qn) in zip(seq, seq[1:]):
        finite.append(valley_term(alg, q, pn))
    left_tail = SyzygyDecomposition.collect(_cyclic_valleys(alg, u)) if u else None
    right_tail = SyzygyDecomposition.collect(_cyclic_valleys(alg, v)) if v else None
    return SyzygyDecomposition(
        SyzygyDecomposition.collect(finite), left_tail, right_tail, len(u), len(v)
    )


def syzygy_band(b: PseudoBandDescr) -> SyzygyDecomposition:
    """First syzygy of Bd(v^r, c): r copies of each cyclic valley of v."""
    return SyzygyDecomposition(SyzygyDecomposition.collect(_cyclic_valleys(b.algebra, b.v.pairs), b.r))


def syzygy(x) -> SyzygyDecomposition:
    if isinstance(x, PseudoBandDescr):
        return syzygy_band(x)
    if isinstance(x, StringModuleDescr):
        x = x.word
    if isinstance(x, CenteredWord):
        x = x.word
    if isinstance(x, EventuallyPeriodicWord):
        return syzygy_string_periodic(x)
    return syzygy_string(x)


# ---------------------------------------------------------------------------
# projective dimension


class SyzygyGraph:
    """Memoized projective dimensions of cyclic (and other finite) string words."""

    def __init__(self, alg: StringAlgebra):
        self.alg = alg
        self.proj = projective_keys(alg)
        self.memo: dict[tuple, PDim] = {}
        self.children: dict[tuple, tuple[FiniteWord, ...]] = {}

    def is_projective(self, w: FiniteWord) -> bool:
        return w.key() in self.proj

    def _kids(self, w: FiniteWord) -> tuple[FiniteWord, ...]:
        k = w.key()
        if k not in self.children:
            if self.is_projective(w):
                self.children[k] = ()
            else:
                d = syzygy_string(w)
                assert d.summands, f"nonprojective St({w}) has zero syzygy"
                self.children[k] = tuple(x for x, _ in d.summands)
        return self.children[k]

    def pdim(self, w: FiniteWord) -> PDim:
        """Iterative DFS; a grey node met again certifies a reachable cycle."""
        root = w.key()
        if root in self.memo:
            return self.memo[root]
        state: dict[tuple, int] = {}
        stack: list[tuple[FiniteWord, int, PDim]] = [(w, 0, -1)]
        state[root] = 1
        while stack:
            node, i, best = stack[-1]
            kids = self._kids(node)
            if i < len(kids):
                stack[-1] = (node, i + 1, best)
                child = kids[i]
                ck = child.key()
                if ck in self.memo:
                    val = self.memo[ck]
                elif state.get(ck) == 1:
                    val = INFINITE
                else:
                    state[ck] = 1
                    stack.append((child, 0, -1))
                    continue
                stack[-1] = (node, i + 1, max(best, val))
                continue
            stack.pop()
            nk = node.key()
            val = 0 if not kids else best + 1
            self.memo[nk] = val
            state[nk] = 2
            if stack:
                parent, j, pbest = stack[-1]
                stack[-1] = (parent, j, max(pbest, val))
        return self.memo[root]

    def chain(self, w: FiniteWord, limit: int = 50) -> list[list[FiniteWord]]:
        """Breadth-first syzygy layers of St(w), up to ``limit`` layers."""
        layers = [[w.canonical()]]
        for _ in range(limit):
            nxt: dict = {}
            for x in layers[-1]:
                for c in self._kids(x):
                    nxt.setdefault(c.key(), c)
            if not nxt:
                break
            layers.append([nxt[k] for k in sorted(nxt)])
        return layers


@functools.lru_cache(maxsize=64)
def syzygy_graph(alg: StringAlgebra) -> SyzygyGraph:
    return SyzygyGraph(alg)


def _max_pdim(graph: SyzygyGraph, words: Iterable[FiniteWord]) -> PDim:
    best: PDim = -1
    for w in words:
        d = graph.pdim(w)
        if d is INFINITE:
            return INFINITE
        best = max(best, d)
    return best


def pdim(x, alg: StringAlgebra | None = None) -> PDim:
    """Projective dimension of a string word, periodic word, band or descriptor."""
    if isinstance(x, StringModuleDescr):
        x = x.word
    if isinstance(x, CenteredWord):
        x = x.word
    if isinstance(x, EventuallyPeriodicWord) and x.finite:
        x = x.as_finite()
    if isinstance(x, PseudoBandDescr):
        g = syzygy_graph(x.algebra)
        return 1 + _max_pdim(g, syzygy_band(x).words())
    if isinstance(x, EventuallyPeriodicWord):
        g = syzygy_graph(x.alg)
        d = syzygy_string_periodic(x)
        return 1 + _max_pdim(g, d.words())
    return syzygy_graph(x.alg).pdim(x)


def simple_word(alg: StringAlgebra, e: str) -> FiniteWord:
    return FiniteWord(alg, ((Path(str(e)), Path(str(e))),))


def cyclic_words(alg: StringAlgebra) -> list[FiniteWord]:
    """All words p^-1 q with p, q nonzero paths from one vertex, up to inversion."""
    out = {}
    for v in alg.vertices:
        paths = alg.paths_from(v)
        for p in paths:
            for q in paths:
                if p.arrows and q.arrows and p.first == q.first:
                    continue
                w = FiniteWord(alg, ((p, q),))
                out.setdefault(w.key(), w.canonical())
    return [out[k] for k in sorted(out)]


# ---------------------------------------------------------------------------
# finitistic and global dimension


@dataclass(frozen=True)
class TMember:
    word: FiniteWord
    pdim: int
    witness: tuple[Path, ...]

    def describe(self) -> str:
        paths = " + ".join(f"{p}.x" for p in self.witness)
        return f"St({self.word}) = Lambda({paths})"


@dataclass(frozen=True)
class TSet:
    members: tuple[TMember, ...]

    def words(self) -> list[FiniteWord]:
        return [m.word for m in self.members]

    def keys(self) -> set:
        return {m.word.key() for m in self.members}

    def __len__(self) -> int:
        return len(self.members)


def enumerate_T(alg: StringAlgebra) -> TSet:
    """Cyclic string modules of finite projective dimension inside the radical.

    Candidates are the uniserials generated by a.x for a nonzero path a of
    positive length, and the modules generated by a.x + b.x' where a and b
    end at the same vertex with different last arrows (x, x' tops of
    possibly different indecomposable projectives).
    """
    g = syzygy_graph(alg)
    found: dict[tuple, TMember] = {}
    paths = alg.nontrivial_paths()

    def offer(w: FiniteWord, witness: tuple[Path, ...]):
        k = w.key()
        if k in found:
            old = found[k]
            if (sum(p.length for p in witness), witness) >= (sum(p.length for p in old.witness), old.witness):
                return
        d = g.pdim(w)
        if d is INFINITE:
            return
        found[k] = TMember(w.canonical(), d, witness)

    for a in paths:
        u = alg.max_extension(a)
        offer(FiniteWord(alg, ((Path(u.start), u),)), (a,))
    by_end: dict[str, list[Path]] = {}
    for a in paths:
        by_end.setdefault(a.end, []).append(a)
    for v, ps in by_end.items():
        for a in ps:
            for b in ps:
                if a.last >= b.last:
                    continue
                w = FiniteWord(alg, ((alg.max_extension(a), alg.max_extension(b)),))
                offer(w, (a, b))
    return TSet(tuple(found[k] for k in sorted(found)))


def findim(alg: StringAlgebra) -> tuple[int, int]:
    """(little, big) finitistic dimension; both equal t + 1 for t = max pdim over T."""
    T = enumerate_T(alg)
    t = max((m.pdim for m in T.members), default=-1)
    return t + 1, t + 1


def gldim(alg: StringAlgebra) -> PDim:
    return _max_pdim(syzygy_graph(alg), (simple_word(alg, e) for e in alg.vertices))
