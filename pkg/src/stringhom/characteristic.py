"""Characteristic words of simple modules and contravariant finiteness.

For a vertex e the characteristic word is grown outward from e one pair
at a time.  Inverse syllables are taken as long as possible and direct ones
as short as possible, subject to the partial word still extending to a word
whose string module has finite projective dimension.  Whether a partial
word extends that way is a local question: it only involves the syzygy
terms at its two loose ends, see :func:`fpd_segment_test`.

Each side either stops or becomes periodic after at most 2n steps.  The
word is finite exactly when the simple module has a minimal approximation by
modules of finite projective dimension, and then St(w) is that
approximation.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import ConstructionInvariantViolation
from .modules import DimVector, StringModuleDescr, dim_vector, socle, top
from .presentation import Path, StringAlgebra
from .syzygy import INFINITE, SyzygyGraph, simple_word, syzygy_graph, uniserial, valley_term
from .words import CenteredWord, EventuallyPeriodicWord, FiniteWord, Pair, _swap


class Builder:
    """Holds the fpd oracle of one algebra and answers the local questions."""

    def __init__(self, alg: StringAlgebra, graph: SyzygyGraph | None = None):
        self.alg = alg
        self.g = graph or syzygy_graph(alg)
        self._into: dict[str, Path] = {}

    # -- fpd predicates ------------------------------------------------
    def fpd(self, w: FiniteWord | None) -> bool:
        return w is None or self.g.pdim(w) is not INFINITE

    def chop_fpd(self, u: Path) -> bool:
        """Is St(u with its first arrow removed) of finite projective dimension?"""
        return self.fpd(uniserial(self.alg, self.alg.chop_first(u)))

    def longest_into(self, b: str) -> Path:
        """The maximal nonzero path whose last arrow is b."""
        if b not in self._into:
            alg = self.alg
            arr = alg.arrow(b)
            p = Path(arr.source, (b,), arr.target)
            while (a := alg.predecessor(p.arrows[0])) is not None:
                src = alg.arrow(a).source
                cand = Path(src, (a,) + p.arrows, p.end)
                if not alg.is_nonzero(cand):
                    break
                p = cand
            self._into[b] = p
        return self._into[b]

    def rivals(self, path: Path) -> list[Path]:
        """Nonzero paths r ending where ``path`` ends, with a different last arrow.

        Longest first.
        """
        out = []
        for b in self.alg.in_arrows(path.end):
            if b == path.last:
                continue
            full = self.longest_into(b)
            for k in range(len(full.arrows)):
                arrows = full.arrows[k:]
                out.append(Path(self.alg.arrow(arrows[0]).source, arrows, full.end))
        out.sort(key=lambda r: -len(r.arrows))
        return out

    def valley_fpd(self, q: Path, p_next: Path) -> bool:
        return self.fpd(valley_term(self.alg, q, p_next))

    def extendable(self, path: Path) -> bool:
        """Can a word ending in the nontrivial direct syllable ``path`` be
        continued (or stopped) with finite projective dimension?"""
        if self.chop_fpd(self.alg.max_extension(path)):
            return True
        return any(self.valley_fpd(path, r) for r in self.rivals(path))

    def other_branch(self, e: str, first: str | None) -> Path:
        """The maximal path from e not starting with ``first`` (trivial if none)."""
        for a in self.alg.out_arrows(e):
            if a != first:
                return self.alg.longest_from_arrow(a)
        return Path(e)

    def side_ok(self, s: Path, other: Path) -> bool:
        if s.arrows:
            return self.extendable(s)
        if other.arrows:
            return self.chop_fpd(self.other_branch(s.start, other.first))
        return self.fpd(simple_word(self.alg, s.start))

    def segment_ok(self, p: Path, q: Path) -> bool:
        return self.side_ok(p, q) and self.side_ok(q, p)

    # -- construction steps --------------------------------------------
    def step0(self, e: str) -> tuple[Path, Path]:
        alg = self.alg
        e = str(e)
        if self.fpd(simple_word(alg, e)):
            return Path(e), Path(e)
        branches = alg.branches(e)
        while len(branches) < 2:
            branches.append(Path(e))
        chosen = []
        for b in branches:
            for k in range(len(b.arrows) + 1):
                s = Path(e, b.arrows[:k], alg.arrow(b.arrows[k - 1]).target if k else e)
                if k == 0:
                    if b.arrows and not self.chop_fpd(b):
                        continue
                    chosen.append(s)
                    break
                if self.extendable(s):
                    chosen.append(s)
                    break
            else:
                raise ConstructionInvariantViolation(f"no admissible prefix on branch {b}")
        a, b = chosen
        # orientation: a lone nontrivial syllable goes right; otherwise the
        # syllable with the smaller first arrow goes left
        if a.trivial and b.trivial:
            raise ConstructionInvariantViolation(f"S{e} has infinite pdim but both sides may stop")
        if a.trivial:
            return a, b
        if b.trivial:
            return b, a
        return (a, b) if a.first < b.first else (b, a)

    def next_pair(self, q_prev: Path) -> Pair | None:
        """Longest p after q_prev, then shortest q; None when the side stops."""
        if q_prev.trivial:
            return None
        p = next((r for r in self.rivals(q_prev) if self.valley_fpd(q_prev, r)), None)
        if p is None:
            return None
        e = p.start
        branch = self.other_branch(e, p.first)
        if self.chop_fpd(branch) if branch.arrows else True:
            return p, Path(e)
        for k in range(1, len(branch.arrows) + 1):
            arrows = branch.arrows[:k]
            q = Path(e, arrows, self.alg.arrow(arrows[-1]).target)
            if self.extendable(q):
                return p, q
        raise ConstructionInvariantViolation(f"no admissible direct syllable after {p}")

    def grow(self, q0: Path, limit: int) -> tuple[tuple[Pair, ...], tuple[Pair, ...], int]:
        """Pairs to the right of q0: (preperiod, period, steps taken)."""
        pairs: list[Pair] = []
        seen = {q0: 0}
        by_arrow: dict[str, Path] = {}
        q = q0
        steps = 0
        while True:
            nxt = self.next_pair(q)
            if nxt is not None and q.last is not None:
                prev = by_arrow.setdefault(q.last, nxt[0])
                if prev != nxt[0]:
                    raise ConstructionInvariantViolation(
                        f"paths after {q.last} differ: {prev} vs {nxt[0]}"
                    )
            if nxt is None:
                return tuple(pairs), (), steps
            steps += 1
            if steps > limit:
                raise ConstructionInvariantViolation(f"no periodicity after {limit} steps")
            pairs.append(nxt)
            q = nxt[1]
            if q.trivial:
                return tuple(pairs), (), steps
            if q in seen:
                k = seen[q]
                return tuple(pairs[:k]), tuple(pairs[k:]), steps
            seen[q] = len(pairs)

    def build(self, e: str) -> "CharacteristicWord":
        alg = self.alg
        e = str(e)
        p0, q0 = self.step0(e)
        limit = 2 * alg.n + 1
        right_pre, right_per, rs = self.grow(q0, limit)
        left_pre, left_per, ls = self.grow(p0, limit)
        core = _swap(left_pre) + ((p0, q0),) + right_pre
        word = EventuallyPeriodicWord(alg, _swap(left_per), core, right_per)
        cw = CenteredWord(word, len(left_pre))
        return CharacteristicWord(
            e,
            cw,
            left=(len(left_per), len(left_pre) + 1) if left_per else None,
            right=(len(right_per), len(right_pre) + 1) if right_per else None,
            steps=(ls, rs),
        )


@functools.lru_cache(maxsize=64)
def builder(alg: StringAlgebra) -> Builder:
    return Builder(alg)


@dataclass(frozen=True)
class CharacteristicWord:
    """Centered characteristic word of the simple module at ``vertex``.

    ``left`` / ``right`` are None for a side that terminates, otherwise
    (period length in pairs, index of the first periodic pair counted from
    the center).
    """

    vertex: str
    centered: CenteredWord
    left: tuple[int, int] | None
    right: tuple[int, int] | None
    steps: tuple[int, int] = (0, 0)

    @property
    def word(self) -> EventuallyPeriodicWord:
        return self.centered.word

    @property
    def finite(self) -> bool:
        return self.word.finite

    @property
    def trivial(self) -> bool:
        w = self.word
        return w.finite and len(w.core) == 1 and w.core[0][0].trivial and w.core[0][1].trivial

    def literal(self) -> str:
        return self.centered.literal()

    def __str__(self) -> str:
        return self.literal()


def fpd_segment_test(alg: StringAlgebra, p: Path, q: Path) -> bool:
    """Is p^-1 q a segment of a word whose string module has finite pdim?"""
    FiniteWord(alg, ((p, q),))
    return builder(alg).segment_ok(p, q)


def step0(alg: StringAlgebra, e) -> tuple[Path, Path]:
    return builder(alg).step0(str(e))


def extend_right(alg: StringAlgebra, q_prev: Path) -> Pair | None:
    return builder(alg).next_pair(q_prev)


def extend_left(alg: StringAlgebra, p_prev: Path) -> Pair | None:
    """Mirror of extend_right: the pair (p, q) placed to the left of p_prev."""
    nxt = builder(alg).next_pair(p_prev)
    return None if nxt is None else (nxt[1], nxt[0])


def build_characteristic_word(alg: StringAlgebra, e) -> CharacteristicWord:
    return builder(alg).build(str(e))


# ---------------------------------------------------------------------------
# approximations


@dataclass(frozen=True)
class ApproxResult:
    """Approximated(St(w), center) when w is finite, otherwise Phantom(w)."""

    vertex: str
    char_word: CharacteristicWord

    @property
    def approximated(self) -> bool:
        return self.char_word.finite

    @property
    def status(self) -> str:
        return "approximated" if self.approximated else "phantom"

    @property
    def module(self) -> StringModuleDescr | None:
        if not self.approximated:
            return None
        return StringModuleDescr(self.char_word.word.alg, self.char_word.word.as_finite())

    @property
    def center_top(self) -> int:
        """Index of the top element sent to e + Je by the canonical map."""
        return self.char_word.centered.center

    def dims(self) -> DimVector | None:
        m = self.module
        return dim_vector(m) if m else None

    def top(self) -> DimVector | None:
        m = self.module
        return top(m) if m else None

    def socle(self) -> DimVector | None:
        m = self.module
        return socle(m) if m else None

    def to_json(self) -> dict:
        cw = self.char_word
        out: dict = {"simple": self.vertex, "status": self.status, "word": cw.literal(), "center": cw.centered.center}
        if self.approximated:
            out["dims"] = self.dims().as_dict()
            out["top"] = self.top().as_dict()
            out["socle"] = self.socle().as_dict()
        else:
            out["periods"] = {
                "left": None if cw.left is None else {"length": cw.left[0], "onset": cw.left[1]},
                "right": None if cw.right is None else {"length": cw.right[0], "onset": cw.right[1]},
            }
        return out


def minimal_approximation(alg: StringAlgebra, e) -> ApproxResult:
    return ApproxResult(str(e), build_characteristic_word(alg, e))


@dataclass(frozen=True)
class CFReport:
    per_simple: tuple[ApproxResult, ...]

    @property
    def contravariantly_finite(self) -> bool:
        return all(r.approximated for r in self.per_simple)

    def __getitem__(self, v) -> ApproxResult:
        for r in self.per_simple:
            if r.vertex == str(v):
                return r
        raise KeyError(v)

    def to_json(self) -> dict:
        return {
            "contravariantly_finite": self.contravariantly_finite,
            "simples": [r.to_json() for r in self.per_simple],
        }


def cf_report(alg: StringAlgebra) -> CFReport:
    return CFReport(tuple(minimal_approximation(alg, v) for v in alg.vertices))


# ---------------------------------------------------------------------------
# structural checks


def principal_segments(cw: CharacteristicWord) -> tuple[EventuallyPeriodicWord, EventuallyPeriodicWord]:
    """Right half e^-1 q_0 p_1^-1 ... and the inverted left half e^-1 p_0 q_-1^-1 ..."""
    w, c = cw.word, cw.centered.center
    return w.segment_from(c), w.inverse().segment_from(len(w.core) - 1 - c)


def segment_coherence(alg: StringAlgebra, e, depth: int | None = None) -> list[tuple[int, str]]:
    """Offsets i where the tail q_i p_{i+1}^-1 ... of w(S_e) is not a principal
    segment of w(S_e(i)); negative i for the left side.  Empty when coherent."""
    cw = build_characteristic_word(alg, e)
    depth = depth or 2 * alg.n + 1
    failures = []
    for sign in (1, -1):
        w = cw.word if sign > 0 else cw.word.inverse()
        c = cw.centered.center if sign > 0 else len(cw.word.core) - 1 - cw.centered.center
        for i in range(1, depth + 1):
            k = c + i
            if not w.right and k >= len(w.core):
                break
            if w.pair_at(k - 1)[0].trivial:
                continue
            seg = w.segment_from(k)
            v = seg.core[0][1].start
            target = seg.canonical()
            if not any(s.canonical() == target for s in principal_segments(build_characteristic_word(alg, v))):
                failures.append((sign * i, v))
    return failures


def approximation_bounds(alg: StringAlgebra, report: CFReport | None = None) -> dict[str, tuple[int, int]]:
    """Per simple: (top length, largest top multiplicity) of its approximation."""
    report = report or cf_report(alg)
    out = {}
    for r in report.per_simple:
        if r.approximated:
            t = r.top()
            out[r.vertex] = (t.total, max(n for _, n in t.counts))
    return out
