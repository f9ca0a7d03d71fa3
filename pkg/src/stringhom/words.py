"""Words over a string algebra.

A finite word is a list of pairs ``(p_i, q_i)`` standing for
``p_0^-1 q_0 p_1^-1 q_1 ... p_t^-1 q_t``.  Both paths of a pair start at the
same vertex e(i); ``q_i`` and ``p_{i+1}`` end at the same vertex.  Only
``p_0`` and ``q_t`` may be trivial.

Literals read left to right: ``a`` walks along arrow a, ``a^`` walks against
it.  So ``c^ b^ d`` is the pair (b.c, d).  ``e1`` is the trivial path at
vertex 1 and may appear at the ends of a word (``e1^ b``, ``a^ e2``) or
alone.  Eventually periodic words are written ``[u]* core *[v]`` and denote
``...u u u core v v v...``; a side without period is written as a bare
``*`` when the other side has one.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedBandWord, NotAWord, NotFinite
from .presentation import Path, StringAlgebra

Pair = tuple[Path, Path]
Token = tuple[str, int]


def _pair_tokens(pair: Pair) -> list[Token]:
    p, q = pair
    return [(a, 0) for a in reversed(p.arrows)] + [(a, 1) for a in q.arrows]


def _letters(pairs: Sequence[Pair]) -> list[str]:
    out = []
    for p, q in pairs:
        out += [a + "^" for a in reversed(p.arrows)]
        out += list(q.arrows)
    return out


def _swap(pairs: Sequence[Pair]) -> tuple[Pair, ...]:
    return tuple((q, p) for p, q in reversed(pairs))


def pair_ok(p: Path, q: Path) -> bool:
    if p.start != q.start:
        return False
    return p.trivial or q.trivial or p.first != q.first


def junction_ok(q: Path, p_next: Path) -> bool:
    if q.end != p_next.end:
        return False
    return q.trivial or p_next.trivial or q.last != p_next.last


def check_pairs(alg: StringAlgebra, pairs: Sequence[Pair], *, closed_left=False, closed_right=False) -> None:
    """Raise NotAWord unless ``pairs`` satisfy the word axioms.

    ``closed_left`` / ``closed_right`` forbid trivial flank syllables, as
    needed inside periods.
    """
    if not pairs:
        raise NotAWord(0, "empty word")
    pos = 0
    last = len(pairs) - 1
    for i, (p, q) in enumerate(pairs):
        for path in (p, q):
            if not alg.is_nonzero(path):
                raise NotAWord(pos, f"syllable {path} is zero")
        if not pair_ok(p, q):
            raise NotAWord(pos + len(p.arrows), f"W1 fails at pair {i}: {p} and {q}")
        if p.trivial and (i > 0 or closed_left):
            raise NotAWord(pos, f"W3 fails: trivial syllable inside the word at pair {i}")
        if q.trivial and (i < last or closed_right):
            raise NotAWord(pos + len(p.arrows), f"W3 fails: trivial syllable inside the word at pair {i}")
        pos += len(p.arrows) + len(q.arrows)
        if i < last and not junction_ok(q, pairs[i + 1][0]):
            raise NotAWord(pos, f"W2 fails between pairs {i} and {i + 1}")


@dataclass(frozen=True, eq=False)
class FiniteWord:
    alg: StringAlgebra
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        check_pairs(self.alg, self.pairs)

    # equality ignores the algebra object; words of different algebras are
    # never compared in practice
    def __eq__(self, other):
        return isinstance(other, FiniteWord) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    @property
    def t(self) -> int:
        return len(self.pairs) - 1

    @property
    def trivial(self) -> bool:
        return len(self.pairs) == 1 and self.pairs[0][0].trivial and self.pairs[0][1].trivial

    @property
    def cyclic(self) -> bool:
        return len(self.pairs) == 1

    @property
    def uniserial(self) -> bool:
        return len(self.pairs) == 1 and (self.pairs[0][0].trivial or self.pairs[0][1].trivial)

    def tops(self) -> list[str]:
        return [p.start for p, _ in self.pairs]

    def letters(self) -> list[str]:
        return _letters(self.pairs)

    def tokens(self) -> tuple[Token, ...]:
        if self.trivial:
            return ((f"e{self.pairs[0][0].start}", 2),)
        return tuple(t for pr in self.pairs for t in _pair_tokens(pr))

    def __len__(self) -> int:
        return sum(len(p.arrows) + len(q.arrows) for p, q in self.pairs)

    def __str__(self) -> str:
        if self.trivial:
            return f"e{self.pairs[0][0].start}"
        return " ".join(self.letters())

    def __repr__(self) -> str:
        return f"FiniteWord({self})"

    def inverse(self) -> "FiniteWord":
        return FiniteWord(self.alg, _swap(self.pairs))

    def canonical(self) -> "FiniteWord":
        inv = self.inverse()
        return inv if inv.tokens() < self.tokens() else self

    def key(self) -> tuple[Token, ...]:
        return self.canonical().tokens()

    def segment(self, i: int, j: int) -> "FiniteWord":
        """Pairs i..j inclusive."""
        return FiniteWord(self.alg, self.pairs[i:j + 1])


def invert(w):
    return w.inverse()


def canonical(w):
    return w.canonical()


def cyclic_word(alg: StringAlgebra, p: Path, q: Path) -> FiniteWord:
    return FiniteWord(alg, ((p, q),))


def uniserial_word(alg: StringAlgebra, u: Path) -> FiniteWord:
    """The word of the uniserial module with top at start(u) along u."""
    return FiniteWord(alg, ((Path(u.start), u),))


def is_proper_power(pairs: Sequence[Pair]) -> bool:
    n = len(pairs)
    for d in range(1, n):
        if n % d == 0 and tuple(pairs[:d]) * (n // d) == tuple(pairs):
            return True
    return False


def primitive_root(pairs: Sequence[Pair]) -> tuple[Pair, ...]:
    n = len(pairs)
    for d in range(1, n + 1):
        if n % d == 0 and tuple(pairs[:d]) * (n // d) == tuple(pairs):
            return tuple(pairs[:d])
    return tuple(pairs)


def closes_up(v: FiniteWord) -> bool:
    """True iff v v is again a word (all syllables nontrivial required)."""
    p0 = v.pairs[0][0]
    qt = v.pairs[-1][1]
    if p0.trivial or qt.trivial:
        raise MalformedBandWord(f"band word {v} has a trivial flanking syllable")
    return junction_ok(qt, p0)


def is_primitive(v: FiniteWord) -> bool:
    return closes_up(v) and not is_proper_power(v.pairs)


def rotate(v: FiniteWord, k: int) -> FiniteWord:
    k %= len(v.pairs)
    return FiniteWord(v.alg, v.pairs[k:] + v.pairs[:k])


def power(v: FiniteWord, r: int) -> FiniteWord:
    return FiniteWord(v.alg, v.pairs * r)


# ---------------------------------------------------------------------------
# parsing


def _tokenize(alg: StringAlgebra, s: str, offset: int = 0) -> list[tuple[str, bool, int]]:
    out = []
    for i, tok in enumerate(s.split()):
        inv = tok.endswith("^")
        name = tok[:-1] if inv else tok
        if not name:
            raise NotAWord(offset + i, "empty letter")
        out.append((name, inv, offset + i))
    return out


def _is_trivial_token(alg: StringAlgebra, name: str) -> bool:
    return name.startswith("e") and alg.presentation.has_vertex(name[1:]) and not alg.presentation.has_arrow(name)


def _group(alg: StringAlgebra, toks: list[tuple[str, bool, int]], *, allow_open_left=True, allow_open_right=True) -> tuple[Pair, ...]:
    """Group letters into (p, q) pairs and check the word axioms."""
    if not toks:
        raise NotAWord(0, "empty word")
    lead_trivial = None
    trail_trivial = None
    if _is_trivial_token(alg, toks[0][0]):
        lead_trivial = toks[0]
        toks = toks[1:]
        if not toks:
            v = lead_trivial[0][1:]
            return ((Path(v), Path(v)),)
        if _is_trivial_token(alg, toks[-1][0]) and len(toks) == 1:
            # "e1^ e1"
            if toks[0][0] != lead_trivial[0]:
                raise NotAWord(toks[0][2], "trivial syllables at different vertices")
            v = lead_trivial[0][1:]
            return ((Path(v), Path(v)),)
    if toks and _is_trivial_token(alg, toks[-1][0]):
        trail_trivial = toks[-1]
        toks = toks[:-1]
    for name, inv, pos in toks:
        if _is_trivial_token(alg, name):
            raise NotAWord(pos, "W3 fails: trivial syllable inside the word")
        if not alg.presentation.has_arrow(name):
            raise NotAWord(pos, f"unknown arrow {name!r}")
    runs: list[tuple[bool, list[str], int]] = []
    for name, inv, pos in toks:
        if runs and runs[-1][0] == inv:
            runs[-1][1].append(name)
        else:
            runs.append((inv, [name], pos))

    def run_path(inv: bool, names: list[str], pos: int) -> Path:
        order = list(reversed(names)) if inv else names
        try:
            path = alg.presentation.make_path(order)
        except ValueError as exc:
            raise NotAWord(pos, f"letters do not form a walk: {exc}") from None
        if not alg.is_nonzero(path):
            raise NotAWord(pos, f"syllable {path} is zero")
        return path

    pairs: list[Pair] = []
    starts: list[int] = []
    i = 0
    if runs and not runs[0][0]:
        if not allow_open_left:
            raise NotAWord(runs[0][2], "period must start with an inverse syllable")
        q = run_path(False, runs[0][1], runs[0][2])
        if lead_trivial is not None and lead_trivial[0][1:] != q.start:
            raise NotAWord(lead_trivial[2], "trivial syllable at the wrong vertex")
        pairs.append((Path(q.start), q))
        starts.append(runs[0][2])
        i = 1
    elif lead_trivial is not None:
        raise NotAWord(lead_trivial[2], "W3 fails: trivial syllable followed by an inverse syllable")
    while i < len(runs):
        inv, names, pos = runs[i]
        p = run_path(True, names, pos)
        if i + 1 < len(runs):
            q = run_path(False, runs[i + 1][1], runs[i + 1][2])
            if p.start != q.start:
                raise NotAWord(runs[i + 1][2], "letters do not form a walk")
            i += 2
        else:
            if not allow_open_right:
                raise NotAWord(pos, "period must end with a direct syllable")
            q = Path(p.start)
            if trail_trivial is not None and trail_trivial[0][1:] != p.start:
                raise NotAWord(trail_trivial[2], "trivial syllable at the wrong vertex")
            trail_trivial = None
            i += 1
        pairs.append((p, q))
        starts.append(pos)
    if trail_trivial is not None:
        raise NotAWord(trail_trivial[2], "W3 fails: trivial syllable after a direct syllable")
    for k in range(len(pairs) - 1):
        q, pn = pairs[k][1], pairs[k + 1][0]
        if q.end != pn.end:
            raise NotAWord(starts[k + 1], "letters do not form a walk")
    try:
        check_pairs(alg, pairs, closed_left=not allow_open_left, closed_right=not allow_open_right)
    except NotAWord as exc:
        # positions count letters; shift past a leading trivial token
        shift = toks[0][2] if toks else 0
        raise NotAWord(exc.position + shift, exc.constraint) from None
    return tuple(pairs)


def validate_word(alg: StringAlgebra, tokens: Iterable[str] | str, vertex: str | None = None) -> FiniteWord:
    """Build a FiniteWord from letters such as ``["b", "a^", "b"]``.

    An empty token list needs ``vertex`` and yields the trivial word there.
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    tokens = list(tokens)
    if not tokens:
        if vertex is None:
            raise NotAWord(0, "empty word needs a vertex")
        v = str(vertex)
        alg.presentation.vertex(v)
        return FiniteWord(alg, ((Path(v), Path(v)),))
    return FiniteWord(alg, _group(alg, _tokenize(alg, " ".join(tokens))))


def parse_word(alg: StringAlgebra, literal: str):
    """Parse a finite or eventually periodic word literal."""
    s = literal.strip()
    left = right = ""
    has_l = has_r = False
    m = re.match(r"\[([^\]]*)\]\s*\*", s)
    if m:
        left, has_l = m.group(1), True
        s = s[m.end():]
    elif s.startswith("*"):
        s = s[1:]
    m = re.search(r"\*\s*\[([^\]]*)\]\s*\Z", s)
    if m:
        right, has_r = m.group(1), True
        s = s[:m.start()]
    elif s.rstrip().endswith("*"):
        s = s.rstrip()[:-1]
    if "[" in s or "]" in s or "*" in s:
        raise NotAWord(0, "malformed periodic literal")
    core_toks = _tokenize(alg, s)
    if not has_l and not has_r:
        if not core_toks:
            raise NotAWord(0, "empty word")
        return FiniteWord(alg, _group(alg, core_toks))
    u = _group(alg, _tokenize(alg, left), allow_open_left=False, allow_open_right=False) if has_l and left.strip() else ()
    v = _group(alg, _tokenize(alg, right), allow_open_left=False, allow_open_right=False) if has_r and right.strip() else ()
    core = _group(alg, core_toks, allow_open_left=not u, allow_open_right=not v) if core_toks else ()
    return EventuallyPeriodicWord(alg, u, core, v)


# ---------------------------------------------------------------------------
# eventually periodic words


@dataclass(frozen=True, eq=False)
class EventuallyPeriodicWord:
    """``...u u u core v v v...``; empty u or v means that side is finite."""

    alg: StringAlgebra
    left: tuple[Pair, ...]
    core: tuple[Pair, ...]
    right: tuple[Pair, ...]

    def __post_init__(self):
        for name in ("left", "core", "right"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not (self.left or self.core or self.right):
            raise NotAWord(0, "empty word")
        self._check()

    def _check(self):
        alg = self.alg
        u, c, v = self.left, self.core, self.right
        if u:
            check_pairs(alg, u + u, closed_left=True, closed_right=True)
        if v:
            check_pairs(alg, v + v, closed_left=True, closed_right=True)
        seq = (u * 2 if u else ()) + c + (v * 2 if v else ())
        check_pairs(alg, seq, closed_left=bool(u), closed_right=bool(v))

    def __eq__(self, other):
        return (
            isinstance(other, EventuallyPeriodicWord)
            and (self.left, self.core, self.right) == (other.left, other.core, other.right)
        )

    def __hash__(self):
        return hash((self.left, self.core, self.right))

    @property
    def finite(self) -> bool:
        return not self.left and not self.right

    @property
    def left_periodic(self) -> bool:
        return bool(self.left)

    @property
    def right_periodic(self) -> bool:
        return bool(self.right)

    def as_finite(self) -> FiniteWord:
        if not self.finite:
            raise NotFinite(f"word {self} is infinite")
        return FiniteWord(self.alg, self.core)

    @classmethod
    def from_finite(cls, w: FiniteWord) -> "EventuallyPeriodicWord":
        return cls(w.alg, (), w.pairs, ())

    def pair_at(self, i: int) -> Pair | None:
        """Pair with global index i (core starts at 0); None outside the support."""
        n = len(self.core)
        if 0 <= i < n:
            return self.core[i]
        if i < 0:
            return self.left[i % len(self.left)] if self.left else None
        return self.right[(i - n) % len(self.right)] if self.right else None

    def inverse(self) -> "EventuallyPeriodicWord":
        return EventuallyPeriodicWord(self.alg, _swap(self.right), _swap(self.core), _swap(self.left))

    def tokens(self) -> tuple:
        return (
            tuple(t for pr in self.left for t in _pair_tokens(pr)),
            tuple(t for pr in self.core for t in _pair_tokens(pr)) if not self._trivial_core() else ((f"e{self.core[0][0].start}", 2),),
            tuple(t for pr in self.right for t in _pair_tokens(pr)),
        )

    def _trivial_core(self) -> bool:
        return len(self.core) == 1 and self.core[0][0].trivial and self.core[0][1].trivial

    def normalized(self) -> "EventuallyPeriodicWord":
        """Primitive periods, periodic stretches absorbed out of the core."""
        u = primitive_root(self.left) if self.left else ()
        v = primitive_root(self.right) if self.right else ()
        c = list(self.core)
        while u and c and c[0] == u[0]:
            c.pop(0)
            u = u[1:] + u[:1]
        while v and c and c[-1] == v[-1]:
            c.pop()
            v = v[-1:] + v[:-1]
        if not c and u and v:
            if u == v:
                return EventuallyPeriodicWord(self.alg, _min_rotation(u), (), _min_rotation(u))
            for _ in range(len(u) * len(v)):
                if u[-1] != v[-1]:
                    break
                u = u[-1:] + u[:-1]
                v = v[-1:] + v[:-1]
        return EventuallyPeriodicWord(self.alg, u, tuple(c), v)

    def canonical(self) -> "EventuallyPeriodicWord":
        a = self.normalized()
        b = self.inverse().normalized()
        if a.left and a.right and not a.core and a.left == a.right:
            ka, kb = a.left, b.left
            ka_t = tuple(t for pr in ka for t in _pair_tokens(pr))
            kb_t = tuple(t for pr in kb for t in _pair_tokens(pr))
            return b if kb_t < ka_t else a
        return b if b.tokens() < a.tokens() else a

    def key(self):
        return self.canonical().tokens()

    def tail(self, start: int) -> "EventuallyPeriodicWord":
        """The word made of pairs with global index >= start."""
        n = len(self.core)
        if start <= 0 and not self.left:
            start = 0
        if start < 0:
            k = -start
            reps = -(-k // len(self.left))
            block = self.left * reps
            core = block[len(block) - k:] + self.core
            return EventuallyPeriodicWord(self.alg, (), core, self.right)
        if start < n:
            return EventuallyPeriodicWord(self.alg, (), self.core[start:], self.right)
        if not self.right:
            raise ValueError("tail starts beyond the end of a finite word")
        j = (start - n) % len(self.right)
        v = self.right[j:] + self.right[:j]
        return EventuallyPeriodicWord(self.alg, (), (), v)

    def segment_from(self, i: int) -> "EventuallyPeriodicWord":
        """The word e^-1 q_i p_{i+1}^-1 q_{i+1} ..., i.e. the tail from pair i
        with the inverse syllable p_i dropped."""
        t = self.tail(i)
        core, right = t.core, t.right
        if not core:
            core, right = right[:1], right[1:] + right[:1]
        (_, q), rest = core[0], core[1:]
        return EventuallyPeriodicWord(self.alg, (), ((Path(q.start), q),) + rest, right)

    def literal(self) -> str:
        core = " ".join(_letters(self.core)) if not self._trivial_core() else f"e{self.core[0][0].start}"
        if self.finite:
            return core
        lhs = f"[{' '.join(_letters(self.left))}]*" if self.left else "*"
        rhs = f"*[{' '.join(_letters(self.right))}]" if self.right else "*"
        return " ".join(x for x in (lhs, core, rhs) if x)

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"EventuallyPeriodicWord({self.literal()})"


def _min_rotation(u: tuple[Pair, ...]) -> tuple[Pair, ...]:
    rots = [u[k:] + u[:k] for k in range(len(u))]
    return min(rots, key=lambda r: tuple(t for pr in r for t in _pair_tokens(pr)))


def expand(w, k: int, center: int = 0) -> FiniteWord:
    """Finite window of pairs with index in [center-k, center+k]."""
    if isinstance(w, FiniteWord):
        lo, hi = max(0, center - k), min(len(w.pairs) - 1, center + k)
        return FiniteWord(w.alg, w.pairs[lo:hi + 1])
    if isinstance(w, CenteredWord):
        return expand(w.word, k, w.center)
    lo, hi = center - k, center + k
    if not w.left:
        lo = max(lo, 0)
    if not w.right:
        hi = min(hi, len(w.core) - 1)
    return FiniteWord(w.alg, tuple(w.pair_at(i) for i in range(lo, hi + 1)))


@dataclass(frozen=True)
class CenteredWord:
    """An eventually periodic word together with the index of its center pair."""

    word: EventuallyPeriodicWord
    center: int = 0

    @property
    def alg(self) -> StringAlgebra:
        return self.word.alg

    @property
    def vertex(self) -> str:
        return self.word.pair_at(self.center)[0].start

    @property
    def finite(self) -> bool:
        return self.word.finite

    def pair(self, i: int) -> Pair | None:
        """Pair i relative to the center."""
        return self.word.pair_at(self.center + i)

    def literal(self) -> str:
        """Literal with the center pair written out in full, trivial syllables included."""
        w = self.word
        parts = []
        if w.left:
            parts.append(f"[{' '.join(_letters(w.left))}]*")
        elif w.right:
            parts.append("*")
        if self.word._trivial_core():
            parts.append(f"e{w.core[0][0].start}")
        else:
            for i, (p, q) in enumerate(w.core):
                if i == self.center:
                    parts.append(f"e{p.start}^" if p.trivial else " ".join(a + "^" for a in reversed(p.arrows)))
                    parts.append(f"e{q.start}" if q.trivial else " ".join(q.arrows))
                else:
                    parts.append(" ".join(_letters(((p, q),))))
        if w.right:
            parts.append(f"*[{' '.join(_letters(w.right))}]")
        elif w.left:
            parts.append("*")
        return " ".join(x for x in parts if x)

    def __str__(self) -> str:
        return self.literal()
