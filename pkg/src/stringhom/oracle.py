"""Independent check of syzygies and projective dimensions by linear algebra.

Modules are represented as quiver representations over GF(p) and resolved by
repeatedly taking kernels of projective covers.  Nothing here uses the word
combinatorics.

To keep deep resolutions cheap, every syzygy is split into cyclic pieces
Λh.  A piece is determined by its top vertex v and its annihilator in Λv,
so pieces are memoized on (v, annihilator) and a resolution becomes a walk
on a finite graph of pieces with integer multiplicities.  A split is only
accepted when the piece dimensions add up to the dimension of the kernel;
otherwise the kernel stays a single general node.
"""
from __future__ import annotations

import functools
import os
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import ZeroModule
from .modules import DimVector, PseudoBandDescr, StringModuleDescr, band_graph, word_graph
from .presentation import Path, StringAlgebra
from .words import CenteredWord, EventuallyPeriodicWord, FiniteWord

DEFAULT_PRIME = 32003
ENV_PRIME = "STRINGHOM_CHAR"


def default_prime() -> int:
    return int(os.environ.get(ENV_PRIME, DEFAULT_PRIME))


# ---------------------------------------------------------------------------
# linear algebra mod p


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p and the pivot columns."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning {x : m x = 0}, in reduced form."""
    rows, cols = m.shape
    r, piv = rref(m, p) if rows else (np.zeros((0, cols), dtype=np.int64), [])
    free = [c for c in range(cols) if c not in piv]
    out = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        out[f, j] = 1
        for i, c in enumerate(piv):
            out[c, j] = (-r[i, f]) % p
    return out


def row_space(vectors: np.ndarray, p: int) -> np.ndarray:
    """RREF rows of the span of the given columns."""
    if vectors.size == 0:
        return np.zeros((0, vectors.shape[0]), dtype=np.int64)
    return rref(vectors.T, p)[0]


def solve(basis: np.ndarray, targets: np.ndarray, p: int) -> np.ndarray:
    """Coordinates X with basis @ X == targets (columns of basis independent)."""
    k = basis.shape[1]
    aug = np.concatenate([basis, targets], axis=1)
    r, piv = rref(aug, p)
    if any(c >= k for c in piv):
        raise ValueError("target not in the span")
    x = np.zeros((k, targets.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = r[i, k:]
    return x


# ---------------------------------------------------------------------------
# representations


@dataclass
class QuiverRep:
    """A representation written on one global basis.

    ``labels[i]`` is the vertex of basis vector i; ``action[a]`` is the square
    matrix sending basis vectors at source(a) to their image at target(a).
    """

    algebra: StringAlgebra
    labels: list[str]
    action: dict[str, np.ndarray]
    p: int = DEFAULT_PRIME

    @property
    def dim(self) -> int:
        return len(self.labels)

    def dims(self) -> DimVector:
        return DimVector.from_counter(self.algebra, Counter(self.labels))

    def at(self, v: str) -> list[int]:
        return [i for i, x in enumerate(self.labels) if x == v]

    def path_matrix(self, path: Path) -> np.ndarray:
        m = np.eye(self.dim, dtype=np.int64)
        for a in path.arrows:
            m = (self.action[a] @ m) % self.p
        return m

    def radical(self) -> np.ndarray:
        """Rows spanning the image of all arrows."""
        if not self.action:
            return np.zeros((0, self.dim), dtype=np.int64)
        return row_space(np.concatenate(list(self.action.values()), axis=1), self.p)

    def check(self) -> None:
        """Zero relations act as zero."""
        for rel in self.algebra.presentation.forbidden:
            if np.any(self.path_matrix(rel)):
                raise AssertionError(f"relation {rel} acts nonzero")


def _empty_action(alg: StringAlgebra, n: int) -> dict[str, np.ndarray]:
    return {a: np.zeros((n, n), dtype=np.int64) for a in alg.arrows}


def rep_of_graph(alg: StringAlgebra, nodes: list[str], edges, p: int) -> QuiverRep:
    action = _empty_action(alg, len(nodes))
    for s, t, a in edges:
        action[a][t, s] = 1
    return QuiverRep(alg, list(nodes), action, p)


def rep_of_string(w, p: int | None = None) -> QuiverRep:
    p = p or default_prime()
    if isinstance(w, StringModuleDescr):
        w = w.finite_word()
    if isinstance(w, CenteredWord):
        w = w.word
    if isinstance(w, EventuallyPeriodicWord):
        w = w.as_finite()
    g = word_graph(w.alg, w.pairs)
    return rep_of_graph(w.alg, g.nodes, g.edges, p)


def rep_of_band(b: PseudoBandDescr, p: int | None = None) -> QuiverRep:
    p = p or default_prime()
    g = band_graph(b.algebra, b.v, b.r)
    rep = rep_of_graph(b.algebra, g.nodes, g.edges[:-1], p)
    src, targets = g.glue
    a = g.edges[-1][2]
    for (i, node), c in zip(targets, b.scalars):
        rep.action[a][node, src] = c % p
    return rep


def rep_of_projective(alg: StringAlgebra, v: str, p: int | None = None) -> QuiverRep:
    p = p or default_prime()
    basis = alg.paths_from(str(v))
    index = {q: i for i, q in enumerate(basis)}
    action = _empty_action(alg, len(basis))
    for q, i in index.items():
        for a in alg.out_arrows(q.end):
            r = alg.extend(q, a)
            if r is not None:
                action[a][index[r], i] = 1
    return QuiverRep(alg, [q.end for q in basis], action, p)


def rep_of(x, p: int | None = None) -> QuiverRep:
    if isinstance(x, QuiverRep):
        return x
    if isinstance(x, PseudoBandDescr):
        return rep_of_band(x, p)
    return rep_of_string(x, p)


# ---------------------------------------------------------------------------
# projective covers


@dataclass
class Cover:
    """Minimal projective cover P = ⊕ Λv_j -> M.

    ``tops`` are the chosen top vectors of M (columns), ``vertices`` their
    vertices, ``matrix`` the map on the basis of P, ``kernel`` columns in P.
    """

    vertices: list[str]
    tops: np.ndarray
    projective: QuiverRep
    matrix: np.ndarray
    kernel: np.ndarray

    def cover_dims(self) -> DimVector:
        alg = self.projective.algebra
        return DimVector.from_counter(alg, Counter(self.vertices))

    def kernel_dims(self) -> DimVector:
        return DimVector.from_counter(self.projective.algebra, Counter(self.kernel_labels()))

    def kernel_labels(self) -> list[str]:
        # kernel columns are homogeneous after the per-vertex split
        return [self.projective.labels[int(np.nonzero(col)[0][0])] for col in self.kernel.T]


def direct_sum(reps: list[QuiverRep]) -> QuiverRep:
    alg, p = reps[0].algebra, reps[0].p
    labels = [x for r in reps for x in r.labels]
    n = len(labels)
    action = _empty_action(alg, n)
    off = 0
    for r in reps:
        for a, m in r.action.items():
            action[a][off:off + r.dim, off:off + r.dim] = m
        off += r.dim
    return QuiverRep(alg, labels, action, p)


def _greedy(base: np.ndarray, cands: np.ndarray, p: int) -> list[int]:
    """Indices of the candidate rows that enlarge span(base), taken in order."""
    m = np.vstack([base, cands]).T
    _, piv = rref(m, p)
    k = base.shape[0]
    return [c - k for c in piv if c >= k]


def top_vectors(rep: QuiverRep, sub: np.ndarray | None = None) -> list[tuple[str, np.ndarray]]:
    """Vectors spanning a complement of the radical, vertex by vertex.

    ``sub`` (columns) restricts to a subrepresentation.  Basis vectors of the
    ambient space lying in ``sub`` are preferred, so monomial submodules get
    monomial generators.
    """
    p = rep.p
    n = rep.dim
    if sub is None:
        sub = np.eye(n, dtype=np.int64)
    rad_cols = [(m @ sub) % p for m in rep.action.values()]
    rad = row_space(np.concatenate(rad_cols, axis=1), p) if rad_cols else np.zeros((0, n), dtype=np.int64)
    span_sub, piv = rref(sub.T, p) if sub.shape[1] else (np.zeros((0, n), dtype=np.int64), [])
    # e_i lies in the span iff i is a pivot whose row is e_i itself
    unit = {c for r, c in zip(span_sub, piv) if np.count_nonzero(r) == 1}
    out = []
    for v in rep.algebra.vertices:
        idx = rep.at(v)
        if not idx:
            continue
        part = span_sub[:, idx]
        keep = np.any(part, axis=1)
        if not keep.any():
            continue
        part_rows = np.zeros((int(keep.sum()), n), dtype=np.int64)
        part_rows[:, idx] = part[keep]
        cands = [np.eye(n, dtype=np.int64)[i] for i in idx if i in unit]
        cands = np.vstack(cands + [part_rows]) if cands else part_rows
        for j in _greedy(rad, cands, p):
            out.append((v, cands[j] % p))
    return out


def projective_cover(rep: QuiverRep, sub: np.ndarray | None = None) -> Cover:
    """Cover of ``rep`` (or of its subrepresentation spanned by ``sub``)."""
    alg, p = rep.algebra, rep.p
    tops = top_vectors(rep, sub)
    if not tops:
        raise ZeroModule("cover of the zero module")
    pieces = [rep_of_projective(alg, v, p) for v, _ in tops]
    proj = direct_sum(pieces)
    cols = []
    for (v, h), piece in zip(tops, pieces):
        for q in alg.paths_from(v):
            cols.append((rep.path_matrix(q) @ h) % p)
    mat = np.array(cols, dtype=np.int64).T
    ker = nullspace(mat, p)
    # split the kernel by vertex so every column is homogeneous
    homog = []
    for v in alg.vertices:
        idx = proj.at(v)
        if not idx:
            continue
        sel = np.zeros((proj.dim, proj.dim), dtype=np.int64)
        sel[idx, idx] = 1
        part = row_space((sel @ ker) % p, p)
        homog.extend(part)
    kernel = np.array(homog, dtype=np.int64).T if homog else np.zeros((proj.dim, 0), dtype=np.int64)
    return Cover([v for v, _ in tops], np.array([h for _, h in tops]).T, proj, mat, kernel)


# ---------------------------------------------------------------------------
# resolution on the graph of cyclic pieces


@dataclass(frozen=True)
class Unknown:
    bound: int

    def __str__(self) -> str:
        return f"unknown (> {self.bound} steps)"


@dataclass(frozen=True)
class TraceStep:
    cover: DimVector
    kernel: DimVector

    def as_tuple(self) -> tuple:
        return (self.cover.counts, self.kernel.counts)


@dataclass
class ResolutionTrace:
    steps: list[TraceStep] = field(default_factory=list)
    general_nodes: int = 0

    def kernel_dims(self) -> list[int]:
        return [s.kernel.total for s in self.steps]

    def signature(self) -> tuple:
        return tuple(s.as_tuple() for s in self.steps)

    def __str__(self) -> str:
        return "\n".join(f"P{i}: {s.cover}  Ω{i + 1}: {s.kernel}" for i, s in enumerate(self.steps))


@dataclass
class _Node:
    # sparse (vertex index, count) lists and (child key, multiplicity) pairs
    cover: tuple
    kernel_dims: tuple
    children: tuple


class Resolver:
    """Memoized cyclic pieces Λv/ann of one algebra over GF(p)."""

    def __init__(self, alg: StringAlgebra, p: int):
        self.alg = alg
        self.p = p
        self.proj = {v: rep_of_projective(alg, v, p) for v in alg.vertices}
        self.nodes: dict = {}
        self.general_reps: list[QuiverRep] = []

    @property
    def general(self) -> int:
        """General (non-split) nodes created besides the root."""
        return len(self.general_reps) - 1

    def _split(self, amb: QuiverRep, sub: np.ndarray) -> Counter | None:
        """Cyclic pieces of the subrepresentation ``sub`` of ``amb``; None if
        the chosen generators do not give a direct sum."""
        p = self.p
        out: Counter = Counter()
        total = 0
        for v, h in top_vectors(amb, sub):
            paths = self.alg.paths_from(v)
            img = np.array([(amb.path_matrix(q) @ h) % p for q in paths], dtype=np.int64).T
            ann = nullspace(img, p)
            total += len(paths) - ann.shape[1]
            out[self._key(v, ann)] += 1
        return out if total == sub.shape[1] else None

    def _key(self, v: str, ann: np.ndarray) -> tuple:
        rows = row_space(ann, self.p) if ann.shape[1] else np.zeros((0, 0), dtype=np.int64)
        return ("cyclic", v, tuple(map(tuple, rows.tolist())))

    def node(self, key) -> _Node:
        if key in self.nodes:
            return self.nodes[key]
        kind = key[0]
        if kind == "cyclic":
            _, v, rows = key
            amb = self.proj[v]
            ann = np.array(rows, dtype=np.int64).T if rows else np.zeros((amb.dim, 0), dtype=np.int64)
            cover = Counter({v: 1})
            kdims = Counter(amb.labels[int(np.nonzero(c)[0][0])] for c in _homogeneous(amb, ann, self.p).T)
            children = self._children(amb, _homogeneous(amb, ann, self.p))
        else:
            c = projective_cover(self.general_reps[key[1]])
            cover = Counter(c.vertices)
            kdims = Counter(c.kernel_labels())
            children = self._children(c.projective, c.kernel)
        pos = {v: i for i, v in enumerate(self.alg.vertices)}
        n = _Node(
            tuple((pos[v], c) for v, c in cover.items()),
            tuple((pos[v], c) for v, c in kdims.items()),
            tuple(children.items()),
        )
        self.nodes[key] = n
        return n

    def _children(self, amb: QuiverRep, sub: np.ndarray) -> Counter:
        if sub.shape[1] == 0:
            return Counter()
        split = self._split(amb, sub)
        if split is not None:
            return split
        return Counter({self._general(restrict(amb, sub)): 1})

    def _general(self, rep: QuiverRep) -> tuple:
        self.general_reps.append(rep)
        return ("general", len(self.general_reps) - 1)

    def root(self, rep: QuiverRep) -> Counter:
        if rep.dim == 0:
            raise ZeroModule("zero module has no projective dimension")
        return Counter({self._general(rep): 1})


@functools.lru_cache(maxsize=128)
def resolver(alg: StringAlgebra, p: int) -> Resolver:
    return Resolver(alg, p)


def _homogeneous(amb: QuiverRep, sub: np.ndarray, p: int) -> np.ndarray:
    cols = []
    for v in amb.algebra.vertices:
        idx = amb.at(v)
        if not idx or sub.shape[1] == 0:
            continue
        sel = np.zeros((amb.dim, amb.dim), dtype=np.int64)
        sel[idx, idx] = 1
        cols.extend(row_space((sel @ sub) % p, p))
    return np.array(cols, dtype=np.int64).T if cols else np.zeros((amb.dim, 0), dtype=np.int64)


def restrict(amb: QuiverRep, sub: np.ndarray) -> QuiverRep:
    """The subrepresentation spanned by the homogeneous columns of ``sub``."""
    p = amb.p
    labels = [amb.labels[int(np.nonzero(c)[0][0])] for c in sub.T]
    action = {a: solve(sub, (m @ sub) % p, p) for a, m in amb.action.items()}
    return QuiverRep(amb.algebra, labels, action, p)


def pdim_oracle(x, bound: int = 25, p: int | None = None):
    """Resolve ``x`` for at most ``bound`` steps.

    Returns (pdim, trace) where pdim is an int or Unknown(bound).
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    p = p or default_prime()
    rep = rep_of(x, p)
    if rep.p != p:
        rep = QuiverRep(rep.algebra, rep.labels, {a: m % p for a, m in rep.action.items()}, p)
    res = resolver(rep.algebra, p)
    before = res.general
    level = res.root(rep)
    trace = ResolutionTrace()
    alg = rep.algebra
    verts = alg.vertices
    for k in range(bound + 1):
        cover = [0] * len(verts)
        kern = [0] * len(verts)
        nxt: dict = {}
        for key, mult in level.items():
            n = res.node(key)
            for i, c in n.cover:
                cover[i] += c * mult
            for i, c in n.kernel_dims:
                kern[i] += c * mult
            for ck, c in n.children:
                nxt[ck] = nxt.get(ck, 0) + c * mult
        if k == bound and nxt:
            trace.general_nodes = res.general - before - 1
            return Unknown(bound), trace
        trace.steps.append(TraceStep(DimVector(tuple(zip(verts, cover))), DimVector(tuple(zip(verts, kern)))))
        if not nxt:
            trace.general_nodes = res.general - before - 1
            return k, trace
        level = nxt
    raise AssertionError("unreachable")


def syzygy_dims(x, p: int | None = None) -> DimVector:
    """Dimension vector of the first syzygy, straight from the cover."""
    c = projective_cover(rep_of(x, p))
    return c.kernel_dims()
