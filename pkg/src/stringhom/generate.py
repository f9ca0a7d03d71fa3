"""Random string algebras and random words, for property tests.

Everything takes an explicit ``random.Random`` so corpora are reproducible.
"""
from __future__ import annotations

import random

from .errors import StringAlgebraError, WordError
from .presentation import StringAlgebra, load_algebra
from .words import FiniteWord, validate_word


def random_presentation_text(rng: random.Random, max_vertices: int = 8, max_arrows: int = 14) -> str:
    """Presentation text of a candidate string algebra (may still be rejected)."""
    n = rng.randint(2, max_vertices)
    verts = [str(i) for i in range(1, n + 1)]
    outd = dict.fromkeys(verts, 0)
    ind = dict.fromkeys(verts, 0)
    arrows: list[tuple[str, str, str]] = []
    want = rng.randint(n - 1, max_arrows)
    for _ in range(6 * want):
        if len(arrows) >= want:
            break
        s, t = rng.choice(verts), rng.choice(verts)
        if outd[s] >= 2 or ind[t] >= 2:
            continue
        if s == t and rng.random() < 0.6:
            continue
        outd[s] += 1
        ind[t] += 1
        arrows.append((f"x{len(arrows) + 1}", s, t))

    # pick at most one continuation per arrow and per arrow continued
    succ: dict[str, str] = {}
    taken: set[str] = set()
    pairs = [(a, b) for a, _, t in arrows for b, s, _ in arrows if s == t]
    rng.shuffle(pairs)
    for a, b in pairs:
        if a not in succ and b not in taken and rng.random() < 0.75:
            succ[a] = b
            taken.add(b)
    zero = [(a, b) for a, b in pairs if succ.get(a) != b]

    # cut every chain of continuations after a few arrows
    for a, _, _ in arrows:
        k = rng.randint(2, 4)
        chain = [a]
        while len(chain) < k and chain[-1] in succ:
            chain.append(succ[chain[-1]])
        if len(chain) == k and chain[-1] in succ:
            zero.append(tuple(chain + [succ[chain[-1]]]))

    lines = ["vertices: " + " ".join(verts)]
    lines += [f"arrow {a}: {s} -> {t}" for a, s, t in arrows]
    lines += ["zero: " + ".".join(r) for r in sorted(set(zero), key=lambda r: (len(r), r))]
    return "\n".join(lines) + "\n"


def random_string_algebra(rng: random.Random, max_vertices: int = 8, max_arrows: int = 14, tries: int = 200) -> StringAlgebra:
    for _ in range(tries):
        text = random_presentation_text(rng, max_vertices, max_arrows)
        try:
            alg = load_algebra(text)
        except StringAlgebraError:
            continue
        if alg.arrows:
            return alg
    raise RuntimeError("no valid random string algebra found")


def algebra_corpus(seed: int = 0, count: int = 50, **kw) -> list[StringAlgebra]:
    rng = random.Random(seed)
    return [random_string_algebra(rng, **kw) for _ in range(count)]


def random_word(alg: StringAlgebra, rng: random.Random, max_letters: int = 12) -> FiniteWord:
    """A random finite word grown letter by letter; trivial if nothing fits."""
    letters = [a for a in alg.arrows] + [a + "^" for a in alg.arrows]
    toks: list[str] = []
    target = rng.randint(1, max_letters)
    while len(toks) < target:
        if toks:
            last = toks[-1]
            arr = alg.arrow(last.rstrip("^"))
            v = arr.source if last.endswith("^") else arr.target
            cands = [a for a in alg.out_arrows(v)] + [a + "^" for a in alg.in_arrows(v)]
        else:
            cands = list(letters)
        rng.shuffle(cands)
        for c in cands:
            try:
                validate_word(alg, toks + [c])
            except WordError:
                continue
            toks.append(c)
            break
        else:
            break
    if not toks:
        return validate_word(alg, [], vertex=rng.choice(alg.vertices))
    return validate_word(alg, toks)
