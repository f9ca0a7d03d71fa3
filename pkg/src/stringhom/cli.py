"""Command-line front end.

Exit codes: 0 ok, 1 parse error, 2 not a string algebra, 3 invalid word or
module literal, 4 oracle mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath

from . import fixtures
from .characteristic import build_characteristic_word, cf_report
from .errors import MalformedBandWord, OracleMismatch, ParseError, StringAlgebraError
from .modules import PseudoBandDescr, StringModuleDescr, dim_vector, render_dot
from .oracle import Unknown, default_prime, pdim_oracle
from .presentation import StringAlgebra, load_algebra
from .syzygy import INFINITE, cyclic_words, enumerate_T, findim, format_pdim, gldim, pdim, syzygy, syzygy_graph
from .words import FiniteWord, parse_word


def load(source: str) -> StringAlgebra:
    """A presentation file, or a bundled fixture name such as FIX-E4 or e4."""
    p = FsPath(source)
    if p.exists():
        return load_algebra(p.read_text())
    name = source.lower().removeprefix("fix-")
    if name in fixtures.NAMES:
        return fixtures.fixture(name)
    raise ParseError(0, 0, f"no such file or fixture: {source}")


def parse_band(alg: StringAlgebra, spec: str) -> PseudoBandDescr:
    """``V,r,c1[,c2...]``: primitive word V, power r, r scalars."""
    parts = [s.strip() for s in spec.split(",")]
    if len(parts) < 3:
        raise MalformedBandWord(f"band spec {spec!r} must be V,r,c1[,...,cr]")
    word, r, cs = parts[0].strip("\"'"), parts[1], parts[2:]
    try:
        r_int = int(r)
        scalars = tuple(int(c) for c in cs)
    except ValueError as exc:
        raise MalformedBandWord(f"band spec {spec!r}: {exc}") from None
    v = parse_word(alg, word)
    if not isinstance(v, FiniteWord):
        raise MalformedBandWord("band word must be finite")
    return PseudoBandDescr(alg, v, r_int, scalars)


def module_arg(alg: StringAlgebra, args):
    if getattr(args, "band", None):
        return parse_band(alg, args.band)
    if getattr(args, "word", None) is not None:
        return parse_word(alg, args.word)
    raise SystemExit("one of --word / --band is required")


def emit(args, human: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(human)


def pdim_json(d) -> int | str:
    return "infinite" if d is INFINITE else int(d)


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    alg = load(args.algebra)
    pres = alg.presentation
    data = {
        "dim": alg.dimension,
        "vertices": len(pres.vertices),
        "arrows": len(pres.arrows),
        "relations": len(pres.forbidden),
        "string_algebra": True,
    }
    emit(args, f"dim={alg.dimension}, string-algebra: yes\n"
               f"vertices={data['vertices']} arrows={data['arrows']} relations={data['relations']}", data)
    return 0


def cmd_pdim(args) -> int:
    alg = load(args.algebra)
    m = module_arg(alg, args)
    d = pdim(m)
    data: dict = {"pdim": pdim_json(d)}
    lines = [format_pdim(d)]
    if args.trace:
        chain = trace_chain(alg, m, args.limit)
        data["trace"] = chain
        for i, layer in enumerate(chain):
            lines.append(f"  Ω^{i}: " + " + ".join(layer))
    if args.oracle:
        p = args.field or default_prime()
        bound = len(cyclic_words(alg)) + 2
        od, tr = pdim_oracle(m, bound, p)
        data["oracle"] = {"field": p, "bound": bound, "pdim": str(od) if isinstance(od, Unknown) else od,
                          "kernel_dims": tr.kernel_dims()}
        agree = (d is INFINITE and isinstance(od, Unknown)) or (d is not INFINITE and od == d)
        lines.append(f"oracle (GF({p}), {bound} steps): {od}")
        if not agree:
            emit(args, "\n".join(lines), data)
            raise OracleMismatch(f"combinatorial pdim {format_pdim(d)} but oracle says {od}")
    emit(args, "\n".join(lines), data)
    return 0


def trace_chain(alg: StringAlgebra, m, limit: int) -> list[list[str]]:
    first = syzygy(m)
    out = [[str(m)], [f"{k}x {w}" if k > 1 else str(w) for w, k in first.summands]]
    if first.periodic:
        out[-1].append("(periodic tail)")
        return out
    g = syzygy_graph(alg)
    layer = {w.key(): w for w, _ in first.summands}
    for _ in range(limit):
        nxt = {}
        for w in layer.values():
            for c in g._kids(w):
                nxt.setdefault(c.key(), c)
        if not nxt:
            break
        out.append([str(nxt[k]) for k in sorted(nxt)])
        layer = nxt
    return out


def cmd_syzygy(args) -> int:
    alg = load(args.algebra)
    m = module_arg(alg, args)
    d = syzygy(m)
    emit(args, str(d), d.to_json())
    return 0


def cmd_findim(args) -> int:
    alg = load(args.algebra)
    little, big = findim(alg)
    T = enumerate_T(alg)
    data = {"little": little, "big": big, "T": [{"word": str(m.word), "pdim": m.pdim} for m in T.members]}
    lines = [f"little={little} big={big}"]
    if args.verbose:
        lines += [f"  {m.describe()}  pdim={m.pdim}" for m in T.members]
    emit(args, "\n".join(lines), data)
    return 0


def cmd_gldim(args) -> int:
    alg = load(args.algebra)
    d = gldim(alg)
    emit(args, format_pdim(d), {"gldim": pdim_json(d)})
    return 0


def cmd_charword(args) -> int:
    alg = load(args.algebra)
    cw = build_characteristic_word(alg, args.simple)
    data = {
        "simple": cw.vertex,
        "word": cw.literal(),
        "center": cw.centered.center,
        "finite": cw.finite,
        "left_period": None if cw.left is None else {"length": cw.left[0], "onset": cw.left[1]},
        "right_period": None if cw.right is None else {"length": cw.right[0], "onset": cw.right[1]},
    }
    lines = [cw.literal()]
    if args.verbose:
        lines.append(f"center: pair {cw.centered.center}")
    if args.dot:
        dot = render_dot(StringModuleDescr(alg, cw.centered), window=args.window, name=f"w(S{cw.vertex})")
        data["dot"] = dot
        lines.append(dot.rstrip("\n"))
    emit(args, "\n".join(lines), data)
    return 0


def cmd_cf(args) -> int:
    alg = load(args.algebra)
    rep = cf_report(alg)
    verdict = "yes" if rep.contravariantly_finite else "no"
    lines = [f"contravariantly finite: {verdict}"]
    for r in rep.per_simple:
        if r.approximated:
            lines.append(f"S{r.vertex}\tapproximated\tdim={r.dims()}\ttop={r.top()}\tsocle={r.socle()}\t{r.char_word.literal()}")
        else:
            lines.append(f"S{r.vertex}\tphantom\t{r.char_word.literal()}")
    emit(args, "\n".join(lines), rep.to_json())
    return 0


def cmd_render(args) -> int:
    alg = load(args.algebra)
    if args.simple is not None:
        cw = build_characteristic_word(alg, args.simple)
        m, name = StringModuleDescr(alg, cw.centered), f"w(S{cw.vertex})"
    else:
        m = module_arg(alg, args)
        name = str(m)
        if not isinstance(m, PseudoBandDescr):
            m = StringModuleDescr(alg, m)
    dot = render_dot(m, window=args.window, name=name)
    if args.json:
        print(json.dumps({"dot": dot}))
    else:
        sys.stdout.write(dot)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stringhom", description="Homological invariants of string algebras.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("algebra", help="presentation file or fixture name (FIX-E4, e23, ...)")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(fn=fn)
        return p

    def module_opts(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--word", help="word literal, e.g. 'a^ b'")
        g.add_argument("--band", help="V,r,c1[,...,cr] for Bd(V^r, c)")

    add("validate", cmd_validate, "check the presentation")
    p = add("pdim", cmd_pdim, "projective dimension of a string or band module")
    module_opts(p)
    p.add_argument("--trace", action="store_true", help="print the syzygy chain")
    p.add_argument("--limit", type=int, default=20, help="trace depth")
    p.add_argument("--oracle", action="store_true", help="cross-check by linear algebra")
    p.add_argument("--field", type=int, default=None, help="prime for --oracle")
    p = add("syzygy", cmd_syzygy, "first syzygy as a sum of cyclic string modules")
    module_opts(p)
    p = add("findim", cmd_findim, "little and big finitistic dimension")
    p.add_argument("-v", "--verbose", action="store_true", help="list the set T")
    add("gldim", cmd_gldim, "global dimension")
    p = add("charword", cmd_charword, "characteristic word of a simple module")
    p.add_argument("--simple", required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--window", type=int, default=3)
    p.add_argument("-v", "--verbose", action="store_true")
    add("cf", cmd_cf, "contravariant finiteness report")
    p = add("render", cmd_render, "DOT graph of a module")
    module_opts(p)
    p.add_argument("--simple", help="render the characteristic word of this simple")
    p.add_argument("--window", type=int, default=3)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except StringAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
