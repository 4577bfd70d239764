"""Command line: expansions, enumerations, verification suites and the table cache.

Exit codes are 0 on success, 1 when an identity check mismatches and 2 on a
usage error.  Nonpositive experiments are reported but still exit 0.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from . import pathcomb as pc
from . import verify as V
from . import weights as W
from .macdonald import (
    CACHE_ENV, MacdonaldTable, ValidationError, Xi, _cache_path, cache_dir, delta, specialize_t,
    super_nabla, triangular_E, write_cache,
)
from .ring import ParseError, QtPoly
from .symcore import SymFunc, e, h, m, omega, p, partitions_of

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

T_MODES = {"1": "t=1", "1/q": "t=1/q", "0": "t=0"}
SPECIAL_MODES = {"q0t1": "q=0,t=1", "qt1": "q=t=1"}


class UsageError(Exception):
    pass


# ------------------------------------------------------------ expressions

_PART = r"(\d+(?:,\d+)*|\d+)"


def _partition(text):
    """'21' or '2,1' -> (2, 1); multi-digit parts need commas."""
    if "," in text:
        parts = tuple(int(x) for x in text.split(",") if x)
    else:
        parts = tuple(int(ch) for ch in text)
    if not parts or any(x <= 0 for x in parts):
        raise ParseError(f"bad partition {text!r}")
    return tuple(sorted(parts, reverse=True))


def parse_expr(text):
    """Parse e3, h3, p3, wp3 (omega p_n), xi(e21), delta(m21,wp3), Ev(0,1,2)."""
    s = text.replace(" ", "")
    mt = re.fullmatch(r"([ehp]|wp)(\d+)", s)
    if mt:
        kind, n = mt.group(1), int(mt.group(2))
        if n < 1:
            raise ParseError("degree must be positive")
        return {"e": e, "h": h, "p": p, "wp": lambda k: omega(p(k))}[kind](n)
    mt = re.fullmatch(r"xi\(e" + _PART + r"\)", s)
    if mt:
        return Xi(SymFunc("e", {_partition(mt.group(1)): 1}))
    mt = re.fullmatch(r"delta\(m" + _PART + r",(.+)\)", s)
    if mt:
        return delta(m(_partition(mt.group(1))), parse_expr(mt.group(2)))
    mt = re.fullmatch(r"Ev\((\d+(?:,\d+)*)\)", s)
    if mt:
        return triangular_E(tuple(int(x) for x in mt.group(1).split(",")))
    raise ParseError(f"cannot parse expression {text!r}")


def _expr_degree(f):
    if f.basis == "H":
        return sum(next(iter(f.coeffs))) if f.coeffs else 0
    return f.degree()


# ------------------------------------------------------------ rendering

def display_order(n):
    """(1^n), ..., (n): the row and column order of the printed tables."""
    return list(reversed(partitions_of(n)))


def _pname(lam):
    return "".join(map(str, lam)) if all(x < 10 for x in lam) else ",".join(map(str, lam))


def latex_poly(c):
    text = str(c)
    text = re.sub(r"\^(-?\d+)", r"^{\1}", text)
    return text.replace("*", " ")


def _latex_cell(c, schur_qt):
    if schur_qt:
        return "$" + re.sub(r"s(\d+)", r"s_{\1}", V.format_schur_qt(V.schur_qt_expand(c))).replace("*", " ") + "$"
    return "$" + latex_poly(c) + "$"


def latex_tables(T, schur_qt=False):
    """LaTeX tabulars: one block per leading slot for arity 3, one table for arity 2."""
    n = T.degree()
    order = display_order(n)
    full = T.full()
    bases, names = T.bases, T.names

    def grid(prefix, caption):
        rows = [r"\begin{tabular}{|c||" + "l|" * len(order) + "}", r"\hline"]
        head = [caption] + [f"${bases[-1]}_{{{_pname(c)}}}({names[-1]})$" for c in order]
        rows.append(" & ".join(head) + r" \\")
        rows.append(r"\hline\hline")
        for r in order:
            cells = [f"${bases[-2]}_{{{_pname(r)}}}({names[-2]})$"]
            for c in order:
                val = full.get(prefix + (r, c))
                cells.append(_latex_cell(val, schur_qt) if val is not None else "$0$")
            rows.append(" & ".join(cells) + r" \\ \hline")
        rows.append(r"\end{tabular}")
        return "\n".join(rows)

    if T.arity == 1:
        lines = [r"\begin{tabular}{|c||l|}", r"\hline"]
        for lam in order:
            val = full.get((lam,))
            cell = _latex_cell(val, schur_qt) if val is not None else "$0$"
            lines.append(f"${bases[0]}_{{{_pname(lam)}}}({names[0]})$ & {cell} \\\\ \\hline")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    if T.arity == 2:
        return grid((), "")
    if T.arity == 3:
        blocks = []
        for lam in order:
            blocks.append(grid((lam,), f"Coeff of ${bases[0]}_{{{_pname(lam)}}}({names[0]})$"))
        return "\n\\bigskip\n\n".join(blocks)
    raise UsageError("LaTeX tables need at most three slots")


def _key_json(vec):
    return [list(l) for l in vec]


def emit_tensor(T, fmt, out, schur_qt=False):
    if fmt == "latex":
        print(latex_tables(T, schur_qt), file=out)
        return
    for vec, c in T.items():
        if fmt == "structured":
            rec = {"key": _key_json(vec), "bases": list(T.bases), "coeff": str(c)}
            if schur_qt:
                rec["schur_qt"] = V.format_schur_qt(V.schur_qt_expand(c))
            print(json.dumps(rec, sort_keys=True), file=out)
        else:
            label = " ".join(f"{b}{_pname(l)}({a})" for b, l, a in zip(T.bases, vec, T.names))
            val = V.format_schur_qt(V.schur_qt_expand(c)) if schur_qt else str(c)
            print(f"{label} : {val}", file=out)


def emit_E(expansion, fmt, out, schur_qt):
    items = sorted(expansion.items(), key=lambda kv: (len(kv[0]), kv[0]))
    for key, c in items:
        name = "E(" + ",".join(_pname(l) for l in key) + ")"
        val = V.format_schur_qt(V.schur_qt_expand(c)) if schur_qt else str(c)
        if fmt == "structured":
            print(json.dumps({"E": [list(l) for l in key], "coeff": val}, sort_keys=True), file=out)
        else:
            print(f"{name} : {val}", file=out)


# ------------------------------------------------------------ commands

def cmd_expand(args, out):
    f = parse_expr(args.expr)
    n = _expr_degree(f)
    bound = args.max_n
    if n > bound:
        raise V.BoundExceeded(f"degree {n} above {bound}")
    if args.shift and args.shift != "qp1":
        raise UsageError("--shift accepts qp1")
    if args.shift and (args.t or args.special):
        raise UsageError("--shift cannot be combined with --t or --special")
    T = super_nabla(f, args.k, "s")
    if args.shift or args.special == "qt1":
        mode = "shift" if args.shift else SPECIAL_MODES["qt1"]
        ex = V.E_expand(V.to_all_e(specialize_t(T, mode)))
        emit_E(ex, "structured" if args.format == "structured" else "text", out,
               schur_qt=bool(args.shift))
        return EXIT_OK
    if args.t:
        T = specialize_t(T, T_MODES[args.t])
    if args.special:
        T = specialize_t(T, SPECIAL_MODES[args.special])
    T = T.convert_all(args.basis)
    emit_tensor(T, args.format, out, schur_qt=args.schur_qt)
    return EXIT_OK


def _parse_content(text, r):
    """'1,2,3;1,1,2;1,1,1' -> one tuple per digit; a bare partition '21' gives its content."""
    parts = [x for x in text.split(";")]
    if len(parts) != r:
        raise ParseError(f"need {r} digit contents, got {len(parts)}")
    out = []
    for piece in parts:
        piece = piece.strip()
        if piece.startswith("m"):
            out.append(W.content_vector(_partition(piece[1:])))
        else:
            out.append(tuple(sorted(int(x) for x in piece.split(",") if x)))
    return out


def _gf_summary(areas):
    counts = {}
    for a in areas:
        counts[a] = counts.get(a, 0) + 1
    return sum(counts.values()), QtPoly({(a, 0, 0): c for a, c in counts.items()})


def cmd_enumerate(args, out):
    fam = args.family
    objs, areas, dumps = [], [], []
    if fam == "mld":
        r = args.r if args.r else args.k + 1
        if not args.content:
            raise UsageError("mld needs --content")
        cont = _parse_content(args.content, r)
        lattice = (True,) * r if args.lattice else None
        for path in pc.enumerate_mld(args.n, args.k, r, cont, lattice):
            areas.append(path.area)
            dumps.append(path.serialize())
    elif fam == "polyomino":
        width = args.width if args.width else args.n
        for poly in W.parallelogram_polyominoes(args.n, width):
            areas.append(poly.area)
            dumps.append(poly.P + " " + poly.Q)
    elif fam == "marked":
        if not args.gamma:
            raise UsageError("marked needs --gamma")
        gamma = _partition(args.gamma)
        cont = _parse_content(args.content, args.k) if args.content else None
        if args.k and cont is None:
            raise UsageError("marked with k > 0 needs --content")
        lattice = (True,) * args.k if args.lattice and args.k else None
        for mp in pc.enumerate_marked(args.n, args.k, gamma, cont, lattice):
            areas.append(mp.area)
            dumps.append(f"{mp.P} {mp.Q} mark={mp.mark}")
    elif fam == "square":
        for S in pc.square_paths(args.n):
            areas.append(pc.square_area(S))
            dumps.append(S)
    elif fam == "sr":
        if not args.mu:
            raise UsageError("sr needs --mu")
        for alpha_, j in pc.sr_enumerate(_partition(args.mu)):
            areas.append(0)
            dumps.append(f"{alpha_} cell={j}")
    elif fam == "cct":
        if not args.mu:
            raise UsageError("cct needs --mu")
        gf = W.cct_generating(_partition(args.mu), args.order, barred=args.barred)
        for a, c in sorted(gf.items()):
            areas.extend([a] * c)
    else:
        raise UsageError(f"unknown family {fam!r}")
    count, gf = _gf_summary(areas)
    if args.format == "structured":
        if args.dump:
            for d in dumps:
                print(json.dumps({"object": d}), file=out)
        print(json.dumps({"family": fam, "count": count, "gf": str(gf)}, sort_keys=True), file=out)
    else:
        if args.dump:
            for d in dumps:
                print(d, file=out)
        print(f"{fam}: {count} objects, GF {gf}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    bounds = dict(V.DEFAULT_BOUNDS)
    if args.single_bound:
        bounds["single"] = args.single_bound
    reports = V.run_suite(args.suite, n=args.n, k=args.k, bounds=bounds)
    log = open(args.log, "w") if args.log else None
    try:
        for r in reports:
            if log:
                print(r.to_json(), file=log)
            if args.format == "structured":
                print(r.to_json(), file=out)
            else:
                print(r.summary(), file=out)
    finally:
        if log:
            log.close()
    bad = [r for r in reports if r.verdict == V.MISMATCH]
    if args.format != "structured":
        npos = sum(1 for r in reports if r.verdict == V.NONPOSITIVE)
        print(f"{len(reports)} checks, {len(bad)} mismatches, {npos} nonpositive", file=out)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_cache(args, out):
    if args.action == "info":
        print(f"{CACHE_ENV}={cache_dir()}", file=out)
        for n in range(1, 13):
            path = _cache_path(n)
            if path.exists():
                print(f"n={n} {path.stat().st_size} bytes", file=out)
        return EXIT_OK
    if args.action == "build":
        for n in range(1, args.n + 1):
            write_cache(MacdonaldTable.compute(n))
            print(f"n={n} written", file=out)
        return EXIT_OK
    if args.action == "check":
        status = EXIT_OK
        for n in range(1, 13):
            path = _cache_path(n)
            if not path.exists():
                continue
            try:
                MacdonaldTable.from_json(path.read_text())
                print(f"n={n} ok", file=out)
            except (ValidationError, ValueError, KeyError) as err:
                print(f"n={n} rejected: {err}", file=out)
                status = EXIT_MISMATCH
        return status
    if args.action == "clear":
        d = cache_dir()
        removed = 0
        if d.exists():
            for path in d.glob("htilde-v*-n*.json"):
                path.unlink()
                removed += 1
        print(f"removed {removed} entries", file=out)
        return EXIT_OK
    raise UsageError(args.action)


# ------------------------------------------------------------ parser

def build_parser():
    ap = argparse.ArgumentParser(prog="supernabla", description="Super Nabla expansions and checks")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("expand", help="expand the Super Nabla image of an expression")
    ex.add_argument("expr", help="e3, h3, p3, wp3, xi(e21), delta(m21,wp3), Ev(0,1,2)")
    ex.add_argument("--k", type=int, default=1)
    ex.add_argument("--basis", default="s", choices=["s", "m", "e", "h", "p", "f"])
    ex.add_argument("--t", choices=sorted(T_MODES))
    ex.add_argument("--special", choices=sorted(SPECIAL_MODES))
    ex.add_argument("--shift", help="qp1: q -> q+1, t -> t+1 and group in the E basis")
    ex.add_argument("--schur-qt", action="store_true", help="write coefficients as s_(a,b)(q,t)")
    ex.add_argument("--format", default="text", choices=["text", "structured", "latex"])
    ex.add_argument("--max-n", type=int, default=6)
    ex.set_defaults(func=cmd_expand)

    en = sub.add_parser("enumerate", help="enumerate combinatorial objects")
    en.add_argument("family", choices=["mld", "polyomino", "cct", "marked", "square", "sr"])
    en.add_argument("--n", type=int, default=1)
    en.add_argument("--k", type=int, default=1)
    en.add_argument("--r", type=int)
    en.add_argument("--width", type=int)
    en.add_argument("--gamma")
    en.add_argument("--mu")
    en.add_argument("--order", type=int, default=6)
    en.add_argument("--barred", action="store_true")
    en.add_argument("--content", help="per-digit contents: '1,2,3;1,1,2;1,1,1' or 'm111;m21;m3'")
    en.add_argument("--lattice", action="store_true")
    en.add_argument("--dump", action="store_true")
    en.add_argument("--format", default="text", choices=["text", "structured"])
    en.set_defaults(func=cmd_enumerate)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("--suite", required=True, choices=["t1", "power", "classical", "positivity", "all"])
    ve.add_argument("--n", type=int, default=3)
    ve.add_argument("--k", type=int, default=1)
    ve.add_argument("--single-bound", type=int)
    ve.add_argument("--log", help="write one JSON record per check here")
    ve.add_argument("--format", default="text", choices=["text", "structured"])
    ve.set_defaults(func=cmd_verify)

    ca = sub.add_parser("cache", help="manage the on-disk Macdonald tables")
    ca.add_argument("action", choices=["info", "build", "check", "clear"])
    ca.add_argument("--n", type=int, default=4)
    ca.set_defaults(func=cmd_cache)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (ParseError, UsageError, V.BoundExceeded, pc.EmptyGamma, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
