"""``gem-census`` command line."""
from __future__ import annotations

import argparse
import logging
import os
import sys
import traceback
from typing import Sequence

log = logging.getLogger("gemcensus")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BUDGET = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _threads_default() -> str:
    return os.environ.get("GEMCENSUS_THREADS", "1")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> _Parser:
    p = _Parser(prog="gem-census", description="Census and classification of genus-two crystallizations.")
    p.add_argument("--config", help="key=value file supplying option defaults")
    p.add_argument("-v", "--verbose", "--progress", action="store_true", help="progress on stderr")
    p.add_argument("--trace", action="store_true", help="debug logging and tracebacks")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def common(sp, threads=False, out=True):
        if threads:
            sp.add_argument("--threads", type=_positive, default=_threads_default())
        if out:
            sp.add_argument("--out", help="write results here instead of stdout")

    g = sub.add_parser("generate", help="generate the rigid crystallization catalogue")
    g.add_argument("--max-order", type=int, required=True)
    g.add_argument("--min-order", type=int, default=2)
    g.add_argument("--genus", type=int, default=2)
    f = g.add_mutually_exclusive_group()
    f.add_argument("--bipartite", "--bipartite-only", dest="filter", action="store_const", const="bipartite")
    f.add_argument("--nonbipartite", "--nonbipartite-only", dest="filter", action="store_const",
                   const="nonbipartite")
    g.add_argument("--table1", action="store_true", help="print the per-order count table")
    common(g, threads=True)

    c = sub.add_parser("classify", help="partition a catalogue into move classes")
    c.add_argument("--in", dest="inp", required=True)
    c.add_argument("--known", action="append", default=[])
    c.add_argument("--budget", default="4,4,4,12", help="m,n,inflate,len")
    c.add_argument("--dipole-moves", action="store_true", help="also insert and cancel dipoles")
    c.add_argument("--strict", action="store_true", help="exit 2 if any graph is unresolved")
    common(c, threads=True)

    i = sub.add_parser("invariants", help="homology, fundamental group, face vector")
    i.add_argument("--in", dest="inp")
    i.add_argument("--code", action="append", default=[])
    i.add_argument("--what", default="h1")
    i.add_argument("--simplify", action="store_true", help="Tietze-simplify pi1")
    common(i)

    s = sub.add_parser("seifert", help="build a Seifert space from three LST triples")
    s.add_argument("--triples", required=True, help='e.g. "(2,1,-3),(4,1,-5),(4,-5,1)"')
    s.add_argument("--modes", help="theta|sigma per triple, comma separated")
    s.add_argument("--crystallize", action="store_true")
    common(s)

    k = sub.add_parser("code", help="canonical codes and round-trips")
    k.add_argument("--in", dest="inp")
    k.add_argument("--code", action="append", default=[])
    k.add_argument("--roundtrip", action="store_true")
    common(k)

    sp = sub.add_parser("split", help="detect connected sums")
    sp.add_argument("--in", dest="inp")
    sp.add_argument("--code", action="append", default=[])
    common(sp)

    ct = sub.add_parser("cat", help="print a catalogue")
    ct.add_argument("--in", dest="inp", required=True)
    ct.add_argument("--order", type=int)
    common(ct)

    d = sub.add_parser("diff", help="codes present in exactly one catalogue")
    d.add_argument("a")
    d.add_argument("b")
    common(d)

    t = sub.add_parser("table1", help="count table of a catalogue file")
    t.add_argument("--in", dest="inp", required=True)
    t.add_argument("--orders", help="comma separated (default: 14..max)")
    common(t)

    n = sub.add_parser("names", help="bundled tables of named manifolds")
    w = n.add_mutually_exclusive_group(required=True)
    w.add_argument("--table2", dest="table", action="store_const", const=2)
    w.add_argument("--table3", dest="table", action="store_const", const=3)
    common(n)
    return p


def _read_config(path: str) -> dict[str, str]:
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for ln, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{ln}: expected key=value")
                key, val = line.split("=", 1)
                out[key.strip().replace("-", "_")] = val.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from exc
    return out


def _apply_config(parser: _Parser, cfg: dict[str, str]):
    subs = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    used = set()
    for sp in subs.choices.values():
        for act in sp._actions:
            if act.dest in cfg:
                val = cfg[act.dest]
                if act.nargs == 0:
                    val = val.lower() in ("1", "true", "yes", "on")
                elif isinstance(act, argparse._AppendAction):
                    val = [v.strip() for v in val.split(",") if v.strip()]
                sp.set_defaults(**{act.dest: val})
                act.required = False
                used.add(act.dest)
    unknown = set(cfg) - used
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text if text.endswith("\n") or not text else text + "\n")
    elif text:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _codes(args) -> list[str]:
    from .catalog import CATALOGUE_MAGIC, parse_catalogue
    codes = list(args.code)
    if args.inp:
        try:
            with open(args.inp, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
        if text.lstrip().startswith(f"# {CATALOGUE_MAGIC}"):
            codes.extend(parse_catalogue(text, args.inp).codes())
        else:
            codes.extend(ln.split()[0] for ln in text.splitlines() if ln.strip() and not ln.startswith("#"))
    if not codes:
        raise UsageError("no codes given (use --in or --code)")
    return codes


def _progress(msg: str):
    log.info(msg)


# --- subcommands ------------------------------------------------------------

def cmd_generate(args) -> int:
    from .catalog import dump_catalogue
    from .generation import generate_catalogue, table1
    bip = {None: None, "bipartite": True, "nonbipartite": False}[args.filter]
    try:
        cat = generate_catalogue(args.max_order, args.genus, min_order=args.min_order, bipartite=bip,
                                 threads=int(args.threads))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.table1:
        orders = range(max(14, args.min_order + args.min_order % 2), args.max_order + 1, 2)
        _emit(table1(cat, orders), None)
        if args.out:
            _emit(dump_catalogue(cat), args.out)
    else:
        _emit(dump_catalogue(cat), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    from .catalog import dump_classes, load_catalogue
    from .classify import SearchBudget, gamma_class, ingest_known
    try:
        b = SearchBudget.parse(args.budget)
        budget = SearchBudget(b.max_gd_size, b.max_order_inflation, b.max_sequence_length, args.dipole_moves)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cat = load_catalogue(args.inp)
    known = ingest_known(args.known)
    errors: list = []
    recs = gamma_class(cat, known, budget, progress=_progress, errors=errors, threads=int(args.threads))
    _emit(dump_classes(recs), args.out)
    for e in errors:
        log.warning("budget exhausted: %s", e)
    if errors and args.strict:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_invariants(args) -> int:
    from .core import from_code
    from .invariants import face_vector, first_homology, fundamental_group, tietze_simplify
    what = [w.strip() for w in args.what.split(",") if w.strip()]
    bad = set(what) - {"h1", "pi1", "face"}
    if bad:
        raise UsageError(f"unknown invariant(s): {', '.join(sorted(bad))}")
    lines = []
    for code in _codes(args):
        g = from_code(code, check_canonical=False)
        parts = [code]
        for w in what:
            if w == "h1":
                parts.append(f"h1={first_homology(g)}")
            elif w == "pi1":
                pres = fundamental_group(g)
                if args.simplify:
                    pres = tietze_simplify(pres)
                parts.append(f"pi1={pres}")
            else:
                fv = face_vector(g)
                parts.append(f"face={fv.vertices},{fv.edges},{fv.triangles},{fv.tetrahedra}")
        lines.append(" ".join(parts))
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_seifert(args) -> int:
    from .core import is_manifold_gem
    from .invariants import first_homology, seifert_homology
    from .seifert import SeifertSpec, assemble, barycentric_coloured_graph, crystallize
    modes = tuple(m.strip() for m in args.modes.split(",")) if args.modes else None
    spec = SeifertSpec.parse(args.triples, modes)
    t = assemble(spec)
    g = barycentric_coloured_graph(t)
    fib = ",".join(f"({a},{b})" for a, b in spec.fibres())
    lines = [
        f"fibres=(S2,{fib})",
        f"tetrahedra={t.ntet}",
        f"gem_order={g.order} manifold={is_manifold_gem(g)}",
        f"h1={first_homology(g)} expected={seifert_homology(spec.fibres())}",
    ]
    if args.crystallize:
        c, mlog = crystallize(g)
        for tok in mlog.moves:
            log.debug("move %s", tok)
        lines.append(f"crystallization_order={c.order} h1={first_homology(c)}")
        lines.append(f"moves: {mlog.summary()}")
        g = c
    lines.append(f"code={g.code()}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_code(args) -> int:
    from .core import canonical_code, from_code
    lines = []
    failed = 0
    for code in _codes(args):
        g = from_code(code, check_canonical=False)
        canon = canonical_code(g)
        if args.roundtrip:
            ok = canon == code and from_code(canon).code() == canon
            failed += not ok
            lines.append(f"{code} {'ok' if ok else 'FAIL ' + canon}")
        else:
            lines.append(canon)
    _emit("\n".join(lines), args.out)
    return EXIT_INVALID if failed else EXIT_OK


def cmd_split(args) -> int:
    from .classify import detect_connected_sums
    lines = []
    for code, parts in detect_connected_sums(_codes(args)):
        lines.append(f"{code} = " + " # ".join(parts))
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_cat(args) -> int:
    from .catalog import dump_catalogue, load_catalogue
    cat = load_catalogue(args.inp)
    if args.order is not None:
        cat = cat.filter(lambda e: e.order == args.order)
    _emit(dump_catalogue(cat), args.out)
    return EXIT_OK


def cmd_diff(args) -> int:
    from .catalog import diff, load_catalogue
    rep = diff(load_catalogue(args.a), load_catalogue(args.b))
    _emit(rep.format(), args.out)
    return EXIT_OK


def cmd_table1(args) -> int:
    from .catalog import load_catalogue
    from .generation import table1
    cat = load_catalogue(args.inp)
    if args.orders:
        try:
            orders = [int(x) for x in args.orders.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad --orders: {args.orders}") from exc
    else:
        top = max((e.order for e in cat), default=14)
        orders = list(range(14, top + 1, 2))
    _emit(table1(cat, orders), args.out)
    return EXIT_OK


def cmd_names(args) -> int:
    from .catalog import named_table
    _emit(named_table(args.table).format(), args.out)
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate, "classify": cmd_classify, "invariants": cmd_invariants,
    "seifert": cmd_seifert, "code": cmd_code, "split": cmd_split, "cat": cmd_cat,
    "diff": cmd_diff, "table1": cmd_table1, "names": cmd_names,
}


_GLOBAL_FLAGS = ("-v", "--verbose", "--progress", "--trace")


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # global switches are accepted anywhere on the line
    flags = [a for a in argv if a in _GLOBAL_FLAGS]
    argv = flags + [a for a in argv if a not in _GLOBAL_FLAGS]
    parser = build_parser()
    trace = "--trace" in argv
    try:
        pre = _Parser(add_help=False)
        pre.add_argument("--config")
        known, _ = pre.parse_known_args(argv)
        if known.config:
            _apply_config(parser, _read_config(known.config))
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        level = logging.DEBUG if args.trace else logging.INFO if args.verbose else logging.WARNING
        logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(message)s")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, OSError, LookupError) as exc:
        if trace:
            traceback.print_exc()
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
