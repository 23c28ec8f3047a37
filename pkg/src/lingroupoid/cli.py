"""Command-line front end: ``lingroupoid <subcommand> ...``.

Exit status is 0 on success, 1 when the answer is a domain "false" or
"not found" (``implies``, ``is-nice``, ``verify``, ``search``), and 2 on usage,
parse or guard errors. Data goes to stdout; timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .config import DEFAULT_LIMITS, DomainError, GuardError, ParseError
from .corpus import corpus_names, corpus_text
from .hedron import build_hedron, implied_names, implied_set, implies, to_dot
from .identities import canonicalize, census, enumerate_identities, parse_identity
from .models import (
    counterexample,
    direct_product,
    format_table,
    load_table,
    parse_table,
    search_model,
)
from .varieties import classify, classify_json, classify_table, display_key
from .wreath import full_wreath_order, is_nice, niceness_screen, wreath_group_order

SUBCOMMANDS = ("name", "print", "canon", "enumerate", "census", "hedron", "implies",
               "implied-set", "classify", "is-nice", "screen", "wreath-order", "verify",
               "search", "product")


def _diag(args, msg: str) -> None:
    if not args.quiet:
        print(msg, file=sys.stderr)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _limits(args):
    return DEFAULT_LIMITS.unsafe() if args.unsafe_limits else DEFAULT_LIMITS


def _ident_json(i):
    return {"name": i.name(), "surface": i.surface(), "n": i.n, "lhs": i.lhs,
            "rhs": i.rhs, "f": str(i.f)}


def _table(args, source):
    if source.startswith("corpus:"):
        return parse_table(corpus_text(source[len("corpus:"):]))
    return load_table(source)


# --- subcommands ----------------------------------------------------------------

def cmd_name(args):
    i = parse_identity(args.identity)
    _emit(_ident_json(i)) if args.format == "json" else print(i.name())
    return 0


def cmd_print(args):
    i = parse_identity(args.identity)
    _emit(_ident_json(i)) if args.format == "json" else print(i.surface())
    return 0


def cmd_canon(args):
    i = canonicalize(parse_identity(args.identity))
    _emit(_ident_json(i)) if args.format == "json" else print(i.name())
    return 0


def cmd_enumerate(args):
    ids = sorted(enumerate_identities(args.n, args.nontrivial, _limits(args)), key=display_key)
    if args.format == "json":
        _emit([_ident_json(i) for i in ids])
    else:
        for i in ids:
            print(f"{i.name()}\t{i.surface()}")
    return 0


def cmd_census(args):
    c = census(args.n, _limits(args))
    d = c.as_dict()
    if args.field:
        value = d[args.field]
        if args.format == "json":
            _emit(value)
        elif isinstance(value, dict):
            for k, v in value.items():
                print(f"{k}\t{v}")
        else:
            print(value)
        return 0
    if args.format == "json":
        _emit(d)
        return 0
    print(f"n\t{c.n}")
    print(f"C\t{c.catalan}")
    for m, v in c.s.items():
        print(f"s[{m}]\t{v}\tphi={c.phi[m]}")
    print(f"identities\t{c.identities}")
    print(f"nontrivial\t{c.nontrivial}")
    print(f"L\t{c.varieties}")
    return 0


def cmd_hedron(args):
    h = build_hedron(parse_identity(args.identity), args.m, _limits(args))
    if args.format == "dot":
        sys.stdout.write(to_dot(h))
    elif args.format == "json":
        print(h.to_json())
    else:
        print(f"nodes\t{len(h.nodes)}")
        print(f"arrows\t{len(h.arrows)}")
        for a in h.arrows:
            print(f"{a.src}\t{a.dst}\t{a.perm}")
    return 0


def cmd_implies(args):
    phi, psi = parse_identity(args.phi), parse_identity(args.psi)
    result = implies(phi, psi, _limits(args))
    _emit(result) if args.format == "json" else print(str(result).lower())
    return 0 if result else 1


def cmd_implied_set(args):
    phi = parse_identity(args.identity)
    t = time.perf_counter()
    if args.ordered_names:
        ids = implied_names(phi, args.m, _limits(args))
    else:
        ids = implied_set(phi, args.m, _limits(args))
    ids = sorted(ids, key=display_key)
    _diag(args, f"{len(ids)} identities in {time.perf_counter() - t:.2f}s")
    if args.count:
        print(len(ids))
    elif args.format == "json":
        _emit([_ident_json(i) for i in ids])
    else:
        for i in ids:
            print(f"{i.name()}\t{i.surface()}")
    return 0


def cmd_classify(args):
    classes = classify(args.n, _limits(args))
    if args.format == "json":
        print(classify_json(classes))
    else:
        sys.stdout.write(classify_table(classes))
    return 0


def cmd_is_nice(args):
    phi = parse_identity(args.identity)
    report = is_nice(args.m, phi, args.method, args.x, _limits(args))
    if args.format == "json":
        _emit(report.as_dict())
    elif args.report:
        print(report.to_text())
    else:
        print(str(report.nice).lower())
    return 0 if report.nice else 1


def cmd_screen(args):
    methods = ("group", "bfs") if args.method == "both" else (args.method,)
    rows = niceness_screen(args.n, args.m, methods, args.jobs, _limits(args))
    rows.sort(key=lambda r: (display_key(r.identity), r.m))
    if args.format == "json":
        _emit([r.as_dict() for r in rows])
        return 0
    for r in rows:
        cells = " ".join(f"{rep.method}={str(rep.nice).lower()}" for rep in r.reports)
        print(f"{r.identity.name()}\t{r.identity.surface()}\tm={r.m}\t{cells}")
    return 0


def cmd_wreath_order(args):
    phi = parse_identity(args.identity)
    t = time.perf_counter()
    order = wreath_group_order(phi, args.m, _limits(args))
    _diag(args, f"Schreier-Sims finished in {time.perf_counter() - t:.2f}s")
    full = full_wreath_order(args.m)
    if args.format == "json":
        _emit({"identity": phi.name(), "m": args.m, "order": str(order),
               "full_order": str(full), "index": str(full // order)})
    else:
        print(order)
        if args.index:
            print(f"index\t{full // order}")
    return 0


def cmd_verify(args):
    t = _table(args, args.table)
    results = []
    for text in args.identities:
        ident = parse_identity(text)
        results.append((ident, counterexample(t, ident)))
    if args.format == "json":
        _emit([{"identity": i.name(), "satisfied": c is None, "counterexample": c}
               for i, c in results])
    else:
        for i, c in results:
            line = f"{i.name()}\t{'true' if c is None else 'false'}"
            if c is not None:
                line += "\t" + " ".join(f"{k}={v}" for k, v in c.items())
            print(line)
    return 0 if all(c is None for _, c in results) else 1


def cmd_search(args):
    limits = _limits(args)
    satisfy = [parse_identity(s) for s in args.satisfy]
    violate = [parse_identity(s) for s in args.violate]
    if args.distinguish:
        lengths = {i.n for i in satisfy}
        chosen = {canonicalize(i) for i in satisfy}
        for n in sorted(lengths):
            violate += [i for i in enumerate_identities(n, True, limits) if i not in chosen]
    result = search_model(satisfy, violate, args.max_order, limits)
    if args.format == "json":
        _emit({"found": result.found,
               "order": result.model.order if result.model else None,
               "table": [list(r) for r in result.model.table] if result.model else None,
               "exhausted_orders": result.exhausted})
    elif result.model is not None:
        sys.stdout.write(format_table(result.model))
    else:
        print(f"none\texhausted orders {result.exhausted}")
    return 0 if result.found else 1


def cmd_product(args):
    t = direct_product(_table(args, args.left), _table(args, args.right))
    if args.format == "json":
        _emit([list(r) for r in t.table])
    else:
        sys.stdout.write(format_table(t))
    return 0


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "dot"), default="plain")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="cap on worker processes (screen)")
    common.add_argument("--unsafe-limits", action="store_true", help="lift size guards")
    common.add_argument("-q", "--quiet", action="store_true", help="no diagnostics on stderr")

    p = argparse.ArgumentParser(prog="lingroupoid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="{" + ",".join(SUBCOMMANDS) + "}")

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    ident_help = "identity as an equation like '(xy)z=y(zx)' or a name like '<3|0|1|(1,3,2)>'"
    for name, func, h in (("name", cmd_name, "systematic name of an identity"),
                          ("print", cmd_print, "equation form of an identity"),
                          ("canon", cmd_canon, "canonical name")):
        add(name, func, h).add_argument("identity", help=ident_help)

    sp = add("enumerate", cmd_enumerate, "list canonical identities of length 2n")
    sp.add_argument("n", type=int)
    sp.add_argument("--nontrivial", action="store_true")

    sp = add("census", cmd_census, "identity and variety counts")
    sp.add_argument("n", type=int)
    sp.add_argument("--field", choices=("n", "C", "s", "phi", "identities", "nontrivial", "L"))

    sp = add("hedron", cmd_hedron, "identity-hedron H(phi, m)")
    sp.add_argument("identity", help=ident_help)
    sp.add_argument("--m", type=int, required=True)

    sp = add("implies", cmd_implies, "does phi imply psi?")
    sp.add_argument("phi")
    sp.add_argument("psi")

    sp = add("implied-set", cmd_implied_set, "nontrivial identities of length 2m implied by phi")
    sp.add_argument("identity", help=ident_help)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--count", action="store_true", help="print only the count")
    sp.add_argument("--ordered-names", action="store_true",
                    help="list <i|j|f> and <j|i|f^-1> separately instead of canonical names")

    sp = add("classify", cmd_classify, "varieties defined by one identity of length 2n")
    sp.add_argument("n", type=int)

    sp = add("is-nice", cmd_is_nice, "are all groupoids satisfying phi mAC-nice?")
    sp.add_argument("m", type=int)
    sp.add_argument("identity", help=ident_help)
    sp.add_argument("--method", choices=("group", "bfs"), default="group")
    sp.add_argument("--x", type=int, default=0, help="bracketing label to examine")
    sp.add_argument("--report", action="store_true", help="print orbit and P_x details")

    sp = add("screen", cmd_screen, "mAC-niceness of every identity of length 2n")
    sp.add_argument("n", type=int)
    sp.add_argument("--m", type=int, nargs="+", required=True)
    sp.add_argument("--method", choices=("group", "bfs", "both"), default="group")

    sp = add("wreath-order", cmd_wreath_order, "order of W(phi, m)")
    sp.add_argument("identity", help=ident_help)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--index", action="store_true", help="also print the index in S_m wr S_C")

    sp = add("verify", cmd_verify, "check identities on a multiplication table")
    sp.add_argument("table", help="file path, inline rows '0 1;1 0', or corpus:NAME "
                                  f"({', '.join(corpus_names())})")
    sp.add_argument("identities", nargs="+")

    sp = add("search", cmd_search, "smallest table satisfying/violating identities")
    sp.add_argument("--satisfy", nargs="*", default=[])
    sp.add_argument("--violate", nargs="*", default=[])
    sp.add_argument("--distinguish", action="store_true",
                    help="also violate every other nontrivial identity of the same length")
    sp.add_argument("--max-order", type=int, default=3)

    sp = add("product", cmd_product, "direct product of two tables")
    sp.add_argument("left")
    sp.add_argument("right")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GuardError, DomainError, KeyError) as exc:
        print(f"lingroupoid {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
