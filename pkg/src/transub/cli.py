"""Command-line front end.

    transub bound paley:7 --format md
    transub search paley:31 --time-limit 60s
    transub spectrum transitive:3
    transub table1 --max-v 35
    transub table2 --time-limit 120s
    transub bip --m 18

Exit codes: 0 success, 2 input error, 3 time limit hit, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import ROUND_DOWN, Decimal

from . import bip
from .bounds import best_bound, drt_bound_exact, drt_upper_bound, interlacing_value, parity_refine
from .digraph import (Digraph, DigraphError, classify, directed_cycle, load_digraph,
                      paley_tournament, transitive_tournament)
from .field import prime_power
from .search import max_transitive, max_transitive_bb
from .spectral import SpectralError, spectrum

EXIT_OK, EXIT_INPUT, EXIT_TIMEOUT, EXIT_NUMERIC = 0, 2, 3, 4
FORMATS = ("json", "md", "csv")
NA_EXTERNAL = "n/a (needs external graph)"


class InputError(Exception):
    pass


def resolve_graph(spec: str) -> Digraph:
    """Turn ``paley:q``, ``paley:p^n``, ``transitive:s``, ``cycle:n`` or a path into a digraph."""
    kind, sep, arg = spec.partition(":")
    try:
        if sep and kind == "paley":
            if "^" in arg:
                p, n = arg.split("^")
                return paley_tournament((int(p), int(n)))
            return paley_tournament(int(arg))
        if sep and kind == "transitive":
            return transitive_tournament(int(arg))
        if sep and kind == "cycle":
            return directed_cycle(int(arg))
    except ValueError as exc:
        raise InputError(f"cannot build {spec!r}: {exc}") from None
    if not os.path.exists(spec):
        raise InputError(f"{spec}: file not found")
    try:
        return load_digraph(spec)
    except (DigraphError, ValueError) as exc:
        raise InputError(f"{spec}: {exc}") from None


def parse_seconds(text: str | None) -> float | None:
    if text is None:
        return None
    t = text.strip().lower()
    t = t[:-1] if t.endswith("s") else t
    try:
        return float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad time limit {text!r}") from None


def worker_count() -> int:
    n = int(os.environ.get("TB_THREADS", "0") or 0)
    return n if n > 0 else (os.cpu_count() or 1)


# -- rendering ----------------------------------------------------------------

def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def render(rows: list[dict], fmt: str, extra: dict | None = None) -> str:
    """Render a list of flat records; ``extra`` holds top-level JSON fields."""
    if fmt == "json":
        if extra is None:
            return json.dumps(rows, indent=2)
        return json.dumps({"rows": rows, **extra}, indent=2)
    cols = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r[c]) for c in cols])
        for k, val in (extra or {}).items():
            w.writerow([f"# {k}", _cell(val)])
        return buf.getvalue().rstrip("\n")
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    lines += ["| " + " | ".join(_cell(r[c]) for c in cols) + " |" for r in rows]
    for k, val in (extra or {}).items():
        lines.append(f"\n**{k}**: {_cell(val)}")
    return "\n".join(lines)


def truncate3(x: float) -> str:
    """Three decimals, truncated toward zero (4.3468 -> 4.346)."""
    return str(Decimal(repr(x)).quantize(Decimal("0.001"), rounding=ROUND_DOWN))


# -- commands -----------------------------------------------------------------

def cmd_bound(args) -> int:
    g = resolve_graph(args.graph)
    methods = args.method or ["all"]
    summary = best_bound(g, methods)
    print(render([r.to_dict() for r in summary.reports], args.format, {"best": summary.best}))
    return EXIT_OK


def cmd_search(args) -> int:
    g = resolve_graph(args.graph)
    if args.exact_only and g.v > 20:
        raise InputError("--brute needs v <= 20")
    if args.exact_only:
        from .search import max_transitive_brute
        res = max_transitive_brute(g)
    else:
        res = max_transitive(g, time_limit=args.time_limit)
    d = res.to_dict()
    if args.format == "json":
        print(json.dumps(d, indent=2))
    else:
        d["witness"] = " ".join(map(str, d["witness"]))
        print(render([d], args.format))
    return EXIT_TIMEOUT if res.time_limited else EXIT_OK


def cmd_spectrum(args) -> int:
    g = resolve_graph(args.graph)
    print(render(spectrum(g).to_records(), args.format))
    return EXIT_OK


def table1_rows(max_v: int) -> list[dict]:
    return [{"v": v, "value": truncate3(interlacing_value(v ** 0.5))} for v in range(7, max_v + 1, 4)]


def cmd_table1(args) -> int:
    print(render(table1_rows(args.max_v), args.format))
    return EXIT_OK


def _paley_max(v: int, time_limit: float | None):
    res = max_transitive_bb(paley_tournament(v), time_limit=time_limit)
    return res.max_size, res.time_limited


def table2_rows(max_v: int = 35, time_limit: float | None = None,
                extra_graphs: list[Digraph] = (), paley_only: bool = False,
                workers: int = 1) -> tuple[list[dict], bool]:
    """One record per v = 7, 11, ..., max_v; also reports whether any search timed out."""
    vs = list(range(7, max_v + 1, 4))
    paley_vs = [v for v in vs if prime_power(v) is not None]
    if workers > 1 and len(paley_vs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = list(pool.map(_paley_max, paley_vs, [time_limit] * len(paley_vs)))
    else:
        found = [_paley_max(v, time_limit) for v in paley_vs]
    paley = dict(zip(paley_vs, found))

    others: dict[int, list] = {}
    if not paley_only:
        for g in extra_graphs:
            if not classify(g).is_doubly_regular:
                raise InputError(f"supplied graph on {g.v} vertices is not doubly regular")
            res = max_transitive_bb(g, time_limit=time_limit)
            others.setdefault(g.v, []).append((res.max_size, res.time_limited))

    limited = False
    rows = []
    for v in vs:
        ub = drt_upper_bound(v)
        pal = paley.get(v)
        known = ([pal] if pal else []) + others.get(v, [])
        limited |= any(t for _, t in known)
        row = {"v": v, "upper_bound": ub.best}
        if not paley_only:
            if known:
                size = max(s for s, _ in known)
                row["maximum_available"] = f">= {size}" if any(t for _, t in known) else size
            else:
                row["maximum_available"] = NA_EXTERNAL
        if pal is None:
            row["paley"] = "-"
        else:
            row["paley"] = f">= {pal[0]}" if pal[1] else pal[0]
        rows.append(row)
    return rows, limited


def cmd_table2(args) -> int:
    extra = [resolve_graph(p) for p in args.graph_file or []]
    rows, limited = table2_rows(args.max_v, args.time_limit, extra, args.paley_only,
                                workers=worker_count())
    print(render(rows, args.format))
    return EXIT_TIMEOUT if limited else EXIT_OK


def bip_record(m: int) -> dict:
    v = 4 * m - 1
    hof = drt_bound_exact(v)
    t = bip.thm54_bound(m)
    b = bip.bip_bound(m)
    refined = parity_refine(hof, True, v).integer_bound
    return {
        "m": m,
        "v": v,
        "hoffman": hof.integer_bound,
        "hoffman_parity": refined,
        "thm54_cases": list(t.applicable_cases),
        "thm54": t.bound,
        "bip_bound": b,
        "best": min(refined, t.bound, b),
    }


def cmd_bip(args) -> int:
    if args.v is not None:
        if args.v % 4 != 3:
            raise InputError(f"v must be 3 mod 4, got {args.v}")
        ms = [(args.v + 1) // 4]
    elif args.m is not None:
        ms = [args.m]
    else:
        ms = range(1, args.max_m + 1)
    if any(m < 1 for m in ms):
        raise InputError("m must be >= 1")
    rows = [bip_record(m) for m in ms]
    if args.format != "json":
        for r in rows:
            r["thm54_cases"] = " ".join(map(str, r["thm54_cases"]))
    print(render(rows, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="transub", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_arg(p):
        p.add_argument("graph", nargs="?", help="paley:q | paley:p^n | transitive:s | cycle:n | PATH")
        p.add_argument("--graph-file", dest="graph_file", help="read the digraph from PATH")

    def fmt_arg(p, default="json"):
        p.add_argument("--format", choices=FORMATS, default=default)

    p = sub.add_parser("bound", help="upper bounds for one digraph")
    graph_arg(p)
    fmt_arg(p)
    p.add_argument("--method", action="append",
                   choices=["interlacing", "hoffman", "drt", "bip", "thm54", "all"])
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", help="exact maximum transitive subtournament")
    graph_arg(p)
    fmt_arg(p)
    p.add_argument("--time-limit", type=parse_seconds, default=None)
    p.add_argument("--brute", dest="exact_only", action="store_true",
                   help="force exhaustive subset enumeration")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("spectrum", help="Seidel spectrum with main angles")
    graph_arg(p)
    fmt_arg(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("table1", help="interlacing values for doubly regular tournaments")
    p.add_argument("--max-v", type=int, default=35)
    fmt_arg(p, "md")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="upper bounds and exact maxima for v = 7, 11, ...")
    p.add_argument("--max-v", type=int, default=35)
    p.add_argument("--time-limit", type=parse_seconds, default=None)
    p.add_argument("--paley-only", action="store_true")
    p.add_argument("--graph-file", action="append",
                   help="extra doubly regular tournament to include (repeatable)")
    fmt_arg(p, "md")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("bip", help="block-intersection bounds per m (v = 4m - 1)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--m", type=int)
    g.add_argument("--v", type=int)
    g.add_argument("--max-m", type=int, default=20)
    fmt_arg(p)
    p.set_defaults(func=cmd_bip)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "graph") and args.command != "table2":
        args.graph = args.graph_file or args.graph
        if args.graph is None:
            print("transub: error: a graph spec or --graph-file is required", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"transub: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SpectralError, ArithmeticError) as exc:
        print(f"transub: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
