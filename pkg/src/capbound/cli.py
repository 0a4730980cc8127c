"""Command-line interface: bounds, table reproduction, verdicts, SDP export."""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from pathlib import Path

from .errors import ArgumentError, CapboundError, InapplicableError
from .graphs import Graph, catalog, parse_graph6, power
from .oracle import alpha_k, sandwich_verdict
from .rank_bounds import rank_type_bound
from .ratio_bounds import (
    _spectrum_and_applicability,
    closed_form_H,
    ratio_type_bound,
    theta_eigen_bound,
)
from .spectra import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_EIG_TOL,
    Spectrum,
    SrgParams,
    spectrum_from_csv,
    srg_spectrum,
    triangles_per_vertex,
)
from .tables import TABLE_IDS, load_fixtures, regenerate
from .theta_sdp import export_sdpa

METHODS = ("H", "oracle", "rank", "ratio", "theta-eigen")

BOUND_COLUMNS = ("graph", "n", "k", "method", "bound", "floor", "applicability")
VERDICT_COLUMNS = (
    "graph", "n", "k", "alpha", "lower", "upper", "determined", "certified", "value",
)


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--catalog", action="append", default=[], metavar="NAME[:ARGS]",
                   help="catalog graph, e.g. cycle:15, petersen, kneser:5,2")
    p.add_argument("--g6", action="append", default=[], metavar="FILE",
                   help="graph6 file")
    p.add_argument("--srg", action="append", default=[], metavar="N,K,A,C",
                   help="strongly regular parameters (spectrum-only input)")
    p.add_argument("--spectrum", action="append", default=[], metavar="FILE",
                   help="spectrum CSV file (spectrum-only input)")


def _collect_inputs(args) -> list[tuple[str, Graph | Spectrum]]:
    out: list[tuple[str, Graph | Spectrum]] = []
    for spec in args.catalog:
        out.append((spec, catalog(spec)))
    for path in args.g6:
        text = Path(path).read_text().strip()
        out.append((Path(path).stem, parse_graph6(text)))
    for quad in args.srg:
        try:
            n, k, a, c = (int(t) for t in quad.split(","))
        except ValueError:
            raise ArgumentError(f"--srg expects four integers n,k,a,c, got {quad!r}")
        params = SrgParams(n, k, a, c)
        out.append((str(params), srg_spectrum(params)))
    for path in args.spectrum:
        out.append((Path(path).stem, spectrum_from_csv(Path(path).read_text())))
    if not out:
        raise ArgumentError("no input graphs; use --catalog/--g6/--srg/--spectrum")
    return out


def _parse_k(text: str) -> list[int]:
    try:
        ks = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ArgumentError(f"--k expects comma-separated integers, got {text!r}")
    if not ks or any(k < 1 for k in ks):
        raise ArgumentError("--k values must be integers >= 1")
    return ks


def _emit(rows: list[dict[str, str]], columns: tuple[str, ...], fmt: str) -> None:
    if fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([r[c] for c in columns])
    elif fmt == "pretty":
        widths = [max(len(c), *(len(r[c]) for r in rows)) if rows else len(c)
                  for c in columns]
        print("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
        for r in rows:
            print("  ".join(r[c].ljust(w) for c, w in zip(columns, widths)).rstrip())
    else:
        print("\t".join(columns))
        for r in rows:
            print("\t".join(r[c] for c in columns))


def _one_bound(label: str, g, k: int, method: str, args) -> dict[str, str]:
    n = g.n
    row = {"graph": label, "n": str(n), "k": str(k), "method": method}
    t0 = time.perf_counter()
    try:
        if method == "ratio":
            rep = ratio_type_bound(g, k, args.tol, args.cluster_tol)
            row.update(method=rep.method, bound=_fmt(rep.bound),
                       floor=str(rep.floor), applicability=rep.applicability)
        elif method == "rank":
            rep = rank_type_bound(g, k, args.tol, args.cluster_tol)
            row.update(bound=_fmt(rep.bound), floor=str(rep.floor),
                       applicability=rep.applicability)
        elif method == "theta-eigen":
            rep = theta_eigen_bound(g, k, args.tol, args.cluster_tol)
            row.update(bound=_fmt(rep.bound), floor=str(rep.floor),
                       applicability=rep.applicability)
        elif method == "H":
            if k not in (1, 2, 3):
                raise InapplicableError(f"no closed form for k={k}")
            if isinstance(g, Spectrum):
                if k == 3:
                    raise InapplicableError(
                        "degree-3 closed form needs the triangle count; "
                        "provide a graph"
                    )
                spec, applic = g, "asserted: spectrum input"
                n_t = None
            else:
                spec, applic = _spectrum_and_applicability(
                    g, k, args.tol, args.cluster_tol
                )
                n_t = triangles_per_vertex(g) if k == 3 else None
            rep = closed_form_H(spec, k, n_t)
            row.update(method=rep.method, bound=_fmt(rep.bound),
                       floor=str(rep.floor), applicability=applic)
        elif method == "oracle":
            if isinstance(g, Spectrum):
                raise InapplicableError("exact search needs a graph, not a spectrum")
            res = alpha_k(g, k, args.budget)
            applic = ("exact search" if res.complete
                      else f"incomplete: node budget {args.budget} exhausted")
            row.update(bound=_fmt(float(res.size)), floor=str(res.size),
                       applicability=applic)
        else:  # pragma: no cover - argparse restricts choices
            raise ArgumentError(f"unknown method {method!r}")
    except InapplicableError as exc:
        row.update(bound="-", floor="-", applicability=f"inapplicable: {exc}")
    if args.timings:
        row["time_ms"] = f"{(time.perf_counter() - t0) * 1e3:.1f}"
    return row


def cmd_bounds(args) -> int:
    inputs = _collect_inputs(args)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHODS]
    if bad or not methods:
        raise ArgumentError(
            f"--methods accepts {','.join(METHODS)}; got {args.methods!r}"
        )
    ks = _parse_k(args.k)
    rows = []
    for label, g in inputs:
        for k in sorted(set(ks)):
            for method in sorted(set(methods)):
                rows.append(_one_bound(label, g, k, method, args))
    columns = BOUND_COLUMNS + (("time_ms",) if args.timings else ())
    _emit(rows, columns, args.format)
    return 0


def cmd_verdict(args) -> int:
    inputs = _collect_inputs(args)
    rows = []
    for label, g in inputs:
        if isinstance(g, Spectrum):
            raise ArgumentError(
                f"verdict needs an actual graph; {label!r} is spectrum-only"
            )
        for k in sorted(set(_parse_k(args.k))):
            try:
                ratio = ratio_type_bound(g, k, args.tol, args.cluster_tol)
            except InapplicableError:
                ratio = None
            try:
                rank = rank_type_bound(g, k, args.tol, args.cluster_tol)
            except InapplicableError:
                rank = None
            v = sandwich_verdict(g, k, ratio=ratio, rank=rank,
                                 levels=args.levels, budget=args.budget)
            certified = "-"
            if v.determined:
                certified = "capacity=theta" if v.theta else "capacity"
            rows.append({
                "graph": label, "n": str(g.n), "k": str(k),
                "alpha": str(v.alpha), "lower": _fmt(v.lower),
                "upper": "-" if math.isinf(v.upper) else _fmt(v.upper),
                "determined": "yes" if v.determined else "no",
                "certified": certified,
                "value": _fmt(v.capacity) if v.determined else "-",
            })
    _emit(rows, VERDICT_COLUMNS, args.format)
    return 0


def cmd_table(args) -> int:
    fx = load_fixtures(args.fixtures)
    report = regenerate(args.name, fx, max_n=args.max_n)
    for row in report.rows:
        if row.status == "skipped":
            print(f"{report.table}\t{row.label}\t-\t-\t-\tskipped: {row.reason}")
            continue
        for cell in row.cells:
            mark = "ok" if cell.ok else "MISMATCH"
            print(f"{report.table}\t{row.label}\t{cell.column}"
                  f"\t{cell.expected}\t{cell.computed}\t{mark}")
    c = report.counts
    print(f"# {report.table}: {c['ok']} ok, {c['mismatch']} mismatch, "
          f"{c['skipped']} skipped")
    return 0 if report.ok else 1


def cmd_export_theta(args) -> int:
    inputs = _collect_inputs(args)
    if len(inputs) != 1:
        raise ArgumentError("export-theta takes exactly one input graph")
    label, g = inputs[0]
    if isinstance(g, Spectrum):
        raise ArgumentError("export-theta needs an actual graph, not a spectrum")
    if args.power > 1:
        g = power(g, args.power)
    text = export_sdpa(g, args.out)
    if args.out is None:
        sys.stdout.write(text)
    else:
        print(f"wrote {args.out} ({g.n} vertices, {g.edge_count} edges)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="capbound",
        description="Algebraic upper bounds on the Shannon capacity of graph powers.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="compute bound rows for graphs and powers")
    _add_input_flags(b)
    b.add_argument("--k", default="1", help="comma-separated power list (default 1)")
    b.add_argument("--methods", default=",".join(METHODS),
                   help=f"comma-separated subset of {','.join(METHODS)}")
    b.add_argument("--tol", type=float, default=DEFAULT_EIG_TOL,
                   help="eigensolver tolerance")
    b.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL,
                   help="eigenvalue clustering tolerance")
    b.add_argument("--budget", type=int, default=50_000_000,
                   help="search node budget for the exact oracle")
    b.add_argument("--format", choices=("tsv", "csv", "pretty"), default="tsv")
    b.add_argument("--timings", action="store_true",
                   help="append a timing column (non-deterministic)")
    b.set_defaults(func=cmd_bounds)

    t = sub.add_parser("table", help="regenerate a reference table and diff it")
    t.add_argument("name", choices=TABLE_IDS)
    t.add_argument("--fixtures", default=None,
                   help="fixture directory (default $CAPBOUND_FIXTURES or ./fixtures)")
    t.add_argument("--max-n", type=int, default=None,
                   help="limit srg table to rows with n <= N")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verdict", help="pinch capacity between oracle and bounds")
    _add_input_flags(v)
    v.add_argument("--k", default="1", help="comma-separated power list (default 1)")
    v.add_argument("--levels", type=int, choices=(1, 2), default=1,
                   help="strong-product levels for the lower bound")
    v.add_argument("--tol", type=float, default=DEFAULT_EIG_TOL)
    v.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL)
    v.add_argument("--budget", type=int, default=50_000_000)
    v.add_argument("--format", choices=("tsv", "csv", "pretty"), default="tsv")
    v.set_defaults(func=cmd_verdict)

    e = sub.add_parser("export-theta", help="write the theta SDP in SDPA sparse form")
    _add_input_flags(e)
    e.add_argument("--power", type=int, default=1, help="export theta of this power")
    e.add_argument("--out", default=None, help="output path (default stdout)")
    e.set_defaults(func=cmd_export_theta)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
