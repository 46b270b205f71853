"""Command-line interface.

Subcommands:

* analyze: one graph (graph6 argument, --in file, or stdin) to a JSON report
  with orbits, anchor counts by size, balance class, shadow diagnostics for a
  chosen anchor, the certificate, and the oracle verdict when in range.
* classify: exhaustive classification campaign for one order; CSV rows or a
  JSON summary.  Orders 3..8 by default; 9 behind --allow-order-9.
* reconstruct: run the deck oracle on a deck file; the exit status encodes
  unique / multiple / none.
* trees: certify every free tree up to a maximum order; CSV rows or a JSON
  summary with the branch histogram.

Reports are byte-identical across runs on the same input: rows follow the
canonical enumeration order, JSON keys are sorted, and wall-clock timing goes
to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from multiprocessing import Pool

from .anchor import balance_class, anchor_sizes, find_anchors
from .certify import (
    ORACLE_ORDER_CAP,
    Certificate,
    CertificateKind,
    certify,
    certify_tree,
    oracle_reconstruct,
)
from .deck import DeckFormatError, deck_of, read_deck_file
from .enumeration import (
    MAX_ENUM_ORDER,
    MAX_TREE_ORDER,
    enumerate_graphs,
    enumerate_trees,
)
from .graphcore import (
    Graph6Error,
    MAX_ORDER,
    SimpleGraph,
    canonical_graph6,
    is_vertex_transitive,
    orbits,
    parse_graph6,
    write_graph6,
)
from .shadow import build_shadow, is_shadow_vertex_transitive, shadow_anchors
from .shadow import shadow_to_text

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MULTIPLE = 3
EXIT_NONE = 4

CLASSIFY_DEFAULT_MAX = 8
CSV_COLUMNS = ("graph6", "class", "certificate", "witness")
TREE_CSV_COLUMNS = ("graph6", "order", "certificate", "witness")


@dataclass
class CampaignReport:
    """In-memory campaign result.  wall_time stays out of the serialized
    forms so that report files are byte-identical across runs."""

    command: str
    order_range: tuple[int, int]
    class_counts: dict[str, int]
    certificate_histogram: dict[str, int]
    unknowns: list[str]
    rows: list[tuple]
    wall_time: float
    header: str

    def summary_json(self) -> str:
        doc = {
            "schema": "1",
            "command": self.command,
            "order_min": self.order_range[0],
            "order_max": self.order_range[1],
            "header": self.header,
            "class_counts": self.class_counts,
            "certificate_histogram": self.certificate_histogram,
            "unknown": self.unknowns,
            "total": len(self.rows),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def rows_csv(self, columns) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(self.rows)
        return buf.getvalue()


def _witness_summary(witness: dict) -> str:
    """Compact deterministic key=value form, CSV-safe (no commas)."""

    def fmt(v) -> str:
        if isinstance(v, bool):
            return "true" if v else "false"
        if v is None:
            return "none"
        if isinstance(v, (list, tuple)):
            return "+".join(fmt(x) for x in v)
        return str(v)

    return ";".join(f"{k}={fmt(witness[k])}" for k in sorted(witness))


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def _chosen_anchor(g: SimpleGraph, cert: Certificate) -> tuple[int, ...] | None:
    w = cert.witness
    if "anchor" in w:
        return tuple(sorted(w["anchor"]))
    for k in range(1, g.n):
        found = find_anchors(g, k)
        if found:
            return found[0].vertices
    return None


def _shadow_report(g: SimpleGraph, anchor: tuple[int, ...] | None):
    if anchor is None or not 0 < len(anchor) < g.n:
        return None
    x = build_shadow(g, anchor)
    return {
        "anchor": list(anchor),
        "shadow_vertices": x.m,
        "vertex_transitive": is_shadow_vertex_transitive(x),
        "shadow_anchors": len(shadow_anchors(x)),
        "text": shadow_to_text(x),
    }


def cmd_analyze(args) -> int:
    if args.graph6 is not None:
        raw = args.graph6
    elif args.infile is not None:
        try:
            with open(args.infile, encoding="ascii") as fh:
                raw = fh.read()
        except OSError as exc:
            return _fail(str(exc))
    else:
        raw = sys.stdin.read()
    raw = raw.strip()
    try:
        g = parse_graph6(raw)
    except Graph6Error as exc:
        return _fail(f"bad graph6 input: {exc}")
    if not 3 <= g.n <= MAX_ORDER:
        return _fail(f"analyze supports order 3..{MAX_ORDER}, got {g.n}")

    t0 = time.monotonic()
    cert = certify(g)
    oracle_cap = min(args.max_oracle, ORACLE_ORDER_CAP, MAX_ENUM_ORDER)
    oracle: dict = {"checked": False}
    if g.n <= oracle_cap:
        verdict = oracle_reconstruct(deck_of(g), oracle_cap)
        oracle = {
            "checked": True,
            "unique": verdict.unique,
            "matches": [canonical_graph6(m) for m in verdict.matches],
        }
    report = {
        "schema": "1",
        "command": "analyze",
        "input": raw,
        "canonical_graph6": canonical_graph6(g),
        "order": g.n,
        "edges": g.edge_count(),
        "degree_sequence": list(g.degree_sequence()),
        "vertex_transitive": is_vertex_transitive(g),
        "orbits": [list(o) for o in orbits(g)],
        "balance_class": balance_class(g).value,
        "anchor_counts": {str(k): v for k, v in sorted(anchor_sizes(g).items())},
        "certificate": cert.as_dict(),
        "oracle": oracle,
        "shadow": _shadow_report(g, _chosen_anchor(g, cert)),
    }
    wall = time.monotonic() - t0
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    print(f"analyze wall_time_s={wall:.3f}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def _classify_row(g6: str) -> tuple[str, str, str, str]:
    g = parse_graph6(g6)
    cert = certify(g)
    return (
        g6,
        balance_class(g).value,
        cert.kind.value,
        _witness_summary(cert.witness),
    )


def _map_rows(fn, items: list[str], jobs: int) -> list[tuple]:
    if jobs <= 1:
        return [fn(s) for s in items]
    with Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=64)


def classify_campaign(order: int, jobs: int = 1) -> CampaignReport:
    t0 = time.monotonic()
    graphs = enumerate_graphs(order)
    rows = _map_rows(_classify_row, [write_graph6(g) for g in graphs], jobs)
    class_counts: dict[str, int] = {}
    hist: dict[str, int] = {}
    unknowns = []
    for g6, bc, kind, _ in rows:
        class_counts[bc] = class_counts.get(bc, 0) + 1
        hist[kind] = hist.get(kind, 0) + 1
        if kind == CertificateKind.UNKNOWN.value:
            unknowns.append(g6)
    header = (
        f"classification campaign at order {order}; orders up to "
        f"{CLASSIFY_DEFAULT_MAX} run by default, order 9 is opt-in via "
        f"--allow-order-9"
    )
    return CampaignReport(
        command="classify",
        order_range=(order, order),
        class_counts=class_counts,
        certificate_histogram=hist,
        unknowns=unknowns,
        rows=rows,
        wall_time=time.monotonic() - t0,
        header=header,
    )


def cmd_classify(args) -> int:
    cap = 9 if args.allow_order_9 else CLASSIFY_DEFAULT_MAX
    if not 3 <= args.order <= cap:
        hint = "" if args.allow_order_9 else " (order 9 needs --allow-order-9)"
        return _fail(f"classify supports order 3..{cap}{hint}, got {args.order}")
    report = classify_campaign(args.order, args.jobs)
    if args.format == "csv":
        _emit(report.rows_csv(CSV_COLUMNS), args.out)
    else:
        _emit(report.summary_json(), args.out)
    print(f"classify wall_time_s={report.wall_time:.3f}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# reconstruct
# ---------------------------------------------------------------------------


def cmd_reconstruct(args) -> int:
    try:
        d = read_deck_file(args.deck)
    except (OSError, DeckFormatError, Graph6Error) as exc:
        return _fail(str(exc))
    cap = min(args.max_oracle, ORACLE_ORDER_CAP, MAX_ENUM_ORDER)
    if d.order > cap:
        return _fail(f"oracle capped at order {cap}, deck has order {d.order}")
    t0 = time.monotonic()
    verdict = oracle_reconstruct(d, cap)
    status = (
        "unique"
        if verdict.unique
        else ("none" if not verdict.matches else "multiple")
    )
    report = {
        "schema": "1",
        "command": "reconstruct",
        "order": d.order,
        "cards": len(d.cards),
        "status": status,
        "matches": [canonical_graph6(m) for m in verdict.matches],
    }
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    print(
        f"reconstruct wall_time_s={time.monotonic() - t0:.3f}", file=sys.stderr
    )
    if status == "unique":
        return EXIT_OK
    return EXIT_MULTIPLE if status == "multiple" else EXIT_NONE


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------


def _tree_row(g6: str) -> tuple[str, int, str, str]:
    t = parse_graph6(g6)
    cert = certify_tree(t)
    return g6, t.n, cert.kind.value, _witness_summary(cert.witness)


def trees_campaign(max_order: int, jobs: int = 1) -> CampaignReport:
    t0 = time.monotonic()
    items = [
        write_graph6(t)
        for n in range(3, max_order + 1)
        for t in enumerate_trees(n)
    ]
    rows = _map_rows(_tree_row, items, jobs)
    hist: dict[str, int] = {}
    per_order: dict[str, int] = {}
    unknowns = []
    for g6, n, kind, _ in rows:
        hist[kind] = hist.get(kind, 0) + 1
        per_order[str(n)] = per_order.get(str(n), 0) + 1
        if kind == CertificateKind.UNKNOWN.value:
            unknowns.append(g6)
    return CampaignReport(
        command="trees",
        order_range=(3, max_order),
        class_counts=per_order,
        certificate_histogram=hist,
        unknowns=unknowns,
        rows=rows,
        wall_time=time.monotonic() - t0,
        header=f"free trees of order 3..{max_order}, certify_tree branch histogram",
    )


def cmd_trees(args) -> int:
    if not 3 <= args.max_order <= MAX_TREE_ORDER:
        return _fail(
            f"trees supports max order 3..{MAX_TREE_ORDER}, got {args.max_order}"
        )
    report = trees_campaign(args.max_order, args.jobs)
    if args.format == "csv":
        _emit(report.rows_csv(TREE_CSV_COLUMNS), args.out)
    else:
        _emit(report.summary_json(), args.out)
    print(f"trees wall_time_s={report.wall_time:.3f}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="anchorkit",
        description="anchor-driven reconstructibility toolkit for small graphs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one graph6 graph")
    a.add_argument("graph6", nargs="?", help="graph6 string (else --in or stdin)")
    a.add_argument("--in", dest="infile", help="read graph6 from a file")
    a.add_argument(
        "--max-oracle",
        type=int,
        default=ORACLE_ORDER_CAP,
        help="largest order the oracle runs at (default %(default)s)",
    )
    a.add_argument("--out", help="write the report here instead of stdout")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", help="exhaustive campaign for one order")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c.add_argument(
        "--allow-order-9",
        action="store_true",
        help="permit the long order-9 campaign",
    )
    c.add_argument("--out", help="write the report here instead of stdout")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("reconstruct", help="run the deck oracle on a deck file")
    r.add_argument("deck", help="deck file (see the deck module format)")
    r.add_argument("--max-oracle", type=int, default=ORACLE_ORDER_CAP)
    r.add_argument("--out", help="write the report here instead of stdout")
    r.set_defaults(func=cmd_reconstruct)

    t = sub.add_parser("trees", help="certify all free trees up to an order")
    t.add_argument("--max-order", type=int, default=10)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--jobs", type=int, default=1, help="worker processes")
    t.add_argument("--out", help="write the report here instead of stdout")
    t.set_defaults(func=cmd_trees)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
