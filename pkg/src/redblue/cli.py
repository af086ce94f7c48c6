"""Command-line front end.

Exit codes: 0 for Confirmed / ExtremalCase / Inconclusive / plain success,
2 for Refuted-at-this-n (the counterexample is embedded in the report and,
with --out, written to a graph file), 1 for usage or runtime errors.

All reports are JSON on stdout.  Identical argument vectors (including
seeds) produce byte-identical output except for the timestamp block, which
--no-timestamp suppresses (together with the elapsed-seconds field, the
other inherently non-deterministic value).
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

from .constructions import KColouredGraph, parse_construction
from .graph_core import (
    ColouredGraph,
    GraphError,
    UncolouredView,
    min_degree,
    parse,
    serialize,
)
from .harness import (
    PREDICATE_NAMES,
    SearchBudget,
    SearchMode,
    VerificationReport,
    Verdict,
    count_two_bipartite,
    minimize_mono_circumference,
    phi_certificates,
    search_colourings,
    verify_circumference,
    verify_k_colour_conjecture,
    verify_main,
)
from .matching import max_matching
from .spectrum import DEFAULT_EXACT_LIMIT, cycle_spectrum, mono_spectrum
from .structure import structure_report


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for refutations
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _complete(n: int) -> UncolouredView:
    return UncolouredView.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )

def _cycle(n: int) -> UncolouredView:
    return UncolouredView.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

def _multipartite(sizes: tuple[int, ...]) -> UncolouredView:
    bounds = []
    start = 0
    for s in sizes:
        bounds.append(range(start, start + s))
        start += s
    edges = []
    for i, a in enumerate(bounds):
        for b in bounds[i + 1 :]:
            edges += [(u, v) for u in a for v in b]
    return UncolouredView.from_edges(start, edges)


BASE_GRAPHS = {
    **{f"K{n}": (lambda n=n: _complete(n)) for n in range(4, 10)},
    "C5": lambda: _cycle(5),
    "K33": lambda: _multipartite((3, 3)),
    "K2222": lambda: _multipartite((2, 2, 2, 2)),
}


def _emit(payload: dict, args) -> None:
    if not getattr(args, "no_timestamp", False):
        payload = dict(payload)
        payload["timestamp"] = datetime.now(timezone.utc).isoformat()
    if getattr(args, "csv", False):
        keys = sorted(payload)
        print(",".join(keys))
        print(",".join(_csv_cell(payload[k]) for k in keys))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _csv_cell(value) -> str:
    text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
    if any(ch in text for ch in ",\"\n"):
        text = '"' + text.replace('"', '""') + '"'
    return text


def _report_payload(report: VerificationReport, args) -> dict:
    return report.to_json_dict(include_timing=not getattr(args, "no_timestamp", False))


def _load_coloured(args) -> tuple[ColouredGraph, str]:
    if getattr(args, "spec", None):
        spec = parse_construction(args.spec)
        g = spec.build()
        if isinstance(g, KColouredGraph):
            g = g.to_coloured_graph()
        return g, spec.canonical()
    if getattr(args, "graph", None):
        with open(args.graph, encoding="utf-8") as fh:
            return parse(fh.read()), args.graph
    raise GraphError("no input graph: pass a file or --spec")


def _load_base(args) -> tuple[UncolouredView, str]:
    if getattr(args, "base", None):
        name = args.base.upper()
        if name not in BASE_GRAPHS:
            raise GraphError(
                f"unknown base {args.base!r}; choices: {', '.join(sorted(BASE_GRAPHS))}"
            )
        return BASE_GRAPHS[name](), name
    if getattr(args, "spec", None):
        spec = parse_construction(args.spec)
        return spec.build().union_view(), spec.canonical()
    if getattr(args, "graph", None):
        with open(args.graph, encoding="utf-8") as fh:
            return parse(fh.read()).union_view(), args.graph
    raise GraphError("no base graph: pass --base, --spec or a graph file")


def _spectrum_dict(spec) -> dict:
    return {"lengths": sorted(spec.lengths), "circumference": spec.circumference}


def _verdict_exit(report: VerificationReport) -> int:
    return 2 if report.verdict is Verdict.REFUTED_AT_THIS_N else 0


def _write_counterexample(report: VerificationReport, args) -> None:
    out = getattr(args, "out", None)
    if not out or report.verdict is not Verdict.REFUTED_AT_THIS_N:
        return
    graph_text = (report.witness or {}).get("graph")
    if graph_text:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(graph_text)


def _cmd_generate(args) -> int:
    spec = parse_construction(args.spec)
    g = spec.build()
    if isinstance(g, KColouredGraph):
        if g.k != 2:
            raise GraphError("graph files hold two colours; pick a 2-colour spec")
        g = g.to_coloured_graph()
    text = serialize(g)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_spectrum(args) -> int:
    if args.base:
        base, name = _load_base(args)
        payload = {
            "instance": name,
            "n": base.n,
            "union": _spectrum_dict(cycle_spectrum(base, args.exact_limit)),
        }
    else:
        g, name = _load_coloured(args)
        spec = mono_spectrum(g, args.exact_limit)
        payload = {
            "instance": name,
            "n": g.n,
            "red": _spectrum_dict(spec.red),
            "blue": _spectrum_dict(spec.blue),
            "union": _spectrum_dict(cycle_spectrum(g.union_view(), args.exact_limit)),
            "mono_circumference": spec.mono_circumference,
        }
    _emit(payload, args)
    return 0


def _sets(parts) -> list[list[int]] | None:
    if parts is None:
        return None
    return [sorted(parts[0]), sorted(parts[1])]


def _cmd_analyze(args) -> int:
    g, name = _load_coloured(args)
    report = structure_report(
        g,
        delta=Fraction(args.delta) if args.delta else None,
        exact_limit=args.exact_limit,
    )
    payload = {
        "instance": name,
        "n": report.n,
        "min_degree": report.min_degree,
        "red_components": [sorted(c) for c in report.red_components.components],
        "blue_components": [sorted(c) for c in report.blue_components.components],
        "w_partition": {
            "w1": sorted(report.w.w1),
            "w2": sorted(report.w.w2),
            "w3": sorted(report.w.w3),
            "w4": sorted(report.w.w4),
        },
        "red_bipartition": _sets(report.red_bipartition),
        "blue_bipartition": _sets(report.blue_bipartition),
        "k4p": report.k4p,
        "two_bipartite": None
        if report.two_bipartite is None
        else [sorted(c) for c in report.two_bipartite.classes()],
        "dirac": report.dirac,
        "chvatal": report.chvatal,
        "bondy": report.bondy,
        "notes": list(report.notes),
    }
    tri = report.trichotomy
    if tri is not None:
        payload["trichotomy"] = {
            "delta": str(tri.delta),
            "case_i": None
            if tri.case_i is None
            else {
                "colour": tri.case_i.colour.value,
                "component_index": tri.case_i.component_index,
                "matched_vertices": tri.case_i.matched_vertices,
            },
            "case_ii": None
            if tri.case_ii is None
            else {
                "colour": tri.case_ii.colour.value,
                "subset": sorted(tri.case_ii.subset),
                "max_degree": tri.case_ii.max_degree,
            },
            "case_iii": None
            if tri.case_iii is None
            else {
                "u1": sorted(tri.case_iii.u1),
                "u2": sorted(tri.case_iii.u2),
                "u3": sorted(tri.case_iii.u3),
                "u4": sorted(tri.case_iii.u4),
            },
            "case_ii_error": tri.case_ii_error,
        }
    _emit(payload, args)
    return 0


def _cmd_matching(args) -> int:
    if args.base:
        view, name = _load_base(args)
    else:
        g, name = _load_coloured(args)
        view = {
            "union": g.union_view,
            "red": g.red_view,
            "blue": g.blue_view,
        }[args.view]()
    cert = max_matching(view)
    payload = {
        "instance": name,
        "view": args.view if not args.base else "union",
        "n": view.n,
        "edges": [list(e) for e in cert.edges],
        "covered": cert.covered,
        "deficiency": cert.deficiency,
        "berge_witness": sorted(cert.berge_witness),
    }
    _emit(payload, args)
    return 0


def _cmd_verify(args) -> int:
    if args.target == "k-colour":
        if not args.spec:
            raise GraphError("k-colour verification needs --spec kbip:...")
        spec = parse_construction(args.spec)
        kg = spec.build()
        if not isinstance(kg, KColouredGraph):
            kg_graph = kg
            kg = KColouredGraph(
                n=kg_graph.n, k=2, colour_rows=(kg_graph.red, kg_graph.blue)
            )
        report = verify_k_colour_conjecture(
            kg, instance=spec.canonical(), exact_limit=args.exact_limit
        )
    else:
        g, name = _load_coloured(args)
        if args.target == "main":
            report = verify_main(g, instance=name, exact_limit=args.exact_limit)
        else:
            report = verify_circumference(
                g,
                delta=Fraction(args.delta) if args.delta else Fraction(1, 180),
                instance=name,
                exact_limit=args.exact_limit,
            )
    _emit(_report_payload(report, args), args)
    _write_counterexample(report, args)
    return _verdict_exit(report)


def _cmd_search(args) -> int:
    base, name = _load_base(args)
    budget = SearchBudget(
        mode=SearchMode(args.mode),
        max_items=args.budget,
        seed=args.seed,
        workers=args.workers,
    )
    if args.minimize:
        report = minimize_mono_circumference(
            base, budget, exact_limit=args.exact_limit, instance=name
        )
    else:
        if not args.predicate:
            raise GraphError("search needs --predicate (or --minimize)")
        report = search_colourings(
            base,
            args.predicate,
            budget,
            colour_swap_reduction=not args.no_colour_swap,
            instance=name,
        )
    _emit(_report_payload(report, args), args)
    _write_counterexample(report, args)
    return _verdict_exit(report)


def _cmd_phi(args) -> int:
    certs = phi_certificates(Fraction(args.c), exact_limit=args.exact_limit)
    payload = {
        "c": str(Fraction(args.c)),
        "certificates": [
            {
                "spec": cert.spec.canonical(),
                "n": cert.n,
                "min_degree": cert.min_degree,
                "mono_circumference": cert.mono_circumference,
                "ratio": str(cert.ratio),
                "family_bound": str(cert.family_bound),
                "method": cert.method,
            }
            for cert in certs
        ],
    }
    _emit(payload, args)
    return 0


def _cmd_count(args) -> int:
    labelled, distinct = count_two_bipartite(args.p, distinct=args.distinct)
    payload = {"p": args.p, "labelled": labelled, "distinct": distinct}
    _emit(payload, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="redblue", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, graph_input=False, base_input=False, delta=False):
        p.add_argument("--no-timestamp", action="store_true",
                       help="suppress timestamp and elapsed fields")
        p.add_argument("--csv", action="store_true", help="CSV summary instead of JSON")
        p.add_argument("--json", action="store_true", help="JSON output (the default)")
        p.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT,
                       help="per-component cap for exact spectra")
        p.add_argument("--out", help="output file (graphs, counterexamples)")
        if graph_input:
            p.add_argument("graph", nargs="?", help="coloured graph file")
            p.add_argument("--spec", help="construction descriptor, e.g. f_st:s=6,t=3")
        if base_input:
            p.add_argument("--base", help=f"built-in base: {', '.join(sorted(BASE_GRAPHS))}")
        if delta:
            p.add_argument("--delta", help="rational slack, e.g. 1/180")

    p = sub.add_parser("generate", help="write a construction to a graph file")
    p.add_argument("--spec", required=True)
    common(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("spectrum", help="cycle-length spectra of a graph")
    common(p, graph_input=True, base_input=True)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("analyze", help="structural report for a coloured graph")
    common(p, graph_input=True, delta=True)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("matching", help="maximum matching certificate")
    common(p, graph_input=True, base_input=True)
    p.add_argument("--view", choices=("union", "red", "blue"), default="union")
    p.set_defaults(func=_cmd_matching)

    p = sub.add_parser("verify", help="verify one instance against a statement")
    p.add_argument("--target", choices=("main", "circumference", "k-colour"),
                   required=True)
    common(p, graph_input=True, delta=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="search the colourings of a base graph")
    common(p, graph_input=True, base_input=True)
    p.add_argument("--predicate", help=f"one of: {', '.join(PREDICATE_NAMES)}")
    p.add_argument("--minimize", action="store_true",
                   help="minimise monochromatic circumference instead")
    p.add_argument("--mode", choices=[m.value for m in SearchMode],
                   default="exhaustive")
    p.add_argument("--budget", type=int, default=1 << 28)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-colour-swap", action="store_true",
                   help="disable the colour-swap symmetry reduction")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("phi", help="circumference-fraction upper-bound certificates")
    p.add_argument("--c", required=True, help="minimum-degree fraction, e.g. 0.70")
    common(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("count", help="count the extremal four-partite colourings")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--distinct", action="store_true",
                   help="also brute-force the unlabelled count (p = 1 only)")
    common(p)
    p.set_defaults(func=_cmd_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
