"""Command-line front end.

Commands: invariants, zpoly, chromatic, reliability, whitney, charpoly,
homology, verify, search-figure1.  Inputs are graphs (edge-list text or
JSON) or matroids (uniform / bases / rank-table JSON); outputs are
either JSON with decimal-string integers or aligned coefficient tables
whose rows are powers of t and columns powers of the other variable.

Exit codes: 0 success, 1 identity failure (verify/search), 2 bad input,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import dichromate as dc
from . import graphs as gr
from . import homology as hm
from . import matroid as mat
from . import verify as vf
from . import whitney as wh
from .errors import AxiomViolation, DichromaError, InputError, SizeCapExceeded
from .matroid import Matroid
from .poly import BiPoly, to_json
from .search import describe_match, search_reference_graph

DEFAULT_CAPS = {"max_n": 5, "max_m": 7, "hom_max_n": 4, "hom_max_m": 6, "uniform_max": 6}


def env_caps() -> dict:
    """Caps from DICHROMA_CAPS, e.g. "max_n=4,max_m=6,hom_max_n=3"."""
    caps = dict(DEFAULT_CAPS)
    raw = os.environ.get("DICHROMA_CAPS", "")
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in caps:
            raise InputError(f"unknown cap {key!r} in DICHROMA_CAPS")
        try:
            caps[key] = int(value)
        except ValueError as exc:
            raise InputError(f"cap {key!r} needs an integer, got {value!r}") from exc
    return caps


# -- table rendering ---------------------------------------------------------


def render_table(p: BiPoly, row_var: str, col_var: str, title: str) -> str:
    """Aligned coefficient grid: rows 1, t, t^2, ...; columns 1, p, p^2, ..."""
    nrows = int(p.deg_second) + 1 if p.terms else 1
    ncols = int(p.deg_first) + 1 if p.terms else 1
    col_labels = ["1"] + [col_var if a == 1 else f"{col_var}^{a}" for a in range(1, ncols)]
    row_labels = ["1"] + [row_var if b == 1 else f"{row_var}^{b}" for b in range(1, nrows)]
    grid = [[title] + col_labels]
    for b in range(nrows):
        grid.append([row_labels[b]] + [str(p.coeff(a, b)) for a in range(ncols)])
    widths = [max(len(row[c]) for row in grid) for c in range(ncols + 1)]
    return "\n".join(
        "  ".join(cell.rjust(widths[c]) for c, cell in enumerate(row)) for row in grid
    )


def parse_table(text: str) -> BiPoly:
    """Re-parse render_table output into a polynomial (round-trip helper)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    terms = {}
    for b, line in enumerate(lines[1:]):
        cells = line.split()
        for a, cell in enumerate(cells[1:]):
            c = int(cell)
            if c:
                terms[(a, b)] = c
    return BiPoly(terms)


# -- input loading -----------------------------------------------------------


def _read_input(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith("{"):
        return arg
    try:
        with open(arg, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read input {arg!r}: {exc}") from exc


def load_graph(args) -> gr.Multigraph:
    text = _read_input(args.input)
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if obj.get("type") != "graph":
            raise InputError("JSON input is not a graph object")
        return gr.Multigraph(int(obj["vertices"]), [tuple(e) for e in obj["edges"]])
    return gr.from_text(text)


def load_matroid(args) -> tuple[Matroid, gr.Multigraph | None]:
    fmt = args.format
    text = _read_input(args.input)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON input: {exc}") from exc
        if fmt != "auto" and obj.get("type") != fmt:
            raise InputError(f"input has type {obj.get('type')!r}, expected {fmt!r}")
        if obj.get("type") == "graph":
            g = gr.Multigraph(int(obj["vertices"]), [tuple(e) for e in obj["edges"]])
            return mat.from_graph(g), g
        return mat.from_json(obj), None
    if fmt == "uniform":
        parts = text.replace(",", " ").split()
        if len(parts) != 2:
            raise InputError("uniform input needs 'r n'")
        return mat.uniform(int(parts[0]), int(parts[1])), None
    if fmt in ("graph", "auto"):
        g = gr.from_text(text)
        return mat.from_graph(g), g
    raise InputError(f"format {fmt!r} requires JSON input")


# -- commands ----------------------------------------------------------------


def cmd_invariants(args) -> int:
    M, _ = load_matroid(args)
    bundle = dc.invariant_bundle(M)
    if args.json:
        print(json.dumps(dc.bundle_to_json(bundle), indent=2))
        return 0
    print(f"elements m = {bundle.m}, rank d = {bundle.d}, loops = {bundle.loops}")
    print()
    print(render_table(bundle.tutte, "y", "x", "T"))
    print()
    if args.basis == "q":
        print(render_table(bundle.y, "t", "q", "Y"))
        print()
    print(render_table(bundle.y1mp, "t", "p", "Y(1-p,t)"))
    print()
    print(render_table(bundle.companion, "t", "p", "Yhat"))
    return 0


def cmd_zpoly(args) -> int:
    g = load_graph(args)
    z = gr.z_deletion_contraction(g)
    if args.json:
        print(json.dumps(to_json(z, row_var="t", col_var="q"), indent=2))
    else:
        print(render_table(z, "t", "q", "Z"))
    return 0


def cmd_chromatic(args) -> int:
    g = load_graph(args)
    chrom = gr.chromatic_polynomial(g)
    if args.json:
        print(json.dumps(to_json(chrom, row_var="t", col_var="q"), indent=2))
    else:
        print(chrom.to_string(("q", "t")))
    return 0


def cmd_reliability(args) -> int:
    g = load_graph(args)
    rel = gr.reliability_polynomial(g)
    if args.json:
        print(json.dumps(to_json(rel, row_var="t", col_var="q"), indent=2))
    else:
        print(rel.to_string(("q", "t")))
    return 0


def cmd_whitney(args) -> int:
    M, _ = load_matroid(args)
    table = wh.w_polynomials(M)
    if args.json:
        payload = {
            "d": table.d,
            "m": table.m,
            "loops": table.loops,
            "omega": [[str(x) for x in row] for row in table.omega_rows()],
            "w_polys": [
                [str(w.coeff(j, 0)) for j in range(int(w.deg_first) + 1 if w.terms else 1)]
                for w in table.w
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    for i, w in enumerate(table.w):
        print(f"W_{i}(p) = {w.to_string(('p', '_'))}")
    print("omega rows (height 1..):")
    for i, row in enumerate(table.omega_rows()):
        print(f"  level {i}: {row}")
    return 0


def cmd_charpoly(args) -> int:
    M, _ = load_matroid(args)
    chi = wh.characteristic_by_closed_sets(M)
    from_y = dc.characteristic_from_y(dc.y_subset_expansion(M), M.m, M.loop_count)
    if chi != from_y:
        print("FAIL characteristic polynomial routes disagree", file=sys.stderr)
        return 1
    if M.loop_count == 0 and M.d >= 1:
        if chi != wh.characteristic_by_whitney(wh.w_polynomials(M)):
            print("FAIL Whitney route disagrees", file=sys.stderr)
            return 1
    if args.json:
        print(json.dumps(to_json(chi, row_var="t", col_var="_"), indent=2))
    else:
        print(chi.to_string(("_", "t")))
    return 0


def cmd_homology(args) -> int:
    M, _ = load_matroid(args)
    report = hm.homology_report(M)
    print(json.dumps(report, indent=2))
    return 0


def cmd_verify(args) -> int:
    caps = env_caps()
    if args.max_n is not None:
        caps["max_n"] = args.max_n
    if args.max_m is not None:
        caps["max_m"] = args.max_m
    if args.input:
        M, g = load_matroid(args)
        ctx = vf.single_input_context(M, g)
    else:
        ctx = vf.build_context(
            caps["max_n"],
            caps["max_m"],
            caps["hom_max_n"],
            caps["hom_max_m"],
            caps["uniform_max"],
        )
    results = vf.run_checks(ctx)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} identities verified")
    return 1 if failed else 0


def cmd_search_figure1(args) -> int:
    matches = search_reference_graph()
    if not matches:
        print("not found: no 5-vertex, 7-edge multigraph matches the reference table")
        return 1
    for g in matches:
        info = describe_match(g)
        if args.json:
            print(json.dumps(info))
        else:
            print(f"match: edges {info['edges']}")
            print(f"  spanning trees: {info['spanning_trees']}")
            print(f"  independent-set counts by size: {info['independent_counts']}")
            print(f"  doubled edges: {info['doubled_edges']}")
    return 0


# -- argument parsing ---------------------------------------------------------


def _add_io_flags(sub, needs_input=True):
    if needs_input:
        sub.add_argument("--input", required=True, help="path, inline JSON, or - for stdin")
        sub.add_argument(
            "--format",
            default="auto",
            choices=["auto", "graph", "bases", "uniform", "rank_table"],
            help="input format (auto sniffs JSON vs edge-list text)",
        )
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="JSON output")
    mode.add_argument("--table", action="store_true", help="aligned table output (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dichroma",
        description="Exact Tutte/Potts dichromate invariants for small matroids and multigraphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("invariants", help="T, Y, Y(1-p,t) and companion tables")
    _add_io_flags(sub)
    sub.add_argument("--basis", default="q", choices=["q", "p"], help="basis for the Y table")
    sub.set_defaults(fn=cmd_invariants)

    for name, fn, help_text in [
        ("zpoly", cmd_zpoly, "partition polynomial Z(q,t) of a graph"),
        ("chromatic", cmd_chromatic, "chromatic polynomial of a graph"),
        ("reliability", cmd_reliability, "all-terminal reliability polynomial of a graph"),
    ]:
        sub = subs.add_parser(name, help=help_text)
        _add_io_flags(sub)
        sub.set_defaults(fn=fn)

    sub = subs.add_parser("whitney", help="W polynomials and Whitney numbers")
    _add_io_flags(sub)
    sub.set_defaults(fn=cmd_whitney)

    sub = subs.add_parser("charpoly", help="characteristic polynomial (all routes)")
    _add_io_flags(sub)
    sub.set_defaults(fn=cmd_charpoly)

    sub = subs.add_parser("homology", help="Whitney homology ranks with contributors")
    _add_io_flags(sub)
    sub.set_defaults(fn=cmd_homology)

    sub = subs.add_parser("verify", help="run the identity suite on the corpus or one input")
    sub.add_argument("--input", help="optional single input to verify")
    sub.add_argument(
        "--format",
        default="auto",
        choices=["auto", "graph", "bases", "uniform", "rank_table"],
    )
    sub.add_argument("--max-n", type=int, default=None, help="graph vertex cap")
    sub.add_argument("--max-m", type=int, default=None, help="graph edge cap")
    sub.set_defaults(fn=cmd_verify)

    sub = subs.add_parser(
        "search-figure1",
        help="search 5-vertex 7-edge multigraphs for the bundled reference tables",
    )
    _add_io_flags(sub, needs_input=False)
    sub.set_defaults(fn=cmd_search_figure1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SizeCapExceeded as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (InputError, AxiomViolation, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except DichromaError as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
