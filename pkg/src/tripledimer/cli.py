"""Command-line front end.

Graph arguments are either a graph file or the name of a shipped fixture
(``4node``, ``2by3``, ``bwwww``, ``wbwbwb``, ...).  Exit codes: 0 success, 1 domain
error (bad graph, infeasible coloring, failed check), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .linalg import format_rational

R = format_rational


class DomainError(Exception):
    pass


def _load_graph(arg: str):
    from . import fixtures
    from .graph import GraphFormatError, load
    p = Path(arg)
    if not p.exists():
        if arg in fixtures.GRAPHS:
            return fixtures.fixture_graph(arg)
        raise DomainError(f"cannot read graph file {arg!r} (and it is not a fixture name)")
    try:
        return load(p)
    except OSError as exc:
        raise DomainError(f"cannot read graph file {arg!r}: {exc}") from exc
    except GraphFormatError as exc:
        raise DomainError(f"malformed graph file {arg!r}: {exc}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _type_vector(text: str) -> str:
    t = text.strip().lower().replace(",", "")
    if not t or set(t) - {"w", "b"}:
        raise argparse.ArgumentTypeError(f"type vector must be a string of w and b, got {text!r}")
    return t


def _matrix_table(rows, row_labels, col_labels) -> str:
    cells = [[""] + list(col_labels)] + [[rl] + [str(x) for x in r] for rl, r in zip(row_labels, rows)]
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)


def _emit(args, data: dict, table: str) -> None:
    if args.output == "json":
        print(json.dumps(data, indent=2))
    else:
        print(table)


# -- subcommands --------------------------------------------------------------------------

def cmd_validate(args) -> int:
    from .graph import DegenerateGraphError, find_matching_M, validate
    g = _load_graph(args.graph)
    problems = validate(g)
    matching = None
    if not problems:
        try:
            _, w_star, b_star = find_matching_M(g)
            matching = {"w_star": w_star, "b_int_star": b_star}
        except DegenerateGraphError as exc:
            problems.append(f"degenerate: {exc}")
    data = {"valid": not problems, "problems": problems, "types": g.type_vector,
            "edges": len(g.edges), "vertices": len(g.types), "matching": matching}
    lines = [f"type vector {g.type_vector}, {len(g.types)} vertices, {len(g.edges)} edges"]
    lines += [f"ERROR {p}" for p in problems] or ["OK"]
    _emit(args, data, "\n".join(lines))
    return 1 if problems else 0


def cmd_xmatrix(args) -> int:
    from .kasteleyn import boundary_measurement
    kd = boundary_measurement(_load_graph(args.graph))
    rows = [[R(kd.X[i, j]) for j in range(kd.X.cols)] for i in range(kd.X.rows)]
    data = {"X": rows, "delta": R(kd.delta), "rows": kd.x_rows, "cols": kd.x_cols, "b_int_star": kd.b_int_star}
    table = _matrix_table(rows, kd.x_rows, kd.x_cols)
    table += f"\nDelta = {R(kd.delta)}\nB_int* = {' '.join(kd.b_int_star) or '(none)'}"
    _emit(args, data, table)
    return 0


def _types_from(args) -> str:
    if args.type:
        return args.type
    if args.graph:
        return _load_graph(args.graph).type_vector
    raise DomainError("give --type or a graph")


def cmd_classes(args) -> int:
    from .skein import reduction_matrix
    rm = reduction_matrix(_types_from(args))
    data = {"types": rm.types, "classes": [{"code": c, "adjacency": rm.representative(c).adjacency_listing()}
                                           for c in rm.classes]}
    parts = []
    for i, c in enumerate(rm.classes):
        parts.append(f"[{i + 1}] {c}\n" + rm.representative(c).adjacency_listing())
    _emit(args, data, "\n\n".join(parts))
    return 0


def cmd_reduction_matrix(args) -> int:
    from .skein import reduction_matrix
    rm = reduction_matrix(_types_from(args))
    labels = [t.label() for t in rm.partitions]
    data = {"types": rm.types, "classes": rm.classes, "partitions": labels, "matrix": rm.matrix}
    table = _matrix_table(rm.matrix, [str(i + 1) for i in range(len(rm.classes))], labels)
    table += "\n" + "\n".join(f"{i + 1}: {c}" for i, c in enumerate(rm.classes))
    _emit(args, data, table)
    return 0


def cmd_pairing_matrices(args) -> int:
    from .skein import pairing_matrices
    M, E, rm = pairing_matrices(_types_from(args))
    MP = [[sum(M[i][k] * rm.matrix[k][j] for k in range(len(M))) for j in range(len(E[0]))] for i in range(len(M))]
    resid = [[MP[i][j] - E[i][j] for j in range(len(E[0]))] for i in range(len(E))]
    labels = [t.label() for t in rm.partitions]
    names = [str(i + 1) for i in range(len(rm.classes))]
    data = {"types": rm.types, "classes": rm.classes, "partitions": labels, "M": M, "E": E, "residual": resid}
    table = "M\n" + _matrix_table(M, names, names) + "\n\nE\n" + _matrix_table(E, names, labels)
    table += "\n\nM P - E\n" + _matrix_table(resid, names, labels)
    _emit(args, data, table)
    return 0 if not any(any(r) for r in resid) else 1


def _dist_table(d) -> str:
    rows = [[R(d.p_values[c]), d.traces[c], R(d.probabilities[c])] for c in d.classes]
    out = _matrix_table(rows, [str(i + 1) for i in range(len(d.classes))], ["P", "Tr", "Pr"])
    out += "\n" + "\n".join(f"{i + 1}: {c}" for i, c in enumerate(d.classes))
    return out + f"\nZ(c) = {R(d.z)}  Delta = {R(d.delta)}"


def cmd_prob(args) -> int:
    from .probability import probabilities
    g = _load_graph(args.graph)
    colors = args.colors or [1] * len(g.nodes)
    d = probabilities(g, colors)
    _emit(args, d.as_json(), _dist_table(d))
    return 0


def cmd_special(args) -> int:
    from . import probability as pr
    g = _load_graph(args.graph)
    m = pr.build_model(g)
    types = g.type_vector
    if args.kind == "lgv":
        value, code = pr.lgv_parallel(g, args.start, m), pr.parallel_class(types, args.start)
    elif args.kind == "crossbar":
        if not args.bars:
            raise DomainError("crossbar needs --bars")
        value, code = pr.crossbar_p(g, args.bars, args.start, m), pr.crossbar_class(types, args.bars, args.start)
    else:
        n = args.n or max(1, len(types) // 6 if args.variant == "T" else len(types) // 3)
        value, code = pr.honeycomb_p(g, n, args.variant, m), pr.honeycomb_class(types, n, args.variant)
    general = m.p_values().get(code, Fraction(0))
    resid = value - general
    data = {"kind": args.kind, "class": code, "closed_form": R(value), "p_lambda": R(general), "residual": R(resid)}
    table = f"class {code}\nclosed form {R(value)}\nP_lambda    {R(general)}\nresidual    {R(resid)}"
    _emit(args, data, table)
    return 0 if resid == 0 else 1


def cmd_oracle_check(args) -> int:
    from .oracle import oracle_check
    g = _load_graph(args.graph)
    res = oracle_check(g, max_edges=args.max_edges)
    data = {"identities": [{"name": r.name, "pass": r.ok, "detail": r.detail} for r in res]}
    table = "\n".join(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}" for r in res)
    _emit(args, data, table)
    return 0 if all(r.ok for r in res) else 1


def cmd_sample(args) -> int:
    from .oracle import sample_reduction
    g = _load_graph(args.graph)
    colors = args.colors or [1] * len(g.nodes)
    res = sample_reduction(g, colors, args.n, args.seed, max_edges=args.max_edges)
    freq = res.frequencies()
    data = {"n": args.n, "seed": args.seed, "classes": [
        {"code": c, "count": res.counts.get(c, 0), "frequency": freq.get(c, 0.0), "prob": R(p)}
        for c, p in sorted(res.exact.items())]}
    rows = [[res.counts.get(c, 0), f"{freq.get(c, 0.0):.4f}", R(p)] for c, p in sorted(res.exact.items())]
    codes = sorted(res.exact)
    table = _matrix_table(rows, [str(i + 1) for i in range(len(codes))], ["count", "freq", "Pr"])
    table += "\n" + "\n".join(f"{i + 1}: {c}" for i, c in enumerate(codes))
    _emit(args, data, table)
    return 0


def cmd_halfplane(args) -> int:
    from . import scaling
    z = args.points
    if args.formula == "sixpoint":
        vals = scaling.six_point_probs(z)
    elif args.formula == "fourpoint":
        p = scaling.four_point_prob(*z) if len(z) == 4 else None
        if p is None:
            raise DomainError("fourpoint needs four points w1 < b1 < w2 < b2")
        vals = [p, 1 - p]
    else:
        if len(z) != 2:
            raise DomainError("entry needs two points")
        vals = [scaling.limit_entry(*z)]
    data = {"formula": args.formula, "points": z, "values": vals, "sum": sum(vals)}
    table = "\n".join(f"{i + 1}: {v:.15g}" for i, v in enumerate(vals))
    if args.formula != "entry":
        table += f"\nsum: {sum(vals):.15g}"
    _emit(args, data, table)
    return 0


def cmd_fixtures(args) -> int:
    from . import fixtures as F
    from .skein import pairing_matrices
    results = []
    for types, (_, printed) in F.PRINTED_TABLES.items():
        results.append((f"reduction matrix {types}", F.table_in_printed_order(types) == printed))
    M, E, rm = pairing_matrices("wbwbwb")
    labels = [t.label() for t in rm.partitions]
    cols = [labels.index(lab) for lab in F.E_COLUMN_LABELS]
    results.append(("pairing matrix M wbwbwb", M == F.PRINTED_M))
    results.append(("extended pairing matrix E wbwbwb", [[r[j] for j in cols] for r in E] == F.PRINTED_E))
    data = {"checks": [{"name": n, "pass": ok} for n, ok in results]}
    _emit(args, data, "\n".join(f"{'PASS' if ok else 'FAIL'} {n}" for n, ok in results))
    return 0 if all(ok for _, ok in results) else 1


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["table", "json"], default="table")
    p = argparse.ArgumentParser(prog="tripledimer", description="Connection probabilities for triple dimers.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("graph", help="graph file or fixture name")
        s.set_defaults(func=func)
        return s

    graph_cmd("validate", cmd_validate, "check a graph file")
    graph_cmd("xmatrix", cmd_xmatrix, "boundary measurement matrix X and Delta")
    for name, func, help_ in [("classes", cmd_classes, "reduced web classes"),
                              ("reduction-matrix", cmd_reduction_matrix, "reduction matrix from 3-partitions to classes"),
                              ("pairing-matrices", cmd_pairing_matrices, "web pairing matrices M, E and M P - E")]:
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("graph", nargs="?", help="graph file or fixture name (for its type vector)")
        s.add_argument("--type", type=_type_vector, help="node type vector, e.g. wbwbwb")
        s.set_defaults(func=func)
    s = graph_cmd("prob", cmd_prob, "connection probabilities for a node coloring")
    s.add_argument("--colors", type=_int_list, help="node colors in 1..3, comma separated (default all 1)")
    s = sub.add_parser("special", parents=[common], help="closed forms and their cross-check")
    s.add_argument("kind", choices=["lgv", "crossbar", "honeycomb"])
    s.add_argument("graph", help="graph file or fixture name")
    s.add_argument("--start", type=int, default=0, help="node position where the left side starts")
    s.add_argument("--bars", type=_int_list, help="crossbar counts per gap")
    s.add_argument("--n", type=int, help="honeycomb order")
    s.add_argument("--variant", choices=["T", "Tprime"], default="T")
    s.set_defaults(func=cmd_special)
    s = graph_cmd("oracle-check", cmd_oracle_check, "brute-force multiweb checks")
    s.add_argument("--max-edges", type=int, default=None, help="override the edge limit of the enumeration")
    s = graph_cmd("sample", cmd_sample, "sample reduced webs exactly")
    s.add_argument("-n", type=int, default=10000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--colors", type=_int_list)
    s.add_argument("--max-edges", type=int, default=None)
    s = sub.add_parser("halfplane", parents=[common], help="scaling-limit formulas in the upper half plane")
    s.add_argument("--points", type=_float_list, required=True)
    s.add_argument("--formula", choices=["sixpoint", "fourpoint", "entry"], default="sixpoint")
    s.set_defaults(func=cmd_halfplane)
    s = sub.add_parser("fixtures", parents=[common], help="reproduce the reference tables")
    s.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    from .graph import DegenerateGraphError, GraphFormatError
    from .oracle import OracleSizeError
    from .partitions import InfeasibleTypeError
    from .probability import HypothesisError, InfeasibleColoringError
    from .scaling import ScalingError
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleColoringError as exc:
        print(f"error: infeasible coloring: {exc}", file=sys.stderr)
    except DegenerateGraphError as exc:
        print(f"error: degenerate graph: {exc}", file=sys.stderr)
    except OracleSizeError as exc:
        print(f"error: {exc} (use --max-edges to override)", file=sys.stderr)
    except (DomainError, GraphFormatError, HypothesisError, InfeasibleTypeError, ScalingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
