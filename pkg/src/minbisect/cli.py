"""Command-line front end.

External ids are 1-based (DIMACS convention); everything internal is
0-based.  Results are printed as JSON documents with sorted keys so that
identical runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from .bisect import (
    SolveOptions,
    solve_bisection,
    solve_sized_cut,
    solve_weighted_bisection,
)
from .decompose import Constants, TreeDecomposition, build_decomposition, validate_decomposition
from .dimacs import parse_graph
from .graph import Graph, GraphError
from .hp import BLACK, WHITE, HPInstance, solve_hp
from . import oracle as oracle_mod

SEED_ENV = "MINBISECT_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{SEED_ENV} must be an integer, got {raw!r}")


def _read_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def _emit(doc, out_path: str | None):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _partition_doc(result) -> dict:
    doc = {"feasible": result.feasible}
    if result.feasible:
        doc["cut_size"] = result.cut_size
        if result.cut_weight is not None:
            doc["cut_weight"] = str(result.cut_weight)
        a, b = result.partition
        doc["partition"] = [sorted(v + 1 for v in a), sorted(v + 1 for v in b)]
    return doc


def _parse_scale(raw: str | None) -> tuple[int | None, int | None]:
    if raw is None:
        return None, None
    try:
        eta_s, tp_s = raw.split(",")
        return int(eta_s), int(tp_s)
    except ValueError:
        raise GraphError("--scale expects ETA,TAUPRIME")


def _parse_id_list(raw: str) -> frozenset:
    try:
        return frozenset(int(tok) - 1 for tok in raw.replace(",", " ").split())
    except ValueError:
        raise GraphError(f"bad vertex list {raw!r}")


def _options(args) -> SolveOptions:
    seed = args.seed if args.seed is not None else _default_seed()
    eta, tau_prime = _parse_scale(getattr(args, "scale", None))
    return SolveOptions(
        seed=seed,
        deterministic=not getattr(args, "randomized", False),
        no_sparsify=getattr(args, "no_sparsify", False),
        eta=eta,
        tau_prime=tau_prime,
    )


def _cmd_bisect(args) -> int:
    g = _read_graph(args.file)
    opts = _options(args)
    if args.weighted:
        result = solve_weighted_bisection(g, args.k, opts)
    else:
        result = solve_bisection(g, args.k, opts)
    _emit(_partition_doc(result), args.out)
    if args.report:
        from .report import write_bisection_report

        write_bisection_report(args.report, g, args.k, result, weighted=args.weighted)
    return 0


def _cmd_sized_cut(args) -> int:
    g = _read_graph(args.file)
    result = solve_sized_cut(g, args.k, args.target, _options(args))
    _emit(_partition_doc(result), args.out)
    if args.report:
        from .report import write_bisection_report

        write_bisection_report(args.report, g, args.k, result)
    return 0


def _cmd_decompose(args) -> int:
    g = _read_graph(args.file)
    eta, tau_prime = _parse_scale(args.scale)
    c = Constants.for_k(args.k, eta=eta, tau_prime=tau_prime)
    td = build_decomposition(g, args.k, c)
    doc = td.to_document()
    for node in doc["nodes"]:
        node["bag"] = [v + 1 for v in node["bag"]]
    _emit(doc, args.out)
    if args.report:
        from .report import write_decomposition_report

        write_decomposition_report(args.report, g, td)
    return 0


def _cmd_validate(args) -> int:
    g = _read_graph(args.graph)
    with open(args.decomposition) as fh:
        doc = json.load(fh)
    for node in doc["nodes"]:
        node["bag"] = [int(v) - 1 for v in node["bag"]]
    td = TreeDecomposition.from_document(doc)
    eta, tau_prime = _parse_scale(args.scale)
    c = Constants.for_k(args.k, eta=eta, tau_prime=tau_prime)
    report = validate_decomposition(g, td, c, check_unbreakability=args.check_unbreakability)
    _emit(
        {
            "ok": report.ok,
            "checks": [
                {"check": e.check, "node": e.node, "ok": e.ok, "detail": e.detail}
                for e in report.entries
            ],
        },
        args.out,
    )
    return 0 if report.ok else 1


def _cmd_important_seps(args) -> int:
    from .separators import enumerate_important_separators

    g = _read_graph(args.file)
    x = _parse_id_list(args.source)
    s = _parse_id_list(args.target)
    for sep in enumerate_important_separators(g, x, s, args.k):
        sys.stdout.write(" ".join(str(v + 1) for v in sorted(sep.vertices)) + "\n")
    return 0


def _instance_from_doc(doc: dict) -> HPInstance:
    hyperedges = []
    costs = []
    for he in doc["hyperedges"]:
        verts = frozenset(int(v) for v in he["vertices"])
        hyperedges.append(verts)
        cost = {}
        for entry in he["costs"]:
            white = frozenset(int(v) for v in entry["white"])
            cost[(white, int(entry["mu"]))] = int(entry["value"])
        costs.append(cost)
    col0 = {int(v): colour for v, colour in doc.get("col0", {}).items()}
    for colour in col0.values():
        if colour not in (BLACK, WHITE):
            raise GraphError(f"bad colour {colour!r} in col0")
    return HPInstance(
        k=int(doc["k"]), b=int(doc["b"]), d=int(doc["d"]), q=int(doc["q"]),
        vertices=tuple(int(v) for v in doc["vertices"]),
        hyperedges=hyperedges, col0=col0, costs=costs,
    )


def instance_to_doc(instance: HPInstance) -> dict:
    """Debug serialization consumed by the solve-hp subcommand."""
    return {
        "k": instance.k, "b": instance.b, "d": instance.d, "q": instance.q,
        "vertices": list(instance.vertices),
        "col0": {str(v): colour for v, colour in sorted(instance.col0.items())},
        "hyperedges": [
            {
                "vertices": sorted(he),
                "costs": [
                    {"white": sorted(white), "mu": mu, "value": val}
                    for (white, mu), val in sorted(
                        cost.items(), key=lambda it: (sorted(it[0][0]), it[0][1])
                    )
                ],
            }
            for he, cost in zip(instance.hyperedges, instance.costs)
        ],
    }


def _cmd_solve_hp(args) -> int:
    with open(args.file) as fh:
        doc = json.load(fh)
    instance = _instance_from_doc(doc)
    seed = args.seed if args.seed is not None else _default_seed()
    w = solve_hp(instance, seed=seed, deterministic=args.deterministic)
    _emit({"w": [None if v == float("inf") else v for v in w]}, args.out)
    return 0


def _cmd_oracle(args) -> int:
    if args.oracle_command == "bisect":
        g = _read_graph(args.file)
        feasible, cut, weight, partition = oracle_mod.brute_bisection(
            g, args.k, args.target, weighted=args.weighted
        )
        doc = {"feasible": feasible}
        if feasible:
            doc["cut_size"] = cut
            if args.weighted:
                doc["cut_weight"] = str(weight)
            doc["partition"] = [sorted(v + 1 for v in partition[0]),
                                sorted(v + 1 for v in partition[1])]
        _emit(doc, args.out)
    elif args.oracle_command == "hp":
        with open(args.file) as fh:
            doc = json.load(fh)
        instance = _instance_from_doc(doc)
        w = oracle_mod.brute_hp(instance)
        _emit({"w": [None if v == float("inf") else v for v in w]}, args.out)
    elif args.oracle_command == "impsep":
        g = _read_graph(args.file)
        for sep in oracle_mod.brute_important_separators(
            g, _parse_id_list(args.source), _parse_id_list(args.target), args.k
        ):
            sys.stdout.write(" ".join(str(v + 1) for v in sorted(sep)) + "\n")
    elif args.oracle_command == "unbreak":
        g = _read_graph(args.file)
        witness = oracle_mod.brute_unbreakability(
            g, _parse_id_list(args.set), args.q, args.k
        )
        if witness is None:
            _emit({"unbreakable": True}, args.out)
        else:
            x, y = witness
            _emit({"unbreakable": False,
                   "x": sorted(v + 1 for v in x),
                   "y": sorted(v + 1 for v in y)}, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minbisect",
        description="Exact minimum bisection via unbreakable tree decompositions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, target=False):
        p.add_argument("--k", type=int, required=True)
        if target:
            p.add_argument("--target", type=int, required=True)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--randomized", action="store_true",
                       help="use the sampled branch families instead of exhaustive ones")
        p.add_argument("--no-sparsify", action="store_true")
        p.add_argument("--out", default=None)
        p.add_argument("--report", default=None, metavar="DIR",
                       help="write summary.csv and figures to DIR")
        p.add_argument("file")

    p_bisect = sub.add_parser("bisect", help="minimum bisection")
    add_common(p_bisect)
    p_bisect.add_argument("--weighted", action="store_true")
    p_bisect.set_defaults(func=_cmd_bisect)

    p_sized = sub.add_parser("sized-cut", help="minimum cut at a fixed side size")
    add_common(p_sized, target=True)
    p_sized.set_defaults(func=_cmd_sized_cut)

    p_dec = sub.add_parser("decompose", help="build the tree decomposition")
    p_dec.add_argument("--k", type=int, required=True)
    p_dec.add_argument("--scale", default=None, metavar="ETA,TAUPRIME",
                       help="override constants (structural testing only)")
    p_dec.add_argument("--out", "-o", default=None)
    p_dec.add_argument("--report", default=None, metavar="DIR")
    p_dec.add_argument("file")
    p_dec.set_defaults(func=_cmd_decompose)

    p_val = sub.add_parser("validate-decomposition", help="check a decomposition document")
    p_val.add_argument("--k", type=int, required=True)
    p_val.add_argument("--scale", default=None, metavar="ETA,TAUPRIME")
    p_val.add_argument("--check-unbreakability", action="store_true")
    p_val.add_argument("--out", default=None)
    p_val.add_argument("graph")
    p_val.add_argument("decomposition")
    p_val.set_defaults(func=_cmd_validate)

    p_imp = sub.add_parser("important-seps", help="enumerate important separators")
    p_imp.add_argument("--k", type=int, required=True)
    p_imp.add_argument("--source", required=True)
    p_imp.add_argument("--target", required=True)
    p_imp.add_argument("file")
    p_imp.set_defaults(func=_cmd_important_seps)

    p_hp = sub.add_parser("solve-hp", help="solve a serialized painting instance")
    p_hp.add_argument("--seed", type=int, default=None)
    p_hp.add_argument("--deterministic", action="store_true")
    p_hp.add_argument("--out", default=None)
    p_hp.add_argument("file")
    p_hp.set_defaults(func=_cmd_solve_hp)

    p_or = sub.add_parser("oracle", help="brute-force cross checks")
    or_sub = p_or.add_subparsers(dest="oracle_command", required=True)
    o_bisect = or_sub.add_parser("bisect")
    o_bisect.add_argument("--k", type=int, required=True)
    o_bisect.add_argument("--target", type=int, required=True)
    o_bisect.add_argument("--weighted", action="store_true")
    o_bisect.add_argument("--out", default=None)
    o_bisect.add_argument("file")
    o_hp = or_sub.add_parser("hp")
    o_hp.add_argument("--out", default=None)
    o_hp.add_argument("file")
    o_imp = or_sub.add_parser("impsep")
    o_imp.add_argument("--k", type=int, required=True)
    o_imp.add_argument("--source", required=True)
    o_imp.add_argument("--target", required=True)
    o_imp.add_argument("--out", default=None)
    o_imp.add_argument("file")
    o_unb = or_sub.add_parser("unbreak")
    o_unb.add_argument("--q", type=int, required=True)
    o_unb.add_argument("--k", type=int, required=True)
    o_unb.add_argument("--set", required=True)
    o_unb.add_argument("--out", default=None)
    o_unb.add_argument("file")
    p_or.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
