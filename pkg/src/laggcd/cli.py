"""Command-line front end.

Subcommands:
    roots    print the roots (with residuals) of one side of a problem file
    agcd     run the full approximate-GCD pipeline, emit JSON
    cluster  cluster a points file, emit plot-ready CSV

Exit codes: 0 success (including certificate warnings), 2 input/parse
errors, 3 numerical failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from .agcd import AgcdResult, approximate_gcd
from .cluster import ClusterParams, Strategy, cluster as run_cluster
from .errors import (
    DegenerateInputError,
    DuplicateNodesError,
    EigensolveFailureError,
    InsufficientNodesError,
    LagGcdError,
    ProblemFileError,
)
from .lagpoly import LagrangePoly, RootList
from .problemfile import ProblemFile, load_points, load_problem
from .rootfind import roots as find_roots

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _num(x: float) -> float:
    # round-trip through 17 significant digits for a stable serialization
    return float("%.17g" % x)


def _cnum(z: complex):
    return [_num(z.real), _num(z.imag)]


def _rootlist_json(rl: RootList):
    return [[_cnum(r), m] for r, m in rl]


def _poly_json(p: LagrangePoly):
    return {
        "nodes": [_cnum(z) for z in p.nodes],
        "values": [_cnum(z) for z in p.values],
    }


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _problem_params(pf: ProblemFile, args) -> ClusterParams:
    sigma = args.sigma if args.sigma is not None else pf.sigma
    sigma_cluster = (
        args.sigma_cluster
        if args.sigma_cluster is not None
        else (pf.sigma_cluster if pf.sigma_cluster is not None else sigma)
    )
    strategy = args.strategy or pf.strategy or Strategy.DNC
    max_mult = args.max_mult or pf.max_multiplicity or 3
    return ClusterParams(
        sigma=sigma_cluster,
        max_multiplicity=max_mult,
        strategy=strategy,
        fixpoint=args.fixpoint,
    )


def cmd_roots(args) -> int:
    pf = load_problem(args.file)
    if args.side == "P":
        poly = LagrangePoly(pf.px, pf.py)
    else:
        poly = LagrangePoly(pf.qx, pf.qy)
    report = find_roots(poly)
    payload = {
        "side": args.side,
        "roots": [
            {"root": _cnum(r), "residual": _num(float(res))}
            for r, res in zip(report.roots, report.residuals)
        ],
        "discarded": report.discarded_count,
        "note": report.backward_note,
    }
    _emit(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


def _agcd_json(result: AgcdResult) -> dict:
    return {
        "sigma": _num(result.sigma),
        "rho": result.rho,
        "matcher": result.matcher,
        "strategy": result.strategy,
        "gcd": {
            "degree": result.gcd_degree,
            "roots": _rootlist_json(result.gcd_roots),
            **_poly_json(result.gcd_poly),
        },
        "p_tilde": {
            "roots": _rootlist_json(result.p_tilde_roots),
            **_poly_json(result.p_tilde_poly),
        },
        "q_tilde": {
            "roots": _rootlist_json(result.q_tilde_roots),
            **_poly_json(result.q_tilde_poly),
        },
        "cofactor_p": _rootlist_json(result.cofactor_p),
        "cofactor_q": _rootlist_json(result.cofactor_q),
        "matching": {
            "total_weight": result.matching.total_weight,
            "edges": [
                {
                    "left": _cnum(result.graph.left.entries[e.left][0]),
                    "right": _cnum(result.graph.right.entries[e.right][0]),
                    "weight": e.weight,
                    "distance": _num(e.distance),
                }
                for e in result.matching.edges
            ],
        },
        "p_roots": [_cnum(r) for r in result.p_report.roots],
        "q_roots": [_cnum(r) for r in result.q_report.roots],
        "p_clustered": _rootlist_json(result.p_clustered),
        "q_clustered": _rootlist_json(result.q_clustered),
        "dist_p": _num(result.dist_p),
        "dist_q": _num(result.dist_q),
        "cert_p": result.cert_p,
        "cert_q": result.cert_q,
        "warnings": list(result.warnings),
    }


def _graph_csv(result: AgcdResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["left_root", "right_root", "weight", "distance"])
    for e in result.graph.edges:
        left = result.graph.left.entries[e.left][0]
        right = result.graph.right.entries[e.right][0]
        writer.writerow(
            [repr_complex(left), repr_complex(right), e.weight, "%.17g" % e.distance]
        )
    return buf.getvalue()


def repr_complex(z: complex) -> str:
    if z.imag == 0:
        return "%.17g" % z.real
    return "%.17g%+.17gj" % (z.real, z.imag)


def cmd_agcd(args) -> int:
    pf = load_problem(args.file)
    params = _problem_params(pf, args)
    sigma = args.sigma if args.sigma is not None else pf.sigma
    sigma_edge = (
        args.sigma_edge if args.sigma_edge is not None else pf.sigma_edge
    )
    if sigma_edge is None:
        sigma_edge = sigma
    sigma_cert = (
        args.sigma_cert if args.sigma_cert is not None else pf.sigma_cert
    )
    if sigma_cert is None:
        sigma_cert = sigma
    rho = args.rho or pf.rho or "sum"
    import warnings as _w

    with _w.catch_warnings():
        _w.simplefilter("ignore", UserWarning)  # surfaced via the JSON payload
        result = approximate_gcd(
            LagrangePoly(pf.px, pf.py),
            LagrangePoly(pf.qx, pf.qy),
            params,
            matcher=args.matcher,
            rho=rho,
            sigma_edge=sigma_edge,
            sigma_cert=sigma_cert,
        )
    if args.graph_csv:
        with open(args.graph_csv, "w") as fh:
            fh.write(_graph_csv(result))
    _emit(json.dumps(_agcd_json(result), indent=2), args.output)
    return EXIT_OK


def cmd_cluster(args) -> int:
    points = load_points(args.file)
    params = ClusterParams(
        sigma=args.sigma,
        max_multiplicity=args.max_mult or 3,
        fuzz_factor=args.fuzz,
        strategy=args.strategy or Strategy.DNC,
        fixpoint=args.fixpoint,
    )
    clustered = run_cluster(points, params)
    inputs = list(points.entries)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["re", "im", "multiplicity", "cluster_id", "was_merged"])
    for idx, (r, m) in enumerate(clustered):
        untouched = (r, m) in inputs
        if untouched:
            inputs.remove((r, m))
        writer.writerow(
            [
                "%.17g" % r.real,
                "%.17g" % r.imag,
                m,
                idx,
                "false" if untouched else "true",
            ]
        )
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laggcd",
        description="Approximate polynomial GCD for node/value (Lagrange) data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="roots of one side of a problem file")
    p_roots.add_argument("file")
    p_roots.add_argument("--side", choices=["P", "Q"], default="P")
    p_roots.add_argument("-o", "--output")
    p_roots.set_defaults(func=cmd_roots)

    p_agcd = sub.add_parser("agcd", help="full approximate-GCD pipeline")
    p_agcd.add_argument("file")
    p_agcd.add_argument("--sigma", type=float)
    p_agcd.add_argument("--sigma-cluster", type=float)
    p_agcd.add_argument("--sigma-edge", type=float)
    p_agcd.add_argument("--sigma-cert", type=float)
    p_agcd.add_argument("--strategy", choices=["dnc", "heuristic"])
    p_agcd.add_argument("--max-mult", type=int)
    p_agcd.add_argument("--rho", choices=["sum", "max"])
    p_agcd.add_argument("--matcher", choices=["greedy", "exact"], default="greedy")
    p_agcd.add_argument("--fixpoint", action="store_true")
    p_agcd.add_argument("--graph-csv", metavar="PATH")
    p_agcd.add_argument("-o", "--output")
    p_agcd.set_defaults(func=cmd_agcd)

    p_cluster = sub.add_parser("cluster", help="cluster a points file to CSV")
    p_cluster.add_argument("file")
    p_cluster.add_argument("--sigma", type=float, required=True)
    p_cluster.add_argument("--strategy", choices=["dnc", "heuristic"])
    p_cluster.add_argument("--max-mult", type=int)
    p_cluster.add_argument("--fuzz", type=float, default=1.0)
    p_cluster.add_argument("--fixpoint", action="store_true")
    p_cluster.add_argument("-o", "--output")
    p_cluster.set_defaults(func=cmd_cluster)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProblemFileError, DuplicateNodesError, InsufficientNodesError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except (EigensolveFailureError, DegenerateInputError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_NUMERIC
    except LagGcdError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
