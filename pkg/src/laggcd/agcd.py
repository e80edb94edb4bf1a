"""Approximate-GCD pipeline: rootfind, cluster, match, reconstruct, certify.

The GCD gets one root per matched edge, placed at the multiplicity-weighted
average of the edge's endpoints, with the edge weight as multiplicity. The
nearby polynomials keep their unmatched clusters plus leftover multiplicity
of matched ones, so degrees are preserved exactly. Everything stays in root
or node/value form; results are monic by convention.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .cluster import ClusterParams, cluster
from .errors import ZeroPolynomialError
from .lagpoly import LagrangePoly, RootList, from_roots
from .matching import MatchGraph, Matching, build_graph, exact_mwm, greedy_mwm
from .metric import root_pseudometric
from .rootfind import RootfindReport, roots as find_roots

# Relative tolerance used when deduplicating candidate sample nodes for the
# materialized GCD; kept above the near-duplicate warning threshold so the
# chosen nodes never trigger conditioning complaints downstream.
NODE_DEDUP_RTOL = 1e-7


@dataclass
class AgcdResult:
    sigma: float
    rho: str
    matcher: str
    strategy: str
    gcd_roots: RootList
    gcd_poly: LagrangePoly
    p_tilde_roots: RootList
    p_tilde_poly: LagrangePoly
    q_tilde_roots: RootList
    q_tilde_poly: LagrangePoly
    cofactor_p: RootList
    cofactor_q: RootList
    graph: MatchGraph
    matching: Matching
    dist_p: float
    dist_q: float
    cert_p: bool
    cert_q: bool
    p_report: RootfindReport
    q_report: RootfindReport
    p_clustered: RootList
    q_clustered: RootList
    warnings: List[str] = field(default_factory=list)

    @property
    def gcd_degree(self) -> int:
        return self.gcd_roots.total_multiplicity()


def assemble_gcd(m: Matching, g: MatchGraph) -> RootList:
    """One GCD root per matched edge, at the multiplicity-weighted average
    of the endpoints, carrying the edge weight as multiplicity.

    An empty matching yields an empty RootList: the degree-0 GCD, i.e. the
    inputs are coprime at this tolerance.
    """
    entries = []
    for e in m.edges:
        a, da = g.left.entries[e.left]
        b, db = g.right.entries[e.right]
        center = (da * a + db * b) / (da + db)
        entries.append((center, e.weight))
    return RootList(entries)


def reconstruct(
    clustered: RootList,
    m: Matching,
    side: str,
    gcd: RootList,
) -> RootList:
    """Nearby polynomial for one side: GCD roots plus this side's clusters,
    with matched clusters reduced by the matched weight.

    side is "left" (P) or "right" (Q), selecting which edge endpoint indexes
    into `clustered`.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    weight_at = {
        (e.left if side == "left" else e.right): e.weight for e in m.edges
    }
    entries = list(gcd.entries)
    for idx, (r, d) in enumerate(clustered):
        leftover = d - weight_at.get(idx, 0)
        if leftover > 0:
            entries.append((r, leftover))
    return RootList(entries)


def _subtract(whole: RootList, part: RootList) -> RootList:
    """Multiset difference of root lists (cofactor = tilde / gcd)."""
    counts = {}
    for r, m in whole:
        counts[r] = counts.get(r, 0) + m
    for r, m in part:
        if counts.get(r, 0) < m:
            raise ValueError("root %r does not divide with multiplicity %d" % (r, m))
        counts[r] -= m
    return RootList((r, m) for r, m in counts.items() if m > 0)


def _gcd_sample_nodes(gcd: RootList, p: LagrangePoly, q: LagrangePoly) -> np.ndarray:
    """Distinct nodes to carry the materialized GCD: the cluster centers
    plus 0, padded with Chebyshev points of the combined node hull."""
    needed = gcd.total_multiplicity() + 1
    reals = np.concatenate([p.nodes.real, q.nodes.real])
    lo, hi = float(reals.min()), float(reals.max())
    if hi - lo < 1.0:
        mid = 0.5 * (lo + hi)
        lo, hi = mid - 0.5, mid + 0.5
    tol = NODE_DEDUP_RTOL * max(1.0, hi - lo)

    chosen: List[complex] = []

    def push(z: complex) -> None:
        if all(abs(z - c) > tol for c in chosen):
            chosen.append(z)

    for r, _ in gcd:
        push(complex(r))
    push(0.0)
    k = 2 * needed + 2
    while len(chosen) < needed:
        cheb = (lo + hi) / 2 + (hi - lo) / 2 * np.cos(
            (2 * np.arange(1, k + 1) - 1) * np.pi / (2 * k)
        )
        for c in cheb:
            if len(chosen) >= needed:
                break
            push(complex(c))
        k = 2 * k + 1  # denser grid if collisions exhausted this one
    return np.array(sorted(chosen[:needed], key=lambda z: (z.real, z.imag)))


def approximate_gcd(
    p: LagrangePoly,
    q: LagrangePoly,
    params: ClusterParams,
    matcher: str = "greedy",
    rho: str = "sum",
    sigma_edge: Optional[float] = None,
    sigma_cert: Optional[float] = None,
) -> AgcdResult:
    """Run the full pipeline on a pair of sampled polynomials.

    A single sigma (params.sigma) drives clustering, edge construction and
    the distance certificate unless sigma_edge / sigma_cert override the
    latter two. A failed certificate is reported as a warning with the
    measured distances, not an error.
    """
    for poly, name in ((p, "P"), (q, "Q")):
        if np.max(np.abs(poly.values)) == 0.0:
            raise ZeroPolynomialError("%s is identically zero; GCD undefined" % name)
    if matcher not in ("greedy", "exact"):
        raise ValueError("matcher must be 'greedy' or 'exact'")

    p_report = find_roots(p)
    q_report = find_roots(q)
    p_roots = RootList((r, 1) for r in p_report.roots)
    q_roots = RootList((r, 1) for r in q_report.roots)
    p_clustered = cluster(p_roots, params)
    q_clustered = cluster(q_roots, params)

    graph = build_graph(
        p_clustered, q_clustered, params.sigma if sigma_edge is None else sigma_edge
    )
    match = exact_mwm(graph) if matcher == "exact" else greedy_mwm(graph)
    gcd = assemble_gcd(match, graph)
    p_tilde = reconstruct(p_clustered, match, "left", gcd)
    q_tilde = reconstruct(q_clustered, match, "right", gcd)

    # exact integer bookkeeping; violations would be implementation bugs
    assert gcd.total_multiplicity() == match.total_weight
    assert p_tilde.total_multiplicity() == len(p_report.roots)
    assert q_tilde.total_multiplicity() == len(q_report.roots)
    cofactor_p = _subtract(p_tilde, gcd)
    cofactor_q = _subtract(q_tilde, gcd)

    dist_p = root_pseudometric(p_report.roots, p_tilde.expand(), rho=rho)
    dist_q = root_pseudometric(q_report.roots, q_tilde.expand(), rho=rho)
    budget = params.sigma if sigma_cert is None else sigma_cert
    cert_p, cert_q = dist_p <= budget, dist_q <= budget
    warns = []
    for name, ok, d in (("P", cert_p, dist_p), ("Q", cert_q, dist_q)):
        if not ok:
            msg = (
                "distance certificate failed for %s: d=%.6g > sigma=%.6g"
                % (name, d, budget)
            )
            warns.append(msg)
            _warnings.warn(msg, UserWarning, stacklevel=2)
    for name, rep in (("P", p_report), ("Q", q_report)):
        if rep.backward_note:
            warns.append("%s rootfinding: %s" % (name, rep.backward_note))

    if gcd.total_multiplicity() == 0:
        gcd_poly = LagrangePoly([0.0], [1.0])
    else:
        gcd_poly = from_roots(gcd, _gcd_sample_nodes(gcd, p, q))
    p_tilde_poly = from_roots(p_tilde, p.nodes)
    q_tilde_poly = from_roots(q_tilde, q.nodes)

    return AgcdResult(
        sigma=params.sigma,
        rho=rho,
        matcher=matcher,
        strategy=params.strategy.value,
        gcd_roots=gcd,
        gcd_poly=gcd_poly,
        p_tilde_roots=p_tilde,
        p_tilde_poly=p_tilde_poly,
        q_tilde_roots=q_tilde,
        q_tilde_poly=q_tilde_poly,
        cofactor_p=cofactor_p,
        cofactor_q=cofactor_q,
        graph=graph,
        matching=match,
        dist_p=dist_p,
        dist_q=dist_q,
        cert_p=cert_p,
        cert_q=cert_q,
        p_report=p_report,
        q_report=q_report,
        p_clustered=p_clustered,
        q_clustered=q_clustered,
        warnings=warns,
    )
