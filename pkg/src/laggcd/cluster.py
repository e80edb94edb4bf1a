"""Collapse numerically split multiple roots into roots with multiplicities.

Two interchangeable strategies:

* a divide-and-conquer pass patterned on the classic closest-pair
  recursion, merging pairs within tolerance by multiplicity-weighted
  centroid, and
* a heuristic scan that looks for near-circular, near-equiangular
  clusters (the footprint a perturbed m-fold root leaves behind),
  preferring higher multiplicities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import List, Optional, Tuple

from .lagpoly import RootList

# Heuristic acceptance constants; deliberate engineering defaults, pinned
# by tests.
ANGULAR_TOLERANCE = 0.35  # rad, per-gap deviation from 2*pi/m
RADIUS_BAND = 2.0  # max/min distance-to-centroid ratio
# Below this (relative) radius a candidate counts as exactly coincident.
COINCIDENT_RTOL = 1e-13

# Full subset enumeration is used for heuristic candidates up to this many
# points; beyond it, nearest-neighbour candidate sets keep the cost down.
ENUMERATION_LIMIT = 12


class Strategy(str, Enum):
    DNC = "dnc"
    HEURISTIC = "heuristic"


@dataclass
class ClusterParams:
    sigma: float
    max_multiplicity: int = 3
    fuzz_factor: float = 1.0
    strategy: Strategy = Strategy.DNC
    fixpoint: bool = False

    def __post_init__(self):
        self.strategy = Strategy(self.strategy)
        if self.sigma < 0:
            raise ValueError("sigma must be >= 0")
        if self.max_multiplicity < 1:
            raise ValueError("max_multiplicity must be >= 1")
        if self.fuzz_factor <= 0:
            raise ValueError("fuzz_factor must be > 0")


@dataclass
class ClusterStats:
    """Instrumentation for the scaling tests: merge-step pair comparisons."""

    pair_comparisons: int = 0


Item = Tuple[complex, int]


def _sort_key(item: Item):
    return (item[0].real, item[0].imag)


def _merge_strip(points: List[Item], sigma: float, stats: Optional[ClusterStats]):
    """Repeatedly merge the closest pair within sigma, weighted-centroid style.

    Merging is pairwise and closest-first; a merged point may merge again
    in a later round, but no transitive closure beyond that is attempted.
    """
    pts = list(points)
    while len(pts) >= 2:
        best = None
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                d = abs(pts[i][0] - pts[j][0])
                if stats is not None:
                    stats.pair_comparisons += 1
                if d <= sigma and (best is None or d < best[0]):
                    best = (d, i, j)
        if best is None:
            break
        _, i, j = best
        (u, du), (v, dv) = pts[i], pts[j]
        merged = ((du * u + dv * v) / (du + dv), du + dv)
        pts = [p for k, p in enumerate(pts) if k not in (i, j)] + [merged]
        pts.sort(key=lambda t: (t[0].imag, t[0].real))
    return pts


def _dnc(q: List[Item], lo: int, hi: int, sigma: float, stats) -> List[Item]:
    if hi - lo == 1:
        return [q[lo]]
    # split index per the 1-based floor((l+r)/2) convention
    mid = (lo + 1 + hi) // 2
    left = _dnc(q, lo, mid, sigma, stats)
    right = _dnc(q, mid, hi, sigma, stats)
    mid_x = q[mid - 1][0].real
    merged = sorted(left + right, key=lambda t: (t[0].imag, t[0].real))
    strip = [t for t in merged if abs(t[0].real - mid_x) <= sigma]
    rest = [t for t in merged if abs(t[0].real - mid_x) > sigma]
    return rest + _merge_strip(strip, sigma, stats)


def cluster_dnc(
    roots: RootList,
    sigma: float,
    fixpoint: bool = False,
    stats: Optional[ClusterStats] = None,
) -> RootList:
    """Divide-and-conquer clustering at tolerance sigma.

    With fixpoint=True the pass is re-run until the output stabilizes;
    the default single pass reproduces the reference behaviour in which
    a chain like [1, 1.5, 2] at sigma 0.5 collapses only partially.
    """
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    items = [(complex(r), int(m)) for r, m in roots]
    if not items:
        return RootList()
    while True:
        out = sorted(_dnc(items, 0, len(items), sigma, stats), key=_sort_key)
        if not fixpoint or out == items:
            return RootList(out)
        items = out


def _knn_candidates(points, active, m):
    cands = set()
    for i in active:
        others = sorted(
            (j for j in active if j != i),
            key=lambda j: (abs(points[j] - points[i]), j),
        )
        cand = tuple(sorted([i] + others[: m - 1]))
        if len(cand) == m:
            cands.add(cand)
    return sorted(cands)


def _score_candidate(points, cand, m, radius_cap):
    """Return an orderable score tuple if the candidate passes, else None."""
    pts = [points[i] for i in cand]
    centroid = sum(pts) / m
    dists = [abs(p - centroid) for p in pts]
    rmax = max(dists)
    scale = max(1.0, abs(centroid))
    if rmax <= COINCIDENT_RTOL * scale:
        return (0.0, 1.0, 0.0, cand)  # exactly coincident points
    if rmax > radius_cap:
        return None
    rmin = min(dists)
    if rmin <= COINCIDENT_RTOL * scale or rmax / rmin > RADIUS_BAND:
        return None
    angles = sorted(math.atan2((p - centroid).imag, (p - centroid).real) for p in pts)
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(2 * math.pi - (angles[-1] - angles[0]))
    target = 2 * math.pi / m
    gap_dev = max(abs(g - target) for g in gaps)
    if m > 2 and gap_dev > ANGULAR_TOLERANCE:
        return None
    if m == 2:
        gap_dev = 0.0  # two points are always diametrically opposite
    return (gap_dev, rmax / rmin, rmax, cand)


def cluster_heuristic(roots: RootList, params: ClusterParams) -> RootList:
    """Distance/symmetry clustering with a bias toward higher multiplicity.

    Input multiplicities are expanded into coincident points, so a root
    carrying multiplicity d behaves like d coincident simple roots.
    Candidate clusters of size m are scanned from max_multiplicity down to
    2; the most symmetric passing candidates win.
    """
    points = sorted(
        (complex(r) for r, mult in roots for _ in range(mult)),
        key=lambda z: (z.real, z.imag),
    )
    active = set(range(len(points)))
    accepted: List[Item] = []
    for m in range(params.max_multiplicity, 1, -1):
        if len(active) < m:
            continue
        act = sorted(active)
        if len(act) <= ENUMERATION_LIMIT:
            cands = list(combinations(act, m))
        else:
            cands = _knn_candidates(points, act, m)
        radius_cap = (
            params.fuzz_factor * params.sigma ** (1.0 / m)
            if params.sigma > 0
            else 0.0
        )
        scored = []
        for cand in cands:
            score = _score_candidate(points, cand, m, radius_cap)
            if score is not None:
                scored.append(score)
        scored.sort(key=lambda s: (s[0], s[1], s[2], s[3]))
        for _, _, _, cand in scored:
            if not all(i in active for i in cand):
                continue
            centroid = sum(points[i] for i in cand) / m
            accepted.append((centroid, m))
            active.difference_update(cand)
    accepted.extend((points[i], 1) for i in sorted(active))
    return RootList(accepted)


def cluster(roots: RootList, params: ClusterParams, stats=None) -> RootList:
    """Dispatch on params.strategy."""
    if params.strategy is Strategy.DNC:
        return cluster_dnc(roots, params.sigma, fixpoint=params.fixpoint, stats=stats)
    return cluster_heuristic(roots, params)
