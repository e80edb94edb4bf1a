"""Polynomials represented by their values at distinct nodes.

All arithmetic is complex double precision; real inputs are promoted on
construction. Nothing in this module (or the rest of the package) ever
converts to monomial coefficients.
"""

from __future__ import annotations

import warnings
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np

from .errors import (
    DuplicateNodesError,
    InsufficientNodesError,
    NearDuplicateNodesWarning,
)

# Relative (to node spread) gap thresholds for rejecting/warning about
# nearly coincident nodes.
DUPLICATE_GAP_RTOL = 1e-12
NEAR_DUPLICATE_GAP_RTOL = 1e-8


def _check_nodes(nodes: np.ndarray) -> None:
    n = len(nodes)
    if n < 2:
        return
    diff = np.abs(nodes[:, None] - nodes[None, :])
    iu = np.triu_indices(n, k=1)
    gaps = diff[iu]
    spread = gaps.max()
    if spread == 0.0 or gaps.min() <= DUPLICATE_GAP_RTOL * spread:
        raise DuplicateNodesError(
            "nodes must be pairwise distinct (smallest gap %.3e, spread %.3e)"
            % (gaps.min(), spread)
        )
    if gaps.min() < NEAR_DUPLICATE_GAP_RTOL * spread:
        warnings.warn(
            "nearly coincident nodes (gap %.3e vs spread %.3e); "
            "expect poor conditioning" % (gaps.min(), spread),
            NearDuplicateNodesWarning,
            stacklevel=3,
        )


def barycentric_weights(nodes) -> np.ndarray:
    """Normalization factors w_k = 1 / prod_{j != k} (x_k - x_j).

    A single node yields [1]. Raises DuplicateNodesError on coincident
    nodes; warns on dangerously small gaps.
    """
    x = np.asarray(nodes, dtype=complex)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError("nodes must be a non-empty 1-d sequence")
    _check_nodes(x)
    if len(x) == 1:
        return np.ones(1, dtype=complex)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    return 1.0 / diff.prod(axis=1)


class LagrangePoly:
    """A polynomial given by samples (nodes[k], values[k]) at distinct nodes.

    The nominal degree is len(nodes) - 1. Instances are immutable; the
    barycentric weights are computed lazily and cached.
    """

    def __init__(self, nodes, values):
        nodes = np.array(nodes, dtype=complex)
        values = np.array(values, dtype=complex)
        if nodes.ndim != 1 or values.ndim != 1:
            raise ValueError("nodes and values must be 1-d sequences")
        if len(nodes) != len(values) or len(nodes) == 0:
            raise ValueError("need len(nodes) == len(values) >= 1")
        _check_nodes(nodes)
        nodes.flags.writeable = False
        values.flags.writeable = False
        self.nodes = nodes
        self.values = values

    @property
    def degree(self) -> int:
        return len(self.nodes) - 1

    @cached_property
    def weights(self) -> np.ndarray:
        x = self.nodes
        if len(x) == 1:
            return np.ones(1, dtype=complex)
        diff = x[:, None] - x[None, :]
        np.fill_diagonal(diff, 1.0)
        w = 1.0 / diff.prod(axis=1)
        w.flags.writeable = False
        return w

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self) -> str:
        return "LagrangePoly(degree=%d, nodes=%s)" % (self.degree, self.nodes)


def evaluate(p: LagrangePoly, z):
    """Evaluate the interpolant at z (scalar or array).

    Uses the second barycentric form; if z coincides exactly with a node
    the stored value is returned unchanged (no tolerance involved).
    """
    zarr = np.asarray(z, dtype=complex)
    scalar = zarr.ndim == 0
    zz = np.atleast_1d(zarr)
    diff = zz[:, None] - p.nodes[None, :]
    out = np.empty(len(zz), dtype=complex)
    hit_rows, hit_cols = np.nonzero(diff == 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = p.weights[None, :] / diff
        num = (ratio * p.values[None, :]).sum(axis=1)
        den = ratio.sum(axis=1)
        out[:] = num / den
    out[hit_rows] = p.values[hit_cols]
    return out[0] if scalar else out


class RootList:
    """A multiset of complex roots with positive integer multiplicities.

    Entries are kept sorted by (real part, imaginary part) so that all
    downstream output is deterministic.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Tuple[complex, int]] = ()):
        norm = []
        for root, mult in entries:
            mult = int(mult)
            if mult < 1:
                raise ValueError("multiplicities must be >= 1, got %d" % mult)
            norm.append((complex(root), mult))
        norm.sort(key=lambda e: (e[0].real, e[0].imag))
        self.entries: Tuple[Tuple[complex, int], ...] = tuple(norm)

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def expand(self) -> np.ndarray:
        """Roots repeated according to multiplicity, as a complex array."""
        if not self.entries:
            return np.empty(0, dtype=complex)
        return np.array(
            [r for r, m in self.entries for _ in range(m)], dtype=complex
        )

    def __iter__(self) -> Iterator[Tuple[complex, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, RootList) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "RootList(%r)" % (list(self.entries),)


def from_roots(
    roots: RootList,
    nodes: Sequence,
    leading_coeff: complex = 1.0,
) -> LagrangePoly:
    """Sample leading_coeff * prod (x - r)^mult at the given nodes.

    The node list must have at least total_multiplicity + 1 entries so the
    product is represented exactly. Per node, factors are multiplied in
    order of increasing modulus to limit cancellation.
    """
    x = np.asarray(nodes, dtype=complex)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError("nodes must be a non-empty 1-d sequence")
    deg = roots.total_multiplicity()
    if len(x) < deg + 1:
        raise InsufficientNodesError(
            "need at least %d nodes for degree %d, got %d" % (deg + 1, deg, len(x))
        )
    expanded = roots.expand()
    values = np.empty(len(x), dtype=complex)
    for k, xk in enumerate(x):
        factors = xk - expanded
        order = np.argsort(np.abs(factors), kind="stable")
        v = complex(leading_coeff)
        for f in factors[order]:
            v *= f
        values[k] = v
    return LagrangePoly(x, values)
