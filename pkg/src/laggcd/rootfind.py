"""Companion-pencil rootfinding for polynomials in node/value form.

The degree-n polynomial sampled at n+1 nodes is embedded in an
(n+2) x (n+2) pencil (C0, C1) whose finite generalized eigenvalues are the
polynomial's roots; det(z*C1 - C0) equals the interpolant at z. The pencil
carries two eigenvalues at infinity which are filtered after the solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .errors import DegenerateInputError, EigensolveFailureError
from .lagpoly import LagrangePoly, evaluate

# |beta| below this (relative to the largest |beta|) marks an eigenvalue
# at infinity in the homogeneous (alpha, beta) representation.
SPURIOUS_BETA_RTOL = 1e-10
# Eigenvalues this many node-spreads away from the node centroid are
# artifacts of sampled data whose actual degree is below nominal.
FAR_ROOT_FACTOR = 1e6


@dataclass
class CompanionPencil:
    """Dense pencil (c0, c1) for a polynomial of nominal degree source_degree."""

    c0: np.ndarray
    c1: np.ndarray
    source_degree: int

    @property
    def dim(self) -> int:
        return self.c0.shape[0]


@dataclass
class RootfindReport:
    roots: np.ndarray
    discarded_count: int
    residuals: np.ndarray
    backward_note: Optional[str] = None


def build_pencil(p: LagrangePoly) -> CompanionPencil:
    """Arrowhead pencil: c0 holds -values in row 0, weights in column 0 and
    the nodes on the trailing diagonal; c1 is the identity with (0,0) zeroed."""
    n = p.degree
    if n < 1:
        raise ValueError("pencil requires nominal degree >= 1")
    dim = n + 2
    c0 = np.zeros((dim, dim), dtype=complex)
    c0[0, 1:] = -p.values
    c0[1:, 0] = p.weights
    idx = np.arange(1, dim)
    c0[idx, idx] = p.nodes
    c1 = np.eye(dim, dtype=complex)
    c1[0, 0] = 0.0
    return CompanionPencil(c0=c0, c1=c1, source_degree=n)


def pencil_determinant(pencil: CompanionPencil, z: complex) -> complex:
    """det(z*C1 - C0) by LU; equals the sampled polynomial at z."""
    return complex(np.linalg.det(z * pencil.c1 - pencil.c0))


def roots(p: LagrangePoly) -> RootfindReport:
    """All finite roots of the sampled polynomial, with residuals.

    Returns exactly n roots for full-degree data. If the data's actual
    degree is lower, far-field eigenvalues are discarded as well and a
    diagnostic note is attached rather than padding the list.
    """
    if p.degree < 1:
        raise ValueError("rootfinding requires nominal degree >= 1")
    if np.max(np.abs(p.values)) == 0.0:
        raise DegenerateInputError(
            "all sampled values are zero; the polynomial is identically zero"
        )
    pencil = build_pencil(p)
    try:
        w = scipy.linalg.eig(
            pencil.c0, pencil.c1, right=False, homogeneous_eigvals=True
        )
    except np.linalg.LinAlgError as exc:  # QZ failed to converge
        raise EigensolveFailureError(str(exc)) from exc
    alpha, beta = np.asarray(w[0]), np.asarray(w[1])
    if not (np.all(np.isfinite(alpha)) and np.all(np.isfinite(beta))):
        raise EigensolveFailureError("eigensolver returned non-finite data")

    beta_scale = max(1.0, float(np.abs(beta).max()))
    center = p.nodes.mean()
    spread = float(np.abs(p.nodes[:, None] - p.nodes[None, :]).max())
    spread = max(spread, 1.0)

    # The two smallest-|beta| eigenvalues are the pencil's structural
    # infinities; anything else with tiny beta or far outside the node
    # region is a degree-deflation artifact.
    order = np.argsort(np.abs(beta), kind="stable")
    kept = []
    note = None
    for i in order[2:]:
        if abs(beta[i]) <= SPURIOUS_BETA_RTOL * beta_scale:
            continue
        lam = alpha[i] / beta[i]
        if abs(lam - center) > FAR_ROOT_FACTOR * spread:
            continue
        kept.append(lam)
    kept.sort(key=lambda z: (z.real, z.imag))
    found = np.array(kept, dtype=complex)
    discarded = pencil.dim - len(found)
    if len(found) < p.degree:
        note = (
            "sampled data appears to have degree %d < nominal %d; "
            "%d eigenvalues discarded" % (len(found), p.degree, discarded)
        )
    residuals = np.abs(evaluate(p, found)) if len(found) else np.empty(0)
    return RootfindReport(
        roots=found,
        discarded_count=discarded,
        residuals=residuals,
        backward_note=note,
    )
