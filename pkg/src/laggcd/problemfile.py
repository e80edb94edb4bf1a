"""JSON problem and points files for the command-line tools.

A problem file carries both polynomials in node/value form plus the
tolerance:

    {
      "px": [...], "py": [...],      # nodes and values of P, same length
      "qx": [...], "qy": [...],      # nodes and values of Q, same length
      "sigma": 0.5,
      "strategy": "dnc",             # optional: "dnc" | "heuristic"
      "maxMultiplicity": 3,          # optional
      "rho": "sum",                  # optional: "sum" | "max"
      "sigmaOverrides": {"cluster": ..., "edge": ..., "cert": ...}  # optional
    }

Numbers are either plain reals or [re, im] pairs. A points file for the
cluster command is a JSON array of [root, multiplicity] entries, where
root again is a real or an [re, im] pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ProblemFileError
from .lagpoly import RootList


def parse_scalar(v) -> complex:
    """A number, or a two-element [re, im] array."""
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if (
        isinstance(v, list)
        and len(v) == 2
        and all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)
    ):
        return complex(v[0], v[1])
    raise ProblemFileError("expected a number or [re, im] pair, got %r" % (v,))


def _scalar_array(raw, name: str) -> np.ndarray:
    if not isinstance(raw, list):
        raise ProblemFileError("field %r must be an array" % name)
    return np.array([parse_scalar(v) for v in raw], dtype=complex)


@dataclass
class ProblemFile:
    px: np.ndarray
    py: np.ndarray
    qx: np.ndarray
    qy: np.ndarray
    sigma: float
    strategy: Optional[str] = None
    max_multiplicity: Optional[int] = None
    rho: Optional[str] = None
    sigma_cluster: Optional[float] = None
    sigma_edge: Optional[float] = None
    sigma_cert: Optional[float] = None


def parse_problem(data: dict) -> ProblemFile:
    if not isinstance(data, dict):
        raise ProblemFileError("problem file must be a JSON object")
    missing = [k for k in ("px", "py", "qx", "qy", "sigma") if k not in data]
    if missing:
        raise ProblemFileError("missing required fields: %s" % ", ".join(missing))
    px = _scalar_array(data["px"], "px")
    py = _scalar_array(data["py"], "py")
    qx = _scalar_array(data["qx"], "qx")
    qy = _scalar_array(data["qy"], "qy")
    if len(px) != len(py) or len(px) < 2:
        raise ProblemFileError("px and py must have equal length >= 2")
    if len(qx) != len(qy) or len(qx) < 2:
        raise ProblemFileError("qx and qy must have equal length >= 2")
    sigma = data["sigma"]
    if not isinstance(sigma, (int, float)) or isinstance(sigma, bool) or sigma < 0:
        raise ProblemFileError("sigma must be a number >= 0")
    overrides = data.get("sigmaOverrides") or {}
    if not isinstance(overrides, dict):
        raise ProblemFileError("sigmaOverrides must be an object")
    strategy = data.get("strategy")
    if strategy is not None and strategy not in ("dnc", "heuristic"):
        raise ProblemFileError("strategy must be 'dnc' or 'heuristic'")
    rho = data.get("rho")
    if rho is not None and rho not in ("sum", "max"):
        raise ProblemFileError("rho must be 'sum' or 'max'")
    max_mult = data.get("maxMultiplicity")
    if max_mult is not None and (not isinstance(max_mult, int) or max_mult < 1):
        raise ProblemFileError("maxMultiplicity must be a positive integer")
    return ProblemFile(
        px=px,
        py=py,
        qx=qx,
        qy=qy,
        sigma=float(sigma),
        strategy=strategy,
        max_multiplicity=max_mult,
        rho=rho,
        sigma_cluster=overrides.get("cluster"),
        sigma_edge=overrides.get("edge"),
        sigma_cert=overrides.get("cert"),
    )


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ProblemFileError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise ProblemFileError("invalid JSON in %s: %s" % (path, exc)) from exc
    return parse_problem(data)


def load_points(path: str) -> RootList:
    """Points file: JSON array of [root, multiplicity] entries."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ProblemFileError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise ProblemFileError("invalid JSON in %s: %s" % (path, exc)) from exc
    if not isinstance(data, list):
        raise ProblemFileError("points file must be a JSON array")
    entries = []
    for item in data:
        if not (isinstance(item, list) and len(item) == 2):
            raise ProblemFileError(
                "each point must be a [root, multiplicity] pair, got %r" % (item,)
            )
        root = parse_scalar(item[0])
        mult = item[1]
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            raise ProblemFileError("multiplicity must be a positive integer")
        entries.append((root, mult))
    return RootList(entries)
