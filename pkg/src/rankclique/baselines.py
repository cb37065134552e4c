"""Multiplicative-update baselines on the quadratic clique relaxation.

Two classical iterations for max u^T A u over a simplex:

  * replicator dynamics on the probability simplex,
    u_i <- u_i (A u)_i / (u^T A u); and
  * the annealed power variant on the eta-simplex (sum of u_i^eta = 1),
    u_i <- (u_i (A u)_i / (u^T A u))^(1/eta), eta in [1, 2].

Both only reach (at best) the support of a clique, so reported cliques
come from a greedy postprocess over the final weights.  The greedy scan
deliberately stops at the first non-extending vertex and does not try
to repair or extend further; callers wanting guaranteed maximality must
extend the result themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import CliqueSet, EdgelessGraphError, Graph, is_clique


class IndependentSupportError(ValueError):
    """u^T A u vanished: the iterate's support is an independent set."""


@dataclass(frozen=True)
class BaselineConfig:
    eta: float = 1.05
    tol: float = 1e-10          # threshold on ||u_next - u||_2^2
    max_iterations: int = 100_000

    def __post_init__(self):
        if not 1.0 <= self.eta <= 2.0:
            raise ValueError(f"eta must lie in [1, 2], got {self.eta}")
        if self.tol <= 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


def _masses(g: Graph, u: np.ndarray) -> np.ndarray:
    # u_i (A u)_i / (u^T A u); sums to 1 identically, renormalized to
    # absorb floating-point drift
    u = np.asarray(u, dtype=np.float64)
    au = g.adj_matvec(u)
    q = float(u @ au)
    if q <= 0.0:
        raise IndependentSupportError(
            "u^T A u is not positive: support is an independent set"
        )
    m = u * au / q
    return m / m.sum()


def pelillo_step(g: Graph, u: np.ndarray) -> np.ndarray:
    """One replicator update on the probability simplex."""
    return _masses(g, u)


def ding_step(g: Graph, u: np.ndarray, eta: float) -> np.ndarray:
    """One annealed update on the eta-simplex.

    With eta = 1 this is bitwise identical to pelillo_step.
    """
    if not 1.0 <= eta <= 2.0:
        raise ValueError(f"eta must lie in [1, 2], got {eta}")
    m = _masses(g, u)
    if eta == 1.0:
        return m
    return m ** (1.0 / eta)


def run_baseline(
    g: Graph, kind: str, cfg: BaselineConfig | None = None
) -> tuple[np.ndarray, int, bool]:
    """Iterate a baseline from the uniform feasible start.

    kind is "pelillo" or "ding".  Returns (final weights, iterations,
    converged); converged means the squared step length dropped below
    cfg.tol within cfg.max_iterations steps.
    """
    cfg = cfg if cfg is not None else BaselineConfig()
    if kind not in ("pelillo", "ding"):
        raise ValueError(f"unknown baseline kind {kind!r}")
    if g.edge_count == 0:
        raise EdgelessGraphError("no edges: baseline iteration is undefined")

    if kind == "pelillo":
        u = np.full(g.n, 1.0 / g.n)
        step = lambda v: pelillo_step(g, v)
    else:
        u = np.full(g.n, g.n ** (-1.0 / cfg.eta))  # uniform point of the eta-simplex
        step = lambda v: ding_step(g, v, cfg.eta)

    for it in range(1, cfg.max_iterations + 1):
        u_next = step(u)
        delta = u_next - u
        u = u_next
        if float(delta @ delta) < cfg.tol:
            return u, it, True
    return u, cfg.max_iterations, False


def postprocess_greedy(g: Graph, u: np.ndarray) -> CliqueSet:
    """Greedy clique from baseline weights.

    Vertices are scanned by nonincreasing weight (ties by ascending
    index) and added while the set stays a clique; the scan stops at the
    first vertex that fails, even if later vertices would fit.
    """
    u = np.asarray(u, dtype=np.float64)
    if u.shape != (g.n,):
        raise ValueError(f"vector has shape {u.shape}, expected ({g.n},)")
    order = np.argsort(-u, kind="stable")
    members: list[int] = []
    in_common = np.ones(g.n, dtype=bool)  # adjacent to every member so far
    for v in order:
        v = int(v)
        if members and not in_common[v]:
            break
        members.append(v)
        mask = np.zeros(g.n, dtype=bool)
        mask[g.neighbors(v)] = True
        in_common &= mask
    return CliqueSet(tuple(members))


def extend_to_maximal(g: Graph, clique: CliqueSet) -> CliqueSet:
    """Greedily extend a clique to a maximal one (lowest index first).

    This goes beyond the plain greedy postprocess; benchmark code labels
    results that used it.
    """
    members = list(clique.vertices)
    if not is_clique(g, members):
        raise ValueError(f"{clique.vertices} is not a clique")
    if members:
        common = np.zeros(g.n, dtype=bool)
        common[g.neighbors(members[0])] = True
        for v in members[1:]:
            mask = np.zeros(g.n, dtype=bool)
            mask[g.neighbors(v)] = True
            common &= mask
        common[members] = False
    else:
        common = np.ones(g.n, dtype=bool)
    while common.any():
        v = int(np.nonzero(common)[0][0])
        members.append(v)
        mask = np.zeros(g.n, dtype=bool)
        mask[g.neighbors(v)] = True
        common &= mask
        common[v] = False
    return CliqueSet(tuple(sorted(members)))
