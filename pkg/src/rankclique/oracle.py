"""Exact maximal-clique enumeration for small instances.

Bron-Kerbosch with pivoting over bitmask vertex sets.  Deliberately
bounded: the point of this module is to provide ground truth for tests
and benchmarks at desk scale, not to compete on large graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CliqueSet, Graph


@dataclass(frozen=True)
class OracleLimits:
    """Hard bounds on exhaustive enumeration."""

    max_vertices: int = 64
    max_reported_cliques: int = 1_000_000


class OracleLimitError(ValueError):
    """Instance exceeds the enumeration limits; use a smaller instance."""


def _neighbor_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 0
        for w in g.neighbors(v):
            m |= 1 << int(w)
        masks.append(m)
    return masks


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_maximal_cliques(g: Graph, limits: OracleLimits = OracleLimits()) -> list[CliqueSet]:
    """All maximal cliques, sorted lexicographically by vertex list.

    Raises OracleLimitError when the graph has more than
    limits.max_vertices vertices or enumeration would report more than
    limits.max_reported_cliques cliques.
    """
    if g.n > limits.max_vertices:
        raise OracleLimitError(
            f"graph has {g.n} vertices, oracle limit is {limits.max_vertices}; "
            "use a smaller instance"
        )
    nbr = _neighbor_masks(g)
    found: list[tuple[int, ...]] = []

    def expand(r: tuple[int, ...], p: int, x: int) -> None:
        if p == 0 and x == 0:
            if len(found) >= limits.max_reported_cliques:
                raise OracleLimitError(
                    f"more than {limits.max_reported_cliques} maximal cliques; "
                    "use a smaller instance"
                )
            found.append(r)
            return
        # pivot on the candidate covering most of P
        pivot, best = -1, -1
        for v in _bits(p | x):
            c = (p & nbr[v]).bit_count()
            if c > best:
                pivot, best = v, c
        for v in _bits(p & ~nbr[pivot]):
            bit = 1 << v
            expand(r + (v,), p & nbr[v], x & nbr[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand((), (1 << g.n) - 1, 0)
    return [CliqueSet(t) for t in sorted(tuple(sorted(t)) for t in found)]


def maximum_clique_exact(g: Graph, limits: OracleLimits = OracleLimits()) -> CliqueSet:
    """A maximum clique; ties broken by lexicographically smallest vertex list."""
    cliques = enumerate_maximal_cliques(g, limits)
    if not cliques:
        return CliqueSet(())
    best = max(c.size for c in cliques)
    return next(c for c in cliques if c.size == best)


def motzkin_straus_value(g: Graph, limits: OracleLimits = OracleLimits()) -> float:
    """Optimal value 1 - 1/omega of the quadratic clique relaxation
    over the probability simplex."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    omega = maximum_clique_exact(g, limits).size
    return 1.0 - 1.0 / omega
