"""A structured instance where the default penalty start struggles.

Vertices are all 10-bit words, adjacent when their Hamming distance is
at least 2.  The even-weight words form a clique of size 512 (distance
between two distinct even-weight words is never 1), and so do the odd
ones.  With 99% edge density the Frobenius-balance starting penalty
computed by default_d0 lands around 101, which prunes far too
aggressively here; its square root (~10) recovers the full 512.  This
is the documented reproduction recipe, equivalent to
`rankclique solve --dimacs hamming10_2.clq --d0 10.07 --seed 0`.
"""

import math

import numpy as np

from rankclique import SolverConfig, default_d0, graph_from_edge_list, solve

popcount = np.array([bin(i).count("1") for i in range(1024)])
words = np.arange(1024)
dist = popcount[words[:, None] ^ words[None, :]]
ii, jj = np.nonzero(np.triu(dist >= 2, 1))
g = graph_from_edge_list(1024, np.column_stack([ii, jj]))

nnz = g.n + 2 * g.edge_count
balanced = math.sqrt(nnz / (g.n**2 - nnz))
print(f"n={g.n} edges={g.edge_count} density={2 * g.edge_count / (g.n * (g.n - 1)):.3f}")
print(f"default d0 = {default_d0(g):.2f}, sqrt-balanced d0 = {balanced:.2f}\n")

for label, d0 in [("default d0", None), ("sqrt-balanced d0", balanced)]:
    res = solve(g, SolverConfig(seed=0, d0_override=d0))
    sizes = sorted(popcount[list(res.clique.vertices)])
    parity = {s % 2 for s in sizes}
    print(f"{label:18}: clique size {res.clique.size:4} "
          f"(converged={res.converged}, {res.iterations} iterations, "
          f"single parity class: {parity == {sizes[0] % 2}})")
