"""Miniature random-graph benchmark with CSV output.

A desk-scale version of the full sweep: smaller n, fewer trials, all
three algorithms, exact clique numbers from the enumeration oracle for
reference.  The full-size sweep is the CLI's `bench-random` default.
"""

import statistics

from rankclique import (
    cmd_bench_random,
    maximum_clique_exact,
    random_graph,
    records_to_csv,
)

N, TRIALS, SEED = 60, 5, 0
densities = [0.3, 0.5, 0.7]

records = cmd_bench_random(N, densities, trials=TRIALS, seed=SEED)

print(records_to_csv(records))

for rho in densities:
    omegas = [
        maximum_clique_exact(random_graph(N, rho, SEED + t)).size
        for t in range(TRIALS)
    ]
    print(f"density {rho}: exact clique numbers {omegas}")
    for algo in ("r1nm", "pelillo", "ding"):
        sizes = [
            r.clique_size
            for r in records
            if r.algorithm == algo and f"_p{rho:g}_" in r.instance_name
        ]
        print(f"  {algo:8} sizes {sizes} (median {statistics.median(sizes):g})")
