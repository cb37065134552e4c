"""From a document-term matrix to cliques of mutually similar documents.

Documents become vertices; two documents are adjacent when they share
at least p distinct terms.  A clique is then a set of documents that
pairwise share vocabulary.  The same pipeline is available on the
command line as `rankclique ingest-text`.
"""

from rankclique import cmd_solve, cooccurrence_graph, enumerate_maximal_cliques

# 6 documents x 8 terms, 1-based coordinate triples (value = raw count,
# binarized on ingest).  Docs 1-3 share terms 1-3; docs 4-5 share 6-7.
COORD = """6 8 18
1 1 2
1 2 1
1 3 1
2 1 1
2 2 3
2 3 1
3 1 1
3 2 1
3 3 5
3 4 1
4 5 1
4 6 2
4 7 1
5 6 1
5 7 4
6 4 1
6 5 1
6 8 2
"""

for p in (1, 2, 3):
    g = cooccurrence_graph(COORD, p)
    print(f"p={p}: {g.edge_count} edges, "
          f"maximal cliques {[c.vertices for c in enumerate_maximal_cliques(g)]}")

g = cooccurrence_graph(COORD, 2)
best, clique, _ = cmd_solve(g, "p2", restarts=5)
print(f"\nbest of 5 solver restarts on the p=2 graph: documents {clique.vertices} "
      f"pairwise share >= 2 terms (size {best.clique_size}, maximal={best.maximal})")
