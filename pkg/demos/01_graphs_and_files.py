"""
Building colored mixed graphs and saving them
=============================================

A mixed graph carries arcs (directed, colored 1..m) and edges
(undirected, colored 1..n) on a simple underlying graph.  Every
adjacency can be read from either endpoint's point of view.
"""

from mixedgraphs import ColorSignature, MixedGraph, dumps, loads

# A signature fixes how many arc and edge colors exist.  p = 2m + n
# counts the distinct ways a neighbor can look from a vertex.
sig = ColorSignature(m=1, n=1)
print(f"signature {sig} has p = {sig.p} relation kinds: "
      + ", ".join(str(k) for k in sig.kinds()))

# Build a small graph: a 2-colored mix of one arc and two edges.
g = MixedGraph(sig, 4)
g.add_arc(0, 1, 1)
g.add_edge(1, 2, 1)
g.add_edge(2, 3, 1)

# The same adjacency seen from both sides: an outgoing arc from 0
# is an incoming arc at 1.
print("from 0 toward 1:", g.relation_from(0, 1))
print("from 1 toward 0:", g.relation_from(1, 0))

# Serialization is a line-oriented text format; comments and a seed
# line survive a round trip, and the parser audits every invariant.
text = dumps(g, coloring={0: 1, 1: 2, 2: 1, 3: 2}, seed=7,
             comments=["a tiny demonstration graph"])
print("\nfile form:")
print(text)

doc = loads(text)
print("parsed back:", doc.graph.order, "vertices,",
      doc.graph.e_count, "relations, seed", doc.seed)
assert doc.coloring == {0: 1, 1: 2, 2: 1, 3: 2}

# Structural mistakes are rejected with the offending line number.
try:
    loads("mixedgraph 1\nsignature 1 0\nvertices 2\ne 0 1 1\n")
except ValueError as exc:
    print("rejected:", exc)
