"""
Special 2-paths: where distinctness is forced
=============================================

A 2-path u - v - w is special when its two relations differ as seen
from the middle vertex.  Any homomorphism must then send u and w to
different vertices, which is what drives every lower bound here.
"""

from mixedgraphs import (
    ColorSignature,
    MixedGraph,
    build_special_gadget,
    chromatic_number,
    is_special_2path,
    special_clique,
    special_pairs,
)

sig = ColorSignature(1, 0)

# A directed 2-path 0 -> 1 -> 2 is special: from the middle, one arc
# comes in and the other goes out.
path = MixedGraph(sig, 3)
path.add_arc(0, 1, 1)
path.add_arc(1, 2, 1)
print("0 -> 1 -> 2 special?", is_special_2path(path, 0, 1, 2))

# Two arcs leaving the middle with the same color are NOT special:
# both endpoints may share an image.
star = MixedGraph(sig, 3)
star.add_arc(1, 0, 1)
star.add_arc(1, 2, 1)
print("0 <- 1 -> 2 special?", is_special_2path(star, 0, 1, 2))

# special_pairs collects every pair forced apart by some middle vertex.
print("forced-apart pairs in the 2-path:", special_pairs(path))

# Subdividing each edge of a complete graph into a special 2-path
# yields a sparse graph that still needs many colors: the t branch
# vertices are pairwise forced apart.
gadget = build_special_gadget(sig, t=5)
print(f"\ngadget on K_5: order {gadget.order} "
      f"({5} branch vertices + {gadget.order - 5} middles)")

clique = special_clique(gadget)
print("greedy special clique:", sorted(clique))

chi = chromatic_number(gadget)
print("exact chromatic number:", chi.k, "(lower bound from the clique:", len(clique), ")")
