"""
Exact colored chromatic numbers
===============================

The chromatic number of a colored mixed graph is the order of its
smallest homomorphic image.  The solver proves both directions: a
witness partition for the upper bound, exhausted search for the lower.
"""

from mixedgraphs import (
    ColorSignature,
    MixedGraph,
    check_partition,
    chromatic_number,
    find_homomorphism,
    quotient,
)

sig = ColorSignature(1, 0)


def directed_cycle(n):
    g = MixedGraph(sig, n)
    for i in range(n):
        g.add_arc(i, (i + 1) % n, 1)
    return g


# The directed 5-cycle needs 5 vertices in any image: every vertex
# pair is joined by a special 2-path around the cycle.
c5 = directed_cycle(5)
result = chromatic_number(c5)
print("directed C_5: chi =", result.k, "after", result.nodes, "nodes")
print("witness blocks:", result.witness.blocks)
assert check_partition(c5, result.witness) is None

# The directed 6-cycle collapses onto the directed triangle.
c6 = directed_cycle(6)
result6 = chromatic_number(c6)
image, hom = quotient(c6, result6.witness)
print("directed C_6: chi =", result6.k, "image order", image.order,
      "via", hom.mapping)

# Asking directly for homomorphisms: C_6 maps onto C_3, C_5 does not.
c3 = directed_cycle(3)
print("C_6 -> C_3:", find_homomorphism(c6, c3).mapping)
print("C_5 -> C_3:", find_homomorphism(c5, c3))

# Searches are budgeted.  Exhausting the budget reports honest bounds
# instead of an exact value.
partial = chromatic_number(c5, budget=3)
print(f"budget 3: exact={partial.exact} "
      f"bounds=[{partial.lower}, {partial.upper}]")
