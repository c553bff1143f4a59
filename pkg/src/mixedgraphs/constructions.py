"""Extremal constructions: the tightness family and the subdivision gadget.

The family ``build_hk`` realizes the worst case for the chromatic bound
k * p**(k-1): it has acyclic chromatic number at most k yet admits no
homomorphism to fewer than k * p**(k-1) vertices, because its top
vertices are pairwise joined by special 2-paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .core import ColorSignature, MixedGraph, RelationKind, require_rich_signature

Role = tuple  # ("bottom", group, slot) | ("top", group, vector) | ("internal", u, v)


def _add_special_path(g: MixedGraph, u: int, mid: int, v: int) -> None:
    """Join u and v through mid so that u-mid-v is a special 2-path."""
    if g.signature.m >= 1:
        # arcs u -> mid -> v: seen from mid, one in-arc and one out-arc
        g.add_arc(u, mid, 1)
        g.add_arc(mid, v, 1)
    else:
        # two edge colors exist because p >= 2 and m == 0
        g.add_edge(u, mid, 1)
        g.add_edge(mid, v, 2)


@dataclass(frozen=True)
class HkGraph:
    """The tightness construction with its vertex bookkeeping.

    Vertices come in k groups.  Group i holds k-1 bottoms b(i, j) and
    p**(k-1) tops t(i, vec), one per (k-1)-vector of relation kinds;
    the relation from b(i, j) to t(i, vec) is vec[j].  Every pair of
    tops from distinct groups is joined through a fresh internal vertex
    by a special 2-path; tops inside one group are already forced apart
    by their bottom vectors.
    """

    graph: MixedGraph
    signature: ColorSignature
    k: int
    bottoms: dict[tuple[int, int], int]
    tops: dict[tuple[int, tuple[RelationKind, ...]], int]
    internals: dict[tuple[int, int], int]
    roles: dict[int, Role]

    def group_tops(self, i: int) -> list[int]:
        return sorted(v for (g, _), v in self.tops.items() if g == i)


def build_hk(signature: ColorSignature, k: int) -> HkGraph:
    """Build the order k(k-1) + k p**(k-1) + C(k,2) p**(2(k-1)) witness.

    Requires p >= 2 and k >= 3.  Top vectors are enumerated in
    lexicographic order over the canonical kind order, so vertex numbers
    are reproducible.
    """
    require_rich_signature(signature)
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    p = signature.p
    kinds = signature.kinds()
    vectors = list(product(kinds, repeat=k - 1))

    bottoms: dict[tuple[int, int], int] = {}
    tops: dict[tuple[int, tuple[RelationKind, ...]], int] = {}
    internals: dict[tuple[int, int], int] = {}
    roles: dict[int, Role] = {}

    nxt = 0
    for i in range(k):
        for j in range(k - 1):
            bottoms[(i, j)] = nxt
            roles[nxt] = ("bottom", i, j)
            nxt += 1
    for i in range(k):
        for vec in vectors:
            tops[(i, vec)] = nxt
            roles[nxt] = ("top", i, vec)
            nxt += 1
    top_pairs = [
        (tops[(gi, vu)], tops[(gj, vv)])
        for gi, gj in combinations(range(k), 2)
        for vu in vectors
        for vv in vectors
    ]
    for u, v in top_pairs:
        internals[(u, v)] = nxt
        roles[nxt] = ("internal", u, v)
        nxt += 1

    g = MixedGraph(signature, nxt)
    for (i, vec), t in tops.items():
        for j in range(k - 1):
            g.add_relation(bottoms[(i, j)], t, vec[j])
    for (u, v), mid in internals.items():
        _add_special_path(g, u, mid, v)

    expected = k * (k - 1) + k * p ** (k - 1) + k * (k - 1) // 2 * p ** (2 * (k - 1))
    assert nxt == expected, f"order {nxt} != closed form {expected}"
    return HkGraph(g, signature, k, bottoms, tops, internals, roles)


def hk_acyclic_coloring(h: HkGraph) -> dict[int, int]:
    """A k-coloring of the construction that is proper and acyclic.

    Group i's tops get color i+1; group i's bottoms get the remaining
    k-1 colors in slot order; each internal gets the smallest color
    differing from both of its two neighbors.  Any two classes induce
    stars plus pendant paths, hence a forest.
    """
    k = h.k
    colors: dict[int, int] = {}
    for (i, _), t in h.tops.items():
        colors[t] = i + 1
    for (i, j), b in h.bottoms.items():
        others = [c for c in range(1, k + 1) if c != i + 1]
        colors[b] = others[j]
    for (u, v), mid in h.internals.items():
        taken = {colors[u], colors[v]}
        colors[mid] = next(c for c in range(1, k + 1) if c not in taken)
    return colors


def build_special_gadget(signature: ColorSignature, t: int) -> MixedGraph:
    """Subdivide every edge of K_t into a special 2-path.

    The result has t branch vertices (0..t-1) and C(t, 2) internal
    vertices, order t + t(t-1)/2.  Its chromatic number is at least t
    while its arboricity stays at 2 for t >= 3: pairwise special paths
    force distinct branch images, but subdividing keeps the graph
    sparse.
    """
    require_rich_signature(signature)
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    g = MixedGraph(signature, t + t * (t - 1) // 2)
    nxt = t
    for u, v in combinations(range(t), 2):
        _add_special_path(g, u, nxt, v)
        nxt += 1
    return g
