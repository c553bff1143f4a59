"""Forest decompositions, arboricity, and acyclic colorings.

The arboricity of the underlying graph is the least number of forests
covering its edges; it equals the maximum over subgraphs of
ceil(e / (v - 1)).  Acyclic colorings are proper colorings whose every
two classes induce a forest.  The two meet in the layered relabeling
pipeline: a forest decomposition turns one graph into a stack of
colored mixed graphs whose exact chromatic numbers multiply into an
acyclic palette.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .bounds import ceil_log
from .core import ColorSignature, MixedGraph, degeneracy_ordering, require_rich_signature
from .solver import BudgetExceededError, chromatic_number


class ExactUnavailableError(RuntimeError):
    """Exact arboricity is not attempted above the subset limit."""


@dataclass(frozen=True)
class ForestDecomposition:
    """An assignment of every underlying edge to one of ``count`` forests."""

    count: int
    assignment: Mapping[tuple[int, int], int]

    @classmethod
    def from_assignment(cls, assignment: Mapping[tuple[int, int], int]) -> "ForestDecomposition":
        count = max(assignment.values()) + 1 if assignment else 0
        return cls(count, dict(assignment))


def check_forest_decomposition(graph: MixedGraph, fd: ForestDecomposition) -> str | None:
    """Audit a decomposition; None when every class is a spanning-safe forest.

    Every underlying edge must be assigned exactly once, indices must
    hit 0..count-1, and each class must be acyclic.
    """
    edges = set(graph.underlying_edges())
    for (u, v), i in fd.assignment.items():
        key = (u, v) if u < v else (v, u)
        if key not in edges:
            return f"assigned pair {key} is not an underlying edge"
        if not 0 <= i < fd.count:
            return f"forest index {i} on edge {key} out of range 0..{fd.count - 1}"
    normalized = {((u, v) if u < v else (v, u)) for (u, v) in fd.assignment}
    if len(normalized) != len(fd.assignment):
        return "an edge is assigned twice"
    missing = edges - normalized
    if missing:
        return f"edge {min(missing)} is unassigned"
    used = {i for i in fd.assignment.values()}
    for i in range(fd.count):
        if i not in used:
            return f"forest {i} is empty"
    # acyclicity per class via union-find
    for i in range(fd.count):
        parent = list(range(graph.order))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (u, v), j in sorted(fd.assignment.items()):
            if j != i:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                return f"forest {i} contains a cycle through edge ({u}, {v})"
            parent[ru] = rv
    return None


def nash_williams_density(
    graph: MixedGraph, subset_limit: int = 20
) -> tuple[int, tuple[int, ...] | None]:
    """Exact arboricity with a densest witness subset.

    Maximizes ceil(e' / (v' - 1)) over all induced subgraphs by
    enumerating vertex subsets with incremental edge counts, so the cost
    is O(2^order); orders above ``subset_limit`` raise
    ExactUnavailableError (use greedy_forests for an upper bound).
    Returns (arboricity, witness vertices); the witness is None for
    edgeless graphs.
    """
    n = graph.order
    if n > subset_limit:
        raise ExactUnavailableError(
            f"order {n} exceeds subset limit {subset_limit}; "
            "exact arboricity enumerates all vertex subsets"
        )
    if graph.e_count == 0:
        return 0, None
    adj_bits = [0] * n
    for u, v in graph.underlying_edges():
        adj_bits[u] |= 1 << v
        adj_bits[v] |= 1 << u
    edge_count = [0] * (1 << n)
    best = 0
    best_mask = 0
    for mask in range(1, 1 << n):
        low_bit = mask & -mask
        low = low_bit.bit_length() - 1
        rest = mask ^ low_bit
        e = edge_count[rest] + (adj_bits[low] & rest).bit_count()
        edge_count[mask] = e
        v = mask.bit_count()
        if v >= 2 and e > 0:
            density = (e + v - 2) // (v - 1)
            if density > best:
                best = density
                best_mask = mask
    witness = tuple(x for x in range(n) if best_mask >> x & 1)
    return best, witness


def greedy_forests(graph: MixedGraph) -> ForestDecomposition:
    """Cover the underlying edges by repeatedly peeling a spanning forest.

    Each round grows a depth-first spanning forest of the remaining
    graph (roots and neighbors in ascending index order) and removes it.
    The number of rounds is an arboricity upper bound, not necessarily
    the optimum.
    """
    n = graph.order
    remaining: list[set[int]] = [set(graph.neighbors(v)) for v in range(n)]
    left = graph.e_count
    assignment: dict[tuple[int, int], int] = {}
    r = 0
    while left > 0:
        visited = [False] * n
        taken: list[tuple[int, int]] = []
        for root in range(n):
            if visited[root]:
                continue
            visited[root] = True
            stack = [(root, iter(sorted(remaining[root])))]
            while stack:
                v, it = stack[-1]
                for w in it:
                    if not visited[w]:
                        visited[w] = True
                        taken.append((v, w) if v < w else (w, v))
                        stack.append((w, iter(sorted(remaining[w]))))
                        break
                else:
                    stack.pop()
        for u, v in taken:
            assignment[(u, v)] = r
            remaining[u].discard(v)
            remaining[v].discard(u)
        left -= len(taken)
        r += 1
    fd = ForestDecomposition(r, assignment)
    audit = check_forest_decomposition(graph, fd)
    assert audit is None, f"greedy peeling produced a bad decomposition: {audit}"
    return fd


def _induced_cycle(
    vertices: set[int], graph: MixedGraph
) -> list[int] | None:
    """A cycle in the underlying subgraph induced by ``vertices``, if any."""
    visited: set[int] = set()
    parent: dict[int, int] = {}
    for root in sorted(vertices):
        if root in visited:
            continue
        parent[root] = -1
        visited.add(root)
        stack = [(root, iter(sorted(w for w in graph.neighbors(root) if w in vertices)))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent[v]:
                    continue
                if w in visited:
                    cycle = [v]
                    x = v
                    while x != w:
                        x = parent[x]
                        cycle.append(x)
                    return cycle
                parent[w] = v
                visited.add(w)
                stack.append((w, iter(sorted(x for x in graph.neighbors(w) if x in vertices))))
                advanced = True
                break
            if not advanced:
                stack.pop()
    return None


def check_acyclic_coloring(graph: MixedGraph, coloring: Mapping[int, int]) -> str | None:
    """Audit an acyclic coloring; None when proper and forest-inducing.

    A coloring is acyclic when no relation is monochromatic and the
    union of any two color classes induces no underlying cycle.  A
    coloring missing some vertex is an input error, not a violation.
    """
    for v in range(graph.order):
        if v not in coloring:
            raise ValueError(f"coloring misses vertex {v}")
    for u, v, _ in graph.relations():
        if coloring[u] == coloring[v]:
            return f"monochromatic relation on ({u}, {v})"
    classes: dict[int, set[int]] = {}
    for v in range(graph.order):
        classes.setdefault(coloring[v], set()).add(v)
    labels = sorted(classes)
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            cycle = _induced_cycle(classes[a] | classes[b], graph)
            if cycle is not None:
                return f"colors {a} and {b} induce a cycle through {cycle}"
    return None


@dataclass(frozen=True)
class AcyclicResult:
    """Outcome of an exact acyclic-chromatic-number search."""

    lower: int
    upper: int
    witness: dict[int, int] | None
    nodes: int
    exhausted: bool

    @property
    def exact(self) -> bool:
        return not self.exhausted and self.lower == self.upper

    @property
    def k(self) -> int:
        if not self.exact:
            raise ValueError(f"not exact: bounds are [{self.lower}, {self.upper}]")
        return self.upper


def acyclic_chromatic_number(graph: MixedGraph, budget: int = 5_000_000) -> AcyclicResult:
    """Exact acyclic chromatic number of the underlying graph.

    Tries palette sizes in increasing order; for each, backtracks over
    vertex colors (descending degree order) and rejects any assignment
    that makes a neighbor monochromatic or closes a bichromatic cycle.
    Every color assignment attempt costs one node from the budget.
    """
    n = graph.order
    if n == 0:
        return AcyclicResult(0, 0, {}, 0, False)
    lower = 2 if graph.e_count > 0 else 1
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    colors: dict[int, int] = {}
    nodes = 0

    def closes_bichromatic_cycle(v: int, c: int) -> bool:
        neighbor_colors: dict[int, list[int]] = {}
        for w in graph.neighbors(v):
            if w in colors:
                neighbor_colors.setdefault(colors[w], []).append(w)
        for d, anchors in neighbor_colors.items():
            if len(anchors) < 2:
                continue
            # two anchors already linked inside the {c, d} classes close a cycle at v
            pool = {
                w for w in range(n) if w != v and w in colors and colors[w] in (c, d)
            }
            comp: dict[int, int] = {}
            label = 0
            for start in sorted(pool):
                if start in comp:
                    continue
                stack = [start]
                comp[start] = label
                while stack:
                    x = stack.pop()
                    for y in graph.neighbors(x):
                        if y in pool and y not in comp:
                            comp[y] = label
                            stack.append(y)
                label += 1
            seen: set[int] = set()
            for w in anchors:
                if comp[w] in seen:
                    return True
                seen.add(comp[w])
        return False

    def search(idx: int, k: int, used: int) -> bool:
        nonlocal nodes
        if idx == n:
            return True
        v = order[idx]
        forbidden = {colors[w] for w in graph.neighbors(v) if w in colors}
        for c in range(min(used + 1, k)):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError("acyclic search budget exhausted", 0, 0)
            if c in forbidden or closes_bichromatic_cycle(v, c):
                continue
            colors[v] = c
            if search(idx + 1, k, max(used, c + 1)):
                return True
            del colors[v]
        return False

    for k in range(lower, n + 1):
        colors.clear()
        try:
            found = search(0, k, 0)
        except BudgetExceededError:
            return AcyclicResult(k, n, None, nodes, True)
        if found:
            witness = {v: colors[v] + 1 for v in range(n)}
            audit = check_acyclic_coloring(graph, witness)
            assert audit is None, f"search produced a bad coloring: {audit}"
            return AcyclicResult(k, k, witness, nodes, False)
    raise AssertionError("distinct colors always succeed")  # pragma: no cover


def digit_graphs(
    graph: MixedGraph,
    fd: ForestDecomposition,
    vertex_order: Sequence[int] | None = None,
    signature: ColorSignature | None = None,
) -> list[MixedGraph]:
    """Relabel one graph into 1 + ceil_log(p, count) colored layers.

    Layer 0 gives every underlying edge the first canonical kind, viewed
    from the endpoint earlier in ``vertex_order`` (degeneracy order by
    default).  Layer l >= 1 encodes digit l of the edge's forest index
    in base p as a canonical kind, viewed from the same endpoint.  Any
    coloring that is a homomorphic image on every layer is proper and
    acyclic on the original graph, which is what the pipeline exploits.
    """
    sig = signature if signature is not None else graph.signature
    require_rich_signature(sig)
    audit = check_forest_decomposition(graph, fd)
    if audit is not None:
        raise ValueError(f"invalid forest decomposition: {audit}")
    if vertex_order is None:
        vertex_order = degeneracy_ordering(graph)[1]
    if sorted(vertex_order) != list(range(graph.order)):
        raise ValueError("vertex_order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(vertex_order)}
    kinds = sig.kinds()
    p = sig.p
    assign = {
        ((u, v) if u < v else (v, u)): i for (u, v), i in fd.assignment.items()
    }
    digits = 0 if fd.count <= 1 else ceil_log(p, fd.count)
    layers: list[MixedGraph] = []
    for layer in range(digits + 1):
        g = MixedGraph(sig, graph.order)
        for u, v in graph.underlying_edges():
            x, y = (u, v) if pos[u] < pos[v] else (v, u)
            if layer == 0:
                g.add_relation(x, y, kinds[0])
            else:
                digit = assign[(u, v)] // p ** (layer - 1) % p
                g.add_relation(x, y, kinds[digit])
        layers.append(g)
    return layers


@dataclass(frozen=True)
class ProductColoringResult:
    """An acyclic coloring assembled from per-layer homomorphisms."""

    colors: dict[int, int]
    palette: int
    layer_chromatics: tuple[int, ...]
    forest_count: int
    digit_count: int


def acyclic_from_homomorphisms(
    graph: MixedGraph,
    fd: ForestDecomposition | None = None,
    vertex_order: Sequence[int] | None = None,
    hom_budget: int = 10_000_000,
    signature: ColorSignature | None = None,
) -> ProductColoringResult:
    """Acyclic coloring via exact chromatic numbers of the digit layers.

    Colors are the dense renumbering of the tuples of per-layer block
    indices, so the palette is at most k ** (digit_count + 1) where k is
    the largest layer chromatic number.  Layer searches that exhaust
    ``hom_budget`` raise BudgetExceededError; nothing partial is
    returned.
    """
    if fd is None:
        fd = greedy_forests(graph)
    layers = digit_graphs(graph, fd, vertex_order=vertex_order, signature=signature)
    layer_blocks: list[dict[int, int]] = []
    layer_chromatics: list[int] = []
    for index, layer in enumerate(layers):
        result = chromatic_number(layer, budget=hom_budget)
        if not result.exact:
            raise BudgetExceededError(
                f"layer {index} chromatic search exhausted its budget "
                f"(bounds [{result.lower}, {result.upper}])",
                result.lower,
                result.upper,
            )
        assert result.witness is not None
        layer_blocks.append(result.witness.block_of())
        layer_chromatics.append(result.k)
    tuples = {
        v: tuple(blocks[v] for blocks in layer_blocks) for v in range(graph.order)
    }
    dense: dict[tuple[int, ...], int] = {}
    colors: dict[int, int] = {}
    for v in range(graph.order):
        t = tuples[v]
        if t not in dense:
            dense[t] = len(dense) + 1
        colors[v] = dense[t]
    audit = check_acyclic_coloring(graph, colors)
    assert audit is None, f"product coloring is not acyclic: {audit}"
    return ProductColoringResult(
        colors=colors,
        palette=len(dense),
        layer_chromatics=tuple(layer_chromatics),
        forest_count=fd.count,
        digit_count=len(layers) - 1,
    )
