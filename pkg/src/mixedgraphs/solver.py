"""Exact homomorphism search and chromatic numbers for colored mixed graphs.

The chromatic number of a colored mixed graph is the least order of a
homomorphic image.  Homomorphic images correspond to vertex partitions
whose blocks are independent and pairwise joined by at most one relation
kind, so the search branches over such partitions directly.

Everything here is exact and deterministic; graphs beyond a few hundred
vertices are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import MixedGraph, RelationKind, special_pairs


class BudgetExceededError(RuntimeError):
    """An exact search ran out of its node budget."""

    def __init__(self, message: str, lower: int, upper: int):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class Homomorphism:
    """A total vertex map between graphs of the same signature."""

    source_order: int
    target_order: int
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.source_order:
            raise ValueError("mapping must assign every source vertex")

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.mapping))


def check_homomorphism(
    source: MixedGraph, target: MixedGraph, mapping: Sequence[int]
) -> str | None:
    """Audit a vertex map; None when it preserves every relation exactly.

    Each relation must map to a relation of the same kind, direction and
    color.  Mismatched signatures or a non-total map are input errors,
    not violations.
    """
    if source.signature != target.signature:
        raise ValueError(
            f"signature mismatch: {source.signature} vs {target.signature}"
        )
    if len(mapping) != source.order:
        raise ValueError(
            f"mapping has {len(mapping)} entries for {source.order} vertices"
        )
    for u, x in enumerate(mapping):
        if not 0 <= x < target.order:
            raise ValueError(f"image {x} of vertex {u} out of range")
    for u, v, rel in source.relations():
        x, y = mapping[u], mapping[v]
        if x == y:
            return f"adjacent pair ({u}, {v}) collapses onto vertex {x}"
        found = target.relation_from(x, y)
        if found != rel:
            have = str(found) if found is not None else "no relation"
            return (
                f"pair ({u}, {v}) carries {rel} but its image ({x}, {y}) "
                f"carries {have}"
            )
    return None


def find_homomorphism(source: MixedGraph, target: MixedGraph) -> Homomorphism | None:
    """Exact search for a homomorphism; None proves there is none.

    Backtracking with forward checking: assigning an image filters the
    candidate sets of unassigned neighbors down to exact relation
    matches.  Deterministic: smallest candidate set first, ties and
    values in index order.
    """
    if source.signature != target.signature:
        raise ValueError(
            f"signature mismatch: {source.signature} vs {target.signature}"
        )
    ns, nt = source.order, target.order
    if ns == 0:
        return Homomorphism(0, nt, ())
    if nt == 0:
        return None

    domains: list[set[int]] = [set(range(nt)) for _ in range(ns)]
    image = [-1] * ns

    def assign(u: int, x: int) -> list[tuple[int, set[int]]] | None:
        trail: list[tuple[int, set[int]]] = []
        for w, rel in source.neighbors(u).items():
            if image[w] >= 0:
                continue
            keep = {
                y
                for y in domains[w]
                if y != x and target.relation_from(x, y) == rel
            }
            if keep == domains[w]:
                continue
            trail.append((w, domains[w]))
            domains[w] = keep
            if not keep:
                for ww, old in trail:
                    domains[ww] = old
                return None
        return trail

    def search(depth: int) -> bool:
        if depth == ns:
            return True
        u = min(
            (v for v in range(ns) if image[v] < 0),
            key=lambda v: (len(domains[v]), v),
        )
        for x in sorted(domains[u]):
            image[u] = x
            trail = assign(u, x)
            if trail is not None:
                if search(depth + 1):
                    return True
                for w, old in trail:
                    domains[w] = old
            image[u] = -1
        return False

    if not search(0):
        return None
    hom = Homomorphism(ns, nt, tuple(image))
    audit = check_homomorphism(source, target, hom.mapping)
    assert audit is None, f"solver produced an invalid homomorphism: {audit}"
    return hom


@dataclass(frozen=True)
class Partition:
    """An ordered partition of the vertices into color classes."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        return {v: i for i, block in enumerate(self.blocks) for v in block}

    @classmethod
    def from_coloring(cls, coloring: dict[int, int]) -> "Partition":
        by_color: dict[int, list[int]] = {}
        for v in sorted(coloring):
            by_color.setdefault(coloring[v], []).append(v)
        return cls(tuple(tuple(by_color[c]) for c in sorted(by_color)))


def check_partition(graph: MixedGraph, partition: Partition) -> str | None:
    """Audit that a partition induces a homomorphic image; None when it does.

    Blocks must cover every vertex exactly once, be non-empty and
    independent, and every ordered pair of blocks may be joined by at
    most one relation kind.
    """
    seen: set[int] = set()
    block_of: dict[int, int] = {}
    for i, block in enumerate(partition.blocks):
        if not block:
            return f"block {i} is empty"
        for v in block:
            if not 0 <= v < graph.order:
                return f"vertex {v} in block {i} out of range"
            if v in seen:
                return f"vertex {v} appears in two blocks"
            seen.add(v)
            block_of[v] = i
    if len(seen) != graph.order:
        missing = min(set(range(graph.order)) - seen)
        return f"vertex {missing} is in no block"
    joined: dict[tuple[int, int], RelationKind] = {}
    for u, v, rel in graph.relations():
        i, j = block_of[u], block_of[v]
        if i == j:
            return f"block {i} is not independent: relation on ({u}, {v})"
        key = (i, j) if i < j else (j, i)
        need = rel if i < j else rel.dual()
        have = joined.get(key)
        if have is None:
            joined[key] = need
        elif have != need:
            return (
                f"blocks {key[0]} and {key[1]} are joined by two kinds: "
                f"{have} and {need}"
            )
    return None


def quotient(graph: MixedGraph, partition: Partition) -> tuple[MixedGraph, Homomorphism]:
    """The homomorphic image induced by a valid partition, with its map."""
    audit = check_partition(graph, partition)
    if audit is not None:
        raise ValueError(f"invalid partition: {audit}")
    block_of = partition.block_of()
    image = MixedGraph(graph.signature, partition.k)
    for u, v, rel in graph.relations():
        i, j = block_of[u], block_of[v]
        if image.relation_from(i, j) is None:
            image.add_relation(i, j, rel)
    hom = Homomorphism(graph.order, partition.k, tuple(block_of[v] for v in range(graph.order)))
    audit = check_homomorphism(graph, image, hom.mapping)
    assert audit is None, f"quotient construction broke: {audit}"
    return image, hom


def special_clique(graph: MixedGraph) -> set[int]:
    """A greedy clique in the special-pair graph; its size bounds chi below.

    Vertices pairwise joined by special 2-paths need pairwise distinct
    images under any homomorphism.  One greedy pass is seeded from every
    vertex (extending by descending special-pair degree, ties by index)
    and the largest clique found wins; a single degree-ordered pass can
    seed itself on vertices outside the big cliques.
    """
    pairs = special_pairs(graph)
    adj: dict[int, set[int]] = {v: set() for v in range(graph.order)}
    for u, w in pairs:
        adj[u].add(w)
        adj[w].add(u)
    by_degree = sorted(range(graph.order), key=lambda v: (-len(adj[v]), v))
    best: list[int] = []
    for seed in range(graph.order):
        chosen = [seed]
        allowed = set(adj[seed])
        for v in by_degree:
            if v in allowed:
                chosen.append(v)
                allowed &= adj[v]
        if len(chosen) > len(best):
            best = chosen
    return set(best)


@dataclass(frozen=True)
class ChromaticResult:
    """Outcome of a chromatic-number search.

    When ``exact``, lower == upper is the chromatic number and
    ``witness`` is an optimal partition.  Otherwise the budget ran out
    and only the bounds are certified (witness, if any, attains upper).
    """

    lower: int
    upper: int
    witness: Partition | None
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


def chromatic_number(
    graph: MixedGraph,
    lower_hint: int = 0,
    upper_hint: int | None = None,
    budget: int = 10_000_000,
) -> ChromaticResult:
    """Exact chromatic number by branch and bound over partitions.

    Vertices are placed in descending underlying-degree order (ties by
    index), existing blocks before a new one.  ``lower_hint`` and
    ``upper_hint`` must be certified bounds when given; the upper hint
    prunes, the lower hint allows early termination.  Each placement
    attempt costs one node; when the budget runs out the best bounds so
    far are returned with ``exhausted`` set.
    """
    n = graph.order
    if n == 0:
        return ChromaticResult(0, 0, Partition(()), 0, False)
    clique = special_clique(graph)
    lower = max(lower_hint, len(clique), 2 if graph.e_count > 0 else 1)
    cap = n if upper_hint is None else min(upper_hint, n)
    if lower > cap:
        raise ValueError(f"hints conflict: lower {lower} exceeds upper {cap}")

    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    block_of = [-1] * n
    blocks: list[list[int]] = []
    joined: dict[tuple[int, int], RelationKind] = {}

    best_k: int | None = None
    best_blocks: tuple[tuple[int, ...], ...] | None = None
    nodes = 0
    out_of_budget = False

    def try_place(v: int, bi: int) -> list[tuple[int, int]] | None:
        added: list[tuple[int, int]] = []
        for w, rel in graph.neighbors(v).items():
            bj = block_of[w]
            if bj < 0:
                continue
            if bj == bi:
                break
            key = (bi, bj) if bi < bj else (bj, bi)
            need = rel if bi < bj else rel.dual()
            have = joined.get(key)
            if have is None:
                joined[key] = need
                added.append(key)
            elif have != need:
                break
        else:
            block_of[v] = bi
            return added
        for key in added:
            del joined[key]
        return None

    def unplace(v: int, added: list[tuple[int, int]]) -> None:
        block_of[v] = -1
        for key in added:
            del joined[key]

    def search(idx: int) -> None:
        nonlocal best_k, best_blocks, nodes, out_of_budget
        if out_of_budget:
            return
        bound = best_k if best_k is not None else cap + 1
        if len(blocks) >= bound:
            return
        if idx == n:
            best_k = len(blocks)
            best_blocks = tuple(tuple(b) for b in blocks)
            return
        v = order[idx]
        for bi in range(len(blocks)):
            nodes += 1
            if nodes > budget:
                out_of_budget = True
                return
            added = try_place(v, bi)
            if added is not None:
                blocks[bi].append(v)
                search(idx + 1)
                blocks[bi].pop()
                unplace(v, added)
                if out_of_budget or best_k == lower:
                    return
                if len(blocks) >= (best_k if best_k is not None else cap + 1):
                    return
        if len(blocks) + 1 <= (best_k if best_k is not None else cap + 1) - 1:
            nodes += 1
            if nodes > budget:
                out_of_budget = True
                return
            bi = len(blocks)
            blocks.append([])
            added = try_place(v, bi)
            if added is not None:
                blocks[bi].append(v)
                search(idx + 1)
                blocks[bi].pop()
                unplace(v, added)
            blocks.pop()

    search(0)

    if best_blocks is not None:
        witness = Partition(best_blocks)
        audit = check_partition(graph, witness)
        assert audit is None, f"search produced an invalid partition: {audit}"
    else:
        witness = None

    if out_of_budget:
        if witness is None and cap == n:
            witness = Partition(tuple((v,) for v in range(n)))
        upper = best_k if best_k is not None else (cap if upper_hint is not None else n)
        return ChromaticResult(lower, upper, witness, nodes, True)

    if best_k is None:
        raise ValueError(
            f"no partition within upper_hint={upper_hint}; the hint was not a valid bound"
        )
    return ChromaticResult(best_k, best_k, witness, nodes, False)
