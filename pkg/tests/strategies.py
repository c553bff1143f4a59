"""Shared builders and hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from mixedgraphs import ColorSignature, MixedGraph

SIGNATURES = tuple(
    ColorSignature(m, n) for m, n in ((1, 0), (0, 1), (0, 2), (1, 1), (2, 0))
)


def directed_cycle(length: int, color: int = 1) -> MixedGraph:
    g = MixedGraph(ColorSignature(1, 0), length)
    for i in range(length):
        g.add_arc(i, (i + 1) % length, color)
    return g


def directed_path(vertices: int) -> MixedGraph:
    g = MixedGraph(ColorSignature(1, 0), vertices)
    for i in range(vertices - 1):
        g.add_arc(i, i + 1, 1)
    return g


def complete_graph(order: int, signature: ColorSignature = ColorSignature(0, 1)) -> MixedGraph:
    g = MixedGraph(signature, order)
    for u in range(order):
        for v in range(u + 1, order):
            g.add_edge(u, v, 1)
    return g


def transitive_tournament(order: int) -> MixedGraph:
    g = MixedGraph(ColorSignature(1, 0), order)
    for u in range(order):
        for v in range(u + 1, order):
            g.add_arc(u, v, 1)
    return g


def same_graph(a: MixedGraph, b: MixedGraph) -> bool:
    return (
        a.signature == b.signature
        and a.order == b.order
        and list(a.relations()) == list(b.relations())
    )


@st.composite
def mixed_graphs(draw, max_order: int = 7, signatures=SIGNATURES) -> MixedGraph:
    sig = draw(st.sampled_from(signatures))
    order = draw(st.integers(1, max_order))
    g = MixedGraph(sig, order)
    kinds = sig.kinds()
    for u in range(order):
        for v in range(u + 1, order):
            rel = draw(st.one_of(st.none(), st.sampled_from(kinds)))
            if rel is not None:
                g.add_relation(u, v, rel)
    return g
