import itertools

import pytest

from mixedgraphs import (
    ColorSignature,
    MixedGraph,
    build_hk,
    build_special_gadget,
    check_acyclic_coloring,
    hk_acyclic_coloring,
    is_special_2path,
    special_clique,
    special_pairs,
)


def test_hk_order_follows_the_closed_form():
    for (m, n), k in (((1, 0), 3), ((0, 2), 3), ((1, 1), 3), ((1, 0), 4)):
        sig = ColorSignature(m, n)
        h = build_hk(sig, k)
        p = sig.p
        from math import comb
        expected = k * (k - 1) + k * p ** (k - 1) + comb(k, 2) * p ** (2 * (k - 1))
        assert h.graph.order == expected
        assert h.graph.validate() is None


def test_hk_3_over_one_arc_color_has_order_66():
    h = build_hk(ColorSignature(1, 0), 3)
    assert h.graph.order == 66
    assert len(h.bottoms) == 6
    assert len(h.tops) == 12
    assert len(h.internals) == 48
    assert len(h.roles) == 66


def test_hk_bottoms_spell_out_each_top_vector():
    h = build_hk(ColorSignature(1, 1), 3)
    for (i, vec), t in h.tops.items():
        for j, kind in enumerate(vec):
            b = h.bottoms[(i, j)]
            assert h.graph.relation_from(b, t) == kind


def test_hk_internal_vertices_form_special_2paths():
    h = build_hk(ColorSignature(1, 0), 3)
    for (u, v), mid in h.internals.items():
        assert sorted(h.graph.neighbors(mid)) == sorted((u, v))
        assert is_special_2path(h.graph, u, mid, v)


def test_hk_cross_group_tops_are_special_pairs():
    h = build_hk(ColorSignature(1, 0), 3)
    pairs = special_pairs(h.graph)
    tops = sorted(v for vs in (h.group_tops(i) for i in range(3)) for v in vs)
    for u, v in itertools.combinations(tops, 2):
        assert (u, v) in pairs
    assert len(special_clique(h.graph)) >= 12


def test_hk_acyclic_coloring_uses_k_colors_and_verifies():
    for sig in (ColorSignature(1, 0), ColorSignature(0, 2)):
        h = build_hk(sig, 3)
        coloring = hk_acyclic_coloring(h)
        assert set(coloring) == set(range(h.graph.order))
        assert set(coloring.values()) == {1, 2, 3}
        assert check_acyclic_coloring(h.graph, coloring) is None


def test_hk_tops_share_their_group_color():
    h = build_hk(ColorSignature(1, 0), 4)
    coloring = hk_acyclic_coloring(h)
    for i in range(4):
        assert {coloring[t] for t in h.group_tops(i)} == {i + 1}


def test_hk_determinism():
    a = build_hk(ColorSignature(1, 0), 3)
    b = build_hk(ColorSignature(1, 0), 3)
    assert list(a.graph.relations()) == list(b.graph.relations())
    assert a.roles == b.roles


def test_hk_input_validation():
    with pytest.raises(ValueError):
        build_hk(ColorSignature(1, 0), 2)
    with pytest.raises(ValueError):
        build_hk(ColorSignature(0, 1), 3)


def test_gadget_shape_and_special_paths():
    sig = ColorSignature(1, 0)
    for t in (2, 3, 4, 5):
        g = build_special_gadget(sig, t)
        assert g.order == t + t * (t - 1) // 2
        assert g.validate() is None
        mids = range(t, g.order)
        seen = set()
        for mid in mids:
            ends = sorted(g.neighbors(mid))
            assert len(ends) == 2
            assert is_special_2path(g, ends[0], mid, ends[1])
            seen.add(tuple(ends))
        assert seen == set(itertools.combinations(range(t), 2))


def test_gadget_branch_vertices_form_a_special_clique():
    g = build_special_gadget(ColorSignature(1, 0), 4)
    assert set(range(4)) <= special_clique(g)


def test_gadget_over_two_edge_colors():
    g = build_special_gadget(ColorSignature(0, 2), 3)
    assert g.order == 6
    for mid in range(3, 6):
        ends = sorted(g.neighbors(mid))
        assert is_special_2path(g, ends[0], mid, ends[1])


def test_gadget_input_validation():
    with pytest.raises(ValueError):
        build_special_gadget(ColorSignature(1, 0), 1)
    with pytest.raises(ValueError):
        build_special_gadget(ColorSignature(0, 1), 3)
