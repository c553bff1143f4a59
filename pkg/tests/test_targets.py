import random
import warnings

import pytest

from mixedgraphs import (
    ColorSignature,
    CompleteMixedTarget,
    MixedGraph,
    PropertySpec,
    PropertyViolatedError,
    arc_in,
    arc_out,
    check_homomorphism,
    check_property_q,
    extend_regular,
    greedy_homomorphism,
    lemma_parameters,
    paley_tournament,
    sample_complete,
    search_q_target,
)
from strategies import (
    complete_graph,
    directed_cycle,
    directed_path,
    same_graph,
    transitive_tournament,
)

SIG = ColorSignature(1, 0)


# --- complete targets ----------------------------------------------------------


def test_sample_complete_is_deterministic_and_complete():
    a = sample_complete(SIG, 6, 42)
    b = sample_complete(SIG, 6, 42)
    c = sample_complete(SIG, 6, 43)
    assert same_graph(a.graph, b.graph)
    assert not same_graph(a.graph, c.graph)
    assert a.seed == 42
    assert a.graph.e_count == 15


def test_complete_target_rejects_missing_pairs():
    g = MixedGraph(SIG, 3)
    g.add_arc(0, 1, 1)
    with pytest.raises(ValueError):
        CompleteMixedTarget(g)
    g.add_arc(1, 2, 1)
    g.add_arc(0, 2, 1)
    assert CompleteMixedTarget(g).order == 3


# --- the sparse-graph parameter recipe -------------------------------------------


def test_lemma_parameters_at_the_stated_scale():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        c, spec = lemma_parameters(SIG, 5)
    assert c == 2 * 4**2 * 2**4 == 512
    assert spec.t == 4
    assert spec.minimums == (16, 13, 10, 7, 4)


def test_lemma_parameters_other_signature():
    c, spec = lemma_parameters(ColorSignature(1, 1), 5)
    assert c == 2 * 4**3 * 3**4
    assert spec.minimums == (16, 13, 10, 7, 4)


def test_lemma_parameters_warn_below_theorem_scale():
    with pytest.warns(UserWarning):
        lemma_parameters(SIG, 3)
    with pytest.raises(ValueError):
        lemma_parameters(SIG, 1)


# --- adjacency property Q --------------------------------------------------------


def test_paley_7_satisfies_the_order_7_property():
    target = paley_tournament(7)
    assert check_property_q(target, PropertySpec(1, (1, 3))) is None


def test_paley_11_satisfies_pairs():
    target = paley_tournament(11)
    assert check_property_q(target, PropertySpec(2, (1, 4, 1))) is None


def test_first_violation_is_reported_in_scan_order():
    target = CompleteMixedTarget(transitive_tournament(4))
    violation = check_property_q(target, PropertySpec(1, (1, 1)))
    assert violation is not None
    assert violation.vertices == (0,)
    assert violation.kinds == (arc_in(1),)
    assert violation.count == 0
    assert violation.required == 1
    assert "0" in str(violation)


def test_zero_tuple_minimum_checks_the_order():
    target = CompleteMixedTarget(transitive_tournament(3))
    violation = check_property_q(target, PropertySpec(0, (4,)))
    assert violation is not None
    assert violation.vertices == ()


def test_property_question_must_fit_the_order():
    target = CompleteMixedTarget(transitive_tournament(3))
    with pytest.raises(ValueError):
        check_property_q(target, PropertySpec(3, (1, 1, 1, 1)))


def test_search_q_target_is_reproducible():
    spec = PropertySpec(1, (1, 3))
    a = search_q_target(SIG, 7, spec, 100, 16)
    b = search_q_target(SIG, 7, spec, 100, 16)
    assert a is not None and b is not None
    assert same_graph(a.graph, b.graph)
    assert a.seed == b.seed
    assert check_property_q(a, spec) is None


def test_search_q_target_gives_up_honestly():
    # no order-3 tournament has 3 out-neighbors for anyone
    spec = PropertySpec(1, (1, 3))
    assert search_q_target(SIG, 4, spec, 50, 0) is None


# --- greedy embedding -------------------------------------------------------------


def test_greedy_embedding_into_paley_7():
    target = paley_tournament(7)
    for source in (directed_path(5), directed_cycle(6)):
        embedding = greedy_homomorphism(source, target)
        mapping = embedding.homomorphism.mapping
        assert check_homomorphism(source, target.graph, mapping) is None
        assert len(embedding.steps) == source.order
        for step in embedding.steps:
            assert mapping[step.vertex] == step.image
            assert 0 <= step.image < target.order
            assert step.candidates >= 1
            assert step.blocked >= 0
            assert len(step.images) == len(step.kinds)


def test_greedy_violation_pinpoints_the_query():
    target = CompleteMixedTarget(transitive_tournament(3))
    with pytest.raises(PropertyViolatedError) as exc_info:
        greedy_homomorphism(directed_cycle(3), target)
    exc = exc_info.value
    assert len(exc.images) == len(exc.kinds) >= 1
    assert all(kind in (arc_out(1), arc_in(1)) for kind in exc.kinds)
    assert f"vertex {exc.vertex}" in str(exc)


def test_greedy_rejects_signature_mismatch():
    target = CompleteMixedTarget(complete_graph(3))
    with pytest.raises(ValueError):
        greedy_homomorphism(directed_path(3), target)


# --- regular extension --------------------------------------------------------------


def test_extend_regular_adds_exactly_two_vertices():
    target = paley_tournament(7)
    extended, hom = extend_regular(directed_cycle(5), target)
    assert extended.order == 9
    assert check_homomorphism(directed_cycle(5), extended.graph, hom.mapping) is None

    target11 = paley_tournament(11)
    extended11, hom11 = extend_regular(transitive_tournament(4), target11)
    assert extended11.order == 13
    assert (
        check_homomorphism(transitive_tournament(4), extended11.graph, hom11.mapping)
        is None
    )


def test_extended_target_stays_complete():
    target = paley_tournament(7)
    extended, _ = extend_regular(directed_cycle(5), target)
    n = extended.order
    assert extended.graph.e_count == n * (n - 1) // 2


def test_extend_regular_validates_the_source():
    target = paley_tournament(7)
    with pytest.raises(ValueError):
        extend_regular(directed_path(3), target)  # not regular
    disconnected = MixedGraph(SIG, 4)
    disconnected.add_arc(0, 1, 1)
    disconnected.add_arc(2, 3, 1)
    with pytest.raises(ValueError):
        extend_regular(disconnected, target)
    with pytest.raises(ValueError):
        extend_regular(MixedGraph(SIG, 3), target)  # no relations


# --- quadratic residue tournaments ----------------------------------------------------


def test_paley_structure():
    for q in (3, 7, 11, 19):
        g = paley_tournament(q).graph
        assert g.order == q
        assert g.e_count == q * (q - 1) // 2
        out = sum(1 for v in range(1, q) if g.relation_from(0, v) == arc_out(1))
        assert out == (q - 1) // 2


def test_paley_rotation_symmetry():
    g = paley_tournament(7).graph
    for u in range(7):
        for v in range(7):
            if u != v:
                shifted = g.relation_from((u + 1) % 7, (v + 1) % 7)
                assert g.relation_from(u, v) == shifted


def test_paley_rejects_bad_moduli():
    for q in (2, 5, 9, 15, 13):
        with pytest.raises(ValueError):
            paley_tournament(q)
