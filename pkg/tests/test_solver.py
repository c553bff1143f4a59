import itertools
import random

import pytest
from hypothesis import given, settings

from mixedgraphs import (
    ColorSignature,
    MixedGraph,
    Partition,
    check_homomorphism,
    check_partition,
    chromatic_number,
    find_homomorphism,
    quotient,
    special_clique,
)
from strategies import (
    complete_graph,
    directed_cycle,
    directed_path,
    mixed_graphs,
    transitive_tournament,
)


def _partitions(n: int):
    """All set partitions of range(n), via restricted growth strings."""
    labels = [0] * n
    def rec(i: int, used: int):
        if i == n:
            blocks: dict[int, list[int]] = {}
            for v, b in enumerate(labels):
                blocks.setdefault(b, []).append(v)
            yield Partition(tuple(tuple(blocks[b]) for b in sorted(blocks)))
            return
        for b in range(used + 1):
            labels[i] = b
            yield from rec(i + 1, used + (b == used))
    if n == 0:
        yield Partition(())
        return
    yield from rec(0, 0)


def _oracle_chi(g: MixedGraph) -> int:
    return min(
        p.k for p in _partitions(g.order) if check_partition(g, p) is None
    )


def test_named_chromatic_numbers():
    for n in range(1, 6):
        assert chromatic_number(complete_graph(n)).k == n
    assert chromatic_number(directed_path(3)).k == 3
    assert chromatic_number(directed_cycle(5)).k == 5
    assert chromatic_number(directed_cycle(4)).k == 4
    assert chromatic_number(MixedGraph(ColorSignature(1, 0), 3)).k == 1
    assert chromatic_number(MixedGraph(ColorSignature(1, 0), 0)).k == 0


def test_solver_matches_partition_oracle_on_random_graphs():
    rng = random.Random(1405)
    sigs = [ColorSignature(1, 0), ColorSignature(0, 2), ColorSignature(1, 1)]
    for trial in range(30):
        sig = sigs[trial % len(sigs)]
        n = rng.randint(1, 6)
        g = MixedGraph(sig, n)
        kinds = sig.kinds()
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    g.add_relation(u, v, rng.choice(kinds))
        result = chromatic_number(g)
        assert result.exact
        assert result.k == _oracle_chi(g)
        assert check_partition(g, result.witness) is None


@given(mixed_graphs(max_order=6))
@settings(max_examples=40, deadline=None)
def test_witness_partition_is_always_valid(g):
    result = chromatic_number(g)
    assert result.exact
    assert result.witness.k == result.k
    assert check_partition(g, result.witness) is None


@given(mixed_graphs(max_order=6))
@settings(max_examples=40, deadline=None)
def test_special_clique_never_exceeds_chi(g):
    clique = special_clique(g)
    assert len(clique) <= chromatic_number(g).k


def test_budget_exhaustion_reports_honest_bounds():
    g = directed_cycle(5)
    result = chromatic_number(g, budget=3)
    assert result.exhausted
    assert not result.exact
    assert result.lower <= 5 <= result.upper
    with pytest.raises(ValueError):
        result.k


def test_hints_are_respected():
    g = directed_cycle(5)
    assert chromatic_number(g, lower_hint=5).k == 5
    assert chromatic_number(g, upper_hint=5).k == 5
    with pytest.raises(ValueError):
        chromatic_number(g, upper_hint=4)


def test_partition_checker_rejects_bad_partitions():
    g = directed_path(3)
    dependent = Partition(((0, 1), (2,)))
    assert check_partition(g, dependent) is not None
    endpoints_merged = Partition(((0, 2), (1,)))
    assert check_partition(g, endpoints_merged) is not None
    # arcs 0->1 and 2->3 cross the blocks {0,3},{1,2} in opposite directions
    h = MixedGraph(ColorSignature(1, 0), 4)
    h.add_arc(0, 1, 1)
    h.add_arc(2, 3, 1)
    assert check_partition(h, Partition(((0, 3), (1, 2)))) is not None
    assert check_partition(h, Partition(((0, 2), (1, 3)))) is None


def test_partition_checker_requires_exact_cover():
    g = directed_path(2)
    assert check_partition(g, Partition(((0,),))) is not None
    assert check_partition(g, Partition(((0, 1), (1,)))) is not None


def test_quotient_produces_a_checked_image():
    g = directed_cycle(6)
    partition = Partition(((0, 3), (1, 4), (2, 5)))
    assert check_partition(g, partition) is None
    image, hom = quotient(g, partition)
    assert image.order == 3
    assert check_homomorphism(g, image, hom.mapping) is None


def test_find_homomorphism_known_cases():
    assert find_homomorphism(directed_cycle(5), directed_cycle(3)) is None
    assert find_homomorphism(directed_cycle(3), directed_cycle(5)) is None
    hom = find_homomorphism(directed_cycle(6), directed_cycle(3))
    assert hom is not None
    hom = find_homomorphism(directed_path(4), directed_cycle(5))
    assert hom is not None
    assert check_homomorphism(directed_path(4), directed_cycle(5), hom.mapping) is None


def test_find_homomorphism_signature_mismatch():
    with pytest.raises(ValueError):
        find_homomorphism(directed_path(2), complete_graph(2))


def test_find_homomorphism_can_collapse_non_adjacent_vertices():
    g = MixedGraph(ColorSignature(1, 0), 3)
    g.add_arc(0, 1, 1)
    g.add_arc(2, 1, 1)
    hom = find_homomorphism(g, directed_path(2))
    assert hom is not None
    assert hom[0] == hom[2] == 0


def test_check_homomorphism_reports_failures():
    g = directed_path(3)
    t = directed_path(2)
    assert check_homomorphism(g, t, (0, 1, 0)) is not None
    assert check_homomorphism(g, t, (1, 0, 1)) is not None
    with pytest.raises(ValueError):
        check_homomorphism(g, t, (0, 1))
    with pytest.raises(ValueError):
        check_homomorphism(g, t, (0, 1, 5))


def test_homomorphism_into_tournament_exists_for_any_acyclic_source():
    source = transitive_tournament(4)
    hom = find_homomorphism(source, transitive_tournament(4))
    assert hom is not None


@given(mixed_graphs(max_order=5))
@settings(max_examples=30, deadline=None)
def test_every_graph_maps_into_its_own_quotient(g):
    result = chromatic_number(g)
    image, _ = quotient(g, result.witness)
    assert find_homomorphism(g, image) is not None
