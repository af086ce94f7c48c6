from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redblue import (
    GraphError,
    UncolouredView,
    exhaustive_matching_size,
    hall_violator,
    matching_size,
    max_matching,
    odd_components,
)
from conftest import complete_multipartite_view, complete_view, cycle_view
from oracles import matching_size_by_edge_subsets, tutte_berge_deficiency_by_subsets


def test_k4_certificate():
    cert = max_matching(complete_view(4))
    assert cert.covered == 4
    assert cert.deficiency == 0
    assert cert.berge_witness == frozenset()
    assert cert.edges == ((0, 1), (2, 3))  # lexicographic tie-break


def test_star_certificate():
    star = UncolouredView.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    cert = max_matching(star)
    assert cert.covered == 2
    assert cert.deficiency == 2
    assert cert.berge_witness == frozenset({0})
    assert odd_components(star, cert.berge_witness).value == 3


def test_c7_certificate():
    cert = max_matching(cycle_view(7))
    assert cert.covered == 6
    assert cert.deficiency == 1
    assert cert.berge_witness == frozenset()


def test_odd_components_examples():
    k4 = complete_view(4)
    assert odd_components(k4, set()).value == 0
    star = UncolouredView.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert odd_components(star, {0}).value == 3
    c6 = cycle_view(6)
    assert odd_components(c6, {0, 3}).value == 0  # two even arcs
    assert odd_components(c6, {0, 2}).value == 2  # arcs of order 1 and 3
    with pytest.raises(GraphError):
        odd_components(k4, {5})


def test_hall_violator_examples():
    k33 = complete_multipartite_view(3, 3)
    assert hall_violator(k33, [0, 1, 2], [3, 4, 5], 0) is None
    pinch = UncolouredView.from_edges(3, [(0, 2), (1, 2)])
    assert hall_violator(pinch, [0, 1], [2], 0) == frozenset({0, 1})
    assert hall_violator(pinch, [0, 1], [2], 1) is None
    with pytest.raises(GraphError):
        hall_violator(pinch, [0, 1], [1, 2], 0)


def test_empty_and_singleton():
    assert max_matching(UncolouredView(0, ())).covered == 0
    cert = max_matching(UncolouredView(1, (0,)))
    assert cert.deficiency == 1
    assert odd_components(UncolouredView(1, (0,)), cert.berge_witness).value == 1


def test_blossom_handles_odd_structures():
    # two triangles joined by a bridge: a classic blossom stress case
    g = UncolouredView.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    )
    assert matching_size(g) == 3
    # Petersen graph has a perfect matching
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    petersen = UncolouredView.from_edges(10, outer + spokes + inner)
    assert matching_size(petersen) == 5


def test_certificate_edges_are_a_valid_matching(small_graphs):
    for view in small_graphs:
        cert = max_matching(view)
        seen = set()
        for u, v in cert.edges:
            assert view.has_edge(u, v)
            assert u not in seen and v not in seen
            seen.update((u, v))
        assert cert.covered == 2 * len(cert.edges)
        assert cert.deficiency == view.n - cert.covered


def test_oracle_equivalence_on_corpus(small_graphs):
    for view in small_graphs:
        assert matching_size(view) == exhaustive_matching_size(view)


def test_edge_subset_oracle_spot_checks():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [p for p in pairs if rng.random() < 0.5]
        view = UncolouredView.from_edges(n, edges)
        assert matching_size(view) == matching_size_by_edge_subsets(view)


def test_berge_formula_on_corpus(small_graphs):
    for view in small_graphs:
        cert = max_matching(view)
        best, _ = tutte_berge_deficiency_by_subsets(view)
        assert cert.deficiency == best
        assert odd_components(view, cert.berge_witness).value == len(
            cert.berge_witness
        ) + cert.deficiency


def test_berge_formula_on_random_eight_vertex_graphs():
    rng = random.Random(0xBE6E)
    for _ in range(500):
        pairs = [(u, v) for u in range(8) for v in range(u + 1, 8)]
        edges = [p for p in pairs if rng.random() < rng.choice((0.2, 0.4, 0.6))]
        view = UncolouredView.from_edges(8, edges)
        cert = max_matching(view)
        best, _ = tutte_berge_deficiency_by_subsets(view)
        assert cert.deficiency == best
        assert odd_components(view, cert.berge_witness).value == len(
            cert.berge_witness
        ) + cert.deficiency


@st.composite
def random_views(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UncolouredView.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@given(random_views())
@settings(deadline=None)
def test_blossom_matches_exhaustive_oracle(view):
    assert matching_size(view) == exhaustive_matching_size(view)


@st.composite
def bipartite_instances(draw):
    left_n = draw(st.integers(min_value=1, max_value=5))
    right_n = draw(st.integers(min_value=1, max_value=5))
    n = left_n + right_n
    pairs = [(u, v) for u in range(left_n) for v in range(left_n, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, k in zip(pairs, keep) if k]
    defect = draw(st.integers(min_value=0, max_value=3))
    return UncolouredView.from_edges(n, edges), list(range(left_n)), list(
        range(left_n, n)
    ), defect


@given(bipartite_instances())
@settings(deadline=None)
def test_hall_violator_agrees_with_matching(case):
    view, left, right, defect = case
    covered_left = matching_size(view)  # every edge crosses left/right
    violator = hall_violator(view, left, right, defect)
    if violator is None:
        assert covered_left >= len(left) - defect
    else:
        assert covered_left < len(left) - defect
        in_right = set()
        for u in violator:
            in_right.update(v for v in right if view.has_edge(u, v))
        assert len(in_right) < len(violator) - defect
