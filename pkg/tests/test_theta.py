import itertools
import random

import pytest
from hypothesis import given

from conftest import graphs
from spectheta.families import (
    make_G4,
    make_S,
    make_S_minus,
    make_double_star,
    make_star,
    make_theta,
)
from spectheta.graphs import Graph
from spectheta.theta import (
    ThetaWitness,
    contains_path,
    contains_theta,
    is_theta133_free,
    oracle_contains_subgraph,
)

PATTERNS = ((2, 2), (2, 3), (3, 3), (2, 4))


def complete(n):
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def test_pattern_found_in_itself():
    for p, q in PATTERNS:
        w = contains_theta(make_theta(p, q), p, q)
        assert w is not None
        assert len(w.path_p) == p + 1 and len(w.path_q) == q + 1


def test_distinct_patterns_do_not_cross_match():
    # the (1,3,3) shape has no adjacent pair with two common neighbors
    assert contains_theta(make_theta(3, 3), 2, 2) is None
    # and the (1,2,2) shape is too small to hold longer paths
    assert contains_theta(make_theta(2, 2), 3, 3) is None


def test_witness_is_validated():
    g = make_theta(3, 3)
    w = contains_theta(g, 3, 3)
    w.validate(g)
    bogus = ThetaWitness(anchors=(0, 1), path_p=(0, 2, 3, 1), path_q=(0, 2, 5, 1))
    with pytest.raises(ValueError):
        bogus.validate(g)  # reuses internal vertex 2
    with pytest.raises(ValueError):
        ThetaWitness((0, 3), (0, 2, 3), (0, 4, 5, 3)).validate(g)  # anchors not adjacent


def test_argument_validation():
    g = complete(4)
    with pytest.raises(ValueError):
        contains_theta(g, 1, 3)
    with pytest.raises(ValueError):
        contains_theta(g, 3, 2)


def test_small_complete_graphs():
    assert is_theta133_free(complete(5))  # needs six vertices
    assert not is_theta133_free(complete(6))
    assert contains_theta(complete(4), 2, 2) is not None


def test_families_are_theta133_free():
    for g in (
        make_S(12, 2),
        make_S_minus(12, 2),
        make_star(8),
        make_double_star(3, 5),
        make_G4(6, 3),
        make_G4(5, 0),
    ):
        assert is_theta133_free(g)


def test_supergraphs_of_the_pattern_are_caught():
    g = make_theta(3, 3)
    assert not is_theta133_free(g)
    assert not is_theta133_free(g.with_edge(2, 4))
    pendant = Graph(7, list(g.adj) + [0]).with_edge(3, 6)
    assert not is_theta133_free(pendant)


def test_disconnected_detection():
    g = make_theta(3, 3)
    shifted = Graph(8, [0, 0] + [row << 2 for row in g.adj])
    assert contains_theta(shifted, 3, 3) is not None


@given(graphs(max_n=8))
def test_detector_matches_oracle(g):
    for p, q in PATTERNS:
        fast = contains_theta(g, p, q)
        slow = oracle_contains_subgraph(g, make_theta(p, q))
        assert (fast is not None) == slow, (g, (p, q))
        if fast is not None:
            fast.validate(g)


def test_detector_matches_oracle_on_seeded_dense_graphs():
    rng = random.Random(23)
    for _ in range(120):
        n = rng.randint(6, 9)
        density = rng.choice([0.3, 0.5, 0.7])
        g = Graph.from_edges(
            n, [e for e in itertools.combinations(range(n), 2) if rng.random() < density]
        )
        for p, q in PATTERNS:
            fast = contains_theta(g, p, q)
            slow = oracle_contains_subgraph(g, make_theta(p, q))
            assert (fast is not None) == slow


def test_contains_path_known_cases():
    p5 = Graph.from_edges(5, [(i, i + 1) for i in range(4)])
    assert contains_path(p5, 5) is not None
    assert contains_path(p5, 6) is None
    assert contains_path(complete(4), 4) is not None
    assert contains_path(make_star(6), 4) is None  # stars stop at three vertices
    w = contains_path(p5, 3)
    assert len(w) == 3 and all(p5.has_edge(a, b) for a, b in zip(w, w[1:]))


def test_oracle_standalone():
    assert oracle_contains_subgraph(complete(4), complete(3))
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not oracle_contains_subgraph(c4, complete(3))
    assert oracle_contains_subgraph(c4, Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert oracle_contains_subgraph(complete(3), Graph(0, []))
    with pytest.raises(ValueError):
        oracle_contains_subgraph(complete(9), complete(9))  # pattern too large


def test_free_graphs_with_high_degree_anchors():
    # both endpoints of every edge need degree >= 3 before any search runs;
    # the double star has many such edges yet stays free
    g = make_double_star(4, 4)
    assert contains_theta(g, 2, 2) is None
    assert contains_theta(g, 3, 3) is None
