import networkx as nx
import numpy as np
import pytest

from permsplit.exceptions import DegreeMismatchError, GraphFormatError, InvalidGraphError, PermsplitError
from permsplit.graph import (
    AdjacencyMatrix, conjugationAction, degreeMultiset, edgeCount, formatGraph, graphIso,
    parseGraph, randomGraph, readGraph, triangleCount, writeGraph
)
from permsplit.permutation import Permutation, compose, identity, invert, randomPermutation


def toNetworkx(m):
    graph = nx.Graph()
    graph.add_nodes_from(range(1, m.n + 1))
    graph.add_edges_from(m.edges())
    return graph


def test_relabeling_example():
    p3 = AdjacencyMatrix.fromEdges(3, [(1, 2), (2, 3)])
    relabeled = conjugationAction(3).apply(Permutation.fromImages([2, 1, 3]), p3)
    assert relabeled.edges() == [(1, 2), (1, 3)]


def test_action_law(rng):
    for n in range(1, 7):
        action = conjugationAction(n)
        m = randomGraph(n, 0.5, rng)
        assert action.apply(identity(n), m) == m
        for _ in range(10):
            g, h = randomPermutation(n, rng), randomPermutation(n, rng)
            assert action.apply(compose(g, h), m) == action.apply(h, action.apply(g, m))


def test_encoding_is_injective(rng):
    action = conjugationAction(5)
    graphs = {randomGraph(5, 0.5, rng) for _ in range(200)}
    encodings = {action.encode(m) for m in graphs}
    assert len(encodings) == len(graphs)


def test_relabeling_preserves_invariants(rng):
    for n in range(1, 11):
        action = conjugationAction(n)
        m = randomGraph(n, 0.4, rng)
        image = action.apply(randomPermutation(n, rng), m)
        assert degreeMultiset(image) == degreeMultiset(m)
        assert edgeCount(image) == edgeCount(m)
        assert triangleCount(image) == triangleCount(m)


def test_invariants_of_small_graphs():
    k4 = AdjacencyMatrix.fromEdges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    assert triangleCount(k4) == 4
    assert edgeCount(k4) == 6
    assert degreeMultiset(k4) == (3, 3, 3, 3)


def test_invalid_matrices():
    with pytest.raises(InvalidGraphError):
        AdjacencyMatrix([[0, 1], [0, 0]])
    with pytest.raises(InvalidGraphError):
        AdjacencyMatrix([[1, 0], [0, 0]])
    with pytest.raises(InvalidGraphError):
        AdjacencyMatrix([[0, 2], [2, 0]])
    with pytest.raises(DegreeMismatchError):
        AdjacencyMatrix(np.zeros((2, 3)))
    with pytest.raises(DegreeMismatchError):
        conjugationAction(3).apply(identity(3), AdjacencyMatrix(np.zeros((4, 4))))
    with pytest.raises(InvalidGraphError):
        AdjacencyMatrix.fromEdges(3, [(1, 4)])
    with pytest.raises(PermsplitError):
        randomGraph(3, 1.5, np.random.default_rng(0))


def test_empty_graphs_give_the_identity():
    empty = AdjacencyMatrix(np.zeros((4, 4)))
    result = graphIso(empty, empty)
    assert result.witness == identity(4)


def test_triangle_and_path_are_not_isomorphic():
    k3 = AdjacencyMatrix.fromEdges(3, [(1, 2), (2, 3), (1, 3)])
    p3 = AdjacencyMatrix.fromEdges(3, [(1, 2), (2, 3)])
    result = graphIso(k3, p3)
    assert not result.found and result.proof


def test_different_vertex_counts_are_not_isomorphic():
    result = graphIso(AdjacencyMatrix(np.zeros((3, 3))), AdjacencyMatrix(np.zeros((4, 4))))
    assert not result.found and result.proof and result.scannedCount == 0


def test_scrambled_pairs_on_seven_vertices():
    rng = np.random.default_rng(7)
    action = conjugationAction(7)
    for _ in range(100):
        m = randomGraph(7, 0.5, rng)
        n = action.apply(randomPermutation(7, rng), m)
        result = graphIso(m, n)
        assert result.found
        assert action.apply(result.witness, m) == n


def test_outcome_is_symmetric(rng):
    for n in range(2, 7):
        action = conjugationAction(n)
        for _ in range(5):
            m, other = randomGraph(n, 0.5, rng), randomGraph(n, 0.5, rng)
            forward, backward = graphIso(m, other), graphIso(other, m)
            assert forward.found == backward.found
            assert forward.found == nx.is_isomorphic(toNetworkx(m), toNetworkx(other))
            if forward.found:
                assert action.apply(invert(forward.witness), other) == m


def test_budgeted_and_randomized_searches(rng):
    action = conjugationAction(6)
    m = randomGraph(6, 0.5, rng)
    n = action.apply(randomPermutation(6, rng), m)
    budgeted = graphIso(m, n, budget=6)
    assert budgeted.storedCount <= 6 and action.apply(budgeted.witness, m) == n
    randomized = graphIso(m, n, samples=720, seed=1)
    assert randomized.found and not randomized.proof


def test_file_round_trip(tmp_path):
    m = AdjacencyMatrix.fromEdges(5, [(1, 2), (2, 5), (3, 4)])
    path = tmp_path / "g.txt"
    writeGraph(m, path)
    assert path.read_text() == "5\n1 2\n2 5\n3 4\n"
    assert readGraph(path) == m


def test_parser_accepts_comments_and_blank_lines():
    text = "# a square\n4\n\n1 2  # first edge\n2 3\n3 4\n4 1\n"
    m = parseGraph(text)
    assert edgeCount(m) == 4
    assert formatGraph(m) == "4\n1 2\n1 4\n2 3\n3 4\n"


@pytest.mark.parametrize("text, line", [
    ("", None),
    ("x\n", 1),
    ("3\n1 2\n1 4\n", 3),
    ("3\n1 2 3\n", 2),
    ("3\n# ok\n2 2\n", 3),
    ("0\n", 1),
])
def test_parser_errors_name_the_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parseGraph(text, source="g.txt")
    if line is not None:
        assert f"line {line}" in str(info.value)
    assert "g.txt" in str(info.value)
