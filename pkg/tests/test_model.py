import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from distgraphs.build import build_gn, gn_vertices
from distgraphs.constructions import quad
from distgraphs.model import (MINUS, PLUS, Graph, Signplace, Vertex, degree_of_signplace, dot, is_edge,
                              pack_rows, unpack_rows)

V = Vertex.from_coords


def test_dot_examples():
    assert dot(V((1, 1, 1, 0)), V((1, 1, 1, 0))) == 3
    assert dot(V((1, -1, 0, 1)), V((0, 1, -1, 1))) == 0
    assert dot(V((1, 1, 1)), V((1, -1, -1))) == -1


def test_quad_patterns_pairwise_non_adjacent():
    pats = [V(p) for p in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))]
    for a, b in itertools.combinations(pats, 2):
        assert dot(a, b) == -1
        assert not is_edge(a, b)


def test_dot_dimension_mismatch():
    with pytest.raises(ValueError):
        dot(V((1, 1, 1)), V((1, 1, 1, 0)))


def test_is_edge_examples():
    assert not is_edge(V((1, 1, 1, 0)), V((1, 0, 1, -1)))
    assert not is_edge(V((1, 1, 1, 0)), V((1, 1, 0, -1)))
    assert is_edge(V((1, 1, 1, 0)), V((1, 1, -1, 0)))


def test_is_edge_matches_coordinate_arithmetic_in_g4():
    verts = gn_vertices(4)
    for a, b in itertools.combinations(verts, 2):
        plain = sum(x * y for x, y in zip(a.coords(), b.coords()))
        assert is_edge(a, b) == (plain == 1)


def test_degree_of_signplace():
    q = quad(4, range(4))
    assert len(q) == 16
    assert degree_of_signplace(q, Signplace(0, PLUS)) == 6
    assert degree_of_signplace(q, Signplace(0, MINUS)) == 6
    assert degree_of_signplace([], Signplace(0, PLUS)) == 0
    assert degree_of_signplace([V((1, 1, 1))], Signplace(2, MINUS)) == 0


@pytest.mark.parametrize("pos,neg,dim", [(0b111, 0b001, 3), (0b11, 0, 3), (0b1111, 0, 4), (0b1000, 0b11, 3)])
def test_vertex_rejects_invalid(pos, neg, dim):
    with pytest.raises(ValueError):
        Vertex(dim, pos, neg)


def test_vertex_roundtrip_and_str():
    v = V((1, -1, 0, 1))
    assert v.base == (0, 1, 3)
    assert v.signs == (1, -1, 1)
    assert str(v) == "+1 -2 +4"
    assert Vertex.from_coords(v.coords()) == v


vertex_pairs = st.integers(3, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sampled_from(gn_vertices(n)),
    st.sampled_from(gn_vertices(n)),
    st.permutations(range(n)),
    st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n),
))


def _transform(v: Vertex, perm, flips) -> Vertex:
    coords = v.coords()
    out = [0] * len(coords)
    for i, c in enumerate(coords):
        out[perm[i]] = c * flips[i]
    return Vertex.from_coords(out)


@given(vertex_pairs)
def test_dot_symmetric_and_signed_permutation_invariant(case):
    n, a, b, perm, flips = case
    assert dot(a, b) == dot(b, a)
    assert -3 <= dot(a, b) <= 3
    assert dot(_transform(a, perm, flips), _transform(b, perm, flips)) == dot(a, b)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_generated_adjacency_matches_dot_exhaustively(n):
    g = build_gn(n)
    m = g.matrix()
    for i, j in itertools.product(range(g.order), repeat=2):
        expected = i != j and dot(g.labels[i], g.labels[j]) == 1
        assert m[i, j] == expected
    assert all(len(v.base) == 3 for v in g.labels)


def test_vertex_order_is_lexicographic():
    verts = gn_vertices(5)
    assert verts == sorted(verts, key=Vertex.sort_key)


@given(st.integers(0, 130), st.floats(0, 1))
def test_pack_unpack_roundtrip(order, density):
    rng = np.random.default_rng(order)
    a = np.triu(rng.random((order, order)) < density, 1)
    a = a | a.T
    assert np.array_equal(unpack_rows(pack_rows(a), order), a)


def test_graph_immutable_and_validated():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        g.rows[0, 0] = 0
    with pytest.raises(ValueError):
        Graph.from_matrix(np.array([[False, True], [False, False]]))
    with pytest.raises(ValueError):
        Graph.from_matrix(np.eye(2, dtype=bool))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_graph_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert g.n_edges == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    h = g.induced([1, 2, 3])
    assert list(h.edges()) == [(0, 1)]
    assert g == Graph.from_edges(4, [(1, 2), (0, 1)])
