import numpy as np
import pytest

from anyondeg.lattice import (
    Lattice, ORIGIN, Vertex, adjacency, build_lattice, in_vertex_set,
    is_edge, successors,
)


def test_is_edge_examples():
    assert is_edge(Vertex(0, 0), Vertex(0, 1), 1)
    assert not is_edge(Vertex(0, 0), Vertex(1, 0), 3)
    assert not is_edge(Vertex(0, 0), Vertex(0, 0), 3)
    assert is_edge(Vertex(0, 1), Vertex(1, 0), 1)


def test_is_edge_total_on_out_of_range_inputs():
    assert not is_edge(Vertex(5, 5), Vertex(5, 6), 3)
    assert not is_edge(Vertex(0, 0), Vertex(0, 4), 3)


def test_build_lattice_k1_is_three_cycle():
    lat = build_lattice(1)
    assert set(lat.vertices) == {Vertex(0, 0), Vertex(0, 1), Vertex(1, 0)}
    assert lat.edges == frozenset({
        (Vertex(0, 0), Vertex(0, 1)),
        (Vertex(0, 1), Vertex(1, 0)),
        (Vertex(1, 0), Vertex(0, 0)),
    })


@pytest.mark.parametrize("k,count", [(1, 3), (2, 6), (3, 10), (8, 45)])
def test_vertex_count(k, count):
    assert build_lattice(k).dim == count


@pytest.mark.parametrize("k", [0, -3])
def test_build_lattice_rejects_bad_level(k):
    with pytest.raises(ValueError):
        build_lattice(k)


@pytest.mark.parametrize("k", range(1, 9))
def test_canonical_order_and_index_formula(k):
    lat = build_lattice(k)
    expected = [Vertex(i, j) for i in range(k + 1) for j in range(k + 1 - i)]
    assert list(lat.vertices) == expected
    for pos, v in enumerate(lat.vertices):
        assert lat.index(v) == pos
        # 1-based published index: i(2k - i + 3)/2 + j + 1
        assert v.i * (2 * k - v.i + 3) // 2 + v.j + 1 == pos + 1


@pytest.mark.parametrize("k", range(1, 9))
def test_out_degree_rules(k):
    lat = build_lattice(k)
    for v in lat.vertices:
        succ = set(successors(v, k))
        assert len(succ) <= 3
        assert (Vertex(v.i, v.j + 1) in succ) == (v.i + v.j + 1 <= k)
        assert (Vertex(v.i - 1, v.j) in succ) == (v.i >= 1)
        assert (Vertex(v.i + 1, v.j - 1) in succ) == \
            (v.j >= 1 and v.i + v.j <= k)
        assert succ == {w for w in lat.vertices if is_edge(v, w, k)}


@pytest.mark.parametrize("k", range(1, 13))
def test_strongly_connected(k):
    lat = build_lattice(k)
    fwd = {v: successors(v, k) for v in lat.vertices}
    rev = {v: [] for v in lat.vertices}
    for v, succ in fwd.items():
        for w in succ:
            rev[w].append(v)

    def reach(adjacency_lists):
        seen = {ORIGIN}
        stack = [ORIGIN]
        while stack:
            for w in adjacency_lists[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    assert reach(fwd) == set(lat.vertices)
    assert reach(rev) == set(lat.vertices)


@pytest.mark.parametrize("k", range(1, 9))
def test_step_grading_mod_3(k):
    for a, b in build_lattice(k).edges:
        assert (2 * b.i + b.j - 2 * a.i - a.j) % 3 == 1


def test_adjacency_k1():
    mat = adjacency(build_lattice(1))
    assert mat.tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert np.array_equal(np.linalg.matrix_power(mat, 3), np.eye(3, dtype=int))


@pytest.mark.parametrize("k", range(1, 9))
def test_adjacency_row_sums(k):
    mat = adjacency(build_lattice(k))
    assert set(np.unique(mat)) <= {0, 1}
    assert mat.sum(axis=1).max() <= 3


def test_json_round_trip():
    lat = build_lattice(3)
    again = Lattice.from_json(lat.to_json())
    assert again == lat
    assert list(again.vertices) == list(lat.vertices)


def test_index_rejects_foreign_vertex():
    with pytest.raises(ValueError):
        build_lattice(2).index(Vertex(2, 1))


def test_in_vertex_set():
    assert in_vertex_set(Vertex(1, 2), 3)
    assert not in_vertex_set(Vertex(1, 3), 3)
    assert not in_vertex_set(Vertex(-1, 0), 3)
