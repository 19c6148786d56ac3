import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from matcharr.errors import LimitExceeded
from matcharr.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from matcharr.paths import (
    EVEN_CYCLE,
    PATH,
    canonical_path,
    check_sequence,
    enumerate_even_cycles,
    enumerate_simple_paths,
)
from matcharr.verify import all_trees, random_graph


def subset_oracle(g):
    """Count path and even-cycle edge sets by checking every edge subset.

    A subset is a path iff it is connected, acyclic and has max degree <= 2;
    a cycle iff connected with every degree exactly 2.
    """
    paths = cycles = 0
    for k in range(1, g.edge_count + 1):
        for sub in itertools.combinations(range(g.edge_count), k):
            deg = {}
            for e in sub:
                for v in g.edges[e]:
                    deg[v] = deg.get(v, 0) + 1
            if max(deg.values()) > 2:
                continue
            # connectivity over the subset's vertices
            verts = set(deg)
            seen, stack = set(), [next(iter(verts))]
            while stack:
                v = stack.pop()
                if v in seen:
                    continue
                seen.add(v)
                stack += [w for e in sub for w in g.edges[e] if v in g.edges[e] and w != v]
            if seen != verts:
                continue
            if len(verts) == k + 1:
                paths += 1
            elif all(d == 2 for d in deg.values()) and k % 2 == 0:
                cycles += 1
    return paths, cycles


def test_path_examples():
    p3 = enumerate_simple_paths(path_graph(2))
    assert sorted(s.edges for s in p3) == [(0,), (0, 1), (1,)]
    k3 = enumerate_simple_paths(complete_graph(3))
    assert len(k3) == 6
    assert sorted(len(s) for s in k3) == [1, 1, 1, 2, 2, 2]
    assert [s.edges for s in enumerate_simple_paths(path_graph(1))] == [(0,)]


def test_cycle_examples():
    assert enumerate_even_cycles(complete_graph(3)) == []
    c4 = enumerate_even_cycles(cycle_graph(4))
    assert len(c4) == 1 and c4[0].kind == EVEN_CYCLE
    assert c4[0].edges == (0, 1, 2, 3)
    assert len(enumerate_even_cycles(complete_graph(4))) == 3


def test_cycle_canonical_direction():
    # cycle edges listed so the smallest edge's neighbours are 3 and 1
    g = Graph(4, ((1, 2), (3, 4), (2, 3), (4, 1)))
    (c,) = enumerate_even_cycles(g)
    assert c.edges[0] == 0
    assert c.edges[1] < c.edges[-1]
    assert c.edges == (0, 2, 1, 3)


@pytest.mark.parametrize("v", range(2, 8))
def test_tree_counts(v):
    for t in all_trees(v):
        n = t.edge_count
        assert len(enumerate_simple_paths(t)) == comb(n + 1, 2)
        assert enumerate_even_cycles(t) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 6), st.integers(0, 8), st.integers(0, 10**6))
def test_against_subset_oracle(v, e, seed):
    e = min(e, comb(v, 2))
    g = random_graph(v, e, seed)
    paths, cycles = enumerate_simple_paths(g), enumerate_even_cycles(g)
    assert (len(paths), len(cycles)) == subset_oracle(g)
    for s in paths + cycles:
        check_sequence(g, s)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 6), st.integers(1, 8), st.integers(0, 10**6))
def test_reversal_closure(v, e, seed):
    g = random_graph(v, min(e, comb(v, 2)), seed)
    paths = enumerate_simple_paths(g)
    reps = {s.edges for s in paths}
    assert len(reps) == len(paths)
    for s in paths:
        assert s.kind == PATH
        assert canonical_path(g, s.edges[::-1]) == s.edges


def test_guard():
    with pytest.raises(LimitExceeded):
        enumerate_simple_paths(star_graph(13))
    enumerate_simple_paths(star_graph(13), max_edges=13)
