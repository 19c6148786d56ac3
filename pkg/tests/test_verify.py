import heapq
import itertools
import json
import random

import pytest

from matcharr.arrangement import Arrangement, build_graphical_arrangement, build_matching_arrangement
from matcharr.errors import LimitExceeded
from matcharr.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)
from matcharr.lattice import build_flat_lattice, characteristic_polynomial
from matcharr.polynomial import IntPolynomial
from matcharr.verify import (
    THEOREM_IDS,
    TheoremReport,
    all_graphs,
    all_trees,
    default_suite,
    enumerate_regions_exact,
    finite_field_count,
    lattice_invariant_failures,
    random_graph,
    random_numbering,
    verify_components,
    verify_tails,
    verify_theorem,
)


# ---- tree oracle: Prufer decoding plus a centre-rooted canonical code

def prufer_trees(v):
    for seq in itertools.product(range(1, v + 1), repeat=v - 2):
        degree = [1] * (v + 1)
        for x in seq:
            degree[x] += 1
        leaves = [i for i in range(1, v + 1) if degree[i] == 1]
        heapq.heapify(leaves)
        edges = []
        for x in seq:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, x))
            degree[x] -= 1
            if degree[x] == 1:
                heapq.heappush(leaves, x)
        edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
        yield Graph(v, tuple(edges))


def tree_code(t):
    adj = {x: set() for x in t.vertices}
    for a, b in t.edges:
        adj[a].add(b)
        adj[b].add(a)
    # strip leaves down to the one or two centres
    remaining, layer = set(adj), [x for x in adj if len(adj[x]) <= 1]
    deg = {x: len(adj[x]) for x in adj}
    while len(remaining) > 2:
        nxt = []
        for x in layer:
            remaining.discard(x)
            for y in adj[x]:
                deg[y] -= 1
                if deg[y] == 1 and y in remaining:
                    nxt.append(y)
        layer = nxt

    def code(x, parent):
        return "(" + "".join(sorted(code(y, x) for y in adj[x] if y != parent)) + ")"

    return min(code(c, None) for c in remaining)


@pytest.mark.parametrize("v, count", [(2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)])
def test_tree_counts(v, count):
    trees = all_trees(v)
    assert len(trees) == count
    assert len({tree_code(t) for t in trees}) == count
    assert all(t.edge_count == v - 1 for t in trees)


@pytest.mark.parametrize("v", range(3, 8))
def test_trees_match_prufer_oracle(v):
    oracle = {tree_code(t) for t in prufer_trees(v)}
    assert oracle == {tree_code(t) for t in all_trees(v)}


def test_all_trees_guard():
    with pytest.raises(ValueError):
        all_trees(9)


def test_all_graphs_counts():
    assert [len(all_graphs(v)) for v in range(6)] == [1, 1, 2, 4, 11, 34]


# ---- random generators

def test_random_graph_examples():
    assert random_graph(4, 6, 123).edge_set() == complete_graph(4).edge_set()
    assert random_graph(5, 0, 9) == Graph(5, ())
    assert random_graph(5, 4, 77) == random_graph(5, 4, 77)
    with pytest.raises(ValueError):
        random_graph(3, 4, 0)


def test_random_numbering_is_permutation():
    num = random_numbering(7, "x")
    assert sorted(num.permutation) == list(range(1, 8))
    assert num == random_numbering(7, "x")


# ---- finite field oracle

def test_finite_field_examples():
    # these primes sit below the default threshold, safe here since every minor is +-1 or 0
    assert finite_field_count(build_matching_arrangement(path_graph(1)), 7, min_prime=2) == 6
    assert finite_field_count(build_matching_arrangement(path_graph(2)), 5, min_prime=2) == 12
    assert finite_field_count(build_matching_arrangement(complete_graph(3)), 5, min_prime=2) == 24


def test_finite_field_matches_chi():
    for g in (complete_graph(3), path_graph(3), star_graph(3)):
        a = build_matching_arrangement(g)
        chi = characteristic_polynomial(a)
        for q in (17, 19):
            assert finite_field_count(a, q) == chi(q)


def naive_point_count(a, q):
    return sum(
        all(sum(c * x for c, x in zip(nv, p)) % q for nv in a.normals)
        for p in itertools.product(range(q), repeat=a.dimension)
    )


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_finite_field_matches_naive_count(q):
    rng = random.Random(q)
    for _ in range(15):
        n = rng.randint(1, 3)
        normals = {tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(rng.randint(0, 6))}
        normals = {nv for nv in normals if any(nv) and next(x for x in nv if x) > 0}
        a = Arrangement.from_normals(n, normals)
        assert finite_field_count(a, q, min_prime=2) == naive_point_count(a, q)


def test_finite_field_rejects():
    a = build_matching_arrangement(path_graph(1))
    with pytest.raises(ValueError):
        finite_field_count(a, 7)
    with pytest.raises(ValueError):
        finite_field_count(a, 21)
    with pytest.raises(LimitExceeded):
        finite_field_count(build_matching_arrangement(path_graph(5)), 17)


def test_finite_field_empty():
    assert finite_field_count(Arrangement.from_normals(0, []), 17) == 1
    assert finite_field_count(Arrangement.from_normals(2, []), 17) == 289


# ---- region enumeration

def test_regions_exact_examples():
    assert enumerate_regions_exact(build_matching_arrangement(path_graph(1))) == 2
    assert enumerate_regions_exact(build_matching_arrangement(path_graph(2))) == 6
    assert enumerate_regions_exact(build_graphical_arrangement(complete_graph(3))) == 6
    assert enumerate_regions_exact(build_matching_arrangement(complete_graph(3))) == 24


def test_regions_exact_guard():
    with pytest.raises(LimitExceeded):
        enumerate_regions_exact(build_matching_arrangement(path_graph(5)))


# ---- invariants

def test_invariants_catch_a_broken_polynomial():
    a = build_matching_arrangement(path_graph(2))
    lat = build_flat_lattice(a)
    assert lattice_invariant_failures(lat, characteristic_polynomial(a, lat), 2) == []
    bad = lattice_invariant_failures(lat, IntPolynomial([2, 3, 1]), 2)
    assert "chi(1) != 0" in bad


# ---- theorem checks

def test_theorem_examples():
    r = verify_theorem("T5_tree", t=path_graph(6))
    assert r.passed
    assert r.details["chi"] == list(IntPolynomial.from_roots(range(1, 7)).coefficients)
    assert verify_theorem("T1_exception").passed
    r = verify_theorem("T6_tails", h=complete_graph(3), u=2, t1=path_graph(2), w1=1, t2=star_graph(2), w2=1)
    assert r.passed and r.details["chi_1"] == r.details["chi_2"]


def test_theorem_other_ids():
    assert verify_theorem("T3_invariance", g=cycle_graph(4), numberings=4, seed=3).passed
    assert verify_theorem("T4_product", g1=path_graph(2), g2=complete_graph(3)).passed
    assert verify_theorem("T1_reconstruction", g=star_graph(3)).passed
    assert verify_theorem("remark_unions").passed
    assert verify_theorem("chromatic_graphical", g=cycle_graph(4)).passed
    assert verify_theorem("T2_regions", g=path_graph(2), samples=30).passed
    with pytest.raises(ValueError):
        verify_theorem("T9")


def test_components_corollary():
    g = disjoint_union(path_graph(1), complete_graph(3), path_graph(2))
    assert verify_components(g).passed


def test_tails_argument_checks():
    with pytest.raises(ValueError):
        verify_tails(complete_graph(3), 1, path_graph(2), 1, path_graph(1), 1)


def test_tails_reports_isomorphism():
    # a path tail glued by either endpoint gives the same graph
    r = verify_tails(complete_graph(3), 1, path_graph(2), 1, path_graph(2), 3)
    assert r.passed and r.details["isomorphic"]
    r = verify_tails(cycle_graph(4), 1, path_graph(2), 1, star_graph(2), 1)
    assert r.passed


def test_default_suite_passes():
    reports = default_suite()
    assert reports and all(r.passed for r in reports)
    assert {r.theorem_id for r in reports} == set(THEOREM_IDS)


def test_report_json():
    r = TheoremReport("T5_tree", "x", True, {"chi": [1]})
    assert json.loads(r.dumps()) == {
        "theorem_id": "T5_tree", "instance_description": "x", "pass": True, "details": {"chi": [1]},
    }
