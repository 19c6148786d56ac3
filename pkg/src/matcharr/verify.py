"""Instance generators, independent oracles and theorem-level checks.

Each ``verify_*`` function checks the conclusion of one statement about
matching arrangements on a concrete instance and returns a
:class:`TheoremReport` carrying the evidence.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .arrangement import (
    Arrangement,
    arrangements_identical,
    build_graphical_arrangement,
    build_matching_arrangement,
    reconstruct_line_graph,
)
from .errors import check_limit
from .graph import (
    Graph,
    EdgeNumbering,
    chromatic_polynomial,
    complete_graph,
    connected_components,
    count_acyclic_orientations,
    cycle_graph,
    disjoint_union,
    glue,
    is_isomorphic,
    line_graph,
    path_graph,
    star_graph,
    without_isolated_vertices,
)
from .lattice import FlatLattice, characteristic_polynomial, region_count
from .linalg import StrictSystem, fm_feasible
from .matching import probe_theorem2
from .polynomial import IntPolynomial, evaluate, falling_factorial_shifted

THEOREM_IDS = (
    "T1_reconstruction",
    "T1_exception",
    "T2_regions",
    "T3_invariance",
    "T4_product",
    "T5_tree",
    "T6_tails",
    "chromatic_graphical",
    "remark_unions",
)

MAX_FIELD_DIMENSION = 4
MIN_FIELD_PRIME = 17
MAX_REGION_DIMENSION = 4
MAX_REGION_HYPERPLANES = 14


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    instance_description: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instance_description": self.instance_description,
            "pass": self.passed,
            "details": self.details,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# ---------------------------------------------------------------- generators

def _dedupe_isomorphic(candidates, key=lambda g: tuple(sorted(g.degrees()))):
    reps: list[Graph] = []
    buckets: dict = {}
    for g in candidates:
        bucket = buckets.setdefault(key(g), [])
        if not any(is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
            reps.append(g)
    return reps


def all_trees(v: int) -> list[Graph]:
    """One tree per isomorphism class on ``v`` vertices (2 <= v <= 8).

    Built by attaching a leaf to every vertex of every smaller class.
    """
    if not 2 <= v <= 8:
        raise ValueError(f"vertex count {v} outside 2..8")
    trees = [Graph(2, ((1, 2),))]
    for n in range(3, v + 1):
        grown = (Graph(n, t.edges + ((x, n),)) for t in trees for x in t.vertices)
        trees = _dedupe_isomorphic(grown)
    return trees


def all_graphs(v: int) -> list[Graph]:
    """One simple graph per isomorphism class on exactly ``v`` vertices (v <= 6)."""
    if not 0 <= v <= 6:
        raise ValueError(f"vertex count {v} outside 0..6")
    pairs = list(itertools.combinations(range(1, v + 1), 2))
    subsets = (
        Graph(v, sub)
        for k in range(len(pairs) + 1)
        for sub in itertools.combinations(pairs, k)
    )
    return _dedupe_isomorphic(subsets)


def random_graph(v: int, e: int, seed) -> Graph:
    """Uniform simple graph with exactly ``e`` edges; edge order is draw order."""
    pairs = list(itertools.combinations(range(1, v + 1), 2))
    if not 0 <= e <= len(pairs):
        raise ValueError(f"cannot place {e} edges on {v} vertices")
    rng = random.Random(seed)
    return Graph(v, tuple(rng.sample(pairs, e)))


def random_numbering(n: int, seed) -> EdgeNumbering:
    perm = list(range(1, n + 1))
    random.Random(seed).shuffle(perm)
    return EdgeNumbering(tuple(perm))


# ---------------------------------------------------------------- oracles

def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def finite_field_count(a: Arrangement, q: int, *, max_dimension: int = MAX_FIELD_DIMENSION,
                       min_prime: int = MIN_FIELD_PRIME) -> int:
    """Points of GF(q)^n lying on no hyperplane, counted exhaustively.

    Equals chi(q) once q exceeds every minor of the normal matrix; for
    +-1/0 normals in dimension <= 4 any prime q >= 17 does.
    """
    check_limit("dimension", a.dimension, max_dimension)
    if not _is_prime(q) or q < min_prime:
        raise ValueError(f"q must be a prime >= {min_prime}, got {q}")
    n = a.dimension
    if n == 0:
        return 1
    normals = np.array(a.normals, dtype=np.int64).reshape(len(a), n) % q
    # all points of GF(q)^(n-1); the first coordinate is counted per point below
    rest = np.stack(np.meshgrid(*[np.arange(q)] * (n - 1), indexing="ij"), axis=-1).reshape(-1, n - 1) \
        if n > 1 else np.zeros((1, 0), dtype=np.int64)
    # <normal, (x0, rest)> = 0 mod q  iff  x0 * normal[0] = -<normal[1:], rest> mod q
    partial = (rest @ normals[:, 1:].T) % q
    lead = normals[:, 0]
    free = partial[:, lead == 0]
    allowed = (free != 0).all(axis=1)
    # a hyperplane with lead != 0 rules out exactly one x0 per rest point
    inverses = np.array([pow(int(c), -1, q) for c in lead[lead != 0]], dtype=np.int64)
    forbidden = np.sort((-partial[:, lead != 0] * inverses) % q, axis=1)
    distinct = (np.diff(forbidden, axis=1) != 0).sum(axis=1) + (forbidden.shape[1] > 0)
    return int(((q - distinct) * allowed).sum())


def enumerate_regions_exact(a: Arrangement, *, max_dimension: int = MAX_REGION_DIMENSION,
                            max_hyperplanes: int = MAX_REGION_HYPERPLANES) -> int:
    """Number of feasible strict sign vectors, by Fourier-Motzkin.

    Sign vectors are extended one hyperplane at a time; an infeasible prefix
    cannot be completed, so its extensions are skipped.
    """
    check_limit("dimension", a.dimension, max_dimension)
    check_limit("hyperplane count", len(a), max_hyperplanes)
    normals = a.normals
    if not normals:
        return 1

    def count(prefix):
        if len(prefix) == len(normals):
            return 1
        total = 0
        for s in (1, -1):
            cons = prefix + [(normals[len(prefix)], s)]
            if fm_feasible(StrictSystem(tuple(cons)), max_constraints=max_hyperplanes,
                           max_dimension=max_dimension):
                total += count(cons)
        return total

    return count([])


def lattice_invariant_failures(lattice: FlatLattice, chi: IntPolynomial, dimension: int) -> list[str]:
    """Structural checks on a computed lattice; returns descriptions of failures."""
    bad = []
    if evaluate(chi, 1) != 0 and lattice.size:
        bad.append("chi(1) != 0")
    if chi.degree != dimension or chi.coefficients[-1] != 1:
        bad.append("chi not monic of degree = dimension")
    for k, c in enumerate(chi.coefficients):
        if c and (c > 0) != ((dimension - k) % 2 == 0):
            bad.append(f"coefficient of t^{k} has wrong sign")
            break
    for f, mu in zip(lattice.flats, lattice.mobius):
        if mu == 0 or (mu > 0) != (f.rank % 2 == 0):
            bad.append(f"sign of mu wrong on flat {sorted(f.members)}")
            break
    if lattice.size and sum(lattice.mobius) != 0:
        bad.append("sum of mu != 0")
    if lattice.bottom.members or lattice.mobius[0] != 1:
        bad.append("bottom flat wrong")
    if len(lattice.top.members) != lattice.size:
        bad.append("top flat misses hyperplanes")
    return bad


# ---------------------------------------------------------------- helpers

def matching_chi(g: Graph, numbering=None) -> IntPolynomial:
    return characteristic_polynomial(build_matching_arrangement(g, numbering))


def _describe(g: Graph) -> str:
    return f"V={g.vertex_count} E={list(g.edges)}"


# ---------------------------------------------------------------- theorem checks

def verify_tree(t: Graph) -> TheoremReport:
    chi = matching_chi(t)
    expected = falling_factorial_shifted(t.edge_count)
    return TheoremReport(
        "T5_tree", f"tree {_describe(t)}", chi == expected,
        {"chi": list(chi.coefficients), "expected": list(expected.coefficients)},
    )


def verify_invariance(g: Graph, numberings: int = 20, seed=0) -> TheoremReport:
    base = matching_chi(g)
    mismatched = []
    for k in range(numberings):
        num = random_numbering(g.edge_count, f"{seed}:{k}")
        chi = matching_chi(g, num)
        if chi != base:
            mismatched.append({"numbering": list(num.permutation), "chi": list(chi.coefficients)})
    return TheoremReport(
        "T3_invariance", f"{numberings} numberings of {_describe(g)}", not mismatched,
        {"chi": list(base.coefficients), "mismatches": mismatched},
    )


def verify_product(g1: Graph, g2: Graph) -> TheoremReport:
    union = disjoint_union(g1, g2)
    chi = matching_chi(union)
    c1, c2 = matching_chi(g1), matching_chi(g2)
    return TheoremReport(
        "T4_product", f"{_describe(g1)} + {_describe(g2)}", chi == c1 * c2,
        {"chi_union": list(chi.coefficients), "chi_1": list(c1.coefficients),
         "chi_2": list(c2.coefficients)},
    )


def verify_components(g: Graph) -> TheoremReport:
    chi = matching_chi(g)
    prod = IntPolynomial([1])
    parts = []
    for comp, _ in connected_components(g):
        c = matching_chi(comp)
        parts.append(list(c.coefficients))
        prod = prod * c
    return TheoremReport(
        "T4_product", f"components of {_describe(g)}", chi == prod,
        {"chi": list(chi.coefficients), "component_chis": parts},
    )


def verify_tails(h: Graph, u: int, t1: Graph, w1: int, t2: Graph, w2: int) -> TheoremReport:
    """Glue tail t1 (at its vertex w1) and tail t2 (at w2) onto vertex u of h."""
    if t1.edge_count != t2.edge_count or t1.edge_count == 0:
        raise ValueError("tails must be trees with the same positive edge count")
    g1, g2 = glue(h, u, t1, w1), glue(h, u, t2, w2)
    chi1, chi2 = matching_chi(g1), matching_chi(g2)
    iso = is_isomorphic(g1, g2)
    return TheoremReport(
        "T6_tails", f"{_describe(g1)} vs {_describe(g2)}", chi1 == chi2,
        {"chi_1": list(chi1.coefficients), "chi_2": list(chi2.coefficients), "isomorphic": iso},
    )


def verify_reconstruction(g: Graph) -> TheoremReport:
    rebuilt = reconstruct_line_graph(build_matching_arrangement(g))
    ok = is_isomorphic(rebuilt, line_graph(g))
    return TheoremReport(
        "T1_reconstruction", _describe(g), ok, {"reconstructed_edges": list(rebuilt.edges)},
    )


def verify_triangle_star() -> TheoremReport:
    k3, star = complete_graph(3), star_graph(3)
    a, b = build_matching_arrangement(k3), build_matching_arrangement(star)
    identical = arrangements_identical(a, b)
    chi_a, chi_b = characteristic_polynomial(a), characteristic_polynomial(b)
    expected = falling_factorial_shifted(3)
    ok = identical and chi_a == chi_b == expected and region_count(a) == 24
    return TheoremReport(
        "T1_exception", "K3 vs K1,3", ok,
        {"identical": identical, "hyperplanes": [list(nv) for nv in a.normals],
         "chi": list(chi_a.coefficients), "regions": region_count(a)},
    )


def verify_remark_unions() -> TheoremReport:
    k3, star = complete_graph(3), star_graph(3)
    g1, g2 = disjoint_union(k3, k3), disjoint_union(k3, star)
    identical = arrangements_identical(build_matching_arrangement(g1), build_matching_arrangement(g2))
    iso = is_isomorphic(g1, g2)
    return TheoremReport(
        "remark_unions", "K3+K3 vs K3+K1,3, component-aligned numbering", identical and not iso,
        {"identical": identical, "isomorphic": iso},
    )


def verify_chromatic_graphical(g: Graph) -> TheoremReport:
    a = build_graphical_arrangement(g)
    chi = characteristic_polynomial(a)
    chrom = chromatic_polynomial(g)
    regions = region_count(a)
    acyclic = count_acyclic_orientations(g, max_edges=max(g.edge_count, 8))
    return TheoremReport(
        "chromatic_graphical", _describe(g), chi == chrom and regions == acyclic,
        {"chi": list(chi.coefficients), "chromatic": list(chrom.coefficients),
         "regions": regions, "acyclic_orientations": acyclic},
    )


def verify_regions(g: Graph, samples: int = 200, seed: int = 7) -> TheoremReport:
    rep = probe_theorem2(g, None, samples, seed)
    return TheoremReport("T2_regions", f"{_describe(g)} seed={seed}", rep.ok, rep.to_json())


_DISPATCH: dict[str, Callable[..., TheoremReport]] = {
    "T1_reconstruction": verify_reconstruction,
    "T1_exception": verify_triangle_star,
    "T2_regions": verify_regions,
    "T3_invariance": verify_invariance,
    "T4_product": verify_product,
    "T5_tree": verify_tree,
    "T6_tails": verify_tails,
    "chromatic_graphical": verify_chromatic_graphical,
    "remark_unions": verify_remark_unions,
}


def verify_theorem(theorem_id: str, **params) -> TheoremReport:
    try:
        fn = _DISPATCH[theorem_id]
    except KeyError:
        raise ValueError(f"unknown theorem id {theorem_id!r}; expected one of {THEOREM_IDS}") from None
    return fn(**params)


def default_suite(ids=THEOREM_IDS) -> list[TheoremReport]:
    """A quick, fixed set of instances per statement (seconds, not minutes)."""
    ids = set(ids)
    reports = []
    if "T1_reconstruction" in ids:
        for s in range(5):
            g = without_isolated_vertices(random_graph(6, 5, f"recon:{s}"))
            reports.append(verify_reconstruction(g))
    if "T1_exception" in ids:
        reports.append(verify_triangle_star())
    if "T2_regions" in ids:
        for g in (complete_graph(3), cycle_graph(4), path_graph(2)):
            reports.append(verify_regions(g, 100, 7))
    if "T3_invariance" in ids:
        reports.append(verify_invariance(cycle_graph(4), 5, 0))
        reports.append(verify_invariance(random_graph(5, 5, "inv"), 5, 1))
    if "T4_product" in ids:
        reports.append(verify_product(complete_graph(3), path_graph(2)))
        reports.append(verify_components(disjoint_union(path_graph(1), complete_graph(3), path_graph(2))))
    if "T5_tree" in ids:
        for v in range(2, 7):
            reports.extend(verify_tree(t) for t in all_trees(v))
    if "T6_tails" in ids:
        reports.append(verify_tails(complete_graph(3), 1, path_graph(2), 1, star_graph(2), 1))
    if "chromatic_graphical" in ids:
        reports.extend(verify_chromatic_graphical(g) for g in all_graphs(4))
    if "remark_unions" in ids:
        reports.append(verify_remark_unions())
    return reports
