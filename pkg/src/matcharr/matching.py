"""Matchings, brute-force maximum-weight matching and the region probe.

Weight points live in the arrangement's coordinate space: under an edge
numbering N, the weight of the edge at position k is ``p[N(k) - 1]``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arrangement import Arrangement, build_matching_arrangement
from .errors import check_limit
from .graph import Graph, resolve_numbering
from .paths import EVEN_CYCLE, MAX_PATH_EDGES, PATH

SAMPLE_RANGE = 10**6
MAX_REDRAWS = 10**4

Matching = frozenset  # of edge indices


class OnHyperplane(ValueError):
    def __init__(self, index, normal):
        super().__init__(f"point lies on hyperplane {index} {list(normal)}")
        self.index = index
        self.normal = normal


@dataclass(frozen=True)
class SymDiffComponent:
    kind: str
    edges: tuple[int, ...]


@dataclass(frozen=True)
class RegionReport:
    sign_vectors_seen: int
    constancy_violations: int
    uniqueness_violations: int
    samples: int
    seed: int

    @property
    def ok(self) -> bool:
        return self.constancy_violations == 0 and self.uniqueness_violations == 0

    def to_json(self) -> dict:
        return {
            "sign_vectors_seen": self.sign_vectors_seen,
            "constancy_violations": self.constancy_violations,
            "uniqueness_violations": self.uniqueness_violations,
            "samples": self.samples,
            "seed": self.seed,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def is_matching(g: Graph, edges) -> bool:
    seen = set()
    for e in edges:
        u, v = g.edges[e]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def enumerate_matchings(g: Graph, *, max_edges: int = MAX_PATH_EDGES) -> list[Matching]:
    """All matchings, the empty one included, by extension over edge order."""
    check_limit("edge count", g.edge_count, max_edges)
    out = []

    def extend(start, chosen, covered):
        out.append(frozenset(chosen))
        for e in range(start, g.edge_count):
            u, v = g.edges[e]
            if u in covered or v in covered:
                continue
            chosen.append(e)
            extend(e + 1, chosen, covered | {u, v})
            chosen.pop()

    extend(0, [], frozenset())
    return out


def matching_weight(m: Matching, weights: Sequence, numbering) -> Fraction:
    return sum((Fraction(weights[numbering.coordinate(e)]) for e in m), Fraction(0))


def max_weight_matchings(g: Graph, weights: Sequence, numbering=None, *,
                         max_edges: int = MAX_PATH_EDGES) -> set[Matching]:
    """Every matching attaining the maximum total weight (ties kept)."""
    num = resolve_numbering(g, numbering)
    if len(weights) != g.edge_count:
        raise ValueError(f"{len(weights)} weights for {g.edge_count} edges")
    best = None
    arg: set[Matching] = set()
    for m in enumerate_matchings(g, max_edges=max_edges):
        w = matching_weight(m, weights, num)
        if best is None or w > best:
            best, arg = w, {m}
        elif w == best:
            arg.add(m)
    return arg


def sign_vector(a: Arrangement, p: Sequence) -> tuple[int, ...]:
    """Sign (+1/-1) of <normal, p> for each hyperplane in arrangement order."""
    signs = []
    for i, nv in enumerate(a.normals):
        s = sum(c * x for c, x in zip(nv, p))
        if s == 0:
            raise OnHyperplane(i, nv)
        signs.append(1 if s > 0 else -1)
    return tuple(signs)


def format_signs(signs) -> str:
    return "(" + ", ".join("+" if s > 0 else "-" for s in signs) + ")"


def sample_generic_point(a: Arrangement, rng_seed, *, bound: int = SAMPLE_RANGE,
                         max_redraws: int = MAX_REDRAWS) -> tuple[int, ...]:
    """Integer point uniform in [-bound, bound]^n avoiding every hyperplane."""
    rng = random.Random(rng_seed)
    normals = a.normals
    for _ in range(max_redraws):
        p = tuple(rng.randint(-bound, bound) for _ in range(a.dimension))
        if all(sum(c * x for c, x in zip(nv, p)) for nv in normals):
            return p
    raise RuntimeError(f"no generic point after {max_redraws} draws")


def symdiff_decompose(m1: Matching, m2: Matching, g: Graph) -> list[SymDiffComponent]:
    """Connected pieces of m1 xor m2, each traversed in canonical order.

    Paths start from the end whose edge index is smaller; cycles start at
    their smallest edge and head toward its smaller neighbouring edge.
    """
    h = sorted(set(m1) ^ set(m2))
    inc: dict[int, list[int]] = {}
    for e in h:
        for v in g.edges[e]:
            inc.setdefault(v, []).append(e)
    if any(len(es) > 2 for es in inc.values()):
        raise ValueError("inputs are not both matchings")

    def other_end(e, v):
        a, b = g.edges[e]
        return b if v == a else a

    seen: set[int] = set()
    comps = []
    for e0 in h:
        if e0 in seen:
            continue
        # collect the connected piece containing e0
        piece, stack = {e0}, [e0]
        while stack:
            e = stack.pop()
            for v in g.edges[e]:
                for f in inc[v]:
                    if f not in piece:
                        piece.add(f)
                        stack.append(f)
        seen |= piece
        ends = [v for e in piece for v in g.edges[e] if len(inc[v]) == 1]
        cur = min(ends) if ends else g.edges[min(piece)][0]
        walk, prev = [], None
        while len(walk) < len(piece):
            e = next(f for f in inc[cur] if f != prev and f not in walk)
            walk.append(e)
            cur, prev = other_end(e, cur), e
        if ends:
            if walk[0] > walk[-1]:
                walk.reverse()
            comps.append(SymDiffComponent(PATH, tuple(walk)))
        else:
            i = walk.index(min(walk))
            walk = walk[i:] + walk[:i]
            if walk[1] > walk[-1]:
                walk = [walk[0]] + walk[:0:-1]
            kind = EVEN_CYCLE if len(walk) % 2 == 0 else "odd_cycle"
            comps.append(SymDiffComponent(kind, tuple(walk)))
    comps.sort(key=lambda c: c.edges[0])
    return comps


def component_normal(comp: SymDiffComponent, numbering, dimension: int) -> tuple[int, ...]:
    """Alternating +1/-1 coefficients along the component (not sign-normalised)."""
    raw = [0] * dimension
    for i, e in enumerate(comp.edges):
        raw[numbering.coordinate(e)] = 1 if i % 2 == 0 else -1
    return tuple(raw)


def _point_seed(seed: int, index: int) -> str:
    return f"{seed}:{index}"


def probe_theorem2(g: Graph, numbering=None, samples: int = 200, rng_seed: int = 0, *,
                   max_edges: int = MAX_PATH_EDGES, arrangement: Arrangement | None = None) -> RegionReport:
    """Sample generic weight points and check that the maximum-weight matching
    is unique and depends only on the region (sign vector) of the point."""
    num = resolve_numbering(g, numbering)
    a = arrangement if arrangement is not None else build_matching_arrangement(g, num, max_edges=max_edges)
    region_argmax: dict[tuple[int, ...], frozenset] = {}
    constancy = uniqueness = 0
    for k in range(samples):
        p = sample_generic_point(a, _point_seed(rng_seed, k))
        sv = sign_vector(a, p)
        arg = frozenset(max_weight_matchings(g, p, num, max_edges=max_edges))
        if len(arg) > 1:
            uniqueness += 1
        prev = region_argmax.setdefault(sv, arg)
        if prev != arg:
            constancy += 1
    return RegionReport(len(region_argmax), constancy, uniqueness, samples, rng_seed)
