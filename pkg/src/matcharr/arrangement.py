"""Central hyperplane arrangements given by sign-normalised normal vectors.

The matching arrangement of a graph has one hyperplane per simple path and
per even simple cycle: coordinates of the traversed edges receive alternating
coefficients +1, -1, +1, ... in traversal order.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable

from .graph import EdgeNumbering, Graph, resolve_numbering
from .paths import MAX_PATH_EDGES, EdgeSequence, generating_sequences


def normalize_sign(normal) -> tuple[int, ...]:
    """Flip the vector if its first nonzero entry is negative."""
    normal = tuple(normal)
    for c in normal:
        if c:
            return normal if c > 0 else tuple(-x for x in normal)
    raise ValueError("zero normal vector")


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[int, ...]
    sources: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if normalize_sign(self.normal) != tuple(self.normal):
            raise ValueError(f"normal {self.normal} is not sign-normalised")

    def __str__(self):
        return format_equation(self.normal)


def _order_key(normal):
    # descending lexicographic: x1 before x1 - x2 before x2
    return tuple(-c for c in normal)


@dataclass(frozen=True)
class Arrangement:
    dimension: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        hs = tuple(sorted(self.hyperplanes, key=lambda h: _order_key(h.normal)))
        object.__setattr__(self, "hyperplanes", hs)
        normals = [h.normal for h in hs]
        if len(set(normals)) != len(normals):
            raise ValueError("duplicate hyperplanes")
        if any(len(nv) != self.dimension for nv in normals):
            raise ValueError("normal length differs from dimension")

    @classmethod
    def from_normals(cls, dimension: int, normals: Iterable) -> Arrangement:
        """Normalise and deduplicate raw normals (sources are dropped)."""
        uniq = {normalize_sign(nv) for nv in normals}
        return cls(dimension, tuple(Hyperplane(nv) for nv in uniq))

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def normals(self) -> list[tuple[int, ...]]:
        return [h.normal for h in self.hyperplanes]

    def index_of(self, normal) -> int:
        normal = normalize_sign(normal)
        for i, h in enumerate(self.hyperplanes):
            if h.normal == normal:
                return i
        raise KeyError(normal)

    def __contains__(self, normal) -> bool:
        try:
            self.index_of(normal)
        except (KeyError, ValueError):
            return False
        return True

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "hyperplanes": [list(nv) for nv in self.normals]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def normal_vector(seq: EdgeSequence, numbering) -> Hyperplane:
    """Hyperplane of an edge sequence: coefficient (-1)^i on coordinate N(r_i)."""
    num = numbering if isinstance(numbering, EdgeNumbering) else EdgeNumbering(tuple(numbering))
    raw = [0] * len(num)
    for i, e in enumerate(seq.edges):
        raw[num.coordinate(e)] = 1 if i % 2 == 0 else -1
    return Hyperplane(normalize_sign(raw), (seq,))


def build_matching_arrangement(g: Graph, numbering=None, *, max_edges: int = MAX_PATH_EDGES) -> Arrangement:
    num = resolve_numbering(g, numbering)
    by_normal: dict[tuple[int, ...], list[EdgeSequence]] = {}
    for seq in generating_sequences(g, max_edges=max_edges):
        h = normal_vector(seq, num)
        by_normal.setdefault(h.normal, []).append(seq)
    return Arrangement(
        g.edge_count,
        tuple(Hyperplane(nv, tuple(srcs)) for nv, srcs in by_normal.items()),
    )


def build_graphical_arrangement(g: Graph) -> Arrangement:
    """Hyperplane x_i - x_j = 0 per edge, in dimension |V|."""
    hs = []
    for u, v in g.edges:
        raw = [0] * g.vertex_count
        raw[u - 1] = 1
        raw[v - 1] = -1
        hs.append(Hyperplane(normalize_sign(raw), ((u, v),)))
    return Arrangement(g.vertex_count, tuple(hs))


def arrangements_identical(a: Arrangement, b: Arrangement) -> bool:
    return a.dimension == b.dimension and a.normals == b.normals


def reconstruct_line_graph(a: Arrangement) -> Graph:
    """Vertices i, j adjacent iff x_i - x_j = 0 belongs to the arrangement."""
    present = set(a.normals)
    edges = []
    for i, j in itertools.combinations(range(a.dimension), 2):
        diff = [0] * a.dimension
        diff[i], diff[j] = 1, -1
        if tuple(diff) in present:
            edges.append((i + 1, j + 1))
    return Graph(a.dimension, tuple(edges))


def permute_coordinates(a: Arrangement, perm) -> Arrangement:
    """Move coordinate k to position perm[k] (0-based)."""
    out = []
    for nv in a.normals:
        moved = [0] * a.dimension
        for k, c in enumerate(nv):
            moved[perm[k]] = c
        out.append(moved)
    return Arrangement.from_normals(a.dimension, out)


def format_equation(normal) -> str:
    parts = []
    for k, c in enumerate(normal):
        if not c:
            continue
        var = f"x{k + 1}"
        coef = "" if abs(c) == 1 else f"{abs(c)}*"
        if not parts:
            parts.append(("-" if c < 0 else "") + coef + var)
        else:
            parts.append((" - " if c < 0 else " + ") + coef + var)
    return "".join(parts) + " = 0"
