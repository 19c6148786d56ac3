"""Simple undirected graphs with numbered edges, plus small brute-force oracles.

Vertices are 1-based integers ``1..vertex_count``. Edges are stored in a fixed
order; the position of an edge in :attr:`Graph.edges` is its *edge index*
(0-based here, 1-based in files and on the command line).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import check_limit
from .polynomial import IntPolynomial

MAX_ISOMORPHISM_VERTICES = 8
MAX_CHROMATIC_EDGES = 10
MAX_ORIENTATION_EDGES = 8


class GraphParseError(ValueError):
    """Base class for graph file errors; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedLine(GraphParseError):
    pass


class LoopEdge(GraphParseError):
    pass


class ParallelEdge(GraphParseError):
    pass


class VertexOutOfRange(GraphParseError):
    pass


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        seen = set()
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= self.vertex_count:
                    raise VertexOutOfRange(f"vertex {w} not in 1..{self.vertex_count}")
            key = frozenset((u, v))
            if key in seen:
                raise ParallelEdge(f"edge {u}-{v} repeated")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """vertex -> [(neighbour, edge index), ...] in edge order."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertices}
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * (self.vertex_count + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg[1:]

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def to_text(self) -> str:
        lines = [f"{self.vertex_count} {self.edge_count}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EdgeNumbering:
    """Bijection edge index -> coordinate number in ``1..n``.

    ``permutation[k]`` is the number given to the edge at position ``k``.
    """

    permutation: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(x) for x in self.permutation)
        object.__setattr__(self, "permutation", perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(perm)}: {list(perm)}")

    @classmethod
    def identity(cls, n: int) -> EdgeNumbering:
        return cls(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.permutation)

    def coordinate(self, edge_index: int) -> int:
        """0-based coordinate of an edge."""
        return self.permutation[edge_index] - 1

    def inverse(self) -> tuple[int, ...]:
        """coordinate (0-based) -> edge index."""
        inv = [0] * len(self.permutation)
        for k, num in enumerate(self.permutation):
            inv[num - 1] = k
        return tuple(inv)


def resolve_numbering(g: Graph, numbering=None) -> EdgeNumbering:
    if numbering is None:
        return EdgeNumbering.identity(g.edge_count)
    if not isinstance(numbering, EdgeNumbering):
        numbering = EdgeNumbering(tuple(numbering))
    if len(numbering) != g.edge_count:
        raise ValueError(f"numbering has {len(numbering)} entries, graph has {g.edge_count} edges")
    return numbering


def parse_graph(text: str) -> Graph:
    """Parse the ``V E`` header + ``u v`` lines format. ``#`` starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise MalformedLine("empty graph file")

    def ints(lineno, fields):
        if len(fields) != 2:
            raise MalformedLine(f"expected 2 fields, got {len(fields)}", lineno)
        try:
            return int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedLine(f"non-integer field in {' '.join(fields)!r}", lineno) from None

    head_line, head = rows[0]
    nv, ne = ints(head_line, head)
    if nv < 0 or ne < 0:
        raise MalformedLine("negative count in header", head_line)
    body = rows[1:]
    if len(body) != ne:
        raise MalformedLine(f"header declares {ne} edges, found {len(body)}", head_line)

    edges = []
    seen = set()
    for lineno, fields in body:
        u, v = ints(lineno, fields)
        if u == v:
            raise LoopEdge(f"loop at vertex {u}", lineno)
        for w in (u, v):
            if not 1 <= w <= nv:
                raise VertexOutOfRange(f"vertex {w} not in 1..{nv}", lineno)
        key = frozenset((u, v))
        if key in seen:
            raise ParallelEdge(f"edge {u}-{v} repeated", lineno)
        seen.add(key)
        edges.append((u, v))
    return Graph(nv, tuple(edges))


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Components in order of their smallest vertex.

    Each is returned as (graph with local vertex ids, original edge indices),
    local ids preserving the original vertex order and edge order.
    """
    parent = list(range(g.vertex_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)

    out = []
    for root in sorted(groups):
        verts = groups[root]
        local = {v: i + 1 for i, v in enumerate(verts)}
        idx = tuple(i for i, (u, _) in enumerate(g.edges) if find(u) == root)
        edges = tuple((local[g.edges[i][0]], local[g.edges[i][1]]) for i in idx)
        out.append((Graph(len(verts), edges), idx))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertices and edges of later graphs are shifted after earlier ones."""
    offset = 0
    edges = []
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges]
        offset += h.vertex_count
    return Graph(offset, tuple(edges))


def glue(h: Graph, u: int, t: Graph, w: int) -> Graph:
    """Attach ``t`` to ``h`` by identifying vertex ``w`` of t with vertex ``u`` of h.

    The vertices of t other than w are appended after h's vertices; h's edges
    come first, then t's edges in order.
    """
    mapping = {}
    nxt = h.vertex_count + 1
    for x in t.vertices:
        if x == w:
            mapping[x] = u
        else:
            mapping[x] = nxt
            nxt += 1
    edges = list(h.edges) + [(mapping[a], mapping[b]) for a, b in t.edges]
    return Graph(nxt - 1, tuple(edges))


def without_isolated_vertices(g: Graph) -> Graph:
    used = sorted({v for e in g.edges for v in e})
    local = {v: i + 1 for i, v in enumerate(used)}
    return Graph(len(used), tuple((local[u], local[v]) for u, v in g.edges))


def line_graph(g: Graph) -> Graph:
    """Vertex k+1 stands for edge k; two vertices are joined iff the edges meet."""
    edges = []
    for i, j in itertools.combinations(range(g.edge_count), 2):
        if set(g.edges[i]) & set(g.edges[j]):
            edges.append((i + 1, j + 1))
    return Graph(g.edge_count, tuple(edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def path_graph(n_edges: int) -> Graph:
    return Graph(n_edges + 1, tuple((i, i + 1) for i in range(1, n_edges + 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((1, i) for i in range(2, leaves + 2)))


def is_isomorphic(g1: Graph, g2: Graph, *, max_vertices: int = MAX_ISOMORPHISM_VERTICES) -> bool:
    """Exhaustive search over vertex bijections.

    Candidates are restricted to degree-preserving maps and partial maps are
    abandoned as soon as an adjacency disagrees.
    """
    check_limit("vertex count", max(g1.vertex_count, g2.vertex_count), max_vertices)
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    d1, d2 = g1.degrees(), g2.degrees()
    if sorted(d1) != sorted(d2):
        return False
    n = g1.vertex_count
    adj1 = [set() for _ in range(n + 1)]
    adj2 = [set() for _ in range(n + 1)]
    for u, v in g1.edges:
        adj1[u].add(v)
        adj1[v].add(u)
    for u, v in g2.edges:
        adj2[u].add(v)
        adj2[v].add(u)
    # place high-degree vertices first: fewer candidates, earlier pruning
    order = sorted(range(1, n + 1), key=lambda v: -d1[v - 1])
    image = {}
    used = set()

    def extend(pos):
        if pos == n:
            return True
        v = order[pos]
        for w in range(1, n + 1):
            if w in used or d2[w - 1] != d1[v - 1]:
                continue
            if any((image[x] in adj2[w]) != (x in adj1[v]) for x in image):
                continue
            image[v] = w
            used.add(w)
            if extend(pos + 1):
                return True
            del image[v]
            used.discard(w)
        return False

    return extend(0)


def chromatic_polynomial(g: Graph, *, max_edges: int = MAX_CHROMATIC_EDGES) -> IntPolynomial:
    """Deletion-contraction on the lexicographically first edge, no memoisation."""
    check_limit("edge count", g.edge_count, max_edges)
    edges = frozenset(tuple(sorted(e)) for e in g.edges)
    return _chromatic(g.vertex_count, edges)


def _chromatic(nv: int, edges: frozenset) -> IntPolynomial:
    if not edges:
        return IntPolynomial.monomial(nv)
    u, v = min(edges)
    deleted = edges - {(u, v)}
    # contract v into u, then relabel the top vertex into v's slot
    contracted = set()
    for a, b in deleted:
        a = u if a == v else a
        b = u if b == v else b
        a = v if a == nv else a
        b = v if b == nv else b
        contracted.add((min(a, b), max(a, b)))
    return _chromatic(nv, deleted) - _chromatic(nv - 1, frozenset(contracted))


def count_acyclic_orientations(g: Graph, *, max_edges: int = MAX_ORIENTATION_EDGES) -> int:
    """Brute force over all 2^|E| orientations."""
    check_limit("edge count", g.edge_count, max_edges)
    count = 0
    for flips in itertools.product((False, True), repeat=g.edge_count):
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(g.edges, flips)]
        if _is_acyclic(g.vertex_count, arcs):
            count += 1
    return count


def _is_acyclic(nv: int, arcs: Sequence[tuple[int, int]]) -> bool:
    indeg = [0] * (nv + 1)
    out: list[list[int]] = [[] for _ in range(nv + 1)]
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    ready = [v for v in range(1, nv + 1) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == nv


def graph_from_edges(edges: Iterable[tuple[int, int]], vertex_count: int | None = None) -> Graph:
    edges = tuple(edges)
    if vertex_count is None:
        vertex_count = max((max(e) for e in edges), default=0)
    return Graph(vertex_count, edges)
