"""Simple paths and even simple cycles as canonical edge sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import check_limit
from .graph import Graph

MAX_PATH_EDGES = 12

PATH = "path"
EVEN_CYCLE = "even_cycle"


@dataclass(frozen=True)
class EdgeSequence:
    kind: str
    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.edges)


def _walks(g: Graph) -> Iterator[tuple[str, list[int], list[int]]]:
    """Every directed simple path from every start vertex, and every closed
    walk returning to its start (each cycle appears once per start/direction)."""
    adj = g.adjacency()
    for start in g.vertices:
        verts = [start]
        edges: list[int] = []
        on_path = {start}

        def dfs(v):
            for w, e in adj[v]:
                if w == start and len(edges) >= 2 and e != edges[-1]:
                    yield "cycle", verts + [start], edges + [e]
                if w in on_path:
                    continue
                verts.append(w)
                edges.append(e)
                on_path.add(w)
                yield "path", list(verts), list(edges)
                yield from dfs(w)
                on_path.discard(w)
                edges.pop()
                verts.pop()

        yield from dfs(start)


def enumerate_simple_paths(g: Graph, *, max_edges: int = MAX_PATH_EDGES) -> list[EdgeSequence]:
    """One representative per simple path with at least one edge.

    Of the two traversal directions the one starting with the smaller edge
    index is kept; a single edge is traversed from its first listed endpoint.
    """
    check_limit("edge count", g.edge_count, max_edges)
    out = []
    for kind, verts, edges in _walks(g):
        if kind != "path":
            continue
        if len(edges) == 1:
            keep = verts[0] == g.edges[edges[0]][0]
        else:
            keep = edges[0] < edges[-1]
        if keep:
            out.append(EdgeSequence(PATH, tuple(edges), tuple(verts)))
    out.sort(key=lambda s: (len(s.edges), s.edges))
    return out


def enumerate_even_cycles(g: Graph, *, max_edges: int = MAX_PATH_EDGES) -> list[EdgeSequence]:
    """One representative per simple cycle of even length.

    The representative starts at the cycle's smallest edge index and heads
    toward the smaller of that edge's two neighbouring edge indices.
    """
    check_limit("edge count", g.edge_count, max_edges)
    out = []
    for kind, verts, edges in _walks(g):
        if kind != "cycle" or len(edges) % 2:
            continue
        if edges[0] == min(edges) and edges[1] < edges[-1]:
            out.append(EdgeSequence(EVEN_CYCLE, tuple(edges), tuple(verts)))
    out.sort(key=lambda s: (len(s.edges), s.edges))
    return out


def generating_sequences(g: Graph, *, max_edges: int = MAX_PATH_EDGES) -> list[EdgeSequence]:
    """All simple paths followed by all even cycles."""
    return enumerate_simple_paths(g, max_edges=max_edges) + enumerate_even_cycles(
        g, max_edges=max_edges
    )


def check_sequence(g: Graph, seq: EdgeSequence) -> None:
    """Raise AssertionError unless ``seq`` is a well-formed path or even cycle of g."""
    verts, edges = seq.vertices, seq.edges
    assert len(verts) == len(edges) + 1, "vertex/edge count mismatch"
    assert len(set(edges)) == len(edges), "repeated edge"
    for i, e in enumerate(edges):
        assert set(g.edges[e]) == {verts[i], verts[i + 1]}, f"edge {e} does not join step {i}"
    if seq.kind == PATH:
        assert len(edges) >= 1
        assert len(set(verts)) == len(verts), "path revisits a vertex"
    elif seq.kind == EVEN_CYCLE:
        assert verts[0] == verts[-1], "cycle not closed"
        assert len(set(verts[:-1])) == len(verts) - 1, "cycle revisits a vertex"
        assert len(edges) >= 4 and len(edges) % 2 == 0, "cycle length not even >= 4"
    else:
        raise AssertionError(f"unknown kind {seq.kind!r}")


def canonical_path(g: Graph, edges) -> tuple[int, ...]:
    """Canonical edge order for a path given in either direction."""
    edges = tuple(edges)
    rev = edges[::-1]
    return min(edges, rev)
