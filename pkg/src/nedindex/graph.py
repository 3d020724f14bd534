"""Immutable simple undirected graphs: construction, generators, edge-list I/O.

All graphs are simple (no self-loops, no parallel edges) and undirected.
Vertices are densified to ids ``0..n-1`` in first-appearance order; the
original tokens are kept in :attr:`Graph.labels` for reporting.
"""

from __future__ import annotations

import io
import os
import re
from dataclasses import dataclass, field
from typing import IO, Hashable, Iterable, Iterator

__all__ = [
    "Graph",
    "ParseError",
    "build_graph",
    "total_degree",
    "degree_sum_over",
    "generate_complete",
    "generate_wheel",
    "parse_edge_list",
    "load_edge_list",
    "edge_list_text",
    "write_edge_list",
]


class ParseError(ValueError):
    """Malformed input file; carries the 1-based offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph over dense vertex ids ``0..n-1``.

    Invariants (checked by the constructors in this module):
      * adjacency is symmetric and loop-free,
      * ``degrees[v] == len(adjacency[v])``,
      * ``sum(degrees) == 2 * edge_count``.
    """

    adjacency: tuple[frozenset[int], ...]
    degrees: tuple[int, ...]
    edge_count: int
    labels: tuple[Hashable, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, ascending."""
        for u in range(len(self.adjacency)):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    def dense_id(self, label: Hashable) -> int:
        """Dense id of an original vertex token."""
        try:
            return self._label_index[label]
        except KeyError:
            raise ValueError(f"unknown vertex label: {label!r}") from None

    @property
    def _label_index(self) -> dict:
        cached = self.__dict__.get("_label_index_cache")
        if cached is None:
            cached = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_label_index_cache", cached)
        return cached


def _finish(adjacency: list[set[int]], labels: list) -> Graph:
    degrees = tuple(len(s) for s in adjacency)
    edge_count = sum(degrees) // 2
    return Graph(
        adjacency=tuple(frozenset(s) for s in adjacency),
        degrees=degrees,
        edge_count=edge_count,
        labels=tuple(labels),
    )


def build_graph(edges: Iterable[tuple[Hashable, Hashable]], vertex_hint: int | None = None) -> Graph:
    """Build a graph from an edge list of arbitrary hashable vertex tokens.

    Duplicate edges (in either orientation) collapse to one undirected edge
    and self-loops are dropped, though a self-loop still declares its vertex.
    ``vertex_hint=n`` pre-declares vertices labelled ``0..n-1``, which is the
    only way a pure edge list can carry isolated vertices.
    """
    labels: list = []
    index: dict = {}

    def dense(label: Hashable) -> int:
        i = index.get(label)
        if i is None:
            i = len(labels)
            index[label] = i
            labels.append(label)
        return i

    if vertex_hint is not None:
        for v in range(vertex_hint):
            dense(v)

    adjacency: list[set[int]] = [set() for _ in labels]
    for u, v in edges:
        du = dense(u)
        dv = dense(v)
        while len(adjacency) < len(labels):
            adjacency.append(set())
        if du == dv:
            continue
        adjacency[du].add(dv)
        adjacency[dv].add(du)
    return _finish(adjacency, labels)


def total_degree(g: Graph) -> int:
    """Sum of all vertex degrees, which equals twice the edge count."""
    return 2 * g.edge_count


def degree_sum_over(g: Graph, vertices: Iterable[int]) -> int:
    """Sum of full-graph degrees over a vertex set (volume of the set).

    Edges leaving the set are counted once per endpoint inside the set.
    """
    n = g.vertex_count
    acc = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"invalid vertex id: {v}")
        acc += g.degrees[v]
    return acc


def generate_complete(n: int) -> Graph:
    """Complete graph K_n on vertices ``0..n-1``; n must be >= 1."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    full = frozenset(range(n))
    adjacency = [set(full - {v}) for v in range(n)]
    return _finish(adjacency, list(range(n)))


def generate_wheel(n: int) -> Graph:
    """Wheel graph: hub vertex 0 joined to a cycle on ``1..n-1``; n must be >= 4."""
    if n < 4:
        raise ValueError(f"wheel graph needs n >= 4, got {n}")
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for v in range(1, n):
        adjacency[0].add(v)
        adjacency[v].add(0)
    rim = list(range(1, n))
    for i, v in enumerate(rim):
        w = rim[(i + 1) % len(rim)]
        adjacency[v].add(w)
        adjacency[w].add(v)
    return _finish(adjacency, list(range(n)))


_CANONICAL_HEADER = re.compile(r"^[#%]\s*vertices:\s*(\d+)\s+edges:\s*(\d+)\s*$")


def _token(tok: str) -> Hashable:
    try:
        return int(tok)
    except ValueError:
        return tok


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: two whitespace-separated tokens per line.

    Lines starting with ``#`` or ``%`` are comments and blank lines are
    skipped.  Integer-looking tokens become int labels, others stay strings.
    A canonical ``# vertices: N edges: M`` header (as emitted by
    :func:`write_edge_list`) is honored as a vertex-count declaration so that
    isolated vertices survive a round trip; other comments are ignored.
    """
    edges: list[tuple[Hashable, Hashable]] = []
    vertex_hint: int | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(("#", "%")):
            m = _CANONICAL_HEADER.match(line)
            if m and vertex_hint is None:
                vertex_hint = int(m.group(1))
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {line_no}: expected 2 vertex tokens, got {len(tokens)}: {raw!r}",
                line_no=line_no,
            )
        edges.append((_token(tokens[0]), _token(tokens[1])))
    return build_graph(edges, vertex_hint=vertex_hint)


def load_edge_list(source: IO[bytes] | bytes | str | os.PathLike) -> Graph:
    """Load a graph from an edge-list file path, byte stream, or bytes."""
    if isinstance(source, bytes):
        return parse_edge_list(source.decode("utf-8"))
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return parse_edge_list(fh.read().decode("utf-8"))
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return parse_edge_list(data)


def edge_list_text(g: Graph) -> str:
    """Canonical edge-list serialization: header plus one ``u v`` line per edge.

    Edges are written over dense ids with ``u < v`` in ascending order, so the
    output is a deterministic function of the graph structure.
    """
    out = io.StringIO()
    out.write(f"# vertices: {g.vertex_count} edges: {g.edge_count}\n")
    for u, v in g.edges():
        out.write(f"{u} {v}\n")
    return out.getvalue()


def write_edge_list(g: Graph, target: IO[str] | str | os.PathLike) -> None:
    """Write the canonical edge-list serialization to a path or text stream."""
    text = edge_list_text(g)
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        target.write(text)
