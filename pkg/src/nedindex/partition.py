"""Disjoint complete vertex clusterings and their per-cluster edge tallies."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import IO, Iterable

from .graph import Graph, ParseError, degree_sum_over

__all__ = [
    "Partition",
    "ClusterStats",
    "make_partition",
    "partition_from_labels",
    "cluster_stats",
    "all_cluster_stats",
    "partition_text",
    "write_partition",
    "read_partition",
    "parse_partition",
]


@dataclass(frozen=True)
class Partition:
    """Assignment of every vertex to exactly one of ``cluster_count`` clusters.

    Cluster indices are compact (``0..k-1``, all non-empty) and ``members[c]``
    lists the vertices of cluster ``c`` in ascending order.
    """

    assignment: tuple[int, ...]
    cluster_count: int
    members: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.assignment)


def partition_from_labels(labels: Iterable[int]) -> Partition:
    """Build a partition from raw per-vertex labels, compacting empty ones.

    Labels are arbitrary integers; they are renumbered to ``0..k-1`` in
    ascending label order.
    """
    raw = list(labels)
    if not raw:
        return Partition(assignment=(), cluster_count=0, members=())
    remap = {lab: i for i, lab in enumerate(sorted(set(raw)))}
    assignment = tuple(remap[lab] for lab in raw)
    members: list[list[int]] = [[] for _ in remap]
    for v, c in enumerate(assignment):
        members[c].append(v)
    return Partition(
        assignment=assignment,
        cluster_count=len(remap),
        members=tuple(tuple(m) for m in members),
    )


def make_partition(g: Graph, assignment: Iterable[int]) -> Partition:
    """Validate a per-vertex cluster assignment against a graph.

    The assignment must supply one integer label per vertex; labels are
    compacted so every cluster index in ``0..k-1`` is non-empty.
    """
    raw = list(assignment)
    if len(raw) != g.vertex_count:
        raise ValueError(
            f"assignment covers {len(raw)} vertices, graph has {g.vertex_count}"
        )
    return partition_from_labels(raw)


@dataclass(frozen=True)
class ClusterStats:
    """Edge/degree tallies of one cluster.

    ``internal_degree`` is twice ``internal_edges`` (the degree sum inside the
    induced subgraph) and ``cut`` counts edge endpoints leaving the cluster,
    so ``cut == graph_degree - internal_degree``.
    """

    size: int
    internal_edges: int
    internal_degree: int
    graph_degree: int
    cut: int


def all_cluster_stats(g: Graph, p: Partition) -> tuple[ClusterStats, ...]:
    """Stats for every cluster of ``p`` in one pass over the edges."""
    if p.vertex_count != g.vertex_count:
        raise ValueError(
            f"partition covers {p.vertex_count} vertices, graph has {g.vertex_count}"
        )
    k = p.cluster_count
    internal = [0] * k
    graph_deg = [0] * k
    sizes = [0] * k
    assign = p.assignment
    for v, c in enumerate(assign):
        sizes[c] += 1
        graph_deg[c] += g.degrees[v]
        for w in g.adjacency[v]:
            if w > v and assign[w] == c:
                internal[c] += 1
    return tuple(
        ClusterStats(
            size=sizes[c],
            internal_edges=internal[c],
            internal_degree=2 * internal[c],
            graph_degree=graph_deg[c],
            cut=graph_deg[c] - 2 * internal[c],
        )
        for c in range(k)
    )


def cluster_stats(g: Graph, p: Partition, c: int) -> ClusterStats:
    """Stats for cluster ``c``; raises on an out-of-range cluster index."""
    if not 0 <= c < p.cluster_count:
        raise ValueError(
            f"cluster index {c} out of range for {p.cluster_count} clusters"
        )
    members = p.members[c]
    internal = 0
    for v in members:
        for w in g.adjacency[v]:
            if w > v and p.assignment[w] == c:
                internal += 1
    graph_deg = degree_sum_over(g, members)
    return ClusterStats(
        size=len(members),
        internal_edges=internal,
        internal_degree=2 * internal,
        graph_degree=graph_deg,
        cut=graph_deg - 2 * internal,
    )


def partition_text(g: Graph, p: Partition) -> str:
    """Serialize as one ``vertex_label cluster_index`` line per vertex."""
    if p.vertex_count != g.vertex_count:
        raise ValueError("partition does not match graph")
    out = io.StringIO()
    for v in range(g.vertex_count):
        out.write(f"{g.labels[v]} {p.assignment[v]}\n")
    return out.getvalue()


def write_partition(g: Graph, p: Partition, target: IO[str] | str | os.PathLike) -> None:
    """Write the partition serialization to a path or text stream."""
    text = partition_text(g, p)
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        target.write(text)


def parse_partition(g: Graph, text: str) -> Partition:
    """Parse ``vertex_label cluster_index`` lines into a partition of ``g``.

    Any amount of whitespace separates the two fields.  Every vertex of the
    graph must appear exactly once; labels are matched against the graph's
    original vertex tokens.
    """
    labels: dict[int, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "%")):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {line_no}: expected 'vertex cluster', got {raw!r}",
                line_no=line_no,
            )
        try:
            cluster = int(tokens[1])
        except ValueError:
            raise ParseError(
                f"line {line_no}: cluster index {tokens[1]!r} is not an integer",
                line_no=line_no,
            ) from None
        label = tokens[0]
        try:
            v = g.dense_id(label)
        except ValueError:
            try:
                v = g.dense_id(int(label))
            except (ValueError, TypeError):
                raise ParseError(
                    f"line {line_no}: unknown vertex {label!r}", line_no=line_no
                ) from None
        if v in labels:
            raise ParseError(
                f"line {line_no}: vertex {label!r} assigned twice", line_no=line_no
            )
        labels[v] = cluster
    if len(labels) != g.vertex_count:
        missing = g.vertex_count - len(labels)
        raise ParseError(f"partition leaves {missing} vertices unassigned")
    return partition_from_labels(labels[v] for v in range(g.vertex_count))


def read_partition(g: Graph, source: IO[bytes] | bytes | str | os.PathLike) -> Partition:
    """Load a partition of ``g`` from a file path, byte stream, or bytes."""
    if isinstance(source, bytes):
        return parse_partition(g, source.decode("utf-8"))
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return parse_partition(g, fh.read().decode("utf-8"))
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return parse_partition(g, data)
