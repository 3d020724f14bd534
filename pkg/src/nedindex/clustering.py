"""Clustering back-ends that work over 0/1 adjacency-matrix rows.

Both back-ends treat vertex ``v`` as the point given by row ``v`` of the
adjacency matrix (diagonal 0) under Euclidean distance.  Squared distances
then have the exact integer closed form

    dist2(u, v) = deg(u) + deg(v) - 2 * |adj(u) ∩ adj(v)|

(the two diagonal positions contribute exactly the adjacency indicator twice,
which is also what the symmetric difference counts for u and v themselves),
so no dense row matrix is ever materialized and ties are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .graph import Graph
from .partition import Partition, partition_from_labels

__all__ = [
    "Dendrogram",
    "LINKAGE_CRITERIA",
    "row_distances_squared",
    "linkage",
    "linkage_single",
    "cut_maxclust",
    "kmeans_rows",
]

LINKAGE_CRITERIA = ("single", "complete", "average")


@dataclass(frozen=True)
class Dendrogram:
    """Agglomerative merge tree over ``leaf_count`` vertices.

    ``merges[t] = (a, b, distance)`` joins clusters ``a`` and ``b`` into a new
    cluster with id ``leaf_count + t``; ids below ``leaf_count`` are leaves.
    Distances are non-decreasing along the merge sequence.
    """

    merges: tuple[tuple[int, int, float], ...]
    leaf_count: int


def _adjacency_csr(g: Graph) -> sparse.csr_matrix:
    n = g.vertex_count
    indptr = np.zeros(n + 1, dtype=np.int64)
    indices: list[int] = []
    for v in range(n):
        nbrs = sorted(g.adjacency[v])
        indices.extend(nbrs)
        indptr[v + 1] = len(indices)
    data = np.ones(len(indices), dtype=np.int64)
    return sparse.csr_matrix(
        (data, np.asarray(indices, dtype=np.int64), indptr), shape=(n, n)
    )


def _common_neighbors(g: Graph, adj: sparse.csr_matrix, u: int) -> np.ndarray:
    nbrs = np.fromiter(g.adjacency[u], dtype=np.int64, count=g.degrees[u])
    if len(nbrs) == 0:
        return np.zeros(g.vertex_count, dtype=np.int64)
    return np.asarray(adj[nbrs].sum(axis=0)).ravel()


def row_distances_squared(g: Graph, u: int, adj: sparse.csr_matrix | None = None) -> np.ndarray:
    """Exact squared Euclidean row distances from vertex ``u`` to all vertices."""
    if not 0 <= u < g.vertex_count:
        raise ValueError(f"invalid vertex id: {u}")
    if adj is None:
        adj = _adjacency_csr(g)
    deg = np.asarray(g.degrees, dtype=np.int64)
    return deg[u] + deg - 2 * _common_neighbors(g, adj, u)


def _mst_edges(g: Graph) -> np.ndarray:
    """Prim's algorithm over the implicit complete row-distance graph.

    Returns an (n-1, 3) int array of (u, v, dist2) spanning-tree edges using
    O(n) memory; every candidate distance comes from the sparse closed form.
    """
    n = g.vertex_count
    deg = np.asarray(g.degrees, dtype=np.int64)
    adj = _adjacency_csr(g)
    sentinel = np.iinfo(np.int64).max
    best = np.full(n, sentinel, dtype=np.int64)
    best_from = np.full(n, -1, dtype=np.int64)
    in_tree = np.zeros(n, dtype=bool)
    edges = np.empty((n - 1, 3), dtype=np.int64)
    current = 0
    in_tree[0] = True
    for step in range(n - 1):
        d2 = deg[current] + deg - 2 * _common_neighbors(g, adj, current)
        improved = (~in_tree) & (d2 < best)
        best[improved] = d2[improved]
        best_from[improved] = current
        candidates = np.where(in_tree, sentinel, best)
        nxt = int(np.argmin(candidates))
        edges[step] = (best_from[nxt], nxt, best[nxt])
        in_tree[nxt] = True
        current = nxt
    return edges


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def _single_linkage(g: Graph) -> Dendrogram:
    n = g.vertex_count
    edges = _mst_edges(g)
    lo = np.minimum(edges[:, 0], edges[:, 1])
    hi = np.maximum(edges[:, 0], edges[:, 1])
    # deterministic tie-breaking: equal distances merge lowest vertex pair first
    order = np.lexsort((hi, lo, edges[:, 2]))
    uf = _UnionFind(n)
    cluster_id = list(range(n))
    merges: list[tuple[int, int, float]] = []
    for idx in order:
        u, v, d2 = int(lo[idx]), int(hi[idx]), int(edges[idx, 2])
        ru, rv = uf.find(u), uf.find(v)
        ca, cb = cluster_id[ru], cluster_id[rv]
        uf.union(ru, rv)
        cluster_id[uf.find(rv)] = n + len(merges)
        merges.append((min(ca, cb), max(ca, cb), math.sqrt(d2)))
    return Dendrogram(merges=tuple(merges), leaf_count=n)


def _full_distance_matrix(g: Graph) -> np.ndarray:
    n = g.vertex_count
    adj = _adjacency_csr(g)
    deg = np.asarray(g.degrees, dtype=np.int64)
    common = np.asarray((adj @ adj.T).todense(), dtype=np.int64)
    d2 = deg[:, None] + deg[None, :] - 2 * common
    np.fill_diagonal(d2, 0)
    return np.sqrt(d2.astype(np.float64))


def _lance_williams_linkage(g: Graph, criterion: str) -> Dendrogram:
    """Complete/average linkage by global-minimum agglomeration.

    Uses a dense distance matrix, so it is meant for desk-scale exploration;
    the scalable default is single linkage.
    """
    n = g.vertex_count
    dist = _full_distance_matrix(g)
    np.fill_diagonal(dist, np.inf)
    active = np.ones(n, dtype=bool)
    sizes = np.ones(n, dtype=np.int64)
    cluster_id = list(range(n))
    merges: list[tuple[int, int, float]] = []
    for step in range(n - 1):
        masked = np.where(active[:, None] & active[None, :], dist, np.inf)
        flat = int(np.argmin(masked))
        i, j = divmod(flat, n)
        if i > j:
            i, j = j, i
        d = float(dist[i, j])
        if criterion == "complete":
            merged = np.maximum(dist[i], dist[j])
        else:
            merged = (sizes[i] * dist[i] + sizes[j] * dist[j]) / (sizes[i] + sizes[j])
        dist[i, :] = merged
        dist[:, i] = merged
        dist[i, i] = np.inf
        active[j] = False
        merges.append((min(cluster_id[i], cluster_id[j]), max(cluster_id[i], cluster_id[j]), d))
        cluster_id[i] = n + step
        sizes[i] += sizes[j]
    return Dendrogram(merges=tuple(merges), leaf_count=n)


def linkage(g: Graph, criterion: str = "single") -> Dendrogram:
    """Agglomerative clustering of adjacency rows into a full merge tree.

    ``criterion`` selects the inter-cluster distance: "single" (the default,
    and the only criterion with an O(n) memory path), "complete", or
    "average".
    """
    if criterion not in LINKAGE_CRITERIA:
        raise ValueError(
            f"unknown linkage criterion {criterion!r}; choose from {LINKAGE_CRITERIA}"
        )
    if g.vertex_count < 1:
        raise ValueError("linkage needs at least one vertex")
    if g.vertex_count == 1:
        return Dendrogram(merges=(), leaf_count=1)
    if criterion == "single":
        return _single_linkage(g)
    return _lance_williams_linkage(g, criterion)


def linkage_single(g: Graph) -> Dendrogram:
    """Single-linkage merge tree (minimum inter-cluster row distance)."""
    return linkage(g, "single")


def cut_maxclust(d: Dendrogram, k: int) -> Partition:
    """Flat clustering with at most ``k`` clusters from a merge tree.

    Finds the smallest distance threshold whose flat clustering has at most
    ``k`` clusters; merges tied at that threshold all apply, so the result may
    have fewer than ``k`` clusters.
    """
    n = d.leaf_count
    if not 1 <= k <= n:
        raise ValueError(f"cluster count {k} out of range 1..{n}")
    take = n - k
    if take > 0 and d.merges:
        threshold = d.merges[take - 1][2]
        while take < len(d.merges) and d.merges[take][2] <= threshold:
            take += 1
    uf = _UnionFind(n)
    rep = list(range(n)) + [0] * len(d.merges)
    for t, (a, b, _) in enumerate(d.merges[:take]):
        uf.union(rep[a], rep[b])
        rep[n + t] = uf.find(rep[b])
    return partition_from_labels(uf.find(v) for v in range(n))


def _seed_centers(
    g: Graph, adj: sparse.csr_matrix, k: int, rng: np.random.Generator
) -> np.ndarray:
    """k-means++ over the data points: D^2-weighted picks of distinct vertices."""
    n = g.vertex_count
    centers = np.empty(k, dtype=np.int64)
    centers[0] = rng.integers(n)
    d2 = row_distances_squared(g, int(centers[0]), adj).astype(np.float64)
    chosen = {int(centers[0])}
    for j in range(1, k):
        total = d2.sum()
        if total > 0:
            pick = int(rng.choice(n, p=d2 / total))
        else:
            # remaining points coincide with a chosen center; spread uniformly
            pool = np.asarray(sorted(set(range(n)) - chosen))
            pick = int(pool[rng.integers(len(pool))])
        centers[j] = pick
        chosen.add(pick)
        d2 = np.minimum(d2, row_distances_squared(g, pick, adj))
    return centers


def _lloyd(
    points: sparse.csr_matrix,
    deg: np.ndarray,
    k: int,
    centers: np.ndarray,
    max_iter: int,
) -> tuple[np.ndarray, list[float]]:
    """One Lloyd run from given centers; returns labels and the objective trace."""
    n = points.shape[0]
    rows = np.arange(n)
    centroids = points[centers].toarray()
    labels: np.ndarray | None = None
    history: list[float] = []
    for _ in range(max_iter):
        scores = -2.0 * (points @ centroids.T) + (centroids * centroids).sum(axis=1)
        new_labels = np.argmin(scores, axis=1)
        counts = np.bincount(new_labels, minlength=k)
        empty = np.flatnonzero(counts == 0)
        if len(empty):
            # repair: hand each empty cluster the farthest point a cluster can spare
            point_cost = deg + scores[rows, new_labels]
            for j in empty:
                eligible = counts[new_labels] > 1
                candidate = np.where(eligible, point_cost, -np.inf)
                pick = int(np.argmax(candidate))
                counts[new_labels[pick]] -= 1
                new_labels[pick] = j
                counts[j] += 1
                point_cost[pick] = 0.0
        if labels is not None and np.array_equal(new_labels, labels):
            break
        labels = new_labels
        member_matrix = sparse.csr_matrix(
            (np.ones(n), (labels, rows)), shape=(k, n)
        )
        centroids = (member_matrix @ points).toarray() / counts[:, None]
        fresh = -2.0 * (points @ centroids.T) + (centroids * centroids).sum(axis=1)
        history.append(float((deg + fresh[rows, labels]).sum()))
    assert labels is not None
    return labels, history


def kmeans_rows(
    g: Graph,
    k: int,
    seed: int = 0,
    max_iter: int = 100,
    n_init: int = 10,
    objective_history: list[float] | None = None,
) -> Partition:
    """Lloyd's k-means over adjacency rows, deterministic for a fixed seed.

    Runs ``n_init`` k-means++ initializations (all drawn from the one seeded
    generator) and keeps the lowest final within-cluster squared distance,
    the usual guard against Lloyd's local optima.  Empty clusters are
    repaired by reassigning the farthest point from a cluster that can spare
    one.  ``objective_history``, when supplied, receives the winning run's
    objective after each iteration (a testing hook; it never increases).
    """
    n = g.vertex_count
    if not 1 <= k <= n:
        raise ValueError(f"cluster count {k} out of range 1..{n}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be positive, got {max_iter}")
    if n_init < 1:
        raise ValueError(f"n_init must be positive, got {n_init}")
    rng = np.random.default_rng(seed)
    adj = _adjacency_csr(g)
    deg = np.asarray(g.degrees, dtype=np.float64)
    points = adj.astype(np.float64).tocsr()
    best_labels: np.ndarray | None = None
    best_history: list[float] = []
    for _ in range(n_init):
        centers = _seed_centers(g, adj, k, rng)
        labels, history = _lloyd(points, deg, k, centers, max_iter)
        if best_labels is None or history[-1] < best_history[-1]:
            best_labels, best_history = labels, history
    assert best_labels is not None
    if objective_history is not None:
        objective_history.extend(best_history)
    return partition_from_labels(int(c) for c in best_labels)
