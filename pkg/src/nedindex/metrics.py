"""Clustering quality metrics: NEDindex, modularity, NMI, and conductance.

All metrics are pure functions of immutable inputs.  Conventions for the
degenerate edgeless graph (where the usual denominators vanish): NEDindex,
modularity and conductance are all defined as 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, total_degree
from .partition import ClusterStats, Partition, all_cluster_stats

__all__ = [
    "MetricReport",
    "ned",
    "nedindex",
    "modularity",
    "nmi",
    "conductance",
    "report",
    "metric_csv_row",
    "METRIC_CSV_HEADER",
]


@dataclass(frozen=True)
class MetricReport:
    """All metric values for one (graph, partition) pair.

    ``nmi`` is present only when a reference partition was supplied.  The
    per-cluster vectors are indexed by cluster and let callers recompute
    alternative aggregations (e.g. a volume-weighted conductance).
    """

    nedindex: float
    modularity: float
    nmi: float | None
    conductance: float
    per_cluster_ned: tuple[float, ...]
    per_cluster_conductance: tuple[float, ...]

    @property
    def cluster_count(self) -> int:
        return len(self.per_cluster_ned)


def ned(stats: ClusterStats) -> float:
    """Node-edge-degree score of one cluster, in (0, 1].

    Ratio of (vertex count + internal edges + internal degree) to
    (vertex count + complete-graph edge count + full-graph degree sum).
    The denominator dominates the numerator term by term, and is at least 1,
    so the score is total and bounded.
    """
    s = stats.size
    numerator = s + stats.internal_edges + stats.internal_degree
    denominator = s + s * (s - 1) // 2 + stats.graph_degree
    return numerator / denominator


def _nedindex_from_stats(stats: tuple[ClusterStats, ...], graph_degree: int) -> float:
    if graph_degree == 0:
        return 0.0
    weighted = sum(ned(st) * st.internal_degree for st in stats)
    return weighted / graph_degree


def nedindex(g: Graph, p: Partition) -> float:
    """Internal-degree-weighted mean of per-cluster NED scores, in [0, 1].

    Each cluster's NED is weighted by its internal degree and the sum is
    normalized by the graph's total degree.  Edgeless graphs score 0.
    """
    return _nedindex_from_stats(all_cluster_stats(g, p), total_degree(g))


def _modularity_from_stats(stats: tuple[ClusterStats, ...], graph_degree: int) -> float:
    if graph_degree == 0:
        return 0.0
    edge_count = graph_degree / 2
    return sum(
        st.internal_edges / edge_count - (st.graph_degree / graph_degree) ** 2
        for st in stats
    )


def modularity(g: Graph, p: Partition) -> float:
    """Newman modularity Q of a partition, in [-1, 1].

    Fraction of edges inside clusters minus the expected fraction under the
    degree-preserving random null model; computed per cluster as
    ``|E_c|/|E| - (vol(c)/2|E|)^2``.  Edgeless graphs score 0.
    """
    return _modularity_from_stats(all_cluster_stats(g, p), total_degree(g))


def nmi(p: Partition, q: Partition) -> float:
    """Normalized mutual information between two partitions, in [0, 1].

    Computed from the confusion matrix ``N_ab = |p_a ∩ q_b|`` with natural
    logarithms; zero-count cells contribute nothing.  When either partition
    has zero entropy (a single cluster) the ratio degenerates: it is 1 if the
    two groupings are identical and 0 otherwise.
    """
    if p.vertex_count != q.vertex_count:
        raise ValueError(
            f"partitions cover {p.vertex_count} and {q.vertex_count} vertices"
        )
    n = p.vertex_count
    if n == 0:
        return 1.0
    confusion: dict[tuple[int, int], int] = {}
    for a, b in zip(p.assignment, q.assignment):
        confusion[(a, b)] = confusion.get((a, b), 0) + 1
    row = [len(m) for m in p.members]
    col = [len(m) for m in q.members]
    if p.cluster_count == 1 or q.cluster_count == 1:
        return 1.0 if p.assignment == q.assignment else 0.0
    mutual = sum(
        c * math.log(c * n / (row[a] * col[b])) for (a, b), c in confusion.items()
    )
    entropy = sum(r * math.log(r / n) for r in row) + sum(
        c * math.log(c / n) for c in col
    )
    return -2.0 * mutual / entropy


def _conductance_per_cluster(
    stats: tuple[ClusterStats, ...], graph_degree: int
) -> tuple[float, ...]:
    values = []
    for st in stats:
        if st.cut == 0:
            values.append(0.0)
        else:
            values.append(st.cut / min(st.graph_degree, graph_degree - st.graph_degree))
    return tuple(values)


def conductance(g: Graph, p: Partition) -> float:
    """Mean conductance over clusters, in [0, 1].

    Per cluster: boundary edge endpoints divided by the smaller of the
    cluster's volume and the complement's volume; a zero-cut cluster scores 0
    (this also covers the whole-graph cluster, whose complement volume is 0).
    The aggregate is the unweighted mean; per-cluster values are available in
    :class:`MetricReport`.
    """
    deg = total_degree(g)
    if deg == 0:
        return 0.0
    per = _conductance_per_cluster(all_cluster_stats(g, p), deg)
    return sum(per) / len(per)


def report(g: Graph, p: Partition, reference: Partition | None = None) -> MetricReport:
    """Compute every metric for one (graph, partition) pair.

    All metrics share a single pass of per-cluster tallies.  NMI is computed
    against ``reference`` when one is supplied and omitted otherwise.
    """
    stats = all_cluster_stats(g, p)
    deg = total_degree(g)
    per_ned = tuple(ned(st) for st in stats)
    if deg == 0:
        per_cond: tuple[float, ...] = tuple(0.0 for _ in stats)
        mean_cond = 0.0
    else:
        per_cond = _conductance_per_cluster(stats, deg)
        mean_cond = sum(per_cond) / len(per_cond) if per_cond else 0.0
    return MetricReport(
        nedindex=_nedindex_from_stats(stats, deg),
        modularity=_modularity_from_stats(stats, deg),
        nmi=nmi(p, reference) if reference is not None else None,
        conductance=mean_cond,
        per_cluster_ned=per_ned,
        per_cluster_conductance=per_cond,
    )


METRIC_CSV_HEADER = "k,nedindex,modularity,nmi,conductance"


def metric_csv_row(r: MetricReport) -> str:
    """One CSV row ``k,nedindex,modularity,nmi,conductance`` (nmi may be empty)."""
    nmi_field = "" if r.nmi is None else repr(r.nmi)
    return f"{r.cluster_count},{r.nedindex!r},{r.modularity!r},{nmi_field},{r.conductance!r}"
