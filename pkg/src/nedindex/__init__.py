"""Graph clustering quality metrics with clustering back-ends and a sweep harness."""

from .graph import (
    Graph,
    ParseError,
    build_graph,
    degree_sum_over,
    edge_list_text,
    generate_complete,
    generate_wheel,
    load_edge_list,
    parse_edge_list,
    total_degree,
    write_edge_list,
)
from .partition import (
    ClusterStats,
    Partition,
    all_cluster_stats,
    cluster_stats,
    make_partition,
    parse_partition,
    partition_from_labels,
    partition_text,
    read_partition,
    write_partition,
)
from .metrics import (
    MetricReport,
    conductance,
    metric_csv_row,
    modularity,
    ned,
    nedindex,
    nmi,
    report,
)
from .clustering import (
    Dendrogram,
    cut_maxclust,
    kmeans_rows,
    linkage,
    linkage_single,
    row_distances_squared,
)
from .sweep import (
    SweepConfig,
    SweepRecord,
    fixed_partition_report,
    records_to_csv,
    sweep,
)
from . import datasets

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "ParseError",
    "build_graph",
    "degree_sum_over",
    "edge_list_text",
    "generate_complete",
    "generate_wheel",
    "load_edge_list",
    "parse_edge_list",
    "total_degree",
    "write_edge_list",
    "ClusterStats",
    "Partition",
    "all_cluster_stats",
    "cluster_stats",
    "make_partition",
    "parse_partition",
    "partition_from_labels",
    "partition_text",
    "read_partition",
    "write_partition",
    "MetricReport",
    "conductance",
    "metric_csv_row",
    "modularity",
    "ned",
    "nedindex",
    "nmi",
    "report",
    "Dendrogram",
    "cut_maxclust",
    "kmeans_rows",
    "linkage",
    "linkage_single",
    "row_distances_squared",
    "SweepConfig",
    "SweepRecord",
    "fixed_partition_report",
    "records_to_csv",
    "sweep",
    "datasets",
    "__version__",
]
