"""Cluster-count sweeps: cluster, score, repeat, average, emit CSV."""

from __future__ import annotations

import io
import time
from dataclasses import dataclass
from typing import Iterable

from .clustering import LINKAGE_CRITERIA, cut_maxclust, kmeans_rows, linkage
from .graph import Graph
from .metrics import MetricReport, report
from .partition import Partition

__all__ = [
    "SweepConfig",
    "SweepRecord",
    "sweep",
    "fixed_partition_report",
    "records_to_csv",
    "SWEEP_CSV_HEADER",
    "METHODS",
]

METHODS = ("hierarchical", "kmeans")

SWEEP_CSV_HEADER = "k,repeat,seed,nedindex,modularity,nmi,conductance,elapsed_ms"


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: cluster counts ``k_min..k_max`` inclusive, repeated runs.

    Repeat ``r`` runs with seed ``base_seed + r``.  Hierarchical cuts are
    seed-independent, so their repeats duplicate values; the averaging is
    meaningful for the k-means back-end.
    """

    k_min: int
    k_max: int
    method: str = "hierarchical"
    repeats: int = 5
    base_seed: int = 0
    reference: Partition | None = None
    linkage_criterion: str = "single"
    kmeans_max_iter: int = 100


@dataclass(frozen=True)
class SweepRecord:
    """One sweep row; averaged rows use ``repeat_index = -1`` and no seed.

    Averaged rows carry the arithmetic mean of the scalar metrics over the
    k's repeat rows; their per-cluster vectors are empty because cluster
    counts may differ between repeats.
    """

    k: int
    repeat_index: int
    seed: int | None
    metrics: MetricReport
    elapsed: float

    @property
    def is_average(self) -> bool:
        return self.repeat_index == -1


def _validate(g: Graph, cfg: SweepConfig) -> None:
    if cfg.method not in METHODS:
        raise ValueError(f"unknown method {cfg.method!r}; choose from {METHODS}")
    if cfg.linkage_criterion not in LINKAGE_CRITERIA:
        raise ValueError(
            f"unknown linkage criterion {cfg.linkage_criterion!r}; "
            f"choose from {LINKAGE_CRITERIA}"
        )
    if cfg.repeats < 1:
        raise ValueError(f"repeats must be positive, got {cfg.repeats}")
    if not 1 <= cfg.k_min <= cfg.k_max:
        raise ValueError(f"bad k range {cfg.k_min}..{cfg.k_max}")
    if cfg.k_max > g.vertex_count:
        raise ValueError(
            f"k range extends to {cfg.k_max} but the graph has only "
            f"{g.vertex_count} vertices"
        )
    if cfg.reference is not None and cfg.reference.vertex_count != g.vertex_count:
        raise ValueError("reference partition does not match the graph")


def _mean(values: list[float]) -> float:
    return sum(values) / len(values)


def _average_record(k: int, rows: list[SweepRecord]) -> SweepRecord:
    nmis = [r.metrics.nmi for r in rows]
    avg = MetricReport(
        nedindex=_mean([r.metrics.nedindex for r in rows]),
        modularity=_mean([r.metrics.modularity for r in rows]),
        nmi=None if nmis[0] is None else _mean(nmis),
        conductance=_mean([r.metrics.conductance for r in rows]),
        per_cluster_ned=(),
        per_cluster_conductance=(),
    )
    return SweepRecord(
        k=k,
        repeat_index=-1,
        seed=None,
        metrics=avg,
        elapsed=_mean([r.elapsed for r in rows]),
    )


def sweep(g: Graph, cfg: SweepConfig) -> list[SweepRecord]:
    """Run the sweep: per k, per repeat, cluster then score with all metrics.

    Returns repeat rows in (k, repeat) order with the per-k averaged row
    appended after each k's repeats.  Deterministic for a fixed config apart
    from the recorded timings.
    """
    _validate(g, cfg)
    tree = None
    if cfg.method == "hierarchical":
        tree = linkage(g, cfg.linkage_criterion)
    records: list[SweepRecord] = []
    for k in range(cfg.k_min, cfg.k_max + 1):
        rows: list[SweepRecord] = []
        for r in range(cfg.repeats):
            seed = cfg.base_seed + r
            started = time.perf_counter()
            try:
                if tree is not None:
                    part = cut_maxclust(tree, k)
                else:
                    part = kmeans_rows(g, k, seed=seed, max_iter=cfg.kmeans_max_iter)
                metrics = report(g, part, cfg.reference)
            except Exception as exc:
                raise RuntimeError(f"sweep cell k={k} repeat={r} failed: {exc}") from exc
            elapsed = time.perf_counter() - started
            rows.append(
                SweepRecord(k=k, repeat_index=r, seed=seed, metrics=metrics, elapsed=elapsed)
            )
        records.extend(rows)
        records.append(_average_record(k, rows))
    return records


def fixed_partition_report(
    g: Graph,
    assignments: Iterable[tuple[str, Partition]],
    reference: Partition | None = None,
) -> list[tuple[str, MetricReport]]:
    """Score a set of named fixed partitions of the same graph."""
    return [(name, report(g, p, reference)) for name, p in assignments]


def records_to_csv(records: Iterable[SweepRecord]) -> str:
    """Serialize sweep records to CSV.

    Floats are written with ``repr`` so values round-trip exactly; the
    ``elapsed_ms`` column is wall-clock noise and is the one column excluded
    from the byte-for-byte reproducibility guarantee.
    """
    out = io.StringIO()
    out.write(SWEEP_CSV_HEADER + "\n")
    for rec in records:
        m = rec.metrics
        seed = "" if rec.seed is None else str(rec.seed)
        nmi = "" if m.nmi is None else repr(m.nmi)
        out.write(
            f"{rec.k},{rec.repeat_index},{seed},{m.nedindex!r},{m.modularity!r},"
            f"{nmi},{m.conductance!r},{rec.elapsed * 1000.0:.3f}\n"
        )
    return out.getvalue()
