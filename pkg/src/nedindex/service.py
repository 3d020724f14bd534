"""FastAPI service exposing metric reports, clustering, sweeps, and generators.

Run with ``uvicorn nedindex.service:app`` (or ``nedindex serve``).  The CLI in
:mod:`nedindex.cli` is a thin client of these endpoints.

Error contract: malformed input files yield 422 with
``detail = {"code": "parse_error", "message": ..., "line": ...}``; invalid
domain arguments yield 400 with ``code = "invalid_input"``; anything else is
a 500 (internal invariant violation).
"""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import schemas
from .datasets import DATASETS, dataset, dataset_reference, from_generator_spec
from .graph import Graph, ParseError, edge_list_text, parse_edge_list
from .metrics import METRIC_CSV_HEADER, metric_csv_row, report
from .partition import Partition, make_partition, parse_partition, partition_text
from .clustering import cut_maxclust, kmeans_rows, linkage
from .sweep import SweepConfig, records_to_csv, sweep

try:
    _VERSION = version("nedindex")
except PackageNotFoundError:
    _VERSION = "0.0.0"

app = FastAPI(
    title="nedindex service",
    description="Graph clustering quality metrics and sweep experiments.",
    version=_VERSION,
)


@app.exception_handler(ParseError)
async def _parse_error_handler(request: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={
            "detail": {
                "code": "parse_error",
                "message": str(exc),
                "line": exc.line_no,
            }
        },
    )


@app.exception_handler(ValueError)
async def _value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"detail": {"code": "invalid_input", "message": str(exc)}},
    )


def _graph_from_source(source: schemas.GraphSource) -> Graph:
    if source.edge_list is not None:
        return parse_edge_list(source.edge_list)
    if source.generate is not None:
        return from_generator_spec(source.generate)
    assert source.dataset is not None
    return dataset(source.dataset)


def _partition_from_spec(g: Graph, spec: schemas.PartitionSpec) -> Partition:
    if spec.text is not None:
        return parse_partition(g, spec.text)
    assert spec.assignment is not None
    return make_partition(g, spec.assignment)


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(version=_VERSION)


@app.get("/datasets", response_model=list[schemas.DatasetInfo])
def list_datasets() -> list[schemas.DatasetInfo]:
    infos = []
    for entry in DATASETS.values():
        g = entry.graph()
        infos.append(
            schemas.DatasetInfo(
                name=entry.name,
                description=entry.description,
                vertex_count=g.vertex_count,
                edge_count=g.edge_count,
                has_reference=entry.reference is not None,
            )
        )
    return infos


@app.post("/metrics", response_model=schemas.MetricsResponse)
def metrics(req: schemas.MetricsRequest) -> schemas.MetricsResponse:
    g = _graph_from_source(req.graph)
    p = _partition_from_spec(g, req.partition)
    ref = _partition_from_spec(g, req.reference) if req.reference is not None else None
    rep = report(g, p, ref)
    return schemas.MetricsResponse(
        cluster_count=rep.cluster_count,
        nedindex=rep.nedindex,
        modularity=rep.modularity,
        nmi=rep.nmi,
        conductance=rep.conductance,
        per_cluster_ned=list(rep.per_cluster_ned),
        per_cluster_conductance=list(rep.per_cluster_conductance),
        csv=METRIC_CSV_HEADER + "\n" + metric_csv_row(rep) + "\n",
    )


@app.post("/cluster", response_model=schemas.ClusterResponse)
def cluster(req: schemas.ClusterRequest) -> schemas.ClusterResponse:
    g = _graph_from_source(req.graph)
    if req.method == "hierarchical":
        part = cut_maxclust(linkage(g, req.linkage_criterion), req.k)
    else:
        part = kmeans_rows(g, req.k, seed=req.seed, max_iter=req.max_iter)
    return schemas.ClusterResponse(
        cluster_count=part.cluster_count,
        assignment=list(part.assignment),
        partition_text=partition_text(g, part),
    )


@app.post("/sweep", response_model=schemas.SweepResponse)
def run_sweep(req: schemas.SweepRequest) -> schemas.SweepResponse:
    g = _graph_from_source(req.graph)
    if req.reference is not None:
        ref = _partition_from_spec(g, req.reference)
    elif req.use_dataset_reference:
        if req.graph.dataset is None:
            raise ValueError("use_dataset_reference requires a dataset graph source")
        ref = dataset_reference(req.graph.dataset)
        if ref is None:
            raise ValueError(f"dataset {req.graph.dataset!r} has no reference partition")
    else:
        ref = None
    cfg = SweepConfig(
        k_min=req.k_min,
        k_max=req.k_max,
        method=req.method,
        repeats=req.repeats,
        base_seed=req.seed,
        reference=ref,
        linkage_criterion=req.linkage_criterion,
        kmeans_max_iter=req.max_iter,
    )
    records = sweep(g, cfg)
    out = [
        schemas.SweepRecordOut(
            k=rec.k,
            repeat=rec.repeat_index,
            seed=rec.seed,
            nedindex=rec.metrics.nedindex,
            modularity=rec.metrics.modularity,
            nmi=rec.metrics.nmi,
            conductance=rec.metrics.conductance,
            elapsed_ms=rec.elapsed * 1000.0,
        )
        for rec in records
    ]
    return schemas.SweepResponse(records=out, csv=records_to_csv(records))


@app.post("/generate", response_model=schemas.GenerateResponse)
def generate(req: schemas.GenerateRequest) -> schemas.GenerateResponse:
    g = from_generator_spec(req.kind)
    return schemas.GenerateResponse(
        kind=req.kind,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        edge_list=edge_list_text(g),
    )
