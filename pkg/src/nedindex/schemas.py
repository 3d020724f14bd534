"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

Method = Literal["hierarchical", "kmeans"]
LinkageCriterion = Literal["single", "complete", "average"]


class GraphSource(BaseModel):
    """Exactly one way of supplying a graph.

    ``edge_list`` is raw edge-list text, ``generate`` a generator spec such
    as ``complete:8``, ``wheel:7`` or ``figure2``, and ``dataset`` the name of
    an embedded dataset.
    """

    edge_list: str | None = None
    generate: str | None = None
    dataset: str | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "GraphSource":
        supplied = [
            f for f in ("edge_list", "generate", "dataset") if getattr(self, f) is not None
        ]
        if len(supplied) != 1:
            raise ValueError(
                "exactly one of edge_list, generate, dataset must be supplied"
            )
        return self


class PartitionSpec(BaseModel):
    """A partition, either as serialized text lines or a dense assignment."""

    text: str | None = None
    assignment: list[int] | None = None

    @model_validator(mode="after")
    def _exactly_one_form(self) -> "PartitionSpec":
        if (self.text is None) == (self.assignment is None):
            raise ValueError("exactly one of text, assignment must be supplied")
        return self


class MetricsRequest(BaseModel):
    graph: GraphSource
    partition: PartitionSpec
    reference: PartitionSpec | None = None


class MetricsResponse(BaseModel):
    cluster_count: int
    nedindex: float
    modularity: float
    nmi: float | None = None
    conductance: float
    per_cluster_ned: list[float]
    per_cluster_conductance: list[float]
    csv: str


class ClusterRequest(BaseModel):
    graph: GraphSource
    k: int = Field(ge=1)
    method: Method = "hierarchical"
    seed: int = 0
    linkage_criterion: LinkageCriterion = "single"
    max_iter: int = Field(default=100, ge=1)


class ClusterResponse(BaseModel):
    cluster_count: int
    assignment: list[int]
    partition_text: str


class SweepRequest(BaseModel):
    graph: GraphSource
    k_min: int = Field(ge=1)
    k_max: int = Field(ge=1)
    method: Method = "hierarchical"
    repeats: int = Field(default=5, ge=1)
    seed: int = 0
    linkage_criterion: LinkageCriterion = "single"
    max_iter: int = Field(default=100, ge=1)
    reference: PartitionSpec | None = None
    use_dataset_reference: bool = False


class SweepRecordOut(BaseModel):
    k: int
    repeat: int
    seed: int | None = None
    nedindex: float
    modularity: float
    nmi: float | None = None
    conductance: float
    elapsed_ms: float


class SweepResponse(BaseModel):
    records: list[SweepRecordOut]
    csv: str


class GenerateRequest(BaseModel):
    kind: str


class GenerateResponse(BaseModel):
    kind: str
    vertex_count: int
    edge_count: int
    edge_list: str


class DatasetInfo(BaseModel):
    name: str
    description: str
    vertex_count: int
    edge_count: int
    has_reference: bool


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str
