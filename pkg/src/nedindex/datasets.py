"""Embedded benchmark graphs and their reference partitions.

Three small graphs ship with the package:

``karate``
    Zachary's karate club (34 vertices, 78 edges) in the standard published
    vertex order, with the club's two-faction split as reference partition.
``figure2``
    Three 4-cliques bridged pairwise by single edges (12 vertices, 21 edges),
    labelled A..L.  Its natural partition is the three cliques; an alternate
    weaker 3-way split is included for ordering comparisons.
``figure3``
    Three cliques of sizes 5, 6 and 4 bridged pairwise by single edges
    (15 vertices, 34 edges), labelled A..O.  The drawing this layout mimics
    was never published as an edge list, so this is a reconstruction; only
    relative comparisons against alternate splits should be read into it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Graph, build_graph, generate_complete, generate_wheel
from .partition import Partition, make_partition

__all__ = [
    "karate_club",
    "karate_factions",
    "figure2",
    "figure2_clusters",
    "figure2_alternate_split",
    "figure3",
    "figure3_clusters",
    "DATASETS",
    "DatasetEntry",
    "dataset",
    "dataset_reference",
    "from_generator_spec",
    "GENERATOR_KINDS",
]

# Zachary's karate club, vertex ids 0..33, one tuple per edge (u < v).
_KARATE_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8),
    (0, 10), (0, 11), (0, 12), (0, 13), (0, 17), (0, 19), (0, 21), (0, 31),
    (1, 2), (1, 3), (1, 7), (1, 13), (1, 17), (1, 19), (1, 21), (1, 30),
    (2, 3), (2, 7), (2, 8), (2, 9), (2, 13), (2, 27), (2, 28), (2, 32),
    (3, 7), (3, 12), (3, 13), (4, 6), (4, 10), (5, 6), (5, 10), (5, 16),
    (6, 16), (8, 30), (8, 32), (8, 33), (9, 33), (13, 33), (14, 32), (14, 33),
    (15, 32), (15, 33), (18, 32), (18, 33), (19, 33), (20, 32), (20, 33),
    (22, 32), (22, 33), (23, 25), (23, 27), (23, 29), (23, 32), (23, 33),
    (24, 25), (24, 27), (24, 31), (25, 31), (26, 29), (26, 33), (27, 33),
    (28, 31), (28, 33), (29, 32), (29, 33), (30, 32), (30, 33), (31, 32),
    (31, 33), (32, 33),
)

# Faction membership after the club split: 0 = instructor's side, 1 = officer's.
_KARATE_FACTIONS = (
    0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
)


def karate_club() -> Graph:
    """The Zachary karate club graph: 34 vertices, 78 edges, ids 0..33."""
    return build_graph(_KARATE_EDGES, vertex_hint=34)


def karate_factions() -> Partition:
    """The two-faction split observed when the club broke apart."""
    return make_partition(karate_club(), _KARATE_FACTIONS)


def _clique_edges(members: str) -> list[tuple[str, str]]:
    return [
        (members[i], members[j])
        for i in range(len(members))
        for j in range(i + 1, len(members))
    ]


_FIGURE2_VERTICES = "ABCDEFGHIJKL"
_FIGURE2_EDGES = (
    _clique_edges("ABCD")
    + _clique_edges("EFGH")
    + _clique_edges("IJKL")
    # one bridge between each pair of cliques
    + [("D", "E"), ("H", "I"), ("L", "A")]
)


def figure2() -> Graph:
    """Three 4-cliques bridged pairwise: 12 vertices A..L, 21 edges."""
    return build_graph(_FIGURE2_EDGES)


def _split_by_groups(g: Graph, groups: list[str]) -> Partition:
    assignment = [0] * g.vertex_count
    for c, members in enumerate(groups):
        for label in members:
            assignment[g.dense_id(label)] = c
    return make_partition(g, assignment)


def figure2_clusters() -> Partition:
    """The natural partition of :func:`figure2` into its three cliques."""
    return _split_by_groups(figure2(), ["ABCD", "EFGH", "IJKL"])


def figure2_alternate_split() -> Partition:
    """A weaker 3-way split of :func:`figure2` that mixes two of the cliques."""
    return _split_by_groups(figure2(), ["ABCD", "EFJL", "GHIK"])


_FIGURE3_EDGES = (
    _clique_edges("ABCDE")
    + _clique_edges("FGHIJK")
    + _clique_edges("LMNO")
    + [("E", "F"), ("K", "L"), ("O", "A")]
)


def figure3() -> Graph:
    """Three bridged cliques of sizes 5, 6, 4: 15 vertices A..O, 34 edges.

    Reconstruction of a drawn-only layout; see the module docstring.
    """
    return build_graph(_FIGURE3_EDGES)


def figure3_clusters() -> Partition:
    """The natural partition of :func:`figure3` into its three cliques."""
    return _split_by_groups(figure3(), ["ABCDE", "FGHIJK", "LMNO"])


@dataclass(frozen=True)
class DatasetEntry:
    name: str
    description: str
    graph: Callable[[], Graph]
    reference: Callable[[], Partition] | None = None


DATASETS: dict[str, DatasetEntry] = {
    "karate": DatasetEntry(
        name="karate",
        description="Zachary's karate club (34 vertices, 78 edges); "
        "reference = observed two-faction split",
        graph=karate_club,
        reference=karate_factions,
    ),
    "figure2": DatasetEntry(
        name="figure2",
        description="three 4-cliques bridged pairwise (12 vertices, 21 edges); "
        "reference = the three cliques",
        graph=figure2,
        reference=figure2_clusters,
    ),
    "figure3": DatasetEntry(
        name="figure3",
        description="reconstructed demo of bridged cliques sized 5/6/4 "
        "(15 vertices, 34 edges); reference = the three cliques",
        graph=figure3,
        reference=figure3_clusters,
    ),
}


def dataset(name: str) -> Graph:
    """Look up an embedded dataset graph by name."""
    try:
        return DATASETS[name].graph()
    except KeyError:
        raise ValueError(
            f"unknown dataset {name!r}; available: {', '.join(sorted(DATASETS))}"
        ) from None


def dataset_reference(name: str) -> Partition | None:
    """Reference partition of an embedded dataset, if it has one."""
    try:
        entry = DATASETS[name]
    except KeyError:
        raise ValueError(
            f"unknown dataset {name!r}; available: {', '.join(sorted(DATASETS))}"
        ) from None
    return entry.reference() if entry.reference is not None else None


GENERATOR_KINDS = ("complete:<n>", "wheel:<n>", "figure2")


def from_generator_spec(spec: str) -> Graph:
    """Build a graph from a generator spec: ``complete:n``, ``wheel:n``, ``figure2``."""
    if spec == "figure2":
        return figure2()
    kind, sep, arg = spec.partition(":")
    if sep and kind in ("complete", "wheel"):
        try:
            n = int(arg)
        except ValueError:
            raise ValueError(f"generator size {arg!r} is not an integer") from None
        return generate_complete(n) if kind == "complete" else generate_wheel(n)
    raise ValueError(
        f"unknown generator {spec!r}; expected one of {', '.join(GENERATOR_KINDS)}"
    )
