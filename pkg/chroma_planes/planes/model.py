# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
#
#   Copyright 2024 Valory AG
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# ------------------------------------------------------------------------------

"""Chromatic planes: assignments, edge classes, the placement criterion, pallets."""

import typing as t
from dataclasses import dataclass, field

import jsonschema

from chroma_planes.constants import PLANE_CAPACITY
from chroma_planes.exceptions import InvalidConfig, PlaneError
from chroma_planes.graph.base import Graph, induced_subgraph
from chroma_planes.oracles.coloring import Coloring
from chroma_planes.resource import LocalResource
from chroma_planes.types import (
    ASSIGNMENT_SCHEMA,
    Edge,
    PlacementMode,
    VertexSet,
    vertex_set,
)


@dataclass
class PlaneAssignment(LocalResource):
    """Vertex -> (plane, color); colors are local to their plane."""

    plane_of: t.List[t.Optional[int]]
    color_of: t.List[t.Optional[int]]
    capacity: int = PLANE_CAPACITY
    plane_count: int = 0

    @classmethod
    def new(cls, n: int, capacity: int = PLANE_CAPACITY) -> "PlaneAssignment":
        """Empty assignment over n vertices."""
        if capacity < 1:
            raise InvalidConfig(f"plane capacity must be positive, got {capacity}")
        return cls(plane_of=[None] * n, color_of=[None] * n, capacity=capacity)

    @property
    def n(self) -> int:
        """Number of vertices the assignment ranges over."""
        return len(self.plane_of)

    def open_plane(self) -> int:
        """Create the next plane and return its index."""
        self.plane_count += 1
        return self.plane_count - 1

    def assign(self, v: int, plane: int, color: int) -> None:
        """Put vertex v on a plane with a color."""
        if self.plane_of[v] is not None:
            raise PlaneError(f"vertex {v} is already on plane {self.plane_of[v]}")
        if not 0 <= plane < self.plane_count:
            raise PlaneError(f"plane {plane} does not exist")
        if not 0 <= color < self.capacity:
            raise PlaneError(f"color {color} exceeds plane capacity {self.capacity}")
        self.plane_of[v] = plane
        self.color_of[v] = color

    def vertices_on(self, plane: int) -> VertexSet:
        """Vertices on a plane."""
        return tuple(v for v, p in enumerate(self.plane_of) if p == plane)

    def assigned(self) -> VertexSet:
        """Vertices placed on some plane."""
        return tuple(v for v, p in enumerate(self.plane_of) if p is not None)

    def is_total(self) -> bool:
        """Whether every vertex has a plane."""
        return all(p is not None for p in self.plane_of)

    def copy(self) -> "PlaneAssignment":
        """Independent snapshot."""
        return PlaneAssignment(
            plane_of=list(self.plane_of),
            color_of=list(self.color_of),
            capacity=self.capacity,
            plane_count=self.plane_count,
        )

    @property
    def json(self) -> t.Dict:
        """To dictionary object."""
        return {
            "capacity": self.capacity,
            "n": self.n,
            "planes": [
                {
                    "id": plane,
                    "vertices": [
                        {"v": v, "color": self.color_of[v]}
                        for v in self.vertices_on(plane)
                    ],
                }
                for plane in range(self.plane_count)
            ],
        }

    @classmethod
    def from_json(cls, obj: t.Dict) -> "PlaneAssignment":
        """Load from json, validating the document shape first."""
        jsonschema.validate(instance=obj, schema=ASSIGNMENT_SCHEMA)
        listed = [entry["v"] for plane in obj["planes"] for entry in plane["vertices"]]
        n = int(obj.get("n", max(listed, default=-1) + 1))
        assignment = cls.new(n=n, capacity=obj["capacity"])
        ids = sorted(plane["id"] for plane in obj["planes"])
        if ids != list(range(len(ids))):
            raise PlaneError(f"plane ids must be contiguous from 0, got {ids}")
        assignment.plane_count = len(ids)
        for plane in obj["planes"]:
            for entry in plane["vertices"]:
                if not 0 <= entry["v"] < n:
                    raise PlaneError(f"vertex {entry['v']} outside 0..{n - 1}")
                assignment.assign(entry["v"], plane["id"], entry["color"])
        return assignment


@dataclass
class EdgeClassification:
    """Edges split into per-plane edges and edges between planes."""

    plane_edges: t.Dict[int, t.List[Edge]] = field(default_factory=dict)
    non_plane_edges: t.List[Edge] = field(default_factory=list)

    @property
    def plane_edge_count(self) -> int:
        """Number of plane edges over all planes."""
        return sum(len(edges) for edges in self.plane_edges.values())


@dataclass(frozen=True)
class Placement:
    """Outcome of the placement criterion for one vertex and plane."""

    placeable: bool
    available: t.Tuple[int, ...]

    @property
    def color(self) -> t.Optional[int]:
        """Lowest available color, if placeable."""
        return self.available[0] if self.placeable and self.available else None


def _check_covers(graph: Graph, assignment: PlaneAssignment) -> None:
    if assignment.n != graph.n:
        raise PlaneError(
            f"assignment ranges over {assignment.n} vertices, graph has {graph.n}"
        )


def _check_plane(assignment: PlaneAssignment, plane: int) -> VertexSet:
    if not 0 <= plane < assignment.plane_count:
        raise PlaneError(f"plane {plane} does not exist")
    return assignment.vertices_on(plane)


def classify_edges(graph: Graph, assignment: PlaneAssignment) -> EdgeClassification:
    """Split E(G) into plane edges (same plane) and non-plane edges."""
    _check_covers(graph, assignment)
    if not assignment.is_total():
        missing = [v for v, p in enumerate(assignment.plane_of) if p is None]
        raise PlaneError(f"partial assignment: vertices {missing} have no plane")
    result = EdgeClassification(
        plane_edges={plane: [] for plane in range(assignment.plane_count)}
    )
    for u, v in graph.edges():
        plane = assignment.plane_of[u]
        if plane == assignment.plane_of[v]:
            result.plane_edges[t.cast(int, plane)].append((u, v))
        else:
            result.non_plane_edges.append((u, v))
    return result


def plane_chromatic_number(assignment: PlaneAssignment, plane: int) -> int:
    """Number of distinct colors used on a plane."""
    members = _check_plane(assignment, plane)
    if not members:
        raise PlaneError(f"plane {plane} is empty")
    return len({assignment.color_of[v] for v in members})


def is_placeable(
    graph: Graph,
    assignment: PlaneAssignment,
    plane: int,
    v: int,
    mode: PlacementMode = PlacementMode.CAPACITY,
) -> Placement:
    """Placement criterion: compare the colors around v on the plane with its budget."""
    _check_covers(graph, assignment)
    _check_plane(assignment, plane)
    if assignment.plane_of[v] is not None:
        raise PlaneError(f"vertex {v} is already on plane {assignment.plane_of[v]}")
    seen = {
        assignment.color_of[u]
        for u in graph.adjacency[v]
        if assignment.plane_of[u] == plane
    }
    available = tuple(c for c in range(assignment.capacity) if c not in seen)
    if mode is PlacementMode.STRICT:
        placeable = len(seen) < plane_chromatic_number(assignment, plane)
    else:
        placeable = len(seen) < assignment.capacity
    return Placement(placeable=placeable, available=available)


def touches_plane(graph: Graph, assignment: PlaneAssignment, plane: int, v: int) -> bool:
    """Whether v has a neighbour already on the plane."""
    _check_covers(graph, assignment)
    return any(assignment.plane_of[u] == plane for u in graph.adjacency[v])


def project_pallet(
    graph: Graph, assignment: PlaneAssignment, planes: t.Iterable[int]
) -> Graph:
    """Project several planes onto one pallet: the subgraph induced by their union."""
    _check_covers(graph, assignment)
    chosen = sorted(set(planes))
    if not chosen:
        raise PlaneError("a pallet needs at least one plane")
    members: t.List[int] = []
    for plane in chosen:
        members.extend(_check_plane(assignment, plane))
    pallet, _ = induced_subgraph(graph, members)
    return pallet


def combined_coloring(assignment: PlaneAssignment) -> Coloring:
    """Global coloring with color = plane * capacity + local color."""
    colors = []
    for v in range(assignment.n):
        plane, color = assignment.plane_of[v], assignment.color_of[v]
        if plane is None or color is None:
            raise PlaneError(f"vertex {v} has no plane")
        colors.append(plane * assignment.capacity + color)
    return Coloring(k=assignment.plane_count * assignment.capacity, colors=tuple(colors))


def assignment_problems(graph: Graph, assignment: PlaneAssignment) -> t.List[str]:
    """Violations of the assignment invariants, empty when it is sound."""
    if assignment.n != graph.n:
        return [f"assignment covers {assignment.n} ids, graph has {graph.n}"]
    problems = []
    for plane in range(assignment.plane_count):
        if not assignment.vertices_on(plane):
            problems.append(f"plane {plane} is empty")
    for v in range(graph.n):
        plane, color = assignment.plane_of[v], assignment.color_of[v]
        if (plane is None) != (color is None):
            problems.append(f"vertex {v} has only one of plane/color")
        elif color is not None and not 0 <= color < assignment.capacity:
            problems.append(f"vertex {v} color {color} outside capacity")
        if plane is not None and not 0 <= plane < assignment.plane_count:
            problems.append(f"vertex {v} on unknown plane {plane}")
    for u, v in graph.edges():
        if (
            assignment.plane_of[u] is not None
            and assignment.plane_of[u] == assignment.plane_of[v]
            and assignment.color_of[u] == assignment.color_of[v]
        ):
            problems.append(
                f"plane edge ({u}, {v}) has both ends in color {assignment.color_of[u]}"
            )
    return problems


def restrict_to_assigned(
    graph: Graph, assignment: PlaneAssignment
) -> t.Tuple[Graph, PlaneAssignment, t.Dict[int, int]]:
    """Induced graph and assignment on the placed vertices only."""
    _check_covers(graph, assignment)
    kept = assignment.assigned()
    sub, id_map = induced_subgraph(graph, kept)
    restricted = PlaneAssignment(
        plane_of=[assignment.plane_of[v] for v in kept],
        color_of=[assignment.color_of[v] for v in kept],
        capacity=assignment.capacity,
        plane_count=assignment.plane_count,
    )
    return sub, restricted, id_map


def plane_vertex_sets(assignment: PlaneAssignment) -> t.List[VertexSet]:
    """Vertex set of every plane in index order."""
    return [vertex_set(assignment.vertices_on(p)) for p in range(assignment.plane_count)]
