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

"""Canonical simple-graph representation."""

import typing as t
from dataclasses import dataclass, field

import networkx as nx

from chroma_planes.exceptions import InvalidGraph
from chroma_planes.types import Edge, VertexSet, vertex_set


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph over vertex ids 0..n-1."""

    n: int
    adjacency: t.Tuple[VertexSet, ...]
    masks: t.Tuple[int, ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        """Check invariants and cache neighbor bitmasks."""
        if self.n < 0:
            raise InvalidGraph(f"vertex count must be non-negative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise InvalidGraph(
                f"adjacency has {len(self.adjacency)} rows for {self.n} vertices"
            )
        masks = []
        for v, row in enumerate(self.adjacency):
            mask = 0
            for u in row:
                if not 0 <= u < self.n:
                    raise InvalidGraph(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise InvalidGraph(f"self-loop at vertex {v}")
                if mask >> u & 1:
                    raise InvalidGraph(f"duplicate neighbor {u} of {v}")
                mask |= 1 << u
            masks.append(mask)
        for v, mask in enumerate(masks):
            for u in self.adjacency[v]:
                if not masks[u] >> v & 1:
                    raise InvalidGraph(f"edge ({v}, {u}) is not symmetric")
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: t.Iterable[Edge]) -> t.Tuple["Graph", int]:
        """Build a graph; returns it with the number of duplicate edges dropped."""
        if n < 0:
            raise InvalidGraph(f"vertex count must be non-negative, got {n}")
        rows: t.List[t.Set[int]] = [set() for _ in range(n)]
        duplicates = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraph(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
            if u == v:
                raise InvalidGraph(f"edge ({u}, {v}) is a self-loop")
            if v in rows[u]:
                duplicates += 1
                continue
            rows[u].add(v)
            rows[v].add(u)
        return cls(n=n, adjacency=tuple(vertex_set(row) for row in rows)), duplicates

    @classmethod
    def from_masks(cls, masks: t.Sequence[int]) -> "Graph":
        """Build a graph from neighbor bitmasks."""
        rows = []
        for mask in masks:
            row = []
            while mask:
                low = mask & -mask
                row.append(low.bit_length() - 1)
                mask ^= low
            rows.append(tuple(row))
        return cls(n=len(masks), adjacency=tuple(rows))

    @classmethod
    def from_networkx(cls, nxgraph: nx.Graph) -> "Graph":
        """Build from a networkx graph, relabelling nodes in sorted order."""
        order = {node: i for i, node in enumerate(sorted(nxgraph.nodes))}
        graph, _ = cls.from_edges(
            len(order), ((order[u], order[v]) for u, v in nxgraph.edges)
        )
        return graph

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph."""
        nxgraph = nx.Graph()
        nxgraph.add_nodes_from(range(self.n))
        nxgraph.add_edges_from(self.edges())
        return nxgraph

    def neighbors(self, v: int) -> VertexSet:
        """Sorted neighbors of `v`."""
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        """Degree of `v`."""
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        """Whether `u` and `v` are adjacent."""
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.masks[u] >> v & 1)

    def edges(self) -> t.List[Edge]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return sum(len(row) for row in self.adjacency) // 2

    @property
    def vertex_mask(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    def is_complete(self) -> bool:
        """Whether every pair of vertices is adjacent."""
        return all(len(row) == self.n - 1 for row in self.adjacency)

    def is_connected(self) -> bool:
        """Whether the graph is connected (the empty graph counts as connected)."""
        return len(connected_components(self)) <= 1


def from_edge_list(n: int, edges: t.Iterable[Edge]) -> Graph:
    """Build a graph from an edge list, dropping duplicate edges."""
    graph, _ = Graph.from_edges(n, edges)
    return graph


def _check_ids(graph: Graph, vertices: t.Iterable[int]) -> VertexSet:
    members = vertex_set(vertices)
    for v in members:
        if not 0 <= v < graph.n:
            raise InvalidGraph(f"vertex {v} outside 0..{graph.n - 1}")
    return members


def induced_subgraph(
    graph: Graph, vertices: t.Iterable[int]
) -> t.Tuple[Graph, t.Dict[int, int]]:
    """Subgraph induced by `vertices` with the old->new id map."""
    members = _check_ids(graph, vertices)
    id_map = {old: new for new, old in enumerate(members)}
    rows = tuple(
        tuple(id_map[u] for u in graph.adjacency[old] if u in id_map)
        for old in members
    )
    return Graph(n=len(members), adjacency=rows), id_map


def connected_components(graph: Graph) -> t.List[VertexSet]:
    """Maximal connected vertex sets, ordered by smallest member."""
    parts = (vertex_set(c) for c in nx.connected_components(graph.to_networkx()))
    return sorted(parts)


def component_of(graph: Graph, mask: int, root_mask: int) -> int:
    """Bitmask of vertices reachable from `root_mask` inside `mask`."""
    seen = root_mask & mask
    frontier = seen
    while frontier:
        grow = 0
        while frontier:
            low = frontier & -frontier
            grow |= graph.masks[low.bit_length() - 1]
            frontier ^= low
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen


def mask_of(vertices: t.Iterable[int]) -> int:
    """Bitmask of a vertex collection."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members_of(mask: int) -> VertexSet:
    """Sorted vertex ids of a bitmask."""
    members = []
    while mask:
        low = mask & -mask
        members.append(low.bit_length() - 1)
        mask ^= low
    return tuple(members)


def is_connected_set(graph: Graph, vertices: t.Iterable[int]) -> bool:
    """Whether `vertices` induce a connected subgraph (empty set is not)."""
    mask = mask_of(vertices)
    if not mask:
        return False
    return component_of(graph, mask, mask & -mask) == mask


def delete_edge(graph: Graph, u: int, v: int) -> Graph:
    """Copy of `graph` without edge (u, v)."""
    if not graph.has_edge(u, v):
        raise InvalidGraph(f"({u}, {v}) is not an edge")
    masks = list(graph.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph.from_masks(masks)


def clique_number(graph: Graph) -> int:
    """Size of a largest clique."""
    return len(max_clique(graph))


def max_clique(graph: Graph) -> VertexSet:
    """A largest clique, lexicographically smallest among the largest."""
    if graph.n == 0:
        return ()
    cliques = (vertex_set(c) for c in nx.find_cliques(graph.to_networkx()))
    return min(cliques, key=lambda c: (-len(c), c))
