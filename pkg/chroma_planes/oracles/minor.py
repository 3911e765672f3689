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

"""Edge contraction, clique-minor search and Hadwiger number."""

import functools
import logging
import typing as t
from dataclasses import dataclass, field

from chroma_planes.constants import HADWIGER_CEILING
from chroma_planes.exceptions import (
    InvalidConfig,
    InvalidGraph,
    OracleLimitExceeded,
    PlaneError,
)
from chroma_planes.graph.base import (
    Graph,
    component_of,
    connected_components,
    induced_subgraph,
    is_connected_set,
    mask_of,
    max_clique,
    members_of,
)
from chroma_planes.planes.model import PlaneAssignment
from chroma_planes.resource import LocalResource
from chroma_planes.types import VertexSet, vertex_set
from chroma_planes.utils import get_logger


@dataclass(frozen=True)
class MinorWitness(LocalResource):
    """Disjoint connected, pairwise adjacent branch sets certifying a K_t minor."""

    branch_sets: t.Tuple[VertexSet, ...]

    @property
    def size(self) -> int:
        """The t of the certified K_t."""
        return len(self.branch_sets)

    @property
    def json(self) -> t.Dict:
        """To dictionary object."""
        return {"t": self.size, "branch_sets": [list(s) for s in self.branch_sets]}

    @classmethod
    def from_json(cls, obj: t.Dict) -> "MinorWitness":
        """Load from json."""
        sets = tuple(vertex_set(s) for s in obj["branch_sets"])
        if int(obj.get("t", len(sets))) != len(sets):
            raise ValueError(f"witness declares t={obj['t']} with {len(sets)} sets")
        return cls(branch_sets=sets)


@dataclass(frozen=True)
class ContractionStep:
    """One contraction, in the ids of the graph it was applied to."""

    kept: int
    merged: int


@dataclass
class ContractionTrace:
    """Record of a plane contraction."""

    plane: int
    branch_sets: t.List[VertexSet]
    steps: t.List[ContractionStep] = field(default_factory=list)
    id_map: t.Dict[int, int] = field(default_factory=dict)
    plane_of: t.List[t.Optional[int]] = field(default_factory=list)


def _drop_bit(mask: int, bit: int) -> int:
    return (mask & ((1 << bit) - 1)) | ((mask >> (bit + 1)) << bit)


def contract_edge(graph: Graph, u: int, v: int) -> t.Tuple[Graph, t.Dict[int, int]]:
    """Contract edge (u, v) into u; returns the graph and the old->new id map."""
    if not graph.has_edge(u, v):
        raise InvalidGraph(f"cannot contract ({u}, {v}): not an edge")
    masks = list(graph.masks)
    for w in range(graph.n):
        if masks[w] >> v & 1:
            masks[w] = (masks[w] & ~(1 << v)) | (1 << u)
    masks[u] = (graph.masks[u] | graph.masks[v]) & ~((1 << u) | (1 << v))
    del masks[v]
    new_masks = [_drop_bit(mask, v) for mask in masks]
    id_map = {w: (w if w < v else w - 1) for w in range(graph.n) if w != v}
    id_map[v] = id_map[u]
    return Graph.from_masks(new_masks), id_map


def verify_minor_witness(
    graph: Graph, witness: MinorWitness, logger: t.Optional[logging.Logger] = None
) -> bool:
    """Whether the branch sets are disjoint, connected and pairwise adjacent."""
    logger = logger or get_logger("chroma_planes.minor")
    seen = 0
    masks = []
    for index, members in enumerate(witness.branch_sets):
        if not members:
            logger.debug(f"branch set {index} is empty")
            return False
        if any(not 0 <= v < graph.n for v in members):
            logger.debug(f"branch set {index} has ids outside 0..{graph.n - 1}")
            return False
        mask = mask_of(members)
        if mask & seen:
            logger.debug(f"branch set {index} overlaps an earlier set")
            return False
        if not is_connected_set(graph, members):
            logger.debug(f"branch set {index} is not connected")
            return False
        seen |= mask
        masks.append(mask)
    neighborhoods = [_neighborhood(graph, mask) for mask in masks]
    for i, first in enumerate(neighborhoods):
        for j in range(i + 1, len(masks)):
            if not first & masks[j]:
                logger.debug(f"branch sets {i} and {j} are not adjacent")
                return False
    return True


def _neighborhood(graph: Graph, mask: int) -> int:
    nbr = 0
    while mask:
        low = mask & -mask
        nbr |= graph.masks[low.bit_length() - 1]
        mask ^= low
    return nbr


def _check_ceiling(graph: Graph, ceiling: int) -> None:
    if ceiling <= 0:
        raise InvalidConfig(f"oracle ceiling must be positive, got {ceiling}")
    if graph.n > ceiling:
        raise OracleLimitExceeded(n=graph.n, ceiling=ceiling)


def _edge_bound_allows(order: int, size: int, t_: int) -> bool:
    """A connected host with a K_t minor has >= (order - t) + t(t-1)/2 edges."""
    return order >= t_ and size >= (order - t_) + t_ * (t_ - 1) // 2


def _strip_leaves(graph: Graph) -> int:
    """Vertices left after repeatedly deleting vertices of degree <= 1."""
    alive = graph.vertex_mask
    changed = True
    while changed:
        changed = False
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if bin(graph.masks[v] & alive).count("1") <= 1:
                alive &= ~low
                changed = True
    return alive


class _PartitionSearch:
    """Assign vertices in ascending id to t blocks covering a connected host."""

    def __init__(self, graph: Graph, t_: int) -> None:
        """Initialize object."""
        self.graph = graph
        self.t = t_
        self.full = graph.vertex_mask
        self.blocks: t.List[int] = []

    def _feasible(self, unassigned: int) -> bool:
        reach = []
        for block in self.blocks:
            region = component_of(self.graph, block | unassigned, block & -block)
            if block & ~region:
                return False
            reach.append(region)
        around = [_neighborhood(self.graph, region) for region in reach]
        missing = len(self.blocks) < self.t
        for j, nbr in enumerate(around):
            if missing and not nbr & unassigned:
                return False
            for region in reach[j + 1 :]:
                if not nbr & region:
                    return False
        return True

    def run(self, v: int) -> bool:
        """Place vertex v and everything after it."""
        if v == self.graph.n:
            return len(self.blocks) == self.t
        remaining = self.graph.n - v - 1
        unassigned = self.full & ~((1 << (v + 1)) - 1)
        bit = 1 << v
        if len(self.blocks) < self.t and self.t - len(self.blocks) - 1 <= remaining:
            self.blocks.append(bit)
            if self._feasible(unassigned) and self.run(v + 1):
                return True
            self.blocks.pop()
        if self.t - len(self.blocks) > remaining:
            return False
        for index in range(len(self.blocks)):
            self.blocks[index] |= bit
            if self._feasible(unassigned) and self.run(v + 1):
                return True
            self.blocks[index] &= ~bit
        return False


def _search_component(
    graph: Graph, members: VertexSet, t_: int
) -> t.Optional[t.List[VertexSet]]:
    sub, id_map = induced_subgraph(graph, members)
    if t_ >= 3:
        kept = members_of(_strip_leaves(sub))
        back = {new: old for old, new in id_map.items()}
        core, core_map = induced_subgraph(sub, kept)
        back = {new: back[old] for old, new in core_map.items()}
    else:
        core = sub
        back = {new: old for old, new in id_map.items()}
    if not _edge_bound_allows(core.n, core.edge_count, t_):
        return None
    search = _PartitionSearch(core, t_)
    if not search.run(0):
        return None
    return [vertex_set(back[v] for v in members_of(block)) for block in search.blocks]


def has_clique_minor(
    graph: Graph, t_: int, ceiling: int = HADWIGER_CEILING
) -> t.Optional[MinorWitness]:
    """A K_t minor witness if one exists, else None."""
    if t_ < 1:
        raise InvalidConfig(f"clique minor size must be >= 1, got {t_}")
    _check_ceiling(graph, ceiling)
    if t_ > graph.n:
        return None
    if t_ == 1:
        return MinorWitness(branch_sets=((0,),))
    if t_ == 2:
        edges = graph.edges()
        return MinorWitness(branch_sets=((edges[0][0],), (edges[0][1],))) if edges else None
    for members in connected_components(graph):
        sub, _ = induced_subgraph(graph, members)
        if not _edge_bound_allows(sub.n, sub.edge_count, t_):
            continue
        found = _search_component(graph, members, t_)
        if found is not None:
            witness = MinorWitness(branch_sets=tuple(found))
            assert verify_minor_witness(graph, witness)  # nosec
            return witness
    return None


def _upper_bound(graph: Graph) -> int:
    best = 0
    for members in connected_components(graph):
        sub, _ = induced_subgraph(graph, members)
        t_ = sub.n
        while t_ > best and not _edge_bound_allows(sub.n, sub.edge_count, t_):
            t_ -= 1
        best = max(best, t_)
    return best


@functools.lru_cache(maxsize=4096)
def largest_clique_minor(graph: Graph, ceiling: int = HADWIGER_CEILING) -> MinorWitness:
    """Witness for a largest clique minor, searched upward from the clique number."""
    _check_ceiling(graph, ceiling)
    if graph.n == 0:
        return MinorWitness(branch_sets=())
    witness = MinorWitness(branch_sets=tuple((v,) for v in max_clique(graph)))
    for t_ in range(witness.size + 1, _upper_bound(graph) + 1):
        found = has_clique_minor(graph, t_, ceiling=ceiling)
        if found is None:
            break
        witness = found
    return witness


def hadwiger_number(graph: Graph, ceiling: int = HADWIGER_CEILING) -> int:
    """Largest t such that the graph has a K_t minor."""
    return largest_clique_minor(graph, ceiling).size


def extend_to_partition(graph: Graph, branch_sets: t.Sequence[VertexSet]) -> t.List[VertexSet]:
    """Grow branch sets until they cover a connected host; lowest set index wins."""
    blocks = [set(s) for s in branch_sets]
    left = sorted(set(range(graph.n)) - set().union(*blocks))
    while left:
        for v in left:
            owner = next(
                (i for i, block in enumerate(blocks) if mask_of(block) & graph.masks[v]),
                None,
            )
            if owner is not None:
                blocks[owner].add(v)
                left.remove(v)
                break
        else:
            raise InvalidGraph("branch sets cannot be extended: host is disconnected")
    return [vertex_set(block) for block in blocks]


def contract_plane(
    graph: Graph,
    plane_of: t.Sequence[t.Optional[int]],
    plane: int,
    ceiling: int = HADWIGER_CEILING,
) -> t.Tuple[Graph, ContractionTrace]:
    """Contract one plane down to its largest clique minor over plane edges only."""
    members = vertex_set(v for v, p in enumerate(plane_of) if p == plane)
    if not members:
        raise PlaneError(f"plane {plane} is unknown or empty")
    if not is_connected_set(graph, members):
        raise PlaneError(f"plane {plane} does not induce a connected subgraph")
    sub, id_map = induced_subgraph(graph, members)
    back = {new: old for old, new in id_map.items()}
    local = extend_to_partition(sub, largest_clique_minor(sub, ceiling).branch_sets)
    branch_sets = [vertex_set(back[v] for v in block) for block in local]

    current = graph
    position = {v: v for v in range(graph.n)}
    trace = ContractionTrace(plane=plane, branch_sets=branch_sets)
    for block in branch_sets:
        root, rest = block[0], list(block[1:])
        while rest:
            merged = next(x for x in rest if current.has_edge(position[root], position[x]))
            step = ContractionStep(kept=position[root], merged=position[merged])
            current, step_map = contract_edge(current, step.kept, step.merged)
            trace.steps.append(step)
            position = {v: step_map[p] for v, p in position.items()}
            rest.remove(merged)
    trace.id_map = position
    new_plane_of: t.List[t.Optional[int]] = [None] * current.n
    for v, p in position.items():
        new_plane_of[p] = plane_of[v]
    trace.plane_of = new_plane_of
    return current, trace


def has_k4_minor(graph: Graph) -> bool:
    """Exact K4-minor test: a graph is K4-minor-free iff series-parallel reduction empties it."""
    adjacency = [set(row) for row in graph.adjacency]
    alive = set(range(graph.n))
    pending = list(range(graph.n))
    while pending:
        v = pending.pop()
        if v not in alive or len(adjacency[v]) > 2:
            continue
        neighbors = list(adjacency[v])
        alive.discard(v)
        for u in neighbors:
            adjacency[u].discard(v)
        adjacency[v].clear()
        if len(neighbors) == 2:
            a, b = neighbors
            adjacency[a].add(b)
            adjacency[b].add(a)
        pending.extend(neighbors)
    return bool(alive)


def contract_plane_to_minor(
    graph: Graph,
    assignment: PlaneAssignment,
    plane: int,
    ceiling: int = HADWIGER_CEILING,
) -> t.Tuple[Graph, ContractionTrace]:
    """Contract a plane's edges until its largest clique minor stands as vertices."""
    if not 0 <= plane < assignment.plane_count:
        raise PlaneError(f"plane {plane} does not exist")
    return contract_plane(graph, assignment.plane_of, plane, ceiling=ceiling)


def contract_all_planes(
    graph: Graph,
    plane_of: t.Sequence[t.Optional[int]],
    plane_count: int,
    ceiling: int = HADWIGER_CEILING,
) -> t.Tuple[Graph, t.List[ContractionTrace], t.Dict[int, int]]:
    """Contract every plane in index order; also returns original id -> final id."""
    traces = []
    current, labels = graph, list(plane_of)
    position = {v: v for v in range(graph.n)}
    for plane in range(plane_count):
        current, trace = contract_plane(current, labels, plane, ceiling=ceiling)
        labels = trace.plane_of
        position = {v: trace.id_map[p] for v, p in position.items()}
        traces.append(trace)
    return current, traces, position
