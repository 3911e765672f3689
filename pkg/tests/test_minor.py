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

"""Tests for contraction and the clique-minor oracle."""

import typing as t

import networkx as nx
import pytest

from chroma_planes.exceptions import (
    InvalidConfig,
    InvalidGraph,
    OracleLimitExceeded,
    PlaneError,
)
from chroma_planes.graph.base import Graph, delete_edge, from_edge_list
from chroma_planes.graph.generators import (
    bowtie4,
    complete,
    cycle,
    derive_seed,
    empty,
    erdos_renyi,
    from_spec,
    k4_subdivision,
    path,
    petersen,
)
from chroma_planes.oracles.coloring import chromatic_number
from chroma_planes.oracles.minor import (
    MinorWitness,
    contract_all_planes,
    contract_edge,
    contract_plane,
    contract_plane_to_minor,
    extend_to_partition,
    has_clique_minor,
    has_k4_minor,
    hadwiger_number,
    largest_clique_minor,
    verify_minor_witness,
)
from chroma_planes.oracles.naive import naive_hadwiger_number, set_partitions
from chroma_planes.planes.filling import chromatic_fill
from chroma_planes.planes.model import PlaneAssignment

from tests.conftest import sweep_count


class TestContraction:
    """Edge and plane contraction."""

    def test_contract_edge(self) -> None:
        """Contracting a path edge leaves K2 and maps both ends together."""
        graph, id_map = contract_edge(path(3), 0, 1)
        assert graph == complete(2)
        assert id_map == {0: 0, 1: 0, 2: 1}

    def test_contract_edge_merges_neighborhoods(self) -> None:
        """Parallel edges collapse and no loop appears."""
        graph, id_map = contract_edge(cycle(4), 1, 2)
        assert graph == complete(3)
        assert id_map[2] == id_map[1] == 1
        assert id_map[3] == 2

    def test_contract_non_edge(self) -> None:
        """Only edges contract."""
        with pytest.raises(InvalidGraph):
            contract_edge(path(3), 0, 2)

    def test_contract_path_plane(self) -> None:
        """A path plane keeps its K2 minor as two vertices."""
        contracted, trace = contract_plane(path(3), [0, 0, 0], 0)
        assert contracted == complete(2)
        assert len(trace.steps) == 1
        assert trace.plane_of == [0, 0]

    def test_contract_plane_to_minor(self) -> None:
        """Assignments select the plane; unknown planes are rejected."""
        assignment = PlaneAssignment(plane_of=[0, 0, 0], color_of=[0, 1, 0], plane_count=1)
        contracted, trace = contract_plane_to_minor(path(3), assignment, 0)
        assert contracted == complete(2)
        assert sorted(len(block) for block in trace.branch_sets) == [1, 2]
        layout = PlaneAssignment(
            plane_of=[0, 0, 0, 0, 1], color_of=[0, 1, 2, 3, 0], plane_count=2
        )
        unchanged, trace = contract_plane_to_minor(complete(5), layout, 1)
        assert unchanged == complete(5)
        assert trace.steps == []
        with pytest.raises(PlaneError):
            contract_plane_to_minor(complete(5), layout, 2)

    def test_non_plane_edges_are_inherited(self) -> None:
        """Off-plane neighbourhoods map exactly onto the contracted graph."""
        for index in range(12):
            graph = erdos_renyi(9, (0.3, 0.5, 0.7)[index % 3], derive_seed(13, index))
            assignment = chromatic_fill(graph).assignment
            for plane in range(assignment.plane_count):
                contracted, trace = contract_plane_to_minor(graph, assignment, plane)
                off_plane = [v for v in range(graph.n) if assignment.plane_of[v] != plane]
                for w in off_plane:
                    image = {trace.id_map[u] for u in graph.adjacency[w]}
                    assert image == set(contracted.adjacency[trace.id_map[w]]), (index, w)

    def test_contract_plane_errors(self) -> None:
        """Empty and disconnected planes are rejected."""
        with pytest.raises(PlaneError):
            contract_plane(empty(2), [0, 0], 0)
        with pytest.raises(PlaneError):
            contract_plane(path(2), [0, 0], 1)

    def test_contract_all_planes_keeps_k5(self) -> None:
        """A K4 plane plus a singleton plane contract to K5 itself."""
        graph = complete(5)
        contracted, traces, position = contract_all_planes(graph, [0, 0, 0, 0, 1], 2)
        assert contracted == graph
        assert [len(trace.steps) for trace in traces] == [0, 0]
        assert position == {v: v for v in range(5)}

    def test_contract_all_planes_merges_cycle(self) -> None:
        """A C5 plane next to a K1 plane shrinks to a triangle plus the other vertex."""
        graph = from_spec("join:cycle:5,complete:1")
        contracted, traces, position = contract_all_planes(graph, [0] * 5 + [1], 2)
        assert contracted == complete(4)
        assert len(traces[0].branch_sets) == 3
        assert position[5] == 3

    def test_extend_to_partition(self) -> None:
        """Leftover vertices join the first adjacent branch set."""
        assert extend_to_partition(path(4), [(1,), (2,)]) == [(0, 1), (2, 3)]
        with pytest.raises(InvalidGraph):
            extend_to_partition(empty(3), [(0,)])


class TestCliqueMinor:
    """K_t minor search and the Hadwiger number."""

    @pytest.mark.parametrize("n", range(0, 9))
    def test_complete_graphs(self, n: int) -> None:
        """h(K_n) = n."""
        assert hadwiger_number(complete(n)) == n

    @pytest.mark.parametrize(
        "graph,h",
        [
            (empty(3), 1),
            (path(5), 2),
            (cycle(5), 3),
            (k4_subdivision(), 4),
            (bowtie4(), 4),
            (petersen(), 5),
            (from_spec("join:cycle:5,complete:5"), 8),
        ],
    )
    def test_hadwiger_number(self, graph: Graph, h: int) -> None:
        """Known Hadwiger numbers, with checked witnesses."""
        witness = largest_clique_minor(graph)
        assert witness.size == h
        assert verify_minor_witness(graph, witness)

    def test_petersen_has_no_k6(self) -> None:
        """Petersen has K5 but its 15 edges cannot carry K6."""
        assert has_clique_minor(petersen(), 5) is not None
        assert has_clique_minor(petersen(), 6) is None

    def test_k5_minus_edge(self) -> None:
        """Five vertices host K5 only as a subgraph."""
        assert has_clique_minor(delete_edge(complete(5), 0, 1), 5) is None

    def test_small_t(self) -> None:
        """t = 1 needs a vertex and t = 2 an edge."""
        assert has_clique_minor(empty(1), 1) == MinorWitness(branch_sets=((0,),))
        assert has_clique_minor(empty(2), 2) is None
        assert has_clique_minor(path(2), 2) == MinorWitness(branch_sets=((0,), (1,)))
        with pytest.raises(InvalidConfig):
            has_clique_minor(path(2), 0)

    def test_ceiling(self) -> None:
        """Graphs above the ceiling are refused."""
        with pytest.raises(OracleLimitExceeded):
            hadwiger_number(complete(5), ceiling=4)
        with pytest.raises(InvalidConfig):
            hadwiger_number(complete(3), ceiling=0)

    def test_verify_rejects_bad_witnesses(self) -> None:
        """Overlap, disconnection and non-adjacency are caught."""
        graph = path(4)
        assert not verify_minor_witness(graph, MinorWitness(((0, 1), (1, 2))))
        assert not verify_minor_witness(graph, MinorWitness(((0, 2), (3,))))
        assert not verify_minor_witness(graph, MinorWitness(((0,), (2,))))
        assert not verify_minor_witness(graph, MinorWitness(((0,), ())))
        assert verify_minor_witness(graph, MinorWitness(((0, 1), (2, 3))))

    def test_witness_json(self) -> None:
        """Witness documents carry t and reject a mismatch."""
        witness = MinorWitness(((0,), (1, 2)))
        assert witness.json == {"t": 2, "branch_sets": [[0], [1, 2]]}
        assert MinorWitness.from_json(witness.json) == witness
        with pytest.raises(ValueError):
            MinorWitness.from_json({"t": 3, "branch_sets": [[0]]})


@pytest.mark.parametrize(
    "graph,expected",
    [
        (empty(4), False),
        (cycle(6), False),
        (nx.complete_bipartite_graph(2, 3), False),
        (complete(4), True),
        (k4_subdivision(), True),
        (petersen(), True),
    ],
)
def test_has_k4_minor(graph: object, expected: bool) -> None:
    """Series-parallel reduction decides K4 minors."""
    if isinstance(graph, nx.Graph):
        graph = Graph.from_networkx(graph)
    assert has_k4_minor(graph) is expected  # type: ignore


def test_set_partitions_count() -> None:
    """Bell numbers."""
    assert [sum(1 for _ in set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_matches_brute_force_on_small_atlas() -> None:
    """Every graph on at most six vertices agrees with partition enumeration."""
    for nxgraph in nx.graph_atlas_g():
        if nxgraph.number_of_nodes() > 6:
            break
        graph = Graph.from_networkx(nxgraph)
        assert hadwiger_number(graph) == naive_hadwiger_number(graph)
        assert has_k4_minor(graph) is (hadwiger_number(graph) >= 4)


@pytest.mark.slow
def test_matches_brute_force_on_random_graphs() -> None:
    """Random G(7, p) instances agree with partition enumeration."""
    for index in range(sweep_count(full=500, reduced=25)):
        p = (0.3, 0.5, 0.7)[index % 3]
        graph = erdos_renyi(7, p, derive_seed(7, index))
        assert hadwiger_number(graph) == naive_hadwiger_number(graph), index


def test_edge_case_disconnected_minor() -> None:
    """The largest minor may live in any component."""
    graph = from_edge_list(7, [(0, 1)] + [(u, v) for u in range(2, 7) for v in range(u + 1, 7)])
    assert hadwiger_number(graph) == 5


def _contractions(graph: Graph) -> t.Iterator[Graph]:
    for u, v in graph.edges():
        yield contract_edge(graph, u, v)[0]


def test_contraction_never_grows_the_minor() -> None:
    """h(G/e) <= h(G) for every edge of every graph on at most six vertices."""
    for nxgraph in nx.graph_atlas_g():
        if nxgraph.number_of_nodes() > 6:
            break
        graph = Graph.from_networkx(nxgraph)
        h = hadwiger_number(graph)
        assert all(hadwiger_number(minor) <= h for minor in _contractions(graph))


@pytest.mark.slow
def test_contraction_never_grows_the_minor_on_random_graphs() -> None:
    """Every edge contraction of random graphs on 7 and 8 vertices."""
    for index in range(sweep_count(full=300, reduced=16)):
        n = 7 + index % 2
        graph = erdos_renyi(n, (0.3, 0.5, 0.7)[index % 3], derive_seed(17, index))
        h = hadwiger_number(graph)
        assert all(hadwiger_number(minor) <= h for minor in _contractions(graph)), index


def test_chromatic_number_below_hadwiger_on_small_atlas() -> None:
    """chi <= h on every graph with at most six vertices."""
    for nxgraph in nx.graph_atlas_g():
        if nxgraph.number_of_nodes() > 6:
            break
        graph = Graph.from_networkx(nxgraph)
        assert chromatic_number(graph) <= hadwiger_number(graph)


@pytest.mark.slow
def test_chromatic_number_below_hadwiger_on_random_graphs() -> None:
    """chi <= h on random G(n, p) with 5 to 12 vertices."""
    for index in range(sweep_count(full=1000, reduced=24)):
        n = 5 + index % 8
        p = (0.2, 0.4, 0.6, 0.8)[index % 4]
        graph = erdos_renyi(n, p, derive_seed(19, index))
        assert chromatic_number(graph) <= hadwiger_number(graph), index
