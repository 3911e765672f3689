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

"""Tests for chromatic filling and decomposition validation."""

import dataclasses

import pytest

from chroma_planes.exceptions import FillingError, InvalidConfig, InvalidGraph
from chroma_planes.graph.base import Graph, from_edge_list, is_connected_set
from chroma_planes.graph.generators import (
    complete,
    cycle,
    derive_seed,
    empty,
    erdos_renyi,
    k4_subdivision,
    path,
)
from chroma_planes.planes.filling import (
    Decomposition,
    FillConfig,
    chromatic_fill,
    find_k4_seed,
    replay_trace,
    validate_decomposition,
)
from chroma_planes.planes.model import plane_vertex_sets
from chroma_planes.types import CheckStatus, PlacementMode, ResidualPolicy

from tests.conftest import sweep_count


DISCARD = FillConfig(residual_policy=ResidualPolicy.DISCARD)


def _tampered(decomposition: Decomposition, **changes: object) -> Decomposition:
    """Copy with an independent assignment and some fields replaced."""
    return dataclasses.replace(
        decomposition, assignment=decomposition.assignment.copy(), **changes
    )


class TestSeed:
    """Seed selection."""

    def test_k4_in_k5(self) -> None:
        """The first four ids of K5 form the seed."""
        assert find_k4_seed(complete(5)) == (0, 1, 2, 3)

    def test_minor_free_graph_seeds_itself(self) -> None:
        """Without a K4 minor the whole component is the seed."""
        assert find_k4_seed(cycle(5)) == (0, 1, 2, 3, 4)
        assert find_k4_seed(path(1)) == (0,)

    def test_subdivided_k4_needs_all_vertices(self) -> None:
        """A subdivided K4 has no smaller K4-minor set."""
        assert find_k4_seed(k4_subdivision()) == (0, 1, 2, 3, 4)

    def test_other_sizes(self) -> None:
        """A triangle hanging off a pendant vertex seeds K3."""
        graph = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
        assert find_k4_seed(graph, size=3) == (1, 2, 3)

    def test_rejects_empty_and_disconnected(self) -> None:
        """Seeds come from connected, non-empty graphs."""
        with pytest.raises(InvalidGraph):
            find_k4_seed(empty(0))
        with pytest.raises(InvalidGraph):
            find_k4_seed(empty(2))


class TestFill:
    """Filling on small known graphs."""

    def test_k5(self, k5: Graph) -> None:
        """K4 plane plus a singleton plane."""
        decomposition = chromatic_fill(k5)
        assignment = decomposition.assignment
        assert plane_vertex_sets(assignment) == [(0, 1, 2, 3), (4,)]
        assert assignment.color_of == [0, 1, 2, 3, 0]
        assert decomposition.unplaced == ()
        first = decomposition.trace[0]
        assert first.seed_set == (0, 1, 2, 3)
        assert first.placements == []
        assert first.residual_components == [((4,), None)]
        assert first.chosen_next == (4,)

    def test_k8(self, k8: Graph) -> None:
        """K8 needs two full planes."""
        decomposition = chromatic_fill(k8)
        assert plane_vertex_sets(decomposition.assignment) == [
            (0, 1, 2, 3),
            (4, 5, 6, 7),
        ]

    def test_edgeless(self) -> None:
        """Isolated vertices never share a plane."""
        decomposition = chromatic_fill(empty(3))
        assert plane_vertex_sets(decomposition.assignment) == [(0,), (1,), (2,)]
        assert decomposition.assignment.color_of == [0, 0, 0]
        assert all(record.connected for record in decomposition.trace)

    def test_unattached_vertex_waits(self, k5_with_tail: Graph) -> None:
        """A vertex with no neighbour on the plane stays in the residual."""
        decomposition = chromatic_fill(k5_with_tail)
        assert plane_vertex_sets(decomposition.assignment) == [(0, 1, 2, 3), (4, 5)]
        assert decomposition.trace[0].placements == []
        assert decomposition.trace[0].residual_components == [((4, 5), None)]
        assert all(record.connected for record in decomposition.trace)
        assert validate_decomposition(k5_with_tail, decomposition).passed

    def test_cycle(self) -> None:
        """C5 is its own seed and needs three colors."""
        decomposition = chromatic_fill(cycle(5))
        assert decomposition.plane_count == 1
        assert decomposition.assignment.color_of == [0, 1, 0, 1, 2]

    def test_empty_graph(self) -> None:
        """No vertices, no planes."""
        decomposition = chromatic_fill(empty(0))
        assert decomposition.plane_count == 0
        assert decomposition.trace == []

    def test_deterministic(self, split_graph: Graph) -> None:
        """Same graph and config, same decomposition."""
        assert chromatic_fill(split_graph).json == chromatic_fill(split_graph).json

    def test_seed_not_colorable(self) -> None:
        """A seed needing more colors than the capacity aborts."""
        with pytest.raises(FillingError):
            chromatic_fill(cycle(5), FillConfig(capacity=2))
        with pytest.raises(FillingError):
            chromatic_fill(complete(5), FillConfig(capacity=3))

    def test_config_validation(self) -> None:
        """Out-of-range knobs are rejected."""
        with pytest.raises(InvalidConfig):
            FillConfig(capacity=0).validate()
        with pytest.raises(InvalidConfig):
            FillConfig(budget=0).validate()
        assert FillConfig().label == "capacity4/process-all"
        assert DISCARD.label == "capacity4/discard-paper"


class TestResidualPolicy:
    """Residual components after a split."""

    def test_process_all(self, split_graph: Graph) -> None:
        """Both residual blocks are eventually filled."""
        decomposition = chromatic_fill(split_graph)
        assert plane_vertex_sets(decomposition.assignment) == [
            tuple(range(8)),
            (8, 9, 10, 11),
            (12,),
            (13, 14, 15, 16),
            (17,),
        ]
        first = decomposition.trace[0]
        assert first.residual_components == [
            ((8, 9, 10, 11, 12), 5),
            ((13, 14, 15, 16, 17), 5),
        ]
        assert first.chosen_next == (8, 9, 10, 11, 12)
        assert first.queued == [(13, 14, 15, 16, 17)]
        assert decomposition.unplaced == ()

    def test_discard(self, split_graph: Graph) -> None:
        """The losing block is left unplaced."""
        decomposition = chromatic_fill(split_graph, DISCARD)
        assert decomposition.plane_count == 3
        assert decomposition.unplaced == (13, 14, 15, 16, 17)
        assert decomposition.trace[0].discarded == [(13, 14, 15, 16, 17)]
        assert validate_decomposition(split_graph, decomposition).passed

    def test_ties_prefer_smallest_id(self, k6_minus_edge: Graph) -> None:
        """Equal Hadwiger numbers fall back to the smallest vertex id."""
        decomposition = chromatic_fill(k6_minus_edge)
        assert plane_vertex_sets(decomposition.assignment) == [
            (0, 1, 2, 3),
            (4,),
            (5,),
        ]
        discarded = chromatic_fill(k6_minus_edge, DISCARD)
        assert discarded.plane_count == 2
        assert discarded.unplaced == (5,)


class TestValidation:
    """Independent re-checking of decompositions."""

    @pytest.mark.parametrize("mode", list(PlacementMode))
    @pytest.mark.parametrize("policy", list(ResidualPolicy))
    def test_valid_runs_pass(
        self, split_graph: Graph, mode: PlacementMode, policy: ResidualPolicy
    ) -> None:
        """Every cell produces decompositions that pass all checks."""
        config = FillConfig(placement=mode, residual_policy=policy)
        decomposition = chromatic_fill(split_graph, config)
        report = validate_decomposition(split_graph, decomposition)
        assert report.passed, report.failures()
        assert all(check.status is CheckStatus.PASS for check in report.checks)

    def test_improper_plane_is_caught(self, k5: Graph) -> None:
        """A recolored vertex breaks properness and the replay."""
        decomposition = _tampered(chromatic_fill(k5))
        decomposition.assignment.color_of[1] = 0
        failed = {check.name for check in validate_decomposition(k5, decomposition).failures()}
        assert {"assignment invariants", "trace replay", "plane palette"} <= failed

    def test_coverage_is_caught(self, k5: Graph) -> None:
        """Unplaced vertices under process-all are a failure."""
        decomposition = _tampered(chromatic_fill(k5), unplaced=(4,))
        failed = {check.name for check in validate_decomposition(k5, decomposition).failures()}
        assert "coverage" in failed

    def test_disconnected_plane_is_caught(self, k5_with_tail: Graph) -> None:
        """A vertex moved onto a plane it does not touch splits that plane."""
        decomposition = chromatic_fill(k5_with_tail)
        broken = _tampered(decomposition)
        broken.assignment.plane_of[4] = 0
        broken.assignment.color_of[4] = 0
        failed = {
            check.name for check in validate_decomposition(k5_with_tail, broken).failures()
        }
        assert {"plane connectivity", "trace replay", "trace records"} <= failed
        first = dataclasses.replace(decomposition.trace[0], placements=[(4, 0)])
        problems = replay_trace(k5_with_tail, _tampered(decomposition, trace=[first]))
        assert "vertex 4 was not placeable on plane 0" in problems

    def test_replay_catches_premature_close(self) -> None:
        """A plane closed while a vertex was still placeable fails the replay."""
        graph = from_edge_list(5, [(u, v) for u in range(4) for v in range(u + 1, 4)] + [(3, 4)])
        decomposition = chromatic_fill(graph)
        assert decomposition.trace[0].placements == [(4, 0)]
        assert replay_trace(graph, decomposition) == []
        shortened = dataclasses.replace(decomposition.trace[0], placements=[])
        problems = replay_trace(graph, _tampered(decomposition, trace=[shortened]))
        assert any("still placeable" in problem for problem in problems)
        assert "replayed assignment differs from the recorded one" in problems


@pytest.mark.slow
def test_random_decompositions_validate() -> None:
    """Random G(n, p) decompositions on up to 12 vertices pass validation in every cell."""
    configs = [
        FillConfig(placement=mode, residual_policy=policy)
        for mode in PlacementMode
        for policy in ResidualPolicy
    ]
    for index in range(sweep_count(full=1000, reduced=20)):
        n = 5 + index % 8
        p = (0.2, 0.4, 0.6, 0.8)[index % 4]
        graph = erdos_renyi(n, p, derive_seed(5, index))
        for config in configs:
            decomposition = chromatic_fill(graph, config)
            report = validate_decomposition(graph, decomposition)
            assert report.passed, (index, config.label, report.failures())
            for members in plane_vertex_sets(decomposition.assignment):
                assert is_connected_set(graph, members), (index, config.label, members)
