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

"""Tests for the claim checks."""

import dataclasses

import pytest

from chroma_planes.claims.checks import (
    DECOMPOSITION_CLAIMS,
    check_C21,
    check_C23,
    check_C26,
    check_C31,
    check_C32,
    check_completeness,
    check_FIG1,
    check_L1,
    check_L3,
    check_T8,
    contract_decomposition,
    resolve_claims,
    reverify,
    run_decomposition_checks,
)
from chroma_planes.claims.verdict import ClaimVerdict, ClaimWitness, GraphData, conjunction
from chroma_planes.exceptions import InvalidConfig
from chroma_planes.graph.base import Graph
from chroma_planes.graph.generators import (
    complete,
    derive_seed,
    empty,
    erdos_renyi,
    from_spec,
    path,
    petersen,
)
from chroma_planes.oracles.coloring import chromatic_number
from chroma_planes.oracles.minor import hadwiger_number
from chroma_planes.planes.filling import Decomposition, FillConfig, chromatic_fill
from chroma_planes.planes.model import PlaneAssignment
from chroma_planes.resource import dumps
from chroma_planes.types import ClaimId, ClaimStatus, PlacementMode, ResidualPolicy

from tests.conftest import sweep_count


HOLDS = ClaimStatus.HOLDS
VIOLATED = ClaimStatus.VIOLATED
INCONCLUSIVE = ClaimStatus.INCONCLUSIVE

DISCARD = FillConfig(residual_policy=ResidualPolicy.DISCARD)


def _partial_palette_decomposition() -> Decomposition:
    """Path 0-1-2: plane 0 holds {0, 1}, vertex 2 alone on plane 1."""
    assignment = PlaneAssignment.new(3)
    for v, color in ((0, 0), (1, 1)):
        assignment.plane_of[v], assignment.color_of[v] = 0, color
    assignment.plane_of[2], assignment.color_of[2] = 1, 0
    assignment.plane_count = 2
    return Decomposition(assignment=assignment, trace=[], unplaced=(), config=FillConfig())


class TestVerdicts:
    """Verdict trees."""

    def test_label_defaults_to_claim(self) -> None:
        """Unlabelled verdicts carry their claim id."""
        assert ClaimVerdict.holds(ClaimId.C21).label == "C2.1"

    def test_conjunction(self) -> None:
        """Violated wins, then inconclusive."""
        held = ClaimVerdict.holds(ClaimId.T8)
        unknown = ClaimVerdict.inconclusive(ClaimId.T8)
        broken = ClaimVerdict.violated(
            ClaimId.T8, ClaimWitness(graph=GraphData.of(complete(2)))
        )
        assert conjunction([held, held]) is HOLDS
        assert conjunction([held, unknown]) is INCONCLUSIVE
        assert conjunction([unknown, broken]) is VIOLATED
        assert conjunction([]) is INCONCLUSIVE

    def test_graph_data(self) -> None:
        """Graphs survive the transport form."""
        assert GraphData.of(petersen()).to_graph() == petersen()


class TestContraction:
    """Whole-decomposition contraction."""

    def test_k5_keeps_its_vertices(self, k5: Graph) -> None:
        """K4 + K1 planes need no contraction."""
        contracted = contract_decomposition(k5, chromatic_fill(k5))
        assert contracted.graph == k5
        assert contracted.minors(0) == [0, 1, 2, 3]
        assert contracted.origins[4] == (4,)

    def test_unplaced_vertices_are_dropped(self, k6_minus_edge: Graph) -> None:
        """Only placed vertices are contracted."""
        contracted = contract_decomposition(
            k6_minus_edge, chromatic_fill(k6_minus_edge, DISCARD)
        )
        assert contracted.graph == complete(5)


class TestPlaneClaims:
    """Per-decomposition checks on small graphs."""

    def test_l1(self, k5: Graph, k8: Graph) -> None:
        """Contraction keeps h on complete graphs."""
        assert check_L1(k5, chromatic_fill(k5)).status is HOLDS
        assert check_L1(k8, chromatic_fill(k8)).status is HOLDS

    def test_pendant_vertex_is_decided(self, k5_with_tail: Graph) -> None:
        """A vertex hanging off the second plane leaves both planes contractible."""
        decomposition = chromatic_fill(k5_with_tail)
        assert check_L1(k5_with_tail, decomposition).status is HOLDS
        assert check_completeness(k5_with_tail, decomposition).status is not INCONCLUSIVE

    def test_oracle_limit_is_inconclusive(self, k5: Graph) -> None:
        """A ceiling below the graph size cannot decide."""
        verdict = check_L1(k5, chromatic_fill(k5), ceiling=4)
        assert verdict.status is INCONCLUSIVE
        assert "ceiling" in verdict.detail

    def test_fig1(self) -> None:
        """Every non-plane edge of K5 is critical."""
        verdict = check_FIG1()
        assert verdict.status is HOLDS
        assert [v.label for v in verdict.sub_verdicts] == [
            "FIG1.0-4",
            "FIG1.1-4",
            "FIG1.2-4",
            "FIG1.3-4",
        ]
        assert all(v.status is HOLDS for v in verdict.sub_verdicts)

    def test_completeness_holds_on_k8(self, k8: Graph) -> None:
        """Two K4 planes contract to K8."""
        verdict = check_completeness(k8, chromatic_fill(k8))
        assert verdict.status is HOLDS
        assert [(v.label, v.status) for v in verdict.sub_verdicts] == [
            ("C2.2", HOLDS),
            ("C2.4", HOLDS),
            ("C2.5", HOLDS),
        ]

    def test_completeness_fails_on_missing_edge(self, k6_minus_edge: Graph) -> None:
        """Planes {4} and {5} never meet."""
        decomposition = chromatic_fill(k6_minus_edge)
        verdict = check_completeness(k6_minus_edge, decomposition)
        assert verdict.status is VIOLATED
        assert verdict.witness is not None
        assert verdict.witness.decomposition is decomposition
        statuses = {v.label: v.status for v in verdict.sub_verdicts}
        assert statuses == {"C2.2": HOLDS, "C2.4": VIOLATED, "C2.5": VIOLATED}
        assert "planes 1 and 2" in verdict.find("C2.4").detail  # type: ignore

    def test_completeness_with_discard(self, k6_minus_edge: Graph) -> None:
        """Dropping vertex 5 leaves a complete K5."""
        decomposition = chromatic_fill(k6_minus_edge, DISCARD)
        assert check_completeness(k6_minus_edge, decomposition).status is HOLDS

    def test_c21(self, k5: Graph) -> None:
        """Neighbours of a plane see its whole palette."""
        assert check_C21(k5, chromatic_fill(k5)).status is HOLDS
        verdict = check_C21(path(3), _partial_palette_decomposition())
        assert verdict.status is VIOLATED
        assert "vertex 2 off plane 0" in verdict.detail

    def test_c23(self, split_graph: Graph) -> None:
        """Recorded placements replay; an emptied trace does not."""
        decomposition = chromatic_fill(split_graph)
        assert check_C23(split_graph, decomposition).status is HOLDS
        broken = dataclasses.replace(decomposition, trace=decomposition.trace[:1])
        assert check_C23(split_graph, broken).status is VIOLATED

    @pytest.mark.parametrize("config", [FillConfig(), DISCARD])
    def test_cut_claims(self, split_graph: Graph, config: FillConfig) -> None:
        """The first plane's cut vertices and bridge split the residual."""
        decomposition = chromatic_fill(split_graph, config)
        cut = check_C31(split_graph, decomposition)
        assert cut.status is HOLDS
        assert cut.detail.startswith("3 cut event(s)")
        choice = check_C32(split_graph, decomposition)
        assert choice.status is HOLDS
        assert choice.detail.startswith("1 residual split(s)")

    def test_c32_catches_wrong_choice(self, split_graph: Graph) -> None:
        """A recorded Hadwiger number the oracle disagrees with is reported."""
        decomposition = chromatic_fill(split_graph)
        first = decomposition.trace[0]
        tampered = dataclasses.replace(
            first,
            residual_components=[(part, 4) for part, _ in first.residual_components],
        )
        broken = dataclasses.replace(
            decomposition, trace=[tampered] + decomposition.trace[1:]
        )
        assert check_C32(split_graph, broken).status is VIOLATED

    def test_l3(self, k5: Graph, k5_with_tail: Graph) -> None:
        """Valid connected planes on small chromatic numbers."""
        assert check_L3(k5, chromatic_fill(k5)).status is HOLDS
        edgeless = empty(3)
        assert check_L3(edgeless, chromatic_fill(edgeless)).status is HOLDS
        decomposition = chromatic_fill(k5_with_tail)
        broken = dataclasses.replace(decomposition, assignment=decomposition.assignment.copy())
        broken.assignment.plane_of[4] = 0
        broken.assignment.color_of[4] = 0
        verdict = check_L3(k5_with_tail, broken)
        assert verdict.status is VIOLATED
        assert "plane 0 does not induce a connected subgraph" in verdict.detail
        k9 = complete(9)
        assert check_L3(k9, chromatic_fill(k9)).status is INCONCLUSIVE


class TestEightColors:
    """Two planes for eight colors, and its converse."""

    def test_k8(self, k8: Graph) -> None:
        """K8 holds every part."""
        verdict = check_T8(k8)
        assert verdict.status is HOLDS
        assert [v.label for v in verdict.sub_verdicts] == ["T8.a", "T8.b", "T8.c", "T8.d"]
        assert verdict.find("T8.d").status is INCONCLUSIVE  # type: ignore

    def test_precondition(self) -> None:
        """Seven colors do not meet the precondition."""
        verdict = check_T8(complete(7))
        assert verdict.status is INCONCLUSIVE
        assert all(v.status is INCONCLUSIVE for v in verdict.sub_verdicts)

    def test_join(self) -> None:
        """C5 joined with K5 is 8-chromatic and fills two planes onto K8."""
        graph = from_spec("join:cycle:5,complete:5")
        verdict = check_T8(graph)
        assert verdict.status is HOLDS
        assert verdict.find("T8.a").detail == "h=8"  # type: ignore
        assert verdict.find("T8.b").detail == "2 plane(s)"  # type: ignore

    def test_converse(self) -> None:
        """h = 9 forces at most eight colors only when chi <= 8."""
        verdict = check_T8(complete(9))
        assert verdict.find("T8.d").status is VIOLATED  # type: ignore

    @pytest.mark.parametrize(
        "spec", ["complete:8", "join:cycle:5,complete:5", "complete:9", "mycielski:2"]
    )
    def test_minor_part_agrees_with_hadwiger_bound(self, spec: str) -> None:
        """T8.a decides exactly the chi <= h cross-check on 8-chromatic graphs."""
        graph = from_spec(spec)
        part = check_T8(graph).find("T8.a")
        assert part is not None
        chi, h = chromatic_number(graph), hadwiger_number(graph)
        if chi == 8:
            assert (part.status is HOLDS) is (chi <= h)
        else:
            assert part.status is INCONCLUSIVE


class TestCorpusClaims:
    """Pairwise monotonicity."""

    def test_c26_violated(self) -> None:
        """Petersen has the larger minor but fewer colors than K4."""
        verdict = check_C26([petersen(), complete(4)])
        assert verdict.status is VIOLATED
        assert verdict.witness is not None
        assert verdict.witness.graph.to_graph() == petersen()
        assert verdict.witness.partner.to_graph() == complete(4)  # type: ignore

    def test_c26_holds(self) -> None:
        """Complete graphs are consistent."""
        verdict = check_C26([complete(5), complete(4)])
        assert verdict.status is HOLDS
        assert verdict.instances == 2

    def test_c26_needs_distinct_minors(self) -> None:
        """Equal Hadwiger numbers give nothing to compare."""
        assert check_C26([complete(4), complete(4)]).status is INCONCLUSIVE

    def test_c26_counts_undecided_instances(self) -> None:
        """A graph the coloring budget cannot settle keeps the verdict open."""
        verdict = check_C26([from_spec("mycielski:2"), complete(5), complete(4)], budget=1)
        assert verdict.status is INCONCLUSIVE
        assert verdict.instances == 3
        assert verdict.detail.startswith("1 of 3 instance(s) undecided")


class TestRunner:
    """Claim selection, batch runs and re-verification."""

    def test_resolve_claims(self) -> None:
        """Sub-labels select their parent check."""
        assert resolve_claims(["T8", "C2.4", "C2.2"]) == [ClaimId.C33, ClaimId.T8]
        assert resolve_claims(None)[: len(DECOMPOSITION_CLAIMS)] == list(
            DECOMPOSITION_CLAIMS
        )
        with pytest.raises(InvalidConfig):
            resolve_claims(["C9.9"])

    def test_all_hold_on_k8(self, k8: Graph) -> None:
        """Every per-decomposition claim holds on K8."""
        verdicts = run_decomposition_checks(k8, chromatic_fill(k8))
        assert [v.claim for v in verdicts] == list(DECOMPOSITION_CLAIMS)
        assert all(v.status is HOLDS for v in verdicts), [
            (v.label, v.detail) for v in verdicts if v.status is not HOLDS
        ]

    def test_reverify_sub_label(self, k6_minus_edge: Graph) -> None:
        """A stored witness reproduces its violation from JSON."""
        verdict = check_completeness(k6_minus_edge, chromatic_fill(k6_minus_edge))
        joined = verdict.find("C2.4")
        assert joined is not None
        loaded = ClaimVerdict.from_json(joined.json)
        fresh = reverify(loaded)
        assert fresh.label == "C2.4"
        assert fresh.status is VIOLATED

    def test_reverify_pair(self) -> None:
        """Pairwise witnesses re-run on both graphs."""
        verdict = check_C26([petersen(), complete(4)])
        assert reverify(verdict).status is VIOLATED

    def test_reverify_needs_witness(self) -> None:
        """Held verdicts have nothing to re-run."""
        with pytest.raises(InvalidConfig):
            reverify(ClaimVerdict.holds(ClaimId.L1))


def test_t8_exemplar_is_reproducible() -> None:
    """The 8-chromatic join gives identical verdicts in every cell across runs."""
    graph = from_spec("join:cycle:5,complete:5")
    for placement in PlacementMode:
        for policy in ResidualPolicy:
            config = FillConfig(placement=placement, residual_policy=policy)
            first, second = check_T8(graph, config=config), check_T8(graph, config=config)
            assert first.find("T8.a").status is HOLDS  # type: ignore
            assert dumps(first.json) == dumps(second.json)


@pytest.mark.slow
def test_contraction_sweep_reverifies() -> None:
    """L1 decides every random graph on 5 to 12 vertices; violations re-verify."""
    for index in range(sweep_count(full=1000, reduced=24)):
        n = 5 + index % 8
        p = (0.2, 0.4, 0.6, 0.8)[index % 4]
        graph = erdos_renyi(n, p, derive_seed(9, index))
        verdict = check_L1(graph, chromatic_fill(graph))
        assert verdict.status is not INCONCLUSIVE, (index, verdict.detail)
        if verdict.status is VIOLATED:
            assert reverify(verdict).status is VIOLATED
