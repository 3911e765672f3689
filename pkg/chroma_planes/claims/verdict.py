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

"""Claim verdicts and their witnesses."""

import typing as t
from dataclasses import dataclass, field

from chroma_planes.graph.base import Graph, from_edge_list
from chroma_planes.planes.filling import Decomposition, FillConfig
from chroma_planes.resource import LocalResource
from chroma_planes.types import ClaimId, ClaimStatus, Edge


@dataclass
class GraphData(LocalResource):
    """Graph in transportable form."""

    n: int
    edges: t.List[Edge]
    label: str = ""

    @classmethod
    def of(cls, graph: Graph, label: str = "") -> "GraphData":
        """Capture a graph."""
        return cls(n=graph.n, edges=graph.edges(), label=label)

    def to_graph(self) -> Graph:
        """Rebuild the graph."""
        return from_edge_list(self.n, self.edges)


@dataclass
class ClaimWitness(LocalResource):
    """Everything needed to re-run a check that came out violated."""

    graph: GraphData
    detail: str = ""
    config: t.Optional[FillConfig] = None
    decomposition: t.Optional[Decomposition] = None
    partner: t.Optional[GraphData] = None


@dataclass
class ClaimVerdict(LocalResource):
    """Outcome of one claim on one instance (or one corpus)."""

    claim: ClaimId
    status: ClaimStatus
    label: str = ""
    detail: str = ""
    instances: int = 1
    witness: t.Optional[ClaimWitness] = None
    sub_verdicts: t.List["ClaimVerdict"] = field(default_factory=list)

    def __post_init__(self) -> None:
        """Default the label to the claim id."""
        if not self.label:
            self.label = self.claim.value

    @classmethod
    def holds(cls, claim: ClaimId, detail: str = "", **kwargs: t.Any) -> "ClaimVerdict":
        """Claim held."""
        return cls(claim=claim, status=ClaimStatus.HOLDS, detail=detail, **kwargs)

    @classmethod
    def violated(
        cls, claim: ClaimId, witness: ClaimWitness, **kwargs: t.Any
    ) -> "ClaimVerdict":
        """Claim violated; the witness is mandatory."""
        return cls(
            claim=claim,
            status=ClaimStatus.VIOLATED,
            detail=witness.detail,
            witness=witness,
            **kwargs,
        )

    @classmethod
    def inconclusive(
        cls, claim: ClaimId, detail: str = "", **kwargs: t.Any
    ) -> "ClaimVerdict":
        """Claim could not be decided."""
        return cls(claim=claim, status=ClaimStatus.INCONCLUSIVE, detail=detail, **kwargs)

    def flatten(self) -> t.List["ClaimVerdict"]:
        """This verdict followed by its sub-verdicts."""
        return [self] + [v for sub in self.sub_verdicts for v in sub.flatten()]

    def find(self, label: str) -> t.Optional["ClaimVerdict"]:
        """Verdict with the given label in this tree."""
        return next((v for v in self.flatten() if v.label == label), None)

    @property
    def any_violated(self) -> bool:
        """Whether this verdict or a sub-verdict is violated."""
        return any(v.status is ClaimStatus.VIOLATED for v in self.flatten())


def conjunction(verdicts: t.Sequence[ClaimVerdict]) -> ClaimStatus:
    """Violated if any is, holds if all do, inconclusive otherwise."""
    statuses = [v.status for v in verdicts]
    if ClaimStatus.VIOLATED in statuses:
        return ClaimStatus.VIOLATED
    if statuses and all(s is ClaimStatus.HOLDS for s in statuses):
        return ClaimStatus.HOLDS
    return ClaimStatus.INCONCLUSIVE
