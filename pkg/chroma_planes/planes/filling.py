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

"""Chromatic filling: greedy assignment of a graph onto chromatic planes."""

import itertools
import logging
import typing as t
from collections import deque
from dataclasses import dataclass, field

from chroma_planes.constants import (
    CHI_BUDGET,
    HADWIGER_CEILING,
    PLANE_CAPACITY,
    SEED_CLIQUE,
)
from chroma_planes.exceptions import (
    BudgetExhausted,
    FillingError,
    InvalidConfig,
    InvalidGraph,
    PlaneError,
)
from chroma_planes.graph.base import (
    Graph,
    connected_components,
    induced_subgraph,
    is_connected_set,
    mask_of,
)
from chroma_planes.oracles.coloring import (
    chromatic_number,
    is_k_colorable,
    verify_coloring,
)
from chroma_planes.oracles.minor import has_clique_minor, has_k4_minor, hadwiger_number
from chroma_planes.planes.model import (
    PlaneAssignment,
    Placement,
    assignment_problems,
    combined_coloring,
    is_placeable,
    plane_chromatic_number,
    restrict_to_assigned,
    touches_plane,
)
from chroma_planes.resource import LocalResource
from chroma_planes.types import (
    CheckStatus,
    PlacementMode,
    ResidualPolicy,
    VertexSet,
    vertex_set,
)
from chroma_planes.utils import get_logger


@dataclass
class FillConfig(LocalResource):
    """Knobs of one filling run."""

    capacity: int = PLANE_CAPACITY
    placement: PlacementMode = PlacementMode.CAPACITY
    residual_policy: ResidualPolicy = ResidualPolicy.PROCESS_ALL
    ceiling: int = HADWIGER_CEILING
    budget: int = CHI_BUDGET

    def validate(self) -> "FillConfig":
        """Reject out-of-range values."""
        if self.capacity < 1:
            raise InvalidConfig(f"capacity must be positive, got {self.capacity}")
        if self.ceiling < 1:
            raise InvalidConfig(f"ceiling must be positive, got {self.ceiling}")
        if self.budget < 1:
            raise InvalidConfig(f"budget must be positive, got {self.budget}")
        if not isinstance(self.placement, PlacementMode):
            raise InvalidConfig(f"unknown placement mode {self.placement!r}")
        if not isinstance(self.residual_policy, ResidualPolicy):
            raise InvalidConfig(f"unknown residual policy {self.residual_policy!r}")
        return self

    @property
    def label(self) -> str:
        """Short label of the interpretation/policy cell."""
        return f"{self.placement.value}/{self.residual_policy.value}"


@dataclass
class IterationRecord(LocalResource):
    """One plane of the filling: seed, placements and how the residual split."""

    plane: int
    working_set: VertexSet
    seed_set: VertexSet
    seed_colors: t.List[t.Tuple[int, int]] = field(default_factory=list)
    placements: t.List[t.Tuple[int, int]] = field(default_factory=list)
    residual_components: t.List[t.Tuple[VertexSet, t.Optional[int]]] = field(
        default_factory=list
    )
    chosen_next: t.Optional[VertexSet] = None
    queued: t.List[VertexSet] = field(default_factory=list)
    discarded: t.List[VertexSet] = field(default_factory=list)
    connected: bool = True


@dataclass
class Decomposition(LocalResource):
    """Result of chromatic filling."""

    assignment: PlaneAssignment
    trace: t.List[IterationRecord]
    unplaced: VertexSet
    config: FillConfig

    @property
    def plane_count(self) -> int:
        """Number of planes."""
        return self.assignment.plane_count


@dataclass(frozen=True)
class ValidationCheck(LocalResource):
    """One re-checked property of a decomposition."""

    name: str
    status: CheckStatus
    detail: str = ""


@dataclass
class ValidationReport(LocalResource):
    """All checks of `validate_decomposition`."""

    checks: t.List[ValidationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """No check failed."""
        return all(check.status is not CheckStatus.FAIL for check in self.checks)

    def failures(self) -> t.List[ValidationCheck]:
        """Failed checks."""
        return [check for check in self.checks if check.status is CheckStatus.FAIL]

    def add(self, name: str, problems: t.List[str]) -> None:
        """Record a check from its list of problems."""
        status = CheckStatus.FAIL if problems else CheckStatus.PASS
        self.checks.append(ValidationCheck(name, status, "; ".join(problems[:5])))


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def admit(
    graph: Graph,
    assignment: PlaneAssignment,
    plane: int,
    v: int,
    mode: PlacementMode = PlacementMode.CAPACITY,
) -> Placement:
    """Placement criterion for a vertex that must also touch the plane it joins."""
    decision = is_placeable(graph, assignment, plane, v, mode=mode)
    if decision.placeable and not touches_plane(graph, assignment, plane, v):
        return Placement(placeable=False, available=decision.available)
    return decision


def find_k4_seed(
    graph: Graph, size: int = SEED_CLIQUE, ceiling: int = HADWIGER_CEILING
) -> VertexSet:
    """Smallest (then lexicographically first) vertex set inducing a K_size minor."""
    if graph.n == 0:
        raise InvalidGraph("cannot seed a plane from an empty graph")
    if not graph.is_connected():
        raise InvalidGraph("seed search needs a connected graph")

    def _has_minor(host: Graph) -> bool:
        if size == SEED_CLIQUE:
            return has_k4_minor(host)
        return has_clique_minor(host, size, ceiling=ceiling) is not None

    if not _has_minor(graph):
        return tuple(range(graph.n))
    clique_edges = size * (size - 1) // 2
    for order in range(size, graph.n + 1):
        for combo in itertools.combinations(range(graph.n), order):
            cmask = mask_of(combo)
            edges = sum(_popcount(graph.masks[v] & cmask) for v in combo) // 2
            if edges < order - size + clique_edges:
                continue
            sub, _ = induced_subgraph(graph, combo)
            if sub.is_connected() and _has_minor(sub):
                return tuple(combo)
    return tuple(range(graph.n))  # pragma: no cover


class ChromaticFiller:
    """Runs the filling loop over one graph and owns its assignment."""

    def __init__(
        self,
        graph: Graph,
        config: t.Optional[FillConfig] = None,
        logger: t.Optional[logging.Logger] = None,
    ) -> None:
        """
        Initialize the filler.

        :param graph: graph to decompose.
        :param config: capacity, placement reading and residual policy.
        :param logger: logging.Logger object.
        """
        self.graph = graph
        self.config = (config or FillConfig()).validate()
        self.logger = logger or get_logger("chroma_planes.filling")
        self.assignment = PlaneAssignment.new(graph.n, capacity=self.config.capacity)
        self.trace: t.List[IterationRecord] = []
        self.unplaced: t.List[int] = []

    def _components(self, vertices: t.Iterable[int]) -> t.List[VertexSet]:
        sub, id_map = induced_subgraph(self.graph, vertices)
        back = {new: old for old, new in id_map.items()}
        return [
            vertex_set(back[v] for v in part) for part in connected_components(sub)
        ]

    def _hadwiger(self, members: VertexSet) -> int:
        sub, _ = induced_subgraph(self.graph, members)
        return hadwiger_number(sub, ceiling=self.config.ceiling)

    def _rank(
        self, components: t.List[VertexSet]
    ) -> t.List[t.Tuple[VertexSet, t.Optional[int]]]:
        """Components with their Hadwiger numbers, best first (ties: smallest id)."""
        if len(components) == 1:
            return [(components[0], None)]
        scored = [(part, self._hadwiger(part)) for part in components]
        return sorted(scored, key=lambda item: (-t.cast(int, item[1]), item[0][0]))

    def _seed(self, component: VertexSet) -> t.List[t.Tuple[int, int]]:
        sub, id_map = induced_subgraph(self.graph, component)
        back = {new: old for old, new in id_map.items()}
        local = find_k4_seed(sub, ceiling=self.config.ceiling)
        seed_graph, seed_map = induced_subgraph(sub, local)
        try:
            coloring = is_k_colorable(
                seed_graph, self.config.capacity, budget=self.config.budget
            )
        except BudgetExhausted as e:
            raise FillingError(f"seed coloring ran out of budget: {e}") from e
        if coloring is None:
            raise FillingError(
                f"seed {[back[v] for v in local]} is not "
                f"{self.config.capacity}-colorable"
            )
        return [(back[v], coloring.colors[seed_map[v]]) for v in local]

    def _fill_plane(self, plane: int, working: VertexSet) -> t.List[t.Tuple[int, int]]:
        placements = []
        placed = True
        while placed:
            placed = False
            for v in working:
                if self.assignment.plane_of[v] is not None:
                    continue
                decision = admit(
                    self.graph, self.assignment, plane, v, mode=self.config.placement
                )
                if decision.placeable:
                    color = t.cast(int, decision.color)
                    self.assignment.assign(v, plane, color)
                    placements.append((v, color))
                    placed = True
                    break
        return placements

    def run(self) -> Decomposition:
        """Fill planes until no working set is left."""
        queue: t.Deque[VertexSet] = deque()
        if self.graph.n:
            queue.append(tuple(range(self.graph.n)))
        while queue:
            working = queue.popleft()
            component = self._rank(self._components(working))[0][0]
            plane = self.assignment.open_plane()
            seed = self._seed(component)
            for v, color in seed:
                self.assignment.assign(v, plane, color)
            record = IterationRecord(
                plane=plane,
                working_set=working,
                seed_set=vertex_set(v for v, _ in seed),
                seed_colors=sorted(seed),
            )
            record.placements = self._fill_plane(plane, working)
            members = self.assignment.vertices_on(plane)
            record.connected = is_connected_set(self.graph, members)
            residual = [v for v in working if self.assignment.plane_of[v] is None]
            ranked = self._rank(self._components(residual)) if residual else []
            record.residual_components = sorted(ranked, key=lambda item: item[0][0])
            if ranked:
                record.chosen_next = ranked[0][0]
                queue.appendleft(ranked[0][0])
                rest = [part for part, _ in ranked[1:]]
                if self.config.residual_policy is ResidualPolicy.DISCARD:
                    record.discarded = rest
                    self.unplaced.extend(v for part in rest for v in part)
                else:
                    record.queued = rest
                    queue.extend(rest)
            self.logger.debug(
                f"plane {plane}: seed {list(record.seed_set)}, "
                f"{len(record.placements)} placed, "
                f"{len(ranked)} residual component(s)"
            )
            self.trace.append(record)
        self.logger.info(
            f"Filled {self.graph.n} vertices onto {self.assignment.plane_count} "
            f"plane(s) [{self.config.label}], {len(self.unplaced)} unplaced"
        )
        return Decomposition(
            assignment=self.assignment,
            trace=self.trace,
            unplaced=vertex_set(self.unplaced),
            config=self.config,
        )


def chromatic_fill(graph: Graph, config: t.Optional[FillConfig] = None) -> Decomposition:
    """Decompose a graph onto chromatic planes."""
    return ChromaticFiller(graph=graph, config=config).run()


def replay_trace(graph: Graph, decomposition: Decomposition) -> t.List[str]:
    """Re-apply the trace through the placement criterion; returns the problems."""
    config = decomposition.config
    problems: t.List[str] = []
    replayed = PlaneAssignment.new(graph.n, capacity=config.capacity)
    try:
        for record in decomposition.trace:
            plane = replayed.open_plane()
            if plane != record.plane:
                problems.append(f"record for plane {record.plane} out of order")
            for v, color in record.seed_colors:
                replayed.assign(v, plane, color)
            for v, color in record.placements:
                decision = admit(graph, replayed, plane, v, mode=config.placement)
                if not decision.placeable:
                    problems.append(f"vertex {v} was not placeable on plane {plane}")
                elif decision.color != color:
                    problems.append(
                        f"vertex {v} got color {color}, lowest free was {decision.color}"
                    )
                replayed.assign(v, plane, color)
            for v in record.working_set:
                if replayed.plane_of[v] is None and admit(
                    graph, replayed, plane, v, mode=config.placement
                ).placeable:
                    problems.append(f"plane {plane} closed with {v} still placeable")
    except PlaneError as e:
        problems.append(f"replay aborted: {e}")
        return problems
    if (
        replayed.plane_of != decomposition.assignment.plane_of
        or replayed.color_of != decomposition.assignment.color_of
    ):
        problems.append("replayed assignment differs from the recorded one")
    return problems


def _trace_problems(graph: Graph, decomposition: Decomposition) -> t.List[str]:
    problems = []
    for record in decomposition.trace:
        seed = set(record.seed_set)
        if any(v in seed for v, _ in record.placements):
            problems.append(f"plane {record.plane} places a seed vertex again")
        seen: t.Set[int] = set()
        for part, _ in record.residual_components:
            if seen & set(part):
                problems.append(f"plane {record.plane} residual components overlap")
            seen |= set(part)
        members = decomposition.assignment.vertices_on(record.plane)
        if record.connected != is_connected_set(graph, members):
            problems.append(f"plane {record.plane} connectivity flag is wrong")
    return problems


def _coverage_problems(graph: Graph, decomposition: Decomposition) -> t.List[str]:
    assigned = set(decomposition.assignment.assigned())
    unplaced = set(decomposition.unplaced)
    problems = []
    if assigned & unplaced:
        problems.append(f"vertices both placed and unplaced: {sorted(assigned & unplaced)}")
    missing = set(range(graph.n)) - assigned - unplaced
    if missing:
        problems.append(f"vertices neither placed nor unplaced: {sorted(missing)}")
    if unplaced and decomposition.config.residual_policy is ResidualPolicy.PROCESS_ALL:
        problems.append(f"process-all left vertices unplaced: {sorted(unplaced)}")
    return problems


def validate_decomposition(graph: Graph, decomposition: Decomposition) -> ValidationReport:
    """Re-check every decomposition invariant; failures become report entries."""
    report = ValidationReport()
    assignment = decomposition.assignment
    config = decomposition.config
    report.add("assignment invariants", assignment_problems(graph, assignment))
    if assignment.n != graph.n:
        return report
    report.add("coverage", _coverage_problems(graph, decomposition))
    report.add(
        "plane capacity",
        [
            f"plane {p} uses {plane_chromatic_number(assignment, p)} colors"
            for p in range(assignment.plane_count)
            if assignment.vertices_on(p)
            and plane_chromatic_number(assignment, p) > assignment.capacity
        ],
    )
    colorability: t.List[str] = []
    skipped = False
    for p in range(assignment.plane_count):
        sub, _ = induced_subgraph(graph, assignment.vertices_on(p))
        try:
            if is_k_colorable(sub, assignment.capacity, budget=config.budget) is None:
                colorability.append(f"plane {p} is not {assignment.capacity}-colorable")
        except BudgetExhausted:
            skipped = True
    if skipped and not colorability:
        report.checks.append(
            ValidationCheck("plane colorability", CheckStatus.SKIP, "budget exhausted")
        )
    else:
        report.add("plane colorability", colorability)
    report.add(
        "plane connectivity",
        [
            f"plane {p} does not induce a connected subgraph"
            for p in range(assignment.plane_count)
            if not is_connected_set(graph, assignment.vertices_on(p))
        ],
    )
    report.add("trace replay", replay_trace(graph, decomposition))
    report.add("trace records", _trace_problems(graph, decomposition))
    placed_graph, placed, _ = restrict_to_assigned(graph, assignment)
    palette_problems: t.List[str] = []
    if not assignment_problems(placed_graph, placed):
        palette = combined_coloring(placed)
        if not verify_coloring(placed_graph, palette, palette.k):
            palette_problems.append("plane-offset palette is not a proper coloring")
    else:
        palette_problems.append("assignment unsound, palette not built")
    report.add("plane palette", palette_problems)
    bound = assignment.capacity * assignment.plane_count
    try:
        chi = chromatic_number(placed_graph, budget=config.budget)
        report.add(
            "chromatic bound",
            [] if chi <= bound else [f"chi={chi} exceeds {bound} palette colors"],
        )
    except BudgetExhausted:
        report.checks.append(
            ValidationCheck("chromatic bound", CheckStatus.SKIP, "budget exhausted")
        )
    return report
