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

"""Deterministic claim fuzzing over generated corpora."""

import typing as t
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from chroma_planes.claims.checks import (
    CORPUS_CLAIMS,
    CorpusEntry,
    check_C26_entries,
    check_FIG1,
    corpus_entry,
    resolve_claims,
    run_decomposition_checks,
)
from chroma_planes.claims.report import CORPUS_CELL, ReportSet
from chroma_planes.claims.verdict import ClaimVerdict
from chroma_planes.constants import CHI_BUDGET, HADWIGER_CEILING, PLANE_CAPACITY
from chroma_planes.exceptions import (
    BudgetExhausted,
    FillingError,
    InvalidConfig,
    OracleLimitExceeded,
)
from chroma_planes.graph.base import Graph
from chroma_planes.graph.generators import SplitMix64, derive_seed, from_spec
from chroma_planes.oracles.coloring import chromatic_number
from chroma_planes.planes.filling import FillConfig, chromatic_fill
from chroma_planes.planes.model import restrict_to_assigned
from chroma_planes.resource import LocalResource
from chroma_planes.types import ClaimId, PlacementMode, ResidualPolicy
from chroma_planes.utils import get_logger


STRUCTURED_MIX = (
    "join:cycle:5,complete:5",
    "complete:8",
    "complete:5",
    "mycielski:2",
    "petersen",
    "bowtie4",
    "k4sub",
    "cycle:5",
)

SUB_LABELS = {
    ClaimId.C33: ("C2.2", "C2.4", "C2.5"),
    ClaimId.T8: ("T8.a", "T8.b", "T8.c", "T8.d"),
}


@dataclass
class FuzzConfig(LocalResource):  # pylint: disable=too-many-instance-attributes
    """Corpus and grid of one fuzz run."""

    seed: int = 1
    count: int = 100
    n_min: int = 5
    n_max: int = 9
    p_values: t.List[float] = field(default_factory=lambda: [0.3, 0.5, 0.7])
    structured: bool = True
    placements: t.List[PlacementMode] = field(
        default_factory=lambda: list(PlacementMode)
    )
    residual_policies: t.List[ResidualPolicy] = field(
        default_factory=lambda: list(ResidualPolicy)
    )
    claims: t.List[ClaimId] = field(default_factory=list)
    capacity: int = PLANE_CAPACITY
    ceiling: int = HADWIGER_CEILING
    budget: int = CHI_BUDGET

    def validate(self) -> "FuzzConfig":
        """Reject invalid ranges."""
        if self.count < 0:
            raise InvalidConfig(f"count must be non-negative, got {self.count}")
        if not 1 <= self.n_min <= self.n_max:
            raise InvalidConfig(f"invalid vertex range {self.n_min}..{self.n_max}")
        if not self.p_values or any(not 0.0 <= p <= 1.0 for p in self.p_values):
            raise InvalidConfig(f"edge probabilities must lie in [0, 1]: {self.p_values}")
        if not self.placements or not self.residual_policies:
            raise InvalidConfig("at least one placement mode and residual policy")
        for cell in self.cells():
            cell.validate()
        return self

    def cells(self) -> t.List[FillConfig]:
        """Interpretation/policy grid."""
        return [
            FillConfig(
                capacity=self.capacity,
                placement=placement,
                residual_policy=policy,
                ceiling=self.ceiling,
                budget=self.budget,
            )
            for placement in self.placements
            for policy in self.residual_policies
        ]

    def selected(self) -> t.List[ClaimId]:
        """Checks to run."""
        return resolve_claims([claim.value for claim in self.claims])

    def labels(self) -> t.List[str]:
        """Verdict labels the run reports on."""
        labels = []
        for claim in self.selected():
            labels.append(claim.value)
            labels.extend(SUB_LABELS.get(claim, ()))
        return labels


def corpus_specs(config: FuzzConfig) -> t.List[str]:
    """Generator specs of the corpus: the structured mix first, then G(n, p) draws."""
    structured = STRUCTURED_MIX if config.structured else ()
    specs = []
    for index in range(config.count):
        if index < len(structured):
            specs.append(structured[index])
            continue
        rng = SplitMix64(derive_seed(config.seed, index))
        n = config.n_min + rng.next_below(config.n_max - config.n_min + 1)
        p = config.p_values[rng.next_below(len(config.p_values))]
        specs.append(f"gnp:{n},{p!r},{rng.next_u64()}")
    return specs


@dataclass
class InstanceTask:
    """One corpus instance sent to a worker."""

    index: int
    spec: str
    config: FuzzConfig


@dataclass
class CellResult:
    """Verdicts of one instance under one grid cell."""

    cell: str
    verdicts: t.List[ClaimVerdict] = field(default_factory=list)
    plane_count: t.Optional[int] = None
    placed_chromatic: t.Optional[int] = None


@dataclass
class InstanceResult:
    """Everything a worker learned about one instance."""

    index: int
    spec: str
    entry: t.Optional[CorpusEntry] = None
    cells: t.List[CellResult] = field(default_factory=list)
    errors: t.List[str] = field(default_factory=list)


_UNDECIDABLE = (OracleLimitExceeded, BudgetExhausted, FillingError)


def _run_cell(
    graph: Graph, config: FuzzConfig, cell: FillConfig, claims: t.List[ClaimId]
) -> CellResult:
    result = CellResult(cell=cell.label)
    per_decomposition = [c for c in claims if c not in CORPUS_CLAIMS]
    try:
        decomposition = chromatic_fill(graph, cell)
    except _UNDECIDABLE as e:
        result.verdicts = [ClaimVerdict.inconclusive(c, str(e)) for c in per_decomposition]
        return result
    result.plane_count = decomposition.plane_count
    result.verdicts = run_decomposition_checks(
        graph,
        decomposition,
        claims=per_decomposition,
        ceiling=config.ceiling,
        budget=config.budget,
    )
    if decomposition.unplaced:
        placed, _, _ = restrict_to_assigned(graph, decomposition.assignment)
        try:
            result.placed_chromatic = chromatic_number(placed, budget=config.budget)
        except BudgetExhausted:
            result.placed_chromatic = None
    return result


def run_instance(task: InstanceTask) -> InstanceResult:
    """Fill and check one instance under every grid cell; never raises."""
    config = task.config
    result = InstanceResult(index=task.index, spec=task.spec)
    try:
        graph = from_spec(task.spec)
        result.entry = corpus_entry(
            graph, label=task.spec, ceiling=config.ceiling, budget=config.budget
        )
    except Exception as e:  # pylint: disable=broad-except
        result.errors.append(f"#{task.index} {task.spec}: {e!r}")
        return result
    claims = config.selected()
    for cell in config.cells():
        try:
            result.cells.append(_run_cell(graph, config, cell, claims))
        except Exception as e:  # pylint: disable=broad-except
            result.errors.append(f"#{task.index} {task.spec} [{cell.label}]: {e!r}")
    return result


def _sanity(report: ReportSet, result: InstanceResult, capacity: int) -> None:
    entry = result.entry
    if entry is None or entry.chromatic is None:
        report.sanity.skipped += 1
        return
    report.sanity.checked += 1
    chi = entry.chromatic
    if entry.hadwiger is not None and chi > entry.hadwiger:
        report.sanity.chi_above_hadwiger.append(
            f"{result.spec}: chi={chi} > h={entry.hadwiger}"
        )
    for cell in result.cells:
        if cell.plane_count is None:
            continue
        bound_chi = chi if cell.placed_chromatic is None else cell.placed_chromatic
        if bound_chi > capacity * cell.plane_count:
            report.sanity.palette_bound.append(
                f"{result.spec} [{cell.cell}]: chi={bound_chi} > "
                f"{capacity}*{cell.plane_count}"
            )


def merge_results(config: FuzzConfig, results: t.Sequence[InstanceResult]) -> ReportSet:
    """Fold instance results (in instance order) into a report set."""
    report = ReportSet(
        seed=config.seed,
        instances=len(results),
        cells=[cell.label for cell in config.cells()],
        labels=config.labels(),
    )
    entries: t.List[CorpusEntry] = []
    for result in sorted(results, key=lambda r: r.index):
        report.errors.extend(result.errors)
        for cell in result.cells:
            for verdict in cell.verdicts:
                report.record(cell.cell, verdict)
        if result.entry is not None:
            entries.append(result.entry)
        _sanity(report, result, config.capacity)
    selected = config.selected()
    if ClaimId.C26 in selected and entries:
        report.record(CORPUS_CELL, check_C26_entries(entries))
    if ClaimId.FIG1 in selected and results:
        report.record(CORPUS_CELL, check_FIG1(ceiling=config.ceiling))
    return report.finalize()


def run_fuzz(config: FuzzConfig, jobs: int = 1) -> ReportSet:
    """Generate the corpus, check every instance and aggregate; same seed, same report."""
    config.validate()
    if jobs < 1:
        raise InvalidConfig(f"jobs must be positive, got {jobs}")
    logger = get_logger("chroma_planes.fuzz")
    tasks = [
        InstanceTask(index=index, spec=spec, config=config)
        for index, spec in enumerate(corpus_specs(config))
    ]
    logger.info(
        f"Fuzzing {len(tasks)} instance(s) over {len(config.cells())} cell(s) "
        f"with {jobs} job(s)"
    )
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(run_instance, tasks))
    else:
        results = [run_instance(task) for task in tasks]
    report = merge_results(config, results)
    logger.info(
        f"Fuzz finished: {len(report.violations)} violation(s), "
        f"{len(report.errors)} error(s)"
    )
    return report

