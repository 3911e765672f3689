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

"""Chroma planes CLI module."""

import sys
import typing as t
from dataclasses import dataclass
from pathlib import Path

from clea import group, params, run
from halo import Halo
from typing_extensions import Annotated

from chroma_planes.claims.checks import (
    CORPUS_CLAIMS,
    check_C26,
    check_FIG1,
    resolve_claims,
    run_decomposition_checks,
)
from chroma_planes.claims.fuzz import FuzzConfig, run_fuzz
from chroma_planes.claims.report import CORPUS_CELL, ReportSet
from chroma_planes.constants import (
    CHI_BUDGET,
    EXIT_ERROR,
    EXIT_OK,
    HADWIGER_CEILING,
    PLANE_CAPACITY,
)
from chroma_planes.exceptions import ChromaPlanesException, InvalidConfig
from chroma_planes.graph.base import Graph
from chroma_planes.graph.generators import GENERATOR_HELP, from_spec
from chroma_planes.graph.io import read_graph
from chroma_planes.oracles.coloring import optimal_coloring
from chroma_planes.oracles.minor import largest_clique_minor
from chroma_planes.planes.filling import FillConfig, chromatic_fill
from chroma_planes.resource import LocalResource, dumps
from chroma_planes.types import (
    ClaimId,
    OutputFormat,
    PlacementMode,
    ResidualPolicy,
)
from chroma_planes.utils import get_logger


logger = get_logger("chroma_planes.cli")


@dataclass
class RunConfig(LocalResource):  # pylint: disable=too-many-instance-attributes
    """Options shared by every command."""

    input: t.Optional[Path] = None
    gen: t.Optional[str] = None
    output: t.Optional[Path] = None
    format: OutputFormat = OutputFormat.JSON
    capacity: int = PLANE_CAPACITY
    placement: t.Optional[PlacementMode] = None
    residual: t.Optional[ResidualPolicy] = None
    seed: int = 1
    ceiling: int = HADWIGER_CEILING
    budget: int = CHI_BUDGET

    @property
    def has_input(self) -> bool:
        """Whether a graph source was given."""
        return self.input is not None or self.gen is not None

    def validate(self, needs_input: bool = True) -> "RunConfig":
        """Exactly one graph source, positive ceilings."""
        if self.input is not None and self.gen is not None:
            raise InvalidConfig("use either --input or --gen, not both")
        if needs_input and not self.has_input:
            raise InvalidConfig("a graph is required: pass --input or --gen")
        if self.ceiling < 1 or self.budget < 1 or self.capacity < 1:
            raise InvalidConfig("capacity, ceiling and budget must be positive")
        return self

    def fill_config(self) -> FillConfig:
        """Filling configuration for single-graph commands."""
        return FillConfig(
            capacity=self.capacity,
            placement=self.placement or PlacementMode.CAPACITY,
            residual_policy=self.residual or ResidualPolicy.PROCESS_ALL,
            ceiling=self.ceiling,
            budget=self.budget,
        ).validate()

    def load_graph(self) -> Graph:
        """Read or generate the input graph."""
        self.validate()
        if self.gen is not None:
            return from_spec(self.gen)
        try:
            return read_graph(t.cast(Path, self.input))
        except OSError as e:
            raise InvalidConfig(f"cannot read {self.input}: {e}") from e


@dataclass(frozen=True)
class CommandResult:
    """Exit code plus the text a command produced."""

    code: int
    text: str


def _render(config: RunConfig, document: t.Any, table: str) -> str:
    return table if config.format is OutputFormat.TABLE else dumps(document)


def cmd_decompose(config: RunConfig, trace: bool = False) -> CommandResult:
    """Decompose the input graph onto chromatic planes."""
    graph = config.load_graph()
    decomposition = chromatic_fill(graph, config.fill_config())
    document = decomposition.json
    if not trace:
        document.pop("trace")
    sizes = [len(p["vertices"]) for p in document["assignment"]["planes"]]
    logger.info(f"{decomposition.plane_count} plane(s), sizes {sizes}")
    lines = [f"planes: {decomposition.plane_count}"]
    for plane in document["assignment"]["planes"]:
        members = [entry["v"] for entry in plane["vertices"]]
        colors = len({entry["color"] for entry in plane["vertices"]})
        lines.append(
            f"plane {plane['id']}: {len(members)} vertices {members}, {colors} color(s)"
        )
    if decomposition.unplaced:
        lines.append(f"unplaced: {list(decomposition.unplaced)}")
    return CommandResult(EXIT_OK, _render(config, document, "\n".join(lines) + "\n"))


def cmd_chi(config: RunConfig, witness: bool = False) -> CommandResult:
    """Chromatic number of the input graph."""
    coloring = optimal_coloring(config.load_graph(), budget=config.budget)
    document: t.Dict[str, t.Any] = {"chi": coloring.k}
    if witness:
        document["witness"] = coloring.json
    return CommandResult(EXIT_OK, _render(config, document, f"chi = {coloring.k}\n"))


def cmd_hadwiger(config: RunConfig, witness: bool = False) -> CommandResult:
    """Hadwiger number of the input graph."""
    minor = largest_clique_minor(config.load_graph(), ceiling=config.ceiling)
    document: t.Dict[str, t.Any] = {"hadwiger": minor.size}
    if witness:
        document["witness"] = minor.json
    return CommandResult(EXIT_OK, _render(config, document, f"h = {minor.size}\n"))


def parse_claims(value: t.Optional[str]) -> t.List[ClaimId]:
    """Comma-separated claim labels; empty selects all."""
    labels = [label.strip() for label in (value or "").split(",") if label.strip()]
    for label in labels:
        try:
            ClaimId.from_string(label)
        except ValueError as e:
            raise InvalidConfig(str(e)) from e
    return [ClaimId.from_string(label) for label in labels]


def cmd_check(config: RunConfig, claims: t.Sequence[ClaimId] = ()) -> CommandResult:
    """Run the selected claim checks on one graph."""
    selected = resolve_claims([claim.value for claim in claims])
    per_graph = [claim for claim in selected if claim not in CORPUS_CLAIMS]
    config.validate(needs_input=bool(per_graph) or ClaimId.C26 in selected)
    fill = config.fill_config()
    report = ReportSet(seed=config.seed, cells=[fill.label])
    report.labels = FuzzConfig(claims=list(selected)).labels()
    if config.has_input:
        graph = config.load_graph()
        report.instances = 1
        if per_graph:
            decomposition = chromatic_fill(graph, fill)
            for verdict in run_decomposition_checks(
                graph,
                decomposition,
                claims=per_graph,
                ceiling=config.ceiling,
                budget=config.budget,
            ):
                report.record(fill.label, verdict)
        if ClaimId.C26 in selected:
            report.record(
                CORPUS_CELL,
                check_C26([graph], ceiling=config.ceiling, budget=config.budget),
            )
    if ClaimId.FIG1 in selected:
        report.record(CORPUS_CELL, check_FIG1(ceiling=config.ceiling))
    report.finalize()
    return CommandResult(report.exit_code, _render(config, report.json, report.table()))


def parse_range(value: str) -> t.Tuple[int, int]:
    """`lo..hi` or a single integer."""
    try:
        if ".." in value:
            low, high = value.split("..", 1)
            return int(low), int(high)
        return int(value), int(value)
    except ValueError as e:
        raise InvalidConfig(f"invalid vertex range `{value}`, expected lo..hi") from e


def parse_probabilities(value: str) -> t.List[float]:
    """Comma-separated edge probabilities."""
    try:
        return [float(p) for p in value.split(",") if p.strip()]
    except ValueError as e:
        raise InvalidConfig(f"invalid edge probabilities `{value}`") from e


def cmd_fuzz(  # pylint: disable=too-many-arguments
    config: RunConfig,
    count: int = 100,
    n_range: str = "5..9",
    probabilities: str = "0.3,0.5,0.7",
    claims: t.Sequence[ClaimId] = (),
    jobs: int = 1,
) -> CommandResult:
    """Fuzz the claims over a seeded corpus."""
    config.validate(needs_input=False)
    n_min, n_max = parse_range(n_range)
    fuzz_config = FuzzConfig(
        seed=config.seed,
        count=count,
        n_min=n_min,
        n_max=n_max,
        p_values=parse_probabilities(probabilities),
        claims=list(claims),
        capacity=config.capacity,
        ceiling=config.ceiling,
        budget=config.budget,
    )
    if config.placement is not None:
        fuzz_config.placements = [config.placement]
    if config.residual is not None:
        fuzz_config.residual_policies = [config.residual]
    report = run_fuzz(fuzz_config, jobs=jobs)
    return CommandResult(report.exit_code, _render(config, report.json, report.table()))


def execute(command: t.Callable[[], CommandResult], output: t.Optional[Path]) -> int:
    """Run a command, write its output and map failures to exit codes."""
    try:
        result = command()
    except ChromaPlanesException as e:
        logger.error(f"error: {e}")
        return e.code
    except ValueError as e:
        logger.error(f"error: {e}")
        return EXIT_ERROR
    if output is not None:
        output.write_text(result.text, encoding="utf-8")
    else:
        sys.stdout.write(result.text)
    return result.code


def _enum(kind: t.Type[t.Any], value: t.Optional[str]) -> t.Any:
    return None if value is None else kind.from_string(value)


def _config(  # pylint: disable=too-many-arguments
    input_path: t.Optional[str] = None,
    gen: t.Optional[str] = None,
    output: t.Optional[str] = None,
    output_format: str = "json",
    capacity: int = PLANE_CAPACITY,
    placement: t.Optional[str] = None,
    residual: t.Optional[str] = None,
    seed: int = 1,
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,
) -> RunConfig:
    try:
        return RunConfig(
            input=None if input_path is None else Path(input_path),
            gen=gen,
            output=None if output is None else Path(output),
            format=OutputFormat.from_string(output_format),
            capacity=capacity,
            placement=_enum(PlacementMode, placement),
            residual=_enum(ResidualPolicy, residual),
            seed=seed,
            ceiling=ceiling,
            budget=budget,
        )
    except ValueError as e:
        raise InvalidConfig(str(e)) from e


def _exit(command: t.Callable[[], CommandResult], output: t.Optional[str]) -> None:
    sys.exit(execute(command, None if output is None else Path(output)))


InputOption = Annotated[
    t.Optional[str],
    params.String(long_flag="--input", help="Graph file (DIMACS .col or edge list)"),
]
GenOption = Annotated[
    t.Optional[str], params.String(long_flag="--gen", help=GENERATOR_HELP)
]
OutputOption = Annotated[
    t.Optional[str],
    params.String(long_flag="--output", help="Write output here instead of stdout"),
]
FormatOption = Annotated[
    str, params.String(long_flag="--format", help="json (default) or table")
]
CapacityOption = Annotated[
    int, params.Integer(long_flag="--capacity", help="Colors per plane (default 4)")
]
PlacementOption = Annotated[
    t.Optional[str],
    params.String(long_flag="--placement", help="capacity4 (default) or strict-lemma2"),
]
ResidualOption = Annotated[
    t.Optional[str],
    params.String(long_flag="--residual", help="process-all (default) or discard-paper"),
]
CeilingOption = Annotated[
    int,
    params.Integer(
        long_flag="--ceiling-hadwiger",
        help=(
            f"Max vertices for exact minor search (default {HADWIGER_CEILING}); "
            "dense graphs above 12 vertices can take minutes"
        ),
    ),
]
BudgetOption = Annotated[
    int,
    params.Integer(
        long_flag="--budget-chi",
        help=f"Search-node budget of the coloring oracle (default {CHI_BUDGET})",
    ),
]
ClaimOption = Annotated[
    t.Optional[str],
    params.String(
        long_flag="--claim",
        help=f"Comma-separated claims: {', '.join(ClaimId.labels())} (default: all)",
    ),
]
WitnessOption = Annotated[
    bool, params.Boolean(long_flag="--witness", help="Emit the witness JSON")
]


@group(name="chroma-planes")
def _chroma_planes() -> None:
    """Chroma planes - chromatic-plane decompositions and claim checks."""


@_chroma_planes.command(name="decompose")
def _decompose(  # pylint: disable=too-many-arguments
    input_path: InputOption = None,
    gen: GenOption = None,
    output: OutputOption = None,
    output_format: FormatOption = "json",
    capacity: CapacityOption = PLANE_CAPACITY,
    placement: PlacementOption = None,
    residual: ResidualOption = None,
    ceiling: CeilingOption = HADWIGER_CEILING,
    budget: BudgetOption = CHI_BUDGET,
    trace: Annotated[
        bool, params.Boolean(long_flag="--trace", help="Include the filling trace")
    ] = False,
) -> None:
    """Assign a graph to chromatic planes."""
    _exit(
        lambda: cmd_decompose(
            _config(
                input_path=input_path,
                gen=gen,
                output=output,
                output_format=output_format,
                capacity=capacity,
                placement=placement,
                residual=residual,
                ceiling=ceiling,
                budget=budget,
            ),
            trace=trace,
        ),
        output,
    )


@_chroma_planes.command(name="chi")
def _chi(
    input_path: InputOption = None,
    gen: GenOption = None,
    output: OutputOption = None,
    output_format: FormatOption = "json",
    budget: BudgetOption = CHI_BUDGET,
    witness: WitnessOption = False,
) -> None:
    """Print the chromatic number."""
    _exit(
        lambda: cmd_chi(
            _config(
                input_path=input_path,
                gen=gen,
                output=output,
                output_format=output_format,
                budget=budget,
            ),
            witness=witness,
        ),
        output,
    )


@_chroma_planes.command(name="hadwiger")
def _hadwiger(
    input_path: InputOption = None,
    gen: GenOption = None,
    output: OutputOption = None,
    output_format: FormatOption = "json",
    ceiling: CeilingOption = HADWIGER_CEILING,
    witness: WitnessOption = False,
) -> None:
    """Print the Hadwiger number."""
    _exit(
        lambda: cmd_hadwiger(
            _config(
                input_path=input_path,
                gen=gen,
                output=output,
                output_format=output_format,
                ceiling=ceiling,
            ),
            witness=witness,
        ),
        output,
    )


@_chroma_planes.command(name="check")
def _check(  # pylint: disable=too-many-arguments
    input_path: InputOption = None,
    gen: GenOption = None,
    output: OutputOption = None,
    output_format: FormatOption = "json",
    claim: ClaimOption = None,
    capacity: CapacityOption = PLANE_CAPACITY,
    placement: PlacementOption = None,
    residual: ResidualOption = None,
    ceiling: CeilingOption = HADWIGER_CEILING,
    budget: BudgetOption = CHI_BUDGET,
) -> None:
    """Check claims on one graph (FIG1 needs no graph)."""
    _exit(
        lambda: cmd_check(
            _config(
                input_path=input_path,
                gen=gen,
                output=output,
                output_format=output_format,
                capacity=capacity,
                placement=placement,
                residual=residual,
                ceiling=ceiling,
                budget=budget,
            ),
            claims=parse_claims(claim),
        ),
        output,
    )


@_chroma_planes.command(name="fuzz")
def _fuzz(  # pylint: disable=too-many-arguments,too-many-locals
    output: OutputOption = None,
    output_format: FormatOption = "json",
    seed: Annotated[int, params.Integer(long_flag="--seed", help="Master seed")] = 1,
    count: Annotated[
        int, params.Integer(long_flag="--count", help="Corpus size (default 100)")
    ] = 100,
    n: Annotated[
        str, params.String(long_flag="--n", help="Vertex range lo..hi (default 5..9)")
    ] = "5..9",
    p: Annotated[
        str, params.String(long_flag="--p", help="Comma-separated edge probabilities")
    ] = "0.3,0.5,0.7",
    claim: ClaimOption = None,
    capacity: CapacityOption = PLANE_CAPACITY,
    placement: PlacementOption = None,
    residual: ResidualOption = None,
    ceiling: CeilingOption = HADWIGER_CEILING,
    budget: BudgetOption = CHI_BUDGET,
    jobs: Annotated[
        int, params.Integer(long_flag="--jobs", help="Worker processes (default 1)")
    ] = 1,
) -> None:
    """Fuzz the claims over a seeded corpus; sweeps both placements and policies."""

    def _command() -> CommandResult:
        config = _config(
            output=output,
            output_format=output_format,
            capacity=capacity,
            placement=placement,
            residual=residual,
            seed=seed,
            ceiling=ceiling,
            budget=budget,
        )
        spinner = Halo(
            text="Fuzzing claims...",
            spinner="dots",
            stream=sys.stderr,
            enabled=sys.stderr.isatty(),
        )
        spinner.start()
        try:
            return cmd_fuzz(
                config,
                count=count,
                n_range=n,
                probabilities=p,
                claims=parse_claims(claim),
                jobs=jobs,
            )
        finally:
            spinner.stop()

    _exit(_command, output)


def main() -> None:
    """CLI entry point."""
    run(cli=_chroma_planes)


if __name__ == "__main__":
    main()
