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

"""Mechanical checks of the chromatic-plane claims."""

import functools
import itertools
import typing as t
from dataclasses import dataclass

import networkx as nx

from chroma_planes.claims.verdict import (
    ClaimVerdict,
    ClaimWitness,
    GraphData,
    conjunction,
)
from chroma_planes.constants import (
    CHI_BUDGET,
    HADWIGER_CEILING,
    T8_COLORS,
    T8_CONVERSE_MINOR,
    T8_PLANES,
)
from chroma_planes.exceptions import (
    BudgetExhausted,
    FillingError,
    InvalidConfig,
    OracleLimitExceeded,
    PlaneError,
)
from chroma_planes.graph.base import Graph, delete_edge, induced_subgraph
from chroma_planes.graph.generators import complete
from chroma_planes.oracles.coloring import chromatic_number
from chroma_planes.oracles.minor import contract_all_planes, hadwiger_number
from chroma_planes.planes.filling import (
    Decomposition,
    FillConfig,
    chromatic_fill,
    replay_trace,
    validate_decomposition,
)
from chroma_planes.planes.model import (
    classify_edges,
    plane_chromatic_number,
    plane_vertex_sets,
    restrict_to_assigned,
)
from chroma_planes.types import ClaimId, ClaimStatus, VertexSet, vertex_set
from chroma_planes.utils import get_logger


_UNDECIDABLE = (OracleLimitExceeded, BudgetExhausted, PlaneError, FillingError)

CheckFunction = t.Callable[..., ClaimVerdict]

# Claims evaluated per (graph, decomposition), in report order.
DECOMPOSITION_CLAIMS = (
    ClaimId.L1,
    ClaimId.C21,
    ClaimId.C23,
    ClaimId.C31,
    ClaimId.C32,
    ClaimId.C33,
    ClaimId.L3,
    ClaimId.T8,
)
CORPUS_CLAIMS = (ClaimId.C26, ClaimId.FIG1)

# Claims reported as sub-labels of another check.
SUB_LABEL_PARENT = {
    ClaimId.C22: ClaimId.C33,
    ClaimId.C24: ClaimId.C33,
    ClaimId.C25: ClaimId.C33,
}

logger = get_logger("chroma_planes.claims")


def _guarded(claim: ClaimId) -> t.Callable[[CheckFunction], CheckFunction]:
    """Turn oracle limits and broken planes into an inconclusive verdict."""

    def decorator(func: CheckFunction) -> CheckFunction:
        @functools.wraps(func)
        def wrapper(*args: t.Any, **kwargs: t.Any) -> ClaimVerdict:
            try:
                return func(*args, **kwargs)
            except _UNDECIDABLE as e:
                return ClaimVerdict.inconclusive(claim, str(e))

        return wrapper

    return decorator


def _witness(graph: Graph, decomposition: Decomposition, detail: str) -> ClaimWitness:
    return ClaimWitness(
        graph=GraphData.of(graph),
        detail=detail,
        config=decomposition.config,
        decomposition=decomposition,
    )


def _from_problems(
    claim: ClaimId,
    graph: Graph,
    decomposition: Decomposition,
    problems: t.List[str],
    held: str,
    label: str = "",
) -> ClaimVerdict:
    if problems:
        logger.debug(f"{label or claim.value} violated: {problems[0]}")
        return ClaimVerdict.violated(
            claim, _witness(graph, decomposition, "; ".join(problems[:5])), label=label
        )
    return ClaimVerdict.holds(claim, held, label=label)


def _hadwiger_of(graph: Graph, vertices: t.Iterable[int], ceiling: int) -> int:
    sub, _ = induced_subgraph(graph, vertices)
    return hadwiger_number(sub, ceiling=ceiling)


@dataclass
class ContractedPlanes:
    """Graph left after contracting every plane to its minor."""

    host: Graph
    graph: Graph
    plane_of: t.List[t.Optional[int]]
    origins: t.Dict[int, VertexSet]

    def minors(self, plane: int) -> t.List[int]:
        """Minor vertices of one plane."""
        return [x for x, p in enumerate(self.plane_of) if p == plane]


def contract_decomposition(
    graph: Graph, decomposition: Decomposition, ceiling: int = HADWIGER_CEILING
) -> ContractedPlanes:
    """Contract every plane of the placed part of a graph, in plane order."""
    host, assignment, id_map = restrict_to_assigned(graph, decomposition.assignment)
    final, traces, position = contract_all_planes(
        host, assignment.plane_of, assignment.plane_count, ceiling=ceiling
    )
    back = {new: old for old, new in id_map.items()}
    origins: t.Dict[int, t.List[int]] = {x: [] for x in range(final.n)}
    for v, x in position.items():
        origins[x].append(back[v])
    return ContractedPlanes(
        host=host,
        graph=final,
        plane_of=traces[-1].plane_of if traces else [],
        origins={x: vertex_set(members) for x, members in origins.items()},
    )


@_guarded(ClaimId.L1)
def check_L1(  # pylint: disable=invalid-name
    graph: Graph,
    decomposition: Decomposition,
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,  # pylint: disable=unused-argument
) -> ClaimVerdict:
    """Contracting every plane to its minor keeps the Hadwiger number."""
    contracted = contract_decomposition(graph, decomposition, ceiling=ceiling)
    before = hadwiger_number(contracted.host, ceiling=ceiling)
    after = hadwiger_number(contracted.graph, ceiling=ceiling)
    if before == after:
        return ClaimVerdict.holds(
            ClaimId.L1,
            f"h={before} before and after contracting "
            f"{decomposition.plane_count} plane(s)",
        )
    return ClaimVerdict.violated(
        ClaimId.L1,
        _witness(graph, decomposition, f"h dropped from {before} to {after}"),
    )


@_guarded(ClaimId.FIG1)
def check_FIG1(  # pylint: disable=invalid-name
    ceiling: int = HADWIGER_CEILING,
) -> ClaimVerdict:
    """K5 as one K4 plane plus a single vertex: every non-plane edge is critical."""
    graph = complete(5)
    decomposition = chromatic_fill(graph, FillConfig(ceiling=ceiling))
    problems = []
    layout = plane_vertex_sets(decomposition.assignment)
    if layout != [(0, 1, 2, 3), (4,)]:
        problems.append(f"unexpected layout {layout}")
    intact = hadwiger_number(graph, ceiling=ceiling)
    if intact != 5:
        problems.append(f"intact K5 has h={intact}")
    cross = classify_edges(graph, decomposition.assignment).non_plane_edges
    if len(cross) != 4:
        problems.append(f"{len(cross)} non-plane edges instead of 4")
    sub_verdicts = []
    for u, v in cross:
        label = f"FIG1.{u}-{v}"
        h = hadwiger_number(delete_edge(graph, u, v), ceiling=ceiling)
        if h == 4:
            sub_verdicts.append(
                ClaimVerdict.holds(ClaimId.FIG1, f"h={h} without ({u}, {v})", label=label)
            )
            continue
        detail = f"deleting ({u}, {v}) leaves h={h}"
        problems.append(detail)
        sub_verdicts.append(
            ClaimVerdict.violated(
                ClaimId.FIG1, _witness(graph, decomposition, detail), label=label
            )
        )
    if problems:
        return ClaimVerdict.violated(
            ClaimId.FIG1,
            _witness(graph, decomposition, "; ".join(problems)),
            sub_verdicts=sub_verdicts,
        )
    return ClaimVerdict.holds(
        ClaimId.FIG1,
        "h(K5)=5 and every non-plane edge deletion gives h=4",
        sub_verdicts=sub_verdicts,
    )


def _describe(contracted: ContractedPlanes, x: int) -> str:
    return (
        f"{x} (plane {contracted.plane_of[x]}, "
        f"from {list(contracted.origins[x])})"
    )


@_guarded(ClaimId.C33)
def check_completeness(
    graph: Graph,
    decomposition: Decomposition,
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,  # pylint: disable=unused-argument
) -> ClaimVerdict:
    """Plane minors are completely connected and together form a complete graph."""
    contracted = contract_decomposition(graph, decomposition, ceiling=ceiling)
    final = contracted.graph
    planes = range(decomposition.plane_count)

    attached: t.List[str] = []
    for p in planes:
        members = contracted.minors(p)
        for x in range(final.n):
            if contracted.plane_of[x] == p:
                continue
            touching = [y for y in members if final.has_edge(x, y)]
            if touching and len(touching) < len(members):
                missing = next(y for y in members if not final.has_edge(x, y))
                attached.append(
                    f"minor vertex {_describe(contracted, x)} touches plane {p} "
                    f"but misses {_describe(contracted, missing)}"
                )

    joined: t.List[str] = []
    for p, q in itertools.combinations(planes, 2):
        for y, z in itertools.product(contracted.minors(p), contracted.minors(q)):
            if not final.has_edge(y, z):
                joined.append(
                    f"minors of planes {p} and {q} not joined at "
                    f"{_describe(contracted, y)} / {_describe(contracted, z)}"
                )
                break

    pairs = [
        f"minor vertices {_describe(contracted, x)} and "
        f"{_describe(contracted, y)} are not adjacent"
        for x, y in itertools.combinations(range(final.n), 2)
        if not final.has_edge(x, y)
    ]
    held = f"contracted to K{final.n}"
    sub_verdicts = [
        _from_problems(ClaimId.C22, graph, decomposition, attached, held, "C2.2"),
        _from_problems(ClaimId.C24, graph, decomposition, joined, held, "C2.4"),
        _from_problems(ClaimId.C25, graph, decomposition, pairs, held, "C2.5"),
    ]
    verdict = _from_problems(ClaimId.C33, graph, decomposition, pairs, held)
    verdict.sub_verdicts = sub_verdicts
    return verdict


@_guarded(ClaimId.C21)
def check_C21(  # pylint: disable=invalid-name
    graph: Graph,
    decomposition: Decomposition,
    ceiling: int = HADWIGER_CEILING,  # pylint: disable=unused-argument
    budget: int = CHI_BUDGET,  # pylint: disable=unused-argument
) -> ClaimVerdict:
    """A vertex off a plane but adjacent to it sees at least the plane's colors."""
    assignment = decomposition.assignment
    problems = []
    for p in range(assignment.plane_count):
        chi_p = plane_chromatic_number(assignment, p)
        for v in range(graph.n):
            if assignment.plane_of[v] == p:
                continue
            seen = {
                assignment.color_of[u]
                for u in graph.adjacency[v]
                if assignment.plane_of[u] == p
            }
            if seen and len(seen) < chi_p:
                problems.append(
                    f"vertex {v} off plane {p} sees {len(seen)} of its {chi_p} colors"
                )
    return _from_problems(
        ClaimId.C21,
        graph,
        decomposition,
        problems,
        "every off-plane neighbour sees the full plane palette",
    )


@_guarded(ClaimId.C23)
def check_C23(  # pylint: disable=invalid-name
    graph: Graph,
    decomposition: Decomposition,
    ceiling: int = HADWIGER_CEILING,  # pylint: disable=unused-argument
    budget: int = CHI_BUDGET,  # pylint: disable=unused-argument
) -> ClaimVerdict:
    """Every placement took one of the available colors of its plane."""
    placements = sum(len(record.placements) for record in decomposition.trace)
    return _from_problems(
        ClaimId.C23,
        graph,
        decomposition,
        replay_trace(graph, decomposition),
        f"{placements} placement(s) replayed",
    )


def _cut_sides(
    nxgraph: nx.Graph, back: t.Dict[int, int], on_plane: t.Set[int]
) -> t.Iterator[t.Tuple[str, t.List[t.Set[int]]]]:
    """Placed cut vertices and cut edges of a working set with the sides they split."""
    for cut in sorted(nx.articulation_points(nxgraph)):
        if back[cut] not in on_plane:
            continue
        split = nxgraph.copy()
        split.remove_node(cut)
        sides = [{back[v] for v in side} for side in nx.connected_components(split)]
        yield f"cut vertex {back[cut]}", sides
    for x, y in sorted(tuple(sorted(edge)) for edge in nx.bridges(nxgraph)):
        if back[x] not in on_plane and back[y] not in on_plane:
            continue
        split = nxgraph.copy()
        split.remove_edge(x, y)
        sides = [{back[v] for v in side} for side in nx.connected_components(split)]
        yield f"cut edge ({back[x]}, {back[y]})", sides


@_guarded(ClaimId.C31)
def check_C31(  # pylint: disable=invalid-name
    graph: Graph,
    decomposition: Decomposition,
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,  # pylint: disable=unused-argument
) -> ClaimVerdict:
    """A placed cut whose residual sides out-minor the plane leaves a split residual."""
    assignment = decomposition.assignment
    problems = []
    events = 0
    for record in decomposition.trace:
        sub, id_map = induced_subgraph(graph, record.working_set)
        back = {new: old for old, new in id_map.items()}
        on_plane = set(assignment.vertices_on(record.plane))
        residual = set(record.working_set) - on_plane
        chi_p = plane_chromatic_number(assignment, record.plane)
        for cut, sides in _cut_sides(sub.to_networkx(), back, on_plane):
            large = [
                side & residual
                for side in sides
                if side & residual
                and _hadwiger_of(graph, side & residual, ceiling) > chi_p
            ]
            if len(large) < 2:
                continue
            events += 1
            if len(record.residual_components) < 2:
                problems.append(
                    f"plane {record.plane} placed {cut} but the residual stayed connected"
                )
    return _from_problems(
        ClaimId.C31,
        graph,
        decomposition,
        problems,
        f"{events} cut event(s), all split the residual",
    )


@_guarded(ClaimId.C32)
def check_C32(  # pylint: disable=invalid-name
    graph: Graph,
    decomposition: Decomposition,
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,  # pylint: disable=unused-argument
) -> ClaimVerdict:
    """Every residual split continued with a component of maximal Hadwiger number."""
    problems = []
    audited = 0
    for record in decomposition.trace:
        if len(record.residual_components) < 2:
            continue
        audited += 1
        scores = {}
        for part, recorded in record.residual_components:
            scores[part] = _hadwiger_of(graph, part, ceiling)
            if recorded != scores[part]:
                problems.append(
                    f"plane {record.plane}: component {list(part)} recorded "
                    f"h={recorded}, oracle says {scores[part]}"
                )
        best = max(scores.values())
        chosen = record.chosen_next
        if chosen is None or scores.get(chosen) != best:
            problems.append(
                f"plane {record.plane}: continued with h="
                f"{scores.get(chosen) if chosen else None} while the best is {best}"
            )
    return _from_problems(
        ClaimId.C32,
        graph,
        decomposition,
        problems,
        f"{audited} residual split(s) continued with a maximal minor",
    )


@_guarded(ClaimId.L3)
def check_L3(  # pylint: disable=invalid-name
    graph: Graph,
    decomposition: Decomposition,
    ceiling: int = HADWIGER_CEILING,  # pylint: disable=unused-argument
    budget: int = CHI_BUDGET,
) -> ClaimVerdict:
    """An 8-colorable graph is laid onto valid, connected planes."""
    chi = chromatic_number(graph, budget=budget)
    if chi > T8_COLORS:
        return ClaimVerdict.inconclusive(
            ClaimId.L3, f"chi={chi}, the claim covers graphs with chi <= {T8_COLORS}"
        )
    report = validate_decomposition(graph, decomposition)
    problems = [f"{check.name}: {check.detail}" for check in report.failures()]
    disconnected = [record.plane for record in decomposition.trace if not record.connected]
    if disconnected:
        problems.append(f"plane(s) {disconnected} not connected at completion")
    return _from_problems(
        ClaimId.L3,
        graph,
        decomposition,
        problems,
        f"{decomposition.plane_count} valid connected plane(s)",
    )


def _converse(graph: Graph, chi: int, h: t.Optional[int]) -> ClaimVerdict:
    label = "T8.d"
    if h != T8_CONVERSE_MINOR:
        return ClaimVerdict.inconclusive(
            ClaimId.T8, f"needs h={T8_CONVERSE_MINOR}, got h={h}", label=label
        )
    if chi <= T8_COLORS:
        return ClaimVerdict.holds(ClaimId.T8, f"h={h}, chi={chi}", label=label)
    return ClaimVerdict.violated(
        ClaimId.T8,
        ClaimWitness(graph=GraphData.of(graph), detail=f"h={h} but chi={chi}"),
        label=label,
    )


@_guarded(ClaimId.T8)
def check_T8(  # pylint: disable=invalid-name,too-many-locals
    graph: Graph,
    config: t.Optional[FillConfig] = None,
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,
    decomposition: t.Optional[Decomposition] = None,
) -> ClaimVerdict:
    """Every 8-chromatic graph fills two planes whose minors contract to K8."""
    config = config or FillConfig(ceiling=ceiling, budget=budget)
    chi = chromatic_number(graph, budget=budget)
    try:
        h: t.Optional[int] = hadwiger_number(graph, ceiling=ceiling)
    except OracleLimitExceeded:
        h = None
    converse = _converse(graph, chi, h)
    if chi != T8_COLORS:
        reason = f"precondition chi={T8_COLORS} not met (chi={chi})"
        subs = [
            ClaimVerdict.inconclusive(ClaimId.T8, reason, label=f"T8.{part}")
            for part in "abc"
        ]
        return ClaimVerdict.inconclusive(
            ClaimId.T8, reason, sub_verdicts=subs + [converse]
        )

    def _sub(
        part: str,
        ok: t.Optional[bool],
        detail: str,
        d: t.Optional[Decomposition],
    ) -> ClaimVerdict:
        label = f"T8.{part}"
        if ok is None:
            return ClaimVerdict.inconclusive(ClaimId.T8, detail, label=label)
        if ok:
            return ClaimVerdict.holds(ClaimId.T8, detail, label=label)
        return ClaimVerdict.violated(
            ClaimId.T8,
            ClaimWitness(
                graph=GraphData.of(graph), detail=detail, config=config, decomposition=d
            ),
            label=label,
        )

    minor = _sub(
        "a",
        None if h is None else h >= T8_COLORS,
        f"h={h}" if h is not None else "Hadwiger number beyond the oracle ceiling",
        None,
    )
    try:
        d = decomposition or chromatic_fill(graph, config)
    except _UNDECIDABLE as e:
        planes = _sub("b", None, str(e), None)
        final = _sub("c", None, str(e), None)
    else:
        planes = _sub(
            "b", d.plane_count == T8_PLANES, f"{d.plane_count} plane(s)", d
        )
        try:
            contracted = contract_decomposition(graph, d, ceiling=ceiling)
            final = _sub(
                "c",
                contracted.graph.is_complete() and contracted.graph.n == T8_COLORS,
                f"contracted to {contracted.graph.n} vertices, "
                f"complete={contracted.graph.is_complete()}",
                d,
            )
        except (PlaneError, OracleLimitExceeded) as e:
            final = _sub("c", None, str(e), d)

    subs = [minor, planes, final]
    status = conjunction(subs)
    detail = ", ".join(f"{v.label} {v.status.value}" for v in subs)
    if status is ClaimStatus.VIOLATED:
        culprit = next(v for v in subs if v.status is ClaimStatus.VIOLATED)
        return ClaimVerdict(
            claim=ClaimId.T8,
            status=status,
            detail=detail,
            witness=culprit.witness,
            sub_verdicts=subs + [converse],
        )
    return ClaimVerdict(
        claim=ClaimId.T8, status=status, detail=detail, sub_verdicts=subs + [converse]
    )


@dataclass(frozen=True)
class CorpusEntry:
    """Oracle values of one corpus graph, used by pairwise claims."""

    graph: GraphData
    hadwiger: t.Optional[int]
    chromatic: t.Optional[int]


def corpus_entry(
    graph: Graph,
    label: str = "",
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,
) -> CorpusEntry:
    """Oracle values of a graph, `None` where an oracle gave up."""
    try:
        h: t.Optional[int] = hadwiger_number(graph, ceiling=ceiling)
    except OracleLimitExceeded:
        h = None
    try:
        chi: t.Optional[int] = chromatic_number(graph, budget=budget)
    except BudgetExhausted:
        chi = None
    return CorpusEntry(graph=GraphData.of(graph, label), hadwiger=h, chromatic=chi)


def check_C26_entries(  # pylint: disable=invalid-name
    entries: t.Sequence[CorpusEntry],
) -> ClaimVerdict:
    """Pairs with the larger minor must have the larger chromatic number."""
    known = [e for e in entries if e.hadwiger is not None and e.chromatic is not None]
    undecided = len(entries) - len(known)
    compared = 0
    for first, second in itertools.permutations(known, 2):
        if t.cast(int, first.hadwiger) <= t.cast(int, second.hadwiger):
            continue
        compared += 1
        if t.cast(int, first.chromatic) > t.cast(int, second.chromatic):
            continue
        detail = (
            f"h {first.hadwiger} > {second.hadwiger} but "
            f"chi {first.chromatic} <= {second.chromatic}"
        )
        return ClaimVerdict.violated(
            ClaimId.C26,
            ClaimWitness(graph=first.graph, partner=second.graph, detail=detail),
            instances=len(known),
        )
    if undecided:
        return ClaimVerdict.inconclusive(
            ClaimId.C26,
            f"{undecided} of {len(entries)} instance(s) undecided by the oracles, "
            f"{compared} ordered pair(s) consistent",
            instances=len(entries),
        )
    if not compared:
        return ClaimVerdict.inconclusive(
            ClaimId.C26, "no pair with distinct Hadwiger numbers", instances=len(known)
        )
    return ClaimVerdict.holds(
        ClaimId.C26, f"{compared} ordered pair(s) consistent", instances=len(known)
    )


def check_C26(  # pylint: disable=invalid-name
    corpus: t.Sequence[Graph],
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,
) -> ClaimVerdict:
    """Pairwise minor/chromatic monotonicity over a corpus."""
    return check_C26_entries(
        [corpus_entry(g, ceiling=ceiling, budget=budget) for g in corpus]
    )


_DECOMPOSITION_CHECKS: t.Dict[ClaimId, CheckFunction] = {
    ClaimId.L1: check_L1,
    ClaimId.C21: check_C21,
    ClaimId.C23: check_C23,
    ClaimId.C31: check_C31,
    ClaimId.C32: check_C32,
    ClaimId.C33: check_completeness,
    ClaimId.L3: check_L3,
}


def resolve_claims(labels: t.Optional[t.Iterable[str]]) -> t.List[ClaimId]:
    """Map user labels to the checks that produce them, keeping report order."""
    if not labels:
        return list(DECOMPOSITION_CLAIMS + CORPUS_CLAIMS)
    chosen = set()
    for label in labels:
        try:
            claim = ClaimId.from_string(label)
        except ValueError as e:
            raise InvalidConfig(str(e)) from e
        chosen.add(SUB_LABEL_PARENT.get(claim, claim))
    return [c for c in DECOMPOSITION_CLAIMS + CORPUS_CLAIMS if c in chosen]


def run_decomposition_checks(
    graph: Graph,
    decomposition: Decomposition,
    claims: t.Sequence[ClaimId] = DECOMPOSITION_CLAIMS,
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,
) -> t.List[ClaimVerdict]:
    """Run the per-decomposition checks among `claims`."""
    verdicts = []
    for claim in DECOMPOSITION_CLAIMS:
        if claim not in claims:
            continue
        if claim is ClaimId.T8:
            verdicts.append(
                check_T8(
                    graph,
                    config=decomposition.config,
                    ceiling=ceiling,
                    budget=budget,
                    decomposition=decomposition,
                )
            )
        else:
            verdicts.append(
                _DECOMPOSITION_CHECKS[claim](
                    graph, decomposition, ceiling=ceiling, budget=budget
                )
            )
    return verdicts


def reverify(
    verdict: ClaimVerdict,
    ceiling: int = HADWIGER_CEILING,
    budget: int = CHI_BUDGET,
) -> ClaimVerdict:
    """Re-run the check behind a verdict on its witness alone."""
    witness = verdict.witness
    if witness is None:
        raise InvalidConfig(f"verdict {verdict.label} carries no witness")
    graph = witness.graph.to_graph()
    claim = SUB_LABEL_PARENT.get(verdict.claim, verdict.claim)
    if claim is ClaimId.FIG1:
        fresh = check_FIG1(ceiling=ceiling)
    elif claim is ClaimId.C26:
        if witness.partner is None:
            raise InvalidConfig("pairwise witness needs a partner graph")
        fresh = check_C26([graph, witness.partner.to_graph()], ceiling, budget)
    elif claim is ClaimId.T8:
        fresh = check_T8(graph, config=witness.config, ceiling=ceiling, budget=budget)
    else:
        decomposition = chromatic_fill(graph, witness.config)
        fresh = _DECOMPOSITION_CHECKS[claim](
            graph, decomposition, ceiling=ceiling, budget=budget
        )
    return fresh.find(verdict.label) or fresh
