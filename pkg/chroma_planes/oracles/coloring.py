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

"""Exact k-colorability and chromatic number."""

import functools
import typing as t
from dataclasses import dataclass

from chroma_planes.constants import CHI_BUDGET
from chroma_planes.exceptions import BudgetExhausted
from chroma_planes.graph.base import Graph, clique_number
from chroma_planes.resource import LocalResource
from chroma_planes.utils import get_logger


@dataclass(frozen=True)
class Coloring(LocalResource):
    """Proper coloring: `colors[v]` is the color of vertex v, all below `k`."""

    k: int
    colors: t.Tuple[int, ...]

    @property
    def used(self) -> int:
        """Number of distinct colors actually used."""
        return len(set(self.colors))


def canonicalize(colors: t.Sequence[int]) -> t.Tuple[int, ...]:
    """Rename colors in order of first occurrence by vertex id."""
    rename: t.Dict[int, int] = {}
    return tuple(rename.setdefault(c, len(rename)) for c in colors)


def verify_coloring(graph: Graph, coloring: Coloring, k: int) -> bool:
    """Whether `coloring` is total, uses colors below `k` and is proper."""
    colors = coloring.colors
    if len(colors) != graph.n:
        return False
    if any(not 0 <= c < k for c in colors):
        return False
    return all(colors[u] != colors[v] for u, v in graph.edges())


def greedy_dsatur(graph: Graph) -> Coloring:
    """DSATUR greedy coloring; an upper bound for the exact search."""
    n = graph.n
    colors = [-1] * n
    saturation = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (bin(saturation[u]).count("1"), graph.degree(u), -u),
        )
        c = 0
        while saturation[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in graph.adjacency[v]:
            saturation[u] |= 1 << c
    canonical = canonicalize(colors)
    return Coloring(k=len(set(canonical)), colors=canonical)


class _Search:
    """DSATUR backtracking with color-symmetry breaking."""

    def __init__(self, graph: Graph, k: int, budget: t.Optional[int]) -> None:
        """Initialize object."""
        self.graph = graph
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.colors = [-1] * graph.n
        self.forbidden = [0] * graph.n

    def _pick(self) -> int:
        best, best_key = -1, (-1, -1)
        for u in range(self.graph.n):
            if self.colors[u] >= 0:
                continue
            key = (bin(self.forbidden[u]).count("1"), self.graph.degree(u))
            if key > best_key:
                best, best_key = u, key
        return best

    def run(self, colored: int, used: int) -> bool:
        """Extend the partial coloring; True once every vertex is colored."""
        if colored == self.graph.n:
            return True
        v = self._pick()
        # a new color may only be the next unused index
        for c in range(min(self.k, used + 1)):
            if self.forbidden[v] >> c & 1:
                continue
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise BudgetExhausted(budget=self.budget)
            self.colors[v] = c
            touched = []
            for u in self.graph.adjacency[v]:
                if self.colors[u] < 0 and not self.forbidden[u] >> c & 1:
                    self.forbidden[u] |= 1 << c
                    touched.append(u)
            if self.run(colored + 1, max(used, c + 1)):
                return True
            for u in touched:
                self.forbidden[u] &= ~(1 << c)
            self.colors[v] = -1
        return False


def is_k_colorable(
    graph: Graph, k: int, budget: t.Optional[int] = CHI_BUDGET
) -> t.Optional[Coloring]:
    """A proper k-coloring if one exists, else None; raises BudgetExhausted."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if graph.n == 0:
        return Coloring(k=k, colors=())
    if k == 0:
        return None
    search = _Search(graph=graph, k=k, budget=budget)
    if not search.run(colored=0, used=0):
        return None
    return Coloring(k=k, colors=canonicalize(search.colors))


@functools.lru_cache(maxsize=4096)
def optimal_coloring(graph: Graph, budget: t.Optional[int] = CHI_BUDGET) -> Coloring:
    """A proper coloring with the fewest colors."""
    if graph.n == 0:
        return Coloring(k=0, colors=())
    lower = clique_number(graph)
    greedy = greedy_dsatur(graph)
    if lower == greedy.k:
        return greedy
    for k in range(lower, greedy.k):
        try:
            coloring = is_k_colorable(graph, k, budget=budget)
        except BudgetExhausted as e:
            get_logger("chroma_planes.coloring").warning(
                f"Coloring budget exhausted on {graph.n} vertices at k={k}"
            )
            raise BudgetExhausted(budget=e.budget, lower=k, upper=greedy.k) from e
        if coloring is not None:
            return coloring
    return greedy


def chromatic_number(graph: Graph, budget: t.Optional[int] = CHI_BUDGET) -> int:
    """Least k admitting a proper k-coloring; 0 for the empty graph."""
    return optimal_coloring(graph, budget).k
