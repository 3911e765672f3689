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

"""Brute-force reference oracles for cross-checking the exact searches on tiny graphs."""

import itertools
import typing as t

from chroma_planes.graph.base import Graph, is_connected_set


def naive_chromatic_number(graph: Graph) -> int:
    """Least k such that some of the k^n assignments is proper."""
    edges = graph.edges()
    for k in range(graph.n + 1):
        for colors in itertools.product(range(k), repeat=graph.n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return graph.n


def set_partitions(n: int) -> t.Iterator[t.List[t.List[int]]]:
    """All partitions of 0..n-1 as restricted growth strings."""

    def _grow(v: int, blocks: t.List[t.List[int]]) -> t.Iterator[t.List[t.List[int]]]:
        if v == n:
            yield [list(block) for block in blocks]
            return
        for block in blocks:
            block.append(v)
            yield from _grow(v + 1, blocks)
            block.pop()
        blocks.append([v])
        yield from _grow(v + 1, blocks)
        blocks.pop()

    yield from _grow(0, [])


def naive_hadwiger_number(graph: Graph) -> int:
    """Max over all vertex partitions of the largest clique among connected blocks."""
    best = 0
    for blocks in set_partitions(graph.n):
        usable = [block for block in blocks if is_connected_set(graph, block)]
        neighborhoods = [
            {u for v in block for u in graph.adjacency[v]} for block in usable
        ]
        for size in range(len(usable), best, -1):
            if any(
                all(
                    set(usable[j]) & neighborhoods[i]
                    for i, j in itertools.combinations(chosen, 2)
                )
                for chosen in itertools.combinations(range(len(usable)), size)
            ):
                best = size
                break
    return best
