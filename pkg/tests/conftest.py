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

"""Shared fixtures."""

import os
import typing as t

import pytest

from chroma_planes.graph.base import Graph, delete_edge, from_edge_list
from chroma_planes.graph.generators import complete


FULL_SWEEP_ENV_VAR = "CHROMA_PLANES_FULL_SWEEP"


def sweep_count(full: int, reduced: int) -> int:
    """Instance count of an acceptance sweep."""
    return full if os.environ.get(FULL_SWEEP_ENV_VAR) == "1" else reduced


def two_sided_graph() -> Graph:
    """
    Seed K4 {0..3}, cut vertex 4, placed K4 {4..7}, and two K5 blocks.

    Block {8..12} hangs off the seed and block {13..17} off {4..7}, so the first
    plane absorbs the cut vertex and leaves both blocks behind as separate
    residual components.
    """
    edges: t.List[t.Tuple[int, int]] = []
    edges.extend((u, v) for u in range(4) for v in range(u + 1, 4))
    edges.append((3, 4))
    edges.extend((u, v) for u in range(4, 8) for v in range(u + 1, 8))
    for base, anchors in ((8, range(0, 4)), (13, range(4, 8))):
        block = range(base, base + 5)
        edges.extend((u, v) for u in block for v in block if u < v)
        edges.extend((a, v) for a in anchors for v in block)
    return from_edge_list(18, edges)


@pytest.fixture
def k5() -> Graph:
    """K5."""
    return complete(5)


@pytest.fixture
def k8() -> Graph:
    """K8."""
    return complete(8)


@pytest.fixture
def k6_minus_edge() -> Graph:
    """K6 without the edge (4, 5): two single-vertex planes that never meet."""
    return delete_edge(complete(6), 4, 5)


@pytest.fixture
def split_graph() -> Graph:
    """Graph whose first plane splits the residual at a cut vertex."""
    return two_sided_graph()


@pytest.fixture
def k5_with_tail() -> Graph:
    """K5 on {0, 1, 2, 3, 5} with vertex 4 hanging off vertex 5."""
    clique = (0, 1, 2, 3, 5)
    edges = [(u, v) for i, u in enumerate(clique) for v in clique[i + 1 :]]
    return from_edge_list(6, edges + [(4, 5)])
