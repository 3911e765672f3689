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

"""DIMACS .col and plain edge-list readers and writers."""

import logging
import typing as t
from pathlib import Path

from chroma_planes.exceptions import InvalidGraph, ParseError
from chroma_planes.graph.base import Graph
from chroma_planes.types import Edge
from chroma_planes.utils import get_logger


DIMACS_SUFFIXES = (".col", ".dimacs")


def _ints(tokens: t.Sequence[str], lineno: int) -> t.List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        raise ParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from e


def _build(
    n: int,
    edges: t.List[t.Tuple[Edge, int]],
    logger: logging.Logger,
) -> Graph:
    for (u, v), lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) outside 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
    try:
        graph, duplicates = Graph.from_edges(n, (edge for edge, _ in edges))
    except InvalidGraph as e:
        raise ParseError(str(e)) from e
    if duplicates:
        logger.warning(f"Dropped {duplicates} duplicate edge(s)")
    return graph


def parse_dimacs(text: str, logger: t.Optional[logging.Logger] = None) -> Graph:
    """Parse DIMACS .col text (1-based ids) into a 0-based graph."""
    logger = logger or get_logger("chroma_planes.io")
    n: t.Optional[int] = None
    declared = 0
    edges: t.List[t.Tuple[Edge, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("second `p` line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError("expected `p edge <n> <m>`", lineno)
            n, declared = _ints(tokens[2:], lineno)
            if n < 0 or declared < 0:
                raise ParseError("negative size in `p` line", lineno)
            continue
        if tokens[0] == "e":
            if n is None:
                raise ParseError("`e` line before `p` line", lineno)
            if len(tokens) != 3:
                raise ParseError("expected `e <u> <v>`", lineno)
            u, v = _ints(tokens[1:], lineno)
            edges.append(((u - 1, v - 1), lineno))
            continue
        raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing `p edge <n> <m>` line")
    graph = _build(n, edges, logger)
    if graph.edge_count != declared:
        logger.warning(
            f"`p` line declares {declared} edges, read {graph.edge_count} distinct"
        )
    return graph


def serialize_dimacs(graph: Graph) -> str:
    """Write a graph as DIMACS .col text."""
    lines = [f"p edge {graph.n} {graph.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, logger: t.Optional[logging.Logger] = None) -> Graph:
    """Parse the plain format: vertex count, then one 0-based `u v` per line."""
    logger = logger or get_logger("chroma_planes.io")
    n: t.Optional[int] = None
    edges: t.List[t.Tuple[Edge, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 1:
                raise ParseError("first line must hold the vertex count", lineno)
            (n,) = _ints(tokens, lineno)
            if n < 0:
                raise ParseError("negative vertex count", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError("expected `<u> <v>`", lineno)
        u, v = _ints(tokens, lineno)
        edges.append(((u, v), lineno))
    if n is None:
        raise ParseError("missing vertex count line")
    return _build(n, edges, logger)


def serialize_edge_list(graph: Graph) -> str:
    """Write a graph in the plain edge-list format."""
    lines = [str(graph.n)]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: Path) -> Graph:
    """Read a graph file; DIMACS by suffix, plain edge list otherwise."""
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() in DIMACS_SUFFIXES:
        return parse_dimacs(text)
    return parse_edge_list(text)
