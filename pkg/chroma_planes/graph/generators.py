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

"""Deterministic graph generators and the `name:params` generator grammar."""

import typing as t

from chroma_planes.constants import (
    FLOAT_SCALE,
    MASK64,
    SPLITMIX_GAMMA,
    SPLITMIX_MUL1,
    SPLITMIX_MUL2,
)
from chroma_planes.exceptions import InvalidConfig, InvalidGraph
from chroma_planes.graph.base import Graph, from_edge_list
from chroma_planes.types import Edge


class SplitMix64:
    """64-bit SplitMix generator; the documented source of all randomness."""

    def __init__(self, seed: int) -> None:
        """Initialize object."""
        if not 0 <= seed <= MASK64:
            raise InvalidConfig(f"seed {seed} is not an unsigned 64-bit value")
        self.state = seed

    def next_u64(self) -> int:
        """Next raw 64-bit output."""
        self.state = (self.state + SPLITMIX_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * SPLITMIX_MUL1) & MASK64
        z = ((z ^ (z >> 27)) * SPLITMIX_MUL2) & MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform float in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * FLOAT_SCALE

    def next_below(self, bound: int) -> int:
        """Integer in [0, bound) by multiply-shift."""
        if bound <= 0:
            raise InvalidConfig(f"bound must be positive, got {bound}")
        return (self.next_u64() * bound) >> 64


def derive_seed(master: int, index: int) -> int:
    """Per-instance seed: first output of SplitMix64 at `master + index * gamma`."""
    return SplitMix64((master + index * SPLITMIX_GAMMA) & MASK64).next_u64()


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 0:
        raise InvalidGraph(f"complete({n}): n must be non-negative")
    return from_edge_list(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 0:
        raise InvalidGraph(f"empty({n}): n must be non-negative")
    return from_edge_list(n, [])


def path(n: int) -> Graph:
    """Path on n vertices."""
    if n < 0:
        raise InvalidGraph(f"path({n}): n must be non-negative")
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Cycle C_n; n >= 3."""
    if n < 3:
        raise InvalidGraph(f"cycle({n}): a cycle needs at least 3 vertices")
    return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i~i+5."""
    edges: t.List[Edge] = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return from_edge_list(10, edges)


def _shifted(graph: Graph, offset: int) -> t.List[Edge]:
    return [(u + offset, v + offset) for u, v in graph.edges()]


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """Disjoint union; `second` is relabelled by +|first|."""
    return from_edge_list(
        first.n + second.n, first.edges() + _shifted(second, first.n)
    )


def join(first: Graph, second: Graph) -> Graph:
    """Join: disjoint union plus every edge between the two sides."""
    cross = [(u, first.n + v) for u in range(first.n) for v in range(second.n)]
    return from_edge_list(
        first.n + second.n, first.edges() + _shifted(second, first.n) + cross
    )


def mycielski(graph: Graph) -> Graph:
    """Mycielskian: shadow u_i = n + i adjacent to N(v_i), apex 2n adjacent to all u_i."""
    n = graph.n
    edges = graph.edges()
    for v in range(n):
        edges.extend((n + v, u) for u in graph.adjacency[v])
        edges.append((n + v, 2 * n))
    return from_edge_list(2 * n + 1, edges)


def subdivide_edge(graph: Graph, u: int, v: int) -> Graph:
    """Replace edge (u, v) by a path through a new vertex n."""
    if not graph.has_edge(u, v):
        raise InvalidGraph(f"({u}, {v}) is not an edge")
    edges = [edge for edge in graph.edges() if edge != (min(u, v), max(u, v))]
    edges.extend([(u, graph.n), (graph.n, v)])
    return from_edge_list(graph.n + 1, edges)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pairs u < v in lexicographic order, edge iff next float < p."""
    if n < 0:
        raise InvalidGraph(f"erdos_renyi: n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidConfig(f"erdos_renyi: p must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.next_float() < p
    ]
    return from_edge_list(n, edges)


def mycielski_iterate(k: int) -> Graph:
    """k Mycielski steps starting from K2 (k=1: C5, k=2: Groetzsch)."""
    if k < 0:
        raise InvalidGraph(f"mycielski:{k}: iterations must be non-negative")
    graph = complete(2)
    for _ in range(k):
        graph = mycielski(graph)
    return graph


def k4_subdivision() -> Graph:
    """K4 with edge (0, 1) subdivided once."""
    return subdivide_edge(complete(4), 0, 1)


def bowtie4() -> Graph:
    """Two K4s sharing the cut vertex 3."""
    first = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    second = [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
    return from_edge_list(7, first + second)


def _int_args(name: str, args: t.List[str], count: int) -> t.List[int]:
    if len(args) != count:
        raise InvalidConfig(f"generator `{name}` takes {count} argument(s)")
    try:
        return [int(arg) for arg in args]
    except ValueError as e:
        raise InvalidConfig(f"generator `{name}`: non-integer argument") from e


def _gnp(args: t.List[str]) -> Graph:
    if len(args) != 3:
        raise InvalidConfig("generator `gnp` takes n,p,seed")
    try:
        return erdos_renyi(int(args[0]), float(args[1]), int(args[2]))
    except ValueError as e:
        raise InvalidConfig(f"generator `gnp`: bad argument in {args}") from e


def _nullary(
    name: str, builder: t.Callable[[], Graph]
) -> t.Callable[[t.List[str]], Graph]:
    def _build(args: t.List[str]) -> Graph:
        _int_args(name, args, 0)
        return builder()

    return _build


_SIMPLE: t.Dict[str, t.Callable[[t.List[str]], Graph]] = {
    "complete": lambda a: complete(*_int_args("complete", a, 1)),
    "cycle": lambda a: cycle(*_int_args("cycle", a, 1)),
    "path": lambda a: path(*_int_args("path", a, 1)),
    "empty": lambda a: empty(*_int_args("empty", a, 1)),
    "mycielski": lambda a: mycielski_iterate(*_int_args("mycielski", a, 1)),
    "petersen": _nullary("petersen", petersen),
    "k4sub": _nullary("k4sub", k4_subdivision),
    "bowtie4": _nullary("bowtie4", bowtie4),
    "gnp": _gnp,
}
_BINARY: t.Dict[str, t.Callable[[Graph, Graph], Graph]] = {
    "join": join,
    "union": disjoint_union,
}
GENERATOR_NAMES = sorted(list(_SIMPLE) + list(_BINARY))

GENERATOR_HELP = (
    "Generator specs: complete:N, cycle:N, path:N, empty:N, petersen, "
    "mycielski:K (K steps from K2), gnp:N,P,SEED, k4sub, bowtie4, "
    "join:A,B and union:A,B (A, B are generator specs)."
)


def _split_parts(args: str) -> t.List[str]:
    """Split `A,B` where A and B may themselves carry comma arguments."""
    parts: t.List[str] = []
    for token in args.split(","):
        head = token.split(":", 1)[0].strip()
        if head in _SIMPLE or head in _BINARY or not parts:
            parts.append(token)
        else:
            parts[-1] = f"{parts[-1]},{token}"
    return parts


def from_spec(spec: str) -> Graph:
    """Build a graph from a generator spec such as `join:cycle:5,complete:5`."""
    name, _, args = spec.strip().partition(":")
    if name in _BINARY:
        parts = _split_parts(args)
        if len(parts) < 2:
            raise InvalidConfig(f"`{name}` needs at least two generator specs")
        graph = from_spec(parts[0])
        for part in parts[1:]:
            graph = _BINARY[name](graph, from_spec(part))
        return graph
    if name not in _SIMPLE:
        raise InvalidConfig(
            f"unknown generator `{name}`; valid: {', '.join(GENERATOR_NAMES)}"
        )
    return _SIMPLE[name]([arg for arg in args.split(",") if arg] if args else [])
