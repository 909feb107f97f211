"""Cayley graphs over Z_2^n and small induced graphs."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .gf2 import MAX_DIM, DimensionError, parse_bitstring, rank, suffix_ones, to_bitstring, unit

SMALL_GRAPH_CAP = 64


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_DIM:
            raise DimensionError(f"dimension {self.n} outside 1..{MAX_DIM}")
        object.__setattr__(self, "members", frozenset(self.members))
        if 0 in self.members:
            raise ValueError("generator set may not contain the zero vector")
        for s in self.members:
            if not 0 < s < (1 << self.n):
                raise DimensionError(f"generator {s} does not fit in {self.n} bits")

    @classmethod
    def parse(cls, text: str | Sequence[str], n: int | None = None) -> GeneratorSet:
        parts = text.split(",") if isinstance(text, str) else list(text)
        parts = [p.strip() for p in parts if p.strip()]
        if not parts:
            raise ValueError("empty generator list")
        if n is None:
            n = len(parts[0])
        values = [parse_bitstring(p, n) for p in parts]
        if len(set(values)) != len(values):
            raise ValueError("duplicate generators")
        return cls(n, frozenset(values))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def strings(self) -> list[str]:
        return [to_bitstring(s, self.n) for s in sorted(self.members, reverse=True)]


def augmented_generators(n: int) -> GeneratorSet:
    """e_1..e_n together with the vectors having k trailing ones, 2 <= k <= n."""
    if n < 2:
        raise ValueError("the augmented cube needs n >= 2")
    gens = {unit(n, i) for i in range(1, n + 1)}
    gens |= {suffix_ones(n, k) for k in range(2, n + 1)}
    return GeneratorSet(n, frozenset(gens))


def hypercube_generators(n: int) -> GeneratorSet:
    return GeneratorSet(n, frozenset(unit(n, i) for i in range(1, n + 1)))


def folded_generators(n: int) -> GeneratorSet:
    if n < 2:
        raise ValueError("the folded hypercube needs n >= 2")
    return GeneratorSet(n, frozenset(unit(n, i) for i in range(1, n + 1)) | {(1 << n) - 1})


@dataclass(frozen=True)
class CayleyGraph:
    """Cay(Z_2^n, S); u ~ v iff u + v lies in S. Adjacency is never materialized."""

    n: int
    S: GeneratorSet
    name: str = ""

    def __post_init__(self) -> None:
        if self.S.n != self.n:
            raise DimensionError("generator set dimension differs from graph dimension")

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def degree(self) -> int:
        return len(self.S)

    @property
    def num_edges(self) -> int:
        return self.order * self.degree // 2

    @cached_property
    def gens(self) -> tuple[int, ...]:
        return tuple(sorted(self.S.members))

    def vertices(self) -> range:
        return range(self.order)

    def adjacent(self, u: int, v: int) -> bool:
        return (u ^ v) in self.S.members

    def neighbors(self, v: int) -> list[int]:
        return [v ^ s for s in self.gens]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for s in self.gens:
                v = u ^ s
                if u < v:
                    yield u, v

    def is_connected(self) -> bool:
        return rank(self.S.members) == self.n

    def label(self, v: int) -> str:
        return to_bitstring(v, self.n)

    def describe(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "S": self.S.strings(),
            "vertices": self.order,
            "edges": self.num_edges,
            "degree": self.degree,
            "connected": self.is_connected(),
        }

    def to_json(self) -> str:
        return json.dumps(self.describe(), sort_keys=True)

    def to_dot(self) -> str:
        lines = [f'graph "{self.name or "cayley"}" {{']
        for v in self.vertices():
            lines.append(f'  "{self.label(v)}";')
        for u, v in self.edges():
            lines.append(f'  "{self.label(u)}" -- "{self.label(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_cayley(n: int, S: GeneratorSet, name: str = "") -> CayleyGraph:
    return CayleyGraph(n, S, name)


def augmented_cube(n: int) -> CayleyGraph:
    return CayleyGraph(n, augmented_generators(n), f"AQ_{n}")


def hypercube(n: int) -> CayleyGraph:
    return CayleyGraph(n, hypercube_generators(n), f"Q_{n}")


def folded_hypercube(n: int) -> CayleyGraph:
    return CayleyGraph(n, folded_generators(n), f"FQ_{n}")


def complement(g: CayleyGraph) -> CayleyGraph:
    others = frozenset(range(1, g.order)) - g.S.members
    name = f"co-{g.name}" if g.name else ""
    if g.name.startswith("co-"):
        name = g.name[3:]
    return CayleyGraph(g.n, GeneratorSet(g.n, others), name)


def distance_partition(g: CayleyGraph, v: int = 0) -> list[list[int]]:
    """BFS layers from v, each sorted ascending; unreachable vertices are omitted."""
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    layers: list[list[int]] = [[] for _ in range(max(dist.values()) + 1)]
    for u, d in dist.items():
        layers[d].append(u)
    return [sorted(layer) for layer in layers]


@dataclass(frozen=True)
class SmallGraph:
    """Simple undirected graph on at most 64 labelled vertices.

    Vertices are indexed by position in ``labels``; ``adj[i]`` is the
    neighbor bitmask of vertex i.
    """

    labels: tuple
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) > SMALL_GRAPH_CAP:
            raise ValueError(f"small graphs are capped at {SMALL_GRAPH_CAP} vertices")
        if len(self.adj) != len(self.labels):
            raise ValueError("adjacency length differs from vertex count")
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise ValueError("self-loop")
            for j in range(len(self.adj)):
                if (row >> j & 1) != (self.adj[j] >> i & 1):
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, labels: Sequence, edges: Iterable[tuple]) -> SmallGraph:
        index = {lab: i for i, lab in enumerate(labels)}
        adj = [0] * len(labels)
        for a, b in edges:
            i, j = index[a], index[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(tuple(labels), tuple(adj))

    def __len__(self) -> int:
        return len(self.labels)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return bin(self.adj[i]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self)) for j in range(i + 1, len(self)) if self.adjacent(i, j)]

    def edge_labels(self) -> set[frozenset]:
        return {frozenset((self.labels[i], self.labels[j])) for i, j in self.edges()}

    def to_dot(self, name: str = "G") -> str:
        lines = [f'graph "{name}" {{']
        for lab in self.labels:
            lines.append(f'  "{lab}";')
        for i, j in self.edges():
            lines.append(f'  "{self.labels[i]}" -- "{self.labels[j]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def induced_subgraph(g: CayleyGraph, W: Iterable[int]) -> SmallGraph:
    verts = sorted(set(W))
    if len(verts) > SMALL_GRAPH_CAP:
        raise ValueError(f"induced subgraph on {len(verts)} vertices exceeds cap {SMALL_GRAPH_CAP}")
    for v in verts:
        if not 0 <= v < g.order:
            raise ValueError(f"{v} is not a vertex")
    labels = tuple(g.label(v) for v in verts)
    edges = [(labels[i], labels[j]) for i in range(len(verts)) for j in range(i + 1, len(verts))
             if g.adjacent(verts[i], verts[j])]
    return SmallGraph.from_edges(labels, edges)
