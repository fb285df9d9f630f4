"""Bitset graph type and its JSON wire format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graphs, bad parameters or capacity overflow."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def to_mask(vertices: int | Iterable[int]) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Instances are
    immutable and validated on construction.
    """

    n: int
    adj: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"graph order {self.n} exceeds capacity {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {u} has neighbours outside the graph")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], name: str | None = None
    ) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"graph order {n} exceeds capacity {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), name)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_to_list(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def with_name(self, name: str | None) -> Graph:
        return Graph(self.n, self.adj, name)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled ``0..k-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in iter_bits(self.adj[u])
            if v in index and index[u] < index[v]
        ]
        return Graph.from_edges(len(vertices), edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with old vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()], self.name)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count}>"


def graph_to_dict(g: Graph) -> dict:
    out: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.name is not None:
        out["name"] = g.name
    return out


def graph_from_dict(data: dict) -> Graph:
    """Parse the normal-form JSON object; anything not in normal form is rejected."""
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    unknown = set(data) - {"name", "n", "edges"}
    if unknown:
        raise GraphError(f"unknown graph fields: {sorted(unknown)}")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphError("'n' must be a non-negative integer")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise GraphError("'name' must be a string")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphError("'edges' must be a list")
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphError(f"malformed edge {e!r}")
        u, v = e
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u > v:
            raise GraphError(f"edge {e} not written with u < v")
        if not (0 <= u and v < n):
            raise GraphError(f"edge {e} out of range for n={n}")
        pairs.append((u, v))
    if pairs != sorted(pairs):
        raise GraphError("edges are not sorted lexicographically")
    if len(set(pairs)) != len(pairs):
        raise GraphError("duplicate edge")
    return Graph.from_edges(n, pairs, name)


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True, separators=(",", ":"))


def loads_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(data)
