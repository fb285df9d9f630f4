"""Distances, diameters, independence number and small subgraph searches."""

from __future__ import annotations

import math

from .core import Graph, GraphError, iter_bits

INF = math.inf


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    """Hop distances; ``math.inf`` between vertices in different components."""
    return [bfs_distances(g, s) for s in range(g.n)]


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex."""
    left = g.full_mask
    comps = []
    while left:
        start = left & -left
        comp = frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise GraphError("diameter is undefined for a disconnected graph")
    return int(max(max(row) for row in distance_matrix(g)))


def vertex_edge_diameter(g: Graph) -> int:
    """Largest distance between a vertex and an edge.

    The distance from ``t`` to edge ``uv`` is ``min(d(t,u), d(t,v))``.
    """
    if not is_connected(g):
        raise GraphError("vertex-edge diameter is undefined for a disconnected graph")
    edges = g.edges()
    if not edges:
        raise GraphError("vertex-edge diameter needs at least one edge")
    dist = distance_matrix(g)
    return int(max(min(row[u], row[v]) for row in dist for u, v in edges))


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = INF
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            for y in iter_bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set by branch and bound with subproblem memo.

    Returns ``(alpha, witness)`` with the witness sorted.
    """
    closed = [row | 1 << v for v, row in enumerate(g.adj)]
    memo: dict[int, tuple[int, int]] = {}

    def solve(cand: int) -> tuple[int, int]:
        if not cand:
            return 0, 0
        hit = memo.get(cand)
        if hit is not None:
            return hit
        low_v, low_d, high_v, high_d = -1, 99, -1, -1
        for v in iter_bits(cand):
            d = (g.adj[v] & cand).bit_count()
            if d < low_d:
                low_v, low_d = v, d
            if d > high_d:
                high_v, high_d = v, d
        if low_d <= 1:
            # a vertex of degree <= 1 always belongs to some maximum set
            size, chosen = solve(cand & ~closed[low_v])
            result = (size + 1, chosen | 1 << low_v)
        else:
            size_in, chosen_in = solve(cand & ~closed[high_v])
            size_out, chosen_out = solve(cand & ~(1 << high_v))
            if size_in + 1 >= size_out:
                result = (size_in + 1, chosen_in | 1 << high_v)
            else:
                result = (size_out, chosen_out)
        memo[cand] = result
        return result

    size, chosen = solve(g.full_mask)
    return size, tuple(iter_bits(chosen))


def find_p4(g: Graph) -> tuple[int, int, int, int] | None:
    """A (not necessarily induced) path a-b-c-d, or ``None``."""
    for b, c in g.edges():
        for x, y in ((b, c), (c, b)):
            for a in iter_bits(g.adj[x] & ~(1 << y)):
                rest = g.adj[y] & ~(1 << x) & ~(1 << a)
                if rest:
                    d = (rest & -rest).bit_length() - 1
                    return a, x, y, d
    return None


def contains_induced(g: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Injective map ``pattern -> g`` preserving adjacency and non-adjacency.

    Returns the embedding (``emb[i]`` is the image of pattern vertex ``i``)
    or ``None``.
    """
    k = pattern.n
    if k > g.n:
        return None
    emb = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = g.full_mask & ~used
        for j in range(i):
            if pattern.has_edge(i, j):
                cand &= g.adj[emb[j]]
            else:
                cand &= ~g.adj[emb[j]]
        for x in iter_bits(cand):
            emb[i] = x
            if extend(i + 1, used | 1 << x):
                return True
        return False

    return tuple(emb) if extend(0, 0) else None
