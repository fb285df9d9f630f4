"""Graph constructions and combinators.

Paths and cycles use vertex ``i`` for the 1-based label ``v_{i+1}``.
Hypercube vertices are indexed by their coordinate tuple read as a binary
number, first coordinate most significant.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .core import MAX_VERTICES, Graph, GraphError


def _check_order(n: int) -> None:
    if n > MAX_VERTICES:
        raise GraphError(f"graph order {n} exceeds capacity {MAX_VERTICES}")


def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError("order must be non-negative")
    _check_order(n)
    return Graph(n, (0,) * n, f"{n}K1")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    _check_order(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    _check_order(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    _check_order(n)
    return Graph.from_edges(n, combinations(range(n), 2), f"K{n}")


def star(k: int) -> Graph:
    """K_{1,k}: centre 0, leaves 1..k."""
    if k < 0:
        raise GraphError("star needs k >= 0")
    _check_order(k + 1)
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)], f"K1,{k}")


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("complete multipartite graph needs positive part sizes")
    n = sum(parts)
    _check_order(n)
    label = []
    for i, p in enumerate(parts):
        label += [i] * p
    edges = [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]]
    return Graph.from_edges(n, edges, "K" + ",".join(map(str, parts)))


def hypercube(n: int) -> Graph:
    if n < 0:
        raise GraphError("hypercube dimension must be non-negative")
    _check_order(1 << n)
    size = 1 << n
    edges = [(x, x ^ (1 << b)) for x in range(size) for b in range(n) if not x >> b & 1]
    return Graph.from_edges(size, edges, f"Q{n}")


def hoffman_singleton() -> Graph:
    """Robertson's pentagon/pentagram construction.

    Pentagon ``P_i`` vertex ``j`` is ``5*i + j``; pentagram ``Q_k`` vertex ``j``
    is ``25 + 5*k + j``.  ``P_i[j] ~ Q_k[i*k + j mod 5]``.
    """
    edges = []
    for i in range(5):
        for j in range(5):
            edges.append((5 * i + j, 5 * i + (j + 1) % 5))
            edges.append((25 + 5 * i + j, 25 + 5 * i + (j + 2) % 5))
            for k in range(5):
                edges.append((5 * i + j, 25 + 5 * k + (i * k + j) % 5))
    g = Graph.from_edges(50, edges, "HoffmanSingleton")

    from .metrics import diameter, girth

    if not (all(g.degree(v) == 7 for v in range(50)) and girth(g) == 5 and diameter(g) == 2):
        raise AssertionError("Hoffman-Singleton construction failed self-check")
    return g


def ld3_extremal(alpha: int) -> Graph:
    """Extremal graph for vertex-edge diameter 3 with independence number ``alpha``.

    Vertices ``v_ij`` (``2 <= i <= alpha``, ``j in {1,2}``, plus ``v_11``,
    ``v_alpha3``, ``v_alpha4``) and ``u_ij`` (``i != j``).  Vertices sharing a
    first coordinate form a clique; ``u_ij ~ u_ji``.  Vertex 0 is ``v_11``,
    followed by the remaining ``v_ij`` then the ``u_ij``, each in
    lexicographic order.  See :func:`ld3_labels`.
    """
    if alpha < 2:
        raise GraphError("ld3_extremal needs alpha >= 2")
    labels = ld3_labels(alpha)
    _check_order(len(labels))
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for a, b in combinations(labels, 2):
        same_row = a[1] == b[1]
        mirrored = a[0] == b[0] == "u" and (a[1], a[2]) == (b[2], b[1])
        if same_row or mirrored:
            edges.append((index[a], index[b]))
    return Graph.from_edges(len(labels), edges, f"LD3({alpha})")


def ld3_labels(alpha: int) -> list[tuple[str, int, int]]:
    vs = [("v", 1, 1)]
    vs += [("v", i, j) for i in range(2, alpha + 1) for j in (1, 2)]
    vs += [("v", alpha, 3), ("v", alpha, 4)]
    us = [("u", i, j) for i in range(1, alpha + 1) for j in range(1, alpha + 1) if i != j]
    return vs + us


def spider() -> Graph:
    """K_{1,3} with a pendant edge on each leaf: centre 0, middles 1-3, feet 4-6."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]
    return Graph.from_edges(7, edges, "spider")


# vertex order (t, u1, u2, v1, v2, v3)
_DPM1_A_EDGES = [(1, 0), (1, 2), (1, 3), (2, 0), (2, 4), (3, 4), (4, 5), (3, 5)]


def dpm1_a() -> Graph:
    """Six-vertex obstruction: triangle v1v2v3, u1 ~ {t, u2, v1}, u2 ~ {t, u1, v2}."""
    return Graph.from_edges(6, _DPM1_A_EDGES, "dpm1_a")


def dpm1_b() -> Graph:
    """``dpm1_a`` plus vertex 6 = u3 adjacent to t, v3, u1, u2."""
    edges = _DPM1_A_EDGES + [(6, 0), (6, 5), (6, 1), (6, 2)]
    return Graph.from_edges(7, edges, "dpm1_b")


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    _check_order(n)
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(n, edges, "+".join(g.name or "G" for g in graphs) if graphs else None)


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_order(n)
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(a, g.n + b) for a in range(g.n) for b in range(h.n)]
    return Graph.from_edges(n, edges, f"({g.name or 'G'})+({h.name or 'H'})")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, b)`` sits at index ``a * |h| + b``."""
    n = g.n * h.n
    _check_order(n)
    edges = []
    for a in range(g.n):
        for b, c in h.edges():
            edges.append((a * h.n + b, a * h.n + c))
    for a, c in g.edges():
        for b in range(h.n):
            edges.append((a * h.n + b, c * h.n + b))
    return Graph.from_edges(n, edges, f"({g.name or 'G'})x({h.name or 'H'})")


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "star": (star, 1),
    "complete_multipartite": (complete_multipartite, None),
    "hypercube": (hypercube, 1),
    "hoffman_singleton": (hoffman_singleton, 0),
    "ld3_extremal": (ld3_extremal, 1),
    "spider": (spider, 0),
    "dpm1_a": (dpm1_a, 0),
    "dpm1_b": (dpm1_b, 0),
}


def make_family(family: str, params: Sequence[int] = ()) -> Graph:
    """Build a named graph family, e.g. ``make_family("cycle", [7])``."""
    key = family.replace("-", "_")
    if key not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    builder, arity = FAMILIES[key]
    params = [int(p) for p in params]
    if arity is None:
        return builder(params)
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))

