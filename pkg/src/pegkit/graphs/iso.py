"""Brute-force canonical forms and enumeration of small graphs.

The canonical code of a graph on ``n <= 7`` vertices is the smallest edge
bitmask over all ``n!`` relabellings, where bit ``k`` stands for the
``k``-th pair ``(i, j)``, ``i < j``, in lexicographic order.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .core import Graph, GraphError, dumps_graph
from .metrics import contains_induced

MAX_CANON = 7
_BATCH = 512


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _perm_table(n: int):
    perms = np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)
    pairs = _pairs(n)
    rows = perms[:, [i for i, _ in pairs]]
    cols = perms[:, [j for _, j in pairs]]
    return perms, rows, cols


def graph_from_code(n: int, code: int, name: str | None = None) -> Graph:
    return Graph.from_edges(n, [p for k, p in enumerate(_pairs(n)) if code >> k & 1], name)


def graph_code(g: Graph) -> int:
    return sum(1 << k for k, (i, j) in enumerate(_pairs(g.n)) if g.has_edge(i, j))


def _canonical_batch(n: int, mats: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Canonical codes and argmin permutation indices for a stack of adjacency matrices."""
    perms, rows, cols = _perm_table(n)
    flat = mats.reshape(mats.shape[0], n * n)
    bits = flat[:, rows * n + cols]
    packed = np.packbits(bits, axis=-1, bitorder="little")
    pad = np.zeros(packed.shape[:-1] + (4 - packed.shape[-1],), dtype=np.uint8)
    codes = np.ascontiguousarray(np.concatenate([packed, pad], axis=-1)).view("<u4")[..., 0]
    best = codes.argmin(axis=1)
    return codes[np.arange(len(best)), best].astype(np.int64), best


def _matrix(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n), dtype=np.uint8)
    for u, v in g.edges():
        m[u, v] = m[v, u] = 1
    return m


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, perm)``; canonical vertex ``i`` is original vertex ``perm[i]``."""
    if g.n > MAX_CANON:
        raise GraphError(f"brute-force canonical form limited to n <= {MAX_CANON}")
    if g.n <= 1:
        return 0, tuple(range(g.n))
    codes, best = _canonical_batch(g.n, _matrix(g)[None])
    perms = _perm_table(g.n)[0]
    return int(codes[0]), tuple(int(x) for x in perms[best[0]])


def canonical_graph(g: Graph) -> Graph:
    code, _ = canonical_form(g)
    return graph_from_code(g.n, code, g.name)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.n <= MAX_CANON:
        return canonical_form(g)[0] == canonical_form(h)[0]
    # an induced embedding between equal orders is an isomorphism
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    return contains_induced(g, h) is not None


def graph_hash(g: Graph) -> str:
    """Stable hash of the isomorphism class (n <= 7) or of the labelled graph."""
    if g.n <= MAX_CANON:
        key = f"canon:{g.n}:{canonical_form(g)[0]}"
    else:
        key = "labelled:" + dumps_graph(g.with_name(None))
    return hashlib.sha256(key.encode()).hexdigest()[:32]


@lru_cache(maxsize=None)
def _class_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    found: set[int] = set()
    base_pairs = _pairs(n - 1)
    new_pairs = _pairs(n)
    slot = {p: k for k, p in enumerate(new_pairs)}
    candidates = []
    for code in _class_codes(n - 1):
        shifted = sum(1 << slot[p] for k, p in enumerate(base_pairs) if code >> k & 1)
        auts = automorphisms(graph_from_code(n - 1, code))
        for nbrs in range(1 << (n - 1)):
            # neighbourhoods in one automorphism orbit give isomorphic graphs
            images = (sum(1 << a[i] for i in range(n - 1) if nbrs >> i & 1) for a in auts)
            if min(images) != nbrs:
                continue
            extra = sum(1 << slot[(i, n - 1)] for i in range(n - 1) if nbrs >> i & 1)
            candidates.append(shifted | extra)
    pairs = np.array(new_pairs)
    for start in range(0, len(candidates), _BATCH):
        chunk = np.array(candidates[start : start + _BATCH], dtype=np.int64)
        bits = (chunk[:, None] >> np.arange(len(new_pairs))) & 1
        mats = np.zeros((len(chunk), n, n), dtype=np.uint8)
        mats[:, pairs[:, 0], pairs[:, 1]] = bits
        mats[:, pairs[:, 1], pairs[:, 0]] = bits
        codes, _ = _canonical_batch(n, mats)
        found.update(int(c) for c in codes)
    return tuple(sorted(found))


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices, or one canonical graph per class.

    Deduplicated classes are grown one vertex at a time from the classes on
    ``n - 1`` vertices and canonicalised by brute force.
    """
    if not 1 <= n <= MAX_CANON:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_CANON}")
    codes = _class_codes(n) if dedup else range(1 << len(_pairs(n)))
    return (graph_from_code(n, code) for code in codes)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms (n <= 7) as vertex maps ``v -> perm[v]``."""
    if g.n > MAX_CANON:
        raise GraphError(f"brute-force automorphisms limited to n <= {MAX_CANON}")
    if g.n <= 1:
        return [tuple(range(g.n))]
    perms, rows, cols = _perm_table(g.n)
    mat = _matrix(g)
    target = np.array([mat[i, j] for i, j in _pairs(g.n)], dtype=np.uint8)
    ok = (mat[rows, cols] == target).all(axis=1)
    return [tuple(int(x) for x in p) for p in perms[ok]]
