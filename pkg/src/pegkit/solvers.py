"""Exact pegging, peggling and pebbling invariants by exhaustive search.

Every solver ascends through distribution sizes.  Reach only grows when
pegs are added, so the "every distribution" and "some distribution"
predicates are monotone in the size and the first level that passes is the
answer.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .engine import BudgetExhausted, MultiDistribution, MultiSearch, PegSearch, WeightTable
from .graphs import (
    Graph,
    automorphisms,
    components,
    diameter,
    hoffman_singleton,
    hypercube,
    independence_number,
    is_connected,
    iter_bits,
)

INFINITY = math.inf

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


@dataclass
class InvariantResult:
    """Value of an invariant with a replayable witness.

    For "every distribution" invariants the witness is a distribution of
    size ``value - 1`` that fails; for "some distribution" invariants it is
    a distribution of size ``value`` that succeeds.
    """

    invariant: str
    value: int | float
    witness: list[int] | dict | None = None
    stats: dict = field(default_factory=dict)

    def to_json(self, graph: str | None = None) -> dict:
        return {
            "graph": graph,
            "invariant": self.invariant,
            "value": "infinity" if self.value == INFINITY else self.value,
            "witness": self.witness,
            "stats": self.stats,
        }


def subsets_colex(n: int, k: int) -> Iterator[int]:
    """k-subsets of ``range(n)`` as bitmasks in increasing (colex) order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    mask, limit = (1 << k) - 1, 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def multisets(n: int, total: int) -> Iterator[tuple[int, ...]]:
    for combo in combinations_with_replacement(range(n), total):
        counts = [0] * n
        for v in combo:
            counts[v] += 1
        yield tuple(counts)


# ---------------------------------------------------------------------------
# symmetry reduction


def _closure(n: int, gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ident = tuple(range(n))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = tuple(s[p[v]] for v in range(n))
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(group)


def _is_automorphism(g: Graph, perm: tuple[int, ...]) -> bool:
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())


def _hypercube_generators(dim: int) -> list[tuple[int, ...]]:
    size = 1 << dim
    gens = [tuple(x ^ 1 for x in range(size))]
    for b in range(dim - 1):
        def swap(x: int, b: int = b) -> int:
            lo, hi = x >> b & 1, x >> (b + 1) & 1
            return x & ~(3 << b) | hi << b | lo << (b + 1)
        gens.append(tuple(swap(x) for x in range(size)))
    return gens


def _hoffman_singleton_generators() -> list[tuple[int, ...]]:
    # rotate every pentagon and pentagram; shift pentagons while twisting pentagrams
    rot = [0] * 50
    shift = [0] * 50
    for i in range(5):
        for j in range(5):
            rot[5 * i + j] = 5 * i + (j + 1) % 5
            rot[25 + 5 * i + j] = 25 + 5 * i + (j + 1) % 5
            shift[5 * i + j] = 5 * ((i + 1) % 5) + j
            shift[25 + 5 * i + j] = 25 + 5 * i + (j + i) % 5
    return [tuple(rot), tuple(shift)]


def symmetry_group(g: Graph) -> list[tuple[int, ...]]:
    """Automorphisms used to quotient distributions.

    Complete for n <= 7; a registered subgroup for hypercubes and the
    Hoffman-Singleton graph; only the identity otherwise.  Any subgroup
    gives correct orbit representatives.
    """
    if g.n <= 7:
        return automorphisms(g)
    gens: list[tuple[int, ...]] = []
    dim = g.n.bit_length() - 1
    if 1 << dim == g.n and g == hypercube(dim):
        gens = _hypercube_generators(dim)
    elif g.n == 50 and g == hoffman_singleton():
        gens = _hoffman_singleton_generators()
    gens = [p for p in gens if _is_automorphism(g, p)]
    return _closure(g.n, gens) if gens else [tuple(range(g.n))]


def _orbit_filter(group: list[tuple[int, ...]]) -> Callable[[int], bool]:
    def is_rep(mask: int) -> bool:
        verts = list(iter_bits(mask))
        for p in group:
            if sum(1 << p[v] for v in verts) < mask:
                return False
        return True

    return is_rep


# ---------------------------------------------------------------------------
# pegging


def dominating_pair_exists(g: Graph) -> tuple[int, int] | None:
    """Adjacent ``u, v`` with ``N[u] | N[v]`` covering every vertex, or ``None``."""
    full = g.full_mask
    for u, v in g.edges():
        if (g.adj[u] | g.adj[v] | 1 << u | 1 << v) == full:
            return u, v
    return None


def _lower_bound_every(g: Graph) -> int:
    alpha, _ = independence_number(g)
    bound = alpha + (1 if g.edge_count else 0)
    if is_connected(g):
        bound = max(bound, diameter(g))
    return bound


class _Level:
    """Shared state for one solver call: memo, budget accounting, stats."""

    def __init__(self, g: Graph, budget: int | None, certificates: bool, symmetry: bool):
        self.g = g
        self.search = PegSearch(g, budget)
        self.weights = WeightTable(g) if certificates and is_connected(g) else None
        self.rep = _orbit_filter(symmetry_group(g)) if symmetry else None
        self.examined = 0
        self.certified = 0

    def distributions(self, size: int) -> Iterator[int]:
        for mask in subsets_colex(self.g.n, size):
            if self.rep is None or self.rep(mask):
                yield mask

    def passes(self, mask: int) -> bool:
        self.examined += 1
        if self.weights is not None and self.weights.certified_miss(mask) is not None:
            self.certified += 1
            return False
        return self.search.full_reach(mask)

    def first(self, size: int, want: bool) -> int | None:
        try:
            for mask in self.distributions(size):
                if self.passes(mask) == want:
                    return mask
        except BudgetExhausted as exc:
            raise BudgetExhausted(exc.states, size) from None
        return None

    def stats(self, **extra) -> dict:
        out = {
            "distributions_examined": self.examined,
            "certificates_used": self.certified,
            "states_explored": self.search.states,
        }
        out.update(extra)
        return out


def _component_graphs(g: Graph) -> list[tuple[list[int], Graph]]:
    out = []
    for comp in components(g):
        verts = list(iter_bits(comp))
        out.append((verts, g.induced(verts)))
    return out


def pegging_number(
    g: Graph,
    *,
    budget: int | None = None,
    certificates: bool = True,
    symmetry: bool = False,
    direct: bool = False,
) -> InvariantResult:
    """Smallest d such that every distribution of d pegs reaches every vertex.

    Disconnected graphs are solved per component and combined as
    ``|G| - min_C (|C| - P(C))`` unless ``direct`` asks for a whole-graph search.
    """
    if g.n < 1:
        raise ValueError("pegging number needs at least one vertex")
    if not direct and not is_connected(g):
        parts = [(verts, pegging_number(h, budget=budget, certificates=certificates, symmetry=symmetry))
                 for verts, h in _component_graphs(g)]
        slack, idx = min((len(v) - r.value, i) for i, (v, r) in enumerate(parts))
        verts, res = parts[idx]
        witness = sorted(
            [x for i, (vs, _) in enumerate(parts) if i != idx for x in vs]
            + [verts[x] for x in res.witness]
        )
        stats = {"components": [{"order": len(v), "value": r.value} for v, r in parts]}
        return InvariantResult("P", g.n - slack, witness, stats)

    lvl = _Level(g, budget, certificates, symmetry)
    lower = _lower_bound_every(g)
    failing: dict[int, int] = {}
    value = None
    for d in range(lower, g.n + 1):
        bad = lvl.first(d, want=False)
        if bad is None:
            value = d
            break
        failing[d] = bad
    assert value is not None, "the full distribution always reaches everything"
    if value - 1 not in failing:
        bad = lvl.first(value - 1, want=False) if value > 1 else 0
        if bad is None:
            raise AssertionError(f"lower bound {lower} not witnessed for {g!r}")
        failing[value - 1] = bad
    return InvariantResult("P", value, list(iter_bits(failing[value - 1])), lvl.stats(lower_bound=lower))


def optimal_pegging_number(
    g: Graph,
    *,
    budget: int | None = None,
    symmetry: bool = False,
    fast_path: bool = True,
) -> InvariantResult:
    """Smallest d such that some distribution of d pegs reaches every vertex."""
    if g.n < 1:
        raise ValueError("optimal pegging number needs at least one vertex")
    if not is_connected(g):
        parts = [(verts, optimal_pegging_number(h, budget=budget, symmetry=symmetry, fast_path=fast_path))
                 for verts, h in _component_graphs(g)]
        witness = sorted(verts[x] for verts, r in parts for x in r.witness)
        stats = {"components": [{"order": len(v), "value": r.value} for v, r in parts]}
        return InvariantResult("p", sum(r.value for _, r in parts), witness, stats)
    if g.n == 1:
        return InvariantResult("p", 1, [0], {})
    if fast_path:
        pair = dominating_pair_exists(g)
        if pair is not None:
            return InvariantResult("p", 2, sorted(pair), {"dominating_pair": True})
    lvl = _Level(g, budget, certificates=False, symmetry=symmetry)
    for d in range(2, g.n + 1):
        good = lvl.first(d, want=True)
        if good is not None:
            return InvariantResult("p", d, list(iter_bits(good)), lvl.stats())
    raise AssertionError("the full distribution always reaches everything")


# ---------------------------------------------------------------------------
# peggling


def _pebbling_cap(g: Graph, copies: int) -> int:
    return (1 << (diameter(g) + copies - 1)) * g.n


def _counts_json(counts: tuple[int, ...]) -> dict:
    return MultiDistribution(counts).to_dict()


def peggling_number(
    g: Graph, *, budget: int | None = None, max_total: int | None = None
) -> InvariantResult:
    """Smallest d such that every multi-distribution of d pegs reaches every vertex
    under stacking and pebbling moves.

    Disconnected graphs use the same component formula as the pegging number.
    """
    if g.n < 1:
        raise ValueError("peggling number needs at least one vertex")
    if not is_connected(g):
        parts = [(verts, peggling_number(h, budget=budget, max_total=max_total))
                 for verts, h in _component_graphs(g)]
        slack, idx = min((len(v) - r.value, i) for i, (v, r) in enumerate(parts))
        counts = [0] * g.n
        for i, (verts, r) in enumerate(parts):
            if i == idx:
                for key, c in r.witness["counts"].items():
                    counts[verts[int(key)]] = c
            else:
                for x in verts:
                    counts[x] = 1
        return InvariantResult("peggling", g.n - slack, _counts_json(tuple(counts)), {"extrapolated": True})
    search = MultiSearch(g, budget)
    cap = max_total if max_total is not None else _pebbling_cap(g, 1)
    lower = _lower_bound_every(g) if g.n > 1 else 1
    examined = 0

    def first_failure(d: int) -> tuple[int, ...] | None:
        nonlocal examined
        try:
            for counts in multisets(g.n, d):
                examined += 1
                if search.reach_mask(counts) != g.full_mask:
                    return counts
        except BudgetExhausted as exc:
            raise BudgetExhausted(exc.states, d) from None
        return None

    failing = {}
    for d in range(lower, cap + 1):
        bad = first_failure(d)
        if bad is None:
            if d - 1 not in failing:
                bad = first_failure(d - 1) if d > 1 else (0,) * g.n
                assert bad is not None, "peggling lower bound not witnessed"
                failing[d - 1] = bad
            stats = {"distributions_examined": examined, "states_explored": search.states}
            return InvariantResult("peggling", d, _counts_json(failing[d - 1]), stats)
        failing[d] = bad
    raise BudgetExhausted(search.states, cap)


def optimal_peggling_number(
    g: Graph, *, budget: int | None = None, max_total: int | None = None
) -> InvariantResult:
    if g.n < 1:
        raise ValueError("optimal peggling number needs at least one vertex")
    if not is_connected(g):
        parts = [(verts, optimal_peggling_number(h, budget=budget, max_total=max_total))
                 for verts, h in _component_graphs(g)]
        counts = [0] * g.n
        for verts, r in parts:
            for key, c in r.witness["counts"].items():
                counts[verts[int(key)]] = c
        value = sum(r.value for _, r in parts)
        return InvariantResult("opt_peggling", value, _counts_json(tuple(counts)), {"extrapolated": True})
    search = MultiSearch(g, budget)
    cap = max_total if max_total is not None else g.n
    examined = 0
    for d in range(1, cap + 1):
        try:
            for counts in multisets(g.n, d):
                examined += 1
                if search.reach_mask(counts) == g.full_mask:
                    stats = {"distributions_examined": examined, "states_explored": search.states}
                    return InvariantResult("opt_peggling", d, _counts_json(counts), stats)
        except BudgetExhausted as exc:
            raise BudgetExhausted(exc.states, d) from None
    raise BudgetExhausted(search.states, cap)


# ---------------------------------------------------------------------------
# pebbling


class PebbleSearch:
    """Memoised pebbling reachability for fixed target and pebble demand."""

    def __init__(self, g: Graph, budget: int | None = None):
        self.g = g
        self.budget = budget
        self.memo: dict[tuple[int, int], dict[tuple[int, ...], bool]] = {}
        self.states = 0

    def reachable(self, counts: tuple[int, ...], t: int, copies: int) -> bool:
        memo = self.memo.setdefault((t, copies), {})
        adj = self.g.adj

        def good(c: tuple[int, ...]) -> bool:
            if c[t] >= copies:
                return True
            hit = memo.get(c)
            if hit is not None:
                return hit
            result = False
            for v, k in enumerate(c):
                if k >= 2:
                    for w in iter_bits(adj[v]):
                        nxt = list(c)
                        nxt[v] -= 2
                        nxt[w] += 1
                        if good(tuple(nxt)):
                            result = True
                            break
                    if result:
                        break
            memo[c] = result
            self.states += 1
            if self.budget is not None and self.states > self.budget:
                raise BudgetExhausted(self.states)
            return result

        return good(tuple(counts))

    def reaches_all(self, counts: tuple[int, ...], copies: int) -> bool:
        return all(self.reachable(counts, t, copies) for t in range(self.g.n))


def pebbling_reachable(
    g: Graph, counts: MultiDistribution | tuple[int, ...], t: int, copies: int = 1
) -> bool:
    """Can pebbling moves put ``copies`` pebbles on ``t``?"""
    if copies not in (1, 2):
        raise ValueError("copies must be 1 or 2")
    if isinstance(counts, MultiDistribution):
        counts = counts.counts
    if len(counts) != g.n:
        raise ValueError("count vector length does not match graph order")
    return PebbleSearch(g).reachable(tuple(counts), t, copies)


def _every_pebbling(g: Graph, copies: int, name: str, budget: int | None) -> InvariantResult:
    if not is_connected(g):
        return InvariantResult(name, INFINITY, None, {"disconnected": True})
    search = PebbleSearch(g, budget)
    diam = diameter(g)
    lower = max(1 << (diam + copies - 1), g.n if copies == 1 else 2)
    cap = _pebbling_cap(g, copies)
    examined = 0

    def first_failure(p: int) -> tuple[int, ...] | None:
        nonlocal examined
        try:
            for counts in multisets(g.n, p):
                examined += 1
                if not search.reaches_all(counts, copies):
                    return counts
        except BudgetExhausted as exc:
            raise BudgetExhausted(exc.states, p) from None
        return None

    failing = {}
    for p in range(lower, cap + 1):
        bad = first_failure(p)
        if bad is None:
            if p - 1 not in failing:
                bad = first_failure(p - 1)
                assert bad is not None, "pebbling lower bound not witnessed"
                failing[p - 1] = bad
            stats = {"distributions_examined": examined, "states_explored": search.states}
            return InvariantResult(name, p, _counts_json(failing[p - 1]), stats)
        failing[p] = bad
    raise AssertionError("pebbling number exceeded its pigeonhole cap")


def pebbling_number(g: Graph, *, budget: int | None = None) -> InvariantResult:
    return _every_pebbling(g, 1, "pi", budget)


def two_pebbling_number(g: Graph, *, budget: int | None = None) -> InvariantResult:
    return _every_pebbling(g, 2, "pi2", budget)


def optimal_pebbling_number(g: Graph, *, budget: int | None = None) -> InvariantResult:
    if not is_connected(g):
        return InvariantResult("opt_pebbling", INFINITY, None, {"disconnected": True})
    search = PebbleSearch(g, budget)
    examined = 0
    for p in range(1, _pebbling_cap(g, 1) + 1):
        try:
            for counts in multisets(g.n, p):
                examined += 1
                if search.reaches_all(counts, 1):
                    stats = {"distributions_examined": examined, "states_explored": search.states}
                    return InvariantResult("opt_pebbling", p, _counts_json(counts), stats)
        except BudgetExhausted as exc:
            raise BudgetExhausted(exc.states, p) from None
    raise AssertionError("optimal pebbling number exceeded its cap")
