"""Pegging moves, exact reach computation and weight certificates.

Proper distributions are vertex bitmasks.  Multi-distributions carry a peg
count per vertex; peg identities are dropped because the set of legal moves
from a configuration depends only on the counts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Union

from .graphs import Graph, GraphError, bfs_distances, bits_to_list, is_connected, iter_bits, to_mask
from .surd import ONE, SIGMA, ZERO, Surd

PEG, STACK, PEBBLE, REMOVE = "peg", "stack", "pebble", "remove"


class BudgetExhausted(RuntimeError):
    """The state budget ran out before the search finished."""

    def __init__(self, states: int, level: int | None = None):
        self.states = states
        self.level = level
        where = f" at level {level}" if level is not None else ""
        super().__init__(f"search budget exhausted after {states} states{where}")


class InvalidMove(ValueError):
    pass


@dataclass(frozen=True)
class Move:
    """``kind`` peg/stack: ``u`` jumps over ``v`` onto ``w``.

    pebble: two pegs leave ``u`` (``v == u``) and one lands on ``w``.
    remove: one peg leaves ``u``; ``v`` and ``w`` are ``None``.
    """

    kind: str
    u: int
    v: int | None = None
    w: int | None = None

    def key(self) -> tuple:
        return (self.u, -1 if self.v is None else self.v, -1 if self.w is None else self.w)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "u": self.u}
        if self.v is not None:
            out["v"] = self.v
        if self.w is not None:
            out["w"] = self.w
        return out


@dataclass(frozen=True)
class MultiDistribution:
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("peg counts must be non-negative")

    @classmethod
    def from_mask(cls, n: int, mask: int) -> MultiDistribution:
        return cls(tuple(mask >> v & 1 for v in range(n)))

    @classmethod
    def from_dict(cls, n: int, data: dict) -> MultiDistribution:
        """Parse ``{"counts": {"3": 2, "5": 1}}``; omitted vertices hold 0 pegs."""
        raw = data.get("counts", data)
        counts = [0] * n
        for key, value in raw.items():
            v = int(key)
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            counts[v] = int(value)
        return cls(tuple(counts))

    def to_dict(self) -> dict:
        return {"counts": {str(v): c for v, c in enumerate(self.counts) if c}}

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def support(self) -> int:
        return sum(1 << v for v, c in enumerate(self.counts) if c)

    def is_proper(self) -> bool:
        return all(c <= 1 for c in self.counts)


State = Union[int, MultiDistribution, Iterable[int]]


def _check_distribution(g: Graph, mask: int) -> None:
    if mask < 0 or mask & ~g.full_mask:
        raise ValueError("distribution contains vertices outside the graph")


def legal_moves(g: Graph, d: int | Iterable[int]) -> list[Move]:
    """All valid pegging moves on a proper distribution, sorted by ``(u, v, w)``."""
    state = to_mask(d)
    _check_distribution(g, state)
    moves = []
    for v in iter_bits(state):
        for u in iter_bits(g.adj[v] & state):
            for w in iter_bits(g.adj[v] & ~state):
                moves.append(Move(PEG, u, v, w))
    return sorted(moves, key=Move.key)


def legal_multi_moves(g: Graph, d: MultiDistribution, removals: bool = False) -> list[Move]:
    """Stacking and pebbling moves (plus removals if asked) on a multi-distribution."""
    c = d.counts
    moves = []
    for v in range(g.n):
        if c[v]:
            for u in iter_bits(g.adj[v]):
                if c[u]:
                    for w in iter_bits(g.adj[v] & ~(1 << u)):
                        moves.append(Move(STACK, u, v, w))
        if c[v] >= 2:
            for w in iter_bits(g.adj[v]):
                moves.append(Move(PEBBLE, v, v, w))
        if removals and c[v]:
            moves.append(Move(REMOVE, v))
    return sorted(moves, key=lambda m: (m.key(), m.kind))


def _apply_counts(g: Graph, c: list[int], m: Move) -> None:
    if m.kind == REMOVE:
        if c[m.u] < 1:
            raise InvalidMove(f"no peg to remove at {m.u}")
        c[m.u] -= 1
        return
    if m.kind == PEBBLE:
        if m.v != m.u or c[m.u] < 2 or not g.has_edge(m.u, m.w):
            raise InvalidMove(f"invalid pebbling move {m}")
        c[m.u] -= 2
        c[m.w] += 1
        return
    if m.kind in (PEG, STACK):
        u, v, w = m.u, m.v, m.w
        if len({u, v, w}) != 3 or not (g.has_edge(u, v) and g.has_edge(v, w)):
            raise InvalidMove(f"invalid move geometry {m}")
        if c[u] < 1 or c[v] < 1:
            raise InvalidMove(f"source of {m} not occupied")
        if m.kind == PEG and c[w]:
            raise InvalidMove(f"destination of {m} is occupied")
        c[u] -= 1
        c[v] -= 1
        c[w] += 1
        return
    raise InvalidMove(f"unknown move kind {m.kind!r}")


def apply_move(g: Graph, state: State, m: Move):
    """Apply ``m``; the result has the same representation as ``state``.

    Ints are bitmasks, :class:`MultiDistribution` stays one, and other
    iterables come back as a ``frozenset``.
    """
    if isinstance(state, MultiDistribution):
        c = list(state.counts)
        _apply_counts(g, c, m)
        return MultiDistribution(tuple(c))
    mask = to_mask(state)
    _check_distribution(g, mask)
    if m.kind != PEG:
        if m.kind == REMOVE:
            if not mask >> m.u & 1:
                raise InvalidMove(f"no peg to remove at {m.u}")
            out = mask & ~(1 << m.u)
        else:
            raise InvalidMove(f"{m.kind} moves need a MultiDistribution")
    else:
        c = [mask >> v & 1 for v in range(g.n)]
        _apply_counts(g, c, m)
        out = to_mask(v for v in range(g.n) if c[v])
    return out if isinstance(state, int) else frozenset(iter_bits(out))


@dataclass
class ReachReport:
    reachable_mask: int
    states_explored: int
    witnesses: dict[int, list[Move]] | None = None

    @property
    def reachable(self) -> frozenset[int]:
        return frozenset(iter_bits(self.reachable_mask))

    @property
    def vertices(self) -> list[int]:
        return bits_to_list(self.reachable_mask)

    def to_json(self) -> dict:
        out: dict = {"reachable": self.vertices, "states_explored": self.states_explored}
        if self.witnesses is not None:
            out["witnesses"] = {
                str(t): [m.to_json() for m in seq] for t, seq in sorted(self.witnesses.items())
            }
        return out


@dataclass
class PegSearch:
    """Memoised reach over proper distributions of one graph.

    The memo maps a distribution to its exact reach and is shared by every
    query on this instance, so sweeps over many starting distributions
    reuse each other's sub-searches.
    """

    g: Graph
    budget: int | None = None
    memo: dict[int, int] = field(default_factory=dict)
    states: int = 0

    def reach_mask(self, state: int) -> int:
        hit = self.memo.get(state)
        if hit is not None:
            return hit
        adj, full = self.g.adj, self.g.full_mask
        acc = state
        for v in iter_bits(state):
            jumpers = adj[v] & state
            landings = adj[v] & ~state
            if not (jumpers and landings):
                continue
            rest = state & ~(1 << v)
            for u in iter_bits(jumpers):
                base = rest & ~(1 << u)
                for w in iter_bits(landings):
                    acc |= self.reach_mask(base | 1 << w)
                    if acc == full:
                        break
                if acc == full:
                    break
            if acc == full:
                break
        self.memo[state] = acc
        self.states += 1
        if self.budget is not None and self.states > self.budget:
            raise BudgetExhausted(self.states)
        return acc

    def full_reach(self, state: int) -> bool:
        return self.reach_mask(state) == self.g.full_mask


def _witness_search(g: Graph, start: int, budget: int | None) -> ReachReport:
    parents: dict[int, tuple[int, Move] | None] = {start: None}
    first: dict[int, int] = {t: start for t in iter_bits(start)}
    queue = deque([start])
    seen_all = start
    while queue and seen_all != g.full_mask:
        state = queue.popleft()
        for m in legal_moves(g, state):
            child = (state & ~(1 << m.u) & ~(1 << m.v)) | 1 << m.w
            if child in parents:
                continue
            parents[child] = (state, m)
            if budget is not None and len(parents) > budget:
                raise BudgetExhausted(len(parents))
            queue.append(child)
            if not seen_all >> m.w & 1:
                seen_all |= 1 << m.w
                first[m.w] = child
    witnesses = {}
    for t, state in first.items():
        seq = []
        while parents[state] is not None:
            state, m = parents[state]
            seq.append(m)
        witnesses[t] = seq[::-1]
    return ReachReport(seen_all, len(parents), witnesses)


def reach(
    g: Graph,
    d: int | Iterable[int],
    *,
    witness: bool = False,
    search: PegSearch | None = None,
    budget: int | None = None,
) -> ReachReport:
    """Exact reach of a proper distribution under pegging moves.

    With ``witness=True`` a breadth-first search records, for every reached
    vertex, a shortest move sequence that puts a peg on it.
    """
    state = to_mask(d)
    _check_distribution(g, state)
    if witness:
        return _witness_search(g, state, budget)
    search = search or PegSearch(g, budget)
    before = search.states
    mask = search.reach_mask(state)
    return ReachReport(mask, search.states - before)


def reach_within(g: Graph, d: int | Iterable[int], k: int) -> int:
    """Vertices reachable with at most ``k`` pegging moves, as a bitmask.

    Every move removes one peg, so all sequences reaching a state have the
    same length and a plain visited set is exact.
    """
    start = to_mask(d)
    _check_distribution(g, start)
    if k < 0:
        raise ValueError("move budget must be non-negative")
    floor_size = start.bit_count() - k
    seen = {start}
    stack = [start]
    acc = start
    adj = g.adj
    while stack:
        state = stack.pop()
        if state.bit_count() <= floor_size:
            continue
        for v in iter_bits(state):
            landings = adj[v] & ~state
            if not landings:
                continue
            for u in iter_bits(adj[v] & state):
                base = state & ~(1 << v) & ~(1 << u)
                for w in iter_bits(landings):
                    child = base | 1 << w
                    if child not in seen:
                        seen.add(child)
                        acc |= child
                        stack.append(child)
    return acc


@dataclass
class MultiSearch:
    """Memoised reach under stacking and pebbling moves, keyed by count vectors.

    Removal moves are not expanded: stacking and pebbling only need pegs to
    be present, so dropping a peg never enables a move and adds no reach.
    """

    g: Graph
    budget: int | None = None
    memo: dict[tuple[int, ...], int] = field(default_factory=dict)
    states: int = 0

    def reach_mask(self, counts: tuple[int, ...]) -> int:
        hit = self.memo.get(counts)
        if hit is not None:
            return hit
        adj, full = self.g.adj, self.g.full_mask
        acc = 0
        for v, c in enumerate(counts):
            if c:
                acc |= 1 << v
        if acc != full:
            acc = self._expand(counts, acc, adj, full)
        self.memo[counts] = acc
        self.states += 1
        if self.budget is not None and self.states > self.budget:
            raise BudgetExhausted(self.states)
        return acc

    def _expand(self, counts, acc, adj, full):
        occupied = acc
        for v in iter_bits(occupied):
            for u in iter_bits(adj[v] & occupied):
                for w in iter_bits(adj[v] & ~(1 << u)):
                    c = list(counts)
                    c[u] -= 1
                    c[v] -= 1
                    c[w] += 1
                    acc |= self.reach_mask(tuple(c))
                    if acc == full:
                        return acc
            if counts[v] >= 2:
                for w in iter_bits(adj[v]):
                    c = list(counts)
                    c[v] -= 2
                    c[w] += 1
                    acc |= self.reach_mask(tuple(c))
                    if acc == full:
                        return acc
        return acc


def reach_all_moves(
    g: Graph, d: MultiDistribution | int | Iterable[int], *, search: MultiSearch | None = None
) -> int:
    """Reach under stacking, pebbling and removal moves, as a bitmask."""
    if not isinstance(d, MultiDistribution):
        mask = to_mask(d)
        _check_distribution(g, mask)
        d = MultiDistribution.from_mask(g.n, mask)
    if len(d.counts) != g.n:
        raise ValueError("count vector length does not match graph order")
    search = search or MultiSearch(g)
    return search.reach_mask(d.counts)


@lru_cache(maxsize=None)
def sigma_power(k: int) -> Surd:
    return ONE if k == 0 else sigma_power(k - 1) * SIGMA


def _multiplicities(g: Graph, d: State) -> list[int]:
    if isinstance(d, MultiDistribution):
        return list(d.counts)
    mask = to_mask(d)
    _check_distribution(g, mask)
    return [mask >> v & 1 for v in range(g.n)]


def weight(g: Graph, d: State, t: int) -> Surd:
    """Exact ``sum over pegs u of sigma ** d(u, t)``."""
    if not is_connected(g):
        raise GraphError("weights need a connected graph")
    dist = bfs_distances(g, t)
    total = ZERO
    for u, mult in enumerate(_multiplicities(g, d)):
        if mult:
            total = total + mult * sigma_power(int(dist[u]))
    return total


@dataclass(frozen=True)
class WeightCertificate:
    """Proof that ``target`` is unreachable: the distribution's weight is below 1."""

    target: int
    value: Surd

    def to_json(self) -> dict:
        return {"target": self.target, **self.value.to_json()}


def weight_certificate(g: Graph, d: State, t: int) -> WeightCertificate | None:
    w = weight(g, d, t)
    return WeightCertificate(t, w) if w < 1 else None


@lru_cache(maxsize=None)
def _sigma_pair(k: int) -> tuple[int, int]:
    s = sigma_power(k)
    a, b = 2 * s.p, 2 * s.q
    assert a.denominator == 1 and b.denominator == 1
    return int(a), int(b)


class WeightTable:
    """Integer weight tables for fast exact certificate checks in sweeps.

    ``sigma ** k == (a_k + b_k * sqrt 5) / 2`` with integers ``a_k, b_k``.
    """

    def __init__(self, g: Graph):
        if not is_connected(g):
            raise GraphError("weights need a connected graph")
        self.g = g
        self.rows = []
        for t in range(g.n):
            dist = bfs_distances(g, t)
            self.rows.append([_sigma_pair(int(dist[u])) for u in range(g.n)])

    def pair(self, state: int, t: int) -> tuple[int, int]:
        """``(a, b)`` with ``wt_t(state) == (a + b * sqrt 5) / 2``."""
        row = self.rows[t]
        a = b = 0
        for u in iter_bits(state):
            a += row[u][0]
            b += row[u][1]
        return a, b

    def below_one(self, state: int, t: int) -> bool:
        a, b = self.pair(state, t)
        # weight < 1  <=>  (a - 2) + b*sqrt5 < 0
        return Surd(a - 2, b).sign() < 0

    def certified_miss(self, state: int) -> int | None:
        """Smallest empty target certified unreachable from ``state``, if any."""
        for t in iter_bits(self.g.full_mask & ~state):
            if self.below_one(state, t):
                return t
        return None
