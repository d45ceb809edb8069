"""Exact independence number and independent domination number.

Both searches work on bit-mask adjacency rows and break ties toward the
lowest vertex index, so witnesses are reproducible.  Graphs carrying
Cayley provenance are first split into coset components (only the one
through the identity is solved) and then reduced by deleting the closed
neighbourhood of the identity, which vertex-transitivity allows.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cayley import Graph
from .groups import coset_partition, iter_bits, subgroup_generated

DEFAULT_NODE_LIMIT = 10**8
BRUTE_FORCE_LIMIT = 24


class BudgetExceeded(RuntimeError):
    """A search hit its node or time limit before finishing."""


@dataclass(frozen=True)
class SolveBudget:
    node_limit: int | None = DEFAULT_NODE_LIMIT
    time_limit: float | None = None


class _Meter:
    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, budget: SolveBudget | None):
        budget = budget or SolveBudget()
        self.nodes = 0
        self.limit = budget.node_limit
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(f"node limit of {self.limit} exceeded")
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time limit exceeded")


@dataclass(frozen=True)
class Solution:
    size: int
    witness: tuple[int, ...]
    nodes: int = 0

    @property
    def bits(self) -> int:
        out = 0
        for v in self.witness:
            out |= 1 << v
        return out


@dataclass(frozen=True)
class EnumerationSummary:
    count: int
    min_size: int | None
    max_size: int | None
    aborted: bool = False


def berge_lower_bound(graph: Graph) -> int:
    """``ceil(|V| / (max degree + 1))``."""
    n = graph.vertex_count
    return -(-n // (graph.max_degree() + 1)) if n else 0


def vt_reduce(graph: Graph, v: int) -> Graph:
    """Induced subgraph on the vertices outside the closed neighbourhood of ``v``.

    For vertex-transitive graphs, both invariants of the result are one
    less than those of ``graph``; that is the caller's guarantee.
    """
    return graph.induced(graph.all_vertices & ~graph.closed(v))


# ---------------------------------------------------------------------------
# maximum independent set


def _clique_cover_bound(adj: list[int], P: int) -> int:
    count = 0
    while P:
        low = P & -P
        cand = P & adj[low.bit_length() - 1]
        P ^= low
        while cand:
            w = cand & -cand
            P &= ~w
            cand &= adj[w.bit_length() - 1]
        count += 1
    return count


def _max_independent(adj: list[int], meter: _Meter) -> Solution:
    closed = [row | 1 << v for v, row in enumerate(adj)]
    best_size = 0
    best_mask = 0

    def expand(cur: int, size: int, P: int) -> None:
        nonlocal best_size, best_mask
        meter.tick()
        # vertices of degree <= 1 always belong to some maximum solution
        reduced = True
        while P and reduced:
            reduced = False
            for v in iter_bits(P):
                if (adj[v] & P).bit_count() <= 1:
                    cur |= 1 << v
                    size += 1
                    P &= ~closed[v]
                    reduced = True
                    break
        if not P:
            if size > best_size:
                best_size, best_mask = size, cur
            return
        if size + _clique_cover_bound(adj, P) <= best_size:
            return
        pivot, deg = -1, -1
        for v in iter_bits(P):
            d = (adj[v] & P).bit_count()
            if d > deg:
                pivot, deg = v, d
        expand(cur | 1 << pivot, size + 1, P & ~closed[pivot])
        expand(cur, size, P & ~(1 << pivot))

    if adj:
        expand(0, 0, (1 << len(adj)) - 1)
    return Solution(best_size, tuple(iter_bits(best_mask)), meter.nodes)


# ---------------------------------------------------------------------------
# minimum maximal independent set


class _Done(Exception):
    pass


def _min_independent_dominating(adj: list[int], meter: _Meter, lower: int = 0) -> Solution:
    n = len(adj)
    if n == 0:
        return Solution(0, (), 0)
    closed = [row | 1 << v for v, row in enumerate(adj)]

    # greedy seed: lowest undominated vertex first
    seed, U = 0, (1 << n) - 1
    while U:
        v = (U & -U).bit_length() - 1
        seed |= 1 << v
        U &= ~closed[v]
    best_size, best_mask = seed.bit_count(), seed
    lower = max(lower, 1)

    def search(cur: int, size: int, U: int, X: int) -> None:
        # U: undominated vertices (exactly the ones still addable); X subset of U: banned from joining
        nonlocal best_size, best_mask
        meter.tick()
        if not U:
            if size < best_size:
                best_size, best_mask = size, cur
                if best_size <= lower:
                    raise _Done
            return
        if size + 1 >= best_size:
            return
        pick_opts, pick_cnt = 0, n + 1
        for u in iter_bits(U):
            opts = closed[u] & U & ~X
            c = opts.bit_count()
            if c == 0:
                return
            if c < pick_cnt:
                pick_opts, pick_cnt = opts, c
        cover = max((closed[w] & U).bit_count() for w in iter_bits(U & ~X))
        if size - (-U.bit_count() // cover) >= best_size:
            return
        for w in iter_bits(pick_opts):
            search(cur | 1 << w, size + 1, U & ~closed[w], X & ~closed[w])
            X |= 1 << w

    if best_size > lower:
        try:
            search(0, 0, (1 << n) - 1, 0)
        except _Done:
            pass
    return Solution(best_size, tuple(iter_bits(best_mask)), meter.nodes)


# ---------------------------------------------------------------------------
# public entry points


def _cayley_solve(graph: Graph, raw: Callable[[list[int], _Meter], Solution], meter: _Meter) -> Solution:
    G, S = graph.group, graph.connection
    H = subgroup_generated(G, S)
    X = graph.induced(H.bits & ~graph.closed(0))
    sol = raw(list(X.adjacency), meter)
    piece = 1
    for v in sol.witness:
        piece |= 1 << X.origin[v]
    full = 0
    for coset in coset_partition(G, H):
        t = next(iter(coset))
        full |= G.right_translate(piece, t)
    return Solution(full.bit_count(), tuple(iter_bits(full)), sol.nodes)


def independence_number(graph: Graph, budget: SolveBudget | None = None, *, structured: bool = True) -> Solution:
    """Exact ``alpha`` with one maximum independent set.

    ``structured=False`` forces a plain search on the whole graph even when
    it is a Cayley graph.
    """
    meter = _Meter(budget)
    if structured and graph.group is not None:
        return _cayley_solve(graph, _max_independent, meter)
    return _max_independent(list(graph.adjacency), meter)


def independent_domination_number(graph: Graph, budget: SolveBudget | None = None, *,
                                  structured: bool = True) -> Solution:
    """Exact ``i`` with one smallest maximal independent set.

    The search stops as soon as it meets the degree lower bound.
    """
    meter = _Meter(budget)
    if structured and graph.group is not None:
        G, S = graph.group, graph.connection
        h = subgroup_generated(G, S).size
        lower = -(-h // (S.bit_count() + 1)) - 1

        def raw(adj, m):
            return _min_independent_dominating(adj, m, lower)

        return _cayley_solve(graph, raw, meter)
    return _min_independent_dominating(list(graph.adjacency), meter, berge_lower_bound(graph))


class _Abort(Exception):
    pass


def enumerate_maximal_independent_sets(graph: Graph, budget: SolveBudget | None = None,
                                       visitor: Callable[[tuple[int, ...]], bool | None] | None = None
                                       ) -> EnumerationSummary:
    """Visit every maximal independent set once (Bron-Kerbosch with pivoting on the complement).

    A visitor returning ``False`` stops the enumeration early; the summary
    then has ``aborted`` set and covers only the sets seen so far.
    """
    n = graph.vertex_count
    meter = _Meter(budget)
    full = (1 << n) - 1
    nonadj = [full & ~(row | 1 << v) for v, row in enumerate(graph.adjacency)]
    count = 0
    lo: int | None = None
    hi: int | None = None

    def visit(R: int) -> None:
        nonlocal count, lo, hi
        size = R.bit_count()
        count += 1
        lo = size if lo is None else min(lo, size)
        hi = size if hi is None else max(hi, size)
        if visitor is not None and visitor(tuple(iter_bits(R))) is False:
            raise _Abort

    def bk(R: int, P: int, X: int) -> None:
        meter.tick()
        if not P:
            if not X:
                visit(R)
            return
        pivot, best = -1, -1
        for u in iter_bits(P | X):
            c = (P & nonadj[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in iter_bits(P & ~nonadj[pivot]):
            bit = 1 << v
            bk(R | bit, P & nonadj[v], X & nonadj[v])
            P &= ~bit
            X |= bit

    try:
        bk(0, full, 0)
    except _Abort:
        return EnumerationSummary(count, lo, hi, aborted=True)
    return EnumerationSummary(count, lo, hi)


def brute_force_alpha_i(graph: Graph) -> tuple[int, int]:
    """``(alpha, i)`` by testing every vertex subset; an oracle for small graphs."""
    n = graph.vertex_count
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices, got {n}")
    if n == 0:
        return 0, 0
    adj = [int(r) for r in graph.adjacency]
    alpha, i_min = 0, n
    chunk = 1 << 20
    for start in range(0, 1 << n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << n), dtype=np.int64)
        indep = np.ones(masks.shape, dtype=bool)
        dominating = np.ones(masks.shape, dtype=bool)
        for v in range(n):
            has_v = (masks >> v) & 1 == 1
            touches = (masks & adj[v]) != 0
            indep &= ~(has_v & touches)
            dominating &= has_v | touches
        sizes = np.bitwise_count(masks)
        if indep.any():
            alpha = max(alpha, int(sizes[indep].max()))
        maximal = indep & dominating
        if maximal.any():
            i_min = min(i_min, int(sizes[maximal].min()))
    return alpha, i_min
