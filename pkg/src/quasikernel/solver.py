"""Exhaustive search for kernels and q-kernels on small digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .digraph import Digraph, VertexSet, _set_of, induced, out_neighbors, sources
from .errors import ResourceLimitError


@dataclass(frozen=True)
class SolverLimits:
    """Size and work caps for the exhaustive searches."""

    max_n: int = 24
    max_subsets: int | None = None


DEFAULT_LIMITS = SolverLimits()


class _Budget:
    def __init__(self, cap: int | None):
        self.cap = cap
        self.used = 0

    def spend(self):
        self.used += 1
        if self.cap is not None and self.used > self.cap:
            raise ResourceLimitError("candidate subset budget exhausted")


def _guard(G: Digraph, limits: SolverLimits):
    if G.n > limits.max_n:
        raise ResourceLimitError(f"n={G.n} exceeds max_n={limits.max_n}")


def _cover_masks(G: Digraph, q: int):
    if q == 1:
        return G.closed1_masks
    if q == 2:
        return G.closed2_masks
    return G.reach_masks(q)


def _hit_masks(G: Digraph, q: int, budget: _Budget, cap: int | None):
    """Yield masks of independent sets whose q-step closure covers V.

    DFS over ascending vertex indices, so hits come out in lexicographic
    order of their sorted member tuples.  Supersets of a hit are explored
    too since they may also be hits.  cap bounds the member count; it must
    be None or >= 1.
    """
    full = G.full_mask
    if full == 0:
        yield 0
        return
    n = G.n
    reach = _cover_masks(G, q)
    und = G.undirected_masks
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | reach[v]

    def rec(start, members, banned, cover, size):
        for v in range(start, n):
            bit = 1 << v
            if banned & bit:
                continue
            if cover | suffix[v] != full:
                # no extension using vertices >= v can complete the cover
                break
            budget.spend()
            new_cover = cover | reach[v]
            if new_cover == full:
                yield members | bit
            if cap is None or size + 1 < cap:
                yield from rec(
                    v + 1, members | bit, banned | bit | und[v], new_cover, size + 1
                )

    yield from rec(0, 0, 0, 0, 0)


def _iter_hits(G, q, limits, cap=None, budget=None):
    _guard(G, limits)
    if budget is None:
        budget = _Budget(limits.max_subsets)
    return _hit_masks(G, q, budget, cap)


def enumerate_q_kernels(G: Digraph, q: int = 2, limits: SolverLimits | None = None):
    """All q-kernels of G, sorted by size and then lexicographically."""
    if q < 1:
        raise ValueError("q must be at least 1")
    limits = limits or DEFAULT_LIMITS
    sets = [_set_of(m) for m in _iter_hits(G, q, limits)]
    return tuple(sorted(sets, key=lambda s: (len(s), tuple(sorted(s)))))


def enumerate_kernels(G: Digraph, limits: SolverLimits | None = None):
    """All kernels of G, sorted by size and then lexicographically."""
    return enumerate_q_kernels(G, 1, limits)


def has_kernel(G: Digraph, limits: SolverLimits | None = None) -> bool:
    limits = limits or DEFAULT_LIMITS
    return next(_iter_hits(G, 1, limits), None) is not None


def q_kernel_at_most(
    G: Digraph, q: int, max_size: int, limits: SolverLimits | None = None
) -> VertexSet | None:
    """Some q-kernel with at most max_size vertices, or None."""
    if q < 1:
        raise ValueError("q must be at least 1")
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    limits = limits or DEFAULT_LIMITS
    if G.n == 0:
        _guard(G, limits)
        return frozenset()
    if max_size == 0:
        return None
    first = next(_iter_hits(G, q, limits, cap=max_size), None)
    return None if first is None else _set_of(first)


def smallest_q_kernel(
    G: Digraph, q: int = 2, limits: SolverLimits | None = None
) -> VertexSet | None:
    """Minimum-size q-kernel, lexicographically smallest among ties.

    Iterative deepening on the size cap: the first hit at cap k appears only
    after caps below k came up empty, so it has size exactly k and is the
    lexicographically smallest hit of that size.  None is possible only for
    q=1, where kernels may not exist.
    """
    limits = limits or DEFAULT_LIMITS
    _guard(G, limits)
    if G.n == 0:
        return frozenset()
    budget = _Budget(limits.max_subsets)
    for k in range(1, G.n + 1):
        hit = next(_iter_hits(G, q, limits, cap=k, budget=budget), None)
        if hit is not None:
            return _set_of(hit)
    return None


def has_two_disjoint_qks(
    G: Digraph, q: int = 2, limits: SolverLimits | None = None
):
    """First disjoint pair from the sorted q-kernel enumeration, or None."""
    qks = enumerate_q_kernels(G, q, limits)
    for i in range(len(qks)):
        for j in range(i + 1, len(qks)):
            if not qks[i] & qks[j]:
                return qks[i], qks[j]
    return None


def is_kernel_perfect(G: Digraph, limits: SolverLimits | None = None):
    """Whether every induced subgraph has a kernel.

    Returns (True, None) or (False, witness) where witness is the first
    kernel-free vertex subset in size-ascending, then lexicographic, order.
    """
    limits = limits or DEFAULT_LIMITS
    _guard(G, limits)
    budget = _Budget(limits.max_subsets)
    for size in range(1, G.n + 1):
        for combo in combinations(range(G.n), size):
            H, _ = induced(G, combo)
            if next(_hit_masks(H, 1, budget, None), None) is None:
                return False, frozenset(combo)
    return True, None


def kls_bound(G: Digraph) -> Fraction:
    """(n + #sources - |out-neighbourhood of the sources|) / 2, exactly."""
    S = sources(G)
    return Fraction(G.n + len(S) - len(out_neighbors(G, S)), 2)
