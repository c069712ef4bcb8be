"""Immutable digraph type and the predicates everything else is built on."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import VertexRangeError

VertexSet = frozenset[int]


def _check_vertex(v, n: int) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise VertexRangeError(f"vertex must be an int, got {v!r}")
    if not 0 <= v < n:
        raise VertexRangeError(f"vertex {v} out of range for n={n}")
    return v


@dataclass(frozen=True, eq=False)
class Digraph:
    """Finite loopless digraph on vertices 0..n-1 with at most one copy of each arc.

    Parameters
    ----------
    n : int
        Number of vertices; must be >= 0.
    arcs : iterable of (int, int)
        Arc list; (u, v) means u -> v.  Loops and duplicates are rejected.
    """

    n: int
    out_adj: tuple[tuple[int, ...], ...] = field(init=False)
    in_adj: tuple[tuple[int, ...], ...] = field(init=False)

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"n must be a non-negative int, got {n!r}")
        out_sets: list[set[int]] = [set() for _ in range(n)]
        in_sets: list[set[int]] = [set() for _ in range(n)]
        for arc in arcs:
            u, v = arc
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if v in out_sets[u]:
                raise ValueError(f"duplicate arc ({u}, {v})")
            out_sets[u].add(v)
            in_sets[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "out_adj", tuple(tuple(sorted(s)) for s in out_sets)
        )
        object.__setattr__(
            self, "in_adj", tuple(tuple(sorted(s)) for s in in_sets)
        )

    @classmethod
    def _trusted(cls, n: int, out_lists: list[list[int]]) -> "Digraph":
        """Build without validation; out_lists must be sorted, loop- and dup-free."""
        g = object.__new__(cls)
        in_lists: list[list[int]] = [[] for _ in range(n)]
        for u, outs in enumerate(out_lists):
            for v in outs:
                in_lists[v].append(u)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "out_adj", tuple(tuple(o) for o in out_lists))
        object.__setattr__(g, "in_adj", tuple(tuple(sorted(i)) for i in in_lists))
        return g

    @property
    def m(self) -> int:
        return sum(len(o) for o in self.out_adj)

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.out_adj[u])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self) -> int:
        return hash((self.n, self.out_adj))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"

    # Bitmask views.  Masks make subset containment and closed-neighbourhood
    # unions cheap; every search in the package runs on them.

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = []
        for u in range(self.n):
            m = 0
            for v in self.out_adj[u]:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = []
        for u in range(self.n):
            m = 0
            for v in self.in_adj[u]:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    @cached_property
    def closed1_masks(self) -> tuple[int, ...]:
        out = self.out_masks
        return tuple((1 << u) | out[u] for u in range(self.n))

    @cached_property
    def closed2_masks(self) -> tuple[int, ...]:
        c1 = self.closed1_masks
        out = self.out_masks
        masks = []
        for u in range(self.n):
            m = c1[u]
            for v in self.out_adj[u]:
                m |= out[v]
            masks.append(m)
        return tuple(masks)

    @cached_property
    def undirected_masks(self) -> tuple[int, ...]:
        out, inn = self.out_masks, self.in_masks
        return tuple(out[u] | inn[u] for u in range(self.n))

    def reach_masks(self, q: int) -> tuple[int, ...]:
        """Per-vertex closed q-step out-reachability masks."""
        if q < 0:
            raise ValueError("q must be non-negative")
        masks = [1 << u for u in range(self.n)]
        out = self.out_masks
        for _ in range(q):
            nxt = []
            for u in range(self.n):
                m = masks[u]
                frontier = m
                while frontier:
                    low = frontier & -frontier
                    m |= out[low.bit_length() - 1]
                    frontier ^= low
                nxt.append(m)
            if nxt == masks:
                break
            masks = nxt
        return tuple(masks)


def _mask_of(S: Iterable[int], n: int) -> int:
    m = 0
    for v in S:
        _check_vertex(v, n)
        m |= 1 << v
    return m


def _set_of(mask: int) -> VertexSet:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a predicate check, with a witness when it fails.

    witness is a vertex or an arc demonstrating the failure; it must be
    present exactly when holds is False.
    """

    holds: bool
    witness: int | tuple[int, int] | None = None

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError("witness must be None when the check holds")
        if not self.holds and self.witness is None:
            raise ValueError("witness required when the check fails")

    def __bool__(self) -> bool:
        return self.holds


def out_neighbors(G: Digraph, S: Iterable[int]) -> VertexSet:
    """Union of out-neighbourhoods of the vertices in S."""
    m = 0
    for v in S:
        _check_vertex(v, G.n)
        m |= G.out_masks[v]
    return _set_of(m)


def closed_out(G: Digraph, S: Iterable[int], q: int = 1) -> VertexSet:
    """Vertices reachable from S in at most q steps (S itself included)."""
    if q < 0:
        raise ValueError("q must be non-negative")
    mask = _mask_of(S, G.n)
    out = G.out_masks
    for _ in range(q):
        prev = mask
        frontier = mask
        while frontier:
            low = frontier & -frontier
            mask |= out[low.bit_length() - 1]
            frontier ^= low
        if mask == prev:
            break
    return _set_of(mask)


def closed_in(G: Digraph, S: Iterable[int], q: int = 1) -> VertexSet:
    """Vertices that reach S in at most q steps (S itself included)."""
    if q < 0:
        raise ValueError("q must be non-negative")
    mask = _mask_of(S, G.n)
    inn = G.in_masks
    for _ in range(q):
        prev = mask
        frontier = mask
        while frontier:
            low = frontier & -frontier
            mask |= inn[low.bit_length() - 1]
            frontier ^= low
        if mask == prev:
            break
    return _set_of(mask)


def sources(G: Digraph) -> VertexSet:
    """Vertices with in-degree zero."""
    return frozenset(v for v in range(G.n) if not G.in_adj[v])


def is_independent(G: Digraph, S: Iterable[int]) -> CheckReport:
    """No arc joins two vertices of S, in either direction."""
    mask = _mask_of(S, G.n)
    rest = mask
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        hit = G.out_masks[u] & mask
        if hit:
            v = (hit & -hit).bit_length() - 1
            return CheckReport(False, (u, v))
        rest ^= low
    return CheckReport(True)


def _covers(G: Digraph, S: Iterable[int], q: int) -> CheckReport:
    masks = G.closed1_masks if q == 1 else G.closed2_masks if q == 2 else None
    mask = 0
    if masks is None:
        reach = G.reach_masks(q)
        for v in S:
            _check_vertex(v, G.n)
            mask |= reach[v]
    else:
        for v in S:
            _check_vertex(v, G.n)
            mask |= masks[v]
    missing = G.full_mask & ~mask
    if missing:
        return CheckReport(False, (missing & -missing).bit_length() - 1)
    return CheckReport(True)


def is_kernel(G: Digraph, S: Iterable[int]) -> CheckReport:
    """Independent set whose closed out-neighbourhood is all of V."""
    S = frozenset(S)
    ind = is_independent(G, S)
    if not ind:
        return ind
    return _covers(G, S, 1)


def is_q_kernel(G: Digraph, S: Iterable[int], q: int = 2) -> CheckReport:
    """Independent set from which every vertex is within q steps.

    q=2 is the quasi-kernel property; q=1 recovers is_kernel.
    """
    if q < 1:
        raise ValueError("q must be at least 1")
    S = frozenset(S)
    ind = is_independent(G, S)
    if not ind:
        return ind
    return _covers(G, S, q)


def is_quasi_sink(G: Digraph, S: Iterable[int]) -> CheckReport:
    """Quasi-kernel of the transpose: every vertex reaches S within 2 steps."""
    S = frozenset(S)
    ind = is_independent(G, S)
    if not ind:
        return ind
    mask = 0
    # closed 2-step in-neighbourhood, via the transpose masks
    inn = G.in_masks
    for v in S:
        _check_vertex(v, G.n)
        m = (1 << v) | inn[v]
        for u in G.in_adj[v]:
            m |= inn[u]
        mask |= m
    missing = G.full_mask & ~mask
    if missing:
        return CheckReport(False, (missing & -missing).bit_length() - 1)
    return CheckReport(True)


def is_large_qk(G: Digraph, S: Iterable[int]) -> CheckReport:
    """Quasi-kernel whose closed out-neighbourhood spans at least half of V."""
    S = frozenset(S)
    qk = is_q_kernel(G, S, 2)
    if not qk:
        return qk
    mask = 0
    for v in S:
        mask |= G.closed1_masks[v]
    if 2 * mask.bit_count() >= G.n:
        return CheckReport(True)
    outside = G.full_mask & ~mask
    return CheckReport(False, (outside & -outside).bit_length() - 1)


def is_tournament(G: Digraph) -> bool:
    """Exactly one arc between every unordered vertex pair."""
    for u in range(G.n):
        for v in range(u + 1, G.n):
            fwd = (G.out_masks[u] >> v) & 1
            back = (G.out_masks[v] >> u) & 1
            if fwd + back != 1:
                return False
    return True


def induced(G: Digraph, S: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Induced subgraph on S, plus the old->new vertex relabelling."""
    verts = sorted(_set_of(_mask_of(S, G.n)))
    relabel = {v: i for i, v in enumerate(verts)}
    out_lists = []
    for v in verts:
        out_lists.append(sorted(relabel[w] for w in G.out_adj[v] if w in relabel))
    return Digraph._trusted(len(verts), out_lists), relabel


def transpose(G: Digraph) -> Digraph:
    """Digraph with every arc reversed."""
    return Digraph._trusted(G.n, [list(G.in_adj[v]) for v in range(G.n)])


def strongly_connected_components(G: Digraph) -> tuple[VertexSet, ...]:
    """SCCs in reverse topological order of the condensation (Tarjan, iterative)."""
    n = G.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[VertexSet] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            outs = G.out_adj[v]
            while pi < len(outs):
                w = outs[pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
            else:
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
    return tuple(comps)


def has_directed_odd_cycle(G: Digraph) -> bool:
    """True when some directed cycle (2-cycles included) has odd length.

    Checked one strongly connected component at a time: a strong component
    contains an odd directed cycle exactly when its arcs cannot be 2-coloured
    with every arc alternating colours.
    """
    comp_id = [0] * G.n
    comps = strongly_connected_components(G)
    for i, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = i
    colour: dict[int, int] = {}
    for comp in comps:
        if len(comp) == 1:
            continue
        start = min(comp)
        colour[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in G.out_adj[v]:
                if comp_id[w] != comp_id[v]:
                    continue
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return True
            for w in G.in_adj[v]:
                if comp_id[w] != comp_id[v]:
                    continue
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return True
    return False
