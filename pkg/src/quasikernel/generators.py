"""Graph family generators and exhaustive enumerators."""

from __future__ import annotations

from itertools import combinations

from .construct import HairyPartition
from .digraph import Digraph
from .rng import SplitMix64


def gen_cycle(length: int) -> Digraph:
    """Directed cycle 0 -> 1 -> ... -> length-1 -> 0."""
    if length < 2:
        raise ValueError("cycle length must be at least 2")
    return Digraph(length, [(i, (i + 1) % length) for i in range(length)])


def gen_three_hub(k: int) -> tuple[Digraph, dict[str, int]]:
    """Three mutually 2-cycled hubs, each 2-cycled with its own k leaves.

    Vertices 0, 1, 2 are the hubs v, u, w; leaf i of each hub sits at
    3 + 3*(i-1) plus the hub offset.  Returns the graph and a label table.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    labels = {"v": 0, "u": 1, "w": 2}
    arcs = []
    for a, b in combinations(range(3), 2):
        arcs.append((a, b))
        arcs.append((b, a))
    for i in range(1, k + 1):
        base = 3 + 3 * (i - 1)
        for offset, hub in enumerate("vuw"):
            leaf = base + offset
            labels[f"{hub}{i}"] = leaf
            arcs.append((offset, leaf))
            arcs.append((leaf, offset))
    return Digraph(3 + 3 * k, arcs), labels


def gen_tight_hairy(
    n: int, strongly_connected: bool = False
) -> tuple[Digraph, HairyPartition, dict[str, int]]:
    """Circulant tournament on 2n+1 vertices with 2n+1 hairs per vertex.

    Vertex i beats i+1..i+n (mod 2n+1); the hairs of vertex i occupy the
    block of 2n+1 indices starting at (2n+1)*(i+1).  With strongly_connected
    set, two extra vertices w1 and w2 are appended: every hair points at w1,
    w1 points at w2, and w2 points back at vertex 0.  The returned partition
    and labels describe the hairy part; w1 and w2 are labelled but belong to
    neither side of the partition.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    m = 2 * n + 1
    arcs = []
    labels = {}
    for i in range(m):
        labels[f"a{i}"] = i
        for j in range(1, n + 1):
            arcs.append((i, (i + j) % m))
    owner = {}
    idx = m
    for i in range(m):
        for j in range(m):
            labels[f"h{i}_{j}"] = idx
            arcs.append((i, idx))
            owner[idx] = i
            idx += 1
    hairs = frozenset(owner)
    part = HairyPartition(frozenset(range(m)), hairs, owner)
    if strongly_connected:
        w1, w2 = idx, idx + 1
        labels["w1"] = w1
        labels["w2"] = w2
        for h in sorted(hairs):
            arcs.append((h, w1))
        arcs.append((w1, w2))
        arcs.append((w2, 0))
        idx += 2
    return Digraph(idx, arcs), part, labels


def gen_random_digraph(
    n: int, arc_prob: float, source_free: bool, seed: int
) -> Digraph:
    """Each ordered pair independently gets an arc with probability arc_prob.

    With source_free set, every in-degree-0 vertex then receives one arc
    from a uniformly random other vertex, repeated until no source remains.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= arc_prob <= 1.0:
        raise ValueError("arc_prob must lie in [0, 1]")
    if source_free and n < 2:
        raise ValueError("source-free graphs need at least 2 vertices")
    rng = SplitMix64(seed)
    arcs = set()
    indeg = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and rng.next_float() < arc_prob:
                arcs.add((u, v))
                indeg[v] += 1
    if source_free:
        while True:
            srcs = [v for v in range(n) if indeg[v] == 0]
            if not srcs:
                break
            for v in srcs:
                u = rng.next_below(n - 1)
                if u >= v:
                    u += 1
                arcs.add((u, v))
                indeg[v] += 1
    return Digraph(n, sorted(arcs))


def gen_random_tournament(n: int, seed: int) -> Digraph:
    """Uniformly random orientation of every unordered pair."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = SplitMix64(seed)
    arcs = []
    for u, v in combinations(range(n), 2):
        arcs.append((u, v) if rng.next_below(2) == 0 else (v, u))
    return Digraph(n, arcs)


def gen_random_hairy(
    m: int, max_hairs: int, seed: int
) -> tuple[Digraph, HairyPartition]:
    """Source-free random tournament with 0..max_hairs hairs per vertex.

    Tournaments are redrawn whole until one without a source appears, then
    each vertex draws a uniform hair count.
    """
    if m < 3:
        raise ValueError("the tournament needs at least 3 vertices")
    if max_hairs < 0:
        raise ValueError("max_hairs must be non-negative")
    rng = SplitMix64(seed)
    while True:
        arcs = []
        indeg = [0] * m
        for u, v in combinations(range(m), 2):
            if rng.next_below(2) == 0:
                arcs.append((u, v))
                indeg[v] += 1
            else:
                arcs.append((v, u))
                indeg[u] += 1
        if all(indeg):
            break
    owner = {}
    idx = m
    for a in range(m):
        for _ in range(rng.next_below(max_hairs + 1)):
            arcs.append((a, idx))
            owner[idx] = a
            idx += 1
    part = HairyPartition(frozenset(range(m)), frozenset(owner), owner)
    return Digraph(idx, arcs), part


def gen_random_unicyclic(n: int, seed: int) -> tuple[Digraph, tuple[int, ...]]:
    """Directed cycle of uniform length 3..n with out-trees hung off it.

    Every vertex past the cycle picks a uniformly random earlier vertex as
    its parent.  Returns the graph and the cycle as a vertex tuple.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = SplitMix64(seed)
    length = 3 + rng.next_below(n - 2)
    arcs = [(i, (i + 1) % length) for i in range(length)]
    for v in range(length, n):
        arcs.append((rng.next_below(v), v))
    return Digraph(n, arcs), tuple(range(length))


def enumerate_all_digraphs(n: int):
    """Every loopless digraph on 0..n-1, n at most 5.

    Each unordered pair takes one of four states (none, low->high,
    high->low, both); graphs stream out in base-4 counter order with the
    first pair as the least significant digit.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > 5:
        raise ValueError("exhaustive digraph enumeration is capped at n=5")
    pairs = list(combinations(range(n), 2))
    for code in range(4 ** len(pairs)):
        out_lists: list[list[int]] = [[] for _ in range(n)]
        rest = code
        for u, v in pairs:
            state = rest & 3
            rest >>= 2
            if state in (1, 3):
                out_lists[u].append(v)
            if state in (2, 3):
                out_lists[v].append(u)
        yield Digraph._trusted(n, out_lists)


def enumerate_all_tournaments(n: int):
    """Every tournament on 0..n-1, n at most 7, in binary counter order.

    Bit k of the counter orients pair k: 0 sends low->high.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > 7:
        raise ValueError("exhaustive tournament enumeration is capped at n=7")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        out_lists: list[list[int]] = [[] for _ in range(n)]
        rest = code
        for u, v in pairs:
            if rest & 1:
                out_lists[v].append(u)
            else:
                out_lists[u].append(v)
            rest >>= 1
        yield Digraph._trusted(n, out_lists)
