"""Claim registry and sweep harness for checking statements over graph families."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .digraph import (
    CheckReport,
    Digraph,
    _set_of,
    has_directed_odd_cycle,
    is_kernel,
    is_large_qk,
    is_q_kernel,
    is_quasi_sink,
    is_tournament,
    sources,
)
from .errors import ResourceLimitError
from .generators import gen_random_digraph
from .graphio import format_graph, parse_graph
from .rng import SplitMix64
from .solver import (
    DEFAULT_LIMITS,
    SolverLimits,
    _iter_hits,
    enumerate_q_kernels,
    has_kernel,
    is_kernel_perfect,
    kls_bound,
    smallest_q_kernel,
)


@dataclass(frozen=True)
class Violation:
    """A falsifying instance: the graph in text format plus what went wrong."""

    graph: str
    witness: str


@dataclass(frozen=True)
class SweepReport:
    """Aggregated outcome of running one claim over one family.

    instances = passes + skips + len(violations) + aborted always holds.
    elapsed_seconds is excluded from equality so reruns compare stable.
    """

    claim: str
    family: str
    instances: int
    passes: int
    skips: int
    aborted: int
    violations: tuple[Violation, ...]
    elapsed_seconds: float = field(compare=False)
    seed_info: str | None = None


@dataclass(frozen=True)
class Claim:
    """A checkable statement: a hypothesis filter and a per-graph check."""

    id: str
    statement: str
    applies: Callable[[Digraph, SolverLimits], bool]
    check: Callable[[Digraph, SolverLimits], tuple[bool, str | None]]


def _applies_always(G, limits):
    return True


def _applies_source_free(G, limits):
    return not sources(G)


def _check_small_qk(G, limits):
    Q = smallest_q_kernel(G, 2, limits)
    if 2 * len(Q) <= G.n:
        return True, None
    return False, (
        f"smallest quasi-kernel {sorted(Q)} has size {len(Q)}, above {G.n}/2"
    )


def _check_kls(G, limits):
    Q = smallest_q_kernel(G, 2, limits)
    bound = kls_bound(G)
    if Fraction(len(Q)) <= bound:
        return True, None
    return False, (
        f"smallest quasi-kernel {sorted(Q)} has size {len(Q)}, above {bound}"
    )


def _applies_moon(G, limits):
    return G.n > 0 and is_tournament(G) and not sources(G)


def _check_at_least_three(G, limits):
    qks = enumerate_q_kernels(G, 2, limits)
    if len(qks) >= 3:
        return True, None
    listed = [sorted(q) for q in qks]
    return False, f"only {len(qks)} quasi-kernels: {listed}"


def _applies_no_kernel(G, limits):
    return not has_kernel(G, limits)


def _check_gutin(G, limits):
    qks = enumerate_q_kernels(G, 2, limits)
    unique = len(qks) == 1
    src_is_kernel = bool(is_kernel(G, sources(G)))
    if unique == src_is_kernel:
        return True, None
    return False, (
        f"{len(qks)} quasi-kernels while sources-form-a-kernel is {src_is_kernel}"
    )


def _applies_exactly_two(G, limits):
    return len(enumerate_q_kernels(G, 2, limits)) == 2


def _check_croitoru(G, limits):
    q1, q2 = enumerate_q_kernels(G, 2, limits)
    if not (is_kernel(G, q1) or is_kernel(G, q2)):
        return False, (
            f"neither {sorted(q1)} nor {sorted(q2)} is a kernel"
        )
    if (q1 & q2) != sources(G):
        return False, (
            f"intersection {sorted(q1 & q2)} differs from sources "
            f"{sorted(sources(G))}"
        )
    return True, None


def _applies_no_odd_cycle(G, limits):
    return not has_directed_odd_cycle(G)


def _check_kernel_perfect(G, limits):
    ok, witness = is_kernel_perfect(G, limits)
    if ok:
        return True, None
    return False, f"induced subgraph on {sorted(witness)} has no kernel"


def _check_q3_half(G, limits):
    Q = smallest_q_kernel(G, 3, limits)
    if 2 * len(Q) <= G.n:
        return True, None
    return False, f"smallest 3-kernel {sorted(Q)} has size {len(Q)}, above {G.n}/2"


def _check_spiro(G, limits):
    k = len(smallest_q_kernel(G, 2, limits))
    # k <= n - sqrt(n) holds exactly when (n - k)^2 >= n
    if (G.n - k) ** 2 >= G.n:
        return True, None
    return False, (
        f"smallest quasi-kernel has size {k}, above {G.n} - sqrt({G.n})"
    )


def _check_large_exists(G, limits):
    for mask in _iter_hits(G, 2, limits):
        if is_large_qk(G, _set_of(mask)):
            return True, None
    return False, "no quasi-kernel reaches half the vertices within one step"


def _applies_tournament(G, limits):
    return G.n > 0 and is_tournament(G)


def _check_max_degree_king(G, limits):
    best, king = -1, -1
    for v in range(G.n):
        d = len(G.out_adj[v])
        if d > best:
            best, king = d, v
    rep = is_q_kernel(G, frozenset({king}), 2)
    if rep:
        return True, None
    return False, (
        f"max out-degree vertex {king} misses vertex {rep.witness} within "
        f"two steps"
    )


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in (
        Claim(
            "small-qk",
            "every source-free digraph has a quasi-kernel on at most half "
            "the vertices",
            _applies_source_free,
            _check_small_qk,
        ),
        Claim(
            "kls",
            "every digraph has a quasi-kernel of size at most "
            "(n + #sources - |out-neighbourhood of sources|)/2",
            _applies_always,
            _check_kls,
        ),
        Claim(
            "moon",
            "every source-free tournament has at least three quasi-kernels",
            _applies_moon,
            _check_at_least_three,
        ),
        Claim(
            "jacob-meyniel",
            "every kernel-free digraph has at least three quasi-kernels",
            _applies_no_kernel,
            _check_at_least_three,
        ),
        Claim(
            "gutin-unique",
            "a digraph has exactly one quasi-kernel iff its sources form "
            "a kernel",
            _applies_always,
            _check_gutin,
        ),
        Claim(
            "croitoru-two",
            "with exactly two quasi-kernels, one is a kernel and they "
            "intersect in exactly the sources",
            _applies_exactly_two,
            _check_croitoru,
        ),
        Claim(
            "richardson",
            "a digraph without directed odd cycles is kernel-perfect",
            _applies_no_odd_cycle,
            _check_kernel_perfect,
        ),
        Claim(
            "q3-half",
            "every source-free digraph has a 3-kernel on at most half "
            "the vertices",
            _applies_source_free,
            _check_q3_half,
        ),
        Claim(
            "spiro-sqrt",
            "every source-free digraph has a quasi-kernel of size at most "
            "n - sqrt(n)",
            _applies_source_free,
            _check_spiro,
        ),
        Claim(
            "large-qk-exists",
            "every source-free digraph has a quasi-kernel reaching at "
            "least half the vertices within one step",
            _applies_source_free,
            _check_large_exists,
        ),
        Claim(
            "max-degree-king",
            "the max out-degree vertex of a tournament is a singleton "
            "quasi-kernel",
            _applies_tournament,
            _check_max_degree_king,
        ),
    )
}


def _run_graphs(claim, graphs, limits):
    instances = passes = skips = aborted = 0
    violations: list[Violation] = []
    for G in graphs:
        instances += 1
        try:
            if not claim.applies(G, limits):
                skips += 1
                continue
            ok, witness = claim.check(G, limits)
        except ResourceLimitError:
            aborted += 1
            continue
        if ok:
            passes += 1
        else:
            violations.append(Violation(format_graph(G), witness))
    return instances, passes, skips, aborted, violations


def _run_chunk(claim_id, texts, limits):
    claim = CLAIMS[claim_id]
    return _run_graphs(claim, (parse_graph(t) for t in texts), limits)


def run_claim(
    claim: Claim,
    family,
    limits: SolverLimits | None = None,
    jobs: int = 1,
    family_desc: str = "",
    seed_info: str | None = None,
) -> SweepReport:
    """Run one claim over an iterable of graphs and aggregate the outcome.

    With jobs > 1 the family is split over worker processes; violations are
    sorted by graph text then witness, so sharding never changes the report.
    """
    limits = limits or DEFAULT_LIMITS
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    start = time.perf_counter()
    if jobs == 1:
        instances, passes, skips, aborted, violations = _run_graphs(
            claim, family, limits
        )
    else:
        texts = [format_graph(G) for G in family]
        step = max(1, -(-len(texts) // (jobs * 4)))
        chunks = [texts[i : i + step] for i in range(0, len(texts), step)]
        instances = passes = skips = aborted = 0
        violations = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_chunk, claim.id, chunk, limits)
                for chunk in chunks
            ]
            for fut in futures:
                i, p, s, a, v = fut.result()
                instances += i
                passes += p
                skips += s
                aborted += a
                violations.extend(v)
    violations.sort(key=lambda v: (v.graph, v.witness))
    elapsed = time.perf_counter() - start
    return SweepReport(
        claim.id,
        family_desc,
        instances,
        passes,
        skips,
        aborted,
        tuple(violations),
        elapsed,
        seed_info,
    )


def report_emit(report: SweepReport, fmt: str) -> str:
    """Serialise a report as json, csv (one row per violation), or text."""
    if fmt == "json":
        payload = {
            "claim": report.claim,
            "family": report.family,
            "instances": report.instances,
            "passes": report.passes,
            "skips": report.skips,
            "aborted": report.aborted,
            "violations": [
                {"graph": v.graph, "witness": v.witness}
                for v in report.violations
            ],
            "elapsed_seconds": report.elapsed_seconds,
            "seed_info": report.seed_info,
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["claim", "family", "graph", "witness"])
        for v in report.violations:
            writer.writerow([report.claim, report.family, v.graph, v.witness])
        return buf.getvalue()
    if fmt == "text":
        lines = [
            f"claim: {report.claim}",
            f"family: {report.family}",
            f"instances: {report.instances}  passes: {report.passes}  "
            f"skips: {report.skips}  aborted: {report.aborted}",
            f"violations: {len(report.violations)}",
        ]
        if report.seed_info:
            lines.append(f"seed: {report.seed_info}")
        for i, v in enumerate(report.violations, start=1):
            lines.append(f"--- violation {i}: {v.witness}")
            lines.append(v.graph.rstrip("\n"))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def verify_set(G: Digraph, S, mode: str, q: int | None = None) -> CheckReport:
    """Check S against a named predicate: kernel, qk, q-kernel, quasi-sink, large."""
    if mode == "kernel":
        return is_kernel(G, S)
    if mode == "qk":
        return is_q_kernel(G, S, 2)
    if mode == "q-kernel":
        if q is None:
            raise ValueError("mode q-kernel requires q")
        return is_q_kernel(G, S, q)
    if mode == "quasi-sink":
        return is_quasi_sink(G, S)
    if mode == "large":
        return is_large_qk(G, S)
    raise ValueError(f"unknown mode {mode!r}")


def random_source_free_family(count: int, max_n: int, seed: int):
    """Deterministic stream of source-free random digraphs on 2..max_n vertices.

    Vertex count, arc probability in [0.1, 0.9), and the per-graph seed are
    all drawn from one generator seeded with seed, so the stream replays
    exactly.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    rng = SplitMix64(seed)
    for _ in range(count):
        n = 2 + rng.next_below(max_n - 1)
        prob = 0.1 + 0.8 * rng.next_float()
        sub = rng.next_u64()
        yield gen_random_digraph(n, prob, True, sub)
