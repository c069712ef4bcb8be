"""Plain-text graph format: a count line `n m` then one `u v` line per arc."""

from __future__ import annotations

from .digraph import Digraph
from .errors import GraphFormatError


def parse_graph(text: str) -> Digraph:
    """Parse the text format; `#` lines are comments, blank lines are skipped."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise GraphFormatError("missing count line")
    lineno, head = rows[0]
    if len(head) != 2:
        raise GraphFormatError("count line must be two integers `n m`", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError("count line must be two integers `n m`", lineno)
    if n < 0 or m < 0:
        raise GraphFormatError("counts must be non-negative", lineno)
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(
            f"expected {m} arc lines, found {len(body)}", lineno
        )
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, parts in body:
        if len(parts) != 2:
            raise GraphFormatError("arc line must be two integers `u v`", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("arc line must be two integers `u v`", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"arc ({u}, {v}) out of range for n={n}", lineno
            )
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate arc ({u}, {v})", lineno)
        seen.add((u, v))
        arcs.append((u, v))
    return Digraph(n, arcs)


def format_graph(G: Digraph) -> str:
    """Serialise to the text format with arcs sorted lexicographically."""
    lines = [f"{G.n} {G.m}"]
    for u in range(G.n):
        for v in G.out_adj[u]:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(G: Digraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(G))
