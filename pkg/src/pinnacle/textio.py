"""Graph text format and DOT export.

The shared graph file format is plain text: the first significant line is
``n m`` (vertex and edge counts), followed by ``m`` lines ``u v`` with
1-based vertex ids.  Blank lines and lines starting with ``#`` are
ignored.  Self-loops and repeated edges are rejected with the offending
line number.
"""

from __future__ import annotations

import os
from .graphs import Graph
from .posets import DominancePoset

__all__ = [
    "GraphFormatError",
    "emit_hasse_dot",
    "format_graph",
    "parse_graph_file",
    "parse_graph_text",
]


class GraphFormatError(ValueError):
    """Malformed graph text; the message carries the line number."""


def parse_graph_text(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError(f"line {lineno}: header must be 'n m'")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: header must be 'n m'") from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"line {lineno}: counts must be non-negative")
            header = (n, m)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(f"line {lineno}: more than {m} edge lines")
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: edge line must be 'u v'") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        e = (u - 1, v - 1) if u < v else (v - 1, u - 1)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphFormatError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"expected {m} edges, found {len(edges)}")
    return Graph(n, edges)


def parse_graph_file(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_graph_text(text)
    except GraphFormatError as exc:
        raise GraphFormatError(f"{path}: {exc}") from None


def format_graph(g: Graph) -> str:
    """Serialize in the same text format (edges sorted, 1-based)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def emit_hasse_dot(poset: DominancePoset) -> str:
    """DOT digraph of the cover relation, one arc per cover, bottom to top."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, s in enumerate(poset.elements):
        label = "{%s}" % ",".join(map(str, s))
        lines.append(f'  s{i} [label="{label}"];')
    for lo, hi in sorted(poset.covers):
        lines.append(f"  s{lo} -> s{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
