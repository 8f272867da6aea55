"""Reading and writing graphs: edge-list text, graph6, and DOT output.

The edge-list format is a header line ``n m`` followed by ``m`` lines
``u v`` with 0-based vertex ids.  A line without a whitespace-separated
header is treated as a graph6 string.
"""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def parse_graph6(line: str) -> Graph:
    """Decode a single graph6 string (graphs on at most 62 vertices)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    if not s:
        raise GraphError("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphError(f"invalid graph6 character in {line!r}")
    if data[0] == 63:
        raise GraphError("graph6 inputs with more than 62 vertices are not supported")
    n = data[0]
    bits_needed = n * (n - 1) // 2
    bits = []
    for b in data[1:]:
        for k in range(5, -1, -1):
            bits.append((b >> k) & 1)
    if len(bits) < bits_needed:
        raise GraphError("graph6 string too short for its vertex count")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return build_graph(n, edges)


def read_graph_text(text: str) -> Graph:
    """Parse either format; graph6 is detected by the missing 'n m' header."""
    stripped = text.strip()
    if not stripped:
        raise GraphError("empty graph input")
    first = stripped.splitlines()[0].strip()
    parts = first.split()
    if len(parts) >= 2 and all(p.lstrip("-").isdigit() for p in parts[:2]):
        return parse_edge_list(text)
    return parse_graph6(first)


def read_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return read_graph_text(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def format_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n) if g.degree(v) == 0)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g))


def write_dot(g: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_dot(g))
