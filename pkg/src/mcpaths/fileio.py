"""Text format for multi-criteria graphs.

Header line:  ``mcgraph <directed|undirected> <node_count> <q>``
Edge lines:   ``u v w_1 w_2 ... w_q`` (exactly q weights, whitespace split)
Lines whose first non-blank character is ``#`` are comments; blank lines
are ignored. All tokens are base-10 non-negative integers.
"""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph

__all__ = ["HEADER_MAGIC", "parse_graph_file"]

HEADER_MAGIC = "mcgraph"


def _nonneg_int(token: str, what: str, line_no: int) -> int:
    if not token.isdigit():
        raise GraphError(f"line {line_no}: {what} must be a non-negative integer, got {token!r}")
    return int(token)


def parse_graph_file(text: str) -> Graph:
    """Parse the mcgraph format, reporting the offending line on failure."""
    header: tuple[bool, int, int] | None = None
    triples: list[tuple[int, int, tuple[int, ...]]] = []
    edge_lines: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 4 or tokens[0] != HEADER_MAGIC:
                raise GraphError(
                    f"line {line_no}: expected header '{HEADER_MAGIC} "
                    f"<directed|undirected> <node_count> <q>'"
                )
            if tokens[1] not in ("directed", "undirected"):
                raise GraphError(
                    f"line {line_no}: directedness must be 'directed' or 'undirected', "
                    f"got {tokens[1]!r}"
                )
            header = (
                tokens[1] == "directed",
                _nonneg_int(tokens[2], "node count", line_no),
                _nonneg_int(tokens[3], "criterion count", line_no),
            )
            continue
        q = header[2]
        if len(tokens) != 2 + q:
            raise GraphError(
                f"line {line_no}: expected 'u v' plus {q} weights, got {len(tokens)} tokens"
            )
        u = _nonneg_int(tokens[0], "endpoint", line_no)
        v = _nonneg_int(tokens[1], "endpoint", line_no)
        weights = tuple(_nonneg_int(tok, "weight", line_no) for tok in tokens[2:])
        triples.append((u, v, weights))
        edge_lines.append(line_no)
    if header is None:
        raise GraphError("empty input: missing header line")
    directed, node_count, q = header
    try:
        return build_graph(directed, node_count, q, triples)
    except GraphError as exc:
        # Point validation failures back at the input line.
        msg = str(exc)
        for idx, line_no in enumerate(edge_lines):
            if msg.startswith(f"edge {idx} "):
                raise GraphError(f"line {line_no}: {msg}") from None
        raise
