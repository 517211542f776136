"""Deterministic graph serialization.

Two formats, both listing edges in canonical order:

* ``json``  -- ``{"parts": [n1, n2, n3], "edges": [[i, a, j, b], ...]}``
  with i < j on every edge row.
* ``edges`` -- ASCII text: a header line ``tripartite n1 n2 n3`` followed
  by one line ``i a j b`` per edge, newline-terminated.

``deserialize`` auto-detects the format.  Malformed input raises
:class:`FormatError` carrying the offending line or JSON position.
"""

from __future__ import annotations

import json

from .graphs import GraphBuilder, GraphError, TripartiteGraph, VertexRef

FORMATS = ("json", "edges")


class FormatError(ValueError):
    """Malformed serialized graph data."""


def serialize(g: TripartiteGraph, fmt: str = "edges") -> bytes:
    if fmt == "json":
        obj = to_json_obj(g)
        return (json.dumps(obj, separators=(",", ":")) + "\n").encode("ascii")
    if fmt == "edges":
        lines = ["tripartite {} {} {}".format(*g.part_sizes)]
        for u, v in g.edges():
            lines.append(f"{u.part} {u.index} {v.part} {v.index}")
        return ("\n".join(lines) + "\n").encode("ascii")
    raise FormatError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def to_json_obj(g: TripartiteGraph) -> dict:
    return {
        "parts": list(g.part_sizes),
        "edges": [[u.part, u.index, v.part, v.index] for u, v in g.edges()],
    }


def deserialize(data: bytes) -> TripartiteGraph:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise FormatError(f"non-ASCII byte at position {exc.start}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _from_json(text)
    if stripped.startswith("tripartite"):
        return _from_edge_lines(text)
    raise FormatError("unrecognized format: expected a JSON object or a 'tripartite' header")


def graph_from_json_obj(obj: object, where: str = "") -> TripartiteGraph:
    tag = where or "input"
    if not isinstance(obj, dict):
        raise FormatError(f"{tag}: expected a JSON object")
    unknown = set(obj) - {"parts", "edges"}
    if unknown:
        raise FormatError(f"{tag}: unknown keys {sorted(unknown)}")
    parts = obj.get("parts")
    if (not isinstance(parts, list) or len(parts) != 3
            or not all(isinstance(n, int) and n >= 1 for n in parts)):
        raise FormatError(f"{tag}: 'parts' must be three positive integers")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise FormatError(f"{tag}: 'edges' must be a list")
    b = GraphBuilder(tuple(parts))
    for k, row in enumerate(edges):
        if not (isinstance(row, list) and len(row) == 4
                and all(isinstance(x, int) for x in row)):
            raise FormatError(f"{tag}: edges[{k}] must be four integers [i, a, j, b]")
        i, a, j, bb = row
        try:
            b.add_edge(VertexRef(i, a), VertexRef(j, bb))
        except GraphError as exc:
            raise FormatError(f"{tag}: edges[{k}]: {exc}") from None
    return b.build()


def _from_json(text: str) -> TripartiteGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return graph_from_json_obj(obj)


def _from_edge_lines(text: str) -> TripartiteGraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "tripartite":
        raise FormatError("line 1: expected header 'tripartite n1 n2 n3'")
    try:
        sizes = tuple(int(x) for x in head[1:])
    except ValueError:
        raise FormatError("line 1: part sizes must be integers") from None
    if any(n < 1 for n in sizes):
        raise FormatError("line 1: part sizes must be positive")
    b = GraphBuilder(sizes)
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 4:
            raise FormatError(f"line {ln}: expected 'i a j b', got {line!r}")
        try:
            i, a, j, bb = (int(x) for x in fields)
        except ValueError:
            raise FormatError(f"line {ln}: non-integer field in {line!r}") from None
        try:
            b.add_edge(VertexRef(i, a), VertexRef(j, bb))
        except GraphError as exc:
            raise FormatError(f"line {ln}: {exc}") from None
    return b.build()
