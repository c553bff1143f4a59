"""Line-oriented text format for colored mixed graphs.

A graph file looks like::

    mixedgraph 1
    signature 1 0
    vertices 3
    a 0 1 1     # arc 0 -> 1 with arc color 1
    e 1 2 1     # edge {1, 2} with edge color 1

Everything after ``#`` on a line is a comment.  Vertices are 0-indexed.
Optional sidecar lines may follow the relations: ``color v c`` records a
vertex coloring and ``forest u v i`` assigns an underlying edge to
forest i.  A comment of the form ``# seed S`` is recognized and kept, so
sampled targets stay reproducible from their files alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .core import ColorSignature, MixedGraph, RelationKind, ARC_OUT, EDGE

FORMAT_VERSION = 1

_SEED_COMMENT = re.compile(r"#\s*seed\s+(-?\d+)\s*$")


class FormatError(ValueError):
    """Malformed graph text; the message names the offending line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class GraphDocument:
    """A parsed graph file: the graph plus optional sidecar data."""

    graph: MixedGraph
    coloring: dict[int, int] = field(default_factory=dict)
    forests: dict[tuple[int, int], int] = field(default_factory=dict)
    seed: int | None = None


def _int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(line_no, f"{what} must be an integer, got {token!r}") from None


def loads(text: str) -> GraphDocument:
    """Parse graph text, auditing every structural invariant."""
    doc: GraphDocument | None = None
    signature: ColorSignature | None = None
    graph: MixedGraph | None = None
    header_seen = False
    seed: int | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        if "#" in raw:
            seed_match = _SEED_COMMENT.search(raw)
            if seed_match and seed is None:
                seed = int(seed_match.group(1))
            raw = raw[: raw.index("#")]
        tokens = raw.split()
        if not tokens:
            continue
        word = tokens[0]

        if not header_seen:
            if word != "mixedgraph":
                raise FormatError(line_no, f"expected 'mixedgraph {FORMAT_VERSION}' header")
            if len(tokens) != 2 or _int(tokens[1], line_no, "version") != FORMAT_VERSION:
                raise FormatError(line_no, f"unsupported format version {tokens[1:]}")
            header_seen = True
            continue

        if signature is None:
            if word != "signature" or len(tokens) != 3:
                raise FormatError(line_no, "expected 'signature m n' after the header")
            m = _int(tokens[1], line_no, "m")
            n = _int(tokens[2], line_no, "n")
            try:
                signature = ColorSignature(m, n)
            except ValueError as exc:
                raise FormatError(line_no, str(exc)) from None
            continue

        if graph is None:
            if word != "vertices" or len(tokens) != 2:
                raise FormatError(line_no, "expected 'vertices N' after the signature")
            order = _int(tokens[1], line_no, "vertex count")
            if order < 0:
                raise FormatError(line_no, "vertex count must be non-negative")
            graph = MixedGraph(signature, order)
            doc = GraphDocument(graph)
            continue

        assert doc is not None
        if word in ("a", "e"):
            if len(tokens) != 4:
                raise FormatError(line_no, f"expected '{word} u v color'")
            u = _int(tokens[1], line_no, "vertex")
            v = _int(tokens[2], line_no, "vertex")
            c = _int(tokens[3], line_no, "color")
            try:
                if c < 1:
                    raise ValueError(f"color must be >= 1, got {c}")
                graph.add_relation(u, v, RelationKind(ARC_OUT if word == "a" else EDGE, c))
            except ValueError as exc:
                raise FormatError(line_no, str(exc)) from None
        elif word == "color":
            if len(tokens) != 3:
                raise FormatError(line_no, "expected 'color v c'")
            v = _int(tokens[1], line_no, "vertex")
            c = _int(tokens[2], line_no, "color")
            if not 0 <= v < graph.order:
                raise FormatError(line_no, f"vertex {v} out of range")
            if v in doc.coloring:
                raise FormatError(line_no, f"vertex {v} colored twice")
            doc.coloring[v] = c
        elif word == "forest":
            if len(tokens) != 4:
                raise FormatError(line_no, "expected 'forest u v i'")
            u = _int(tokens[1], line_no, "vertex")
            v = _int(tokens[2], line_no, "vertex")
            i = _int(tokens[3], line_no, "forest index")
            if not (0 <= u < graph.order and 0 <= v < graph.order):
                raise FormatError(line_no, f"pair ({u}, {v}) out of range")
            key = (u, v) if u < v else (v, u)
            if graph.relation_from(key[0], key[1]) is None:
                raise FormatError(line_no, f"pair ({u}, {v}) is not an underlying edge")
            if key in doc.forests:
                raise FormatError(line_no, f"edge ({u}, {v}) assigned twice")
            if i < 0:
                raise FormatError(line_no, "forest index must be non-negative")
            doc.forests[key] = i
        else:
            raise FormatError(line_no, f"unknown directive {word!r}")

    if doc is None:
        last = text.count("\n") + 1
        raise FormatError(last, "incomplete file: header, signature and vertices required")
    audit = doc.graph.validate()
    assert audit is None, f"parser produced an invalid graph: {audit}"
    doc.seed = seed
    return doc


def load(path: str | Path) -> GraphDocument:
    return loads(Path(path).read_text())


def dumps(
    graph: MixedGraph,
    *,
    coloring: Mapping[int, int] | None = None,
    forests: Mapping[tuple[int, int], int] | None = None,
    seed: int | None = None,
    comments: Iterable[str] = (),
) -> str:
    """Serialize a graph (plus optional sidecar data) to format text."""
    lines = [f"mixedgraph {FORMAT_VERSION}"]
    if seed is not None:
        lines.append(f"# seed {seed}")
    for comment in comments:
        lines.append(f"# {comment}")
    lines.append(f"signature {graph.signature.m} {graph.signature.n}")
    lines.append(f"vertices {graph.order}")
    for u, v, rel in graph.relations():
        if rel.kind == ARC_OUT:
            lines.append(f"a {u} {v} {rel.color}")
        elif rel.kind == EDGE:
            lines.append(f"e {u} {v} {rel.color}")
        else:
            lines.append(f"a {v} {u} {rel.color}")
    if coloring:
        for v in sorted(coloring):
            lines.append(f"color {v} {coloring[v]}")
    if forests:
        for (u, v) in sorted(forests):
            lines.append(f"forest {u} {v} {forests[(u, v)]}")
    return "\n".join(lines) + "\n"


def dump(
    path: str | Path,
    graph: MixedGraph,
    *,
    coloring: Mapping[int, int] | None = None,
    forests: Mapping[tuple[int, int], int] | None = None,
    seed: int | None = None,
    comments: Iterable[str] = (),
) -> None:
    Path(path).write_text(
        dumps(graph, coloring=coloring, forests=forests, seed=seed, comments=comments)
    )


def loads_mapping(text: str) -> dict[int, int]:
    """Parse a bare vertex map: ``map u x`` lines, comments allowed."""
    mapping: dict[int, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if "#" in raw:
            raw = raw[: raw.index("#")]
        tokens = raw.split()
        if not tokens:
            continue
        if tokens[0] != "map" or len(tokens) != 3:
            raise FormatError(line_no, "expected 'map u x'")
        u = _int(tokens[1], line_no, "source vertex")
        x = _int(tokens[2], line_no, "image vertex")
        if u in mapping:
            raise FormatError(line_no, f"vertex {u} mapped twice")
        mapping[u] = x
    return mapping


def dumps_mapping(mapping: Mapping[int, int]) -> str:
    return "".join(f"map {u} {mapping[u]}\n" for u in sorted(mapping))
