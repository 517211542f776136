"""Tripartite graph data model.

Vertices are addressed as (part, index) with parts numbered 1..3 and
1-based vertex indices, so the j-th vertex of part i is ``VertexRef(i, j)``.
Edges join vertices of distinct parts only; within-part pairs never exist.

Adjacency is stored as one bitmask row per vertex per opposite part
(bit b-1 of ``neighbors_mask(i, a, j)`` is set iff v_i^a ~ v_j^b), kept in
both directions so neighbourhood intersections are cheap either way.

A published ``TripartiteGraph`` is an immutable value and safe to share
across workers; ``GraphBuilder`` is the single-owner mutable stage used
while assembling one.  The canonical edge order used everywhere (iteration,
serialization, search) is: part pair (1,2) before (1,3) before (2,3), and
lexicographic by (a, b) within a pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

PARTS = (1, 2, 3)
PAIR_ORDER = ((1, 2), (1, 3), (2, 3))


class GraphError(ValueError):
    """Structural misuse of the tripartite graph API."""


@dataclass(frozen=True, order=True)
class VertexRef:
    """Address of one vertex: v_part^index, both 1-based."""

    part: int
    index: int

    def __post_init__(self) -> None:
        if self.part not in PARTS:
            raise GraphError(f"part must be one of {PARTS}, got {self.part}")
        if self.index < 1:
            raise GraphError(f"vertex index must be >= 1, got {self.index}")

    def __repr__(self) -> str:
        return f"v{self.part}^{self.index}"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the 1-based positions of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def _check_sizes(part_sizes: tuple[int, int, int]) -> tuple[int, int, int]:
    sizes = tuple(int(n) for n in part_sizes)
    if len(sizes) != 3 or any(n < 1 for n in sizes):
        raise GraphError(f"part sizes must be three positive integers, got {part_sizes}")
    return sizes  # type: ignore[return-value]


class TripartiteGraph:
    """Immutable tripartite graph.

    Construct through :class:`GraphBuilder`, :func:`new_host` or
    :meth:`from_edges`; the constructor is an internal detail.
    """

    __slots__ = ("part_sizes", "_rows", "_num_edges")

    def __init__(self, part_sizes: tuple[int, int, int],
                 rows: dict[tuple[int, int], tuple[int, ...]], num_edges: int):
        self.part_sizes = part_sizes
        self._rows = rows
        self._num_edges = num_edges

    @classmethod
    def from_edges(cls, part_sizes: tuple[int, int, int],
                   edges: "list[tuple[VertexRef, VertexRef]]") -> "TripartiteGraph":
        b = GraphBuilder(part_sizes)
        for u, v in edges:
            b.add_edge(u, v)
        return b.build()

    # -- queries ------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return self._num_edges

    def part_size(self, part: int) -> int:
        return self.part_sizes[part - 1]

    def part_mask(self, part: int) -> int:
        return (1 << self.part_sizes[part - 1]) - 1

    def check_vertex(self, v: VertexRef) -> None:
        if v.index > self.part_sizes[v.part - 1]:
            raise GraphError(f"{v} out of range for part sizes {self.part_sizes}")

    def neighbors_mask(self, part: int, index: int, other_part: int) -> int:
        """Bitmask of the neighbours of v_part^index inside other_part."""
        return self._rows[(part, other_part)][index - 1]

    def has_edge(self, u: VertexRef, v: VertexRef) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        if u.part == v.part:
            return False
        return bool((self._rows[(u.part, v.part)][u.index - 1] >> (v.index - 1)) & 1)

    def degree(self, v: VertexRef) -> int:
        self.check_vertex(v)
        return sum(self._rows[(v.part, j)][v.index - 1].bit_count()
                   for j in PARTS if j != v.part)

    def edges(self) -> list[tuple[VertexRef, VertexRef]]:
        """All edges in canonical order."""
        out = []
        for i, j in PAIR_ORDER:
            rows = self._rows[(i, j)]
            for a in range(1, self.part_sizes[i - 1] + 1):
                for b in iter_bits(rows[a - 1]):
                    out.append((VertexRef(i, a), VertexRef(j, b)))
        return out

    def vertices(self) -> list[VertexRef]:
        return [VertexRef(i, a) for i in PARTS
                for a in range(1, self.part_sizes[i - 1] + 1)]

    def is_subgraph_of(self, other: "TripartiteGraph") -> bool:
        if self.part_sizes != other.part_sizes:
            return False
        for i, j in PAIR_ORDER:
            mine, theirs = self._rows[(i, j)], other._rows[(i, j)]
            if any(m & ~t for m, t in zip(mine, theirs)):
                return False
        return True

    # -- derivation ----------------------------------------------------------

    def with_edge(self, u: VertexRef, v: VertexRef) -> "TripartiteGraph":
        """A new graph with the edge uv added; self is unchanged."""
        b = GraphBuilder.from_graph(self)
        b.add_edge(u, v)
        return b.build()

    def without_edge(self, u: VertexRef, v: VertexRef) -> "TripartiteGraph":
        """A new graph with the edge uv removed; self is unchanged."""
        b = GraphBuilder.from_graph(self)
        b.remove_edge(u, v)
        return b.build()

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TripartiteGraph):
            return NotImplemented
        return (self.part_sizes == other.part_sizes
                and all(self._rows[p] == other._rows[p] for p in PAIR_ORDER))

    def __hash__(self) -> int:
        return hash((self.part_sizes,) + tuple(self._rows[p] for p in PAIR_ORDER))

    def __repr__(self) -> str:
        return f"TripartiteGraph(parts={self.part_sizes}, edges={self._num_edges})"


class GraphBuilder:
    """Mutable edge-set stage for assembling a TripartiteGraph.

    Exposes the same ``part_sizes`` / ``neighbors_mask`` surface as the
    immutable graph so read-only algorithms can run against a builder.
    """

    __slots__ = ("part_sizes", "_rows", "_num_edges")

    def __init__(self, part_sizes: tuple[int, int, int]):
        self.part_sizes = _check_sizes(part_sizes)
        self._rows = {(i, j): [0] * self.part_sizes[i - 1]
                      for i in PARTS for j in PARTS if i != j}
        self._num_edges = 0

    @classmethod
    def from_graph(cls, g: TripartiteGraph) -> "GraphBuilder":
        b = cls(g.part_sizes)
        b._rows = {key: list(rows) for key, rows in g._rows.items()}
        b._num_edges = g.num_edges
        return b

    @property
    def num_edges(self) -> int:
        return self._num_edges

    def neighbors_mask(self, part: int, index: int, other_part: int) -> int:
        return self._rows[(part, other_part)][index - 1]

    def _check_pair(self, u: VertexRef, v: VertexRef) -> None:
        if u.part == v.part:
            raise GraphError(f"{u} and {v} lie in the same part")
        for x in (u, v):
            if x.index > self.part_sizes[x.part - 1]:
                raise GraphError(f"{x} out of range for part sizes {self.part_sizes}")

    def has_edge(self, u: VertexRef, v: VertexRef) -> bool:
        if u.part == v.part:
            return False
        return bool((self._rows[(u.part, v.part)][u.index - 1] >> (v.index - 1)) & 1)

    def add_edge(self, u: VertexRef, v: VertexRef) -> None:
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise GraphError(f"edge {u}{v} already present")
        self._rows[(u.part, v.part)][u.index - 1] |= 1 << (v.index - 1)
        self._rows[(v.part, u.part)][v.index - 1] |= 1 << (u.index - 1)
        self._num_edges += 1

    def remove_edge(self, u: VertexRef, v: VertexRef) -> None:
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u}{v} not present")
        self._rows[(u.part, v.part)][u.index - 1] &= ~(1 << (v.index - 1))
        self._rows[(v.part, u.part)][v.index - 1] &= ~(1 << (u.index - 1))
        self._num_edges -= 1

    def build(self) -> TripartiteGraph:
        """Publish an immutable snapshot; the builder stays usable."""
        rows = {key: tuple(vals) for key, vals in self._rows.items()}
        return TripartiteGraph(self.part_sizes, rows, self._num_edges)


# -- module-level operations --------------------------------------------------

def new_host(n1: int, n2: int, n3: int) -> TripartiteGraph:
    """The complete tripartite host on parts of sizes n1 >= n2 >= n3 >= 1."""
    if n1 < n2 or n2 < n3:
        raise GraphError(f"host part sizes must satisfy n1 >= n2 >= n3, got ({n1},{n2},{n3})")
    sizes = _check_sizes((n1, n2, n3))
    b = GraphBuilder(sizes)
    for i, j in PAIR_ORDER:
        for a in range(1, sizes[i - 1] + 1):
            for c in range(1, sizes[j - 1] + 1):
                b.add_edge(VertexRef(i, a), VertexRef(j, c))
    return b.build()


def add_edge(g: TripartiteGraph, u: VertexRef, v: VertexRef) -> TripartiteGraph:
    return g.with_edge(u, v)


def remove_edge(g: TripartiteGraph, u: VertexRef, v: VertexRef) -> TripartiteGraph:
    return g.without_edge(u, v)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-part minimum degrees and per-vertex degrees split by neighbour part."""

    delta: tuple[int, int, int]
    split: dict  # VertexRef -> {other_part: neighbour count}

    def degree(self, v: VertexRef) -> int:
        return sum(self.split[v].values())


def degree_profile(g: TripartiteGraph) -> DegreeProfile:
    split: dict[VertexRef, dict[int, int]] = {}
    mins = []
    for i in PARTS:
        others = [j for j in PARTS if j != i]
        part_min = None
        for a in range(1, g.part_sizes[i - 1] + 1):
            counts = {j: g.neighbors_mask(i, a, j).bit_count() for j in others}
            split[VertexRef(i, a)] = counts
            d = sum(counts.values())
            part_min = d if part_min is None else min(part_min, d)
        mins.append(part_min if part_min is not None else 0)
    return DegreeProfile(delta=tuple(mins), split=split)


def nonedges(g: TripartiteGraph, host: TripartiteGraph) -> list[tuple[VertexRef, VertexRef]]:
    """Host edges absent from g, in canonical order.

    g must live on the same part sizes and be a subgraph of host.
    """
    if g.part_sizes != host.part_sizes:
        raise GraphError(f"part sizes differ: {g.part_sizes} vs {host.part_sizes}")
    if not g.is_subgraph_of(host):
        raise GraphError("graph is not a subgraph of the given host")
    out = []
    for i, j in PAIR_ORDER:
        for a in range(1, host.part_sizes[i - 1] + 1):
            missing = host.neighbors_mask(i, a, j) & ~g.neighbors_mask(i, a, j)
            for b in iter_bits(missing):
                out.append((VertexRef(i, a), VertexRef(j, b)))
    return out


def host_nonedges(g: TripartiteGraph) -> list[tuple[VertexRef, VertexRef]]:
    """Nonedges of g relative to the complete host on its own part sizes."""
    out = []
    for i, j in PAIR_ORDER:
        full = g.part_mask(j)
        for a in range(1, g.part_sizes[i - 1] + 1):
            missing = full & ~g.neighbors_mask(i, a, j)
            for b in iter_bits(missing):
                out.append((VertexRef(i, a), VertexRef(j, b)))
    return out


def iso_equivalent(g: TripartiteGraph, h: TripartiteGraph) -> bool:
    """Part-respecting isomorphism test.

    True iff some bijection composed of (a) a permutation of equal-size
    parts and (b) within-part vertex relabelings maps E(g) onto E(h).
    Exact backtracking over vertex images, pruned by split-degree
    signatures; intended for parts of size at most ~12.
    """
    if sorted(g.part_sizes) != sorted(h.part_sizes):
        return False
    if g.num_edges != h.num_edges:
        return False

    for perm in itertools.permutations(PARTS):
        part_map = {i: perm[i - 1] for i in PARTS}
        if any(g.part_sizes[i - 1] != h.part_sizes[part_map[i] - 1] for i in PARTS):
            continue
        # split-degree signatures, keyed by g's part labelling on both
        # sides so they are comparable under part_map; the multisets must
        # agree per part before any backtracking is attempted
        feasible = True
        sigs_h: dict[int, dict[tuple, list[int]]] = {}
        for i in PARTS:
            gi = sorted(tuple(g.neighbors_mask(i, a, j).bit_count()
                              for j in PARTS if j != i)
                        for a in range(1, g.part_sizes[i - 1] + 1))
            by_sig: dict[tuple, list[int]] = {}
            hi = []
            for x in range(1, h.part_sizes[part_map[i] - 1] + 1):
                s = tuple(h.neighbors_mask(part_map[i], x, part_map[j]).bit_count()
                          for j in PARTS if j != i)
                hi.append(s)
                by_sig.setdefault(s, []).append(x)
            if gi != sorted(hi):
                feasible = False
                break
            sigs_h[i] = by_sig
        if not feasible:
            continue
        if _iso_backtrack(g, h, part_map, sigs_h):
            return True
    return False


def _iso_backtrack(g: TripartiteGraph, h: TripartiteGraph, part_map: dict[int, int],
                   sigs_h: dict[int, dict[tuple, list[int]]]) -> bool:
    order = [(i, a) for i in PARTS for a in range(1, g.part_sizes[i - 1] + 1)]
    mapping: dict[tuple[int, int], int] = {}
    used = {i: set() for i in PARTS}

    def ok(i: int, a: int, x: int) -> bool:
        # adjacency with every already-mapped vertex must match exactly
        for (j, b), y in mapping.items():
            if j == i:
                continue
            ge = (g.neighbors_mask(i, a, j) >> (b - 1)) & 1
            he = (h.neighbors_mask(part_map[i], x, part_map[j]) >> (y - 1)) & 1
            if ge != he:
                return False
        return True

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        i, a = order[k]
        sig = tuple(g.neighbors_mask(i, a, j).bit_count() for j in PARTS if j != i)
        for x in sigs_h[i].get(sig, ()):
            if x in used[i]:
                continue
            if ok(i, a, x):
                mapping[(i, a)] = x
                used[i].add(x)
                if rec(k + 1):
                    return True
                del mapping[(i, a)]
                used[i].discard(x)
        return False

    return rec(0)
