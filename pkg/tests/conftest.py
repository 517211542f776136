"""Shared helpers: seeded random graphs and patterns for oracle tests."""

from __future__ import annotations

import random

from trisat import GraphBuilder, PatternSpec, TripartiteGraph, VertexRef

PAIRS = ((1, 2), (1, 3), (2, 3))


def random_sizes(rnd: random.Random, max_size: int = 4) -> tuple[int, int, int]:
    return tuple(sorted((rnd.randint(1, max_size) for _ in range(3)), reverse=True))


def random_graph(rnd: random.Random, sizes: tuple[int, int, int],
                 density: float = 0.5) -> TripartiteGraph:
    b = GraphBuilder(sizes)
    for i, j in PAIRS:
        for a in range(1, sizes[i - 1] + 1):
            for c in range(1, sizes[j - 1] + 1):
                if rnd.random() < density:
                    b.add_edge(VertexRef(i, a), VertexRef(j, c))
    return b.build()


def random_pattern(rnd: random.Random, max_class: int = 3, allow_bipartite: bool = True) -> PatternSpec:
    ell = rnd.randint(1, max_class)
    m = rnd.randint(1, ell)
    p = rnd.randint(0 if allow_bipartite else 1, m)
    return PatternSpec(ell, m, p)


def edge_tuples(g: TripartiteGraph) -> list[tuple[int, int, int, int]]:
    return [(u.part, u.index, v.part, v.index) for u, v in g.edges()]
