"""Generators for the saturated-subgraph constructions.

Six families, each deterministic (identical parameters produce identical
edge lists):

* ``construction1`` / ``construction2`` -- K_{l,m,m}-saturated subgraphs of
  K_{n1,n2,n3}: full hubs S_i of size m at the top index range, cyclic
  bounded-degree windows on the residual vertices, and three hub edges
  removed (a triangle of nonedges for 1, a path for 2).
* ``construction3`` -- K_{l,m,p}-saturated (m > p) in K_{n1,n2,n3}: hubs of
  size m-1 at the bottom range and residual circulants.
* ``construction4`` / ``construction5`` -- balanced-host variants that
  shave edges by completely joining small hub triangles T_i of size
  floor((l-m)/2).
* ``construction_c4`` -- the three-star C4-saturated subgraph with exactly
  n1+n2+n3 edges.

Residual circulants join the a-th residual vertex of one class to a cyclic
window of positions in another, indices reduced via rho(x) = ((x-1) mod N) + 1.
Generators enforce the regimes under which the saturation guarantee is
proved; ``force=True`` builds outside them (the verifier can then judge the
result).
"""

from __future__ import annotations

from .formulas import BoundRecord, f_c4, f_con1_upper, f_con3_upper, f_con4_upper, f_con5_upper, t_of
from .graphs import PAIR_ORDER, PARTS, GraphBuilder, TripartiteGraph, VertexRef
from .patterns import PatternSpec

CONSTRUCTION_NAMES = ("1", "2", "3", "4", "5", "c4")


class ConstructionError(ValueError):
    """Parameters outside a construction's valid regime."""


def _rho(x: int, n: int) -> int:
    return (x - 1) % n + 1


def _cyc(i: int, shift: int) -> int:
    """Part arithmetic modulo 3 on 1-based part labels."""
    return (i - 1 + shift) % 3 + 1


def _ensure_edge(b: GraphBuilder, u: VertexRef, v: VertexRef) -> None:
    # constructions define edge sets as unions, so re-adding is a no-op
    if not b.has_edge(u, v):
        b.add_edge(u, v)


def _join_sets(b: GraphBuilder, sets: dict[int, list[int]]) -> None:
    """Completely join each listed vertex set to both other parts."""
    ns = b.part_sizes
    for i in PARTS:
        for a in sets.get(i, []):
            for j in PARTS:
                if j == i:
                    continue
                for c in range(1, ns[j - 1] + 1):
                    _ensure_edge(b, VertexRef(i, a), VertexRef(j, c))


# -- constructions 1 and 2 -----------------------------------------------------

def _check_con1_params(l: int, m: int, n1: int, n2: int, n3: int, force: bool) -> None:
    if not (l >= m >= 1):
        raise ConstructionError(f"need l >= m >= 1, got l={l}, m={m}")
    if not (n1 >= n2 >= n3 >= 1):
        raise ConstructionError(f"need n1 >= n2 >= n3 >= 1, got ({n1},{n2},{n3})")
    if m > n3:
        raise ConstructionError(f"hubs of size m={m} do not fit in a part of size {n3}")
    if l > m and m >= n3:
        raise ConstructionError(
            f"the residual windows need m < n3, got m={m}, n3={n3}")
    bound = max(l + 2, 3 * l - 2 * m - 1)
    if n3 < bound and not force:
        raise ConstructionError(
            f"saturation is guaranteed only for n3 >= max(l+2, 3l-2m-1) = {bound}, got n3={n3} "
            f"(pass force=True to build anyway)")


def _con1_body(l: int, m: int, n1: int, n2: int, n3: int) -> GraphBuilder:
    """Hub joins plus residual windows, before any edge removal."""
    b = GraphBuilder((n1, n2, n3))
    ns = (n1, n2, n3)
    hubs = {i: list(range(ns[i - 1] - m + 1, ns[i - 1] + 1)) for i in PARTS}
    _join_sets(b, hubs)
    w = l - m
    if w > 0:
        # windows live on the residual index ranges [n_j - m]
        for a in range(1, n3 - m + 1):
            for j in (1, 2):
                nj = ns[j - 1] - m
                for off in range(w):
                    _ensure_edge(b, VertexRef(3, a), VertexRef(j, _rho(a + off, nj)))
        for a in range(1, n2 - m + 1):
            n1r = n1 - m
            for off in range(w, 2 * w):
                _ensure_edge(b, VertexRef(2, a), VertexRef(1, _rho(a + off, n1r)))
    return b


def construction1(l: int, m: int, n1: int, n2: int, n3: int, *,
                  force: bool = False) -> TripartiteGraph:
    """K_{l,m,m}-saturated subgraph with a triangle of hub nonedges."""
    _check_con1_params(l, m, n1, n2, n3, force)
    b = _con1_body(l, m, n1, n2, n3)
    b.remove_edge(VertexRef(1, n1), VertexRef(2, n2))
    b.remove_edge(VertexRef(1, n1), VertexRef(3, n3))
    b.remove_edge(VertexRef(2, n2), VertexRef(3, n3))
    return b.build()


def construction2(variant: int, l: int, m: int, n1: int, n2: int, n3: int, *,
                  force: bool = False) -> TripartiteGraph:
    """K_{l,m,m}-saturated subgraph with a path of hub nonedges.

    Identical to :func:`construction1` except the removed triple, which for
    variant i is {v_i^{n_i} v_{i+1}^{n_{i+1}}, v_i^{n_i - 1} v_{i+2}^{n_{i+2}},
    v_{i+1}^{n_{i+1}} v_{i+2}^{n_{i+2}}}.  Requires m >= 2 so that
    v_i^{n_i - 1} is itself a hub vertex; with m = 1 the removal leaves a hub
    pair completely joined and the graph is not pattern-free (``force=True``
    builds it regardless, for experimentation).
    """
    if variant not in PARTS:
        raise ConstructionError(f"variant must be 1, 2 or 3, got {variant}")
    _check_con1_params(l, m, n1, n2, n3, force)
    if m < 2 and not force:
        raise ConstructionError(
            "the path-removal variant needs m >= 2 (with m = 1 the removed edges "
            "do not break every hub join and the result is not saturated)")
    if n3 < 2:
        raise ConstructionError("variant removal needs every part of size >= 2")
    ns = (n1, n2, n3)
    i, i1, i2 = variant, _cyc(variant, 1), _cyc(variant, 2)
    b = _con1_body(l, m, n1, n2, n3)
    b.remove_edge(VertexRef(i, ns[i - 1]), VertexRef(i1, ns[i1 - 1]))
    b.remove_edge(VertexRef(i, ns[i - 1] - 1), VertexRef(i2, ns[i2 - 1]))
    b.remove_edge(VertexRef(i1, ns[i1 - 1]), VertexRef(i2, ns[i2 - 1]))
    return b.build()


# -- construction 3 ------------------------------------------------------------

def construction3(l: int, m: int, p: int, n1: int, n2: int, n3: int, *,
                  force: bool = False) -> TripartiteGraph:
    """K_{l,m,p}-saturated subgraph of K_{n1,n2,n3} for l >= m > p >= 1.

    Hubs S_i = {v_i^1, ..., v_i^{m-1}} joined to everything; between the
    residual ranges of parts i < j, the a-th residual vertex of the smaller
    part j takes the cyclic window of l-m positions starting at a in part i,
    so residual degrees are exactly l-m on the j side and at most l-m on the
    i side.
    """
    if not (l >= m > p >= 1):
        raise ConstructionError(f"need l >= m > p >= 1, got l={l}, m={m}, p={p}")
    if not (n1 >= n2 >= n3 >= 1):
        raise ConstructionError(f"need n1 >= n2 >= n3 >= 1, got ({n1},{n2},{n3})")
    if m - 1 > n3:
        raise ConstructionError(f"hub size m-1={m - 1} exceeds the smallest part {n3}")
    if n3 < l and not force:
        raise ConstructionError(
            f"saturation is guaranteed only for n3 >= l = {l}, got n3={n3} "
            f"(pass force=True to build anyway)")
    ns = (n1, n2, n3)
    b = GraphBuilder(ns)
    hubs = {i: list(range(1, m)) for i in PARTS}
    _join_sets(b, hubs)
    w = l - m
    if w > 0:
        res_sizes = [n - m + 1 for n in ns]
        for i, j in PAIR_ORDER:
            ni_r, nj_r = res_sizes[i - 1], res_sizes[j - 1]
            for a in range(1, nj_r + 1):
                for off in range(w):
                    pos = _rho(a + off, ni_r)
                    _ensure_edge(b, VertexRef(j, m - 1 + a), VertexRef(i, m - 1 + pos))
    return b.build()


# -- constructions 4 and 5 (balanced hosts) -------------------------------------

def residual_triple_edges(n_res: int, w: int) -> list[tuple[int, int, int, int]]:
    """Edges of a triangle-free tripartite graph on three position ranges
    [n_res] in which every position has exactly w neighbours in each other
    range.  Rows are (i, a, j, b) position pairs with parts labelled 1..3.

    Two regimes:

    * n_res >= 3w - 1: cyclic windows.  Position a of part 3 joins
      positions a..a+w-1 of parts 1 and 2; position a of part 2 joins
      positions a+w..a+2w-1 of part 1.  A triangle needs offsets with
      alpha = beta + gamma (mod n_res) for alpha, beta in [0, w) and
      gamma in [w, 2w), impossible without wrapping, and n_res >= 3w - 1
      rules wrapping out.

    * n_res even with n_res/2 >= w: halves.  Split every range into a low
      and a high block; parts 3-1 and 3-2 join matching blocks by a
      w-regular circulant while part 2-1 joins opposite blocks, so any
      two-edge path from part 3 ends in same-block vertices of parts 1, 2
      that the crossed 2-1 pairing never connects.

    Every smaller regime is refused; a pattern-degree w at such a residual
    size is an invalid parameter regime for the balanced construction.
    """
    edges: list[tuple[int, int, int, int]] = []
    if w == 0:
        return []
    if n_res >= 3 * w - 1:
        return _window_triple_edges(n_res, w)
    half = n_res // 2
    if n_res % 2 == 0 and half >= w:
        def circulant(i: int, j: int, lo_i: int, lo_j: int) -> None:
            for a in range(1, half + 1):
                for off in range(w):
                    edges.append((i, lo_i + a, j, lo_j + _rho(a + off, half)))

        circulant(3, 1, 0, 0)          # low  block of 3 -> low  block of 1
        circulant(3, 1, half, half)    # high block of 3 -> high block of 1
        circulant(3, 2, 0, 0)
        circulant(3, 2, half, half)
        circulant(2, 1, 0, half)       # low  block of 2 -> high block of 1
        circulant(2, 1, half, 0)
        return edges
    raise ConstructionError(
        f"no triangle-free residual realization available for residual parts of "
        f"size {n_res} with per-pair degree {w}")


def _window_triple_edges(n_res: int, w: int) -> list[tuple[int, int, int, int]]:
    edges = []
    for a in range(1, n_res + 1):
        for off in range(w):
            edges.append((3, a, 1, _rho(a + off, n_res)))
            edges.append((3, a, 2, _rho(a + off, n_res)))
        for off in range(w, 2 * w):
            edges.append((2, a, 1, _rho(a + off, n_res)))
    return edges


def construction4(l: int, m: int, n: int, *, force: bool = False) -> TripartiteGraph:
    """K_{l,m,m}-saturated subgraph of K_{n,n,n} with hub triangles.

    Hubs S_i = {v_i^1..v_i^m} joined to everything, triangles
    T_i = {v_i^{m+1}..v_i^{m+t}} with t = floor((l-m)/2) completely joined to
    each other, a triangle-free residual triple in which every residual
    vertex has exactly l-m residual neighbours in each other part, and the
    three edges v_1^1 v_2^1, v_1^1 v_3^1, v_2^1 v_3^1 removed.

    After building, the residual triple is re-checked for triangle-freeness
    and exact degrees; a failure signals an invalid parameter regime rather
    than returning a silently wrong graph.
    """
    if not (l >= m >= 1):
        raise ConstructionError(f"need l >= m >= 1, got l={l}, m={m}")
    t = t_of(l, m)
    bound = max(l + 2, 3 * l + t - 2 * m - 2)
    if n < bound and not force:
        raise ConstructionError(
            f"saturation is guaranteed only for n >= max(l+2, 3l+t-2m-2) = {bound}, "
            f"got n={n} (pass force=True to build anyway)")
    if n < m + t + 1:
        raise ConstructionError(f"parts of size {n} cannot hold hubs ({m}) plus triangles ({t})")
    b = GraphBuilder((n, n, n))
    _join_sets(b, {i: list(range(1, m + 1)) for i in PARTS})
    for i in PARTS:
        j = _cyc(i, 1)
        for a in range(m + 1, m + t + 1):
            for c in range(m + 1, m + t + 1):
                _ensure_edge(b, VertexRef(i, a), VertexRef(j, c))
    n_res = n - m - t
    w = l - m
    base = m + t
    try:
        residual = residual_triple_edges(n_res, w)
    except ConstructionError:
        if not force:
            raise
        # forced experimentation: fall back to the plain windows even
        # though they close a residual triangle at this size
        residual = _window_triple_edges(n_res, w)
    for i, a, j, bb in residual:
        _ensure_edge(b, VertexRef(i, base + a), VertexRef(j, base + bb))
    b.remove_edge(VertexRef(1, 1), VertexRef(2, 1))
    b.remove_edge(VertexRef(1, 1), VertexRef(3, 1))
    b.remove_edge(VertexRef(2, 1), VertexRef(3, 1))
    g = b.build()
    if not force:
        _assert_residual_triple(g, base, n_res, w)
    return g


def _assert_residual_triple(g: TripartiteGraph, base: int, n_res: int, w: int) -> None:
    res_mask = ((1 << n_res) - 1) << base
    for i, j in PAIR_ORDER:
        for a in range(base + 1, base + n_res + 1):
            deg = (g.neighbors_mask(i, a, j) & res_mask).bit_count()
            if deg != w:
                raise ConstructionError(
                    f"residual vertex v{i}^{a} has {deg} residual neighbours in part {j}, "
                    f"expected {w}: invalid parameter regime")
    for a in range(base + 1, base + n_res + 1):
        m2 = g.neighbors_mask(1, a, 2) & res_mask
        m3 = g.neighbors_mask(1, a, 3) & res_mask
        for bb in range(base + 1, base + n_res + 1):
            if (m2 >> (bb - 1)) & 1:
                if g.neighbors_mask(2, bb, 3) & m3:
                    raise ConstructionError(
                        "residual triple contains a triangle: invalid parameter regime")


def construction5(l: int, m: int, p: int, n: int, *, force: bool = False) -> TripartiteGraph:
    """K_{l,m,p}-saturated subgraph of K_{n,n,n} for l >= m > p >= 1.

    Hubs S_i of size m-1, triangles T_i of size t = floor((l-m)/2) completely
    joined to each other, and an (l-m)-regular bipartite circulant between
    the residual ranges of every part pair.
    """
    if not (l >= m > p >= 1):
        raise ConstructionError(f"need l >= m > p >= 1, got l={l}, m={m}, p={p}")
    t = t_of(l, m)
    if n < l + t - 1 and not force:
        raise ConstructionError(
            f"saturation is guaranteed only for n >= l + t - 1 = {l + t - 1}, got n={n} "
            f"(pass force=True to build anyway)")
    if n < (m - 1) + t:
        raise ConstructionError(f"parts of size {n} cannot hold hubs ({m - 1}) plus triangles ({t})")
    n_res = n - (m - 1) - t
    w = l - m
    if w > n_res:
        raise ConstructionError(
            f"residual parts of size {n_res} cannot carry an {w}-regular bipartite graph")
    b = GraphBuilder((n, n, n))
    _join_sets(b, {i: list(range(1, m)) for i in PARTS})
    for i in PARTS:
        j = _cyc(i, 1)
        for a in range(m, m + t):
            for c in range(m, m + t):
                _ensure_edge(b, VertexRef(i, a), VertexRef(j, c))
    base = m - 1 + t
    for i, j in PAIR_ORDER:
        for a in range(1, n_res + 1):
            for off in range(w):
                pos = _rho(a + off, n_res)
                _ensure_edge(b, VertexRef(j, base + a), VertexRef(i, base + pos))
    return b.build()


# -- the C4 three-star construction ---------------------------------------------

def construction_c4(n1: int, n2: int, n3: int, *, force: bool = False) -> TripartiteGraph:
    """C4-saturated subgraph with edge set {v_i^1 v_{i+1}^j : i in [3], j in [n_{i+1}]}."""
    if not (n1 >= n2 >= n3 >= 1):
        raise ConstructionError(f"need n1 >= n2 >= n3 >= 1, got ({n1},{n2},{n3})")
    if n3 < 2 and not force:
        raise ConstructionError(
            f"C4 saturation is guaranteed only for n3 >= 2, got n3={n3} "
            f"(pass force=True to build anyway)")
    ns = (n1, n2, n3)
    b = GraphBuilder(ns)
    for i in PARTS:
        j = _cyc(i, 1)
        for c in range(1, ns[j - 1] + 1):
            _ensure_edge(b, VertexRef(i, 1), VertexRef(j, c))
    return b.build()


# -- dispatch helpers ------------------------------------------------------------

def hub_sets(which: str, l: int | None, m: int | None,
             sizes: tuple[int, int, int]) -> list[set[int]]:
    """Indices of the hub vertices (S_i plus T_i where present) per part."""
    if which in ("1", "2"):
        return [set(range(sizes[i - 1] - m + 1, sizes[i - 1] + 1)) for i in PARTS]
    if which == "3":
        return [set(range(1, m)) for _ in PARTS]
    if which == "4":
        t = t_of(l, m)
        return [set(range(1, m + t + 1)) for _ in PARTS]
    if which == "5":
        t = t_of(l, m)
        return [set(range(1, m + t)) for _ in PARTS]
    if which == "c4":
        return [{1} for _ in PARTS]
    raise ConstructionError(f"unknown construction {which!r}")


def pattern_for(which: str, l: int | None = None, m: int | None = None,
                p: int | None = None) -> PatternSpec:
    """The pattern a construction is saturated for."""
    if which in ("1", "2", "4"):
        return PatternSpec(l, m, m)
    if which in ("3", "5"):
        return PatternSpec(l, m, p)
    if which == "c4":
        return PatternSpec(2, 2, 0)
    raise ConstructionError(f"unknown construction {which!r}")


def formula_for(which: str, n1: int, n2: int, n3: int, l: int | None = None,
                m: int | None = None, p: int | None = None) -> BoundRecord:
    """The closed-form edge count matching a construction."""
    if which in ("1", "2"):
        return f_con1_upper(n1, n2, n3, l, m)
    if which == "3":
        return f_con3_upper(n1, n2, n3, l, m, p)
    if which == "4":
        if not n1 == n2 == n3:
            raise ConstructionError("the balanced construction needs n1 = n2 = n3")
        return f_con4_upper(n1, l, m)
    if which == "5":
        if not n1 == n2 == n3:
            raise ConstructionError("the balanced construction needs n1 = n2 = n3")
        return f_con5_upper(n1, l, m, p)
    if which == "c4":
        return f_c4(n1, n2, n3)
    raise ConstructionError(f"unknown construction {which!r}")


def build(which: str, n1: int, n2: int, n3: int, l: int | None = None,
          m: int | None = None, p: int | None = None, variant: int = 1, *,
          force: bool = False) -> TripartiteGraph:
    """Dispatch a construction by name ('1'..'5' or 'c4')."""
    if which in ("1", "2", "3", "4", "5") and (l is None or m is None):
        raise ConstructionError(f"construction {which} needs parameters l and m")
    if which == "1":
        return construction1(l, m, n1, n2, n3, force=force)
    if which == "2":
        return construction2(variant, l, m, n1, n2, n3, force=force)
    if which == "3":
        if p is None:
            raise ConstructionError("construction 3 needs parameter p")
        return construction3(l, m, p, n1, n2, n3, force=force)
    if which == "4":
        if not n1 == n2 == n3:
            raise ConstructionError("construction 4 needs a balanced host n1 = n2 = n3")
        return construction4(l, m, n1, force=force)
    if which == "5":
        if p is None:
            raise ConstructionError("construction 5 needs parameter p")
        if not n1 == n2 == n3:
            raise ConstructionError("construction 5 needs a balanced host n1 = n2 = n3")
        return construction5(l, m, p, n1, force=force)
    if which == "c4":
        return construction_c4(n1, n2, n3, force=force)
    raise ConstructionError(f"unknown construction {which!r}; known: {CONSTRUCTION_NAMES}")


def smallest_guaranteed_n(which: str, l: int | None = None, m: int | None = None,
                          p: int | None = None) -> int:
    """Smallest balanced host size for which saturation is guaranteed."""
    if which in ("1", "2"):
        return max(l + 2, 3 * l - 2 * m - 1)
    if which == "3":
        return l
    if which == "4":
        return max(l + 2, 3 * l + t_of(l, m) - 2 * m - 2)
    if which == "5":
        return l + t_of(l, m) - 1
    if which == "c4":
        return 2
    raise ConstructionError(f"unknown construction {which!r}")
