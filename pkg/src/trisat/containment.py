"""Deciding whether a tripartite graph contains a complete tripartite pattern.

The main entry points are :func:`contains` (first witness in a fixed
exploration order, or None), :func:`contains_after` (containment created by
one added edge, searching only embeddings that use both endpoints), and
:func:`contains_naive` (a brute-force enumeration kept independent of the
clever search, used as the test oracle).

For patterns with all three classes nonempty the search places each class
in a single part: two vertices of distinct classes must be adjacent, hence
lie in distinct parts, and a class split across two parts would force the
other two classes into the one remaining part where they cannot be mutually
adjacent.  The naive oracle does not assume this and enumerates arbitrary
vertex sets, so the agreement tests exercise the rigidity argument.

For bipartite patterns (p = 0) the two classes may split across parts; the
search enumerates the assignments of parts to the two sides (no part may
host vertices of both classes) and backtracks inside each assignment.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .graphs import PARTS, VertexRef, iter_bits
from .patterns import Embedding, PatternSpec

_ROLES = ("X", "Y")


class ContainmentError(ValueError):
    """Invalid containment query."""


class _VirtualEdgeView:
    """Read-only view of a graph with one extra edge, avoiding a copy."""

    __slots__ = ("_g", "part_sizes", "_u", "_v")

    def __init__(self, g, u: VertexRef, v: VertexRef):
        self._g = g
        self.part_sizes = g.part_sizes
        self._u = u
        self._v = v

    def neighbors_mask(self, part: int, index: int, other_part: int) -> int:
        mask = self._g.neighbors_mask(part, index, other_part)
        u, v = self._u, self._v
        if part == u.part and index == u.index and other_part == v.part:
            mask |= 1 << (v.index - 1)
        elif part == v.part and index == v.index and other_part == u.part:
            mask |= 1 << (u.index - 1)
        return mask


def contains(g, pat: PatternSpec) -> Optional[Embedding]:
    """First embedding of pat in g under the fixed exploration order, or None."""
    if pat.p >= 1:
        return _search_tripartite(g, pat, required=())
    return _search_bipartite(g, pat, required=(), require_split=False)


def contains_after(g, pat: PatternSpec, u: VertexRef, v: VertexRef, *,
                   check_free: bool = False) -> Optional[Embedding]:
    """Embedding of pat in g + uv, restricted to embeddings using u and v.

    Sound only when g is already pattern-free (the caller's contract): an
    embedding avoiding the new edge would have existed in g.  Pass
    ``check_free=True`` to assert the contract (costly; for verification).
    """
    if u.part == v.part:
        raise ContainmentError(f"{u} and {v} lie in the same part")
    for x in (u, v):
        if x.index > g.part_sizes[x.part - 1]:
            raise ContainmentError(f"{x} out of range for part sizes {g.part_sizes}")
    if (g.neighbors_mask(u.part, u.index, v.part) >> (v.index - 1)) & 1:
        raise ContainmentError(f"{u}{v} is already an edge")
    if check_free and contains(g, pat) is not None:
        raise ContainmentError("contains_after called on a graph that is not pattern-free")
    view = _VirtualEdgeView(g, u, v)
    if pat.p >= 1:
        return _search_tripartite(view, pat, required=(u, v))
    # u and v must land in opposite classes: a copy using them on the same
    # side would avoid the new edge and thus already exist in g
    return _search_bipartite(view, pat, required=(u, v), require_split=True)


def contains_naive(g, pat: PatternSpec) -> Optional[Embedding]:
    """Brute-force oracle: enumerate vertex sets of the class sizes directly.

    Enumerates class sets over all vertices with no part bookkeeping (splits
    included for every class), pruning only through common neighbourhoods.
    Guarded to hosts with at most 15 vertices.
    """
    sizes = pat.nonempty_sizes
    verts = [VertexRef(i, a) for i in PARTS for a in range(1, g.part_sizes[i - 1] + 1)]
    if len(verts) > 15:
        raise ContainmentError("contains_naive guard: more than 15 vertices")
    nbrs = {}
    for v in verts:
        out = set()
        for j in PARTS:
            if j != v.part:
                for b in iter_bits(g.neighbors_mask(v.part, v.index, j)):
                    out.add(VertexRef(j, b))
        nbrs[v] = out

    for a_set in itertools.combinations(verts, sizes[0]):
        common = set(verts)
        for a in a_set:
            common &= nbrs[a]
        if len(common) < sizes[1]:
            continue
        for b_set in itertools.combinations(sorted(common), sizes[1]):
            if len(sizes) == 2:
                return Embedding((frozenset(a_set), frozenset(b_set)))
            common2 = set(common)
            for b in b_set:
                common2 &= nbrs[b]
            if len(common2) < sizes[2]:
                continue
            c_set = tuple(sorted(common2))[: sizes[2]]
            return Embedding((frozenset(a_set), frozenset(b_set), frozenset(c_set)))
    return None


# -- three nonempty classes ---------------------------------------------------

def _assignments(sizes: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    """Class-to-part bijections in lexicographic order.

    Assignments that only swap equal-size classes describe the same
    embeddings, so among those only the sorted representative is kept.
    """
    out = []
    for perm in itertools.permutations(PARTS):
        if any(sizes[c1] == sizes[c2] and perm[c1] > perm[c2]
               for c1 in range(3) for c2 in range(c1 + 1, 3)):
            continue
        out.append(perm)
    return out


def _search_tripartite(g, pat: PatternSpec, required: Sequence[VertexRef]) -> Optional[Embedding]:
    sizes = pat.sizes
    ns = g.part_sizes
    # fill the small classes first; ties broken by class index
    order = sorted(range(3), key=lambda c: (sizes[c], c))
    for assignment in _assignments(sizes):
        if any(ns[assignment[c] - 1] < sizes[c] for c in range(3)):
            continue
        req_by_class: dict[int, tuple[int, ...]] = {}
        feasible = True
        for r in required:
            c = assignment.index(r.part)
            cur = req_by_class.get(c, ())
            if len(cur) + 1 > sizes[c]:
                feasible = False
                break
            req_by_class[c] = cur + (r.index,)
        if not feasible:
            continue
        found = _fill_classes(g, sizes, order, assignment, req_by_class)
        if found is not None:
            classes = tuple(frozenset(VertexRef(assignment[c], b) for b in found[c])
                            for c in range(3))
            return Embedding(classes)
    return None


def _fill_classes(g, sizes, order, assignment, req_by_class) -> Optional[dict[int, tuple[int, ...]]]:
    chosen: dict[int, tuple[int, ...]] = {}
    init = [(1 << g.part_sizes[assignment[c] - 1]) - 1 for c in range(3)]

    def rec(k: int, cand: list[int]) -> bool:
        if k == 3:
            return True
        c = order[k]
        part = assignment[c]
        need = sizes[c]
        mask = cand[c]
        req = req_by_class.get(c, ())
        for r in req:
            if not (mask >> (r - 1)) & 1:
                return False
        avail = [b for b in iter_bits(mask) if b not in req]
        for extra in itertools.combinations(avail, need - len(req)):
            sel = tuple(sorted(req + extra))
            new_cand = list(cand)
            ok = True
            for k2 in range(k + 1, 3):
                c2 = order[k2]
                m2 = new_cand[c2]
                for b in sel:
                    m2 &= g.neighbors_mask(part, b, assignment[c2])
                    if not m2:
                        break
                req2 = req_by_class.get(c2, ())
                if any(not (m2 >> (r - 1)) & 1 for r in req2) or m2.bit_count() < sizes[c2]:
                    ok = False
                    break
                new_cand[c2] = m2
            if not ok:
                continue
            chosen[c] = sel
            if rec(k + 1, new_cand):
                return True
            del chosen[c]
        return False

    return chosen if rec(0, init) else None


# -- bipartite patterns (p = 0) -----------------------------------------------

def _search_bipartite(g, pat: PatternSpec, required: Sequence[VertexRef],
                      require_split: bool) -> Optional[Embedding]:
    ell, m = pat.ell, pat.m
    ns = g.part_sizes
    for roles in itertools.product(_ROLES, repeat=3):
        xparts = [i for i in PARTS if roles[i - 1] == "X"]
        yparts = [i for i in PARTS if roles[i - 1] == "Y"]
        if sum(ns[i - 1] for i in xparts) < ell or sum(ns[i - 1] for i in yparts) < m:
            continue
        req_x = [r for r in required if roles[r.part - 1] == "X"]
        req_y = [r for r in required if roles[r.part - 1] == "Y"]
        if require_split and (len(req_x) != 1 or len(req_y) != 1):
            continue
        found = _fill_bipartite(g, ell, m, xparts, yparts, req_x, req_y)
        if found is not None:
            return Embedding(found)
    return None


def _fill_bipartite(g, ell: int, m: int, xparts: list[int], yparts: list[int],
                    req_x: list[VertexRef], req_y: list[VertexRef]):
    ns = g.part_sizes
    y_all = [VertexRef(i, b) for i in yparts for b in range(1, ns[i - 1] + 1)]
    if any(r not in y_all for r in req_y):
        return None
    y_rest = [y for y in y_all if y not in req_y]
    if len(req_y) > m:
        return None
    for extra in itertools.combinations(y_rest, m - len(req_y)):
        y_set = tuple(sorted(req_y + list(extra)))
        x_class = _x_choices(g, ell, xparts, y_set, req_x)
        if x_class is not None:
            return (frozenset(x_class), frozenset(y_set))
    return None


def _x_choices(g, ell: int, xparts: list[int], y_set, req_x: list[VertexRef]):
    # X vertices need no mutual edges, so the lexicographically first ell
    # common neighbours of the Y class (forced ones included) always serve
    cand: list[VertexRef] = []
    for i in xparts:
        mask = (1 << g.part_sizes[i - 1]) - 1
        for y in y_set:
            mask &= g.neighbors_mask(y.part, y.index, i)
            if not mask:
                break
        for b in iter_bits(mask):
            cand.append(VertexRef(i, b))
    if any(r not in cand for r in req_x):
        return None
    if len(cand) < ell:
        return None
    chosen = list(req_x)
    for c in cand:
        if len(chosen) == ell:
            break
        if c not in chosen:
            chosen.append(c)
    return sorted(chosen) if len(chosen) == ell else None
