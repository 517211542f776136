"""Exact and randomized computation of saturation numbers on small hosts.

A subgraph of the complete host is pattern-saturated iff it is a *maximal*
pattern-free subgraph, so the minimum over saturated subgraphs can be found
by branching over host edges.  :func:`sat_exact` runs a depth-first
branch-and-bound over the canonical edge order (include branch first) with
three sound prunings: an included edge may never complete a copy of the
pattern, the included count must stay below the incumbent, and every
excluded edge must remain completable by the edges not yet excluded.
Complete assignments that survive are exactly the saturated subgraphs.

:func:`sat_exhaustive` iterates all 2^|E(host)| subgraphs with vectorized
mask tests and is the independent oracle for ``sat_exact``.
:func:`enumerate_optima` collects every optimum up to part-respecting
isomorphism.  :func:`sat_greedy` draws seeded random edge permutations and
keeps each edge iff the graph stays pattern-free; the scan ends in a
maximal pattern-free, hence saturated, subgraph.

Exact search can split the branch tree into fixed subtrees solved
independently (processes; ``TRISAT_THREADS`` caps the worker count), and
results are identical for every worker count because subtrees never share
incumbents and are merged in deterministic order.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .containment import _assignments, contains_after
from .graphs import PAIR_ORDER, PARTS, GraphBuilder, TripartiteGraph, VertexRef, iso_equivalent
from .patterns import PatternSpec
from .rng import XorShift64Star
from .serialization import to_json_obj
from .verifier import is_saturated


class SearchError(ValueError):
    """Invalid search query or violated search guard."""


class _BudgetExhausted(Exception):
    pass


@dataclass
class SearchResult:
    """Outcome of one saturation-number computation."""

    value: int | None
    witnesses: list[TripartiteGraph]
    nodes_explored: int
    method: str  # "exact" | "exhaustive" | "greedy"
    status: str = "complete"  # or "budget_exhausted"
    seed: int | None = None
    trials: int | None = None
    trial_values: list[int] | None = None

    def to_json_obj(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "seed": self.seed,
            "trials": self.trials,
            "trial_values": self.trial_values,
            "witnesses": [to_json_obj(g) for g in self.witnesses],
        }


def resolve_workers(workers: int | None = None) -> int:
    """Requested worker count, the TRISAT_THREADS cap, or machine parallelism."""
    if workers is None:
        env = os.environ.get("TRISAT_THREADS", "").strip()
        if env:
            try:
                workers = int(env)
            except ValueError:
                raise SearchError(f"TRISAT_THREADS must be an integer, got {env!r}") from None
        else:
            workers = os.cpu_count() or 1
    return max(1, workers)


def _check_host_sizes(host_sizes) -> tuple[int, int, int]:
    sizes = tuple(int(n) for n in host_sizes)
    if len(sizes) != 3 or not (sizes[0] >= sizes[1] >= sizes[2] >= 1):
        raise SearchError(f"host sizes must satisfy n1 >= n2 >= n3 >= 1, got {host_sizes}")
    return sizes


def _host_edge_list(sizes: tuple[int, int, int]) -> list[tuple[int, int, int, int]]:
    out = []
    for i, j in PAIR_ORDER:
        for a in range(1, sizes[i - 1] + 1):
            for b in range(1, sizes[j - 1] + 1):
                out.append((i, a, j, b))
    return out


def _mask_to_graph(sizes: tuple[int, int, int], edges: list, mask: int) -> TripartiteGraph:
    b = GraphBuilder(sizes)
    for k, (i, a, j, bb) in enumerate(edges):
        if (mask >> k) & 1:
            b.add_edge(VertexRef(i, a), VertexRef(j, bb))
    return b.build()


def pattern_edge_masks(sizes: tuple[int, int, int], pat: PatternSpec) -> list[int]:
    """Edge bitmasks (over the canonical host edge list) of every embedding
    of the pattern in the complete host, deduplicated and sorted."""
    edges = _host_edge_list(sizes)
    idx = {e: k for k, e in enumerate(edges)}

    def cross_mask(groups: list[list[tuple[int, int]]]) -> int:
        mask = 0
        for g1 in range(len(groups)):
            for g2 in range(g1 + 1, len(groups)):
                for (i, a) in groups[g1]:
                    for (j, b) in groups[g2]:
                        key = (i, a, j, b) if i < j else (j, b, i, a)
                        mask |= 1 << idx[key]
        return mask

    masks: set[int] = set()
    if pat.p >= 1:
        for assignment in _assignments(pat.sizes):
            if any(sizes[assignment[c] - 1] < pat.sizes[c] for c in range(3)):
                continue
            ranges = [list(range(1, sizes[assignment[c] - 1] + 1)) for c in range(3)]
            for sel0 in itertools.combinations(ranges[0], pat.sizes[0]):
                for sel1 in itertools.combinations(ranges[1], pat.sizes[1]):
                    for sel2 in itertools.combinations(ranges[2], pat.sizes[2]):
                        groups = [[(assignment[c], x) for x in sel]
                                  for c, sel in enumerate((sel0, sel1, sel2))]
                        masks.add(cross_mask(groups))
    else:
        ell, m = pat.ell, pat.m
        for roles in itertools.product(("X", "Y"), repeat=3):
            xs = [(i, a) for i in PARTS if roles[i - 1] == "X"
                  for a in range(1, sizes[i - 1] + 1)]
            ys = [(i, a) for i in PARTS if roles[i - 1] == "Y"
                  for a in range(1, sizes[i - 1] + 1)]
            if len(xs) < ell or len(ys) < m:
                continue
            for xsel in itertools.combinations(xs, ell):
                for ysel in itertools.combinations(ys, m):
                    masks.add(cross_mask([list(xsel), list(ysel)]))
    return sorted(masks)


# -- branch-and-bound engine ----------------------------------------------------

class _BranchEngine:
    """DFS over host edges with incremental completion/viability counters.

    For each embedding mask we track how many of its edges are included and
    excluded.  Including an edge is illegal when some embedding would become
    fully included (the graph must stay pattern-free).  For every excluded
    edge f, ``viable[f]`` counts embeddings containing f whose other edges
    are all still includable; when it hits zero, no completion of f can ever
    exist and the branch dies.  At a full assignment every excluded edge is
    therefore completable and the included set is pattern-free: exactly the
    saturated subgraphs.
    """

    __slots__ = ("n_edges", "embeds", "emb_size", "by_edge", "enumerate_all",
                 "incl_cnt", "excl_cnt", "first_excl", "viable", "incl_mask",
                 "incl_total", "best", "witnesses", "nodes", "budget")

    def __init__(self, n_edges: int, embeds: list[int], enumerate_all: bool):
        self.n_edges = n_edges
        self.embeds = embeds
        self.emb_size = [m.bit_count() for m in embeds]
        self.by_edge = [[] for _ in range(n_edges)]
        for k, m in enumerate(embeds):
            mm = m
            while mm:
                low = mm & -mm
                self.by_edge[low.bit_length() - 1].append(k)
                mm ^= low
        self.enumerate_all = enumerate_all
        self.incl_cnt = [0] * len(embeds)
        self.excl_cnt = [0] * len(embeds)
        self.first_excl = [0] * len(embeds)
        self.viable = [0] * n_edges
        self.incl_mask = 0
        self.incl_total = 0
        self.best = n_edges + 1
        self.witnesses: list[int] = []
        self.nodes = 0
        self.budget: int | None = None

    def can_include(self, e: int) -> bool:
        for emb in self.by_edge[e]:
            if self.incl_cnt[emb] == self.emb_size[emb] - 1 and self.excl_cnt[emb] == 0:
                return False
        return True

    def include(self, e: int) -> None:
        for emb in self.by_edge[e]:
            self.incl_cnt[emb] += 1
        self.incl_mask |= 1 << e
        self.incl_total += 1

    def undo_include(self, e: int) -> None:
        for emb in self.by_edge[e]:
            self.incl_cnt[emb] -= 1
        self.incl_mask &= ~(1 << e)
        self.incl_total -= 1

    def exclude(self, e: int) -> bool:
        """Commit the exclusion; False when some excluded edge lost its last
        potential completion (caller must still undo)."""
        dead = False
        for emb in self.by_edge[e]:
            c = self.excl_cnt[emb] + 1
            self.excl_cnt[emb] = c
            if c == 1:
                self.first_excl[emb] = e
                self.viable[e] += 1
            elif c == 2:
                f = self.first_excl[emb]
                self.viable[f] -= 1
                if self.viable[f] == 0:
                    dead = True
        if self.viable[e] == 0:
            dead = True
        return not dead

    def undo_exclude(self, e: int) -> None:
        for emb in self.by_edge[e]:
            c = self.excl_cnt[emb]
            self.excl_cnt[emb] = c - 1
            if c == 1:
                self.viable[e] -= 1
            elif c == 2:
                self.viable[self.first_excl[emb]] += 1

    def apply_prefix(self, prefix: tuple[bool, ...]) -> bool:
        """Fix the first decisions (True = include); False if infeasible."""
        for e, inc in enumerate(prefix):
            if inc:
                if not self.can_include(e):
                    return False
                self.include(e)
            else:
                if not self.exclude(e):
                    return False
        return True

    def dfs(self, idx: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted
        if self.enumerate_all:
            if self.incl_total > self.best:
                return
        elif self.incl_total >= self.best:
            return
        if idx == self.n_edges:
            v = self.incl_total
            if v < self.best:
                self.best = v
                self.witnesses = [self.incl_mask]
            elif v == self.best and self.enumerate_all:
                self.witnesses.append(self.incl_mask)
            return
        if self.can_include(idx):
            self.include(idx)
            self.dfs(idx + 1)
            self.undo_include(idx)
        if self.exclude(idx):
            self.dfs(idx + 1)
        self.undo_exclude(idx)


def _solve_subtree(args):
    sizes, pat_sizes, prefix, enumerate_all = args
    pat = PatternSpec(*pat_sizes)
    embeds = pattern_edge_masks(sizes, pat)
    n_edges = len(_host_edge_list(sizes))
    eng = _BranchEngine(n_edges, embeds, enumerate_all)
    if not eng.apply_prefix(prefix):
        return (None, [], 0)
    eng.dfs(len(prefix))
    if not eng.witnesses:
        return (None, [], eng.nodes)
    return (eng.best, eng.witnesses, eng.nodes)


def _run_exact(sizes: tuple[int, int, int], pat: PatternSpec, *,
               enumerate_all: bool, node_budget: int | None,
               workers: int | None, max_host_edges: int | None) -> SearchResult:
    edges = _host_edge_list(sizes)
    n_edges = len(edges)
    if max_host_edges is not None and n_edges > max_host_edges:
        raise SearchError(
            f"host has {n_edges} edges, above the guard {max_host_edges}; "
            f"raise max_host_edges to search anyway")
    nworkers = resolve_workers(workers)
    method = "exact"
    embeds = pattern_edge_masks(sizes, pat)

    if nworkers <= 1 or node_budget is not None or n_edges < 4:
        # single tree; an exact node budget is only meaningful sequentially
        eng = _BranchEngine(n_edges, embeds, enumerate_all)
        eng.budget = node_budget
        status = "complete"
        try:
            eng.dfs(0)
        except _BudgetExhausted:
            status = "budget_exhausted"
        value = eng.best if eng.witnesses else None
        masks = eng.witnesses
        nodes = eng.nodes
    else:
        depth = 1
        while (1 << depth) < 2 * nworkers and depth < min(n_edges, 8):
            depth += 1
        prefixes = list(itertools.product((True, False), repeat=depth))
        args = [(sizes, pat.sizes, pf, enumerate_all) for pf in prefixes]
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            parts = list(pool.map(_solve_subtree, args))
        status = "complete"
        nodes = sum(p[2] for p in parts)
        found = [p for p in parts if p[0] is not None]
        if not found:
            value, masks = None, []
        else:
            value = min(p[0] for p in found)
            if enumerate_all:
                masks = [m for p in parts if p[0] == value for m in p[1]]
            else:
                masks = next(p[1] for p in parts if p[0] == value)

    witnesses = [_mask_to_graph(sizes, edges, m) for m in masks]
    if enumerate_all:
        kept: list[TripartiteGraph] = []
        for g in witnesses:
            if not any(iso_equivalent(g, h) for h in kept):
                kept.append(g)
        witnesses = kept
    elif witnesses:
        witnesses = witnesses[:1]
    return SearchResult(value=value, witnesses=witnesses, nodes_explored=nodes,
                        method=method, status=status)


def sat_exact(host_sizes, pat: PatternSpec, node_budget: int | None = None, *,
              workers: int | None = None, max_host_edges: int | None = 40) -> SearchResult:
    """Exact saturation number by branch-and-bound; one optimal witness.

    When ``node_budget`` is exhausted the result carries status
    ``budget_exhausted`` and the best incumbent found, never presented as
    the exact value.
    """
    sizes = _check_host_sizes(host_sizes)
    return _run_exact(sizes, pat, enumerate_all=False, node_budget=node_budget,
                      workers=workers, max_host_edges=max_host_edges)


def enumerate_optima(host_sizes, pat: PatternSpec, node_budget: int | None = None, *,
                     workers: int | None = None, max_host_edges: int | None = 40) -> SearchResult:
    """All minimum saturated subgraphs, deduplicated by part-respecting isomorphism."""
    sizes = _check_host_sizes(host_sizes)
    return _run_exact(sizes, pat, enumerate_all=True, node_budget=node_budget,
                      workers=workers, max_host_edges=max_host_edges)


def _popcounts(masks: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(masks)
    v = masks.astype(np.uint32)
    v = v - ((v >> 1) & 0x55555555)
    v = (v & 0x33333333) + ((v >> 2) & 0x33333333)
    v = (v + (v >> 4)) & 0x0F0F0F0F
    return (v * 0x01010101) >> 24


def sat_exhaustive(host_sizes, pat: PatternSpec) -> SearchResult:
    """Scan all subgraphs of the host; oracle for :func:`sat_exact`.

    A subgraph is saturated iff no embedding mask is contained in it and,
    for every absent host edge e, some embedding through e needs only e.
    Guarded to hosts with at most 16 edges.
    """
    sizes = _check_host_sizes(host_sizes)
    edges = _host_edge_list(sizes)
    n_edges = len(edges)
    if n_edges > 16:
        raise SearchError(f"sat_exhaustive guard: host has {n_edges} > 16 edges")
    embeds = pattern_edge_masks(sizes, pat)
    total = 1 << n_edges
    masks = np.arange(total, dtype=np.uint32)
    free = np.ones(total, dtype=bool)
    for em in embeds:
        em32 = np.uint32(em)
        free &= (masks & em32) != em32
    sat = free.copy()
    for e in range(n_edges):
        bit = np.uint32(1 << e)
        has = (masks & bit) != 0
        rests = [np.uint32(em & ~(1 << e)) for em in embeds if (em >> e) & 1]
        if rests:
            comp = np.zeros(total, dtype=bool)
            for r in rests:
                comp |= (masks & r) == r
            sat &= has | comp
        else:
            sat &= has
    counts = _popcounts(masks)
    hits = np.nonzero(sat)[0]
    value = int(counts[hits].min())
    winners = hits[counts[hits] == value]
    witnesses = [_mask_to_graph(sizes, edges, int(m)) for m in winners]
    return SearchResult(value=value, witnesses=witnesses, nodes_explored=total,
                        method="exhaustive")


def sat_greedy(host_sizes, pat: PatternSpec, trials: int, seed: int) -> SearchResult:
    """Randomized maximal pattern-free subgraphs; an upper-bound sampler.

    Each trial shuffles the host edges with the documented generator seeded
    by (seed, trial index) and keeps an edge iff the graph stays
    pattern-free, so every trial output is saturated.  Returns the minimum
    over trials; ties go to the earliest trial.  The returned witness is
    re-verified before being reported.
    """
    sizes = _check_host_sizes(host_sizes)
    if trials < 1:
        raise SearchError(f"need trials >= 1, got {trials}")
    edges = _host_edge_list(sizes)
    refs = [(VertexRef(i, a), VertexRef(j, b)) for i, a, j, b in edges]
    best_val: int | None = None
    best_graph: TripartiteGraph | None = None
    trial_values: list[int] = []
    scanned = 0
    for k in range(trials):
        rng = XorShift64Star.for_trial(seed, k)
        order = list(range(len(refs)))
        rng.shuffle(order)
        b = GraphBuilder(sizes)
        for e in order:
            scanned += 1
            u, v = refs[e]
            if contains_after(b, pat, u, v) is None:
                b.add_edge(u, v)
        g = b.build()
        trial_values.append(g.num_edges)
        if best_val is None or g.num_edges < best_val:
            best_val = g.num_edges
            best_graph = g
    report = is_saturated(best_graph, sizes, pat, early_exit=True)
    if not report.is_saturated:
        raise SearchError("internal error: greedy output failed saturation verification")
    return SearchResult(value=best_val, witnesses=[best_graph], nodes_explored=scanned,
                        method="greedy", seed=seed, trials=trials,
                        trial_values=trial_values)
