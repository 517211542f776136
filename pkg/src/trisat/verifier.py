"""Certify or refute that a graph is a pattern-saturated subgraph of its host.

A graph G on the host's part sizes is pattern-saturated when it is
pattern-free and adding any host nonedge creates a copy of the pattern.
:func:`is_saturated` checks both halves exhaustively and returns a
machine-checkable :class:`SaturationReport`: either a forbidden-pattern
witness, or the full list of host nonedges whose addition completes no copy
(empty iff saturated).

Freeness is checked first.  Only then may the per-nonedge check restrict
itself to embeddings using both endpoints (that restriction is sound only
on pattern-free graphs); otherwise each nonedge is re-checked with the
unrestricted search on the augmented graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .containment import contains, contains_after
from .graphs import PARTS, TripartiteGraph, VertexRef, degree_profile, host_nonedges
from .patterns import Embedding, PatternSpec


class VerifierError(ValueError):
    """Invalid verification query."""


@dataclass
class SaturationReport:
    """Verdict plus witnesses for one saturation check."""

    pattern: PatternSpec
    part_sizes: tuple[int, int, int]
    is_pattern_free: bool
    forbidden_witness: Embedding | None
    violating_nonedges: list[tuple[VertexRef, VertexRef]]
    checked_nonedges: int
    degree_profile: tuple[int, int, int]

    @property
    def is_saturated(self) -> bool:
        return self.is_pattern_free and not self.violating_nonedges

    def to_json_obj(self) -> dict:
        witness = None
        if self.forbidden_witness is not None:
            witness = [sorted([v.part, v.index] for v in cl)
                       for cl in self.forbidden_witness.classes]
        return {
            "pattern": list(self.pattern.sizes),
            "parts": list(self.part_sizes),
            "is_saturated": self.is_saturated,
            "is_pattern_free": self.is_pattern_free,
            "forbidden_witness": witness,
            "violating_nonedges": [[u.part, u.index, v.part, v.index]
                                   for u, v in self.violating_nonedges],
            "checked_nonedges": self.checked_nonedges,
            "degree_profile": list(self.degree_profile),
        }


def is_saturated(g: TripartiteGraph, host_sizes: tuple[int, int, int],
                 pat: PatternSpec, *, early_exit: bool = False) -> SaturationReport:
    """Exhaustive saturation check of g inside the complete host.

    With ``early_exit`` the nonedge scan stops at the first violation; by
    default it scans everything so the report lists all violations.
    """
    if tuple(host_sizes) != g.part_sizes:
        raise VerifierError(
            f"graph part sizes {g.part_sizes} differ from host sizes {tuple(host_sizes)}")
    witness = contains(g, pat)
    free = witness is None
    violations: list[tuple[VertexRef, VertexRef]] = []
    checked = 0
    for u, v in host_nonedges(g):
        checked += 1
        if free:
            completed = contains_after(g, pat, u, v)
        else:
            completed = contains(g.with_edge(u, v), pat)
        if completed is None:
            violations.append((u, v))
            if early_exit:
                break
    return SaturationReport(
        pattern=pat,
        part_sizes=g.part_sizes,
        is_pattern_free=free,
        forbidden_witness=witness,
        violating_nonedges=violations,
        checked_nonedges=checked,
        degree_profile=degree_profile(g).delta,
    )


# -- degree-threshold diagnostics ------------------------------------------------

@dataclass(frozen=True)
class DegreeCheck:
    """Outcome of one named minimum-degree expectation on one part."""

    name: str
    part: int
    bound: int
    delta: int
    satisfied: bool
    offending: VertexRef | None
    applicable: bool
    note: str = ""


def degree_threshold_check(g: TripartiteGraph, pat: PatternSpec, *,
                           saturated: bool | None = None) -> list[DegreeCheck]:
    """Evaluate the minimum-degree facts expected of saturated graphs.

    For patterns of shape K_{l,l,m} every part should reach minimum degree
    2m, and for K_{l,l,l-2} with l >= 3 minimum degree 2l-2.  These hold
    under large-host hypotheses, so outcomes are diagnostics, never hard
    failures; callers that know the graph is not saturated should pass
    ``saturated=False`` to have the outcomes flagged not-applicable.
    """
    checks: list[tuple[str, int]] = []
    ell, m, p = pat.sizes
    if p >= 1 and ell == m:
        checks.append((f"min_degree_2m(m={p})", 2 * p))
    if p >= 1 and ell == m and p == ell - 2 and ell >= 3:
        checks.append((f"min_degree_2l_minus_2(l={ell})", 2 * ell - 2))
    applicable = saturated is not False
    note = "" if applicable else "graph is not saturated; thresholds do not apply"
    if saturated is None:
        note = "saturation not verified by caller"
    prof = degree_profile(g)
    out: list[DegreeCheck] = []
    for name, bound in checks:
        for i in PARTS:
            delta = prof.delta[i - 1]
            offending = None
            if delta < bound:
                for a in range(1, g.part_sizes[i - 1] + 1):
                    v = VertexRef(i, a)
                    if prof.degree(v) == delta:
                        offending = v
                        break
            out.append(DegreeCheck(
                name=name, part=i, bound=bound, delta=delta,
                satisfied=delta >= bound, offending=offending,
                applicable=applicable, note=note))
    return out


# -- residual-structure diagnostics ----------------------------------------------

@dataclass
class ResidualReport:
    """Triangle check and degree table on the vertices outside the hub sets."""

    triangle_free: bool
    triangle: tuple[VertexRef, VertexRef, VertexRef] | None
    degrees: dict  # VertexRef -> {other part: residual neighbour count}


def residual_structure_check(g: TripartiteGraph,
                             hubs: "list[set[int]]") -> ResidualReport:
    """Exact triangle search and degree table restricted to non-hub vertices.

    ``hubs`` lists, per part, the vertex indices excluded from the residual
    set (the hub sets S_i and T_i of a construction).
    """
    if len(hubs) != 3:
        raise VerifierError("expected one hub index set per part")
    res_masks = []
    for i in PARTS:
        n = g.part_sizes[i - 1]
        for a in hubs[i - 1]:
            if not 1 <= a <= n:
                raise VerifierError(f"hub index {a} out of range for part {i} of size {n}")
        mask = 0
        for a in range(1, n + 1):
            if a not in hubs[i - 1]:
                mask |= 1 << (a - 1)
        res_masks.append(mask)

    degrees: dict[VertexRef, dict[int, int]] = {}
    for i in PARTS:
        for a in range(1, g.part_sizes[i - 1] + 1):
            if not (res_masks[i - 1] >> (a - 1)) & 1:
                continue
            degrees[VertexRef(i, a)] = {
                j: (g.neighbors_mask(i, a, j) & res_masks[j - 1]).bit_count()
                for j in PARTS if j != i}

    triangle = None
    for a in range(1, g.part_sizes[0] + 1):
        if not (res_masks[0] >> (a - 1)) & 1:
            continue
        m2 = g.neighbors_mask(1, a, 2) & res_masks[1]
        m3 = g.neighbors_mask(1, a, 3) & res_masks[2]
        if not (m2 and m3):
            continue
        b = m2
        while b and triangle is None:
            low = b & -b
            bi = low.bit_length()
            b ^= low
            common = g.neighbors_mask(2, bi, 3) & m3
            if common:
                ci = (common & -common).bit_length()
                triangle = (VertexRef(1, a), VertexRef(2, bi), VertexRef(3, ci))
        if triangle is not None:
            break
    return ResidualReport(triangle_free=triangle is None, triangle=triangle,
                          degrees=degrees)
