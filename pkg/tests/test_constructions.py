"""Constructions: edge counts vs formulas, saturation, residual structure."""

import pytest

from trisat import (ConstructionError, PatternSpec, construction1,
                    construction2, construction3, construction4,
                    construction5, construction_c4, f_con1_upper,
                    f_con3_upper, f_con4_upper, f_con5_upper, hub_sets,
                    is_saturated, iso_equivalent, new_host, nonedges,
                    residual_structure_check, residual_triple_edges)
from trisat.constructions import build, smallest_guaranteed_n


def test_construction1_edge_counts_match_formula():
    for (l, m, n1, n2, n3, want) in [(1, 1, 4, 4, 4, 18), (2, 1, 7, 6, 6, 47),
                                     (1, 1, 5, 5, 5, 24)]:
        g = construction1(l, m, n1, n2, n3)
        assert g.num_edges == want == f_con1_upper(n1, n2, n3, l, m).value


def test_construction1_saturated():
    g = construction1(1, 1, 5, 5, 5)
    assert is_saturated(g, (5, 5, 5), PatternSpec(1, 1, 1)).is_saturated


def test_construction1_nonedge_count_inside_host():
    g = construction1(2, 1, 7, 6, 6)
    host = new_host(7, 6, 6)
    assert len(nonedges(g, host)) == host.num_edges - g.num_edges


def test_construction1_rejects_small_host_without_force():
    with pytest.raises(ConstructionError):
        construction1(3, 1, 5, 5, 5)  # needs n3 >= max(l+2, 3l-2m-1) = 6
    g = construction1(3, 1, 5, 5, 5, force=True)
    assert g.num_edges > 0


def test_construction2_matches_construction1_edge_count():
    g1 = construction1(2, 2, 6, 6, 6)
    g2 = construction2(1, 2, 2, 6, 6, 6)
    assert g1.num_edges == g2.num_edges
    assert g1 != g2  # different removal triples


def test_construction2_saturated_and_variants_equivalent():
    for variant in (1, 2, 3):
        g = construction2(variant, 2, 2, 6, 6, 6)
        assert is_saturated(g, (6, 6, 6), PatternSpec(2, 2, 2)).is_saturated
    assert iso_equivalent(construction2(1, 2, 2, 6, 6, 6), construction2(2, 2, 2, 6, 6, 6))


def test_construction2_rejects_m1():
    with pytest.raises(ConstructionError):
        construction2(1, 2, 1, 6, 6, 6)
    # forced: builds, but the verifier refutes saturation (a hub pair stays
    # completely joined, so the pattern is present)
    g = construction2(1, 1, 1, 5, 5, 5, force=True)
    rep = is_saturated(g, (5, 5, 5), PatternSpec(1, 1, 1))
    assert not rep.is_pattern_free and not rep.is_saturated


def test_construction3_edge_counts_and_saturation():
    g = construction3(2, 2, 1, 5, 5, 5)
    assert g.num_edges == 27 == f_con3_upper(5, 5, 5, 2, 2, 1).value
    assert is_saturated(g, (5, 5, 5), PatternSpec(2, 2, 1)).is_saturated
    g2 = construction3(3, 2, 1, 6, 6, 6)
    assert g2.num_edges == 48 == f_con3_upper(6, 6, 6, 3, 2, 1).value


def test_constructions_1_and_2_unbalanced_hosts():
    # the residual windows reduce modulo a different residual size per part
    for variant, l, m, host in [(None, 2, 1, (7, 6, 6)), (None, 3, 2, (8, 7, 6)),
                                (None, 3, 1, (9, 8, 7)), (1, 3, 2, (8, 7, 6)),
                                (1, 3, 3, (7, 6, 5))]:
        if variant is None:
            g = construction1(l, m, *host)
        else:
            g = construction2(variant, l, m, *host)
        assert g.num_edges == f_con1_upper(*host, l, m).value
        assert is_saturated(g, host, PatternSpec(l, m, m)).is_saturated


def test_construction3_unbalanced_host():
    g = construction3(3, 2, 1, 7, 5, 4)
    assert g.num_edges == f_con3_upper(7, 5, 4, 3, 2, 1).value
    assert is_saturated(g, (7, 5, 4), PatternSpec(3, 2, 1)).is_saturated


def test_construction3_rejects_p_not_below_m():
    with pytest.raises(ConstructionError):
        construction3(2, 2, 2, 5, 5, 5)


def test_construction3_residual_degree_caps():
    l, m, p = 4, 2, 1
    g = construction3(l, m, p, 7, 6, 4)
    res = residual_structure_check(g, hub_sets("3", l, m, (7, 6, 4)))
    w = l - m
    for v, counts in res.degrees.items():
        for j, d in counts.items():
            if v.part > j:
                # v sits in the smaller part of the pair (j, v.part):
                # exactly w residual neighbours by construction
                assert d == w
            else:
                assert d <= w


def test_construction4_small_t_matches_construction1_shape():
    g4 = construction4(1, 1, 5)
    g1 = construction1(1, 1, 5, 5, 5)
    assert g4.num_edges == g1.num_edges
    assert iso_equivalent(g4, g1)  # hubs sit at opposite index ranges


def test_construction4_edge_count_and_saturation():
    g = construction4(3, 1, 12)
    assert g.num_edges == 129 == f_con4_upper(12, 3, 1).value
    assert is_saturated(g, (12, 12, 12), PatternSpec(3, 1, 1)).is_saturated


def test_construction4_residual_triangle_free_and_regular():
    g = construction4(3, 1, 12)
    res = residual_structure_check(g, hub_sets("4", 3, 1, (12, 12, 12)))
    assert res.triangle_free
    assert all(d == 2 for counts in res.degrees.values() for d in counts.values())


def test_construction4_boundary_uses_halved_realization():
    # at the smallest guaranteed n the cyclic windows would close a
    # triangle; the halves realization keeps the residual triangle-free
    for (l, m) in [(3, 1), (4, 2)]:
        n = smallest_guaranteed_n("4", l, m)
        g = construction4(l, m, n)
        res = residual_structure_check(g, hub_sets("4", l, m, (n, n, n)))
        assert res.triangle_free
        assert is_saturated(g, (n, n, n), PatternSpec(l, m, m)).is_saturated


def test_construction4_refuses_unrealizable_residual():
    # odd residual size 7 with degree 3 admits neither realization
    with pytest.raises(ConstructionError):
        construction4(4, 1, 9)


def test_construction4_forced_build_judged_by_verifier():
    # forcing the refused regime falls back to plain windows; the residual
    # then contains a triangle, yet the verifier certifies this particular
    # build anyway (triangle-freeness is sufficient, not necessary, here)
    g = construction4(4, 1, 9, force=True)
    res = residual_structure_check(g, hub_sets("4", 4, 1, (9, 9, 9)))
    assert not res.triangle_free
    assert g.num_edges == f_con4_upper(9, 4, 1).value == 114
    assert is_saturated(g, (9, 9, 9), PatternSpec(4, 1, 1)).is_saturated


def test_residual_triple_edges_regimes():
    assert residual_triple_edges(5, 0) == []
    window = residual_triple_edges(5, 2)   # 5 >= 3*2 - 1
    halves = residual_triple_edges(4, 2)   # 4 < 5, but even with half >= 2
    assert len(window) == 3 * 2 * 5 and len(halves) == 3 * 2 * 4
    with pytest.raises(ConstructionError):
        residual_triple_edges(7, 3)


def test_construction5_small_t_equals_construction3():
    assert construction5(2, 2, 1, 5) == construction3(2, 2, 1, 5, 5, 5)


def test_construction5_edge_count_and_saturation():
    g = construction5(4, 2, 1, 8)
    assert g.num_edges == 84 == f_con5_upper(8, 4, 2, 1).value
    assert is_saturated(g, (8, 8, 8), PatternSpec(4, 2, 1)).is_saturated


def test_construction5_residual_regular_per_pair():
    g = construction5(4, 2, 1, 8)
    res = residual_structure_check(g, hub_sets("5", 4, 2, (8, 8, 8)))
    assert all(d == 2 for counts in res.degrees.values() for d in counts.values())
    # triangle-freeness is not part of this construction's contract


def test_construction_c4_star_shape():
    g = construction_c4(2, 2, 2)
    assert g.num_edges == 6
    assert is_saturated(g, (2, 2, 2), PatternSpec(2, 2, 0)).is_saturated
    assert construction_c4(3, 2, 2).num_edges == 7
    # spanning: every vertex is covered by one of the three stars
    assert all(g.degree(v) >= 1 for v in g.vertices())


def test_constructions_deterministic():
    specs = [("1", dict(l=2, m=1, n1=5, n2=5, n3=4)),
             ("4", dict(l=3, m=1, n1=7, n2=7, n3=7)),
             ("5", dict(l=4, m=2, p=1, n1=8, n2=8, n3=8))]
    for which, kw in specs:
        a = build(which, kw["n1"], kw["n2"], kw["n3"], l=kw.get("l"),
                  m=kw.get("m"), p=kw.get("p"))
        b = build(which, kw["n1"], kw["n2"], kw["n3"], l=kw.get("l"),
                  m=kw.get("m"), p=kw.get("p"))
        assert a == b and a.edges() == b.edges()


def test_smallest_guaranteed_n_values():
    assert smallest_guaranteed_n("1", 1, 1) == 3
    assert smallest_guaranteed_n("1", 3, 2) == 5
    assert smallest_guaranteed_n("3", 2, 2, 1) == 2
    assert smallest_guaranteed_n("4", 3, 1) == 6
    assert smallest_guaranteed_n("5", 4, 2, 1) == 4
    assert smallest_guaranteed_n("c4") == 2
