#!/usr/bin/env python3
"""Tour of the saturated-subgraph constructions.

Builds one instance of each construction family, prints its edge count
next to the matching closed-form value, and shows the hub / triangle /
residual layout that makes the edge counts work.
"""

from trisat import (construction1, construction2, construction3,
                    construction4, construction5, construction_c4,
                    degree_profile, f_c4, f_con1_upper, f_con3_upper,
                    f_con4_upper, f_con5_upper, hub_sets,
                    residual_structure_check)


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


banner("Construction 1: hubs of size m at the top index range (pattern K_{l,m,m})")
g = construction1(2, 1, 7, 6, 6)
rec = f_con1_upper(7, 6, 6, 2, 1)
print(f"l=2 m=1 host (7,6,6): {g.num_edges} edges, formula {rec.value}")
print("nonedge triple removed among the hub tops: "
     f"v1^7 v2^6, v1^7 v3^6, v2^6 v3^6")
prof = degree_profile(g)
print(f"minimum degrees per part: {prof.delta}")

banner("Construction 2: same body, a path of nonedges instead of a triangle")
g2 = construction2(1, 2, 2, 6, 6, 6)
print(f"variant 1, l=m=2, host (6,6,6): {g2.num_edges} edges "
      f"(= construction 1's {construction1(2, 2, 6, 6, 6).num_edges})")

banner("Construction 3: hubs of size m-1, residual circulants (pattern K_{l,m,p}, m > p)")
g3 = construction3(3, 2, 1, 6, 6, 6)
print(f"l=3 m=2 p=1 host (6,6,6): {g3.num_edges} edges, "
      f"formula {f_con3_upper(6, 6, 6, 3, 2, 1).value}")
res = residual_structure_check(g3, hub_sets("3", 3, 2, (6, 6, 6)))
degs = sorted({d for counts in res.degrees.values() for d in counts.values()})
print(f"residual degrees per pair fall in {degs} (cap l-m = 1)")

banner("Construction 4: balanced host, hub triangles T_i shave the residual")
g4 = construction4(3, 1, 12)
print(f"l=3 m=1 n=12: {g4.num_edges} edges, formula {f_con4_upper(12, 3, 1).value}")
res4 = residual_structure_check(g4, hub_sets("4", 3, 1, (12, 12, 12)))
print(f"residual triple triangle-free: {res4.triangle_free}; "
      f"every residual vertex has exactly l-m = 2 neighbours per part")

banner("Construction 5: the m > p balanced variant")
g5 = construction5(4, 2, 1, 8)
print(f"l=4 m=2 p=1 n=8: {g5.num_edges} edges, formula {f_con5_upper(8, 4, 2, 1).value}")

banner("The C4 three-star: n1+n2+n3 edges, saturated for the four-cycle")
gc = construction_c4(3, 2, 2)
print(f"host (3,2,2): {gc.num_edges} edges, formula {f_c4(3, 2, 2).value}")
print("edge set: v_i^1 joined to all of part i+1, cyclically")
