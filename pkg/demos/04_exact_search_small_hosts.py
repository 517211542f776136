#!/usr/bin/env python3
"""Exact saturation numbers on desk-scale hosts.

Saturated = maximal pattern-free, so branch-and-bound over host edges
settles small hosts exactly.  The four-cycle values land exactly on
n1+n2+n3, and optimum enumeration recovers the three-star construction.
"""

from trisat import (PatternSpec, construction_c4, enumerate_optima, f_c4,
                    iso_equivalent, sat_exact, sat_exhaustive)

print("the four-cycle proposition, reproduced exactly:")
for host in [(2, 2, 2), (3, 2, 2), (4, 3, 2), (3, 3, 3)]:
    r = sat_exact(host, PatternSpec(2, 2, 0), workers=1, max_host_edges=None)
    print(f"  sat({host}, C4) = {r.value} (formula {f_c4(*host).value}), "
          f"{r.nodes_explored} nodes")
print("  (the 40-edge host (4,4,3) also lands on 11 = 4+4+3, ~17M nodes)")

print()
print("branch-and-bound vs the all-subgraph scan:")
for host, ps in [((2, 2, 2), (1, 1, 1)), ((2, 2, 1), (2, 2, 1)),
                 ((3, 2, 2), (2, 1, 1))]:
    pat = PatternSpec(*ps)
    ex = sat_exact(host, pat, workers=1)
    bf = sat_exhaustive(host, pat)
    print(f"  host {host}, pattern {pat}: exact={ex.value}, exhaustive={bf.value}, "
          f"optima={len(bf.witnesses)}")

print()
print("all optima for C4 on (2,2,2), up to part-respecting isomorphism:")
r = enumerate_optima((2, 2, 2), PatternSpec(2, 2, 0), workers=1)
star = construction_c4(2, 2, 2)
for k, w in enumerate(r.witnesses):
    tag = " (the three-star construction)" if iso_equivalent(w, star) else ""
    print(f"  optimum {k}: {w.num_edges} edges{tag}")
    for u, v in w.edges():
        print(f"    {u} ~ {v}")

print()
print("uniqueness probe far below the proven size threshold:")
print("  at large parts the minimum K(1,1,1)-saturated subgraphs are exactly")
print("  the hub constructions; at (3,3,3) the value already matches but a")
print("  second optimum class shows up:")
from trisat import construction1, f_sat_lll  # noqa: E402

r3 = enumerate_optima((3, 3, 3), PatternSpec(1, 1, 1), workers=1)
hub = construction1(1, 1, 3, 3, 3)
print(f"  value={r3.value} (closed form {f_sat_lll(3, 3, 3, 1).value}), "
      f"optimum classes={len(r3.witnesses)}, "
      f"hub construction present={any(iso_equivalent(w, hub) for w in r3.witnesses)}")
