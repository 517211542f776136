#!/usr/bin/env python3
"""Mechanical saturation verification, on good and damaged graphs.

The verifier either certifies saturation or hands back a machine-checkable
refutation: a forbidden-pattern embedding, or the nonedges whose addition
completes nothing.
"""

from trisat import (PatternSpec, VertexRef, construction1, construction_c4,
                    degree_threshold_check, is_saturated, new_host)

pat = PatternSpec(1, 1, 1)
g = construction1(1, 1, 5, 5, 5)
rep = is_saturated(g, (5, 5, 5), pat)
print(f"construction 1 (l=m=1, host (5,5,5)) vs pattern {pat}:")
print(f"  pattern-free: {rep.is_pattern_free}")
print(f"  nonedges checked: {rep.checked_nonedges}, violations: {len(rep.violating_nonedges)}")
print(f"  saturated: {rep.is_saturated}")

print()
host = new_host(2, 2, 2)
rep2 = is_saturated(host, (2, 2, 2), pat)
print(f"the complete host itself vs {pat}:")
print(f"  pattern-free: {rep2.is_pattern_free}")
print(f"  witness classes: {[sorted(cl) for cl in rep2.forbidden_witness.classes]}")

print()
damaged = construction_c4(2, 2, 2).without_edge(VertexRef(1, 1), VertexRef(2, 2))
rep3 = is_saturated(damaged, (2, 2, 2), PatternSpec(2, 2, 0))
print("three-star C4 construction with one star edge deleted:")
print(f"  saturated: {rep3.is_saturated}")
print(f"  violating nonedges: {rep3.violating_nonedges}")
print("  (the deleted edge can be added back without creating a four-cycle)")

print()
g22 = construction1(2, 2, 8, 8, 8)
checks = degree_threshold_check(g22, PatternSpec(2, 2, 2), saturated=True)
print("degree diagnostics for the K(2,2,2) hub construction on (8,8,8):")
for c in checks:
    print(f"  part {c.part}: delta={c.delta} vs bound {c.bound} "
          f"({'ok' if c.satisfied else f'violated at {c.offending}'})")
