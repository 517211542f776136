#!/usr/bin/env python3
"""The closed-form landscape: exact values, bounds, and reference formulas.

Prints the exact saturation numbers for balanced and near-balanced
patterns at large part sizes, the sandwich around K_{l,l,l-2}, and the
classical reference values the tripartite results are compared against.
"""

from trisat import (f_bw, f_c4, f_con5_upper, f_ehm, f_fjpw, f_gks_lower,
                    f_lll2_lower, f_ms_upper, f_sat_lll, f_sat_lll1)

print("exact values at large part sizes")
for n, l in [(450, 2), (1000, 3)]:
    rec = f_sat_lll(n, n, n, l)
    print(f"  sat(K_({n},{n},{n}), K_({l},{l},{l}))   = {rec.value:>9}  "
          f"(hypothesis satisfied: {rec.hypothesis_satisfied})")
    rec1 = f_sat_lll1(n, n, n, l)
    print(f"  sat(K_({n},{n},{n}), K_({l},{l},{l-1})) = {rec1.value:>9}  "
          f"(hypothesis satisfied: {rec1.hypothesis_satisfied})")

print()
print("the K_(l,l,l-2) sandwich: lower bound vs construction, gap constant in n")
for l in (3, 4, 5):
    rows = []
    for n in (50, 500, 5000):
        lo = f_lll2_lower(n, l).value
        hi = f_con5_upper(n, l, l, l - 2).value
        rows.append((n, lo, hi, hi - lo))
    gap = {r[3] for r in rows}
    print(f"  l={l}: " + "; ".join(f"n={n}: [{lo}, {hi}]" for n, lo, hi, _ in rows)
          + f"  gap={gap.pop()}")

print()
print("the four-cycle: sat(K_(n1,n2,n3), C4) = n1+n2+n3")
for host in [(2, 2, 2), (3, 2, 2), (10, 7, 4)]:
    print(f"  {host}: {f_c4(*host).value}")

print()
print("reference values (classical results)")
print(f"  clique saturation sat(10, K_3) = {f_ehm(10, 3).value}")
print(f"  ordered bipartite sat for K_(2,2) in K_(5,5) sides = {f_bw(5, 5, 2, 2).value}")
print(f"  bipartite-host bounds for K_(2,3) at n=100: "
      f"[{f_gks_lower(100, 2, 3).value}, {f_ms_upper(100, 2, 3).value}]")
print(f"  multipartite triangle value at k=3, n=200 = {f_fjpw(3, 200).value} "
      f"(= sat_lll at l=1, n=200: {f_sat_lll(200, 200, 200, 1).value})")
