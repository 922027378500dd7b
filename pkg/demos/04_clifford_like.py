"""Clifford-like parallelisms over Q.

Over Q the quaternions contain many non-isomorphic maximal subfields, so
choosing left or right per isomorphism type gives many parallelisms.  Only
the two Clifford parallelisms themselves satisfy the double space axiom.
"""

from cliffblend import HAMILTON as H
from cliffblend.cliffordlike import (
    ParallelismDescriptor,
    build_parallelism,
    descriptors_equal,
    ds_check,
    ds_property_scan,
    triviality_scan,
)
from cliffblend.projgeom import Point, line_from_span

one, i, j, k = H.basis()

print("square classes of subfields F1+Fg, height <= 3:", sorted(triviality_scan(3), key=abs))

left, right = ParallelismDescriptor.left(), ParallelismDescriptor.right()
par = build_parallelism([line_from_span(one, i)])
print("blend taking the left class for subfields like Q(i):", par)

cmp = descriptors_equal(par, right)
w = cmp.witness
print(f"differs from right: through {w.point} the class of {w.line} gives {w.line1} vs {w.line2}")

r = ds_check(Point(one), Point(i), Point(j), left, right)
print("\n(DS) for left/right on F1, Fi, Fj: common point", r.common)
print("left/right scan:", ds_property_scan(left, right, 50, seed=42).holds, "of 50 hold")

summary = ds_property_scan(par, par, 200, seed=42)
cex = summary.counterexample
print(f"blend with itself: {summary.holds} of 200 hold; first failure at trial {summary.counterexample_trial}")
print("   lines", cex.m1, "and", cex.m2, "are skew")
