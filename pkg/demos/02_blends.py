"""Blends of two partitions of a finite set.

A blend takes every class from one of the two partitions.  The choice can
only be made per class of the join, so the blends are counted by the join
classes on which the partitions differ.
"""

from cliffblend.blendcore import (
    FinitePartition,
    blend_from_seed,
    enumerate_blends,
    is_blend,
    join_partitions,
    seed_from_blend,
    verify_subset_property,
)
from cliffblend.literals import parse_partition

p1 = parse_partition("{{1,2},{3,4},{5,6}}")
p2 = parse_partition("{{1,2},{3},{4},{5},{6}}")
print("P1 =", p1)
print("P2 =", p2)
print("join =", join_partitions(p1, p2))

blends = sorted(enumerate_blends(p1, p2), key=lambda p: p.blocks)
print(f"{len(blends)} blends:")
for b in blends:
    seed = sorted(x + 1 for x in seed_from_blend(b, p1, p2))
    print("  ", b, " seed", seed, " regenerated:", blend_from_seed(seed_from_blend(b, p1, p2), p1, p2) == b)

# a relation inside the union of two others need not be a blend
one_block = FinitePartition(2, ((0, 1),))
discrete = FinitePartition.discrete(2)
verdict = verify_subset_property(one_block, one_block, discrete)
print("discrete inside one block:", verdict.status, "| blend:", is_blend(discrete, one_block, one_block))
