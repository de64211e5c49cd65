"""Stability of weighted point configurations on the projective line.

A configuration destabilizes when a coincidence block carries more than
half the weight; ties give strictly semistable points, and the polystable
ones among them are the equal-weight two-block splits.  When one symmetric
pair dominates, the quotient is the toric variety of an explicit box slice.
"""

import multicurve as mc
from multicurve.gitstab import Stability, all_partitions

weights = (1, 1, 1, 1)
print("weights", weights)
for blocks in ([{0}, {1}, {2}, {3}], [{0, 1}, {2}, {3}], [{0, 1, 2}, {3}]):
    print("  ", sorted(map(sorted, blocks)), "->",
          mc.classify_partition(weights, blocks))

print("\npolystable splits of (1,1,1,1):")
for left, right in mc.polystable_splits(weights):
    print("  ", [i + 1 for i in left], "|", [i + 1 for i in right])

# every symmetric tuple is nondegenerate, and any configuration avoiding
# all the symmetric diagonals is automatically semistable
sym = mc.symmetric_weights((2, 1, 3))
print("\nsymmetric", sym, "nondegenerate:", mc.is_nondegenerate(sym))
bad = 0
for part in all_partitions(6):
    if any({2 * i, 2 * i + 1} <= set(block)
           for block in part for i in range(3)):
        continue
    if mc.classify_partition(sym, part) is Stability.UNSTABLE:
        bad += 1
print("off-diagonal partitions that destabilize:", bad)

# a dominant pair collapses its diagonal and leaves a box-slice polytope
box = mc.toric_polytope((3, 3, 1, 1, 1, 1))
print("\n(3,3,1,1,1,1) box slice:", box.to_json_dict())
print("(7,7,1,1,2,2)  box slice bounds:",
      mc.toric_polytope((7, 7, 1, 1, 2, 2)).bounds)
