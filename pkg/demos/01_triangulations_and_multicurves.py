"""Triangulations, admissible colorings, and tracing multicurves.

Every multicurve on a punctured surface is pinned down by how many times
it crosses each arc of an ideal triangulation.  This walk-through builds
the classic small surfaces, checks which integer vectors are realizable
crossings, and reconstructs the curves behind them.
"""

import multicurve as mc

# --- the once-punctured torus -------------------------------------------

torus = mc.fixture("ex11")
print("once-punctured torus:", torus)
print("  edges (slot pairs):", torus.edges)
print("  one puncture, so a single vertex orbit:", len(torus.vertices))

# the vector (2,2,2) crosses every arc twice: that is the loop around the
# puncture, and tracing recovers it as a single component
print("\n(2,2,2) admissible:", mc.is_admissible(torus, (2, 2, 2)))
(component,) = mc.trace_components(torus, (2, 2, 2))
print("traced:", component)

# odd crossings cannot close up inside a triangle
print("(1,0,0) admissible:", mc.is_admissible(torus, (1, 0, 0)))

# --- corner coordinates --------------------------------------------------

# inside each triangle, strands turn at corners; the corner counts are the
# linear coordinates behind everything else in this package
u = mc.corner_coords(torus, (4, 2, 2))
print("\ncorner coordinates of (4,2,2):", u)
print("reassembled:", mc.from_corners(torus, u).values)

# --- flowers and folded triangles ---------------------------------------

daisy = mc.flower(5)
print("\nflower with 5 punctures:", daisy)
print("  folded triangles (doubled petal arcs):", daisy.folded_triangles())
for i, loop in enumerate(mc.peripheral_colorings(daisy)):
    print(f"  loop around puncture {i}: {loop.values} "
          f"(degree {mc.degree(daisy, loop)})")

# stripping peripheral components leaves the essential part of a multicurve
essential = next(b.coloring for b in mc.enumerate_barbell_trees(daisy)
                 if b.degree == 8)
mixed = mc.geometric_sum(daisy, essential,
                         mc.peripheral_colorings(daisy)[0])
stripped, counts = mc.strip_peripheral(daisy, mixed)
print("\nmixed curve stripped back:", stripped.values == essential.values,
      "peripheral multiplicities:", counts)
