"""Tour of the exact-arithmetic geometry kernel.

Everything downstream (embedding, checking, deciding) rests on the primitives
shown here, so this demo doubles as a cheat sheet for the conventions: points
are pairs of fractions, "left" means counterclockwise, and no computation ever
touches a float.

Run:  python3 demos/01_geometry_tour.py
"""

from fractions import Fraction

from upse import (Orientation, Sidedness, classify_sides, convex_depth,
                  convex_hull, cross, is_convex_position, is_general_position,
                  is_one_sided, orientation, pt, segments_cross, PointSet)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("Exactness, or why we carry fractions around")

# Three points that ARE collinear: (1, 1/10) sits on the line from the origin
# to (3, 3/10).  Binary floating point cannot represent tenths, so the float
# cross product comes out nonzero and misclassifies the triple.
a = pt(0, 0)
b = pt(3, Fraction(3, 10))
c = pt(1, Fraction(1, 10))
exact = cross(a, b, c)
floaty = (float(b.x) - float(a.x)) * (float(c.y) - float(a.y)) \
    - (float(b.y) - float(a.y)) * (float(c.x) - float(a.x))
print(f"exact cross product : {exact}")
print(f"float cross product : {floaty}")
print(f"orientation(a, b, c): {orientation(a, b, c).name}")
assert orientation(a, b, c) is Orientation.COLLINEAR
assert floaty != 0  # the float lies

banner("Orientation is the sign of the cross product")

o, p, q = pt(0, 0), pt(4, 1), pt(1, 4)
print(f"orientation((0,0), (4,1), (1,4)) = {orientation(o, p, q).name}")
print(f"swap the last two and the sign flips: {orientation(o, q, p).name}")

banner("Segment crossing, shared endpoints allowed")

# Proper crossing.
print("X shape crosses:      ", segments_cross(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)))
# A shared endpoint alone is not a crossing; drawings of trees rely on this.
print("shared endpoint (V):  ", segments_cross(pt(0, 0), pt(2, 2), pt(0, 0), pt(2, 0)))
# But running along the same line does count as an overlap.
print("collinear overlap:    ", segments_cross(pt(0, 0), pt(2, 2), pt(1, 1), pt(3, 3)))

banner("Convex position, general position, hull")

square = PointSet([pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)])
dented = PointSet([pt(0, 0), pt(4, 0), pt(2, 1), pt(4, 4), pt(0, 4)])
print("square is convex position:", is_convex_position(square))
print("dented is convex position:", is_convex_position(dented))
print("square hull (ccw indices):", convex_hull(square))

grid = PointSet([pt(x, y) for x in range(3) for y in range(3)])
print("3x3 grid in general position:", is_general_position(grid),
      " (rows, columns and diagonals are collinear)")

banner("Convex depth counts hull peeling rounds")

onion = PointSet([pt(0, 0), pt(10, 1), pt(5, 12),     # outer shell
                  pt(4, 3), pt(6, 3), pt(5, 6)])      # inner shell
print("two nested triangles, depth:", convex_depth(onion))
print("square, depth:", convex_depth(square))

banner("Sidedness of a convex set")

# Bottom point, top point, and where everybody else falls relative to the
# upward line between them.  One-sided sets are the friendly inputs for the
# tree embedder; the interleaved two-sided sets are where trees start to fail.
parabola = PointSet([pt(i, i * i) for i in range(1, 7)])
mirrored = PointSet([pt(-i, i * i) for i in range(1, 7)])
zigzag = PointSet([pt(0, 0), pt(3, 1), pt(-3, 2), pt(3, 3), pt(-3, 4), pt(0, 5)])
for name, S in [("parabola", parabola), ("mirrored", mirrored), ("zigzag", zigzag)]:
    side = is_one_sided(S)
    split = classify_sides(S)
    print(f"{name:9s} {side.value:11s} left={split.left} right={split.right} "
          f"bottom={split.bottom} top={split.top}")
assert is_one_sided(parabola) is Sidedness.RIGHT_HEAVY
assert is_one_sided(mirrored) is Sidedness.LEFT_HEAVY
assert is_one_sided(zigzag) is Sidedness.TWO_SIDED

print()
print("done.")
