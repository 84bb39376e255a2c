"""The 3-Partition gadget: numbers in, drawing out, numbers back.

Deciding upward point-set embeddability is NP-hard even for trees, by
reduction from 3-Partition.  An instance (B, 3m items) becomes one digraph
and one point set; triples summing to B correspond to ways of filling the m
point groups with the item paths.  This demo builds the gadget, packs a known
solution into a verified drawing, decodes the drawing back into triples, and
lets the exact solver loose on the smallest instance.

Run:  python3 demos/04_hardness_gadget.py
Writes demos/out/gadget.svg
"""

import pathlib

from upse import (ExtractionFailed, PartitionInstance, PartitionSolution,
                  PointSet, RenderSpec, decide_upse, embedding_to_solution,
                  gadget_base_points, gen_gadget, is_general_position,
                  render_svg, solution_to_embedding, verify_upse)

OUT = pathlib.Path(__file__).parent / "out"

inst = PartitionInstance(13, (4, 4, 5, 4, 4, 5))
g = gen_gadget(inst)
print(f"instance: B={inst.B}, items {inst.A}, m={inst.m} triples wanted")
print(f"gadget graph: {g.graph.n} vertices, {len(g.graph.arcs)} arcs")
print(f"gadget points: {len(g.points)} = {inst.m} groups of {inst.B + 1}, "
      "plus bottom b and apex t")
lo = min(p.y for p in g.points.points)
hi = max(p.y for p in g.points.points)
print(f"y range [{lo}, {hi}], all coordinates exact rationals")
print()

# Pack a solution: triples (0,1,2) and (3,4,5) both sum to 13.
sol = PartitionSolution(((0, 1, 2), (3, 4, 5)))
M = solution_to_embedding(g, sol)
assert verify_upse(g.graph, g.points, M) == []
print(f"packed solution {sol.sets} into a drawing; checker reports no violations")

back = embedding_to_solution(g, M)
assert back.sets == sol.sets
print(f"decoded the drawing back: {back.sets}, round trip exact")

# A different solution packs into a different drawing of the same gadget.
alt = PartitionSolution(((0, 1, 5), (2, 3, 4)))
M2 = solution_to_embedding(g, alt)
assert verify_upse(g.graph, g.points, M2) == []
assert embedding_to_solution(g, M2).sets == alt.sets
print(f"and likewise for {alt.sets}")
print()

# The raw coordinate formula needs repair before any of this works: at
# small sizes its raw output contains collinear triples (general position
# fails), so the generator slides groups down and nudges b until the set is
# clean, re-checking every structural property it relies on.
groups, b, t = gadget_base_points(3, 2)
raw = PointSet([p for grp in groups for p in grp] + [b, t])
small = gen_gadget(PartitionInstance(3, (1, 1, 1, 1, 1, 1)))
print(f"raw formula at the smallest size: general position {is_general_position(raw)}")
print(f"generator output at the same size: general position "
      f"{is_general_position(small.points)}")
print()

# Exact solver on the smallest gadget (10 points): embeddable, as it must be,
# since the all-ones instance is solvable.
res = decide_upse(small.graph, small.points)
assert res.result == "embeddable"
assert verify_upse(small.graph, small.points, res.mapping) == []
print(f"solver on the 10-point gadget: {res.result} "
      f"({res.nodes_explored} nodes), drawing verifies")

# Fine print: the solver returns SOME valid drawing, not necessarily one that
# respects the group layout.  With single-vertex item paths nothing pins the
# apex, so decoding a solver drawing can legitimately fail; only drawings made
# by solution_to_embedding are guaranteed decodable.
try:
    found = embedding_to_solution(small, res.mapping)
    print(f"the solver's drawing even decodes: {found.sets}")
except ExtractionFailed as exc:
    print(f"the solver's drawing does not follow the group layout ({exc});")
    print("decoding is only promised for drawings built from a solution")

OUT.mkdir(exist_ok=True)
path = OUT / "gadget.svg"
path.write_text(render_svg(g.points, g.graph, M, RenderSpec(labels=True)))
print(f"\nwrote {path}")
