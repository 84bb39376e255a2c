"""Trees that refuse convex point sets.

Convex position alone does not guarantee a tree can be drawn upward and
crossing-free.  The witness is a 16-vertex tree made of three directed paths
glued at a root, paired with a convex set whose two hull sides interleave in
height.  The exact solver proves non-embeddability by exhausting the search
space; the switch-tree embedder shows the same point set is perfectly fine
for trees without long monotone runs.

Run:  python3 demos/03_counterexamples.py
"""

import time

from upse import (classify_sides, decide_upse, embed_switch_tree,
                  gen_binucci_pointset, gen_binucci_tree, gen_kswitch_tree,
                  is_switch_tree, longest_directed_path_length,
                  sources_and_sinks, verify_upse, Digraph)

n = 5
T = gen_binucci_tree(n)
S = gen_binucci_pointset(n)
split = classify_sides(S)
print(f"tree: {T.n} vertices, longest directed path "
      f"{longest_directed_path_length(T)} arcs (three length-{n - 1} paths at a root)")
print(f"set:  {len(S)} convex points, {len(split.left)} on the left side, "
      f"{len(split.right)} on the right, interleaved in y")

t0 = time.monotonic()
res = decide_upse(T, S)
dt = time.monotonic() - t0
assert res.result == "not_embeddable"
print(f"decide_upse: {res.result} ({res.nodes_explored} nodes, {dt:.2f}s)")
print()

# Shorten the monotone runs and the refusal persists.  k counts the length of
# the longest directed path; the family interpolates between the witness
# above (k = n-1) and switch trees (k = 1).
for k in (3, 2):
    Tk = gen_kswitch_tree(n, k)
    assert longest_directed_path_length(Tk) == k
    t0 = time.monotonic()
    res = decide_upse(Tk, S)
    dt = time.monotonic() - t0
    assert res.result == "not_embeddable"
    print(f"k={k} member of the family: {res.result} "
          f"({res.nodes_explored} nodes, {dt:.2f}s)")
print()

# Same point set, but a tree whose every vertex is a source or a sink: the
# constructive embedder succeeds without any search at all.
arcs = []
for child in range(1, 16):
    parent = (child - 1) // 2
    # orient by the parent's depth so levels alternate source/sink
    depth = (parent + 1).bit_length() - 1
    if depth % 2:
        arcs.append((child, parent))
    else:
        arcs.append((parent, child))
W = Digraph([f"x{i}" for i in range(16)], arcs)
assert is_switch_tree(W)
src, snk = sources_and_sinks(W)
m = embed_switch_tree(W, S)
assert verify_upse(W, S, m) == []
print(f"contrast: a 16-vertex switch tree ({len(src)} sources, {len(snk)} sinks)")
print("embeds on the very same convex set, no backtracking involved")
