"""Named instance families: non-embeddable tree/point-set pairs and the
3-Partition reduction gadget.

The counterexample family pairs a (3n+1)-vertex tree made of three monotone
paths hanging off a junction vertex with a convex point set whose left and
right sides interleave in y. The generalized family keeps the underlying
shape but reorients the path arcs so the longest directed path has a chosen
length k; its first two arcs per path are fixed, the rest follow a canonical
zigzag of maximal runs of length k.

The reduction gadget turns a 3-Partition instance (bound B, 3m items with
B/4 < a < B/2) into a single-source digraph and a point set of matching size
m(B+1)+2 such that upward planar embeddability of the one into the other is
equivalent to solvability of the instance. Both reduction directions are
provided: packing a known partition into a drawing, and reading a partition
back out of any valid drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import geometry as geo
from .checker import verify_upse
from .digraph import Digraph
from .embedder import Mapping
from .errors import (BadN, BadParameters, ExtractionFailed, InvalidInstance,
                     InvalidSolution, NotAValidUPSE, NotConvex,
                     NotGeneralPosition, PropertyCheckFailed)
from .geometry import Point, PointSet, Sidedness, pt


def gen_binucci_tree(n: int) -> Digraph:
    """The (3n+1)-vertex tree with paths P_u reversed, P_v and P_w forward,
    joined at r by arcs r->u1, v1->r, w1->r. Requires odd n >= 5."""
    if n < 5 or n % 2 == 0:
        raise BadN(f"n must be an odd integer >= 5, got {n}")
    vertices = ["r"]
    vertices += [f"u{i}" for i in range(1, n + 1)]
    vertices += [f"v{i}" for i in range(1, n + 1)]
    vertices += [f"w{i}" for i in range(1, n + 1)]
    arcs = [(f"u{i + 1}", f"u{i}") for i in range(1, n)]
    arcs += [(f"v{i}", f"v{i + 1}") for i in range(1, n)]
    arcs += [(f"w{i}", f"w{i + 1}") for i in range(1, n)]
    arcs += [("r", "u1"), ("v1", "r"), ("w1", "r")]
    return Digraph.from_labels(vertices, arcs)


def gen_binucci_pointset(n: int) -> PointSet:
    """The (3n+1)-point convex set with sides of size (3n-1)/2 interleaved as
    y(b) < y(r1) < y(l1) < y(r2) < ... < y(t). Points sit on the rational
    unit circle; order is b, r1, l1, r2, l2, ..., t. Requires odd n >= 5."""
    if n < 5 or n % 2 == 0:
        raise BadN(f"n must be an odd integer >= 5, got {n}")
    half = (3 * n - 1) // 2
    points = [pt(0, -1)]
    for i in range(1, 2 * half + 1):
        s = Fraction(2 * i - 2 * half - 1, 2 * half + 1)
        x = (1 - s * s) / (1 + s * s)
        y = 2 * s / (1 + s * s)
        points.append(Point(x if i % 2 == 1 else -x, y))
    points.append(pt(0, 1))
    return PointSet(points)


def gen_kswitch_tree(n: int, k: int) -> Digraph:
    """A canonical member of the k-switch family on 3n+1 vertices: same shape
    as the counterexample tree, with each path's arcs laid out in alternating
    monotone runs of length k. P_u starts with u3->u2->u1; P_v and P_w start
    with v1->v2->v3 and w1->w2->w3. Requires n >= 5 and 2 <= k <= n-1."""
    if n < 5:
        raise BadParameters(f"n must be >= 5, got {n}")
    if not 2 <= k <= n - 1:
        raise BadParameters(f"k must satisfy 2 <= k <= n-1, got k={k}, n={n}")

    def path_arcs(prefix: str, start_backward: bool) -> list[tuple[str, str]]:
        out = []
        for j in range(1, n):
            backward = start_backward == (((j - 1) // k) % 2 == 0)
            a, b = f"{prefix}{j}", f"{prefix}{j + 1}"
            out.append((b, a) if backward else (a, b))
        return out

    vertices = ["r"]
    vertices += [f"u{i}" for i in range(1, n + 1)]
    vertices += [f"v{i}" for i in range(1, n + 1)]
    vertices += [f"w{i}" for i in range(1, n + 1)]
    arcs = path_arcs("u", True) + path_arcs("v", False) + path_arcs("w", False)
    arcs += [("r", "u1"), ("v1", "r"), ("w1", "r")]
    G = Digraph.from_labels(vertices, arcs)

    from .digraph import longest_directed_path_length
    got = longest_directed_path_length(G)
    if got != k:
        raise PropertyCheckFailed(f"canonical member has longest path {got}, wanted {k}")
    return G


@dataclass(frozen=True)
class PartitionInstance:
    """3-Partition instance: bound B and 3m items with B/4 < a < B/2."""

    B: int
    A: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.B, int) or self.B <= 0:
            raise InvalidInstance("B must be a positive integer")
        if len(self.A) == 0 or len(self.A) % 3 != 0:
            raise InvalidInstance("A must hold 3m items for some m >= 1")
        for a in self.A:
            if not isinstance(a, int) or a <= 0:
                raise InvalidInstance("items must be positive integers")
            if not (4 * a > self.B and 2 * a < self.B):
                raise InvalidInstance(f"item {a} violates B/4 < a < B/2 for B={self.B}")
        if sum(self.A) != self.m * self.B:
            raise InvalidInstance(f"items sum to {sum(self.A)}, expected m*B = {self.m * self.B}")

    @property
    def m(self) -> int:
        return len(self.A) // 3


@dataclass(frozen=True)
class PartitionSolution:
    """m disjoint index triples into A, each selecting items summing to B."""

    sets: tuple[tuple[int, int, int], ...]

    def check_against(self, inst: PartitionInstance) -> None:
        if len(self.sets) != inst.m:
            raise InvalidSolution(f"expected {inst.m} triples, got {len(self.sets)}")
        flat = [i for triple in self.sets for i in triple]
        if sorted(flat) != list(range(3 * inst.m)):
            raise InvalidSolution("triples must partition the item indices")
        for triple in self.sets:
            total = sum(inst.A[i] for i in triple)
            if total != inst.B:
                raise InvalidSolution(f"triple {triple} sums to {total}, expected {inst.B}")


@dataclass(frozen=True)
class GadgetInstance:
    """Reduction gadget: graph, point set, and the group structure of the points."""

    instance: PartitionInstance
    graph: Digraph
    points: PointSet
    groups: tuple[tuple[int, ...], ...]
    b_index: int
    t_index: int

    def top_of_group(self, i: int) -> int:
        """Point index of t(C_i), 1-based group number."""
        return self.groups[i - 1][-1]


def _sidedness_or_fail(sub: PointSet, what: str) -> Sidedness:
    # is_one_sided presupposes convex position; a violation is our failure too
    try:
        return geo.is_one_sided(sub)
    except (NotConvex, NotGeneralPosition) as exc:
        raise PropertyCheckFailed(f"{what}: {exc}") from exc


def _check_gadget_points(points: PointSet, groups, b_index: int, t_index: int) -> None:
    # the five structural properties; each failure falsifies the coordinate formula
    b, t = points[b_index], points[t_index]
    m = len(groups)
    if not geo.is_general_position(points):
        raise PropertyCheckFailed("gadget points not in general position")
    if any(p.y <= b.y for i, p in enumerate(points) if i != b_index) \
            or any(p.y >= t.y for i, p in enumerate(points) if i != t_index):
        raise PropertyCheckFailed("extremes are not extremal")
    for gi, grp in enumerate(groups, 1):
        sub = PointSet([points[i] for i in grp] + [b, t])
        if _sidedness_or_fail(sub, f"C_{gi} with extremes") is not Sidedness.LEFT_HEAVY:
            raise PropertyCheckFailed(f"C_{gi} with extremes is not left-heavy")
    for gi in range(m - 1):
        hi_low = min(points[i].y for i in groups[gi + 1])
        lo_high = max(points[i].y for i in groups[gi])
        if not hi_low > lo_high:
            raise PropertyCheckFailed(f"C_{gi + 2} is not entirely above C_{gi + 1}")
    for gi, grp in enumerate(groups, 1):
        top = points[grp[-1]]
        for gj, other in enumerate(groups, 1):
            for idx in other:
                if idx == grp[-1]:
                    continue
                p = points[idx]
                if gj <= gi and not geo.point_left_of_line(p, b, top):
                    raise PropertyCheckFailed(
                        f"point {idx} of C_{gj} is not left of line l_{gi}")
                if gj > gi and not geo.point_right_of_line(p, b, top):
                    raise PropertyCheckFailed(
                        f"point {idx} of C_{gj} is not right of line l_{gi}")
                if gj >= gi and not geo.point_right_of_line(p, t, top):
                    raise PropertyCheckFailed(
                        f"point {idx} of C_{gj} is not right of line f_{gi}")
    if m >= 2:
        tops = PointSet([points[grp[-1]] for grp in groups])
        if _sidedness_or_fail(tops, "group tops") is not Sidedness.LEFT_HEAVY:
            raise PropertyCheckFailed("group tops are not a left-heavy set")


def gadget_base_points(B: int, m: int):
    """The raw quadratic layout: m parabolic groups plus the two extremes.

    Returns (groups, b, t) where groups[g-1] lists the B+1 points of C_g in
    ascending y. Group C_{m-i} holds the points (-j - i(B+2), j^2 - (i(B+2))^2)
    for j = 1..B+1; the extremes are b = (-(B+1)^2 + ((m-1)(B+2))^2,
    (B+1)^2 - (m(B+2))^2) and t = (0, (m(B+2))^2).

    This layout is the documented coordinate formula, kept verbatim for spot
    checks. It is NOT always usable as-is: for many (B, m) it contains exact
    collinear triples (e.g. B=3, m=2 puts b on the line through the first and
    third points of C_1), which break general position and make the packed
    drawing of a solution self-overlapping. gen_gadget starts from this layout
    and clears the degeneracies; on clean inputs it reproduces it unchanged.
    """
    groups = []
    for g in range(1, m + 1):
        off = (m - g) * (B + 2)
        groups.append([pt(-j - off, j * j - off * off) for j in range(1, B + 2)])
    b = pt(-(B + 1) ** 2 + ((m - 1) * (B + 2)) ** 2,
           (B + 1) ** 2 - (m * (B + 2)) ** 2)
    t = pt(0, (m * (B + 2)) ** 2)
    return groups, b, t


def _has_degenerate_triple(new_pts: list[Point], placed: list[Point]) -> bool:
    # a collinear triple using at least one new point, or a repeated y
    placed_ys = {p.y for p in placed}
    if any(p.y in placed_ys for p in new_pts):
        return True
    pool = placed + new_pts
    base = len(placed)
    for k in range(base, len(pool)):
        for i in range(k):
            for j in range(i + 1, k):
                if geo.cross(pool[i], pool[j], pool[k]) == 0:
                    return True
    return False


def gen_gadget(inst: PartitionInstance) -> GadgetInstance:
    """Build the reduction gadget for a 3-Partition instance.

    The graph has a single source s, a sink t reached through m length-two
    paths s -> u_i -> t, and one monotone path of a_i vertices hanging off s
    per item. The points comprise m one-sided groups of B+1 points each on
    shifted parabolic arcs, plus extremes b and t below and above everything.

    Starting from gadget_base_points, two deterministic adjustments restore
    general position where the raw layout has exact collinear triples, while
    preserving every structural property the reduction argument uses:

    - each group may slide down by a minimal integer (usually 0) until it is
      collinearity-free against the points above it; the slide widens the
      band gaps and never moves x, so the bounding box is untouched;
    - b keeps its y but its x gains 1/Q for Q = y(t) - min y + 1. Any line
      through two of the integer points meets b's horizontal at an x whose
      reduced denominator divides some y-difference, hence is < Q; an x with
      reduced denominator exactly Q can therefore never lie on such a line;
    - b's integer x is raised to at least (m^2(B+2)^2 - (B+1)^2 - 2)/3, the
      exact threshold below which the bottom point of some group falls inside
      the hull of its own group plus the extremes. Walking down a group chain
      the edge into its bottom point has slope -3, so convexity at that point
      needs slope from it to b above -3; the raw x meets this for m >= 3 but
      is negative for m = 1 and sits at 2B+3 for m = 2, too far left for
      every B. Raising x only widens the left half-planes of the separating
      lines, so the other checked properties are unaffected.

    The five structural properties are re-verified on the final coordinates;
    a failure raises PropertyCheckFailed and means the generator is wrong.
    """
    B, m = inst.B, inst.m

    vertices = ["s", "t"] + [f"u{i}" for i in range(1, m + 1)]
    arcs = []
    for i in range(1, m + 1):
        arcs += [("s", f"u{i}"), (f"u{i}", "t")]
    for item, a in enumerate(inst.A, 1):
        vertices += [f"p{item}_{j}" for j in range(1, a + 1)]
        arcs.append(("s", f"p{item}_1"))
        arcs += [(f"p{item}_{j}", f"p{item}_{j + 1}") for j in range(1, a)]
    graph = Digraph.from_labels(vertices, arcs)

    base_groups, base_b, top = gadget_base_points(B, m)

    placed: list[Point] = [top]
    shifted: list[list[Point]] = []
    for grp in reversed(base_groups):  # top group first, sliding only downward
        ceiling = min(p.y for p in placed[1:]) if len(placed) > 1 else None
        v = 0
        while True:
            cand = [Point(p.x, p.y - v) for p in grp]
            if ceiling is not None and max(p.y for p in cand) >= ceiling:
                raise PropertyCheckFailed("group slide collapsed the band gap")
            if not _has_degenerate_triple(cand, placed):
                break
            v += 1
        shifted.append(cand)
        placed += cand
    shifted.reverse()

    q = top.y - min(p.y for p in placed) + 1
    convex_floor = (m * m * (B + 2) ** 2 - (B + 1) ** 2 - 2) // 3 + 1
    b = Point(max(base_b.x, convex_floor) + Fraction(1, q), base_b.y)

    points: list[Point] = []
    groups: list[tuple[int, ...]] = []
    for grp in shifted:
        groups.append(tuple(range(len(points), len(points) + B + 1)))
        points.extend(grp)
    b_index = len(points)
    points.append(b)
    t_index = len(points)
    points.append(top)
    S = PointSet(points)

    assert len(S) == graph.n == m * (B + 1) + 2
    _check_gadget_points(S, groups, b_index, t_index)
    return GadgetInstance(inst, graph, S, tuple(groups), b_index, t_index)


def solution_to_embedding(g: GadgetInstance, sol: PartitionSolution) -> Mapping:
    """Turn a partition into a drawing: s and t on the extremes, u_i on the top
    of C_i, and the triple's paths stacked upward on the B free points of C_i."""
    sol.check_against(g.instance)
    G = g.graph
    A = g.instance.A
    assignment = {"s": g.b_index, "t": g.t_index}
    for gi, triple in enumerate(sol.sets, 1):
        grp = g.groups[gi - 1]
        assignment[f"u{gi}"] = grp[-1]
        lo = 0
        for item in triple:
            block = grp[lo:lo + A[item]]
            lo += A[item]
            for j, p in enumerate(block, 1):
                assignment[f"p{item + 1}_{j}"] = p
        assert lo == len(grp) - 1
    return Mapping.from_labels(G, assignment)


def embedding_to_solution(g: GadgetInstance, M: Mapping) -> PartitionSolution:
    """Read a partition out of any valid drawing of the gadget: each item goes
    to the group whose points host its path."""
    bad = verify_upse(g.graph, g.points, M)
    if bad:
        raise NotAValidUPSE(str(bad[0]))
    G = g.graph
    group_of_point = {}
    for gi, grp in enumerate(g.groups, 1):
        for p in grp:
            group_of_point[p] = gi
    m = g.instance.m
    triples: list[list[int]] = [[] for _ in range(m)]
    for item, a in enumerate(g.instance.A, 1):
        homes = {group_of_point.get(M[G.index(f"p{item}_{j}")])
                 for j in range(1, a + 1)}
        if len(homes) != 1 or None in homes:
            raise ExtractionFailed(f"path of item {item} is not inside a single group")
        triples[next(iter(homes)) - 1].append(item - 1)
    sets = []
    for gi, triple in enumerate(triples, 1):
        if len(triple) != 3:
            raise ExtractionFailed(f"group {gi} hosts {len(triple)} paths, expected 3")
        if sum(g.instance.A[i] for i in triple) != g.instance.B:
            raise ExtractionFailed(f"group {gi} paths do not sum to the bound")
        sets.append(tuple(sorted(triple)))
    sol = PartitionSolution(tuple(sets))
    sol.check_against(g.instance)
    return sol
