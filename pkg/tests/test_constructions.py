from fractions import Fraction

import pytest

from upse import (BadN, BadParameters, ExtractionFailed, InvalidInstance,
                  InvalidSolution, Mapping, NotAValidUPSE, PartitionInstance,
                  PartitionSolution, cross, decide_upse, embedding_to_solution,
                  gadget_base_points, gen_binucci_pointset, gen_binucci_tree,
                  gen_gadget, gen_kswitch_tree, is_convex_position,
                  is_general_position, is_switch_tree,
                  longest_directed_path_length, pt, solution_to_embedding,
                  sources_and_sinks, underlying_is_tree, verify_upse)

from helpers import jarvis_hull


class TestBinucciTree:
    def test_shape_for_n5(self):
        T = gen_binucci_tree(5)
        assert T.n == 16 and len(T.arcs) == 15
        assert underlying_is_tree(T)
        assert longest_directed_path_length(T) == 4

    def test_roles_for_n7(self):
        T = gen_binucci_tree(7)
        sources, sinks = sources_and_sinks(T)
        lab = lambda vs: {T.vertices[v] for v in vs}
        assert lab(sources) == {"u7", "v1", "w1"}
        assert lab(sinks) == {"u1", "v7", "w7"}
        # r is neither: it has both in-arcs and an out-arc
        assert not is_switch_tree(T)

    def test_rejects_bad_n(self):
        for n in (3, 4, 6, 0, -5):
            with pytest.raises(BadN):
                gen_binucci_tree(n)


class TestBinucciPointset:
    def test_shape_for_n5(self):
        S = gen_binucci_pointset(5)
        assert len(S) == 16
        assert S[0] == (0, -1) and S[15] == (0, 1)
        assert is_general_position(S)
        assert is_convex_position(S)

    def test_all_points_on_unit_circle(self):
        S = gen_binucci_pointset(5)
        assert all(p.x * p.x + p.y * p.y == 1 for p in S)

    def test_sides_interleave_in_y(self):
        for n in (5, 7):
            S = gen_binucci_pointset(n)
            half = (3 * n - 1) // 2
            ys = [p.y for p in S]
            assert ys == sorted(ys) and len(set(ys)) == len(ys)
            rights = [i for i, p in enumerate(S) if p.x > 0]
            lefts = [i for i, p in enumerate(S) if p.x < 0]
            assert len(rights) == len(lefts) == half
            # ascending through the list, sides alternate r, l, r, l, ...
            assert rights == list(range(1, 2 * half + 1, 2))
            assert lefts == list(range(2, 2 * half + 1, 2))

    def test_rejects_bad_n(self):
        for n in (4, 2, -1):
            with pytest.raises(BadN):
                gen_binucci_pointset(n)


class TestKSwitchTree:
    def test_longest_path_is_exactly_k(self):
        for n in (5, 7, 9):
            for k in range(2, n):
                T = gen_kswitch_tree(n, k)
                assert T.n == 3 * n + 1
                assert underlying_is_tree(T)
                assert longest_directed_path_length(T) == k

    def test_extreme_k_reproduces_the_fixed_tree(self):
        for n in (5, 7):
            T = gen_kswitch_tree(n, n - 1)
            B = gen_binucci_tree(n)
            assert T.vertices == B.vertices
            assert set(T.arcs) == set(B.arcs)

    def test_first_runs_are_anchored(self):
        T = gen_kswitch_tree(9, 3)
        arcs = {(T.vertices[t], T.vertices[h]) for t, h in T.arcs}
        assert {("u3", "u2"), ("u2", "u1"), ("r", "u1")} <= arcs
        assert {("v1", "v2"), ("w1", "w2"), ("v1", "r"), ("w1", "r")} <= arcs

    def test_rejects_bad_parameters(self):
        for n, k in ((5, 1), (5, 5), (5, 0), (4, 2), (3, 2)):
            with pytest.raises(BadParameters):
                gen_kswitch_tree(n, k)


class TestPartitionInstance:
    def test_valid(self):
        inst = PartitionInstance(12, (4, 4, 4, 4, 4, 4))
        assert inst.m == 2

    def test_item_bounds(self):
        with pytest.raises(InvalidInstance):
            PartitionInstance(12, (3, 4, 5))  # 4*3 = 12 is not > 12
        with pytest.raises(InvalidInstance):
            PartitionInstance(12, (6, 4, 4))  # 2*6 = 12 is not < 12

    def test_wrong_count_and_sum(self):
        with pytest.raises(InvalidInstance):
            PartitionInstance(12, (4, 4))
        with pytest.raises(InvalidInstance):
            PartitionInstance(12, ())
        with pytest.raises(InvalidInstance):
            PartitionInstance(13, (4, 4, 4))  # sums to 12, not 13

    def test_bad_scalars(self):
        with pytest.raises(InvalidInstance):
            PartitionInstance(0, (1, 1, 1))
        with pytest.raises(InvalidInstance):
            PartitionInstance(12, (4, 4, "4"))


class TestPartitionSolution:
    def test_check_against(self):
        inst = PartitionInstance(13, (4, 4, 5, 4, 4, 5))
        PartitionSolution(((0, 1, 2), (3, 4, 5))).check_against(inst)
        PartitionSolution(((0, 4, 2), (3, 1, 5))).check_against(inst)
        with pytest.raises(InvalidSolution):  # triple sums to 12
            PartitionSolution(((0, 1, 3), (2, 4, 5))).check_against(inst)
        with pytest.raises(InvalidSolution):  # index 0 reused
            PartitionSolution(((0, 1, 2), (0, 4, 5))).check_against(inst)
        with pytest.raises(InvalidSolution):  # wrong triple count
            PartitionSolution(((0, 1, 2),)).check_against(inst)


def tiny_gadget():
    return gen_gadget(PartitionInstance(3, (1, 1, 1, 1, 1, 1)))


class TestGadgetStructure:
    def test_raw_formula_for_smallest_instance(self):
        groups, b, t = gadget_base_points(3, 2)
        assert [tuple(p) for p in groups[0]] == [
            (-6, -24), (-7, -21), (-8, -16), (-9, -9)]
        assert [tuple(p) for p in groups[1]] == [
            (-1, 1), (-2, 4), (-3, 9), (-4, 16)]
        assert tuple(b) == (9, -84)
        assert tuple(t) == (0, 100)
        # this raw layout is degenerate: b sits on the line of slope -4
        # through the first and third points of the lower group
        assert cross(pt(-6, -24), pt(-8, -16), b) == 0

    def test_exact_coordinates_for_smallest_instance(self):
        # groups and t survive the raw formula unchanged; b moves right to
        # 28 (the convexity floor) plus 1/125 (general-position nudge,
        # denominator = y-span 100 - (-24) + 1)
        g = tiny_gadget()
        assert g.instance.m == 2
        assert [tuple(g.points[i]) for i in g.groups[0]] == [
            (-6, -24), (-7, -21), (-8, -16), (-9, -9)]
        assert [tuple(g.points[i]) for i in g.groups[1]] == [
            (-1, 1), (-2, 4), (-3, 9), (-4, 16)]
        assert g.points[g.b_index] == pt(Fraction(28 * 125 + 1, 125), -84)
        assert tuple(g.points[g.t_index]) == (0, 100)

    def test_sizes_match(self):
        for B, A in ((3, (1,) * 6), (12, (4,) * 6), (13, (4, 4, 5, 4, 4, 5))):
            g = gen_gadget(PartitionInstance(B, A))
            m = len(A) // 3
            assert len(g.points) == g.graph.n == m * (B + 1) + 2
            assert len(g.groups) == m
            assert all(len(grp) == B + 1 for grp in g.groups)

    def test_graph_roles(self):
        g = gen_gadget(PartitionInstance(13, (4, 4, 5, 4, 4, 5)))
        G = g.graph
        sources, sinks = sources_and_sinks(G)
        assert {G.vertices[v] for v in sources} == {"s"}
        expected_sinks = {"t", "p1_4", "p2_4", "p3_5", "p4_4", "p5_4", "p6_5"}
        assert {G.vertices[v] for v in sinks} == expected_sinks
        assert underlying_is_tree(G) is False  # the m two-arc paths share s and t

    def test_extremes_and_group_bands(self):
        g = gen_gadget(PartitionInstance(12, (4,) * 6))
        S = g.points
        ys = [p.y for p in S]
        assert S[g.b_index].y == min(ys) and S[g.t_index].y == max(ys)
        assert g.top_of_group(1) == g.groups[0][-1]
        for grp in g.groups:
            grp_ys = [S[i].y for i in grp]
            assert grp_ys == sorted(grp_ys)
        assert max(S[i].y for i in g.groups[0]) < min(S[i].y for i in g.groups[1])


def left_of(a, b, p):
    # strictly left of the upward line a -> b, by raw cross product
    lo, hi = (a, b) if a.y < b.y else (b, a)
    return cross(lo, hi, p) > 0


class TestGadgetPointProperties:
    """The five structural facts, re-derived here from raw cross products."""

    def setup_method(self):
        self.g = gen_gadget(PartitionInstance(13, (4, 4, 5, 4, 4, 5)))
        S = self.g.points
        self.grps = [[S[i] for i in grp] for grp in self.g.groups]
        self.tops = [S[grp[-1]] for grp in self.g.groups]
        self.b = S[self.g.b_index]
        self.t = S[self.g.t_index]

    def test_whole_set_is_in_general_position(self):
        assert is_general_position(self.g.points)

    def test_each_group_with_extremes_is_one_sided_convex(self):
        for grp in self.grps:
            assert all(left_of(self.b, self.t, p) for p in grp)
            pts = grp + [self.b, self.t]
            assert len(jarvis_hull(pts)) == len(pts)

    def test_groups_are_stacked(self):
        for lo, hi in zip(self.grps, self.grps[1:]):
            assert max(p.y for p in lo) < min(p.y for p in hi)

    def test_lines_from_bottom_separate_prefixes(self):
        m = len(self.grps)
        for i in range(m):
            line_top = self.tops[i]
            for j in range(m):
                for p in self.grps[j]:
                    if p == line_top:
                        continue
                    assert left_of(self.b, line_top, p) == (j <= i)

    def test_lines_from_top_push_suffixes_right(self):
        m = len(self.grps)
        for i in range(m):
            line_top = self.tops[i]
            for j in range(i, m):
                for p in self.grps[j]:
                    if p == line_top:
                        continue
                    assert not left_of(line_top, self.t, p)

    def test_group_tops_are_one_sided(self):
        lo, hi = self.tops[0], self.tops[-1]
        assert all(left_of(lo, hi, p) for p in self.tops[1:-1])

    def test_group_prefix_plus_outside_point_stays_one_sided(self):
        # C_i with b and any single point of a higher group: still convex,
        # one-sided, with the two extras adjacent on the hull
        m = len(self.grps)
        for i in range(m):
            for j in range(i + 1, m):
                for x in self.grps[j]:
                    body = self.grps[i]
                    assert all(left_of(self.b, x, p) for p in body)
                    assert len(jarvis_hull(body + [self.b, x])) == len(body) + 2


class TestReductionDirections:
    def test_solution_packs_into_a_valid_drawing(self):
        g = gen_gadget(PartitionInstance(13, (4, 4, 5, 4, 4, 5)))
        sol = PartitionSolution(((0, 1, 2), (3, 4, 5)))
        M = solution_to_embedding(g, sol)
        assert verify_upse(g.graph, g.points, M) == []
        G = g.graph
        assert M[G.index("s")] == g.b_index
        assert M[G.index("t")] == g.t_index
        assert M[G.index("u1")] == g.top_of_group(1)
        assert M[G.index("u2")] == g.top_of_group(2)

    def test_round_trip_recovers_the_partition(self):
        g = gen_gadget(PartitionInstance(13, (4, 4, 5, 4, 4, 5)))
        for sets in (((0, 1, 2), (3, 4, 5)),
                     ((3, 4, 2), (0, 1, 5)),
                     ((0, 4, 2), (1, 3, 5))):
            sol = PartitionSolution(sets)
            back = embedding_to_solution(g, solution_to_embedding(g, sol))
            assert back.sets == tuple(tuple(sorted(t)) for t in sets)

    def test_rejects_invalid_solution(self):
        g = gen_gadget(PartitionInstance(13, (4, 4, 5, 4, 4, 5)))
        with pytest.raises(InvalidSolution):
            solution_to_embedding(g, PartitionSolution(((0, 1, 3), (2, 4, 5))))

    def test_rejects_invalid_drawing(self):
        g = tiny_gadget()
        sol = PartitionSolution(((0, 1, 2), (3, 4, 5)))
        M = solution_to_embedding(g, sol)
        # swapping the extremes points every s-arc downward
        a = list(M.assignment)
        si, ti = g.graph.index("s"), g.graph.index("t")
        a[si], a[ti] = a[ti], a[si]
        with pytest.raises(NotAValidUPSE):
            embedding_to_solution(g, Mapping(tuple(a)))

    def test_solver_drawings_need_not_respect_the_group_layout(self):
        # The smallest gadget admits valid drawings the decoder cannot use:
        # with single-vertex item paths nothing pins t to the apex point, so
        # the search is free to tuck t inside a group and park a path sink on
        # top.  Decoding is only guaranteed for drawings built by
        # solution_to_embedding; anything else may raise ExtractionFailed.
        g = tiny_gadget()
        res = decide_upse(g.graph, g.points)
        assert res.result == "embeddable"
        assert verify_upse(g.graph, g.points, res.mapping) == []
        try:
            sol = embedding_to_solution(g, res.mapping)
        except ExtractionFailed:
            ti = res.mapping[g.graph.index("t")]
            assert ti != g.t_index  # t was drawn away from the apex
        else:
            sol.check_against(g.instance)
