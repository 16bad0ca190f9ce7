import random

import pytest

from convexcycles import (
    ConvexInstance,
    InputError,
    Transposition,
    TwoFactor,
    admits_crossing_free,
    construct_k3,
    insert_hull_edge,
    split_long_cycles,
    transposition_distance,
    uncross_all,
    uncross_step,
    unwind_transpositions,
    validate_cycling,
)
from conftest import (
    GOLDEN_SUBOPT_EDGES,
    GOLDEN_OPT_EDGES,
    oracle_count,
    random_insertion_point,
    random_instance,
    random_two_factor,
    same_pair_crossings,
)


class TestUncrossStep:
    def test_suboptimal_to_optimal(self, golden6):
        tf = TwoFactor.from_edges(golden6, GOLDEN_SUBOPT_EDGES)
        out = uncross_step(tf)
        assert out is not None
        assert out.edges == GOLDEN_OPT_EDGES
        assert oracle_count(out.edges) == 3

    def test_triangle_has_no_step(self):
        inst = ConvexInstance.of(3, 1, (1, 2, 3))
        tf = TwoFactor.from_edges(inst, [(0, 1), (1, 2), (0, 2)])
        assert uncross_step(tf) is None

    def test_random_steps_strictly_decrease(self):
        rng = random.Random(53)
        applied = 0
        for _ in range(100):
            inst = random_instance(rng, 3, 4)
            tf = random_two_factor(rng, inst)
            out = uncross_step(tf)
            if out is None:
                assert same_pair_crossings(tf) == 0
                continue
            applied += 1
            assert validate_cycling(inst, out.edges).ok
            assert oracle_count(out.edges) < oracle_count(tf.edges)
        assert applied > 50


class TestUncrossFixpoint:
    def test_suboptimal_resolved_in_one_step(self, golden6):
        tf = TwoFactor.from_edges(golden6, GOLDEN_SUBOPT_EDGES)
        assert uncross_all(tf).edges == GOLDEN_OPT_EDGES

    def test_crossing_free_unchanged(self):
        inst = ConvexInstance.of(3, 2, (1, 2, 3, 1, 2, 3))
        tf = TwoFactor.from_edges(inst, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert uncross_all(tf).edges == tf.edges

    def test_random_fixpoints_within_step_budget(self):
        rng = random.Random(59)
        for _ in range(100):
            inst = random_instance(rng, 4, 3)
            tf = random_two_factor(rng, inst)
            initial = tf.crossing_count
            steps = 0
            cur = tf
            while True:
                nxt = uncross_step(cur)
                if nxt is None:
                    break
                steps += 1
                assert steps <= initial
                cur = nxt
            assert same_pair_crossings(cur) == 0
            assert cur.crossing_count <= initial


class TestInsertHullEdge:
    def test_golden_case(self, golden6):
        # u=1 (first class), v=2 (second class): partners r=3, s=0
        tf = TwoFactor.from_edges(golden6, GOLDEN_SUBOPT_EDGES)
        out = insert_hull_edge(tf, 1, 2)
        assert out.edges == GOLDEN_OPT_EDGES
        assert out.crossing_count == tf.crossing_count - 1

    def test_crossing_partners_strictly_decrease(self):
        # when the removed edges ur and vs cross, the rewiring must win
        rng = random.Random(61)
        checked = 0
        for _ in range(400):
            inst = random_instance(rng, 3, rng.randint(2, 4))
            tf = random_two_factor(rng, inst)
            triple = random_insertion_point(rng, tf)
            if triple is None:
                continue
            u, v, r, s = triple
            e_ur = (min(u, r), max(u, r))
            e_vs = (min(v, s), max(v, s))
            from convexcycles import edges_cross

            if not edges_cross(e_ur, e_vs):
                continue
            out = insert_hull_edge(tf, u, v)
            assert out.crossing_count < tf.crossing_count
            checked += 1
        assert checked > 5

    def test_random_insertions_bounded(self):
        rng = random.Random(67)
        checked = 0
        while checked < 200:
            inst = random_instance(rng, 3, rng.randint(2, 4))
            tf = random_two_factor(rng, inst)
            triple = random_insertion_point(rng, tf)
            if triple is None:
                continue
            u, v, _, _ = triple
            out = insert_hull_edge(tf, u, v)
            checked += 1
            assert validate_cycling(inst, out.edges).ok
            assert (min(u, v), max(u, v)) in out.edges
            delta = oracle_count(out.edges) - oracle_count(tf.edges)
            assert delta <= 2

    def test_rejects_non_hull_pair(self, golden6):
        tf = TwoFactor.from_edges(golden6, GOLDEN_SUBOPT_EDGES)
        with pytest.raises(InputError):
            insert_hull_edge(tf, 0, 2)

    def test_rejects_wrong_class_order(self, golden6):
        tf = TwoFactor.from_edges(golden6, GOLDEN_SUBOPT_EDGES)
        with pytest.raises(InputError):
            insert_hull_edge(tf, 2, 1)

    def test_rejects_present_edge(self, golden6):
        tf = TwoFactor.from_edges(golden6, GOLDEN_OPT_EDGES)
        with pytest.raises(InputError):
            insert_hull_edge(tf, 1, 2)




class TestSplitLongCycles:
    def test_six_cycle_to_triangles(self):
        inst = ConvexInstance.of(3, 2, (1, 2, 3, 1, 2, 3))
        hexagon = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]
        tf = TwoFactor.from_edges(inst, hexagon)
        out = split_long_cycles(tf)
        assert sorted(map(sorted, out.cycles())) == [[0, 1, 2], [3, 4, 5]]
        assert out.crossing_count == 0

    def test_already_k_cycles_unchanged(self):
        inst = ConvexInstance.of(3, 2, (1, 2, 3, 1, 2, 3))
        tf = TwoFactor.from_edges(inst, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert split_long_cycles(tf).edges == tf.edges

    def test_k4_eight_cycle(self):
        inst = ConvexInstance.of(4, 2, (1, 2, 3, 4, 1, 2, 3, 4))
        octagon = [(i, (i + 1) % 8) for i in range(8)]
        tf = TwoFactor.from_edges(inst, octagon)
        out = split_long_cycles(tf)
        assert sorted(len(c) for c in out.cycles()) == [4, 4]
        assert out.crossing_count == 0

    def test_rejects_crossing_input(self, golden6):
        tf = TwoFactor.from_edges(golden6, GOLDEN_SUBOPT_EDGES)
        with pytest.raises(InputError):
            split_long_cycles(tf)

    def test_random_crossing_free_split(self):
        rng = random.Random(71)
        found = 0
        for _ in range(300):
            inst = random_instance(rng, rng.choice([3, 4]), rng.randint(2, 3))
            witness = admits_crossing_free(inst)
            if witness is None:
                continue
            # join two blocks into a longer cycle when possible, then split
            tf = witness.two_factor
            out = split_long_cycles(tf)
            found += 1
            assert all(len(c) == inst.k for c in out.cycles())
            assert out.crossing_count == 0
        assert found > 10


class TestUnwind:
    def test_golden_single_swap_reaches_exact_minimum(self, golden6):
        result = unwind_transpositions(golden6, [Transposition(1, 2)], mode="k3")
        assert result.two_factor.crossing_count == 3
        assert result.total_budget == 3
        assert not result.fallback_steps

    def test_empty_sequence_crossing_free(self):
        inst = ConvexInstance.of(3, 2, (1, 2, 3, 1, 2, 3))
        result = unwind_transpositions(inst, [], mode="generic")
        assert result.two_factor.crossing_count == 0

    def test_generic_budget_k4(self):
        inst = ConvexInstance.of(4, 2, (1, 1, 2, 2, 3, 3, 4, 4))
        dist = transposition_distance(inst)
        result = unwind_transpositions(inst, dist.witness, mode="generic")
        assert result.two_factor.crossing_count <= 4 * dist.distance

    def test_prefix_budgets_hold(self):
        rng = random.Random(73)
        for _ in range(30):
            inst = random_instance(rng, 3, 3)
            dist = transposition_distance(inst)
            for mode in ("generic", "k3"):
                result = unwind_transpositions(inst, dist.witness, mode=mode)
                spent = 0
                for step in result.steps:
                    spent += step.budget
                    assert step.crossings_after <= spent

    def test_same_class_swap_falls_back(self, golden6):
        # the trailing swap exchanges the two equal labels at 4,5 and
        # cannot use the insertion, so it gets the generic +4 budget
        seq = [Transposition(1, 2), Transposition(4, 5)]
        result = unwind_transpositions(golden6, seq, mode="k3")
        assert result.fallback_steps == (0,)
        assert result.steps[0].budget == 4
        assert result.two_factor.crossing_count <= result.total_budget

    def test_precondition_violation(self, golden6):
        with pytest.raises(InputError):
            unwind_transpositions(golden6, [], mode="k3")

    def test_k3_mode_needs_three_classes(self):
        inst = ConvexInstance.of(4, 2, (1, 2, 3, 4, 1, 2, 3, 4))
        with pytest.raises(InputError):
            unwind_transpositions(inst, [], mode="k3")


class TestConstructK3:
    def test_triangle(self):
        tf = construct_k3(ConvexInstance.of(3, 1, (1, 2, 3)))
        assert tf.crossing_count == 0

    def test_golden_meets_bound_with_equality(self, golden6):
        tf = construct_k3(golden6)
        assert tf.crossing_count == 3

    def test_random_n5_within_bound(self):
        rng = random.Random(79)
        for _ in range(50):
            inst = random_instance(rng, 3, 5)
            tf = construct_k3(inst)
            assert validate_cycling(inst, tf.edges).ok
            assert oracle_count(tf.edges) <= 30

    def test_rejects_other_k(self):
        with pytest.raises(InputError):
            construct_k3(ConvexInstance.of(4, 1, (1, 2, 3, 4)))
