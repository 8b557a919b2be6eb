"""Triangle search, induced-P4 enumeration, class membership, traces."""

from __future__ import annotations

import pytest
from conftest import (
    complete_graph,
    cycle_graph,
    is_independent,
    path_graph,
    petersen,
    random_graph,
    scan_member,
    scan_p4s,
    scan_triangles,
)

from p4p4free.errors import ClassViolation, InputError
from p4p4free.graph import Graph, anti_neighborhood, bits, mask_of
from p4p4free.recognition import (
    InducedP4,
    enumerate_induced_p4,
    find_induced_p4,
    find_triangle,
    is_class_member,
    neighborhood_partition,
)


class TestFindTriangle:
    def test_k3(self):
        assert find_triangle(complete_graph(3)) == (0, 1, 2)

    def test_c5_has_none(self):
        assert find_triangle(cycle_graph(5)) is None

    @pytest.mark.parametrize("seed", range(40))
    def test_agrees_with_three_subset_scan(self, seed):
        g = random_graph(seed, 12, 0.25)
        scans = scan_triangles(g)
        got = find_triangle(g)
        if scans:
            assert got == min(scans)  # lexicographically least witness
        else:
            assert got is None

    def test_host_restriction(self):
        g = complete_graph(4)
        assert find_triangle(g, mask_of([0, 1])) is None
        assert find_triangle(g, mask_of([1, 2, 3])) == (1, 2, 3)


class TestInducedP4Type:
    def test_of_validates_path_edges(self):
        g = path_graph(4)
        p = InducedP4.of(g, 0, 1, 2, 3)
        assert p.vertices == (0, 1, 2, 3)
        assert p.mask == mask_of([0, 1, 2, 3])

    def test_of_rejects_chords(self):
        g = cycle_graph(4)
        with pytest.raises(InputError):
            InducedP4.of(g, 0, 1, 2, 3)

    def test_of_rejects_missing_edge(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(InputError):
            InducedP4.of(g, 0, 1, 2, 3)

    def test_reverse_swaps_orientation(self):
        g = path_graph(4)
        p = InducedP4.of(g, 0, 1, 2, 3)
        assert p.reverse().vertices == (3, 2, 1, 0)
        assert p.reverse().mask == p.mask


class TestEnumerateP4:
    def test_path_has_exactly_one(self):
        got = enumerate_induced_p4(path_graph(4))
        assert [p.vertices for p in got] == [(0, 1, 2, 3)]

    def test_c5_has_exactly_five(self):
        assert len(enumerate_induced_p4(cycle_graph(5))) == 5

    def test_canonical_orientation_and_order(self):
        for seed in range(25):
            g = random_graph(seed, 10, 0.3)
            got = enumerate_induced_p4(g)
            assert all(p.a < p.d for p in got)
            keys = [p.vertices for p in got]
            assert keys == sorted(keys)

    @pytest.mark.parametrize("seed", range(25))
    def test_agrees_with_four_subset_scan(self, seed):
        g = random_graph(seed, 10, 0.3)
        assert {p.vertices for p in enumerate_induced_p4(g)} == scan_p4s(g)

    def test_host_restriction(self):
        g = path_graph(5)
        inside = enumerate_induced_p4(g, mask_of([0, 1, 2, 3]))
        assert [p.vertices for p in inside] == [(0, 1, 2, 3)]

    def test_find_first_matches_enumeration(self):
        for seed in range(15):
            g = random_graph(seed, 10, 0.3)
            all_p4s = enumerate_induced_p4(g)
            first = find_induced_p4(g, g.full_mask)
            if all_p4s:
                assert first is not None and first.vertices in {
                    p.vertices for p in all_p4s
                }
            else:
                assert first is None


class TestMembership:
    def test_two_far_apart_paths_rejected(self):
        g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
        verdict = is_class_member(g)
        assert not verdict.is_member
        p, q = verdict.p4_pair
        assert p.mask & q.mask == 0
        assert all(not g.adjacent(u, v) for u in p.vertices for v in q.vertices)

    def test_c5_accepted(self):
        assert is_class_member(cycle_graph(5)).is_member

    def test_triangle_rejected_with_witness(self):
        verdict = is_class_member(complete_graph(3))
        assert not verdict.is_member
        assert verdict.triangle == (0, 1, 2)

    def test_petersen_matches_exhaustive_scan(self):
        g = petersen()
        assert is_class_member(g).is_member == scan_member(g)

    @pytest.mark.parametrize("seed", range(60))
    def test_agrees_with_exhaustive_scan_on_random_graphs(self, seed):
        n = 8 + seed % 5
        g = random_graph(seed, n, 0.2 + (seed % 3) * 0.15)
        assert is_class_member(g).is_member == scan_member(g)

    def test_witnesses_are_genuine(self):
        for seed in range(40):
            g = random_graph(seed, 9, 0.3)
            verdict = is_class_member(g)
            if verdict.is_member:
                continue
            if verdict.triangle is not None:
                u, v, w = verdict.triangle
                assert g.adjacent(u, v) and g.adjacent(u, w) and g.adjacent(v, w)
            else:
                p, q = verdict.p4_pair
                assert p.mask & q.mask == 0
                assert all(
                    not g.adjacent(u, v) for u in p.vertices for v in q.vertices
                )


class TestNeighborhoodPartition:
    def test_single_far_endpoint_attachment(self):
        # x = 4 adjacent to both path endpoints' inner anchors a and c
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 2)])
        part = neighborhood_partition(g, InducedP4.of(g, 0, 1, 2, 3))
        assert part.s_ac == mask_of([4])
        assert (
            part.s_a | part.s_b | part.s_c | part.s_d | part.s_ad | part.s_bd
        ) == 0
        assert part.anti == 0

    def test_path_extension_lands_in_s_d(self):
        g = path_graph(5)
        part = neighborhood_partition(g, InducedP4.of(g, 0, 1, 2, 3))
        assert part.s_d == mask_of([4])
        assert part.anti == 0

    def test_adjacent_pair_trace_is_a_violation(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1)])
        with pytest.raises(ClassViolation) as exc:
            neighborhood_partition(g, InducedP4.of(g, 0, 1, 2, 3))
        kind, triangle = exc.value.witness
        assert kind == "triangle"
        assert triangle == (0, 1, 4)

    def test_sets_partition_the_host(self):
        checked = 0
        for seed in range(40):
            g = random_graph(seed, 10, 0.25)
            if not is_class_member(g).is_member:
                continue
            for p in enumerate_induced_p4(g):
                part = neighborhood_partition(g, p)
                groups = [
                    p.mask,
                    part.s_a,
                    part.s_b,
                    part.s_c,
                    part.s_d,
                    part.s_ac,
                    part.s_ad,
                    part.s_bd,
                    part.anti,
                ]
                union = 0
                for m in groups:
                    assert union & m == 0
                    union |= m
                assert union == g.full_mask
                assert part.anti == anti_neighborhood(g, p.mask)
                checked += 1
        assert checked > 20

    def test_traces_match_their_class(self):
        a_bit, b_bit, c_bit, d_bit = range(4)
        for seed in range(40):
            g = random_graph(seed, 10, 0.25)
            if not is_class_member(g).is_member:
                continue
            for p in enumerate_induced_p4(g):
                part = neighborhood_partition(g, p)
                pv = p.vertices
                expected = {
                    part.s_a: (True, False, False, False),
                    part.s_b: (False, True, False, False),
                    part.s_c: (False, False, True, False),
                    part.s_d: (False, False, False, True),
                    part.s_ac: (True, False, True, False),
                    part.s_ad: (True, False, False, True),
                    part.s_bd: (False, True, False, True),
                }
                for group, trace in expected.items():
                    for v in bits(group):
                        assert tuple(g.adjacent(v, x) for x in pv) == trace

    def test_independence_facts_inside_classes(self):
        """b-side and d-side class unions stay independent (no triangles)."""
        for seed in range(40):
            g = random_graph(seed, 10, 0.25)
            if not is_class_member(g).is_member:
                continue
            for p in enumerate_induced_p4(g):
                part = neighborhood_partition(g, p)
                assert is_independent(g, part.s_b | part.s_bd)
                assert is_independent(g, part.s_d | part.s_bd)
                assert is_independent(g, part.s_b)
                assert is_independent(g, part.s_c)

    def test_host_restriction(self):
        g = path_graph(5)
        part = neighborhood_partition(
            g, InducedP4.of(g, 0, 1, 2, 3), host=mask_of([0, 1, 2, 3])
        )
        assert part.s_d == 0
        assert part.anti == 0
