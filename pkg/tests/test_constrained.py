"""Constrained solves forced through two vertices of an induced path."""

from __future__ import annotations

import pytest
from conftest import is_independent, path_graph, two_colorable

from p4p4free import constrained
from p4p4free.constrained import (
    _select_branch_vertex,
    solve_containing_ac,
    solve_containing_bd,
)
from p4p4free.errors import ClassViolation, InputError
from p4p4free.graph import Graph, bits, components, mask_of
from p4p4free.recognition import (
    InducedP4,
    enumerate_induced_p4,
    neighborhood_partition,
)
from p4p4free.split_solver import branch_via_bipartial
from p4p4free.testkit import (
    XorShift64Star,
    enumerate_maximal_is,
    gen_instance,
    oracle_wis_containing,
)


def first_p4(g: Graph) -> InducedP4:
    return enumerate_induced_p4(g)[0]


class TestPinnedShapes:
    def test_path4_through_first_and_third(self):
        g = path_graph(4)
        res = solve_containing_ac(g, InducedP4(0, 1, 2, 3))
        assert res.weight == 2
        assert res.chosen == (0, 2)

    def test_path4_through_second_and_fourth(self):
        g = path_graph(4)
        res = solve_containing_bd(g, InducedP4(0, 1, 2, 3))
        assert res.weight == 2
        assert res.chosen == (1, 3)

    def test_path5_picks_up_the_far_endpoint(self):
        g = path_graph(5)
        res = solve_containing_ac(g, InducedP4(0, 1, 2, 3))
        assert res.weight == 3
        assert res.chosen == (0, 2, 4)

    def test_forced_pair_beats_nothing_but_stays_forced(self):
        # the unconstrained optimum (endpoints, weight 20) is not available
        # here: the constraint pins the two light inner-position vertices
        g = path_graph(4, weights=(10, 1, 1, 10))
        res = solve_containing_bd(g, InducedP4(0, 1, 2, 3))
        assert res.chosen == (1, 3)
        assert res.weight == 11
        oracle = oracle_wis_containing(g, mask_of([1, 3]))
        assert res.weight == oracle.weight

    def test_reversal_positions(self):
        p = InducedP4(0, 1, 2, 3)
        r = p.reverse()
        assert (r.a, r.b, r.c, r.d) == (3, 2, 1, 0)
        assert {r.a, r.c} == {3, 1}


class TestErrors:
    def test_path_outside_host(self):
        g = path_graph(5)
        with pytest.raises(InputError):
            solve_containing_ac(g, InducedP4(0, 1, 2, 3), host=mask_of([0, 1, 2]))

    def test_triangle_on_the_path_neighborhood(self):
        # 4 sees both 0 and 1, so {0, 1, 4} is a triangle
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1)])
        with pytest.raises(ClassViolation) as err:
            solve_containing_ac(g, InducedP4(0, 1, 2, 3))
        kind, detail = err.value.witness
        assert kind == "triangle"
        assert detail == (0, 1, 4)


class TestBranchVertexSelection:
    def build(self):
        # two blocks: an edge {1, 2} and a singleton {3}; candidates 4..6
        edges = [(1, 2), (4, 1), (4, 3), (5, 1), (6, 1)]
        g = Graph.from_edges(7, edges)
        t_mask = mask_of([1, 2, 3])
        return g, components(g, t_mask), t_mask

    def test_prefers_more_contacted_blocks(self):
        g, comps, t_mask = self.build()
        assert _select_branch_vertex(g, [4, 5], comps, t_mask) == 4

    def test_containment_breaks_count_ties(self):
        # 5 and 6 tie on count with identical neighborhoods: smallest id
        g, comps, t_mask = self.build()
        assert _select_branch_vertex(g, [5, 6], comps, t_mask) == 5

    def test_strictly_contained_candidate_loses(self):
        edges = [(1, 2), (4, 1), (5, 1), (5, 2)]
        g = Graph.from_edges(6, edges)
        t_mask = mask_of([1, 2])
        comps = components(g, t_mask)
        # both contact the single block once, but N(4) ⊂ N(5) inside it
        assert _select_branch_vertex(g, [4, 5], comps, t_mask) == 5

    def test_selection_is_count_and_containment_maximal(self):
        # the chosen vertex must maximize contacted-block count and have a
        # neighborhood not strictly contained in any other candidate's
        rng = XorShift64Star(2024)
        for _ in range(60):
            n = 9 + rng.below(4)
            edges = []
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.chance(0.3):
                        edges.append((u, v))
            g = Graph.from_edges(n, edges)
            split = rng.below(n - 2) + 1
            cands = list(range(split))
            t_mask = mask_of(range(split, n))
            comps = components(g, t_mask)
            v = _select_branch_vertex(g, cands, comps, t_mask)
            counts = {
                u: sum(1 for c in comps if g.adj[u] & c) for u in cands
            }
            assert counts[v] == max(counts.values())
            nv = g.adj[v] & t_mask
            for u in cands:
                nu = g.adj[u] & t_mask
                assert not (nv & ~nu == 0 and nv != nu)


class TestAgainstOracle:
    def test_every_path_both_ops(self):
        rng = XorShift64Star(501)
        checked = 0
        for _ in range(60):
            n = 6 + rng.below(7)
            density = 0.3 + 0.1 * rng.below(6)
            model = "clustered" if rng.chance(0.7) else "rejection"
            g = gen_instance(model, n, density, rng.next_u64())
            for p in enumerate_induced_p4(g):
                got = solve_containing_ac(g, p)
                want = oracle_wis_containing(g, (1 << p.a) | (1 << p.c))
                assert got.weight == want.weight
                assert set(got.chosen) >= {p.a, p.c}
                assert is_independent(g, mask_of(got.chosen))

                got = solve_containing_bd(g, p)
                want = oracle_wis_containing(g, (1 << p.b) | (1 << p.d))
                assert got.weight == want.weight
                assert set(got.chosen) >= {p.b, p.d}
                checked += 1
        assert checked > 100

    def test_restricted_host(self):
        rng = XorShift64Star(733)
        done = 0
        while done < 25:
            n = 8 + rng.below(5)
            g = gen_instance("clustered", n, 0.5, rng.next_u64())
            host = g.full_mask
            for v in range(n):
                if rng.chance(0.25):
                    host &= ~(1 << v)
            paths = enumerate_induced_p4(g, host)
            if not paths:
                continue
            p = paths[rng.below(len(paths))]
            got = solve_containing_ac(g, p, host=host)
            want = oracle_wis_containing(g, (1 << p.a) | (1 << p.c), host=host)
            assert got.weight == want.weight
            done += 1

    def test_reversal_symmetry(self):
        rng = XorShift64Star(97)
        for _ in range(25):
            g = gen_instance("clustered", 6 + rng.below(7), 0.6, rng.next_u64())
            for p in enumerate_induced_p4(g)[:6]:
                assert (
                    solve_containing_bd(g, p).weight
                    == solve_containing_ac(g, p.reverse()).weight
                )

    def test_deterministic(self):
        g = gen_instance("clustered", 12, 0.6, 4242)
        p = first_p4(g)
        first = solve_containing_ac(g, p)
        second = solve_containing_ac(g, p)
        assert first.weight == second.weight
        assert first.chosen == second.chosen


class TestBranchCoverage:
    # spine 0-1-2-3 with one extra vertex per neighbor class and a block
    # {9,11} x {8,10} contacted partially from both sides: after the pair
    # (4, 5) is committed and 6 is picked, 7 is still bi-partial to the
    # surviving block, forcing the second phase through its branching path
    INTERLOCKED = [
        (0, 1), (1, 2), (2, 3),
        (4, 1), (5, 3),
        (6, 1), (6, 9),
        (7, 3), (7, 8),
        (9, 8), (9, 10), (11, 8), (11, 10),
    ]

    def test_bipartial_machinery_is_reached(self, monkeypatch):
        hits = []

        def counting(*args, **kwargs):
            hits.append(1)
            return branch_via_bipartial(*args, **kwargs)

        monkeypatch.setattr(constrained, "branch_via_bipartial", counting)
        g = Graph.from_edges(12, self.INTERLOCKED)
        p = InducedP4(0, 1, 2, 3)
        res = solve_containing_ac(g, p)
        assert hits
        assert res.weight == oracle_wis_containing(g, mask_of([0, 2])).weight

    def test_weighted_variants_match_oracle(self):
        rng = XorShift64Star(314)
        p = InducedP4(0, 1, 2, 3)
        for _ in range(20):
            weights = [1 + rng.below(50) for _ in range(12)]
            g = Graph.from_edges(12, self.INTERLOCKED, weights=weights)
            got = solve_containing_ac(g, p)
            want = oracle_wis_containing(g, mask_of([0, 2]))
            assert got.weight == want.weight
            got = solve_containing_bd(g, p)
            want = oracle_wis_containing(g, mask_of([1, 3]))
            assert got.weight == want.weight


class TestLeafRecording:
    def test_leaves_cover_every_maximal_set_through_the_pair(self):
        rng = XorShift64Star(616)
        covered = 0
        for _ in range(25):
            g = gen_instance("clustered", 7 + rng.below(5), 0.6, rng.next_u64())
            for p in enumerate_induced_p4(g)[:4]:
                leaves: list[int] = []
                solve_containing_ac(g, p, leaves=leaves)
                assert leaves
                part = neighborhood_partition(g, p)
                forced = (1 << p.a) | (1 << p.c)
                ground = forced | part.s_b | part.s_d | part.s_bd | part.anti
                for leaf in leaves:
                    assert leaf & forced == forced
                    assert leaf & ~ground == 0
                    assert two_colorable(g, leaf)
                for chosen in enumerate_maximal_is(g, host=ground):
                    m = mask_of(chosen)
                    assert any(m & ~leaf == 0 for leaf in leaves)
                    covered += 1
        assert covered > 30
