"""Best independent set forced through two fixed path vertices.

Given an induced path a-b-c-d, the optimum among independent sets
containing {a, c} lives in the subgraph of vertices adjacent to neither a
nor c: the b-only, d-only and b-and-d neighbor classes plus the path's
anti-neighborhood.  That subgraph is attacked by a covering family of
branches: drop both one-letter classes, drop one, or commit to a concrete
non-adjacent pair (one vertex from each one-letter class) and run an
iterative selection loop whose kept residuals are handled by a second
phase (bi-partial machinery over the class opposite the picked vertex,
bottoming out in a split-instance solve once the opposite-class-plus-anti
region is verified path-free).

The {b, d} variant is the same computation on the reversed path.
"""

from __future__ import annotations

from .errors import ClassViolation, InputError, StructureViolation
from .graph import (
    ContactClass,
    Graph,
    SolveResult,
    bits,
    certified_result,
    components,
    components_with_certificates,
    contact_class,
)
from .recognition import InducedP4, find_induced_p4, neighborhood_partition
from .split_solver import _certified_members, _solve_raw, branch_via_bipartial

__all__ = ["solve_containing_ac", "solve_containing_bd"]


def _select_branch_vertex(g: Graph, cands: list[int], t_comps: list[int], t_mask: int) -> int:
    """The loop's pick: most contacted blocks (singletons count), then a
    containment-maximal neighborhood inside the block region, then id."""
    counts = {v: sum(1 for c in t_comps if g.adj[v] & c) for v in cands}
    top = max(counts.values())
    maxers = [v for v in cands if counts[v] == top]
    keep = []
    for v in maxers:
        nv = g.adj[v] & t_mask
        dominated = any(
            u != v and nv & ~(g.adj[u] & t_mask) == 0 and nv != g.adj[u] & t_mask
            for u in maxers
        )
        if not dominated:
            keep.append(v)
    return min(keep)


def _has_bipartial(g: Graph, vertices: int, members) -> bool:
    for v in bits(vertices):
        for m in members:
            if not m.trivial and g.adj[v] & m.members:
                if contact_class(g, v, m) is ContactClass.BI_PARTIAL:
                    return True
    return False


def _solve_second_phase(
    g: Graph,
    stars: int,
    passive: int,
    active: int,
    both: int,
    anti: int,
    host: int,
    depth: int,
    hard: bool,
    leaves,
):
    """Handle a kept residual: branch away remaining bi-partial contacts of
    the active class, then reduce to a split instance.

    ``hard`` records whether the caller verified that no active-class
    vertex was bi-partial to any block of the pre-removal block region; in
    that situation the reduced region is guaranteed path-free, so finding a
    path there is a class violation rather than a case to branch on.
    """
    if depth > g.n + 8:
        raise RuntimeError(
            "constrained branching exceeded its depth budget; "
            "structure assumptions must have been violated undetected"
        )
    members = _certified_members(g, anti & host)
    if _has_bipartial(g, active & host, members):

        def redispatch(host2: int, depth2: int):
            return _solve_second_phase(
                g, stars, passive, active, both, anti, host2, depth2, False, leaves
            )

        return branch_via_bipartial(g, host, active, anti, redispatch, depth)
    region = (active | anti) & host
    found = find_induced_p4(g, region)
    if found is None:
        return _solve_raw(
            g, stars | passive | both, active | anti, host, depth, 0, leaves
        )
    if hard:
        raise ClassViolation(
            "reduced region contains an induced four-vertex path although "
            "no bi-partial contact was left",
            ("unexpected_p4", found.vertices),
        )
    # fall back to plain anti-neighborhood branching on a path vertex
    x = found.a
    keep = _solve_second_phase(
        g, stars, passive, active, both, anti, host & ~g.adj[x], depth + 1, False, leaves
    )
    drop = _solve_second_phase(
        g, stars, passive, active, both, anti, host & ~(1 << x), depth + 1, False, leaves
    )
    return keep if keep[0] >= drop[0] else drop


def _pair_branch(g: Graph, part, sb: int, sd: int, leaves):
    """Best independent set of the reduced host containing the pair."""
    stars = (1 << sb) | (1 << sd)
    host = (part.s_b | part.s_d | part.s_bd | part.anti) & ~(g.adj[sb] | g.adj[sd])
    best = (-1, 0)
    depth = 1
    while True:
        live_b = part.s_b & host & ~stars
        live_d = part.s_d & host & ~stars
        if not (live_b | live_d):
            cand = _solve_raw(g, stars | part.s_bd, part.anti, host, depth, 0, leaves)
            return cand if cand[0] > best[0] else best
        t_mask = part.anti & host
        t_comps = components(g, t_mask)
        v = _select_branch_vertex(g, list(bits(live_b | live_d)), t_comps, t_mask)
        if live_b >> v & 1:
            active, passive = part.s_d, part.s_b
        else:
            active, passive = part.s_b, part.s_d
        picked = stars | (1 << v)
        keep_host = host & ~g.adj[v]
        anchored = _certified_members(g, t_mask)
        hard = not _has_bipartial(g, active & keep_host & ~picked, anchored)
        cand = _solve_second_phase(
            g,
            picked,
            passive & ~picked,
            active & ~picked,
            part.s_bd,
            part.anti,
            keep_host,
            depth + 1,
            hard,
            leaves,
        )
        if cand[0] > best[0]:
            best = cand
        host &= ~(1 << v)
        depth += 1


def solve_containing_ac(
    g: Graph, p: InducedP4, host: int | None = None, leaves: list[int] | None = None
) -> SolveResult:
    """Maximum weight independent set of g[host] containing {p.a, p.c}.

    Optional ``leaves`` collects the base-case host masks (with the two
    forced vertices merged in), the raw material of cover extraction.

    Raises:
        InputError: p not inside the host.
        ClassViolation: the host violates the supported class in a way the
            branching relies on (witness attached).
    """
    if host is None:
        host = g.full_mask
    g._check_host(host)
    if p.mask & ~host:
        raise InputError("the path must lie inside the host")
    part = neighborhood_partition(g, p, host)
    mark = len(leaves) if leaves is not None else 0
    best = (-1, 0)
    try:
        # class-dropping branches: no b- and no d-class, d-class only,
        # b-class only
        for s_role in (part.s_bd, part.s_d | part.s_bd, part.s_b | part.s_bd):
            cand = _solve_raw(
                g, s_role, part.anti, s_role | part.anti, 0, 0, leaves
            )
            if cand[0] > best[0]:
                best = cand
        for one_b in bits(part.s_b):
            for one_d in bits(part.s_d):
                if not g.adjacent(one_b, one_d):
                    cand = _pair_branch(g, part, one_b, one_d, leaves)
                    if cand[0] > best[0]:
                        best = cand
    except StructureViolation as err:
        # every block region examined here sits inside the path's
        # anti-neighborhood, so a four-vertex path found in one is
        # vertex-disjoint from and non-adjacent to p: a forbidden pair
        if err.witness[0] == "incomplete_block" and err.witness[2] is not None:
            q = err.witness[2]
            raise ClassViolation(
                "an induced four-vertex path lies fully outside another's "
                "closed neighborhood",
                ("p4_pair", (p.vertices, q.vertices)),
            ) from None
        raise
    forced = (1 << p.a) | (1 << p.c)
    if leaves is not None:
        for i in range(mark, len(leaves)):
            leaves[i] |= forced
    return certified_result(g, best[1] | forced)


def solve_containing_bd(
    g: Graph, p: InducedP4, host: int | None = None, leaves: list[int] | None = None
) -> SolveResult:
    """Maximum weight independent set of g[host] containing {p.b, p.d}.

    The second and fourth vertices of the path are the first and third of
    its reversal, so this is the {a, c} computation on the reversed path.
    """
    return solve_containing_ac(g, p.reverse(), host, leaves)
