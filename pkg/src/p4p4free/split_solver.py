"""Exact WIS on hosts made of an independent part over a block part.

A split instance is a host V = S ⊎ T where S is independent and G[T] is a
disjoint union of singletons and complete bipartite blocks.  In the
supported graph class, at most one connected component of such a host can
fail the complete-bipartite certificate (two failing components would each
contain an induced P4, and the pair would be forbidden).  The dispatcher
therefore solves every certified component by side selection and recurses
only into the single uncertified one, choosing a branch vertex whose
anti-neighborhood branching provably lands back in simpler shapes.

All branching is of the form max(solve(host minus N(v)), solve(host minus
v)) or a covering family of induced-subgraph restrictions, so the optimum
is preserved regardless of which structural sub-case was detected; the
structural claims themselves are enforced as assertions that surface as
StructureViolation/ClassViolation instead of silent wrong answers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClassViolation, InputError, StructureViolation
from .graph import (
    Component,
    ContactClass,
    Graph,
    bits,
    certified_result,
    components_with_certificates,
    contact_class,
    neighborhood,
    SolveResult,
)
from .recognition import find_induced_p4, find_triangle

__all__ = [
    "SplitInstance",
    "PartialOrderDigraph",
    "solve_split",
    "order_less",
    "build_order_digraph",
    "branch_via_bipartial",
]


@dataclass(frozen=True)
class SplitInstance:
    """A host split into an independent part and a block part.

    Attributes:
        g: the ambient graph.
        s_part: independent vertex set (bitmask).
        t_part: vertex set whose induced subgraph is a disjoint union of
            singletons and complete bipartite blocks (bitmask).
    """

    g: Graph
    s_part: int
    t_part: int

    def __post_init__(self):
        g = self.g
        g._check_host(self.s_part)
        g._check_host(self.t_part)
        if self.s_part & self.t_part:
            raise InputError("the two parts must be disjoint")
        for v in bits(self.s_part):
            if g.adj[v] & self.s_part:
                raise InputError(f"independent part has an internal edge at {v}")
        for comp in components_with_certificates(g, self.t_part).parts:
            if comp.sides is None:
                raise InputError(
                    "block part has a component that is not complete bipartite"
                )

    @property
    def host(self) -> int:
        return self.s_part | self.t_part


@dataclass(frozen=True)
class PartialOrderDigraph:
    """Digraph of the branching order on the independent part.

    There is an edge (u, v) exactly when ``order_less(inst, u, v)``; the
    solver only ever needs one sink, but the full digraph is exposed so
    tests can verify acyclicity directly.
    """

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def sinks(self) -> tuple[int, ...]:
        out = {u for u, _ in self.edges}
        return tuple(v for v in self.nodes if v not in out)

    def is_acyclic(self) -> bool:
        succ = {v: [] for v in self.nodes}
        for u, v in self.edges:
            succ[u].append(v)
        state: dict[int, int] = {}  # 1 = on stack, 2 = done

        def dfs(v: int) -> bool:
            state[v] = 1
            for w in succ[v]:
                mark = state.get(w)
                if mark == 1:
                    return False
                if mark is None and not dfs(w):
                    return False
            state[v] = 2
            return True

        return all(state.get(v) == 2 or dfs(v) for v in self.nodes)


def _count_bipartial(g: Graph, v: int, members) -> int:
    """Nontrivial members of ``members`` that v is bi-partial to."""
    n = 0
    for m in members:
        if not m.trivial and g.adj[v] & m.members:
            if contact_class(g, v, m) is ContactClass.BI_PARTIAL:
                n += 1
    return n


def order_less(inst: SplitInstance, u: int, v: int) -> bool:
    """True when v is bi-partial to two or more nontrivial blocks of the
    block part with N(u) removed."""
    if u == v:
        raise InputError("order is irreflexive")
    for w in (u, v):
        if not inst.s_part >> w & 1:
            raise InputError(f"vertex {w} is not in the independent part")
    residual = inst.t_part & ~inst.g.adj[u]
    members = components_with_certificates(inst.g, residual).parts
    return _count_bipartial(inst.g, v, members) >= 2


def build_order_digraph(inst: SplitInstance) -> PartialOrderDigraph:
    nodes = tuple(bits(inst.s_part))
    edges = []
    for u in nodes:
        residual = inst.t_part & ~inst.g.adj[u]
        members = components_with_certificates(inst.g, residual).parts
        for v in nodes:
            if v != u and _count_bipartial(inst.g, v, members) >= 2:
                edges.append((u, v))
    return PartialOrderDigraph(nodes, tuple(edges))


def _certified_members(g: Graph, t_live: int):
    members = components_with_certificates(g, t_live).parts
    for m in members:
        if m.sides is None:
            tri = find_triangle(g, m.members)
            if tri is not None:
                raise ClassViolation(
                    "block part contains a triangle", ("triangle", tri)
                )
            # connected, triangle-free and not complete bipartite forces an
            # induced four-vertex path; attach it for callers that can tell
            # whether it is separated from their branch path
            raise StructureViolation(
                "block part lost its complete-bipartite shape",
                ("incomplete_block", m.members, find_induced_p4(g, m.members)),
            )
    return members


def _bad_comp_witness(g: Graph, first: int, second: int):
    """Turn two uncertified components into a concrete forbidden pattern."""
    for comp in (first, second):
        tri = find_triangle(g, comp)
        if tri is not None:
            raise ClassViolation(
                "triangle inside a branching host", ("triangle", tri)
            )
    p = find_induced_p4(g, first)
    q = find_induced_p4(g, second)
    # a triangle-free component without a certificate must contain a path
    raise ClassViolation(
        "two separated components each carry an induced four-vertex path",
        ("p4_pair", (p.vertices, q.vertices)),
    )


def branch_via_bipartial(g, host, active, t_mask, redispatch, depth):
    """Branch around a vertex of ``active`` that is bi-partial to a block.

    Precondition: some vertex of ``active & host`` is bi-partial to a
    nontrivial block of ``t_mask & host``.  When every such vertex touches
    exactly one block this picks the contact-richest one and splits its
    kept residual along the (at most one, asserted) second bi-partial
    region; otherwise it finds a sink of the branching order first.  Every
    residual is handed back to ``redispatch`` for re-examination, so this
    routine is agnostic to what the caller does at its base cases.
    """
    t_live = t_mask & host
    act = active & host
    members = _certified_members(g, t_live)
    bp_of: dict[int, list[Component]] = {}
    for s in bits(act):
        found = [
            m
            for m in members
            if not m.trivial
            and g.adj[s] & m.members
            and contact_class(g, s, m) is ContactClass.BI_PARTIAL
        ]
        if found:
            bp_of[s] = found
    if not bp_of:
        raise InputError("no bi-partial vertex to branch on")

    if any(len(found) >= 2 for found in bp_of.values()):
        # several blocks involved: branch on a sink of the order digraph,
        # which guarantees the kept residual has single-block contacts only
        sink = None
        act_list = list(bits(act))
        for v in act_list:
            residual_members = components_with_certificates(
                g, t_live & ~g.adj[v]
            ).parts
            if all(
                w == v or _count_bipartial(g, w, residual_members) < 2
                for w in act_list
            ):
                sink = v
                break
        if sink is None:
            raise StructureViolation(
                "branching order has no sink", ("order_cycle", tuple(act_list))
            )
        keep = redispatch(host & ~g.adj[sink], depth + 1)
        drop = redispatch(host & ~(1 << sink), depth + 1)
        return keep if keep[0] >= drop[0] else drop

    # single-block case: pick the vertex contacting the most nontrivial blocks
    pick = -1
    pick_count = -1
    for s in sorted(bp_of):
        cnt = sum(1 for m in members if not m.trivial and g.adj[s] & m.members)
        if cnt > pick_count:
            pick, pick_count = s, cnt
    prime = bp_of[pick][0].members  # the block `pick` is bi-partial to

    kept = host & ~g.adj[pick]
    # at most one other block region may still hold a bi-partial vertex
    z_struct = components_with_certificates(g, (t_live & ~prime) & kept)
    regions = []
    for z in z_struct.parts:
        if z.trivial or z.sides is None:
            continue
        if any(
            contact_class(g, s, z) is ContactClass.BI_PARTIAL
            for s in bits(act & ~z.members)
            if g.adj[s] & z.members
        ):
            regions.append(z.members)
    if len(regions) > 1:
        raise StructureViolation(
            "more than one bi-partial region beside the chosen block",
            ("extra_bipartial_regions", tuple(regions)),
        )
    other = 0
    if regions:
        other = next(m.members for m in members if m.members & regions[0])

    residuals = [kept & ~(other | prime)]
    for hp in bits(prime & kept):
        residuals.append(kept & ~g.adj[hp])
    for h in bits(other & kept):
        residuals.append(kept & ~g.adj[h])
    for h in bits(other & kept):
        for hp in bits(prime & kept):
            if not g.adjacent(h, hp):
                residuals.append(kept & ~(g.adj[h] | g.adj[hp]))
    best = redispatch(residuals[0], depth + 1)
    for r in residuals[1:]:
        cand = redispatch(r, depth + 1)
        if cand[0] > best[0]:
            best = cand
    drop = redispatch(host & ~(1 << pick), depth + 1)
    return best if best[0] >= drop[0] else drop


def _solve_bad_comp(g, s_mask, t_mask, comp, depth, ambient, leaves):
    s_live = s_mask & comp
    t_live = t_mask & comp
    members = _certified_members(g, t_live)

    def redispatch(host2, depth2):
        return _solve_raw(g, s_mask, t_mask, host2, depth2, ambient, leaves)

    contacted_count: dict[int, int] = {}
    has_bipartial = False
    side_a_hits: dict[int, bool] = {}
    side_b_hits: dict[int, bool] = {}
    for s in bits(s_live):
        cnt = 0
        for idx, m in enumerate(members):
            if not g.adj[s] & m.members:
                continue
            cnt += 1
            cls = contact_class(g, s, m)  # both-sides contact raises here
            if cls is ContactClass.BI_PARTIAL:
                has_bipartial = True
            elif not m.trivial:
                if g.adj[s] & m.sides[0]:
                    side_a_hits[idx] = True
                else:
                    side_b_hits[idx] = True
        contacted_count[s] = cnt

    if has_bipartial:
        return branch_via_bipartial(g, comp, s_live, t_live, redispatch, depth)

    multi = [s for s, cnt in contacted_count.items() if cnt >= 2]
    if multi:
        # branch on the vertex spanning the most blocks (singletons count:
        # a vertex tying several singletons together is what breaks the
        # component's complete-bipartite shape in the first place)
        pick = -1
        pick_count = -1
        for s in sorted(multi):
            if contacted_count[s] > pick_count:
                pick, pick_count = s, contacted_count[s]
        keep = redispatch(comp & ~g.adj[pick], depth + 1)
        drop = redispatch(comp & ~(1 << pick), depth + 1)
        return keep if keep[0] >= drop[0] else drop

    # every contact is universal into one side of a single block; the
    # component can only fail its certificate by having attachments on
    # both sides of one block
    split_blocks = [
        members[idx] for idx in sorted(side_a_hits.keys() & side_b_hits.keys())
    ]
    if len(split_blocks) != 1:
        raise StructureViolation(
            "single-contact component should split across exactly one block",
            ("side_split_blocks", tuple(m.members for m in split_blocks)),
        )
    side = split_blocks[0].sides[0]
    keep = redispatch(comp & ~neighborhood(g, side), depth + 1)
    drop = redispatch(comp & ~side, depth + 1)
    return keep if keep[0] >= drop[0] else drop


def _solve_raw(g, s_mask, t_mask, host, depth, ambient, leaves):
    """Dispatcher: certified components by side selection, then recurse
    into the unique uncertified one.  Returns (weight, mask)."""
    if depth > g.n + 8:
        raise RuntimeError(
            "branching recursion exceeded its depth budget; "
            "structure assumptions must have been violated undetected"
        )
    if host & ~(s_mask | t_mask):
        raise InputError("host contains vertices outside both parts")
    total_w = 0
    total_m = 0
    bad: list[Component] = []
    for comp in components_with_certificates(g, host).parts:
        if comp.sides is None:
            bad.append(comp)
            continue
        side_a, side_b = comp.sides
        wa, wb = g.weight_of(side_a), g.weight_of(side_b)
        chosen = side_a if wa >= wb else side_b
        total_w += max(wa, wb)
        total_m |= chosen
    if len(bad) > 1:
        _bad_comp_witness(g, bad[0].members, bad[1].members)
    if not bad:
        if leaves is not None:
            leaves.append(ambient | host)
        return total_w, total_m
    inner_ambient = ambient | (host & ~bad[0].members)
    w, m = _solve_bad_comp(
        g, s_mask, t_mask, bad[0].members, depth, inner_ambient, leaves
    )
    return total_w + w, total_m | m


def solve_split(inst: SplitInstance, leaves: list[int] | None = None) -> SolveResult:
    """Maximum weight independent set of the split host.

    When ``leaves`` is a list, the host mask of every certified base case
    reached during branching is appended to it (including the certified
    components peeled off along the way); this is the raw material for
    bipartite cover extraction.
    """
    w, mask = _solve_raw(
        inst.g, inst.s_part, inst.t_part, inst.host, 0, 0, leaves
    )
    return certified_result(inst.g, mask)
