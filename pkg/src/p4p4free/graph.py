"""Immutable weighted graph over vertices 0..n-1 with bitmask adjacency.

Vertex sets are plain Python ints used as bitmasks, so membership, union,
difference and intersection are single machine operations and subproblems
are expressed as a live "host" mask over the original graph (no
re-indexing ever happens).  Iteration over a mask is always in ascending
vertex order, which is what makes every tie-break in the package
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import ClassViolation, InputError, StructureViolation

__all__ = [
    "Graph",
    "Component",
    "ComponentStructure",
    "ContactClass",
    "SolveResult",
    "bits",
    "mask_of",
    "bit_count",
    "neighborhood",
    "anti_neighborhood",
    "components",
    "components_with_certificates",
    "contact_class",
    "certified_result",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex ids present in ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Build a bitmask from an iterable of vertex ids."""
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def bit_count(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Undirected graph with nonnegative integer vertex weights.

    Attributes:
        n: number of vertices (ids are 0..n-1).
        weights: per-vertex weight, nonnegative integers.
        adj: per-vertex neighbor bitmask; ``adj[u] >> v & 1`` tests an edge.
    """

    n: int
    weights: tuple[int, ...]
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(
        n: int,
        edges: Iterable[tuple[int, int]],
        weights: Iterable[int] | None = None,
    ) -> "Graph":
        """Build a graph, validating ids, weights, and simple-ness.

        Args:
            n: vertex count.
            edges: iterable of (u, v) pairs, 0-based, no loops.
            weights: per-vertex nonnegative integers; defaults to all 1.

        Raises:
            InputError: on out-of-range ids, loops, or negative weights.
        """
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        w = tuple(int(x) for x in weights) if weights is not None else (1,) * n
        if len(w) != n:
            raise InputError(f"expected {n} weights, got {len(w)}")
        if any(x < 0 for x in w):
            raise InputError("weights must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, w, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return self.adj[u] >> v & 1 == 1

    def weight_of(self, mask: int) -> int:
        """Total weight of the vertices in ``mask``."""
        w = self.weights
        total = 0
        while mask:
            low = mask & -mask
            total += w[low.bit_length() - 1]
            mask ^= low
        return total

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                yield u, v

    def _check_host(self, host: int) -> None:
        if host < 0 or host >> self.n:
            raise InputError(f"host mask {bin(host)} out of range for n={self.n}")


def neighborhood(g: Graph, u: int) -> int:
    """Open neighborhood N(U) of the vertex set ``u`` (a bitmask).

    Returns the union of the members' neighbors minus ``u`` itself.
    """
    g._check_host(u)
    out = 0
    m = u
    while m:
        low = m & -m
        out |= g.adj[low.bit_length() - 1]
        m ^= low
    return out & ~u


def anti_neighborhood(g: Graph, u: int, host: int | None = None) -> int:
    """Vertices of ``host`` at distance >= 2 from every vertex of ``u``.

    Args:
        g: the graph.
        u: vertex set whose anti-neighborhood is wanted.
        host: restrict the answer to this mask (defaults to all of g).
    """
    if host is None:
        host = g.full_mask
    g._check_host(u)
    g._check_host(host)
    return host & ~u & ~neighborhood(g, u)


def components(g: Graph, host: int) -> list[int]:
    """Connected components of the induced subgraph on ``host``.

    Returns component masks sorted by their smallest vertex.
    """
    g._check_host(host)
    adj = g.adj
    out = []
    rest = host
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            m = frontier
            while m:
                low = m & -m
                grow |= adj[low.bit_length() - 1]
                m ^= low
            frontier = grow & host & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


class ContactClass(Enum):
    """How a vertex meets a complete bipartite component: not at all,
    partially into one side, or fully covering one side."""

    NONE = "none"
    BI_PARTIAL = "bi_partial"
    BI_UNIVERSAL = "bi_universal"


@dataclass(frozen=True)
class Component:
    """One connected component of an induced subgraph.

    Attributes:
        members: bitmask of the component's vertices.
        trivial: True when the component is a single vertex.
        sides: complete-bipartite certificate (side_a, side_b) as masks,
            ordered so side_a contains the smallest vertex; None when the
            component is not complete bipartite.  Trivial components carry
            (members, 0).
    """

    members: int
    trivial: bool
    sides: tuple[int, int] | None


@dataclass(frozen=True)
class ComponentStructure:
    """All components of one induced subgraph, smallest-vertex order."""

    host: int
    parts: tuple[Component, ...]

    def nontrivial(self) -> tuple[Component, ...]:
        return tuple(c for c in self.parts if not c.trivial)


def _certify_complete_bipartite(g: Graph, comp: int) -> tuple[int, int] | None:
    """Two-color ``comp`` and check completeness; None when either fails."""
    adj = g.adj
    start = comp & -comp
    side_a = start
    side_b = 0
    frontier = start
    color_of_frontier = 0
    while frontier:
        grow = 0
        m = frontier
        while m:
            low = m & -m
            grow |= adj[low.bit_length() - 1]
            m ^= low
        grow &= comp
        if color_of_frontier == 0:
            if grow & side_a:
                return None  # odd cycle
            new = grow & ~side_b
            side_b |= new
        else:
            if grow & side_b:
                return None
            new = grow & ~side_a
            side_a |= new
        frontier = new
        color_of_frontier ^= 1
    for v in bits(side_a):
        if adj[v] & comp != side_b:
            return None
    for v in bits(side_b):
        if adj[v] & comp != side_a:
            return None
    return side_a, side_b


def components_with_certificates(g: Graph, host: int) -> ComponentStructure:
    """Decompose ``host`` and certify each nontrivial component.

    Every nontrivial component is tested for being complete bipartite; the
    certificate (the two sides) is attached when the test succeeds and left
    as None otherwise.  Trivial components always certify as (self, empty).
    """
    parts = []
    for comp in components(g, host):
        if comp & (comp - 1) == 0:
            parts.append(Component(comp, True, (comp, 0)))
        else:
            parts.append(Component(comp, False, _certify_complete_bipartite(g, comp)))
    return ComponentStructure(host, tuple(parts))


def contact_class(g: Graph, v: int, comp: Component) -> ContactClass:
    """Classify how vertex ``v`` (outside ``comp``) meets the component.

    Raises:
        ClassViolation: if v has neighbors on both certified sides, which
            exhibits a triangle.
        StructureViolation: if the component carries no certificate.
    """
    if comp.sides is None:
        raise StructureViolation(
            "contact query against an uncertified component",
            ("missing_certificate", comp.members),
        )
    if 1 << v & comp.members:
        raise InputError(f"vertex {v} lies inside the component")
    side_a, side_b = comp.sides
    hit_a = g.adj[v] & side_a
    hit_b = g.adj[v] & side_b
    if hit_a and hit_b:
        x = (hit_a & -hit_a).bit_length() - 1
        y = (hit_b & -hit_b).bit_length() - 1
        raise ClassViolation(
            f"vertex {v} meets both sides of a complete bipartite component",
            ("triangle", tuple(sorted((v, x, y)))),
        )
    hit, side = (hit_a, side_a) if hit_a else (hit_b, side_b)
    if not hit:
        return ContactClass.NONE
    return ContactClass.BI_UNIVERSAL if hit == side else ContactClass.BI_PARTIAL


@dataclass(frozen=True)
class SolveResult:
    """An independent set found by a solver.

    Attributes:
        weight: total weight of ``chosen``.
        chosen: the vertices, ascending.
        leaves: base-case records when tracing was requested, else None.
    """

    weight: int
    chosen: tuple[int, ...]
    leaves: tuple | None = None


def certified_result(g: Graph, mask: int, leaves: tuple | None = None) -> SolveResult:
    """Wrap a solution mask in a SolveResult, re-verifying it first.

    Every public return path goes through this: the chosen set is checked
    for independence and the weight is recomputed from scratch, so a bug in
    the branching machinery cannot silently return garbage.
    """
    total = 0
    for v in bits(mask):
        if g.adj[v] & mask:
            raise RuntimeError(
                f"self-certification failed: vertex {v} has a chosen neighbor"
            )
        total += g.weights[v]
    return SolveResult(total, tuple(bits(mask)), leaves)
