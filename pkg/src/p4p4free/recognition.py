"""Recognition of the supported graph class and P4-centered structure.

The solver works on triangle-free graphs that contain no two induced P4s
that are vertex-disjoint and mutually non-adjacent.  Membership is decided
directly from that definition: a triangle scan, then for every induced P4
a search for a second P4 inside its anti-neighborhood (any two independent
P4s certify non-membership this way, because the second one lies entirely
at distance >= 2 from the first).

Around a fixed induced P4 (a, b, c, d), triangle-freeness pins every
neighbor of the path to one of seven adjacency traces: {a}, {b}, {c}, {d},
{a,c}, {a,d}, {b,d}.  Any other trace contains two consecutive path
vertices and exhibits a triangle.  ``neighborhood_partition`` materializes
those seven classes plus the anti-neighborhood; all of the branching
machinery downstream is phrased in terms of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClassViolation, InputError
from .graph import Graph, anti_neighborhood, bits, mask_of

__all__ = [
    "InducedP4",
    "NeighborhoodPartition",
    "MembershipVerdict",
    "find_triangle",
    "enumerate_induced_p4",
    "find_induced_p4",
    "is_class_member",
    "neighborhood_partition",
]


@dataclass(frozen=True)
class InducedP4:
    """An induced path on four vertices a-b-c-d.

    Enumeration emits each path once in canonical orientation (a < d);
    ``reverse()`` produces the other orientation when an operation needs
    the path read end-to-start.
    """

    a: int
    b: int
    c: int
    d: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def mask(self) -> int:
        return 1 << self.a | 1 << self.b | 1 << self.c | 1 << self.d

    def reverse(self) -> "InducedP4":
        return InducedP4(self.d, self.c, self.b, self.a)

    @staticmethod
    def of(g: Graph, a: int, b: int, c: int, d: int) -> "InducedP4":
        """Validate that (a, b, c, d) really induces a P4 in ``g``."""
        vs = (a, b, c, d)
        if len(set(vs)) != 4 or not all(0 <= v < g.n for v in vs):
            raise InputError(f"not four distinct vertices: {vs}")
        path = ((a, b), (b, c), (c, d))
        gaps = ((a, c), (a, d), (b, d))
        if not all(g.adjacent(u, v) for u, v in path) or any(
            g.adjacent(u, v) for u, v in gaps
        ):
            raise InputError(f"{vs} does not induce a P4")
        return InducedP4(a, b, c, d)


def find_triangle(g: Graph, host: int | None = None) -> tuple[int, int, int] | None:
    """Lexicographically least triangle (u, v, w), u < v < w, or None."""
    if host is None:
        host = g.full_mask
    adj = g.adj
    for u in bits(host):
        above_u = host >> (u + 1) << (u + 1)
        cand = adj[u] & above_u
        for v in bits(cand):
            common = adj[v] & cand
            common = common >> (v + 1) << (v + 1)
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def _p4_scan(g: Graph, host: int):
    """Yield canonical induced P4s of g[host] (each exactly once, a < d).

    Iterates over ordered middle edges (b, c); for the canonical
    orientation only one of the two orders survives the a < d filter, so no
    deduplication is needed.  Yield order is scan order, not sorted.
    """
    adj = g.adj
    for b in bits(host):
        for c in bits(adj[b] & host):
            a_cand = adj[b] & ~adj[c] & host & ~(1 << c)
            d_cand = adj[c] & ~adj[b] & host & ~(1 << b)
            if not a_cand or not d_cand:
                continue
            for a in bits(a_cand):
                above_a = ~((2 << a) - 1)
                for d in bits(d_cand & ~adj[a] & above_a):
                    yield InducedP4(a, b, c, d)


def enumerate_induced_p4(g: Graph, host: int | None = None) -> list[InducedP4]:
    """All induced P4s of g[host], canonical (a < d), lexicographic order."""
    if host is None:
        host = g.full_mask
    g._check_host(host)
    return sorted(_p4_scan(g, host), key=lambda p: p.vertices)


def find_induced_p4(g: Graph, host: int) -> InducedP4 | None:
    """Some induced P4 of g[host], or None; deterministic, early exit."""
    g._check_host(host)
    for p in _p4_scan(g, host):
        return p
    return None


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of ``is_class_member`` with a witness for rejections.

    Exactly one of ``triangle`` / ``p4_pair`` is set when ``is_member`` is
    False: either three mutually adjacent vertices, or two induced P4s that
    are vertex-disjoint with no edges between them.
    """

    is_member: bool
    triangle: tuple[int, int, int] | None = None
    p4_pair: tuple[InducedP4, InducedP4] | None = None


def is_class_member(g: Graph) -> MembershipVerdict:
    """Decide membership in the supported class, with witnesses.

    A triangle is searched first; then each induced P4 (in scan order) has
    its anti-neighborhood searched for a second P4.  The anti-neighborhood
    construction guarantees the two paths are disjoint and mutually
    non-adjacent, so the pair is a genuine witness.
    """
    tri = find_triangle(g)
    if tri is not None:
        return MembershipVerdict(False, triangle=tri)
    full = g.full_mask
    for p in _p4_scan(g, full):
        far = anti_neighborhood(g, p.mask, full)
        q = find_induced_p4(g, far)
        if q is not None:
            return MembershipVerdict(False, p4_pair=(p, q))
    return MembershipVerdict(True)


@dataclass(frozen=True)
class NeighborhoodPartition:
    """The seven trace classes around an induced P4, plus the far part.

    Each field is a bitmask over the host.  ``s_a`` holds the vertices
    adjacent to a only, ``s_ac`` those adjacent to exactly a and c, and so
    on; ``anti`` holds the host vertices with no neighbor on the path.
    """

    p: InducedP4
    s_a: int
    s_b: int
    s_c: int
    s_d: int
    s_ac: int
    s_ad: int
    s_bd: int
    anti: int


_TRACE_TO_CLASS = {
    0b0001: "s_a",
    0b0010: "s_b",
    0b0100: "s_c",
    0b1000: "s_d",
    0b0101: "s_ac",
    0b1001: "s_ad",
    0b1010: "s_bd",
}

_PATH_EDGES = ((0, 1), (1, 2), (2, 3))


def neighborhood_partition(
    g: Graph, p: InducedP4, host: int | None = None
) -> NeighborhoodPartition:
    """Partition the path's host neighbors into the seven trace classes.

    Args:
        g: the graph.
        p: an induced P4 of g whose vertices all lie in ``host``.
        host: live vertex mask (defaults to all of g).

    Raises:
        ClassViolation: when some neighbor's trace includes two consecutive
            path vertices; the witness is the resulting triangle.
    """
    if host is None:
        host = g.full_mask
    g._check_host(host)
    if p.mask & host != p.mask:
        raise InputError("path vertices must lie inside the host")
    pv = p.vertices
    path_adj = tuple(g.adj[v] for v in pv)
    nbrs = (path_adj[0] | path_adj[1] | path_adj[2] | path_adj[3]) & host & ~p.mask
    classes = {name: 0 for name in _TRACE_TO_CLASS.values()}
    for v in bits(nbrs):
        bit = 1 << v
        trace = (
            (1 if path_adj[0] & bit else 0)
            | (2 if path_adj[1] & bit else 0)
            | (4 if path_adj[2] & bit else 0)
            | (8 if path_adj[3] & bit else 0)
        )
        name = _TRACE_TO_CLASS.get(trace)
        if name is None:
            for i, j in _PATH_EDGES:
                if trace >> i & 1 and trace >> j & 1:
                    raise ClassViolation(
                        f"vertex {v} is adjacent to consecutive path vertices "
                        f"{pv[i]} and {pv[j]}",
                        ("triangle", tuple(sorted((v, pv[i], pv[j])))),
                    )
            raise ClassViolation(  # unreachable: every invalid trace has a path edge
                f"vertex {v} has an impossible trace {trace:04b}",
                ("trace", v, trace),
            )
        classes[name] |= bit
    return NeighborhoodPartition(
        p=p,
        anti=host & ~p.mask & ~nbrs,
        **classes,
    )
