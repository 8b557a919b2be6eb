"""Shared graph builders and exhaustive mini-oracles for the test suite."""

from __future__ import annotations

from itertools import combinations

from p4p4free.graph import Graph, bits, mask_of
from p4p4free.testkit import XorShift64Star

acceptance_report: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_report:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_report:
            terminalreporter.write_line(line)


def path_graph(n: int, weights=None) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], weights)


def cycle_graph(n: int, weights=None) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n, edges, weights)


def complete_graph(n: int, weights=None) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)), weights)


def complete_bipartite(a: int, b: int, weights=None) -> Graph:
    """K_{a,b}: side one is 0..a-1, side two is a..a+b-1."""
    edges = [(u, a + v) for u in range(a) for v in range(b)]
    return Graph.from_edges(a + b, edges, weights)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def random_graph(seed: int, n: int, p: float, weighted: bool = True) -> Graph:
    rng = XorShift64Star(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.chance(p)]
    weights = [rng.below(101) for _ in range(n)] if weighted else None
    return Graph.from_edges(n, edges, weights)


def is_independent(g: Graph, mask: int) -> bool:
    return all(not g.adj[v] & mask for v in bits(mask))


def scan_triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [
        t
        for t in combinations(range(g.n), 3)
        if g.adjacent(t[0], t[1]) and g.adjacent(t[0], t[2]) and g.adjacent(t[1], t[2])
    ]


def scan_p4s(g: Graph, host: int | None = None) -> set[tuple[int, int, int, int]]:
    """Canonical induced P4s (endpoint-smaller orientation) by 4-subset scan."""
    verts = list(bits(host)) if host is not None else range(g.n)
    found = set()
    for quad in combinations(verts, 4):
        inside = [(u, v) for u, v in combinations(quad, 2) if g.adjacent(u, v)]
        if len(inside) != 3:
            continue
        deg = {v: 0 for v in quad}
        for u, v in inside:
            deg[u] += 1
            deg[v] += 1
        if sorted(deg.values()) != [1, 1, 2, 2]:
            continue
        a, d = sorted(v for v in quad if deg[v] == 1)
        b = next(v for v in quad if deg[v] == 2 and g.adjacent(a, v))
        c = next(v for v in quad if deg[v] == 2 and v != b)
        found.add((a, b, c, d))
    return found


def _induces_p4(g: Graph, quad: tuple[int, ...]) -> bool:
    inside = [(u, v) for u, v in combinations(quad, 2) if g.adjacent(u, v)]
    if len(inside) != 3:
        return False
    deg = {v: 0 for v in quad}
    for u, v in inside:
        deg[u] += 1
        deg[v] += 1
    return sorted(deg.values()) == [1, 1, 2, 2]


def scan_two_disjoint_p4s(g: Graph) -> bool:
    """8-subset scan: some octet splits into two non-adjacent induced P4s."""
    for octet in combinations(range(g.n), 8):
        for left in combinations(octet, 4):
            right = tuple(v for v in octet if v not in left)
            if any(g.adjacent(u, v) for u in left for v in right):
                continue
            if _induces_p4(g, left) and _induces_p4(g, right):
                return True
    return False


def scan_member(g: Graph) -> bool:
    return not scan_triangles(g) and not scan_two_disjoint_p4s(g)


def two_colorable(g: Graph, mask: int) -> bool:
    """BFS two-coloring of g[mask]."""
    color: dict[int, int] = {}
    for start in bits(mask):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in bits(g.adj[v] & mask):
                if w not in color:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True
