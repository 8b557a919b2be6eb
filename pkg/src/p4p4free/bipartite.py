"""Base-case solver: hosts whose components are all complete bipartite.

A maximum weight independent set of such a graph is assembled per
component: trivial components are always taken (weights are nonnegative),
and for a complete bipartite component the heavier side wins, with ties
going to the side containing the component's smallest vertex.  This is the
leaf every branching route in the package eventually reduces to.
"""

from __future__ import annotations

from .errors import ClassViolation, StructureViolation
from .graph import Graph, SolveResult, certified_result, components_with_certificates
from .recognition import find_induced_p4, find_triangle

__all__ = ["solve_cb_components", "cb_weight_mask"]


def cb_weight_mask(g: Graph, host: int) -> tuple[int, int]:
    """(weight, mask) of a maximum weight independent set of g[host].

    Requires every nontrivial component of g[host] to carry a
    complete-bipartite certificate.

    Raises:
        ClassViolation: a component fails certification because of a
            triangle.
        StructureViolation: a component is triangle-free but still not
            complete bipartite (the witness carries an induced P4 of it).
    """
    chosen = 0
    for comp in components_with_certificates(g, host).parts:
        if comp.trivial:
            chosen |= comp.members
            continue
        if comp.sides is None:
            tri = find_triangle(g, comp.members)
            if tri is not None:
                raise ClassViolation(
                    "component contains a triangle", ("triangle", tri)
                )
            p4 = find_induced_p4(g, comp.members)
            raise StructureViolation(
                "component expected to be complete bipartite is not",
                ("incomplete_component", comp.members, p4),
            )
        side_a, side_b = comp.sides
        w_a = g.weight_of(side_a)
        w_b = g.weight_of(side_b)
        # tie -> side_a, which holds the component's smallest vertex
        chosen |= side_b if w_b > w_a else side_a
    return g.weight_of(chosen), chosen


def solve_cb_components(g: Graph, host: int | None = None) -> SolveResult:
    """Solve a host whose components are all complete bipartite."""
    if host is None:
        host = g.full_mask
    g._check_host(host)
    _, mask = cb_weight_mask(g, host)
    return certified_result(g, mask)
