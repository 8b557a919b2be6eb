"""
Class membership, witnesses, and the file format
================================================

"""

# The solver supports graphs with no triangle and no two vertex-disjoint,
# mutually non-adjacent induced four-vertex paths.  The recognizer returns
# a verdict carrying a concrete witness for rejections.
from p4p4free import ClassViolation, Graph, is_class_member, solve

triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
verdict = is_class_member(triangle)
print("triangle member?", verdict.is_member, "witness:", verdict.triangle)

# Two separated paths: the other forbidden pattern.
twin = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
verdict = is_class_member(twin)
print("twin paths member?", verdict.is_member)
print("witness:", verdict.p4_pair[0].vertices, verdict.p4_pair[1].vertices)

# Solving a non-member raises instead of returning a wrong answer; the
# exception carries the same kind of witness.
try:
    solve(twin)
except ClassViolation as err:
    print("solve refused:", err.witness[0], err.witness[1])

# Graphs travel as small text files (1-based ids).  The CLI wraps all of
# this: p4p4free solve FILE, check, oracle, cover, gen, bench.
from p4p4free.cli import format_graph, parse_graph

text = format_graph(Graph.from_edges(2, [(0, 1)], weights=[5, 7]))
print(text, end="")
assert parse_graph(text) == Graph.from_edges(2, [(0, 1)], weights=[5, 7])
