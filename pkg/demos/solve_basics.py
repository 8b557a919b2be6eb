"""
Solving maximum weight independent set on small graphs
======================================================

"""

# A graph is a frozen bitset structure: n vertices, nonnegative integer
# weights, and one adjacency mask per vertex.
from p4p4free import Graph, solve

# The four-vertex path a-b-c-d with heavy endpoints.  The optimum takes
# both endpoints even though they leave the middle uncovered.
path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)], weights=[10, 1, 1, 10])
result = solve(path)
print("weighted path:", result.weight, result.chosen)

# The five-cycle is the smallest graph in the class that is not bipartite.
cycle = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
print("five-cycle:", solve(cycle).weight, solve(cycle).chosen)

# Complete bipartite graphs are solved by weighing their two sides.
sides = [(u, 3 + v) for u in range(3) for v in range(3)]
k33 = Graph.from_edges(6, sides, weights=[1, 2, 3, 4, 5, 6])
print("K_{3,3}:", solve(k33).weight, solve(k33).chosen)

# Results certify themselves: the weight always equals the sum over the
# chosen vertices, and the chosen set is verified independent on return.
assert solve(k33).weight == sum((4, 5, 6))
