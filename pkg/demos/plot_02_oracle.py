"""
Realizations and the brute-force oracle
=======================================

The oracle answers "does some realization of this sequence contain H?"
by search, independently of any closed-form rule.
"""

# %%
from potent import enumerate_realizations, oracle_search, parse_sequence

# (1^4) has three labeled realizations: the three perfect matchings of K4.
for g in enumerate_realizations(parse_sequence("1^4")):
    print(g.sorted_edges())

# %%
# Both cubic graphs on six vertices realize (3^6): K_{3,3} and the prism
# K6 - C6 (two triangles joined by a matching).
cubic = list(enumerate_realizations(parse_sequence("3^6")))
triangle_free = sum(1 for g in cubic if not any(
    g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    for a in range(6) for b in range(a + 1, 6) for c in range(b + 1, 6)))
print(len(cubic), "labeled realizations,", triangle_free, "of them copies of K_{3,3}")

# %%
# (4^6) is the octahedron only: it contains the prism but never K_{3,3}.
for target in ("k33", "k6c6"):
    result = oracle_search(parse_sequence("4^6"), target)
    print(target, result.potential, result.states_explored, "states")

# %%
# A witness carries the realization and the embedding of the target.
w = oracle_search(parse_sequence("4^6"), "k6c6").witness
print("embedding (0-based):", w.embedding)
print("edges:", w.graph.sorted_edges())
print("validates:", w.validate())

# %%
# The top-degree mode only places the pattern on the highest-degree
# vertices, then completes the rest of the graph around it.  It reaches
# the same verdicts with far less search.
seq = parse_sequence("3^8")
for mode in ("exhaustive", "top_degree"):
    r = oracle_search(seq, "k33", mode)
    print(mode, r.potential, r.states_explored)
