"""Unraveling on a directed path, and how one anchor stops it.

A vertex stays engaged while it has at least k engaged in-neighbors; anchors
stay regardless.  On a directed path with k = 1 the left endpoint has no
in-neighbor, drops out, exposes its successor, and the whole network cascades
away.  Anchoring that single endpoint keeps everyone.
"""

from dakc import DirectedGraph, Instance, oracle_solve, peel, verify_solution, vertices_of, vset


def names(mask):
    return [v + 1 for v in vertices_of(mask)]


n = 8
path = DirectedGraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])
print(f"directed path on {n} vertices, threshold k = 1")

print("\nno anchors: the cascade empties the graph")
print("  surviving core:", names(peel(path, k=1)))

print("\nanchor the left endpoint (vertex 1):")
core = peel(path, k=1, anchors=vset([0]))
print("  surviving core:", names(core))

print("\nthe exhaustive oracle finds the same rescue on its own:")
inst = Instance(graph=path, b=1, k=1, p=n)
verdict = oracle_solve(inst)
print("  answer:", verdict.kind)
print("  anchors:", names(verdict.solution.anchors))
print("  core:   ", names(verdict.solution.core))
print("  verified:", verify_solution(inst, verdict.solution))

print("\nanchoring anywhere else cannot save the prefix:")
for anchor in range(1, 4):
    core = peel(path, k=1, anchors=vset([anchor]))
    print(f"  anchor vertex {anchor + 1}: core {names(core)}")
