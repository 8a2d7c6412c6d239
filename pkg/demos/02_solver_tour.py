"""A tour of the exact solvers, each checked against the oracle.

Four regimes get specialized algorithms: threshold 1 (cycle banking plus
partial set cover over source reach sets), 2k above the maximum degree
(cores are small, bounded search settles it), 2k equal to the maximum degree
(separator-guided guessing), and DAGs (bounded search with sink peeling).
"""

import random

from dakc import (
    DirectedGraph,
    Instance,
    SearchConfig,
    oracle_solve,
    solve_by_degree,
    solve_dag,
    solve_half_k,
    vertices_of,
)

EXH = SearchConfig(mode="exhaustive")
rng = random.Random(7)


def show(title, inst, verdict):
    expect = oracle_solve(inst)
    agree = "agrees with oracle" if verdict.kind == expect.kind else "DISAGREES"
    extra = ""
    if verdict.is_yes:
        extra = f", anchors {[v + 1 for v in vertices_of(verdict.solution.anchors)]}"
    print(f"  {title}: {verdict.kind} via {verdict.solver or title}{extra}  [{agree}]")


print("threshold 1: a cycle feeds a tail, one more anchor engages a stray source")
g = DirectedGraph.from_arcs(6, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 5)])
inst = Instance(graph=g, b=1, k=1, p=6)
show("k=1", inst, solve_by_degree(inst, EXH))

print("\n2k > max degree: two feeders into one sink at k = 2")
g = DirectedGraph.from_arcs(3, [(0, 2), (1, 2)])
inst = Instance(graph=g, b=2, k=2, p=3)
show("high", inst, solve_by_degree(inst, EXH))

print("\n2k = max degree: a long path at k = 1 (max degree 2)")
print("  (dispatch prefers the threshold-1 solver here; calling the")
print("  separator-pipeline solver directly to show it handles the regime)")
g = DirectedGraph.from_arcs(7, [(i, i + 1) for i in range(6)])
inst = Instance(graph=g, b=1, k=1, p=7)
half = solve_half_k(inst, cfg=EXH, force_stage3=True)
show("half", inst, half)

print("\nDAG at k = 2 with max degree 5 (outside both degree regimes):")
g = DirectedGraph.from_arcs(6, [(i, 5) for i in range(5)])
inst = Instance(graph=g, b=2, k=2, p=3)
show("dag", inst, solve_dag(inst, EXH))

print("\nrandom cross-check: dispatch vs oracle on 30 degree-4 digraphs")
disagreements = 0
for _ in range(30):
    n = rng.randint(2, 9)
    arcs = []
    deg = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and deg[u] < 4 and deg[v] < 4 and rng.random() < 0.3:
                arcs.append((u, v))
                deg[u] += 1
                deg[v] += 1
    inst = Instance(
        graph=DirectedGraph.from_arcs(n, arcs),
        b=rng.randint(0, 2),
        k=rng.choice([1, 2]),
        p=rng.randint(1, n),
    )
    if solve_by_degree(inst, EXH).kind != oracle_solve(inst).kind:
        disagreements += 1
print(f"  disagreements: {disagreements}")
