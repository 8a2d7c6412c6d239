"""The three question translators, used as a ground-truth corpus.

Each generator encodes a source problem (satisfiability, clique, set cover)
as an anchored-core instance with the same answer, so solving the instance
answers the source question and vice versa.  This script builds one of each,
prints the gadget labels, and confirms the answers transfer.
"""

from dakc import (
    CnfFormula,
    SetCoverInstance,
    amplify_k,
    gen_from_clique,
    gen_from_sat,
    gen_from_setcover,
    oracle_solve,
    vset,
)

print("satisfiability: (x1 or x2) and (not x1 or not x2), threshold k = 1")
f = CnfFormula(num_vars=2, clauses=((1, 2), (-1, -2)))
gen = gen_from_sat(f, k=1)
inst = gen.instance
print(f"  instance: n={inst.graph.n}, m={inst.graph.arc_count()}, b={inst.b}, p={inst.p}")
print("  labels:", ", ".join(gen.labels))
verdict = oracle_solve(inst)
print("  formula satisfiable, instance answer:", verdict.kind)
chosen = [gen.labels[v] for v in range(inst.graph.n) if (verdict.solution.anchors >> v) & 1]
print("  anchored gadgets (the satisfying assignment):", chosen)

print("\nclique: does a triangle contain a clique of size 2? (k = 2)")
gen = gen_from_clique(3, [(0, 1), (1, 2), (0, 2)], b=2, k=2)
print(f"  instance: b'={gen.instance.b}, p={gen.instance.p}")
print("  answer:", oracle_solve(gen.instance).kind)

print("\nclique: no triangle in a 3-path, so size 3 fails")
gen = gen_from_clique(3, [(0, 1), (1, 2)], b=3, k=2)
print("  answer:", oracle_solve(gen.instance).kind)

print("\nset cover: U = {u1, u2}, sets {u1} and {u2}, budget 1 (impossible)")
sc = SetCoverInstance(universe=2, sets=(vset([0]), vset([1])), budget=1)
gen = gen_from_setcover(sc)
print(f"  instance: n={gen.instance.graph.n}, p={gen.instance.p}")
print("  answer:", oracle_solve(gen.instance).kind)

print("\nthe same question with budget 2 flips the answer")
sc2 = SetCoverInstance(universe=2, sets=(vset([0]), vset([1])), budget=2)
print("  answer:", oracle_solve(gen_from_setcover(sc2).instance).kind)

print("\namplification lifts a threshold-1 instance to k = 2 at max degree 5")
base = gen_from_setcover(
    SetCoverInstance(universe=1, sets=(vset([0]),), budget=1)
).instance
amp = amplify_k(base, k=2, delta=5).instance
print(f"  base: n={base.graph.n}, answer {oracle_solve(base).kind}")
print(
    f"  amplified: n={amp.graph.n}, b={amp.b}, p={amp.p}, "
    f"max degree {amp.graph.max_degree()}, answer {oracle_solve(amp).kind}"
)
