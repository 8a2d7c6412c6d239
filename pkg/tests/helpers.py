"""Shared generators and independent brute-force oracles for the tests.

Everything here is deliberately written against the problem definitions, not
the library's algorithms, so agreement between the two is meaningful.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from dakc import DirectedGraph, Instance, vset, vertices_of


def random_digraph(rng: random.Random, n: int, arc_prob: float) -> DirectedGraph:
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < arc_prob
    ]
    return DirectedGraph.from_arcs(n, arcs)


def random_digraph_degree_capped(
    rng: random.Random, n: int, delta: int, arc_prob: float
) -> DirectedGraph:
    """Random digraph whose total degree never exceeds ``delta``."""
    candidates = [(u, v) for u in range(n) for v in range(n) if u != v]
    rng.shuffle(candidates)
    deg = [0] * n
    arcs = []
    for u, v in candidates:
        if deg[u] < delta and deg[v] < delta and rng.random() < arc_prob:
            arcs.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return DirectedGraph.from_arcs(n, arcs)


def random_dag_degree_capped(
    rng: random.Random, n: int, delta: int, arc_prob: float
) -> DirectedGraph:
    """Random DAG (arcs respect a random topological order) with a degree cap."""
    order = list(range(n))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    candidates = [(u, v) for u in range(n) for v in range(n) if rank[u] < rank[v]]
    rng.shuffle(candidates)
    deg = [0] * n
    arcs = []
    for u, v in candidates:
        if deg[u] < delta and deg[v] < delta and rng.random() < arc_prob:
            arcs.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return DirectedGraph.from_arcs(n, arcs)


def path_graph(n: int) -> DirectedGraph:
    return DirectedGraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> DirectedGraph:
    return DirectedGraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def peel_in_order(
    g: DirectedGraph, k: int, anchors: int, rng: random.Random
) -> int:
    """Reference peel that deletes one random deficient vertex at a time."""
    alive = set(range(g.n))
    while True:
        deficient = [
            v
            for v in sorted(alive)
            if not (anchors >> v) & 1
            and sum(1 for u in g.in_adj[v] if u in alive) < k
        ]
        if not deficient:
            return vset(alive)
        alive.remove(rng.choice(deficient))


def solution_exists_with_core_at_most(inst: Instance, bound: int) -> bool:
    """Subset search: is there a valid core H with p <= |H| <= bound?

    A candidate H works iff its deficient vertices (in-degree below k inside
    H) fit in the anchor budget.  Independent of the peel machinery.
    """
    g, b, k, p = inst.graph, inst.b, inst.k, inst.p
    for h_mask in range(1 << g.n):
        size = h_mask.bit_count()
        if not p <= size <= bound:
            continue
        deficient = 0
        for v in vertices_of(h_mask):
            if (g.in_mask[v] & h_mask).bit_count() < k:
                deficient += 1
                if deficient > b:
                    break
        if deficient <= b:
            return True
    return False


def undirected_akc_brute_force(
    n: int, edges: list[tuple[int, int]], b: int, k: int, p: int
) -> bool:
    """Undirected anchored k-core feasibility by subset search."""
    if p > n:
        return False
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    for h_mask in range(1 << n):
        if h_mask.bit_count() < p:
            continue
        members = vertices_of(h_mask)
        deficient = sum(
            1
            for v in members
            if sum(1 for u in nbrs[v] if (h_mask >> u) & 1) < k
        )
        if deficient <= b:
            return True
    return False


def sat_brute_force(num_vars: int, clauses) -> bool:
    for assignment in product((False, True), repeat=num_vars):
        ok = True
        for clause in clauses:
            if not any(
                assignment[abs(lit) - 1] == (lit > 0) for lit in clause
            ):
                ok = False
                break
        if ok:
            return True
    return False


def clique_brute_force(n: int, edges: list[tuple[int, int]], b: int) -> bool:
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    if b <= 1:
        return n >= b
    for combo in combinations(range(n), b):
        if all(
            (combo[i], combo[j]) in edge_set
            for i in range(b)
            for j in range(i + 1, b)
        ):
            return True
    return False


def cover_brute_force(universe: int, sets, budget: int) -> bool:
    full = (1 << universe) - 1
    for r in range(min(budget, len(sets)) + 1):
        for combo in combinations(range(len(sets)), r):
            mask = 0
            for i in combo:
                mask |= sets[i]
            if mask == full:
                return True
    return False


def random_restricted_cnf(rng: random.Random, num_vars: int, max_clauses: int):
    """Random CNF meeting the translation invariants: 1..3 literals per
    clause, no repeated variable in a clause, each variable 1..2 occurrences
    per polarity with at most 3 total, at least one of each polarity."""
    occurrences: list[int] = []
    for var in range(1, num_vars + 1):
        pattern = rng.choice([(1, 1), (1, 1), (2, 1), (1, 2)])
        occurrences.extend([var] * pattern[0])
        occurrences.extend([-var] * pattern[1])
    rng.shuffle(occurrences)
    clauses: list[list[int]] = [[]]
    for lit in occurrences:
        placed = False
        for clause in rng.sample(clauses, len(clauses)):
            if len(clause) < 3 and all(abs(x) != abs(lit) for x in clause):
                clause.append(lit)
                placed = True
                break
        if not placed:
            clauses.append([lit])
    clauses = [c for c in clauses if c]
    while len(clauses) > max_clauses:
        # merge the two smallest clauses when variables allow, else give up
        clauses.sort(key=len)
        merged = False
        for i in range(len(clauses)):
            for j in range(i + 1, len(clauses)):
                union = clauses[i] + clauses[j]
                if len(union) <= 3 and len({abs(x) for x in union}) == len(union):
                    clauses[i] = union
                    del clauses[j]
                    merged = True
                    break
            if merged:
                break
        if not merged:
            break
    return num_vars, tuple(tuple(c) for c in clauses)
