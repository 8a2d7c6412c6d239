import random
from itertools import combinations

import pytest

from dakc import (
    DirectedGraph,
    Instance,
    SetCoverQuery,
    oracle_solve,
    partial_set_cover,
    solve_k1,
    verify_solution,
    vset,
)
from helpers import cycle_graph, random_digraph


def test_solve_k1_examples():
    # two sources: s1 -> a, s2 -> b, s2 -> c
    g = DirectedGraph.from_arcs(5, [(0, 2), (1, 3), (1, 4)])
    v = solve_k1(Instance(graph=g, b=1, k=1, p=3))
    assert v.is_yes and v.solution.anchors == vset([1])
    assert v.solution.core == vset([1, 3, 4])

    cyc_tail = DirectedGraph.from_arcs(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    v = solve_k1(Instance(graph=cyc_tail, b=0, k=1, p=4))
    assert v.is_yes and v.solution.anchors == 0

    two_pairs = DirectedGraph.from_arcs(4, [(0, 2), (1, 3)])
    assert solve_k1(Instance(graph=two_pairs, b=1, k=1, p=4)).kind == "no"


def test_solve_k1_rejects_other_thresholds():
    with pytest.raises(ValueError, match="k = 1"):
        solve_k1(Instance(graph=cycle_graph(3), b=1, k=2, p=2))


def test_partial_set_cover_examples():
    q = SetCoverQuery(universe=3, sets=(vset([0, 1]), vset([1, 2])), budget=1, target=2)
    assert partial_set_cover(q) == {0}
    q = SetCoverQuery(universe=3, sets=(vset([0, 1]), vset([1, 2])), budget=1, target=3)
    assert partial_set_cover(q) is None
    assert partial_set_cover(SetCoverQuery(universe=0, sets=(), budget=0, target=0)) == set()


def test_partial_set_cover_matches_subset_search():
    rng = random.Random(47)
    for _ in range(120):
        universe = rng.randint(1, 8)
        r = rng.randint(0, 7)
        sets = tuple(
            vset(e for e in range(universe) if rng.random() < 0.4) for _ in range(r)
        )
        budget = rng.randint(0, 4)
        target = rng.randint(0, universe)
        got = partial_set_cover(
            SetCoverQuery(universe=universe, sets=sets, budget=budget, target=target)
        )
        best = None
        for size in range(min(budget, r) + 1):
            for combo in combinations(range(r), size):
                mask = 0
                for i in combo:
                    mask |= sets[i]
                if mask.bit_count() >= target:
                    best = set(combo)
                    break
            if best is not None:
                break
        if best is None:
            assert got is None
        else:
            assert got is not None and len(got) <= budget
            covered = 0
            for i in got:
                covered |= sets[i]
            assert covered.bit_count() >= target
            assert got == best  # smallest size, lexicographically first


def test_solve_k1_matches_oracle():
    rng = random.Random(53)
    for _ in range(200):
        n = rng.randint(1, 10)
        g = random_digraph(rng, n, rng.uniform(0.05, 0.5))
        inst = Instance(graph=g, b=rng.randint(0, 3), k=1, p=rng.randint(1, n))
        expect = oracle_solve(inst)
        got = solve_k1(inst)
        assert got.kind == expect.kind
        if got.is_yes:
            assert verify_solution(inst, got.solution)


def test_solve_k1_matches_oracle_with_planted_cycles():
    # force the cyclic-region preprocessing to fire
    rng = random.Random(59)
    for _ in range(80):
        n = rng.randint(4, 9)
        g = random_digraph(rng, n, 0.2)
        cyc = [(0, 1), (1, 2), (2, 0)]
        arcs = set(g.arcs()) | set(cyc)
        g = DirectedGraph.from_arcs(n, sorted(arcs))
        inst = Instance(graph=g, b=rng.randint(0, 2), k=1, p=rng.randint(1, n))
        expect = oracle_solve(inst)
        got = solve_k1(inst)
        assert got.kind == expect.kind
        if got.is_yes:
            assert verify_solution(inst, got.solution)
