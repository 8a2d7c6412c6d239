import random

import pytest

from dakc import (
    Instance,
    OracleBudgetError,
    Solution,
    Verdict,
    normalize,
    oracle_solve,
    peel,
    to_bidirected,
    verify_solution,
    vertices_of,
    vset,
)
from helpers import (
    cycle_graph,
    path_graph,
    peel_in_order,
    random_digraph,
    undirected_akc_brute_force,
)


def test_peel_examples():
    path = path_graph(3)
    assert peel(path, 1) == 0
    assert peel(path, 1, vset([0])) == vset([0, 1, 2])
    cyc = cycle_graph(3)
    assert peel(cyc, 1) == vset([0, 1, 2])
    assert peel(cyc, 2) == 0


def test_verify_examples():
    inst = Instance(graph=path_graph(3), b=1, k=1, p=3)
    assert verify_solution(inst, Solution(anchors=vset([0]), core=vset([0, 1, 2])))
    assert not verify_solution(inst, Solution(anchors=0, core=vset([0, 1, 2])))
    assert not verify_solution(inst, Solution(anchors=vset([0]), core=vset([0, 1])))


def test_normalize_examples():
    g = path_graph(3)
    v = normalize(Instance(graph=g, b=0, k=1, p=4))
    assert isinstance(v, Verdict) and v.kind == "no"
    v = normalize(Instance(graph=cycle_graph(3), b=3, k=5, p=3))
    assert isinstance(v, Verdict) and v.is_yes
    assert v.solution.anchors == v.solution.core == vset([0, 1, 2])
    out = normalize(Instance(graph=g, b=1, k=1, p=3))
    assert isinstance(out, Instance) and out == Instance(graph=g, b=1, k=1, p=3)


def test_normalize_k0_yes_without_anchors():
    v = normalize(Instance(graph=path_graph(3), b=0, k=0, p=2))
    assert isinstance(v, Verdict) and v.is_yes
    assert v.solution.anchors == 0 and v.solution.core == vset([0, 1])


def test_oracle_examples():
    path = path_graph(3)
    v = oracle_solve(Instance(graph=path, b=1, k=1, p=3))
    assert v.is_yes and v.solution.anchors == vset([0])
    assert oracle_solve(Instance(graph=path, b=0, k=1, p=1)).kind == "no"
    v = oracle_solve(Instance(graph=cycle_graph(3), b=0, k=1, p=3))
    assert v.is_yes and v.solution.anchors == 0


def test_oracle_budget_cap():
    g = random_digraph(random.Random(1), 12, 0.2)
    with pytest.raises(OracleBudgetError):
        oracle_solve(Instance(graph=g, b=6, k=1, p=12), cap=100)


def test_peel_confluence_under_random_orders():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(1, 10)
        g = random_digraph(rng, n, rng.uniform(0.1, 0.5))
        k = rng.randint(1, 3)
        anchors = vset(v for v in range(n) if rng.random() < 0.25)
        expected = peel(g, k, anchors)
        for _ in range(10):
            assert peel_in_order(g, k, anchors, rng) == expected


def test_peel_monotone_in_anchors():
    rng = random.Random(29)
    for _ in range(100):
        n = rng.randint(1, 9)
        g = random_digraph(rng, n, 0.3)
        k = rng.randint(1, 3)
        small = vset(v for v in range(n) if rng.random() < 0.2)
        extra = vset(v for v in range(n) if rng.random() < 0.2)
        assert peel(g, k, small) & peel(g, k, small | extra) == peel(g, k, small)


def test_peel_is_unique_maximal_valid_set():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(1, 8)
        g = random_digraph(rng, n, 0.3)
        k = rng.randint(1, 2)
        anchors = vset(v for v in range(n) if rng.random() < 0.25)
        result = peel(g, k, anchors)
        assert anchors & ~result == 0
        for cand in range(1 << n):
            valid = all(
                (g.in_mask[v] & cand).bit_count() >= k
                for v in vertices_of(cand & ~anchors)
            )
            if valid:
                assert cand & ~result == 0  # every valid set sits inside the peel
        # the peel itself is valid
        assert all(
            (g.in_mask[v] & result).bit_count() >= k
            for v in vertices_of(result & ~anchors)
        )


def test_undirected_modeling_equivalence():
    rng = random.Random(37)
    for _ in range(60):
        n = rng.randint(1, 7)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.4
        ]
        g = to_bidirected(n, edges)
        b = rng.randint(0, 2)
        k = rng.randint(1, 3)
        p = rng.randint(1, n)
        directed = oracle_solve(Instance(graph=g, b=b, k=k, p=p)).is_yes
        assert directed == undirected_akc_brute_force(n, edges, b, k, p)


def test_oracle_self_certification():
    rng = random.Random(41)
    for _ in range(100):
        n = rng.randint(1, 8)
        g = random_digraph(rng, n, 0.3)
        inst = Instance(
            graph=g, b=rng.randint(0, 3), k=rng.randint(1, 3), p=rng.randint(1, n)
        )
        v = oracle_solve(inst)
        if v.is_yes:
            assert verify_solution(inst, v.solution)


def test_oracle_witness_is_first_in_size_lex_order():
    # anchoring vertex 1 alone engages the 4-path; so must the oracle witness
    g = path_graph(4)
    v = oracle_solve(Instance(graph=g, b=2, k=1, p=4))
    assert v.solution.anchors == vset([0])
