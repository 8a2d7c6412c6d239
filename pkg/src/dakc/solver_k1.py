"""Exact solver for in-degree threshold 1.

Everything reachable from a cycle sustains itself at threshold 1, so that
region is banked first; what remains is a DAG where only sources can be worth
anchoring, and choosing which sources to anchor is a partial set cover over
their reachability sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance, Solution, Verdict, normalize, verify_solution
from .graph import (
    Mask,
    induced_subgraph,
    reach,
    strongly_connected_components,
    vertices_of,
    vset,
)


@dataclass(frozen=True)
class SetCoverQuery:
    """Cover at least ``target`` of ``universe`` elements with <= ``budget`` sets."""

    universe: int
    sets: tuple[Mask, ...]
    budget: int
    target: int


def partial_set_cover(q: SetCoverQuery) -> set[int] | None:
    """Exact partial set cover by exhaustive search, smallest selections first.

    Selections of each size are tried in lexicographic index order, so the
    returned index set is deterministic (fewest sets, then lexicographically
    first).  A running suffix-union bound prunes branches that cannot reach
    the target even using every remaining set.
    """
    r = len(q.sets)
    suffix = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        suffix[i] = suffix[i + 1] | q.sets[i]

    def first_cover(start: int, need: int, covered: Mask) -> set[int] | None:
        if need == 0:
            return set() if covered.bit_count() >= q.target else None
        if r - start < need:
            return None
        if (covered | suffix[start]).bit_count() < q.target:
            return None
        for i in range(start, r):
            rest = first_cover(i + 1, need - 1, covered | q.sets[i])
            if rest is not None:
                rest.add(i)
                return rest
        return None

    for size in range(min(q.budget, r) + 1):
        found = first_cover(0, size, 0)
        if found is not None:
            return found
    return None


def solve_k1(inst: Instance) -> Verdict:
    """Exact YES/NO with witness for k = 1 instances."""
    if inst.k != 1:
        raise ValueError(f"solve_k1 requires k = 1, got k = {inst.k}")
    nrm = normalize(inst)
    if isinstance(nrm, Verdict):
        return nrm
    g, b, p = nrm.graph, nrm.b, nrm.p

    # Bank the self-sustaining region: everything reachable from a cycle.
    cyclic_union = 0
    for comp, cyclic in strongly_connected_components(g):
        if cyclic:
            cyclic_union |= comp
    banked = reach(g, cyclic_union, "forward") if cyclic_union else 0
    banked_size = banked.bit_count()
    if b >= p - banked_size:
        need = p - banked_size
        extra = vset(vertices_of(g.full_mask & ~banked)[:need]) if need > 0 else 0
        sol = Solution(anchors=extra, core=extra | banked)
        assert verify_solution(nrm, sol)
        return Verdict.yes(sol)

    # Residual DAG: anchoring a source engages exactly its reach set.
    sub = induced_subgraph(g, g.full_mask & ~banked)
    dag = sub.graph
    residual_target = p - banked_size
    sources = [v for v in range(dag.n) if dag.in_degrees[v] == 0]
    if len(sources) <= b:
        sol = Solution(anchors=sub.lift_mask(vset(sources)), core=g.full_mask)
        assert verify_solution(nrm, sol)
        return Verdict.yes(sol)

    reach_sets = tuple(reach(dag, 1 << s, "forward") for s in sources)
    picked = partial_set_cover(
        SetCoverQuery(
            universe=dag.n, sets=reach_sets, budget=b, target=residual_target
        )
    )
    if picked is None:
        return Verdict.no()
    anchors = vset(sources[i] for i in picked)
    covered = 0
    for i in picked:
        covered |= reach_sets[i]
    sol = Solution(
        anchors=sub.lift_mask(anchors), core=sub.lift_mask(covered) | banked
    )
    assert verify_solution(nrm, sol)
    return Verdict.yes(sol)
