"""Anchored-core closure, solution verification, normalization, and the
exhaustive anchor-enumeration oracle that grounds all testing.

A problem instance asks: can at most ``b`` anchored vertices keep an induced
subgraph of at least ``p`` vertices engaged, where every non-anchor needs
in-degree at least ``k`` inside the subgraph?  Anchors are exempt from the
degree requirement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import DirectedGraph, Mask, iter_vertices, vset


class OracleBudgetError(RuntimeError):
    """The anchor-subset enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class Instance:
    """One decision question: (graph, anchor budget b, threshold k, target size p)."""

    graph: DirectedGraph
    b: int
    k: int
    p: int

    def __post_init__(self) -> None:
        if self.b < 0:
            raise ValueError("anchor budget b must be nonnegative")
        if self.k < 0:
            raise ValueError("in-degree threshold k must be nonnegative")
        if self.p < 1:
            raise ValueError("target core size p must be positive")


@dataclass(frozen=True)
class Solution:
    """A claimed witness: anchors and the engaged core, both as vertex masks."""

    anchors: Mask
    core: Mask


YES = "yes"
NO = "no"
NO_UP_TO = "no_up_to"
UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a solver run.

    ``no_up_to`` is only emitted by the bounded search: it asserts there is no
    solution whose core has at most ``bound`` vertices (with failure
    probability at most the configured epsilon in seeded mode, exactly in
    exhaustive mode).  ``note`` carries warnings such as a trial-cap hit;
    ``trials`` the number of colorings evaluated, where that is meaningful.
    """

    kind: str
    solution: Solution | None = None
    bound: int | None = None
    solver: str | None = None
    trials: int | None = None
    note: str = ""

    @property
    def is_yes(self) -> bool:
        return self.kind == YES

    @classmethod
    def yes(cls, solution: Solution, **meta) -> "Verdict":
        return cls(kind=YES, solution=solution, **meta)

    @classmethod
    def no(cls, **meta) -> "Verdict":
        return cls(kind=NO, **meta)

    @classmethod
    def no_up_to(cls, bound: int, **meta) -> "Verdict":
        return cls(kind=NO_UP_TO, bound=bound, **meta)

    @classmethod
    def unsupported(cls, note: str) -> "Verdict":
        return cls(kind=UNSUPPORTED, note=note)


def peel(g: DirectedGraph, k: int, anchors: Mask = 0) -> Mask:
    """Iterated withdrawal: repeatedly delete any non-anchor vertex whose
    current in-degree is below ``k`` until none remains.

    Anchors are never deleted.  The result is independent of deletion order
    (the process is confluent), so a work queue seeded with the initially
    deficient vertices computes it in O(n + m).
    """
    indeg = list(g.in_degrees)
    alive = g.full_mask
    queue = [v for v in range(g.n) if indeg[v] < k and not (anchors >> v) & 1]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if not (alive >> v) & 1:
            continue
        alive &= ~(1 << v)
        for w in g.out_adj[v]:
            if (alive >> w) & 1 and not (anchors >> w) & 1:
                indeg[w] -= 1
                if indeg[w] == k - 1:
                    queue.append(w)
    return alive


def solution_violation(inst: Instance, sol: Solution) -> str | None:
    """The first violated solution constraint, or None if the witness is valid."""
    g = inst.graph
    if sol.core & ~g.full_mask or sol.anchors & ~g.full_mask:
        return "solution names vertices outside the graph"
    if sol.anchors & ~sol.core:
        return "anchors are not a subset of the core"
    if sol.anchors.bit_count() > inst.b:
        return f"anchor count {sol.anchors.bit_count()} exceeds budget {inst.b}"
    if sol.core.bit_count() < inst.p:
        return f"core size {sol.core.bit_count()} is below target {inst.p}"
    for v in iter_vertices(sol.core & ~sol.anchors):
        if (g.in_mask[v] & sol.core).bit_count() < inst.k:
            return f"non-anchor vertex {v + 1} has in-degree below {inst.k} inside the core"
    return None


def verify_solution(inst: Instance, sol: Solution) -> bool:
    return solution_violation(inst, sol) is None


def normalize(inst: Instance) -> Instance | Verdict:
    """Dispose of degenerate parameters; otherwise guarantee b < p <= n, k >= 1.

    Answers immediately when the target exceeds the graph (NO), when the
    budget covers the whole target (YES: anchor the p lowest-indexed
    vertices), or when k = 0 (YES: any p vertices qualify unanchored).
    """
    n = inst.graph.n
    if inst.p > n:
        return Verdict.no(note="target core size exceeds vertex count")
    low_p = vset(range(inst.p))
    if inst.b >= inst.p:
        return Verdict.yes(Solution(anchors=low_p, core=low_p))
    if inst.k == 0:
        return Verdict.yes(Solution(anchors=0, core=low_p))
    return inst


def anchor_subset_count(n: int, b: int) -> int:
    return sum(comb(n, i) for i in range(min(n, b) + 1))


def oracle_solve(inst: Instance, cap: int = 10_000_000) -> Verdict:
    """Exhaustive ground truth: try every anchor set of size at most b.

    Subsets are enumerated smallest-first, lexicographically within each
    size, and the first anchor set whose peel reaches ``p`` vertices is
    returned, so the witness is deterministic.  Exact, but exponential:
    refuses to start if the subset count exceeds ``cap``.
    """
    nrm = normalize(inst)
    if isinstance(nrm, Verdict):
        return nrm
    g, b, k, p = nrm.graph, nrm.b, nrm.k, nrm.p
    total = anchor_subset_count(g.n, b)
    if total > cap:
        raise OracleBudgetError(
            f"{total} anchor subsets exceed the oracle cap of {cap}"
        )
    for size in range(min(g.n, b) + 1):
        for combo in combinations(range(g.n), size):
            anchors = vset(combo)
            core = peel(g, k, anchors)
            if core.bit_count() >= p:
                sol = Solution(anchors=anchors, core=core)
                assert verify_solution(nrm, sol)
                return Verdict.yes(sol)
    return Verdict.no()
