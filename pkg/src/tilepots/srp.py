"""Subgraph Realization Problem: the smallest order any graph a pot realizes.

A pot realizes a graph of order n exactly when some tile distribution
(R_1, ..., R_p) sums to n and zeroes the net cohesive-end count of every
bond type.  Minimizing the sum under those balance equations therefore
yields the minimum realization order; the all-zero distribution trivially
balances, so a sum >= 1 row keeps the search honest.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import ilp
from .designs import AssemblyDesign
from .graphs import MultiGraph
from .pots import CohesiveEnd, Pot, PotError, TileDistribution

DEFAULT_CAP = 1000


class ResourceLimitError(RuntimeError):
    """A solve hit its budget before reaching an exact answer."""


@dataclass(frozen=True)
class SrpResult:
    kind: str                       # min_order | none_within_cap | invalid_pot | indeterminate
    cap: int
    order: int | None = None
    distribution: TileDistribution | None = None
    missing: tuple[CohesiveEnd, ...] = ()
    nodes: int = 0

    @property
    def is_min_order(self) -> bool:
        return self.kind == "min_order"


def _srp_model(pot: Pot, var_hi: int, total_lo: int, total_hi: int) -> ilp.IpModel:
    matrix = pot.construction_matrix()
    model = ilp.IpModel("srp")
    rvars = [model.add_var(0, var_hi, f"R{j}") for j in range(pot.size)]
    for row in matrix.z:
        model.add_eq([(rvars[j], z) for j, z in enumerate(row) if z], 0)
    model.add_row([(v, 1) for v in rvars], total_lo, total_hi)
    return model


def min_realization_order(
    pot: Pot, cap: int = DEFAULT_CAP, limits: ilp.Limits | None = None
) -> SrpResult:
    """Minimum order of any graph realized by the pot, searched up to cap.

    Returns invalid_pot without solving when some cohesive end has no
    complement anywhere in the pot, and none_within_cap when no non-trivial
    balanced distribution of order <= cap exists.
    """
    if cap < 1:
        raise PotError("cap must be at least 1")
    missing = pot.validate()
    if missing:
        return SrpResult(kind="invalid_pot", cap=cap, missing=missing)
    model = _srp_model(pot, var_hi=cap, total_lo=1, total_hi=cap)
    model.set_objective_stages([[(j, 1) for j in range(pot.size)]])
    res = ilp.solve(model, limits)
    if res.status is ilp.Status.RESOURCE_LIMIT:
        return SrpResult(kind="indeterminate", cap=cap, nodes=res.stats.nodes)
    if res.status is ilp.Status.INFEASIBLE:
        return SrpResult(kind="none_within_cap", cap=cap, nodes=res.stats.nodes)
    dist = TileDistribution(tuple(res.values[: pot.size]))
    assert dist.is_balanced(pot) and dist.order == res.objective[0]
    return SrpResult(
        kind="min_order", cap=cap, order=dist.order, distribution=dist, nodes=res.stats.nodes
    )


def has_smaller_realization(pot: Pot, n: int, limits: ilp.Limits | None = None) -> bool:
    """Whether the pot realizes any graph with fewer than n vertices.

    This is the exact test the Scenario-2 candidate loop needs: feasibility
    of the balance equations with 1 <= sum(R) <= n-1 and R_j <= n-1.
    """
    if n < 2:
        raise PotError("smaller-realization test needs n >= 2")
    missing = pot.validate()
    if missing:
        raise PotError(f"pot is not well formed; missing {','.join(map(str, missing))}")
    model = _srp_model(pot, var_hi=n - 1, total_lo=1, total_hi=n - 1)
    res = ilp.solve(model, limits)
    if res.status is ilp.Status.RESOURCE_LIMIT:
        raise ResourceLimitError("smaller-realization test hit its budget")
    return res.status is ilp.Status.OPTIMAL


def build_witness(
    pot: Pot, dist: TileDistribution
) -> tuple[MultiGraph, AssemblyDesign, bool]:
    """Assemble a graph from a balanced distribution.

    Instantiates R_j copies of each tile, pairs complementary half-edges per
    bond type, then repeatedly swaps partners across components sharing a
    bond type to merge them.  Returns the graph, its design, and whether the
    result is connected (the swap heuristic usually connects it, but
    connectivity is reported, not guaranteed).
    """
    if len(dist.counts) != pot.size:
        raise PotError("distribution length does not match pot size")
    if dist.order < 1 or not dist.is_balanced(pot):
        raise PotError("witness needs a non-trivial balanced distribution")
    owner: list[int] = []
    labels: list[CohesiveEnd] = []
    vertex = 0
    for tile, copies in zip(pot.tiles, dist.counts):
        for _ in range(copies):
            for end in tile.ends():
                owner.append(vertex)
                labels.append(end)
            vertex += 1
    by_end: dict[CohesiveEnd, list[int]] = {}
    for h, end in enumerate(labels):
        by_end.setdefault(end, []).append(h)
    partner = [-1] * len(owner)
    for bond in pot.bonds:
        plain = by_end.get(CohesiveEnd(bond, False), [])
        hatted = by_end.get(CohesiveEnd(bond, True), [])
        assert len(plain) == len(hatted)  # guaranteed by balance
        for h, p in zip(plain, hatted):
            partner[h] = p
            partner[p] = h

    def component_of() -> list[int]:
        comp = [-1] * vertex
        cid = 0
        for start in range(vertex):
            if comp[start] != -1:
                continue
            stack = [start]
            comp[start] = cid
            while stack:
                u = stack.pop()
                for h in range(len(owner)):
                    if owner[h] == u:
                        v2 = owner[partner[h]]
                        if comp[v2] == -1:
                            comp[v2] = cid
                            stack.append(v2)
            cid += 1
        return comp

    # merge pass: swap partners across components sharing a bond type
    while True:
        comp = component_of()
        if max(comp, default=0) == 0:
            break
        swapped = False
        for bond in pot.bonds:
            plain = by_end.get(CohesiveEnd(bond, False), [])
            by_comp: dict[int, int] = {}
            for h in plain:
                by_comp.setdefault(comp[owner[h]], h)
            if len(by_comp) >= 2:
                comps = sorted(by_comp)
                h1, h2 = by_comp[comps[0]], by_comp[comps[1]]
                p1, p2 = partner[h1], partner[h2]
                partner[h1], partner[p2] = p2, h1
                partner[h2], partner[p1] = p1, h2
                swapped = True
                break
        if not swapped:
            break
    graph = MultiGraph(vertex, owner, partner)
    design = AssemblyDesign(tuple(labels))
    design.validate(graph)
    return graph, design, graph.is_connected
