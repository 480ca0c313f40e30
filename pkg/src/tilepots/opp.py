"""Optimal Pot Problem solvers for Scenarios 1 and 2.

The pot construction constraints (PCC) encode "this pot realizes this graph
via this labeled orientation" as a bounded integer program over tile
contents t, labelled vertex degrees w, vertex-to-tile assignments x, tile
usage flags k, and per-half-edge label indicators e.  Edge variables are
indexed by half-edge, which keeps loops and parallel edges exact.

Scenario 1 minimizes the number of tile types under one bond-edge type.
Scenario 2 interleaves pot generation with the subgraph-realization check:
candidate pots are enumerated in strictly increasing characteristic value,
and the first candidate that realizes the target without realizing anything
smaller wins.  The enumeration bound is a lexicographic exclusion over the
pot's digit vector, so candidates can never repeat or go backwards.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import ilp
from .designs import AssemblyDesign
from .graphs import GraphError, MultiGraph
from .pots import CohesiveEnd, Pot, PotError, Tile
from .srp import ResourceLimitError, has_smaller_realization

DEFAULT_MODEL_SIZE_LIMIT = 2_000_000


class ModelTooLarge(ValueError):
    """The requested PCC model exceeds the configured size budget."""


@dataclass
class PccVars:
    """Decision-variable ids for one PCC model."""

    graph: MultiGraph
    beta: int
    theta: int
    t: list[list[int]]          # [tile][symbol] cohesive-end counts
    w: list[list[int]]          # [vertex][symbol] labelled degrees
    x: list[list[int]]          # [vertex][tile] assignment flags
    k: list[int]                # [tile] non-empty flags
    e: list[list[int]]          # [half-edge][symbol] label flags
    m_bond: list[int] = field(default_factory=list)  # per-bond edge counts (aux)

    @property
    def symbols(self) -> int:
        return 2 * self.beta

    def digit_vars(self) -> list[int]:
        return [v for row in self.t for v in row]


def _bfs_vertex_order(g: MultiGraph) -> list[int]:
    seen = [False] * g.vertex_count
    order: list[int] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            order.append(u)
            for h in g.half_edges_of(u):
                v = g.owner(g.partner(h))
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


def build_pcc(
    g: MultiGraph,
    beta: int,
    theta_max: int | None = None,
    *,
    size_limit: int = DEFAULT_MODEL_SIZE_LIMIT,
) -> tuple[ilp.IpModel, PccVars]:
    """Build the pot construction constraints for <= beta bonds, <= theta tiles.

    Feasible points are exactly the decision-variable encodings of assembly
    designs of g; a few implied rows (one label per half-edge, per-bond edge
    counts, tile-degree links) are added because they propagate much better
    than the raw constraints alone, without changing the feasible set.
    """
    n = g.vertex_count
    if n == 0:
        raise GraphError("PCC needs a non-empty graph")
    if beta < 1:
        raise GraphError("PCC needs beta >= 1")
    theta = n if theta_max is None else theta_max
    if not 1 <= theta <= n:
        raise GraphError("theta_max must be in 1..#V")
    nsym = 2 * beta
    nhalf = g.half_edge_count
    approx_vars = theta * nsym + n * nsym + n * theta + theta + nhalf * nsym + beta
    if approx_vars > size_limit:
        raise ModelTooLarge(
            f"PCC model would need about {approx_vars} variables (limit {size_limit})"
        )
    delta = g.max_degree
    model = ilp.IpModel(f"pcc(beta={beta},theta={theta})")
    t = [[model.add_var(0, delta, f"t[{k0},{s}]") for s in range(nsym)] for k0 in range(theta)]
    w = [
        [model.add_var(0, min(delta, g.degree(i)), f"w[{i},{s}]") for s in range(nsym)]
        for i in range(n)
    ]
    x = [[model.add_binary(f"x[{i},{k0}]") for k0 in range(theta)] for i in range(n)]
    k = [model.add_binary(f"k[{k0}]") for k0 in range(theta)]
    e = [[model.add_binary(f"e[{h},{s}]") for s in range(nsym)] for h in range(nhalf)]
    m_bond = [model.add_var(0, g.edge_count, f"m[{b}]") for b in range(beta)]
    pv = PccVars(g, beta, theta, t, w, x, k, e, m_bond)

    # C1: net count of each bond type is zero across all vertices
    for b in range(beta):
        terms = [(w[i][2 * b], 1) for i in range(n)] + [(w[i][2 * b + 1], -1) for i in range(n)]
        model.add_eq(terms, 0)
    # C2: labelled degrees sum to the vertex degree
    for i in range(n):
        model.add_eq([(w[i][s], 1) for s in range(nsym)], g.degree(i))
    # C3: exactly one tile per vertex
    for i in range(n):
        model.add_eq([(x[i][k0], 1) for k0 in range(theta)], 1)
    # C4/C5: selecting tile k0 forces w[i] = t[k0] (bounded above per symbol,
    # with equal totals); plus the implied degree link for early pruning
    for i in range(n):
        for k0 in range(theta):
            guard = x[i][k0]
            for s in range(nsym):
                model.add_indicator(guard, 1, [(w[i][s], 1), (t[k0][s], -1)], ub=0)
            both = [(w[i][s], 1) for s in range(nsym)] + [(t[k0][s], -1) for s in range(nsym)]
            model.add_indicator(guard, 1, both, lb=0, ub=0)
            model.add_indicator(
                guard, 1, [(t[k0][s], 1) for s in range(nsym)], lb=g.degree(i), ub=g.degree(i)
            )
    # C6: k flags cover non-empty tiles
    for k0 in range(theta):
        model.add_le([(t[k0][s], 1) for s in range(nsym)] + [(k[k0], -delta)], 0)
    # C7: labelled degree counts incident half-edge labels
    for i in range(n):
        hs = g.half_edges_of(i)
        for s in range(nsym):
            model.add_eq([(w[i][s], 1)] + [(e[h][s], -1) for h in hs], 0)
    # C8/C9 per edge, plus the implied one-label-per-half-edge row
    for h, p in g.edge_pairs():
        model.add_eq([(e[h][s], 1) for s in range(nsym)] + [(e[p][s], 1) for s in range(nsym)], 2)
        for s in range(nsym):
            model.add_eq([(e[h][s], 1), (e[p][s ^ 1], -1)], 0)
    for h in range(nhalf):
        model.add_eq([(e[h][s], 1) for s in range(nsym)], 1)
    # implied per-bond edge counts: both sides of a bond label equally many
    # half-edges, and the bond counts partition the edge set
    for b in range(beta):
        model.add_eq([(w[i][2 * b], 1) for i in range(n)] + [(m_bond[b], -1)], 0)
        model.add_eq([(w[i][2 * b + 1], 1) for i in range(n)] + [(m_bond[b], -1)], 0)
    model.add_eq([(m_bond[b], 1) for b in range(beta)], g.edge_count)

    order: list[int] = [v for row in t for v in row]
    for i in _bfs_vertex_order(g):
        order.extend(x[i])
        for h in g.half_edges_of(i):
            order.extend(e[h])
    model.set_branch_order(order)
    for row in x:
        for v in row:
            model.set_value_order_hi(v)
    for row in e:
        for v in row:
            model.set_value_order_hi(v)
    return model, pv


def build_prc(
    model: ilp.IpModel, pv: PccVars, theta: int, beta: int
) -> ilp.IpModel:
    """Add the pot restriction constraints for exactly theta tiles, beta bonds.

    Slots past theta are pinned empty; every bond appears un-hatted (its
    hatted complement then appears too, since every tile is used and each
    labelled half-edge has a complementary partner, so both rows are valid);
    every tile is used; consecutive tile vectors strictly decrease in their
    positional q-value, which fixes one canonical tile order per pot.
    """
    if not 1 <= theta <= pv.theta:
        raise GraphError("PRC theta out of range")
    if beta != pv.beta:
        raise GraphError("PRC beta must match the PCC model")
    nsym = pv.symbols
    for k0 in range(theta, pv.theta):
        for s in range(nsym):
            model.add_eq([(pv.t[k0][s], 1)], 0)
    for b in range(beta):
        model.add_ge([(pv.t[k0][2 * b], 1) for k0 in range(theta)], 1)
        model.add_ge([(pv.t[k0][2 * b + 1], 1) for k0 in range(theta)], 1)
    for k0 in range(theta):
        model.add_ge([(pv.x[i][k0], 1) for i in range(pv.graph.vertex_count)], 1)
    base = pv.graph.max_degree + 1
    weights = [base ** (nsym - 1 - s) for s in range(nsym)]
    for k0 in range(theta - 1):
        terms = [(pv.t[k0][s], weights[s]) for s in range(nsym)]
        terms += [(pv.t[k0 + 1][s], -weights[s]) for s in range(nsym)]
        model.add_ge(terms, 1)
    return model


# ---------------------------------------------------------------------------
# decoding and encoding between solver assignments and domain objects
# ---------------------------------------------------------------------------


def decode_design(
    pv: PccVars, values: tuple[int, ...], bond_map: tuple[int, ...] | None = None
) -> AssemblyDesign:
    labels = []
    for h in range(pv.graph.half_edge_count):
        symbol = None
        for s in range(pv.symbols):
            if values[pv.e[h][s]]:
                if symbol is not None:
                    raise AssertionError(f"half-edge {h} carries two labels")
                symbol = s
        if symbol is None:
            raise AssertionError(f"half-edge {h} carries no label")
        bond = symbol // 2 if bond_map is None else bond_map[symbol // 2]
        labels.append(CohesiveEnd(bond, bool(symbol & 1)))
    design = AssemblyDesign(tuple(labels))
    design.validate(pv.graph)
    return design


def decode_tiles(
    pv: PccVars, values: tuple[int, ...], bond_map: tuple[int, ...] | None = None
) -> list[Tile]:
    tiles = []
    for k0 in range(pv.theta):
        counts = []
        for b in range(pv.beta):
            bond = b if bond_map is None else bond_map[b]
            counts.append(
                (bond, values[pv.t[k0][2 * b]], values[pv.t[k0][2 * b + 1]])
            )
        tiles.append(Tile(counts))
    return tiles


def encode_design(
    pv: PccVars, design: AssemblyDesign, tiles: list[Tile] | None = None
) -> dict[int, tuple[int, int]]:
    """Pin every PCC variable to the encoding of a concrete design.

    Used by round-trip tests: the returned overrides must leave the model
    feasible with no free search at all.
    """
    g = pv.graph
    design.validate(g)
    if tiles is None:
        tiles = []
        for v in range(g.vertex_count):
            tv = design.tile_at(g, v)
            if tv not in tiles:
                tiles.append(tv)
    if len(tiles) > pv.theta:
        raise PotError(f"design uses {len(tiles)} tiles but model has {pv.theta} slots")
    overrides: dict[int, tuple[int, int]] = {}

    def pin(var: int, val: int) -> None:
        overrides[var] = (val, val)

    for k0 in range(pv.theta):
        tile = tiles[k0] if k0 < len(tiles) else Tile(())
        for b in range(pv.beta):
            pin(pv.t[k0][2 * b], tile.count(b, False))
            pin(pv.t[k0][2 * b + 1], tile.count(b, True))
        pin(pv.k[k0], 1 if k0 < len(tiles) and tile.arms else 0)
    for i in range(g.vertex_count):
        ti = design.tile_at(g, i)
        slot = tiles.index(ti)
        for k0 in range(pv.theta):
            pin(pv.x[i][k0], 1 if k0 == slot else 0)
        for b in range(pv.beta):
            pin(pv.w[i][2 * b], ti.count(b, False))
            pin(pv.w[i][2 * b + 1], ti.count(b, True))
    for h in range(g.half_edge_count):
        end = design.labels[h]
        s_set = 2 * end.bond + (1 if end.hatted else 0)
        for s in range(pv.symbols):
            pin(pv.e[h][s], 1 if s == s_set else 0)
    counts = [0] * pv.beta
    for h, _ in g.edge_pairs():
        counts[design.labels[h].bond] += 1
    for b in range(pv.beta):
        pin(pv.m_bond[b], counts[b])
    return overrides


# ---------------------------------------------------------------------------
# Scenario 1
# ---------------------------------------------------------------------------


@dataclass
class S1Result:
    status: str                     # optimal | indeterminate
    t1: int | None = None
    b1: int | None = None
    pot: Pot | None = None
    design: AssemblyDesign | None = None
    nodes: int = 0
    seconds: float = 0.0


def _add_s1_shaping(model: ilp.IpModel, pv: PccVars) -> None:
    """Feasibility-preserving canonical form for the Scenario-1 theta sweep.

    Any design with at most theta distinct tiles can be written with used
    slots first, empty slots last, tile vectors in non-increasing q order,
    every flagged slot actually used, and slot arm counts drawn from the
    degree set (or zero).  Restricting to that canonical form loses no
    designs and prunes enormously.
    """
    g = pv.graph
    nsym = pv.symbols
    base = g.max_degree + 1
    weights = [base ** (nsym - 1 - s) for s in range(nsym)]
    degree_set = sorted(set(g.degrees))
    arm_choices = degree_set if 0 in degree_set else [0] + degree_set
    arm_class: list[list[tuple[int, int]]] = []
    order: list[int] = []
    for k0 in range(pv.theta):
        model.add_indicator(
            pv.k[k0], 1, [(pv.x[i][k0], 1) for i in range(g.vertex_count)], lb=1
        )
        if k0 + 1 < pv.theta:
            model.add_ge([(pv.k[k0], 1), (pv.k[k0 + 1], -1)], 0)
            terms = [(pv.t[k0][s], weights[s]) for s in range(nsym)]
            terms += [(pv.t[k0 + 1][s], -weights[s]) for s in range(nsym)]
            model.add_ge(terms, 0)
        slot_class = []
        for d in arm_choices:
            a = model.add_binary(f"a[{k0},{d}]")
            slot_class.append((d, a))
            model.add_indicator(
                a, 1, [(pv.t[k0][s], 1) for s in range(nsym)], lb=d, ub=d
            )
        model.add_eq([(a, 1) for _, a in slot_class], 1)
        arm_class.append(slot_class)
        order.extend(a for _, a in slot_class)
        order.extend(pv.t[k0])
    for d in degree_set:
        model.add_ge(
            [(a, 1) for classes in arm_class for dd, a in classes if dd == d], 1
        )
    for i in _bfs_vertex_order(g):
        order.extend(pv.x[i])
        for h in g.half_edges_of(i):
            order.extend(pv.e[h])
    model.set_branch_order(order)


def solve_s1(g: MultiGraph, limits: ilp.Limits | None = None) -> S1Result:
    """Fewest tile types realizing g (one bond-edge type suffices).

    Scans theta = 1, 2, ... and returns at the first feasible PCC(1) model;
    that minimum equals the minimum of sum(k) over the full-size model.
    """
    start = time.monotonic()
    limits = limits or ilp.Limits()
    deadline = limits.to_deadline()
    if g.vertex_count == 0:
        raise GraphError("Scenario 1 needs a non-empty graph")
    if g.edge_count == 0:
        design = AssemblyDesign(())
        return S1Result(status="optimal", t1=0, b1=0, pot=Pot(()), design=design)
    has_isolated = g.min_degree == 0
    nodes = 0
    for m in range(1, g.vertex_count + 1):
        theta = min(g.vertex_count, m + 1) if has_isolated else m
        model, pv = build_pcc(g, 1, theta)
        _add_s1_shaping(model, pv)
        res = ilp.solve(model, ilp.Limits(deadline=deadline, max_nodes=limits.max_nodes))
        nodes += res.stats.nodes
        if res.status is ilp.Status.RESOURCE_LIMIT:
            return S1Result(status="indeterminate", nodes=nodes, seconds=time.monotonic() - start)
        if res.status is ilp.Status.INFEASIBLE:
            continue
        design = decode_design(pv, res.values)
        tiles: list[Tile] = []
        for v in range(g.vertex_count):
            tv = design.tile_at(g, v)
            if tv.arms and tv not in tiles:
                tiles.append(tv)
        assert len(tiles) == m, "theta sweep found a smaller pot than its own bound"
        pot = Pot(tiles)
        return S1Result(
            status="optimal",
            t1=len(tiles),
            b1=1,
            pot=pot,
            design=design,
            nodes=nodes,
            seconds=time.monotonic() - start,
        )
    raise AssertionError("PCC(1) with theta = #V is always feasible")


# ---------------------------------------------------------------------------
# Scenario 2
# ---------------------------------------------------------------------------


@dataclass
class VerifyResult:
    realizes: bool | None           # None = indeterminate
    design: AssemblyDesign | None = None
    nodes: int = 0


_skeleton_cache: dict[tuple, tuple[ilp.IpModel, PccVars]] = {}


def _pcc_skeleton(
    g: MultiGraph, beta: int, theta: int, require_all_used: bool
) -> tuple[ilp.IpModel, PccVars]:
    key = (g, beta, theta, require_all_used)
    hit = _skeleton_cache.get(key)
    if hit is not None:
        return hit
    model, pv = build_pcc(g, beta, min(theta, g.vertex_count))
    if theta > g.vertex_count:
        raise GraphError("internal: theta beyond vertex count")
    if require_all_used:
        for k0 in range(theta):
            model.add_ge([(pv.x[i][k0], 1) for i in range(g.vertex_count)], 1)
    if len(_skeleton_cache) > 64:
        _skeleton_cache.clear()
    _skeleton_cache[key] = (model, pv)
    return model, pv


def verify_realizes(
    pot: Pot,
    g: MultiGraph,
    *,
    require_all_used: bool = False,
    limits: ilp.Limits | None = None,
) -> VerifyResult:
    """Does the pot realize g?  Subset semantics by default.

    With require_all_used=True every pot tile must label some vertex, which
    is the form the Scenario-2 candidate loop needs.  The answer comes from
    the PCC model with tile contents pinned to the pot.
    """
    missing = pot.validate()
    if missing:
        raise PotError(f"pot is not well formed; missing {','.join(map(str, missing))}")
    delta = g.max_degree
    usable = [t for t in pot.tiles if t.arms <= delta]
    if len(usable) < pot.size:
        # a tile with more arms than the maximum degree can label nothing
        if require_all_used:
            return VerifyResult(realizes=False)
        if not usable:
            return VerifyResult(realizes=False)
        return verify_realizes(Pot(usable), g, require_all_used=False, limits=limits)
    if pot.size > g.vertex_count:
        if require_all_used:
            return VerifyResult(realizes=False)
        return _verify_subsets(pot, g, limits)
    model, pv = _pcc_skeleton(g, pot.beta, pot.size, require_all_used)
    overrides: dict[int, tuple[int, int]] = {}
    for k0, tile in enumerate(pot.tiles):
        digits = pot.tile_vector(tile)
        for s, d in enumerate(digits):
            overrides[pv.t[k0][s]] = (d, d)
        overrides[pv.k[k0]] = (1, 1) if tile.arms else (0, 0)
    res = ilp.solve(model, limits, overrides=overrides)
    if res.status is ilp.Status.RESOURCE_LIMIT:
        return VerifyResult(realizes=None, nodes=res.stats.nodes)
    if res.status is ilp.Status.INFEASIBLE:
        return VerifyResult(realizes=False, nodes=res.stats.nodes)
    design = decode_design(pv, res.values, bond_map=pot.bonds)
    return VerifyResult(realizes=True, design=design, nodes=res.stats.nodes)


def _verify_subsets(pot: Pot, g: MultiGraph, limits) -> VerifyResult:
    """Subset semantics when the pot has more tiles than g has vertices."""
    from itertools import combinations

    nodes = 0
    for subset in combinations(pot.tiles, g.vertex_count):
        res = verify_realizes(Pot(subset), g, require_all_used=False, limits=limits)
        nodes += res.nodes
        if res.realizes:
            return VerifyResult(realizes=True, design=res.design, nodes=nodes)
        if res.realizes is None:
            return VerifyResult(realizes=None, nodes=nodes)
    return VerifyResult(realizes=False, nodes=nodes)


@dataclass
class S2CellResult:
    beta: int
    theta: int
    outcome: str                    # found | none | indeterminate
    pot: Pot | None = None
    design: AssemblyDesign | None = None
    candidates: int = 0             # pots emitted by the enumeration
    checked: int = 0                # candidates that realize g (SRP-tested)
    q_values: list[int] = field(default_factory=list)
    reason: str = ""
    seconds: float = 0.0
    nodes: int = 0


def _usage_feasible(pot: Pot, g: MultiGraph) -> bool:
    """Necessary condition: per-tile usage counts consistent with g exist."""
    n = g.vertex_count
    model = ilp.IpModel("usage")
    c = [model.add_var(1, n, f"c{j}") for j in range(pot.size)]
    model.add_eq([(cj, 1) for cj in c], n)
    matrix = pot.construction_matrix()
    for row in matrix.z:
        model.add_eq([(c[j], z) for j, z in enumerate(row) if z], 0)
    by_arms: dict[int, list[int]] = {}
    for j, tile in enumerate(pot.tiles):
        by_arms.setdefault(tile.arms, []).append(j)
    degree_counts: dict[int, int] = {}
    for d in g.degrees:
        degree_counts[d] = degree_counts.get(d, 0) + 1
    for arms, js in by_arms.items():
        want = degree_counts.get(arms, 0)
        if want == 0:
            return False
        model.add_eq([(c[j], 1) for j in js], want)
    res = ilp.solve(model)
    return res.status is ilp.Status.OPTIMAL


def _pot_digit_model(g: MultiGraph, beta: int, theta: int) -> tuple[ilp.IpModel, list[list[int]], list[int]]:
    """The outer candidate generator: pot digit vectors in increasing q order.

    Carries only constraints that are consequences of "this pot realizes g
    with every tile and every bond used": arm counts lie in the degree set,
    every degree class is served by some tile, both ends of every bond
    appear, and tile vectors strictly decrease.  Everything else is left to
    the realization check, so enumeration order matches the paper's loop on
    exactly the pots that matter.
    """
    delta = g.max_degree
    nsym = 2 * beta
    model = ilp.IpModel(f"pots(beta={beta},theta={theta})")
    t = [[model.add_var(0, delta, f"t[{k0},{s}]") for s in range(nsym)] for k0 in range(theta)]
    degree_set = sorted(set(g.degrees))
    arm_class: list[list[tuple[int, int]]] = []
    for k0 in range(theta):
        classes = []
        for d in degree_set:
            a = model.add_binary(f"a[{k0},{d}]")
            classes.append((d, a))
            model.add_indicator(a, 1, [(t[k0][s], 1) for s in range(nsym)], lb=d, ub=d)
        model.add_eq([(a, 1) for _, a in classes], 1)
        arm_class.append(classes)
    for d in degree_set:
        model.add_ge([(a, 1) for classes in arm_class for dd, a in classes if dd == d], 1)
    for b in range(beta):
        model.add_ge([(t[k0][2 * b], 1) for k0 in range(theta)], 1)
        model.add_ge([(t[k0][2 * b + 1], 1) for k0 in range(theta)], 1)
    base = delta + 1
    weights = [base ** (nsym - 1 - s) for s in range(nsym)]
    for k0 in range(theta - 1):
        terms = [(t[k0][s], weights[s]) for s in range(nsym)]
        terms += [(t[k0 + 1][s], -weights[s]) for s in range(nsym)]
        model.add_ge(terms, 1)
    digit_vars = [v for row in t for v in row]
    model.set_objective_stages([[(v, 1)] for v in digit_vars])
    model.set_branch_order(digit_vars + [a for classes in arm_class for _, a in classes])
    return model, t, digit_vars


def find_s2_pot(
    g: MultiGraph,
    beta: int,
    theta: int,
    limits: ilp.Limits | None = None,
) -> S2CellResult:
    """Search for a Scenario-2 pot with exactly beta bonds and theta tiles.

    Implements the candidate loop: take the feasible pot of minimum
    characteristic value above the exclusion bound, test it for smaller
    realizations, and either return it or exclude it and continue.  The
    emitted characteristic values strictly increase, so the loop terminates
    with either a pot or an exhaustion proof.
    """
    start = time.monotonic()
    limits = limits or ilp.Limits()
    deadline = limits.to_deadline()
    n = g.vertex_count
    result = S2CellResult(beta=beta, theta=theta, outcome="none")
    if n == 0 or g.edge_count == 0:
        raise GraphError("Scenario 2 needs a graph with at least one edge")
    if theta > n or theta < 1 or beta < 1:
        result.reason = "no pot of that shape can use every tile"
        return result
    base = g.max_degree + 1
    model, t, digit_vars = _pot_digit_model(g, beta, theta)
    prev_q: int | None = None
    while True:
        res = ilp.solve(model, ilp.Limits(deadline=deadline, max_nodes=limits.max_nodes))
        result.nodes += res.stats.nodes
        if res.status is ilp.Status.RESOURCE_LIMIT:
            result.outcome = "indeterminate"
            result.reason = "candidate enumeration hit its budget"
            break
        if res.status is ilp.Status.INFEASIBLE:
            result.outcome = "none"
            break
        digits = tuple(res.values[v] for v in digit_vars)
        tiles = []
        for k0 in range(theta):
            counts = [
                (b, res.values[t[k0][2 * b]], res.values[t[k0][2 * b + 1]])
                for b in range(beta)
            ]
            tiles.append(Tile(counts))
        pot = Pot(tiles)
        result.candidates += 1
        q_val = pot.characteristic_value(base)
        assert prev_q is None or q_val > prev_q, "characteristic values must increase"
        prev_q = q_val
        model.set_exclusion_lex_gt(digit_vars, digits)
        if not _usage_feasible(pot, g):
            continue
        check = verify_realizes(pot, g, require_all_used=True,
                                limits=ilp.Limits(deadline=deadline))
        result.nodes += check.nodes
        if check.realizes is None:
            result.outcome = "indeterminate"
            result.reason = "realization check hit its budget"
            break
        if not check.realizes:
            continue
        result.checked += 1
        result.q_values.append(q_val)
        try:
            smaller = has_smaller_realization(pot, n, ilp.Limits(deadline=deadline))
        except ResourceLimitError:
            result.outcome = "indeterminate"
            result.reason = "smaller-realization check hit its budget"
            break
        if smaller:
            continue
        result.outcome = "found"
        result.pot = pot
        result.design = check.design
        break
    result.seconds = time.monotonic() - start
    return result


@dataclass
class S2Result:
    status: str                     # optimal | partial | indeterminate | exhausted
    t2: int | None = None
    b2: int | None = None
    b2_upper: int | None = None     # reported bound when b2 is not exact
    pot_tiles: Pot | None = None
    design_tiles: AssemblyDesign | None = None
    pot_bonds: Pot | None = None
    design_bonds: AssemblyDesign | None = None
    cells: list[S2CellResult] = field(default_factory=list)
    blocked_cell: tuple[int, int] | None = None
    seconds: float = 0.0

    @property
    def b2_exact(self) -> bool:
        return self.status == "optimal"


def solve_s2(
    g: MultiGraph,
    limits: ilp.Limits | None = None,
    *,
    skip_bond_verification: bool = False,
    cell_limits: ilp.Limits | None = None,
) -> S2Result:
    """Full Scenario-2 search: T2 first, then B2 verification.

    Phase 1 scans (theta, beta) cells with theta increasing and beta
    increasing below theta (below-or-equal for graphs with at most two
    vertices, where the bond/tile gap theorem does not apply); the first
    found pot fixes T2.  Phase 2 rescans beta' below the found beta across
    theta' in [T2, #V]; the smallest beta' with a pot is B2, and cells that
    blow their budget downgrade B2 to a reported upper bound.
    """
    start = time.monotonic()
    limits = limits or ilp.Limits()
    deadline = limits.to_deadline()
    out = S2Result(status="indeterminate")

    def cell_budget() -> ilp.Limits:
        if cell_limits is None:
            return ilp.Limits(deadline=deadline)
        d = cell_limits.to_deadline()
        if deadline is not None and (d is None or d > deadline):
            d = deadline
        return ilp.Limits(deadline=d, max_nodes=cell_limits.max_nodes)

    n = g.vertex_count
    found: S2CellResult | None = None
    for theta in range(1, n + 1):
        beta_hi = theta if n <= 2 else theta - 1
        for beta in range(1, beta_hi + 1):
            cell = find_s2_pot(g, beta, theta, cell_budget())
            out.cells.append(cell)
            if cell.outcome == "found":
                found = cell
                break
            if cell.outcome == "indeterminate":
                out.blocked_cell = (beta, theta)
                out.seconds = time.monotonic() - start
                return out
        if found:
            break
    if found is None:
        out.status = "exhausted"
        out.seconds = time.monotonic() - start
        return out
    out.t2 = found.theta
    out.pot_tiles = found.pot
    out.design_tiles = found.design
    beta_found = found.beta

    if skip_bond_verification or beta_found == 1:
        out.status = "optimal" if beta_found == 1 else "partial"
        out.b2 = beta_found if beta_found == 1 else None
        out.b2_upper = beta_found
        if beta_found == 1:
            out.pot_bonds = found.pot
            out.design_bonds = found.design
        out.seconds = time.monotonic() - start
        return out

    best_beta: int | None = None
    unresolved = False
    for beta_p in range(1, beta_found):
        stop = False
        for theta_p in range(out.t2, n + 1):
            cell = find_s2_pot(g, beta_p, theta_p, cell_budget())
            out.cells.append(cell)
            if cell.outcome == "found":
                best_beta = beta_p
                out.pot_bonds = cell.pot
                out.design_bonds = cell.design
                stop = True
                break
            if cell.outcome == "indeterminate":
                unresolved = True
                out.blocked_cell = (beta_p, theta_p)
                stop = True
                break
        if stop:
            break
    if unresolved:
        out.status = "partial"
        out.b2 = None
        out.b2_upper = best_beta if best_beta is not None else beta_found
    else:
        out.status = "optimal"
        out.b2 = best_beta if best_beta is not None else beta_found
        out.b2_upper = out.b2
        if best_beta is None:
            out.pot_bonds = found.pot
            out.design_bonds = found.design
    out.seconds = time.monotonic() - start
    return out
