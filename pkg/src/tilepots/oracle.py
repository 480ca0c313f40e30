"""Naive reference implementations used to cross-check the solvers.

Everything here enumerates exhaustively with at most an early exit, which
keeps the code trustworthy as ground truth but limits it to tiny inputs.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .designs import AssemblyDesign
from .graphs import GraphError, MultiGraph
from .pots import CohesiveEnd, Pot, TileDistribution
from .srp import SrpResult

MAX_DESIGN_SPACE = 20_000_000


def iter_designs(g: MultiGraph, beta: int) -> Iterator[AssemblyDesign]:
    """All assembly designs using bond types 0..beta-1: (2*beta)**#E of them.

    Each edge independently picks a bond type and an orientation (which
    half-edge carries the un-hatted end).
    """
    pairs = g.edge_pairs()
    space = (2 * beta) ** len(pairs)
    if space > MAX_DESIGN_SPACE:
        raise GraphError(f"design space {space} too large for the oracle")
    nhalf = g.half_edge_count
    for choice in product(range(2 * beta), repeat=len(pairs)):
        labels: list[CohesiveEnd | None] = [None] * nhalf
        for (h, p), code in zip(pairs, choice):
            bond, flip = divmod(code, 2)
            labels[h] = CohesiveEnd(bond, bool(flip))
            labels[p] = CohesiveEnd(bond, not flip)
        yield AssemblyDesign(tuple(labels))  # type: ignore[arg-type]


def srp_oracle(pot: Pot, cap: int) -> SrpResult:
    """Minimum realization order by exhausting all distributions up to cap."""
    missing = pot.validate()
    if missing:
        return SrpResult(kind="invalid_pot", cap=cap, missing=missing)
    matrix = pot.construction_matrix()
    p = pot.size

    def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for order in range(1, cap + 1):
        for counts in compositions(order, p):
            if matrix.balances(counts):
                return SrpResult(
                    kind="min_order",
                    cap=cap,
                    order=order,
                    distribution=TileDistribution(counts),
                )
    return SrpResult(kind="none_within_cap", cap=cap)


def scenario2_valid(pot: Pot, g: MultiGraph) -> bool:
    """True when the pot realizes nothing smaller than g (oracle check)."""
    res = srp_oracle(pot, g.vertex_count)
    return res.kind == "min_order" and res.order == g.vertex_count


def min_pot_oracle(
    g: MultiGraph, beta: int, scenario: int
) -> tuple[int | None, tuple[Pot, ...]]:
    """Fewest tile types over all designs with <= beta bonds, plus witnesses.

    Scenario 2 keeps only pots whose smallest realization is g itself.
    Returns (None, ()) when no design qualifies.
    """
    if scenario not in (1, 2):
        raise GraphError("scenario must be 1 or 2")
    best: int | None = None
    witnesses: set[Pot] = set()
    seen: set[Pot] = set()
    for design in iter_designs(g, beta):
        pot, _ = design.assembling_pot(g)
        if pot in seen:
            continue
        seen.add(pot)
        if scenario == 2 and not scenario2_valid(pot, g):
            continue
        if best is None or pot.size < best:
            best = pot.size
            witnesses = {pot}
        elif pot.size == best:
            witnesses.add(pot)
    return best, tuple(sorted(witnesses, key=str))


def s2_cells_oracle(g: MultiGraph, beta_max: int) -> set[tuple[int, int]]:
    """All (bond count, tile count) shapes of valid Scenario-2 pots.

    A shape (b, t) is present when some assembly design of g yields an
    assembling pot with exactly b bond types and t tiles that realizes no
    smaller graph; this mirrors the per-cell question the Scenario-2 search
    answers.
    """
    cells: set[tuple[int, int]] = set()
    seen: set[Pot] = set()
    for design in iter_designs(g, beta_max):
        pot, _ = design.assembling_pot(g)
        if pot in seen:
            continue
        seen.add(pot)
        if scenario2_valid(pot, g):
            cells.add((pot.beta, pot.size))
    return cells
