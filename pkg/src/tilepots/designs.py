"""Assembly designs: cohesive-end labelings of a graph's half-edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import GraphError, MultiGraph
from .pots import CohesiveEnd, Pot, PotError, Tile, TileDistribution


@dataclass(frozen=True)
class AssemblyDesign:
    """One cohesive end per half-edge, complementary across every edge."""

    labels: tuple[CohesiveEnd, ...]

    def validate(self, g: MultiGraph) -> None:
        if len(self.labels) != g.half_edge_count:
            raise GraphError(
                f"design labels {len(self.labels)} half-edges, graph has {g.half_edge_count}"
            )
        for h, p in g.edge_pairs():
            if self.labels[h].complement() != self.labels[p]:
                raise GraphError(
                    f"half-edges {h},{p} labeled {self.labels[h]},{self.labels[p]}: "
                    "not complementary"
                )

    def bond_count(self) -> int:
        return len({end.bond for end in self.labels})

    def tile_at(self, g: MultiGraph, v: int) -> Tile:
        """The realization function f(v): the multiset of labels at v."""
        return Tile.from_ends(self.labels[h] for h in g.half_edges_of(v))

    def assembling_pot(self, g: MultiGraph) -> tuple[Pot, TileDistribution]:
        """The pot of distinct vertex tiles, ordered by first appearance."""
        tiles: list[Tile] = []
        index: dict[Tile, int] = {}
        counts: list[int] = []
        for v in range(g.vertex_count):
            t = self.tile_at(g, v)
            if t not in index:
                index[t] = len(tiles)
                tiles.append(t)
                counts.append(0)
            counts[index[t]] += 1
        return Pot(tiles), TileDistribution(tuple(counts))

    def distribution_over(self, g: MultiGraph, pot: Pot) -> TileDistribution:
        """Usage counts of each pot tile; raises if some f(v) is not in the pot."""
        index = {t: i for i, t in enumerate(pot.tiles)}
        counts = [0] * pot.size
        for v in range(g.vertex_count):
            t = self.tile_at(g, v)
            if t not in index:
                raise PotError(f"vertex {v} uses tile {t.compact()!r} not in pot")
            counts[index[t]] += 1
        return TileDistribution(tuple(counts))


def design_from_labels(labels: Sequence[CohesiveEnd], g: MultiGraph) -> AssemblyDesign:
    d = AssemblyDesign(tuple(labels))
    d.validate(g)
    return d
