"""Cohesive ends, tiles, pots, and their integer encodings.

A tile is a multiset of cohesive-end types; a pot is an ordered collection
of distinct tiles.  Bond-edge types are numbered from 0 and rendered as
letters: lowercase for an un-hatted end, uppercase for its hatted
complement ("aaB" is two un-hatted a-ends and one hatted b-end).  A digit
suffix is a repetition count, so "a2B" and "aaB" are the same tile.

The module also provides the positional-integer encodings used to order
pots during enumerative searches: tile vectors, pot vectors, q-values and
characteristic values.  Those values grow like base**(2*beta*theta), so
they are plain Python integers, never floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_DISPLAY_BONDS = 26


class PotError(ValueError):
    """Malformed tile or pot input, or an unrepresentable encoding request."""


@dataclass(frozen=True, order=True)
class CohesiveEnd:
    """One cohesive-end type: a bond-edge index plus a hatted flag."""

    bond: int
    hatted: bool = False

    def complement(self) -> "CohesiveEnd":
        return CohesiveEnd(self.bond, not self.hatted)

    def __str__(self) -> str:
        if not 0 <= self.bond < MAX_DISPLAY_BONDS:
            raise PotError(f"bond index {self.bond} has no letter form (need 0..25)")
        letter = chr(ord("a") + self.bond)
        return letter.upper() if self.hatted else letter


class Tile:
    """A tile type: non-negative counts of cohesive ends, keyed by bond index.

    Tiles are immutable and hashable.  The canonical string form lists all
    un-hatted ends of bond a, then hatted a, then bond b, and so on.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Iterable[tuple[int, int, int]]):
        cleaned = []
        for bond, unhatted, hatted in counts:
            if bond < 0 or unhatted < 0 or hatted < 0:
                raise PotError("tile counts must be non-negative")
            if unhatted or hatted:
                cleaned.append((int(bond), int(unhatted), int(hatted)))
        cleaned.sort()
        if len({b for b, _, _ in cleaned}) != len(cleaned):
            raise PotError("duplicate bond entry in tile counts")
        object.__setattr__(self, "_counts", tuple(cleaned))

    @staticmethod
    def from_ends(ends: Iterable[CohesiveEnd]) -> "Tile":
        acc: dict[int, list[int]] = {}
        for end in ends:
            pair = acc.setdefault(end.bond, [0, 0])
            pair[1 if end.hatted else 0] += 1
        return Tile((b, u, h) for b, (u, h) in acc.items())

    @property
    def counts(self) -> tuple[tuple[int, int, int], ...]:
        return self._counts

    @property
    def bonds(self) -> tuple[int, ...]:
        return tuple(b for b, _, _ in self._counts)

    @property
    def arms(self) -> int:
        return sum(u + h for _, u, h in self._counts)

    def count(self, bond: int, hatted: bool) -> int:
        for b, u, h in self._counts:
            if b == bond:
                return h if hatted else u
        return 0

    def net(self, bond: int) -> int:
        """Un-hatted minus hatted ends of the given bond type."""
        for b, u, h in self._counts:
            if b == bond:
                return u - h
        return 0

    def ends(self) -> Iterator[CohesiveEnd]:
        for b, u, h in self._counts:
            for _ in range(u):
                yield CohesiveEnd(b, False)
            for _ in range(h):
                yield CohesiveEnd(b, True)

    def vector(self, beta: int) -> tuple[int, ...]:
        """Length-2*beta digit vector (u_0, h_0, u_1, h_1, ...).

        Bond indices are absolute: bond b occupies positions 2b and 2b+1.
        """
        if any(b >= beta for b in self.bonds):
            raise PotError(f"tile {self} uses a bond outside 0..{beta - 1}")
        digits = [0] * (2 * beta)
        for b, u, h in self._counts:
            digits[2 * b] = u
            digits[2 * b + 1] = h
        return tuple(digits)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tile) and self._counts == other._counts

    def __hash__(self) -> int:
        return hash(self._counts)

    def __str__(self) -> str:
        return "".join(str(e) for e in self.ends())

    def compact(self) -> str:
        """Exponent form for display, e.g. a^200 prints as 'a200'."""
        out = []
        for b, u, h in self._counts:
            lo = str(CohesiveEnd(b, False))
            hi = str(CohesiveEnd(b, True))
            if u:
                out.append(lo if u == 1 else f"{lo}{u}")
            if h:
                out.append(hi if h == 1 else f"{hi}{h}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Tile({self.compact()!r})"


EMPTY_TILE = Tile(())

_TOKEN = re.compile(r"([a-zA-Z])([0-9]*)")


def parse_tile(text: str) -> Tile:
    """Parse string notation into a tile; the empty string is the empty tile."""
    pos = 0
    ends: dict[int, list[int]] = {}
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PotError(f"illegal character {text[pos]!r} at column {pos + 1}")
        letter, digits = m.groups()
        count = 1
        if digits:
            count = int(digits)
            if count == 0:
                raise PotError(f"repetition count 0 at column {pos + 1}")
        bond = ord(letter.lower()) - ord("a")
        pair = ends.setdefault(bond, [0, 0])
        pair[1 if letter.isupper() else 0] += count
        pos = m.end()
    return Tile((b, u, h) for b, (u, h) in ends.items())


class Pot:
    """An ordered collection of distinct tiles.

    The construction order is preserved: construction-matrix columns and
    tile distributions follow it.  Order-independent views (pot vector,
    characteristic value, equality) sort tile vectors internally.
    """

    __slots__ = ("_tiles", "_bonds")

    def __init__(self, tiles: Iterable[Tile]):
        tiles = tuple(tiles)
        seen = set()
        for t in tiles:
            if t in seen:
                raise PotError(f"duplicate tile {t.compact()!r} in pot")
            seen.add(t)
        bonds = sorted({b for t in tiles for b in t.bonds})
        object.__setattr__(self, "_tiles", tiles)
        object.__setattr__(self, "_bonds", tuple(bonds))

    @property
    def tiles(self) -> tuple[Tile, ...]:
        return self._tiles

    @property
    def bonds(self) -> tuple[int, ...]:
        return self._bonds

    @property
    def beta(self) -> int:
        return len(self._bonds)

    @property
    def size(self) -> int:
        return len(self._tiles)

    @property
    def max_arms(self) -> int:
        return max((t.arms for t in self._tiles), default=0)

    def validate(self) -> tuple[CohesiveEnd, ...]:
        """Return every cohesive end whose complement never appears."""
        present = set()
        for t in self._tiles:
            for b, u, h in t.counts:
                if u:
                    present.add((b, False))
                if h:
                    present.add((b, True))
        missing = [
            CohesiveEnd(b, not hatted)
            for (b, hatted) in present
            if (b, not hatted) not in present
        ]
        return tuple(sorted(missing))

    @property
    def is_well_formed(self) -> bool:
        return not self.validate()

    def tile_vector(self, tile: Tile) -> tuple[int, ...]:
        """Digit vector of a tile in this pot's compacted bond layout."""
        rank = {b: i for i, b in enumerate(self._bonds)}
        digits = [0] * (2 * self.beta)
        for b, u, h in tile.counts:
            digits[2 * rank[b]] = u
            digits[2 * rank[b] + 1] = h
        return tuple(digits)

    def sorted_tiles(self) -> tuple[Tile, ...]:
        """Tiles in strictly decreasing lexicographic tile-vector order."""
        return tuple(sorted(self._tiles, key=self.tile_vector, reverse=True))

    def pot_vector(self) -> tuple[int, ...]:
        out: list[int] = []
        for t in self.sorted_tiles():
            out.extend(self.tile_vector(t))
        return tuple(out)

    def characteristic_value(self, base: int) -> int:
        return positional_value(self.pot_vector(), base)

    def construction_matrix(self) -> "ConstructionMatrix":
        rows = tuple(
            tuple(t.net(b) for t in self._tiles) for b in self._bonds
        )
        return ConstructionMatrix(self._bonds, rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Pot) and frozenset(self._tiles) == frozenset(other._tiles)

    def __hash__(self) -> int:
        return hash(frozenset(self._tiles))

    def __str__(self) -> str:
        return ",".join(t.compact() for t in self._tiles)

    def __repr__(self) -> str:
        return f"Pot({str(self)!r})"


def parse_pot(text: str) -> Pot:
    """Parse a comma-separated pot string; whitespace is ignored."""
    cleaned = re.sub(r"\s+", "", text)
    if not cleaned:
        raise PotError("empty pot string")
    return Pot(parse_tile(part) for part in cleaned.split(","))


@dataclass(frozen=True)
class ConstructionMatrix:
    """Net cohesive-end balance per bond type.

    Entry z[i][j] is the net number (un-hatted minus hatted) of ends of
    bond ``bonds[i]`` on the pot's j-th tile, in pot construction order.
    """

    bonds: tuple[int, ...]
    z: tuple[tuple[int, ...], ...]

    @property
    def num_tiles(self) -> int:
        return len(self.z[0]) if self.z else 0

    def balances(self, counts: Sequence[int]) -> bool:
        return all(
            sum(c * r for c, r in zip(counts, row)) == 0 for row in self.z
        )


@dataclass(frozen=True)
class TileDistribution:
    """Non-negative tile usage counts, in pot construction order."""

    counts: tuple[int, ...]

    @property
    def order(self) -> int:
        return sum(self.counts)

    def is_balanced(self, pot: Pot) -> bool:
        if len(self.counts) != pot.size:
            raise PotError("distribution length does not match pot size")
        return pot.construction_matrix().balances(self.counts)


def positional_value(digits: Sequence[int], base: int) -> int:
    """Read a digit vector as an integer in the given base.

    Every digit must be strictly below the base, otherwise distinct vectors
    could collide and the lexicographic/numeric equivalence would break.
    """
    if base < 2:
        raise PotError("base must be at least 2")
    value = 0
    for d in digits:
        if d < 0 or d >= base:
            raise PotError(f"digit {d} overflows base {base}")
        value = value * base + d
    return value


def tile_q_value(tile: Tile, beta: int, base: int) -> int:
    """The tile vector read as a base-``base`` integer (absolute bond layout)."""
    return positional_value(tile.vector(beta), base)
