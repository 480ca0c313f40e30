"""Multigraphs with explicit half-edges, named generators, and DOT export.

Half-edges are first class: every half-edge has an owning vertex and a
partner, and the partner relation is a fixed-point-free involution.  This
makes loops (both half-edges owned by one vertex) and parallel edges
unambiguous.  Graphs built from an edge list number half-edges 2k and 2k+1
for the k-th edge line, and every generator below documents its frozen
vertex numbering so solver witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed edge list, bad generator parameters, or inconsistent input."""


class MultiGraph:
    """An undirected multigraph stored as owner/partner half-edge arrays."""

    __slots__ = ("_n", "_owner", "_partner", "_degrees", "_half_edges_of")

    def __init__(self, vertex_count: int, owner: Sequence[int], partner: Sequence[int]):
        owner = tuple(owner)
        partner = tuple(partner)
        if vertex_count < 0:
            raise GraphError("vertex count must be non-negative")
        if len(owner) != len(partner) or len(owner) % 2:
            raise GraphError("half-edge arrays must have equal, even length")
        for h, p in enumerate(partner):
            if not 0 <= p < len(partner) or p == h or partner[p] != h:
                raise GraphError("partner relation is not a fixed-point-free involution")
        for v in owner:
            if not 0 <= v < vertex_count:
                raise GraphError(f"half-edge owner {v} out of range")
        degrees = [0] * vertex_count
        half_edges_of: list[list[int]] = [[] for _ in range(vertex_count)]
        for h, v in enumerate(owner):
            degrees[v] += 1
            half_edges_of[v].append(h)
        self._n = vertex_count
        self._owner = owner
        self._partner = partner
        self._degrees = tuple(degrees)
        self._half_edges_of = tuple(tuple(hs) for hs in half_edges_of)

    @staticmethod
    def from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> "MultiGraph":
        owner: list[int] = []
        partner: list[int] = []
        for u, v in edges:
            h = len(owner)
            owner.extend((u, v))
            partner.extend((h + 1, h))
        return MultiGraph(vertex_count, owner, partner)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def half_edge_count(self) -> int:
        return len(self._owner)

    @property
    def edge_count(self) -> int:
        return len(self._owner) // 2

    def owner(self, h: int) -> int:
        return self._owner[h]

    def partner(self, h: int) -> int:
        return self._partner[h]

    @property
    def owners(self) -> tuple[int, ...]:
        return self._owner

    @property
    def partners(self) -> tuple[int, ...]:
        return self._partner

    def half_edges_of(self, v: int) -> tuple[int, ...]:
        return self._half_edges_of[v]

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Each edge once, as its (smaller, larger) half-edge ids."""
        return [(h, self._partner[h]) for h in range(len(self._owner)) if h < self._partner[h]]

    def edges(self) -> list[tuple[int, int]]:
        """Each edge once, as owner endpoints (in half-edge id order)."""
        return [(self._owner[h], self._owner[p]) for h, p in self.edge_pairs()]

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self._degrees, default=0)

    def is_loop(self, h: int) -> bool:
        return self._owner[h] == self._owner[self._partner[h]]

    def components(self) -> list[list[int]]:
        """Vertex components (isolated vertices are their own components)."""
        parent = list(range(self._n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in self.edges():
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for v in range(self._n):
            groups.setdefault(find(v), []).append(v)
        return [groups[r] for r in sorted(groups, key=lambda r: groups[r][0])]

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self._n == other._n
            and self._owner == other._owner
            and self._partner == other._partner
        )

    def __hash__(self) -> int:
        return hash((self._n, self._owner, self._partner))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self._n}, edges={self.edges()})"


def from_edge_list(text: str) -> MultiGraph:
    """Parse an edge-list document.

    Each non-comment line holds two non-negative integers "u v"; "u u"
    denotes a loop and repeated lines denote parallel edges.  Lines starting
    with '#' are comments.  An optional first data line "n <N>" declares the
    vertex count; otherwise it is one more than the largest index used.
    """
    edges: list[tuple[int, int]] = []
    declared: int | None = None
    first_data = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first_data and parts[0] == "n":
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: malformed vertex-count header")
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed vertex-count header") from None
            if declared < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
            first_data = False
            continue
        first_data = False
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex indices, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex index in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
    used = max((max(u, v) for u, v in edges), default=-1) + 1
    n = used if declared is None else declared
    if used > n:
        raise GraphError(f"edge references vertex {used - 1} but header declares n={n}")
    return MultiGraph.from_edges(n, edges)


def to_edge_list(g: MultiGraph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dot(g: MultiGraph, design=None, name: str = "G") -> str:
    """Render as DOT.

    Without a design: an undirected graph, one edge statement per edge.
    With a design (a labeling of every half-edge with cohesive ends): each
    edge is directed from its un-hatted half-edge to its hatted one, edge
    labels carry the bond symbol, and vertex labels carry the tile string.
    """
    if design is None:
        body = [f"  {v};" for v in range(g.vertex_count)]
        body += [f"  {u} -- {v};" for u, v in g.edges()]
        return f"graph {name} {{\n" + "\n".join(body) + "\n}\n"
    labels = design.labels
    if len(labels) != g.half_edge_count:
        raise GraphError(
            f"design labels {len(labels)} half-edges but graph has {g.half_edge_count}"
        )
    body = []
    for v in range(g.vertex_count):
        ends = sorted(labels[h] for h in g.half_edges_of(v))
        tile = "".join(str(e) for e in ends)
        body.append(f'  {v} [label="{v}: {tile}"];')
    for h, p in g.edge_pairs():
        a, b = labels[h], labels[p]
        if a.complement() != b:
            raise GraphError(f"half-edges {h},{p} carry non-complementary labels")
        tail, head = (h, p) if not a.hatted else (p, h)
        bond = str(labels[tail])
        body.append(f'  {g.owner(tail)} -> {g.owner(head)} [label="{bond}"];')
    return f"digraph {name} {{\n" + "\n".join(body) + "\n}\n"


# ---------------------------------------------------------------------------
# Generators.  Vertex numbering is frozen; changing it would change witness
# output, so treat any renumbering as a breaking change.
# ---------------------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def complete(n: int) -> MultiGraph:
    """K_n on vertices 0..n-1, edges (i, j) for i < j in lexicographic order."""
    _require(n >= 1, "complete graph needs n >= 1")
    return MultiGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> MultiGraph:
    """C_n: edges (i, i+1 mod n).  C_1 is a loop, C_2 a doubled edge."""
    _require(n >= 1, "cycle needs n >= 1")
    return MultiGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    """P_n on n vertices (so P_2 is a single edge)."""
    _require(n >= 1, "path needs n >= 1")
    return MultiGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> MultiGraph:
    """S_n: hub 0 joined to leaves 1..n (n+1 vertices)."""
    _require(leaves >= 0, "star needs a non-negative leaf count")
    return MultiGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(n: int) -> MultiGraph:
    """W_n on n vertices total: hub 0 plus rim cycle 1..n-1 with spokes."""
    _require(n >= 4, "wheel needs n >= 4")
    rim = list(range(1, n))
    edges = [(0, v) for v in rim]
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return MultiGraph.from_edges(n, edges)


def gear(n: int) -> MultiGraph:
    """Gear G_n: hub 0, rim 1..2n; odd rim vertices are joined to the hub."""
    _require(n >= 3, "gear needs n >= 3")
    edges = [(0, 2 * i + 1) for i in range(n)]
    rim = list(range(1, 2 * n + 1))
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return MultiGraph.from_edges(2 * n + 1, edges)


def lollipop(m: int, n: int) -> MultiGraph:
    """L_{m,n}: K_m on 0..m-1 plus an n-vertex path hung off vertex m-1."""
    _require(m >= 2 and n >= 0, "lollipop needs m >= 2 and n >= 0")
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    edges += [(m - 1 + i, m + i) for i in range(n)]
    return MultiGraph.from_edges(m + n, edges)


def tadpole(m: int, n: int) -> MultiGraph:
    """T_{m,n}: cycle 0..m-1 plus an n-vertex path hung off vertex m-1."""
    _require(m >= 1 and n >= 0, "tadpole needs m >= 1 and n >= 0")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m - 1 + i, m + i) for i in range(n)]
    return MultiGraph.from_edges(m + n, edges)


def square_lattice(m: int, n: int) -> MultiGraph:
    """m-by-n grid; vertex (r, c) is r*n + c, edges right then down per cell."""
    _require(m >= 1 and n >= 1, "square lattice needs m, n >= 1")
    edges = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < m:
                edges.append((v, v + n))
    return MultiGraph.from_edges(m * n, edges)


def triangle_lattice(m: int, n: int) -> MultiGraph:
    """Triangular lattice with m rows and n columns of triangles.

    Node layout is the usual staggered grid of m+1 rows with one diagonal
    per grid cell, alternating direction by row parity; for odd n the
    surplus boundary nodes of odd rows are dropped.  Kept nodes are numbered
    row-major (row j first, then column i).
    """
    _require(m >= 1 and n >= 1, "triangle lattice needs m, n >= 1")
    cols = n // 2 + 1
    nodes = [(i, j) for j in range(m + 1) for i in range(cols + 1)]
    edges_ij = []
    edges_ij += [((i, j), (i + 1, j)) for j in range(m + 1) for i in range(cols)]
    edges_ij += [((i, j), (i, j + 1)) for j in range(m) for i in range(cols + 1)]
    edges_ij += [((i, j), (i + 1, j + 1)) for j in range(1, m, 2) for i in range(cols)]
    edges_ij += [((i + 1, j), (i, j + 1)) for j in range(0, m, 2) for i in range(cols)]
    if n % 2:
        dropped = {(cols, j) for j in range(1, m + 1, 2)}
    else:
        dropped = {(cols, j) for j in range(m + 1)}
    keep = [ij for ij in nodes if ij not in dropped]
    index = {ij: k for k, ij in enumerate(keep)}
    edges = [
        (index[a], index[b])
        for a, b in edges_ij
        if a not in dropped and b not in dropped
    ]
    return MultiGraph.from_edges(len(keep), edges)


def rook(m: int) -> MultiGraph:
    """The m x m rook's graph, as the Cartesian product K_m x K_m."""
    _require(m >= 1, "rook's graph needs m >= 1")
    return cartesian_product(complete(m), complete(m))


def petersen() -> MultiGraph:
    """Outer cycle 0..4, spokes (i, i+5), inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph.from_edges(10, edges)


def mobius_ladder(n: int) -> MultiGraph:
    """M_n on n vertices (n even): cycle 0..n-1 plus antipodal rungs."""
    _require(n >= 4 and n % 2 == 0, "Moebius ladder needs even n >= 4")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + n // 2) for i in range(n // 2)]
    return MultiGraph.from_edges(n, edges)


def turan(n: int, r: int) -> MultiGraph:
    """Turan graph T(n, r): complete multipartite with balanced parts.

    The first n % r parts have ceil(n/r) consecutive vertices, the rest
    floor(n/r).
    """
    _require(1 <= r <= n, "Turan graph needs 1 <= r <= n")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if part[i] != part[j]
    ]
    return MultiGraph.from_edges(n, edges)


def hypercube(d: int) -> MultiGraph:
    """Q_d on 2**d vertices; v is adjacent to v ^ (1 << b)."""
    _require(d >= 0, "hypercube needs d >= 0")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v & (1 << b)]
    return MultiGraph.from_edges(n, edges)


def tetrahedron() -> MultiGraph:
    return complete(4)


def cube() -> MultiGraph:
    return hypercube(3)


def octahedron() -> MultiGraph:
    """K_{2,2,2}: all pairs except the antipodal pairs (i, i+3)."""
    edges = [
        (i, j) for i in range(6) for j in range(i + 1, 6) if j - i != 3
    ]
    return MultiGraph.from_edges(6, edges)


_DODECAHEDRON_LCF = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]


def dodecahedron() -> MultiGraph:
    """LCF notation [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2 on a 20-cycle."""
    edges = [(i, (i + 1) % 20) for i in range(20)]
    for j in range(20):
        k = (j + _DODECAHEDRON_LCF[j % 10]) % 20
        if j < k:
            edges.append((j, k))
    return MultiGraph.from_edges(20, edges)


_ICOSAHEDRON_EDGES = [
    (0, 1), (0, 5), (0, 7), (0, 8), (0, 11), (1, 2), (1, 5), (1, 6), (1, 8),
    (2, 3), (2, 6), (2, 8), (2, 9), (3, 4), (3, 6), (3, 9), (3, 10), (4, 5),
    (4, 6), (4, 10), (4, 11), (5, 6), (5, 11), (7, 8), (7, 9), (7, 10),
    (7, 11), (8, 9), (9, 10), (10, 11),
]


def icosahedron() -> MultiGraph:
    """The icosahedral graph on 12 vertices (frozen edge list)."""
    return MultiGraph.from_edges(12, _ICOSAHEDRON_EDGES)


def connected_caveman(l: int, k: int) -> MultiGraph:
    """l cliques of size k on consecutive labels, rewired into a ring.

    Clique i spans vertices k*i .. k*i + k - 1; the edge (k*i, k*i + 1) is
    replaced by (k*i, k*i - 1 mod l*k), matching the usual construction.
    """
    _require(l >= 2 and k >= 2, "connected caveman needs l >= 2 and k >= 2")
    n = l * k
    edges = []
    for start in range(0, n, k):
        for a in range(start, start + k):
            for b in range(a + 1, start + k):
                if (a, b) == (start, start + 1):
                    continue
                edges.append((a, b))
        edges.append((start, (start - 1) % n))
    return MultiGraph.from_edges(n, edges)


def disjoint_union(*graphs: MultiGraph) -> MultiGraph:
    """Relabels each component block by a running vertex offset."""
    _require(len(graphs) >= 1, "disjoint union needs at least one graph")
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.vertex_count
    return MultiGraph.from_edges(offset, edges)


def cartesian_product(g1: MultiGraph, g2: MultiGraph) -> MultiGraph:
    """Vertex (u, v) maps to u * n2 + v; g1-layer edges first, then g2-layer."""
    n2 = g2.vertex_count
    edges = []
    for u1, u2 in g1.edges():
        edges.extend((u1 * n2 + v, u2 * n2 + v) for v in range(n2))
    for u in range(g1.vertex_count):
        edges.extend((u * n2 + v1, u * n2 + v2) for v1, v2 in g2.edges())
    return MultiGraph.from_edges(g1.vertex_count * n2, edges)


# ---------------------------------------------------------------------------
# Graph specs: "name[:p1[,p2]]" atoms composed with '+' (disjoint union) and
# '*' (Cartesian product), or "@path" for an edge-list file.
# ---------------------------------------------------------------------------

_GENERATORS = {
    "complete": (complete, 1), "k": (complete, 1),
    "cycle": (cycle, 1), "c": (cycle, 1),
    "path": (path, 1), "p": (path, 1),
    "star": (star, 1), "s": (star, 1),
    "wheel": (wheel, 1), "w": (wheel, 1),
    "gear": (gear, 1),
    "lollipop": (lollipop, 2), "l": (lollipop, 2),
    "tadpole": (tadpole, 2),
    "lattice": (square_lattice, 2),
    "trilattice": (triangle_lattice, 2),
    "rook": (rook, 1),
    "petersen": (petersen, 0),
    "mobius": (mobius_ladder, 1), "m": (mobius_ladder, 1),
    "turan": (turan, 2),
    "hypercube": (hypercube, 1), "q": (hypercube, 1),
    "tetrahedron": (tetrahedron, 0),
    "cube": (cube, 0),
    "octahedron": (octahedron, 0),
    "dodecahedron": (dodecahedron, 0),
    "icosahedron": (icosahedron, 0),
    "caveman": (connected_caveman, 2),
}


@dataclass(frozen=True)
class GraphSpec:
    """A deterministic recipe for one MultiGraph."""

    kind: str                      # generator name, "union", "product", "file"
    params: tuple[int, ...] = ()
    children: tuple["GraphSpec", ...] = ()
    path: str = ""

    def resolve(self) -> MultiGraph:
        if self.kind == "file":
            try:
                with open(self.path, "r", encoding="utf-8") as fh:
                    return from_edge_list(fh.read())
            except OSError as exc:
                raise GraphError(f"cannot read edge list {self.path!r}: {exc}") from exc
        if self.kind == "union":
            return disjoint_union(*(c.resolve() for c in self.children))
        if self.kind == "product":
            g = self.children[0].resolve()
            for c in self.children[1:]:
                g = cartesian_product(g, c.resolve())
            return g
        fn, arity = _GENERATORS[self.kind]
        if len(self.params) != arity:
            raise GraphError(
                f"generator {self.kind!r} takes {arity} parameter(s), got {len(self.params)}"
            )
        return fn(*self.params)

    def __str__(self) -> str:
        if self.kind == "file":
            return f"@{self.path}"
        if self.kind == "union":
            return "+".join(str(c) for c in self.children)
        if self.kind == "product":
            return "*".join(str(c) for c in self.children)
        if self.params:
            return f"{self.kind}:{','.join(str(p) for p in self.params)}"
        return self.kind


def parse_graph_spec(text: str) -> GraphSpec:
    """Parse "name[:p1[,p2]]" atoms joined by '+' and '*' ('*' binds tighter)."""
    text = text.strip()
    if not text:
        raise GraphError("empty graph spec")

    def parse_atom(atom: str) -> GraphSpec:
        atom = atom.strip()
        if atom.startswith("@"):
            if len(atom) == 1:
                raise GraphError("missing path after '@'")
            return GraphSpec(kind="file", path=atom[1:])
        name, _, params = atom.partition(":")
        name = name.strip().lower()
        if name not in _GENERATORS:
            raise GraphError(f"unknown generator {name!r}")
        values: tuple[int, ...] = ()
        if params:
            try:
                values = tuple(int(p) for p in params.split(","))
            except ValueError:
                raise GraphError(f"non-integer parameter in {atom!r}") from None
        return GraphSpec(kind=name, params=values)

    def parse_term(term: str) -> GraphSpec:
        atoms = [parse_atom(a) for a in term.split("*")]
        if len(atoms) == 1:
            return atoms[0]
        return GraphSpec(kind="product", children=tuple(atoms))

    terms = [parse_term(t) for t in text.split("+")]
    if len(terms) == 1:
        return terms[0]
    return GraphSpec(kind="union", children=tuple(terms))
