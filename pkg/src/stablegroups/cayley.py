"""Difference sets, left Cayley graphs and DOT export."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .groups import ElementSet, FiniteGroup, GroupError, iter_bits


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph with bit-mask adjacency rows.

    ``origin[v]`` maps a vertex back to the vertex of the graph it was cut
    from (identity for graphs built directly).  ``group``/``connection``
    are set when the graph is a Cayley graph, letting solvers exploit
    vertex-transitivity and the coset decomposition.
    """

    adjacency: tuple[int, ...]
    labels: tuple[str, ...]
    origin: tuple[int, ...] = ()
    group: FiniteGroup | None = field(default=None, repr=False)
    connection: int | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def all_vertices(self) -> int:
        return (1 << len(self.adjacency)) - 1

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adjacency), default=0)

    def closed(self, v: int) -> int:
        return self.adjacency[v] | 1 << v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.adjacency) for v in iter_bits(row >> u + 1 << u + 1)]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def is_independent(self, bits: int) -> bool:
        return all(not self.adjacency[v] & bits for v in iter_bits(bits))

    def dominated_by(self, bits: int) -> int:
        out = bits
        for v in iter_bits(bits):
            out |= self.adjacency[v]
        return out

    def is_maximal_independent(self, bits: int) -> bool:
        return self.is_independent(bits) and self.dominated_by(bits) == self.all_vertices

    def induced(self, keep: int) -> "Graph":
        """Induced subgraph on the vertex mask ``keep``, re-indexed in increasing order."""
        verts = list(iter_bits(keep))
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            for w in iter_bits(self.adjacency[v] & keep):
                row |= 1 << pos[w]
            rows.append(row)
        origin = tuple(self.origin[v] if self.origin else v for v in verts)
        return Graph(tuple(rows), tuple(self.labels[v] for v in verts), origin)

    def check(self) -> None:
        for u, row in enumerate(self.adjacency):
            if row >> u & 1:
                raise GroupError(f"vertex {u} has a loop")
            for v in iter_bits(row):
                if not self.adjacency[v] >> u & 1:
                    raise GroupError(f"edge {u}-{v} is not symmetric")


def graph_from_edges(n: int, edges: Sequence[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GroupError("loops are not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(tuple(rows), tuple(labels or (str(i) for i in range(n))))


def boundary_set(G: FiniteGroup, A: ElementSet | int) -> ElementSet:
    """``A^-1 A`` without the identity."""
    bits = A.bits if isinstance(A, ElementSet) else A
    if not bits:
        raise GroupError("boundary of the empty set is undefined")
    out = 0
    for a in iter_bits(bits):
        out |= G.left_translate(G.inv(a), bits)
    return ElementSet(out & ~1, G.order)


def difference_set(G: FiniteGroup, A: ElementSet | int) -> int:
    """``A^-1 A`` (with the identity) as a mask; the closed neighbourhood of ``e``."""
    return boundary_set(G, A).bits | 1


def _check_connection(G: FiniteGroup, S: int) -> None:
    if S & 1:
        raise GroupError("connection set contains the identity")
    for s in iter_bits(S):
        if not S >> G.inv(s) & 1:
            raise GroupError(f"connection set is not inverse-closed ({G.labels[s]})")


def cayley_graph(G: FiniteGroup, S: ElementSet | int) -> Graph:
    """Left Cayley graph: ``u ~ v`` iff ``v u^-1`` lies in ``S``."""
    bits = S.bits if isinstance(S, ElementSet) else S
    _check_connection(G, bits)
    t = G.table
    gens = list(iter_bits(bits))
    rows = []
    for u in G.elements():
        row = 0
        for s in gens:
            row |= 1 << t[s][u]
        rows.append(row)
    return Graph(tuple(rows), G.labels, tuple(range(G.order)), G, bits)


def graph_components(G: FiniteGroup, S: ElementSet | int) -> list[ElementSet]:
    """Connected components of ``Cay(G, S)``: the right cosets of ``<S>``.

    Found by breadth-first search on the graph itself, ordered by least
    element index.
    """
    graph = cayley_graph(G, S)
    return [ElementSet(c, G.order) for c in connected_components(graph)]


def connected_components(graph: Graph) -> list[int]:
    seen = 0
    comps = []
    for v in range(graph.vertex_count):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= graph.adjacency[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph: Graph, highlight: ElementSet | int | None = None, name: str = "cayley") -> str:
    """Render ``graph`` as DOT; vertices and edges come out in index order."""
    hl = 0 if highlight is None else (highlight.bits if isinstance(highlight, ElementSet) else highlight)
    out = [f"graph {_dot_quote(name)} {{"]
    for v in range(graph.vertex_count):
        attrs = f"label={_dot_quote(graph.labels[v])}"
        if hl >> v & 1:
            attrs += ", style=filled, fillcolor=palegreen"
        out.append(f"  {v} [{attrs}];")
    for u, v in graph.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
