"""Strong products with coordinate-labeled vertices.

Vertex (i, j) of G boxtimes H gets index i*|V(H)| + j; this layout is frozen
so certificates in reports stay portable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, induced_subgraph, mask_of

#: Products larger than this are refused outright (configurable per call).
DEFAULT_MAX_PRODUCT_VERTICES = 1024


class CapacityError(ValueError):
    pass


@dataclass(frozen=True)
class ProductGraph:
    """A strong product together with its coordinate bijection."""

    graph: Graph
    g_order: int
    h_order: int

    def index(self, i: int, j: int) -> int:
        return i * self.h_order + j

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.h_order)


def strong_product(G: Graph, H: Graph,
                   max_vertices: int = DEFAULT_MAX_PRODUCT_VERTICES) -> ProductGraph:
    """G boxtimes H: (u1,v1) ~ (u2,v2) iff distinct, u2 in N_G[u1], v2 in N_H[v1]."""
    if G.n == 0 or H.n == 0:
        raise ValueError("both factors must be nonempty")
    n = G.n * H.n
    if n > max_vertices:
        raise CapacityError(f"product has {n} vertices, cap is {max_vertices}")
    h = H.n
    closed_h = [H.closed(j) for j in range(h)]
    adj = [0] * n
    labels = [None] * n
    for i in range(G.n):
        gi_closed = G.closed(i)
        for j in range(h):
            block = closed_h[j]
            row = 0
            for u in bits(gi_closed):
                row |= block << (u * h)
            v = i * h + j
            adj[v] = row & ~(1 << v)
            labels[v] = (i, j)
    return ProductGraph(Graph(n, adj, tuple(labels)), G.n, H.n)


def factor_g(P: ProductGraph) -> Graph:
    """Recover the first factor from the product (column j = 0)."""
    col = mask_of(i * P.h_order for i in range(P.g_order))
    return _strip_labels(induced_subgraph(P.graph, col))


def factor_h(P: ProductGraph) -> Graph:
    """Recover the second factor from the product (row i = 0)."""
    row = (1 << P.h_order) - 1
    return _strip_labels(induced_subgraph(P.graph, row))


def _strip_labels(G: Graph) -> Graph:
    return Graph(G.n, G.adj)


def project(P: ProductGraph, side: str, mask: int) -> int:
    """Collapse a product vertex mask onto one factor's coordinates.

    ``side`` is "G" or "H".  Returns a vertex mask of the chosen factor.
    """
    side = side.upper()
    if side not in ("G", "H"):
        raise ValueError("side must be 'G' or 'H'")
    if mask & ~P.graph.full_mask:
        raise ValueError("vertex set outside the product")
    out = 0
    for v in bits(mask):
        i, j = P.coords(v)
        out |= 1 << (i if side == "G" else j)
    return out
