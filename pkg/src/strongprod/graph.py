"""Immutable bitset-backed graphs: construction, graph6 I/O, named catalog,
line graphs, induced subgraphs, connectivity, and canonical forms.

Vertices are always 0..n-1.  Vertex sets are plain Python ints used as
bitmasks, which keeps the set algebra in the enumeration cores down to a few
machine operations per step.  Everything here is pure and safe to share
between threads or processes.
"""

from __future__ import annotations

import re
from itertools import combinations, permutations

#: graph6 single-byte headers cover 0..62 vertices; we never go further.
MAX_GRAPH6_VERTICES = 62


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int):
    """Yield the indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of the vertices in ``mask``."""
    return tuple(bits(mask))


class Graph:
    """Undirected simple graph with bitmask adjacency rows.

    ``adj[v]`` is the open neighborhood of ``v`` as a bitmask.  ``labels``
    optionally carries one opaque tag per vertex (the product constructor
    stores factor coordinates there).  Instances are immutable.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj, labels=None):
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for {n} vertices")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in bits(row):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length differs from vertex count")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj, self.labels))

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for d in bits(row):
                out.append((u, u + 1 + d))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


# ---------------------------------------------------------------------------
# graph6


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (n <= 62)."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    head = ord(s[0])
    if head == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) unsupported", 0)
    n = head - 63
    if not 0 <= n <= MAX_GRAPH6_VERTICES:
        raise Graph6Error(f"invalid header byte {head}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, got {len(s) - 1}", 1
        )
    values = []
    for i, ch in enumerate(s[1:], start=1):
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range", i)
        values.append(v)
    adj = [0] * n
    k = 0
    for col in range(1, n):
        for row in range(col):
            if (values[k // 6] >> (5 - k % 6)) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            k += 1
    # the standard zero-pads the last byte; anything else is corruption
    while k < need * 6:
        if (values[k // 6] >> (5 - k % 6)) & 1:
            raise Graph6Error("nonzero padding bits", 1 + k // 6)
        k += 1
    return Graph(n, adj)


def to_graph6(G: Graph) -> str:
    """Encode a graph as a graph6 line (n <= 62)."""
    n = G.n
    if n > MAX_GRAPH6_VERTICES:
        raise ValueError(f"graph6 output limited to {MAX_GRAPH6_VERTICES} vertices")
    chunks = [chr(n + 63)]
    acc = 0
    nb = 0
    for col in range(1, n):
        for row in range(col):
            acc = (acc << 1) | ((G.adj[row] >> col) & 1)
            nb += 1
            if nb == 6:
                chunks.append(chr(acc + 63))
                acc = 0
                nb = 0
    if nb:
        chunks.append(chr((acc << (6 - nb)) + 63))
    return "".join(chunks)


# ---------------------------------------------------------------------------
# named catalog
#
# Vertex orders are frozen:
#   complete K_n          : any order (all vertices equivalent)
#   complete bipartite    : part of size m is 0..m-1, part of size n is m..m+n-1
#   path P_n              : 0-1-...-(n-1)
#   cycle C_n             : 0-1-...-(n-1)-0
#   star K_{1,n}          : center 0, leaves 1..n
#   bull                  : path 0-1-2-3-4 plus the chord 1-3
#   c6-two-chords         : cycle 0..5 plus chords 0-2 and 3-5


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, ((a, m + b) for a in range(m) for b in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n} with the center at vertex 0."""
    return Graph.from_edges(n + 1, ((0, i) for i in range(1, n + 1)))


def bull_graph() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])


def c6_two_chords() -> Graph:
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 2), (3, 5)]
    return Graph.from_edges(6, edges)


_COMPACT = re.compile(r"^([kpc])_?\{?(\d+)(?:[,_](\d+))?\}?$")


def named(ident: str, *params: int) -> Graph:
    """Build a catalog graph.

    Accepts either an explicit id with integer params ("complete", 4) or a
    compact name ("K4", "P3", "C5", "K2,3", "bull", "c6-two-chords").
    """
    key = ident.strip().lower()
    if params:
        builders = {
            "complete": lambda: complete_graph(*params),
            "k": lambda: complete_graph(*params) if len(params) == 1
            else complete_bipartite(*params),
            "complete-bipartite": lambda: complete_bipartite(*params),
            "complete_bipartite": lambda: complete_bipartite(*params),
            "path": lambda: path_graph(*params),
            "p": lambda: path_graph(*params),
            "cycle": lambda: cycle_graph(*params),
            "c": lambda: cycle_graph(*params),
            "star": lambda: star_graph(*params),
        }
        if key not in builders:
            raise ValueError(f"unknown parametric graph id {ident!r}")
        return builders[key]()
    if key == "bull":
        return bull_graph()
    if key in ("c6-two-chords", "c6_two_chords"):
        return c6_two_chords()
    m = _COMPACT.match(key)
    if m:
        kind, a, b = m.group(1), int(m.group(2)), m.group(3)
        if kind == "k":
            return complete_graph(a) if b is None else complete_bipartite(a, int(b))
        if b is not None:
            raise ValueError(f"unexpected second parameter in {ident!r}")
        if kind == "p":
            return path_graph(a)
        return cycle_graph(a)
    raise ValueError(f"unknown graph id {ident!r}")


# ---------------------------------------------------------------------------
# elementary operations


def line_graph(G: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of G plus the map from L-vertices back to source edges.

    L-vertex i corresponds to ``edge_map[i]``; edges are taken in
    lexicographic (min, max) order.  Raises on edgeless input.
    """
    edge_map = G.edges()
    m = len(edge_map)
    if m == 0:
        raise ValueError("line graph of an edgeless graph is undefined here")
    L = [0] * m
    for i in range(m):
        a, b = edge_map[i]
        for j in range(i + 1, m):
            c, d = edge_map[j]
            if a == c or a == d or b == c or b == d:
                L[i] |= 1 << j
                L[j] |= 1 << i
    return Graph(m, L), edge_map


def induced_subgraph(G: Graph, keep: int) -> Graph:
    """Subgraph induced by the vertex mask ``keep``; survivors keep sorted order."""
    if keep & ~G.full_mask:
        raise ValueError("vertex set outside the graph")
    old = list(bits(keep))
    pos = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for i, v in enumerate(old):
        for u in bits(G.adj[v] & keep):
            adj[i] |= 1 << pos[u]
    labels = None
    if G.labels is not None:
        labels = tuple(G.labels[v] for v in old)
    return Graph(len(old), adj, labels)


def remove_vertices(G: Graph, drop: int) -> Graph:
    """G minus the vertex mask ``drop``."""
    if drop & ~G.full_mask:
        raise ValueError("vertex set outside the graph")
    return induced_subgraph(G, G.full_mask & ~drop)


def components(G: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(G.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(components(G)) == 1


def is_2_connected(G: Graph) -> bool:
    """2-connectivity by the vertex-deletion definition (K2 is not 2-connected)."""
    if G.n < 3 or not is_connected(G):
        return False
    for v in range(G.n):
        if not is_connected(remove_vertices(G, 1 << v)):
            return False
    return True


def is_k_connected(G: Graph, k: int) -> bool:
    if k == 1:
        return is_connected(G)
    if k == 2:
        return is_2_connected(G)
    raise NotImplementedError("only k in {1, 2} is supported")


def is_bipartite(G: Graph) -> bool:
    color = {}
    for s in range(G.n):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(G.adj[v]):
                if u not in color:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_clique(G: Graph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~(G.closed(v)):
            return False
    return True


def is_independent(G: Graph, mask: int) -> bool:
    for v in bits(mask):
        if G.adj[v] & mask:
            return False
    return True


# ---------------------------------------------------------------------------
# canonical forms (isomorphism-invariant dedup keys for small graphs)


def _refine_colors(G: Graph) -> list[int]:
    """1-dimensional Weisfeiler-Leman color refinement, colors as small ints."""
    colors = [G.degree(v) for v in range(G.n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in bits(G.adj[v]))))
            for v in range(G.n)
        ]
        order = sorted(set(keys))
        rank = {k: i for i, k in enumerate(order)}
        new = [rank[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _triangle_bits(G: Graph, pos: list[int]) -> int:
    code = 0
    for u, v in G.edges():
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        code |= 1 << (j * (j - 1) // 2 + i)
    return code


def canonical_form(G: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key (n, adjacency-bits of the canonical labeling).

    The canonical labeling minimizes the upper-triangle bit code over all
    permutations that respect the WL color classes; restricting to those
    permutations is sound because isomorphisms map color classes onto each
    other.  Intended for small graphs (the census works at n <= 7).
    """
    n = G.n
    if n <= 1:
        return (n, 0)
    colors = _refine_colors(G)
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    best = None
    pos = [0] * n
    for perm_parts in _cell_products(ordered_cells):
        idx = 0
        for part in perm_parts:
            for v in part:
                pos[v] = idx
                idx += 1
        code = _triangle_bits(G, pos)
        if best is None or code < best:
            best = code
    return (n, best)


def _cell_products(cells):
    if not cells:
        yield ()
        return
    head, rest = cells[0], cells[1:]
    for p in permutations(head):
        for tail in _cell_products(rest):
            yield (p,) + tail


def canonical_graph(G: Graph) -> Graph:
    """The canonically labeled copy of G."""
    n, code = canonical_form(G)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (code >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def isomorphic(G: Graph, H: Graph) -> bool:
    return canonical_form(G) == canonical_form(H)
