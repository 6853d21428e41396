"""Exact matching-side oracles.

Maximum matchings (blossom algorithm), maximal-matching enumeration by
backtracking over vertices, minimum maximal matchings by memoized dynamic
programming over vertex masks, equimatchability and well-edge-dominated
verdicts, perfect / near-perfect matchings, and factor-criticality.

Matchings and edge sets are tuples of (min, max) edge pairs in lexicographic
order so certificates serialize deterministically.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, bits, line_graph, remove_vertices
from .verdict import EnumerationStream, PropertyVerdict


def endpoints_mask(edges) -> int:
    m = 0
    for u, v in edges:
        m |= (1 << u) | (1 << v)
    return m


def is_matching(G: Graph, edges) -> bool:
    seen = 0
    for u, v in edges:
        if not G.has_edge(u, v):
            return False
        e = (1 << u) | (1 << v)
        if seen & e:
            return False
        seen |= e
    return True


def is_maximal_matching(G: Graph, edges) -> bool:
    if not is_matching(G, edges):
        return False
    free = G.full_mask & ~endpoints_mask(edges)
    for v in bits(free):
        if G.adj[v] & free:
            return False
    return True


# ---------------------------------------------------------------------------
# maximum matching (blossom algorithm, O(V^3))


def maximum_matching(G: Graph) -> tuple[tuple[int, int], ...]:
    """One maximum matching; deterministic for a fixed vertex order."""
    n = G.n
    adj = [list(bits(G.adj[v])) for v in range(n)]
    match = [-1] * n
    for u, v in G.edges():
        if match[u] == -1 and match[v] == -1:
            match[u] = v
            match[v] = u
    p = [-1] * n
    base = list(range(n))

    def lca(a, b):
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = p[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root):
        nonlocal p, base
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return tuple(sorted(
        (v, match[v]) for v in range(n) if match[v] > v))


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))


def has_perfect_matching(G: Graph) -> bool:
    return 2 * matching_number(G) == G.n


def has_near_perfect_matching(G: Graph) -> bool:
    return G.n % 2 == 1 and 2 * matching_number(G) == G.n - 1


def is_factor_critical(G: Graph) -> bool:
    """G - v has a perfect matching for every vertex v."""
    if G.n % 2 == 0 and G.n > 0:
        return False  # parity: G - v is odd
    for v in range(G.n):
        if not has_perfect_matching(remove_vertices(G, 1 << v)):
            return False
    return True


# ---------------------------------------------------------------------------
# maximal matching enumeration


def maximal_matchings(G: Graph, *, early_exit: bool = False,
                      cap: int | None = None) -> EnumerationStream:
    """Stream of all inclusion-maximal matchings, each exactly once.

    Backtracks directly over vertices (lowest undecided vertex is either
    matched to one of its live neighbors or decided exposed), so memory stays
    linear in the edge count.  Deterministic order; the empty matching is the
    unique maximal matching of an edgeless graph.
    """
    gen = _maximal_matchings_gen(G)
    if early_exit:
        gen = _two_sizes(gen)
    return EnumerationStream(gen, cap)


def _two_sizes(gen):
    first = None
    for m in gen:
        yield m
        if first is None:
            first = len(m)
        elif len(m) != first:
            gen.close()
            return


def _maximal_matchings_gen(G: Graph):
    full = G.full_mask
    adj = G.adj
    out = []

    def rec(matched: int, exposed: int):
        und = full & ~(matched | exposed)
        if not und:
            yield tuple(out)
            return
        v = (und & -und).bit_length() - 1
        vb = 1 << v
        for u in bits(adj[v] & und):
            out.append((v, u))
            yield from rec(matched | vb | (1 << u), exposed)
            out.pop()
        # v stays exposed: invalid as soon as two exposed vertices are adjacent
        if not (adj[v] & exposed):
            yield from rec(matched, exposed | vb)

    yield from rec(0, 0)


def all_matchings(G: Graph):
    """Every matching of G (including the empty one), each exactly once."""
    edges = G.edges()
    out = []

    def rec(i: int, used: int):
        if i == len(edges):
            yield tuple(out)
            return
        u, v = edges[i]
        e = (1 << u) | (1 << v)
        if not (used & e):
            out.append((u, v))
            yield from rec(i + 1, used | e)
            out.pop()
        yield from rec(i + 1, used)

    yield from rec(0, 0)


# ---------------------------------------------------------------------------
# minimum maximal matching (exact, memoized over the unsaturated-vertex mask)


def min_maximal_matching(G: Graph) -> tuple[tuple[int, int], ...]:
    """A minimum-cardinality maximal matching.

    Recursion: for the lexicographically first edge (v, u) of the surviving
    graph, any maximal matching must contain an edge meeting {v, u}; removing
    that edge's endpoints leaves exactly a maximal matching of the rest.
    States are vertex masks, so dense 16-vertex products stay tractable.
    """
    adj = G.adj
    memo: dict[int, int] = {}

    def first_edge(mask):
        mm = mask
        while mm:
            low = mm & -mm
            v = low.bit_length() - 1
            row = adj[v] & mask
            if row:
                return v, (row & -row).bit_length() - 1
            mm ^= low
        return None

    def branch_edges(mask, v, u):
        for w in bits(adj[v] & mask):
            yield v, w
        for w in bits(adj[u] & mask):
            if w != v:
                yield u, w

    def f(mask: int) -> int:
        got = memo.get(mask)
        if got is not None:
            return got
        fe = first_edge(mask)
        if fe is None:
            memo[mask] = 0
            return 0
        v, u = fe
        best = G.n
        for a, b in branch_edges(mask, v, u):
            r = 1 + f(mask & ~((1 << a) | (1 << b)))
            if r < best:
                best = r
        memo[mask] = best
        return best

    size = f(G.full_mask)
    # deterministic reconstruction: first branch edge achieving the optimum
    edges = []
    mask = G.full_mask
    while True:
        fe = first_edge(mask)
        if fe is None:
            break
        v, u = fe
        want = f(mask) - 1
        for a, b in branch_edges(mask, v, u):
            sub = mask & ~((1 << a) | (1 << b))
            if f(sub) == want:
                edges.append((min(a, b), max(a, b)))
                mask = sub
                break
    assert len(edges) == size
    return tuple(sorted(edges))


def is_equimatchable(G: Graph) -> PropertyVerdict:
    """True iff every maximal matching is maximum.

    Decided exactly by comparing the minimum maximal matching against a
    maximum matching; on failure those two matchings are the certificate.
    """
    if G.n == 0:
        raise ValueError("empty graph")
    biggest = maximum_matching(G)
    smallest = min_maximal_matching(G)
    if len(smallest) == len(biggest):
        return PropertyVerdict("true", value=len(biggest), witness=biggest)
    return PropertyVerdict("false", witness=smallest, counterexample=biggest)


# ---------------------------------------------------------------------------
# edge domination


def endpoints_of(edges) -> int:
    return endpoints_mask(edges)


def is_eds(G: Graph, F) -> bool:
    """Edge dominating set test: every edge of G meets an endpoint of F."""
    cov = endpoints_mask(F)
    for u, v in G.edges():
        if not (cov & ((1 << u) | (1 << v))):
            return False
    return True


def is_minimal_eds(G: Graph, F) -> bool:
    F = list(F)
    if not is_eds(G, F):
        return False
    for i in range(len(F)):
        if is_eds(G, F[:i] + F[i + 1:]):
            return False
    return True


def minimal_edge_dominating_sets(G: Graph, *, early_exit: bool = False,
                                 cap: int | None = None) -> EnumerationStream:
    """Stream of all inclusion-minimal edge dominating sets.

    Delegates to minimal dominating set enumeration on the line graph and
    pulls the results back through the edge-index map.
    """
    from .domination import minimal_dominating_sets

    L, edge_map = line_graph(G)  # raises on edgeless input
    inner = minimal_dominating_sets(L, early_exit=early_exit)

    def gen():
        for mask in inner:
            yield tuple(edge_map[i] for i in bits(mask))

    return EnumerationStream(gen(), cap)


def _reduce_to_minimal_eds(G: Graph, F) -> tuple[tuple[int, int], ...]:
    """Greedily delete edges (lexicographic order) until inclusion-minimal."""
    F = sorted(F)
    changed = True
    while changed:
        changed = False
        for i in range(len(F)):
            trial = F[:i] + F[i + 1:]
            if trial and is_eds(G, trial):
                F = trial
                changed = True
                break
    return tuple(F)


def is_well_edge_dominated(G: Graph, mode: str = "full",
                           cap: int = 500_000) -> PropertyVerdict:
    """True iff all minimal edge dominating sets are minimum.

    ``mode="full"`` is exact.  ``mode="disprove"`` only ever answers "false"
    with a two-sizes certificate or "true" when the search space was in fact
    exhausted; if its enumeration budget runs out it answers "inconclusive",
    never a false positive.
    """
    if G.edge_count() == 0:
        raise ValueError("edge domination is undefined on an edgeless graph")
    if mode == "full":
        stream = minimal_edge_dominating_sets(G, early_exit=True)
        first = None
        for F in stream:
            if first is None:
                first = F
            elif len(F) != len(first):
                return PropertyVerdict("false", witness=first, counterexample=F)
        return PropertyVerdict("true", value=len(first), witness=first)
    if mode != "disprove":
        raise ValueError(f"unknown mode {mode!r}")

    biggest = maximum_matching(G)
    smallest = min_maximal_matching(G)
    if len(smallest) != len(biggest):
        # both maximal matchings, hence minimal edge dominating sets
        return PropertyVerdict("false", witness=smallest, counterexample=biggest)
    alpha_prime = len(biggest)
    # cheap constructive family: the edge star at a vertex, pruned to minimal
    for v in range(G.n):
        star = [(min(v, u), max(v, u)) for u in bits(G.adj[v])]
        if star and is_eds(G, star):
            reduced = _reduce_to_minimal_eds(G, star)
            if len(reduced) != alpha_prime:
                return PropertyVerdict("false", witness=biggest,
                                       counterexample=reduced)
    # fallback: capped exhaustive scan for any set of a different size
    stream = minimal_edge_dominating_sets(G, cap=cap)
    first = None
    for F in stream:
        if first is None:
            first = F
        elif len(F) != len(first):
            return PropertyVerdict("false", witness=first, counterexample=F)
    if stream.truncated:
        return PropertyVerdict("inconclusive")
    return PropertyVerdict("true", value=len(first), witness=first)
