"""Brute-force oracles used to cross-check the production algorithms.

Everything here enumerates raw subsets straight from the definitions, with no
pruning and no shared code paths with the package internals, so agreement is
meaningful evidence of correctness.  Only usable for small n.
"""

from itertools import combinations

from strongprod.graph import Graph, bits


def closed_neighborhood(G: Graph, v: int) -> int:
    return G.adj[v] | (1 << v)


def brute_is_dominating(G: Graph, S: int) -> bool:
    covered = 0
    for v in bits(S):
        covered |= closed_neighborhood(G, v)
    return covered == G.full_mask


def brute_minimal_dominating_sets(G: Graph) -> set[int]:
    out = set()
    for S in range(1, 1 << G.n):
        if not brute_is_dominating(G, S):
            continue
        if all(not brute_is_dominating(G, S & ~(1 << v)) for v in bits(S)):
            out.add(S)
    return out


def brute_domination_number(G: Graph) -> int:
    return min(S.bit_count() for S in range(1, 1 << G.n)
               if brute_is_dominating(G, S))


def brute_is_independent(G: Graph, S: int) -> bool:
    return all(not (G.adj[v] & S) for v in bits(S))


def brute_maximal_independent_sets(G: Graph) -> set[int]:
    out = set()
    for S in range(1 << G.n):
        if not brute_is_independent(G, S):
            continue
        rest = G.full_mask & ~S
        if all(not brute_is_independent(G, S | (1 << v)) for v in bits(rest)):
            out.add(S)
    return out


def brute_independence_number(G: Graph) -> int:
    return max(S.bit_count() for S in range(1 << G.n)
               if brute_is_independent(G, S))


def brute_well_dominated(G: Graph) -> bool:
    sizes = {S.bit_count() for S in brute_minimal_dominating_sets(G)}
    return len(sizes) == 1


def brute_well_covered(G: Graph) -> bool:
    sizes = {S.bit_count() for S in brute_maximal_independent_sets(G)}
    return len(sizes) == 1


# matchings: enumerate subsets of the edge list


def brute_is_matching(edges) -> bool:
    used = 0
    for u, v in edges:
        e = (1 << u) | (1 << v)
        if used & e:
            return False
        used |= e
    return True


def brute_all_matchings(G: Graph) -> list[tuple]:
    E = G.edges()
    out = []
    for r in range(len(E) + 1):
        for sub in combinations(E, r):
            if brute_is_matching(sub):
                out.append(sub)
    return out


def brute_maximal_matchings(G: Graph) -> set[frozenset]:
    E = G.edges()
    out = set()
    for m in brute_all_matchings(G):
        used = 0
        for u, v in m:
            used |= (1 << u) | (1 << v)
        if all((used >> u) & 1 or (used >> v) & 1 for u, v in E):
            out.add(frozenset(m))
    return out


def brute_matching_number(G: Graph) -> int:
    return max(len(m) for m in brute_all_matchings(G))


def brute_equimatchable(G: Graph) -> bool:
    sizes = {len(m) for m in brute_maximal_matchings(G)}
    return len(sizes) == 1


def brute_is_eds(G: Graph, F) -> bool:
    used = 0
    for u, v in F:
        used |= (1 << u) | (1 << v)
    return all((used >> u) & 1 or (used >> v) & 1 for u, v in G.edges())


def brute_minimal_eds(G: Graph) -> set[frozenset]:
    E = G.edges()
    out = set()
    for r in range(1, len(E) + 1):
        for sub in combinations(E, r):
            if not brute_is_eds(G, sub):
                continue
            if all(not brute_is_eds(G, [e for e in sub if e != f])
                   for f in sub):
                out.add(frozenset(sub))
    return out


def brute_well_edge_dominated(G: Graph) -> bool:
    sizes = {len(F) for F in brute_minimal_eds(G)}
    return len(sizes) == 1


def brute_gallai_d_mask(G: Graph) -> int:
    """Vertices missed by at least one maximum matching."""
    am = brute_matching_number(G)
    d = 0
    for m in brute_all_matchings(G):
        if len(m) != am:
            continue
        used = 0
        for u, v in m:
            used |= (1 << u) | (1 << v)
        d |= G.full_mask & ~used
    return d


def brute_strong_product_edges(G: Graph, H: Graph) -> set[frozenset]:
    """Edge set of the strong product straight from the definition."""
    out = set()
    nh = H.n
    for u1 in range(G.n):
        for v1 in range(H.n):
            for u2 in range(G.n):
                for v2 in range(H.n):
                    if (u1, v1) == (u2, v2):
                        continue
                    gu = u1 == u2 or G.has_edge(u1, u2)
                    hv = v1 == v2 or H.has_edge(v1, v2)
                    if gu and hv:
                        out.add(frozenset({u1 * nh + v1, u2 * nh + v2}))
    return out
