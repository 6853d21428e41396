"""Exact domination-side oracles.

Minimal dominating set enumeration (branch and bound with private-neighbor
pruning), domination and independence numbers, maximal independent set
enumeration, well-dominated / well-covered verdicts with checkable
certificates, clique-partition certificates, and the projection check for
products with a trivially well-dominated factor.
"""

from __future__ import annotations

from .graph import Graph, bits, is_clique, set_of
from .products import ProductGraph, factor_g, factor_h
from .verdict import EnumerationStream, PropertyVerdict, TheoremViolation


def dominates(G: Graph, mask: int) -> bool:
    cov = mask
    for v in bits(mask):
        cov |= G.adj[v]
    return cov == G.full_mask


def _has_all_privates(closed, S: int) -> bool:
    """Every vertex of S keeps a private closed neighbor (minimality test)."""
    for w in bits(S):
        bit = 1 << w
        ok = False
        for z in bits(closed[w]):
            if closed[z] & S == bit:
                ok = True
                break
        if not ok:
            return False
    return True


def is_minimal_dominating(G: Graph, S: int) -> bool:
    closed = [G.closed(v) for v in range(G.n)]
    return dominates(G, S) and _has_all_privates(closed, S)


def minimal_dominating_sets(G: Graph, *, early_exit: bool = False,
                            cap: int | None = None) -> EnumerationStream:
    """Stream of all inclusion-minimal dominating sets, each exactly once.

    Deterministic order.  In early-exit mode the stream stops right after two
    distinct cardinalities have been seen (enough to disprove
    well-dominatedness).  ``cap`` limits the number of yielded sets; hitting it
    sets ``truncated`` on the stream.
    """
    gen = _mds_gen(G)
    if early_exit:
        gen = _two_sizes_filter(gen, lambda m: m.bit_count())
    return EnumerationStream(gen, cap)


def _two_sizes_filter(gen, size_of):
    first = None
    for item in gen:
        yield item
        s = size_of(item)
        if first is None:
            first = s
        elif s != first:
            gen.close()
            return


def _mds_gen(G: Graph):
    n = G.n
    if n == 0:
        return
    full = G.full_mask
    closed = [G.closed(v) for v in range(n)]

    def rec(chosen: int, excluded: int, dominated: int):
        if dominated == full:
            yield chosen
            return
        # branch on the undominated vertex with fewest live dominators
        best_v, best_cands, best_cnt = -1, 0, n + 1
        undom = full & ~dominated
        for v in bits(undom):
            cands = closed[v] & ~excluded
            c = cands.bit_count()
            if c == 0:
                return
            if c < best_cnt:
                best_v, best_cands, best_cnt = v, cands, c
                if c == 1:
                    break
        ex = excluded
        for u in bits(best_cands):
            nxt = chosen | (1 << u)
            if _has_all_privates(closed, nxt):
                yield from rec(nxt, ex, dominated | closed[u])
            ex |= 1 << u

    yield from rec(0, 0, 0)


def domination_number(G: Graph) -> int:
    return len(min_dominating_set(G))


def min_dominating_set(G: Graph) -> tuple[int, ...]:
    """One minimum dominating set (deterministic choice)."""
    if G.n == 0:
        return ()
    closed = [G.closed(v) for v in range(G.n)]
    full = G.full_mask
    max_cov = max(c.bit_count() for c in closed)

    def exists(dominated: int, k: int):
        if dominated == full:
            return ()
        if k == 0:
            return None
        undom = full & ~dominated
        if undom.bit_count() > k * max_cov:
            return None
        # pick the undominated vertex with fewest dominators
        best_v, best_cnt = -1, G.n + 1
        for v in bits(undom):
            c = closed[v].bit_count()
            if c < best_cnt:
                best_v, best_cnt = v, c
        cands = sorted(bits(closed[best_v]),
                       key=lambda u: (-(closed[u] & undom).bit_count(), u))
        for u in cands:
            res = exists(dominated | closed[u], k - 1)
            if res is not None:
                return (u,) + res
        return None

    for k in range(1, G.n + 1):
        res = exists(0, k)
        if res is not None:
            return tuple(sorted(res))
    raise AssertionError("unreachable: V(G) always dominates")


def maximal_independent_sets(G: Graph, *, early_exit: bool = False,
                             cap: int | None = None) -> EnumerationStream:
    """Stream of all inclusion-maximal independent sets, each exactly once."""
    gen = _mis_gen(G)
    if early_exit:
        gen = _two_sizes_filter(gen, lambda m: m.bit_count())
    return EnumerationStream(gen, cap)


def _mis_gen(G: Graph):
    # maximal independent sets of G = maximal cliques of the complement;
    # Bron-Kerbosch with pivoting, deterministic pivot choice
    n = G.n
    if n == 0:
        return
    full = G.full_mask
    compl = [full & ~G.closed(v) for v in range(n)]

    def bk(R: int, P: int, X: int):
        if P == 0 and X == 0:
            yield R
            return
        pivot, best = -1, -1
        for u in bits(P | X):
            c = (P & compl[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bits(P & ~compl[pivot]):
            yield from bk(R | (1 << v), P & compl[v], X & compl[v])
            P &= ~(1 << v)
            X |= 1 << v

    yield from bk(0, full, 0)


def max_independent_set(G: Graph) -> tuple[int, ...]:
    """One maximum independent set (deterministic choice)."""
    if G.n == 0:
        return ()
    best = [-1, 0]

    def rec(P: int, cur: int, size: int):
        if size + P.bit_count() <= best[0]:
            return
        if P == 0:
            if size > best[0]:
                best[0], best[1] = size, cur
            return
        # branch on the densest remaining vertex; include-first finds big sets fast
        v, d = -1, -1
        for u in bits(P):
            c = (G.adj[u] & P).bit_count()
            if c > d:
                v, d = u, c
        rec(P & ~G.closed(v), cur | (1 << v), size + 1)
        rec(P & ~(1 << v), cur, size)

    rec(G.full_mask, 0, 0)
    return set_of(best[1])


def independence_number(G: Graph) -> int:
    return len(max_independent_set(G))


def _common_size_verdict(stream, size_of) -> PropertyVerdict:
    first = None
    for item in stream:
        s = size_of(item)
        if first is None:
            first = (s, item)
        elif s != first[0]:
            a, b = first[1], item
            return PropertyVerdict("false", witness=a, counterexample=b)
    if first is None:
        raise AssertionError("empty enumeration stream")
    return PropertyVerdict("true", value=first[0], witness=first[1])


def is_well_dominated(G: Graph) -> PropertyVerdict:
    """True iff all minimal dominating sets share one cardinality.

    On failure the certificate is two minimal dominating sets of different
    sizes (as vertex tuples); on success, gamma plus one witness set.
    """
    if G.n == 0:
        raise ValueError("empty graph")
    verdict = _common_size_verdict(
        minimal_dominating_sets(G, early_exit=True), lambda m: m.bit_count())
    return _tuplify(verdict)


def is_well_covered(G: Graph) -> PropertyVerdict:
    """True iff all maximal independent sets share one cardinality."""
    if G.n == 0:
        raise ValueError("empty graph")
    verdict = _common_size_verdict(
        maximal_independent_sets(G, early_exit=True), lambda m: m.bit_count())
    return _tuplify(verdict)


def _tuplify(v: PropertyVerdict) -> PropertyVerdict:
    if v.witness is not None:
        v.witness = set_of(v.witness)
    if v.counterexample is not None:
        v.counterexample = set_of(v.counterexample)
    return v


# ---------------------------------------------------------------------------
# trivially well-dominated certificates


def validate_clique_partition(G: Graph, centers) -> bool:
    """Do the closed neighborhoods of ``centers`` form a clique partition?"""
    covered = 0
    for u in centers:
        cu = G.closed(u)
        if covered & cu or not is_clique(G, cu):
            return False
        covered |= cu
    return covered == G.full_mask


def clique_partition_certificate(G: Graph) -> tuple[int, ...] | None:
    """Centers whose closed neighborhoods partition V(G) into cliques, or None.

    Exact backtracking over simplicial vertices; returns the first certificate
    in lexicographic center order.
    """
    if G.n == 0:
        raise ValueError("empty graph")
    closed = [G.closed(v) for v in range(G.n)]
    simplicial = [v for v in range(G.n) if is_clique(G, closed[v])]
    full = G.full_mask

    def search(covered: int):
        if covered == full:
            return ()
        v = (full & ~covered)
        v = (v & -v).bit_length() - 1  # lowest uncovered vertex
        for u in simplicial:
            cu = closed[u]
            if (cu >> v) & 1 and not (cu & covered):
                rest = search(covered | cu)
                if rest is not None:
                    return (u,) + rest
        return None

    return search(0)


# ---------------------------------------------------------------------------
# projection of product minimal dominating sets onto the second factor


def theorem1_projection(P: ProductGraph, D: int,
                        centers) -> list[tuple[int, ...]]:
    """Split a minimal dominating set of G boxtimes H along the clique
    partition of the trivially well-dominated factor G.

    For center u_i, D_i = {v : (u, v) in D, u in N_G[u_i]}.  Each D_i must be
    a minimal dominating set of H and |D| = sum |D_i| = t * gamma(H); any
    failure raises TheoremViolation (it would falsify the product theorem).
    Returns the D_i as vertex tuples of H.
    """
    centers = tuple(centers)
    G = factor_g(P)
    H = factor_h(P)
    if not validate_clique_partition(G, centers):
        raise ValueError("centers are not a clique partition certificate of G")
    if not is_minimal_dominating(P.graph, D):
        raise ValueError("D is not a minimal dominating set of the product")
    parts = []
    total = 0
    for u_i in centers:
        block = G.closed(u_i)
        d_i = 0
        for v in bits(D):
            i, j = P.coords(v)
            if (block >> i) & 1:
                d_i |= 1 << j
        if not is_minimal_dominating(H, d_i):
            raise TheoremViolation(
                f"projection along center {u_i} is not a minimal dominating "
                f"set of H: {set_of(d_i)}")
        parts.append(d_i)
        total += d_i.bit_count()
    gamma_h = domination_number(H)
    if total != D.bit_count() or total != len(centers) * gamma_h:
        raise TheoremViolation(
            f"size bookkeeping failed: |D|={D.bit_count()}, "
            f"sum|D_i|={total}, t*gamma(H)={len(centers) * gamma_h}")
    return [set_of(p) for p in parts]
