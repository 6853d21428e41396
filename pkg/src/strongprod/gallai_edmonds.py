"""Gallai-Edmonds partition: computation and structural verification.

D(G) collects the vertices missed by some maximum matching, B(G) = V - D(G)
those covered by every maximum matching, A(G) = B(G) intersect N(D(G)),
C(G) = B(G) - A(G).  D is computed by the per-vertex deletion test (deleting
v preserves the matching number iff some maximum matching misses v), which is
simple and independently checkable against the brute-force definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits, components, induced_subgraph, is_connected, \
    is_independent, remove_vertices, set_of
from .matching import endpoints_mask, is_equimatchable, is_factor_critical, \
    matching_number, maximal_matchings


@dataclass(frozen=True)
class GEDecomposition:
    a_mask: int
    c_mask: int
    d_mask: int
    d_components: tuple[int, ...]

    @property
    def c(self) -> int:
        return len(self.d_components)

    def as_dict(self, *, names=("A", "C", "D")) -> dict:
        return {
            names[0]: list(set_of(self.a_mask)),
            names[1]: list(set_of(self.c_mask)),
            names[2]: list(set_of(self.d_mask)),
            "d_components": [list(set_of(m)) for m in self.d_components],
        }


@dataclass
class StructureReport:
    ok: bool
    violations: list[str] = field(default_factory=list)


def decompose(G: Graph) -> GEDecomposition:
    if G.n == 0:
        raise ValueError("empty graph")
    am = matching_number(G)
    d_mask = 0
    for v in range(G.n):
        if matching_number(remove_vertices(G, 1 << v)) == am:
            d_mask |= 1 << v
    b_mask = G.full_mask & ~d_mask
    nbhd_d = 0
    for v in bits(d_mask):
        nbhd_d |= G.adj[v]
    a_mask = b_mask & nbhd_d
    c_mask = b_mask & ~a_mask
    return GEDecomposition(a_mask, c_mask, d_mask, _components_of(G, d_mask))


def brute_force_decompose(G: Graph) -> GEDecomposition:
    """Straight from the definition: intersect V(M) over all maximum matchings."""
    am = matching_number(G)
    b_mask = G.full_mask
    for m in maximal_matchings(G):
        if len(m) == am:
            b_mask &= endpoints_mask(m)
    d_mask = G.full_mask & ~b_mask
    nbhd_d = 0
    for v in bits(d_mask):
        nbhd_d |= G.adj[v]
    a_mask = b_mask & nbhd_d
    c_mask = b_mask & ~a_mask
    return GEDecomposition(a_mask, c_mask, d_mask, _components_of(G, d_mask))


def _components_of(G: Graph, mask: int) -> tuple[int, ...]:
    if not mask:
        return ()
    old = list(bits(mask))
    return tuple(sum(1 << old[i] for i in bits(c))
                 for c in components(induced_subgraph(G, mask)))


def maximum_matchings(G: Graph):
    am = matching_number(G)
    for m in maximal_matchings(G):
        if len(m) == am:
            yield m


def verify_structure(G: Graph, dec: GEDecomposition) -> StructureReport:
    """Check the two structure-theorem items against exhaustive enumeration.

    (i) every component of G[D] is factor-critical; (ii) every maximum
    matching matches each A-vertex into a distinct D-component.  Any failure
    is reported (it would falsify the decomposition theorem).
    """
    report = StructureReport(ok=True)
    for comp in dec.d_components:
        if not is_factor_critical(induced_subgraph(G, comp)):
            report.ok = False
            report.violations.append(
                f"D-component {set_of(comp)} is not factor-critical")
    a_list = set_of(dec.a_mask)
    for m in maximum_matchings(G):
        partner = dict()
        for u, v in m:
            partner[u] = v
            partner[v] = u
        used_components = set()
        for a in a_list:
            mate = partner.get(a)
            if mate is None or not ((dec.d_mask >> mate) & 1):
                report.ok = False
                report.violations.append(
                    f"maximum matching {m} leaves A-vertex {a} unmatched "
                    f"into D")
                continue
            idx = next(i for i, c in enumerate(dec.d_components)
                       if (c >> mate) & 1)
            if idx in used_components:
                report.ok = False
                report.violations.append(
                    f"maximum matching {m} reuses D-component {idx}")
            used_components.add(idx)
    return report


def check_lemma_independent(G: Graph) -> StructureReport:
    """For an odd, connected, equimatchable graph: C(G) empty, A(G) independent."""
    if G.n % 2 == 0:
        raise ValueError("graph must have odd order")
    if not is_connected(G):
        raise ValueError("graph must be connected")
    if not is_equimatchable(G).holds:
        raise ValueError("graph must be equimatchable")
    dec = decompose(G)
    report = StructureReport(ok=True)
    if dec.c_mask:
        report.ok = False
        report.violations.append(f"C(G) nonempty: {set_of(dec.c_mask)}")
    if not is_independent(G, dec.a_mask):
        report.ok = False
        report.violations.append(f"A(G) not independent: {set_of(dec.a_mask)}")
    return report
