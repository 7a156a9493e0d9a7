"""The seven complexes built from graphs, multidigraphs and interval sets.

Complexes on edge sets use :func:`~grapes.graphs.edge_label` names, complexes
on arcs use :func:`~grapes.graphs.arc_label` names.  The two forest reductions
(vertex removal for independence complexes, edge removal for dominance
complexes) live here too.
"""
from __future__ import annotations

import enum
from itertools import combinations

from .errors import InputError, ResourceError
from .graphs import (
    BRUTE_FORCE_CUTOFF,
    Graph,
    IntervalSet,
    Multidigraph,
    arc_label,
    closed_neighborhood,
    edge_label,
    is_forest,
    leaves,
)
from .simplicial import SimplicialComplex


class ComplexKind(enum.Enum):
    ORIENTED_FOREST = "of"
    INDEPENDENCE = "ind"
    DOMINANCE = "dom"
    MATCHING = "match"
    EDGE_COVER = "ec"
    EDGE_DOMINANCE = "ed"
    INTERVAL_ORDER = "interval"

    @property
    def input_type(self):
        if self is ComplexKind.ORIENTED_FOREST:
            return Multidigraph
        if self is ComplexKind.INTERVAL_ORDER:
            return IntervalSet
        return Graph

    @classmethod
    def parse(cls, name: str) -> "ComplexKind":
        key = name.strip().lower().replace("-", "_")
        for kind in cls:
            if key in (kind.value, kind.name.lower(), kind.name.lower().replace("_", "")):
                return kind
        aliases = {"matching": cls.MATCHING, "io": cls.INTERVAL_ORDER, "oriented": cls.ORIENTED_FOREST}
        if key in aliases:
            return aliases[key]
        raise InputError(f"unknown complex kind {name!r}")


# ---------------------------------------------------------------------------
# helpers


def _maximal_masks(is_face, n):
    """Facets of the complex on ``range(n)`` whose faces satisfy ``is_face``.

    Bitmask brute force; only for the desk-scale complexes defined by
    complements.
    """
    faces = [m for m in range(1 << n) if is_face(m)]
    face_set = set(faces)
    return [
        m for m in faces
        if all((m | (1 << k)) not in face_set for k in range(n) if not m >> k & 1)
    ]


def _masks_to_facets(masks, labels):
    return [frozenset(labels[k] for k in range(len(labels)) if m >> k & 1) for m in masks]


def _maximal_independent_sets(G: Graph):
    """Bron-Kerbosch with pivoting, run on the complement of G."""
    adj = G.adjacency
    out = []

    def expand(chosen, candidates, excluded):
        if not candidates and not excluded:
            out.append(chosen)
            return
        # in the complement, u's neighbours are V - N[u]
        pivot = max(sorted(candidates | excluded), key=lambda u: len(candidates - adj[u]))
        for v in sorted(candidates & (adj[pivot] | {pivot})):
            expand(chosen | {v}, candidates - adj[v] - {v}, excluded - adj[v] - {v})
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand(frozenset(), frozenset(G.vertices), frozenset())
    return out


# ---------------------------------------------------------------------------
# constructors


def independence_complex(G: Graph) -> SimplicialComplex:
    """Ind(G): independent vertex sets."""
    return SimplicialComplex(_maximal_independent_sets(G), G.vertices)


def _dominance_by_dominating_sets(G: Graph) -> SimplicialComplex:
    order = G.sorted_vertices()
    n = len(order)
    full = frozenset(order)
    faces = []
    for size in range(n + 1):
        for sigma in combinations(order, size):
            if closed_neighborhood(G, full - set(sigma)) == full:
                faces.append(frozenset(sigma))
    return SimplicialComplex(faces, full)


def _dominance_by_nonfaces(G: Graph) -> SimplicialComplex:
    order = G.sorted_vertices()
    index = {v: k for k, v in enumerate(order)}
    nonfaces = {
        sum(1 << index[w] for w in closed_neighborhood(G, {v})) for v in order
    }
    masks = _maximal_masks(lambda m: all(m & nf != nf for nf in nonfaces), len(order))
    return SimplicialComplex(_masks_to_facets(masks, order), order)


def dominance_complex(G: Graph, cutoff: int = BRUTE_FORCE_CUTOFF, method: str = "nonfaces") -> SimplicialComplex:
    """Dom(G): complements of dominating sets.

    ``method="nonfaces"`` avoids every closed neighbourhood;
    ``method="dominating"`` enumerates complements of dominating sets directly.
    The two are independent constructions of the same complex.
    """
    if len(G.vertices) > cutoff:
        raise ResourceError(f"{len(G.vertices)} vertices exceeds cutoff {cutoff}")
    if method == "nonfaces":
        return _dominance_by_nonfaces(G)
    if method == "dominating":
        return _dominance_by_dominating_sets(G)
    raise InputError(f"unknown method {method!r}")


def matching_complex(G: Graph) -> SimplicialComplex:
    """M(G): sets of pairwise disjoint edges, on the edge labels."""
    edges = sorted(G.edges, key=lambda e: edge_label(*e))
    facets = []

    def grow(k, used, chosen):
        if k == len(edges):
            # maximal iff no skipped edge could still be added
            if all(e & used for e in edges if edge_label(*e) not in chosen):
                facets.append(frozenset(chosen))
            return
        e = edges[k]
        if not (e & used):
            grow(k + 1, used | e, chosen | {edge_label(*e)})
        grow(k + 1, used, chosen)

    grow(0, frozenset(), frozenset())
    return SimplicialComplex(facets, (edge_label(*e) for e in edges))


def edge_cover_complex(G: Graph, cutoff: int = BRUTE_FORCE_CUTOFF) -> SimplicialComplex:
    """EC(G): complements of edge covers, on the edge labels.

    A graph with an isolated vertex has no edge cover, so EC(G) is the empty
    complex.
    """
    if len(G.edges) > cutoff:
        raise ResourceError(f"{len(G.edges)} edges exceeds cutoff {cutoff}")
    labels = sorted(edge_label(*e) for e in G.edges)
    if G.isolated_vertices():
        return SimplicialComplex([], labels)
    index = {lab: k for k, lab in enumerate(labels)}
    stars = {
        sum(1 << index[edge_label(v, w)] for w in G.adjacency[v]) for v in G.vertices
    }
    masks = _maximal_masks(lambda m: all(m & s != s for s in stars), len(labels))
    return SimplicialComplex(_masks_to_facets(masks, labels), labels)


def edge_dominance_complex(G: Graph, cutoff: int = BRUTE_FORCE_CUTOFF) -> SimplicialComplex:
    """ED(G): complements of edge sets dominating every edge."""
    if len(G.edges) > cutoff:
        raise ResourceError(f"{len(G.edges)} edges exceeds cutoff {cutoff}")
    edges = sorted(G.edges, key=lambda e: edge_label(*e))
    labels = [edge_label(*e) for e in edges]
    stars = {
        sum(1 << k for k, f in enumerate(edges) if e & f) for e in edges
    }
    masks = _maximal_masks(lambda m: all(m & s != s for s in stars), len(labels))
    return SimplicialComplex(_masks_to_facets(masks, labels), labels)


def _is_oriented_forest(arcs) -> bool:
    """Distinct targets and no oriented cycle; arcs are (s, t, n) triples."""
    parent = {}
    for s, t, _ in arcs:
        if t in parent:
            return False
        parent[t] = s
    # with one parent per vertex, a cycle shows up as a repeated vertex while
    # walking parent pointers
    done = set()
    for start in parent:
        path, v = set(), start
        while v in parent and v not in done:
            if v in path:
                return False
            path.add(v)
            v = parent[v]
        done |= path
    return True


def oriented_forest_complex(M: Multidigraph) -> SimplicialComplex:
    """OF(M): arc sets forming oriented forests.  Loops are ignored."""
    arcs = sorted(a for a in M.arcs if a[0] != a[1])
    by_target = {}
    for a in arcs:
        by_target.setdefault(a[1], []).append(a)
    targets = sorted(by_target)
    facets = []

    def grow(k, chosen):
        if k == len(targets):
            if all(
                not _is_oriented_forest(chosen + [a])
                for t in targets if not any(c[1] == t for c in chosen)
                for a in by_target[t]
            ):
                facets.append(frozenset(arc_label(*a) for a in chosen))
            return
        for a in by_target[targets[k]]:
            if _is_oriented_forest(chosen + [a]):
                grow(k + 1, chosen + [a])
        grow(k + 1, chosen)

    grow(0, [])
    return SimplicialComplex(facets, (arc_label(*a) for a in arcs))


def interval_order_complex(X: IntervalSet) -> SimplicialComplex:
    """Sets of pairwise disjoint intervals, on the interval names."""
    items = sorted(X.intervals, key=lambda iv: iv.name)
    facets = []

    def grow(k, chosen):
        if k == len(items):
            if all(
                any(iv.meets(c) for c in chosen) for iv in items if iv not in chosen
            ):
                facets.append(frozenset(iv.name for iv in chosen))
            return
        iv = items[k]
        if not any(iv.meets(c) for c in chosen):
            grow(k + 1, chosen + [iv])
        grow(k + 1, chosen)

    grow(0, [])
    return SimplicialComplex(facets, X.names())


def build(kind: ComplexKind, source) -> SimplicialComplex:
    """Construct the complex of ``kind`` from an input of the matching type."""
    kind = ComplexKind.parse(kind) if isinstance(kind, str) else kind
    if not isinstance(source, kind.input_type):
        raise InputError(f"{kind.name} needs a {kind.input_type.__name__}, got {type(source).__name__}")
    return {
        ComplexKind.ORIENTED_FOREST: oriented_forest_complex,
        ComplexKind.INDEPENDENCE: independence_complex,
        ComplexKind.DOMINANCE: dominance_complex,
        ComplexKind.MATCHING: matching_complex,
        ComplexKind.EDGE_COVER: edge_cover_complex,
        ComplexKind.EDGE_DOMINANCE: edge_dominance_complex,
        ComplexKind.INTERVAL_ORDER: interval_order_complex,
    }[kind](source)


# ---------------------------------------------------------------------------
# forest reductions


def _require_forest(F: Graph):
    if not is_forest(F):
        raise InputError("reduction needs a forest")


def _distance_two_from_leaf(F: Graph):
    out = set()
    for b in leaves(F):
        (a,) = F.adjacency[b]
        out |= {v for v in F.adjacency[a] if v != b}
    return out


def reduce_scremo(F: Graph, log: list = None) -> Graph:
    """Delete vertices at distance two from a leaf until none is left.

    Each deletion is a collapse of Ind(F), so the homotopy type of the
    independence complex is unchanged.  The least such vertex goes first.
    """
    _require_forest(F)
    while True:
        candidates = _distance_two_from_leaf(F)
        if not candidates:
            return F
        a = min(candidates)
        if log is not None:
            log.append(f"remove vertex {a}")
        F = F.remove_vertices([a])


def _doscremo_triples(F: Graph):
    for b in leaves(F):
        (a,) = F.adjacency[b]
        for c in F.adjacency[a]:
            if c != b:
                yield a, b, c


def reduce_doscremo(F: Graph, log: list = None, reverse: bool = False):
    """Delete edges {a,c} where a carries a leaf b and c != b.

    Each deletion is a collapse of Dom(F).  Stops once only isolated vertices
    and isolated edges remain and returns ``(F', r)`` with r the number of
    edges left.  ``reverse`` takes the greatest triple instead of the least.
    """
    _require_forest(F)
    pick = max if reverse else min
    while True:
        triples = list(_doscremo_triples(F))
        if not triples:
            return F, len(F.edges)
        a, b, c = pick(triples)
        if log is not None:
            log.append(f"remove edge {edge_label(a, c)} (leaf {b} at {a})")
        F = F.remove_edges([(a, c)])
