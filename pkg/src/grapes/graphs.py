"""Labeled graphs, directed multigraphs, interval sets and graph invariants.

Vertices are plain strings ordered lexicographically; every "pick a vertex"
step in the package breaks ties by that order.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import InputError, ResourceError

LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")

#: Default vertex-count ceiling for exhaustive invariant computations.
BRUTE_FORCE_CUTOFF = 20


def check_label(name):
    if not isinstance(name, str) or not LABEL_RE.match(name):
        raise InputError(f"invalid vertex label {name!r}")
    return name


def edge_label(u, v):
    """Canonical simplicial-vertex name ``{u,v}`` of an undirected edge."""
    u, v = sorted((u, v))
    return f"{{{u},{v}}}"


def arc_label(source, target, index):
    """Canonical simplicial-vertex name ``s>t#n`` of an arc."""
    return f"{source}>{target}#{index}"


# ---------------------------------------------------------------------------
# undirected graphs


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    ``edges`` holds 2-element frozensets.  Endpoints of edges are added to the
    vertex set automatically.
    """

    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()

    def __post_init__(self):
        verts = set(self.vertices)
        edges = set()
        for e in self.edges:
            pair = frozenset(e)
            if len(pair) != 2:
                raise InputError(f"edge {sorted(e)} is a loop or malformed")
            edges.add(pair)
            verts |= pair
        for v in verts:
            if not isinstance(v, str) or not v:
                raise InputError(f"invalid vertex {v!r}")
        object.__setattr__(self, "vertices", frozenset(verts))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        return cls(frozenset(vertices), frozenset(frozenset(e) for e in edges))

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = e
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, v) -> frozenset:
        if v not in self.adjacency:
            raise InputError(f"unknown vertex {v!r}")
        return self.adjacency[v]

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def sorted_edges(self) -> list:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def remove_vertices(self, removed: Iterable) -> "Graph":
        removed = set(removed)
        return Graph(
            self.vertices - removed,
            frozenset(e for e in self.edges if not (e & removed)),
        )

    def remove_edges(self, removed: Iterable) -> "Graph":
        removed = {frozenset(e) for e in removed}
        return Graph(self.vertices, self.edges - removed)

    def isolated_vertices(self) -> list:
        return sorted(v for v in self.vertices if not self.adjacency[v])

    def components(self) -> list:
        """Connected components as a list of vertex sets, in label order."""
        seen, comps = set(), []
        for root in self.sorted_vertices():
            if root in seen:
                continue
            comp, stack = {root}, [root]
            while stack:
                for w in self.adjacency[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps


def closed_neighborhood(G: Graph, S: Iterable) -> frozenset:
    """N[S]: the vertices of S together with everything adjacent to S."""
    S = frozenset(S)
    unknown = S - G.vertices
    if unknown:
        raise InputError(f"unknown vertices {sorted(unknown)}")
    out = set(S)
    for s in S:
        out |= G.adjacency[s]
    return frozenset(out)


def is_forest(G: Graph) -> bool:
    return len(G.edges) == len(G.vertices) - len(G.components())


def leaves(G: Graph) -> frozenset:
    return frozenset(v for v, ns in G.adjacency.items() if len(ns) == 1)


def line_dual(G: Graph) -> Graph:
    """Graph on the edges of G (named by :func:`edge_label`); adjacent iff they share an endpoint."""
    names = {e: edge_label(*e) for e in G.edges}
    new_edges = [
        (names[e], names[f]) for e, f in combinations(G.edges, 2) if e & f
    ]
    return Graph.from_edges(new_edges, names.values())


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class Invariants:
    gamma: int
    i_dom: int
    alpha0: int
    beta1: int
    kappa: int


def _masks(G: Graph):
    order = G.sorted_vertices()
    index = {v: k for k, v in enumerate(order)}
    closed = [1 << k for k in range(len(order))]
    for e in G.edges:
        u, v = (index[x] for x in e)
        closed[u] |= 1 << v
        closed[v] |= 1 << u
    return order, index, closed


def _check_cutoff(G: Graph, cutoff):
    if len(G.vertices) > cutoff:
        raise ResourceError(
            f"{len(G.vertices)} vertices exceeds brute-force cutoff {cutoff}"
        )


def invariants(G: Graph, cutoff: int = BRUTE_FORCE_CUTOFF) -> Invariants:
    """Classical invariants by exhaustive subset search.

    Subsets are scanned by increasing size (decreasing for matchings) and the
    first hit wins.
    """
    _check_cutoff(G, cutoff)
    n = len(G.vertices)
    order, index, closed = _masks(G)
    full = (1 << n) - 1
    edge_masks = [(1 << index[u]) | (1 << index[v]) for u, v in G.sorted_edges()]

    def union(ks):
        m = 0
        for k in ks:
            m |= closed[k]
        return m

    def independent(ks):
        return all(not (closed[a] & (1 << b)) for a, b in combinations(ks, 2))

    gamma = i_dom = None
    for size in range(n + 1):
        for ks in combinations(range(n), size):
            if union(ks) != full:
                continue
            if gamma is None:
                gamma = size
            if independent(ks):
                i_dom = size
                break
        if i_dom is not None:
            break

    alpha0 = next(
        size
        for size in range(n + 1)
        for ks in combinations(range(n), size)
        if all(m & sum(1 << k for k in ks) for m in edge_masks)
    )

    beta1 = 0
    for size in range(min(len(edge_masks), n // 2), 0, -1):
        if any(
            _pairwise_disjoint(edge_masks[j] for j in js)
            for js in combinations(range(len(edge_masks)), size)
        ):
            beta1 = size
            break

    return Invariants(gamma, i_dom, alpha0, beta1, len(G.components()))


def _pairwise_disjoint(masks) -> bool:
    seen = 0
    for m in masks:
        if seen & m:
            return False
        seen |= m
    return True


def _strip_order(F: Graph):
    """Yield (vertex, parent) in leaves-first order for every tree of F.

    Roots come with parent ``None``.
    """
    for comp in F.components():
        root = min(comp)
        order, parent = [root], {root: None}
        for v in order:
            for w in sorted(F.adjacency[v]):
                if w not in parent:
                    parent[w] = v
                    order.append(w)
        for v in reversed(order):
            yield v, parent[v]


def forest_invariants(F: Graph) -> dict:
    """alpha0, beta1 and gamma of a forest by leaf stripping, in linear time.

    Matching/cover: repeatedly match a leaf to its parent and delete both.
    Domination: the free/bound/required labelling scheme, processed leaves first.
    """
    if not is_forest(F):
        raise InputError("forest_invariants needs a forest")
    matched = set()
    beta1 = 0
    for v, p in _strip_order(F):
        if p is not None and v not in matched and p not in matched:
            matched |= {v, p}
            beta1 += 1

    state = {v: "bound" for v in F.vertices}
    gamma = 0
    for v, p in _strip_order(F):
        if p is None:
            if state[v] != "free":
                gamma += 1
        elif state[v] == "bound":
            state[p] = "required"
        elif state[v] == "required":
            gamma += 1
            if state[p] == "bound":
                state[p] = "free"
    return {"alpha0": beta1, "beta1": beta1, "gamma": gamma}


# ---------------------------------------------------------------------------
# directed multigraphs


@dataclass(frozen=True)
class Multidigraph:
    """Directed multigraph; arcs are ``(source, target, index)`` triples.

    Indices of the parallel arcs between one ordered pair are ``0..k-1``.
    Loops are permitted here; :func:`oriented_forest_complex` ignores them.
    """

    vertices: frozenset = frozenset()
    arcs: frozenset = frozenset()

    def __post_init__(self):
        verts = set(self.vertices)
        groups = defaultdict(list)
        for s, t, n in self.arcs:
            verts |= {s, t}
            groups[s, t].append(n)
        for (s, t), idx in groups.items():
            if sorted(idx) != list(range(len(idx))):
                raise InputError(f"arc indices for {s}->{t} are not 0..k-1: {idx}")
        object.__setattr__(self, "vertices", frozenset(verts))
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))

    @classmethod
    def from_pairs(cls, pairs: Iterable, vertices: Iterable = ()) -> "Multidigraph":
        """Build from ``(source, target)`` pairs; repeats become parallel arcs in order."""
        count = defaultdict(int)
        arcs = []
        for s, t in pairs:
            arcs.append((s, t, count[s, t]))
            count[s, t] += 1
        return cls(frozenset(vertices), frozenset(arcs))

    def sorted_arcs(self) -> list:
        return sorted(self.arcs)

    def remove_arcs_with_map(self, removed: Iterable):
        """Drop arcs, re-index parallel classes densely; also return old -> new map."""
        removed = set(removed)
        kept = ((a[0], a[1], a) for a in self.arcs if a not in removed)
        return _reindex(self.vertices, kept)

    def remove_arcs(self, removed: Iterable) -> "Multidigraph":
        return self.remove_arcs_with_map(removed)[0]

    def without_loops(self) -> "Multidigraph":
        return Multidigraph(self.vertices, frozenset(a for a in self.arcs if a[0] != a[1]))


def _reindex(vertices, moved):
    """Rebuild a multidigraph from ``(new_source, new_target, original_arc)`` items.

    Returns the multidigraph plus a map original arc -> new triple.  Parallel
    classes are numbered by (original source, original target, original index).
    """
    groups = defaultdict(list)
    for s, t, orig in moved:
        groups[s, t].append(orig)
    mapping, new_arcs = {}, []
    for (s, t), origs in groups.items():
        for n, orig in enumerate(sorted(origs)):
            mapping[orig] = (s, t, n)
            new_arcs.append((s, t, n))
    return Multidigraph(frozenset(vertices), frozenset(new_arcs)), mapping


def underlying_graph(M: Multidigraph) -> Graph:
    return Graph.from_edges(
        {frozenset((s, t)) for s, t, _ in M.arcs if s != t}, M.vertices
    )


def contract_arc_with_map(M: Multidigraph, z, u):
    """Like :func:`contract_arc` but also return the old-arc -> new-arc map."""
    if z == u or not any(s == z and t == u for s, t, _ in M.arcs):
        raise InputError(f"no arc {z}->{u} to contract")
    moved = []
    for arc in M.arcs:
        s, t, _ = arc
        if t == u:
            continue
        s, t = (u if s == z else s), (u if t == z else t)
        if s == t:
            continue
        moved.append((s, t, arc))
    return _reindex(M.vertices - {z}, moved)


def contract_arc(M: Multidigraph, z, u) -> Multidigraph:
    """M contracted along z->u: drop arcs into u, then merge z into u.

    The merged vertex keeps the name ``u``; loops created by the merge are
    discarded.
    """
    return contract_arc_with_map(M, z, u)[0]


# ---------------------------------------------------------------------------
# intervals


@dataclass(frozen=True, order=True)
class Interval:
    name: str
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise InputError(f"interval {self.name}: lo > hi")

    def meets(self, other: "Interval") -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class IntervalSet:
    """A finite family of named closed intervals with exact endpoints."""

    intervals: tuple = field(default_factory=tuple)

    def __post_init__(self):
        items = tuple(
            iv if isinstance(iv, Interval) else Interval(*iv) for iv in self.intervals
        )
        names = [iv.name for iv in items]
        if len(set(names)) != len(names):
            raise InputError("interval names must be unique")
        object.__setattr__(self, "intervals", items)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    @cached_property
    def by_name(self) -> dict:
        return {iv.name: iv for iv in self.intervals}

    def names(self) -> frozenset:
        return frozenset(self.by_name)

    def without(self, names: Iterable) -> "IntervalSet":
        names = set(names)
        return IntervalSet(tuple(iv for iv in self.intervals if iv.name not in names))


def interval_overlap_graph(X: IntervalSet) -> Graph:
    return Graph.from_edges(
        [(I.name, J.name) for I, J in combinations(X.intervals, 2) if I.meets(J)],
        X.names(),
    )
