"""Homotopy types of grapes through domination.

If ``a`` dominates ``b`` in Δ, the link (Δ:a) sits inside the cone with apex b
over itself, which lies in the deletion (Δ,a); hence

    Δ ≃ (Δ,a) ∨ Σ(Δ:a)

and recursing on both sides reduces Δ to base cases (empty complex, {∅}, a
point, a cone).  The recursion tree is returned as a certificate.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Union

from .constructors import ComplexKind, build
from .errors import CertificationError, InputError, InternalConsistencyError
from .graphs import (
    Graph,
    IntervalSet,
    Multidigraph,
    arc_label,
    closed_neighborhood,
    contract_arc_with_map,
    edge_label,
    leaves,
    underlying_graph,
)
from .simplicial import SimplicialComplex, contains_face, deletion, is_cone, link

# ---------------------------------------------------------------------------
# homotopy types


@dataclass(frozen=True)
class HomotopyType:
    """A wedge of spheres, stored as the descending tuple of their dimensions.

    The empty wedge is the contractible type.  S^-1 never shares a wedge.
    """

    dims: tuple = ()

    def __post_init__(self):
        dims = tuple(sorted(self.dims, reverse=True))
        if any(d < -1 for d in dims):
            raise InputError("sphere dimensions must be >= -1")
        if -1 in dims and len(dims) > 1:
            raise InternalConsistencyError("S^-1 cannot be wedged with anything")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def sphere(cls, k: int) -> "HomotopyType":
        return cls((k,))

    @classmethod
    def wedge(cls, *dims: int) -> "HomotopyType":
        return cls(dims)

    @property
    def is_contractible(self) -> bool:
        return not self.dims

    @property
    def is_sphere(self) -> bool:
        return len(self.dims) == 1

    def multiplicities(self) -> Counter:
        return Counter(self.dims)

    def __str__(self):
        if not self.dims:
            return "contractible"
        return " v ".join(f"S^{d}" for d in self.dims)


CONTRACTIBLE = HomotopyType()


def suspend_type(t: HomotopyType) -> HomotopyType:
    return HomotopyType(tuple(d + 1 for d in t.dims))


def wedge_type(t1: HomotopyType, t2: HomotopyType) -> HomotopyType:
    if (t1.dims == (-1,) and t2.dims) or (t2.dims == (-1,) and t1.dims):
        raise InternalConsistencyError(f"cannot wedge {t1} with {t2}")
    return HomotopyType(t1.dims + t2.dims)


# ---------------------------------------------------------------------------
# decomposition trace


@dataclass(frozen=True)
class EmptyNode:
    def lines(self, depth=0):
        return ["  " * depth + "empty"]


@dataclass(frozen=True)
class MinusOneSphereNode:
    def lines(self, depth=0):
        return ["  " * depth + "sphere(-1)"]


@dataclass(frozen=True)
class PointNode:
    label: str

    def lines(self, depth=0):
        return ["  " * depth + f"point {self.label}"]


@dataclass(frozen=True)
class ConeNode:
    apex: str

    def lines(self, depth=0):
        return ["  " * depth + f"cone apex={self.apex}"]


@dataclass(frozen=True)
class UncertifiedNode:
    """Where the recursion found no domination pair."""

    n_vertices: int

    def lines(self, depth=0):
        return ["  " * depth + f"uncertified vertices={self.n_vertices}"]


@dataclass(frozen=True)
class SplitNode:
    """Δ ≃ (Δ,a) ∨ Σ(Δ:a) with ``a`` dominating ``b``."""

    a: str
    b: str
    n_vertices: int
    deletion: "TraceNode"
    link: "TraceNode"

    def lines(self, depth=0):
        head = ["  " * depth + f"split a={self.a} b={self.b}"]
        return head + self.deletion.lines(depth + 1) + self.link.lines(depth + 1)


TraceNode = Union[EmptyNode, MinusOneSphereNode, PointNode, ConeNode, SplitNode, UncertifiedNode]


def format_trace(node: TraceNode) -> str:
    return "\n".join(node.lines())


def iter_splits(node: TraceNode):
    """Yield every SplitNode of a trace, parents before children."""
    if isinstance(node, SplitNode):
        yield node
        yield from iter_splits(node.deletion)
        yield from iter_splits(node.link)


# ---------------------------------------------------------------------------
# domination


def dominates(cx: SimplicialComplex, a, b) -> bool:
    """Is A_b(Δ:a) contained in (Δ,a)?

    Checking the facets of the link suffices: every face of A_b(Δ:a) lies
    below some σ ∪ {b} with σ a facet of (Δ:a).
    """
    if a == b:
        raise InputError("a vertex is never tested against itself")
    if a not in cx.ground or b not in cx.ground:
        raise InputError(f"{a!r} or {b!r} not in the ground set")
    if b not in cx.vertices:
        raise InputError(f"{b!r} is not a vertex of the complex")
    return all(
        contains_face(cx, sigma | {b}) for sigma in link(cx, {a}).facets
    )


# ---------------------------------------------------------------------------
# strategies


@dataclass(frozen=True)
class Choice:
    a: str
    b: str
    deletion_context: object = None
    link_context: object = None


class Strategy:
    """Chooses the domination pair at each recursion node.

    ``root`` is the side data handed to the top-level call; ``choose`` sees
    the current complex plus the side data of its node and returns a
    :class:`Choice` or ``None``.
    """

    name = "strategy"
    root = None

    def choose(self, cx: SimplicialComplex, context) -> Optional[Choice]:
        raise NotImplementedError


class Exhaustive(Strategy):
    """Lexicographically first ordered pair (a, b) of vertices with a dominating b."""

    name = "exhaustive"

    def choose(self, cx, context):
        verts = sorted(cx.vertices)
        for a in verts:
            for b in verts:
                if a != b and dominates(cx, a, b):
                    return Choice(a, b)
        return None


class _GraphFamily(Strategy):
    def __init__(self, source):
        self.root = source


def _leaf_pairs(G: Graph):
    """(leaf b, its neighbour a) in order of b."""
    for b in sorted(leaves(G)):
        (a,) = G.adjacency[b]
        yield b, a


class IndependenceFamily(_GraphFamily):
    """A vertex next to a leaf dominates the leaf."""

    name = "family:ind"

    def choose(self, cx, G: Graph):
        for b, a in _leaf_pairs(G):
            return Choice(a, b, G.remove_vertices([a]), G.remove_vertices(closed_neighborhood(G, {a})))
        return None


class DominanceFamily(_GraphFamily):
    """A vertex next to a leaf dominates the leaf; the deletion is a cone."""

    name = "family:dom"

    def choose(self, cx, G: Graph):
        for b, a in _leaf_pairs(G):
            return Choice(a, b, None, G.remove_vertices([a]))
        return None


def _leaf_with_long_arm(G: Graph):
    """(a, b, c): b a leaf, a its neighbour, c the least other neighbour of a."""
    for b, a in _leaf_pairs(G):
        others = sorted(G.adjacency[a] - {b})
        if others:
            return a, b, others[0]
    return None


class MatchingFamily(_GraphFamily):
    """Edge {a,c} dominates the leaf edge {a,b}."""

    name = "family:match"

    def choose(self, cx, G: Graph):
        found = _leaf_with_long_arm(G)
        if found is None:
            return None
        a, b, c = found
        return Choice(
            edge_label(a, c), edge_label(a, b),
            G.remove_edges([(a, c)]), G.remove_vertices([a, c]),
        )


class EdgeDominanceFamily(_GraphFamily):
    """Edge {a,c} dominates the leaf edge {a,b}; the deletion is a cone."""

    name = "family:ed"

    def choose(self, cx, G: Graph):
        found = _leaf_with_long_arm(G)
        if found is None:
            return None
        a, b, c = found
        return Choice(edge_label(a, c), edge_label(a, b), None, G.remove_edges([(a, c)]))


class EdgeCoverFamily(_GraphFamily):
    """On a path x1-x2-x3-x4 from a leaf x1 with x4 not a leaf, {x3,x4} dominates {x2,x3}."""

    name = "family:ec"

    def choose(self, cx, G: Graph):
        leafset = leaves(G)
        for x1, x2 in _leaf_pairs(G):
            for x3 in sorted(G.adjacency[x2] - {x1}):
                for x4 in sorted(G.adjacency[x3] - {x2}):
                    if x4 not in leafset:
                        return Choice(
                            edge_label(x3, x4), edge_label(x2, x3),
                            None, G.remove_edges([(x3, x4)]),
                        )
        return None


class IntervalFamily(_GraphFamily):
    """An interval through the least right endpoint dominates the interval ending there."""

    name = "family:interval"

    def choose(self, cx, X: IntervalSet):
        if not len(X):
            return None
        first = min(X.intervals, key=lambda iv: (iv.hi, iv.name))
        through = sorted(
            iv.name for iv in X.intervals if iv is not first and iv.contains(first.hi)
        )
        if not through:
            return None
        J = X.by_name[through[0]]
        return Choice(
            J.name, first.name,
            X.without([J.name]),
            X.without([iv.name for iv in X.intervals if iv.meets(J)]),
        )


@dataclass(frozen=True)
class _ArcContext:
    graph: Multidigraph
    labels: dict  # arc triple -> simplicial vertex label


class OrientedForestFamily(Strategy):
    """Parallel arcs dominate each other; otherwise use a leaf y with neighbour x.

    If both y->x and x->y exist, y->x dominates x->y.  Otherwise some z->x with
    z != y dominates y->x.
    """

    name = "family:of"

    def __init__(self, M: Multidigraph):
        M = M.without_loops()
        self.root = _ArcContext(M, {a: arc_label(*a) for a in M.arcs})

    def choose(self, cx, ctx: _ArcContext):
        M = ctx.graph
        by_pair = {}
        for arc in M.sorted_arcs():
            by_pair.setdefault(arc[:2], []).append(arc)
        parallel = next((arcs for arcs in by_pair.values() if len(arcs) > 1), None)
        if parallel is not None:
            return self._choice(ctx, parallel[0], parallel[1])

        U = underlying_graph(M)
        leafset = leaves(U)
        for y, x in _leaf_pairs(U):
            yx = by_pair.get((y, x))
            xy = by_pair.get((x, y))
            if yx and xy:
                return self._choice(ctx, yx[0], xy[0])
            if yx:
                # prefer an arc coming from the interior of the tree
                into_x = sorted(
                    (arc for arc in M.arcs if arc[1] == x and arc[0] != y),
                    key=lambda arc: (arc[0] in leafset, arc),
                )
                if into_x:
                    return self._choice(ctx, into_x[0], yx[0])
        return None

    @staticmethod
    def _choice(ctx, dominator, dominated):
        M, labels = ctx.graph, ctx.labels
        removed, kept = M.remove_arcs_with_map([dominator])
        contracted, moved = contract_arc_with_map(M, dominator[0], dominator[1])
        return Choice(
            labels[dominator],
            labels[dominated],
            _ArcContext(removed, {new: labels[old] for old, new in kept.items()}),
            _ArcContext(contracted, {new: labels[old] for old, new in moved.items()}),
        )


_FAMILIES = {
    ComplexKind.ORIENTED_FOREST: OrientedForestFamily,
    ComplexKind.INDEPENDENCE: IndependenceFamily,
    ComplexKind.DOMINANCE: DominanceFamily,
    ComplexKind.MATCHING: MatchingFamily,
    ComplexKind.EDGE_COVER: EdgeCoverFamily,
    ComplexKind.EDGE_DOMINANCE: EdgeDominanceFamily,
    ComplexKind.INTERVAL_ORDER: IntervalFamily,
}


def family_strategy(kind, source) -> Strategy:
    """The lemma-driven strategy for complexes of ``kind`` built from ``source``."""
    kind = ComplexKind.parse(kind) if isinstance(kind, str) else kind
    return _FAMILIES[kind](source)


# ---------------------------------------------------------------------------
# recursion


def find_domination_pair(cx: SimplicialComplex, strategy: Strategy = None, context=None):
    """(a, b) with a dominating b according to ``strategy``, or ``None``."""
    strategy = strategy or Exhaustive()
    choice = strategy.choose(cx, strategy.root if context is None else context)
    if choice is None:
        return None
    _check_choice(cx, choice, strategy)
    return choice.a, choice.b


def _check_choice(cx, choice, strategy):
    if (
        choice.a == choice.b
        or choice.b not in cx.vertices
        or choice.a not in cx.vertices
        or not dominates(cx, choice.a, choice.b)
    ):
        raise InternalConsistencyError(
            f"{strategy.name} chose {choice.a} over {choice.b}, which is not a domination"
        )


def _decompose(cx: SimplicialComplex, strategy: Strategy, context):
    if cx.is_empty():
        return CONTRACTIBLE, EmptyNode()
    if cx.is_minus_one_sphere():
        return HomotopyType.sphere(-1), MinusOneSphereNode()
    if len(cx.vertices) == 1:
        return CONTRACTIBLE, PointNode(next(iter(cx.vertices)))
    apex = is_cone(cx)
    if apex is not None:
        return CONTRACTIBLE, ConeNode(apex)

    if context is None and not isinstance(strategy, Exhaustive):
        raise InternalConsistencyError(
            f"{strategy.name} expected this branch to be a cone"
        )
    choice = strategy.choose(cx, context)
    if choice is None:
        raise CertificationError(
            "no domination pair found", UncertifiedNode(len(cx.vertices))
        )
    _check_choice(cx, choice, strategy)

    n = len(cx.vertices)
    del_cx = deletion(cx, {choice.a})
    link_cx = link(cx, {choice.a})
    try:
        t_del, node_del = _decompose(del_cx, strategy, choice.deletion_context)
    except CertificationError as exc:
        partial = SplitNode(choice.a, choice.b, n, exc.trace, UncertifiedNode(len(link_cx.vertices)))
        raise CertificationError(str(exc), partial) from None
    try:
        t_link, node_link = _decompose(link_cx, strategy, choice.link_context)
    except CertificationError as exc:
        partial = SplitNode(choice.a, choice.b, n, node_del, exc.trace)
        raise CertificationError(str(exc), partial) from None
    return (
        wedge_type(t_del, suspend_type(t_link)),
        SplitNode(choice.a, choice.b, n, node_del, node_link),
    )


def homotopy_type(cx: SimplicialComplex, strategy: Strategy = None):
    """Homotopy type of ``cx`` and the decomposition that certifies it.

    Raises :class:`CertificationError` (carrying the partial trace) when some
    branch has no domination pair.
    """
    strategy = strategy or Exhaustive()
    return _decompose(cx, strategy, strategy.root)


def analyze(kind, source, strategy: str = "family"):
    """Build the complex of ``kind`` from ``source`` and decompose it.

    Returns ``(complex, homotopy type, trace)``.
    """
    kind = ComplexKind.parse(kind) if isinstance(kind, str) else kind
    cx = build(kind, source)
    if strategy == "family":
        strat = family_strategy(kind, source)
    elif strategy == "exhaustive":
        strat = Exhaustive()
    else:
        raise InputError(f"unknown strategy {strategy!r}")
    htype, trace = homotopy_type(cx, strat)
    return cx, htype, trace
