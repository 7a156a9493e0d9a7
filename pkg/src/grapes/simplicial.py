"""Finite abstract simplicial complexes stored by their facets.

A complex carries an explicit ground set, which may be strictly larger than
the set of vertices actually used by faces.  Two degenerate values matter and
are kept apart everywhere: the empty complex (no faces at all, contractible)
and ``{∅}`` (only the empty face, the (-1)-sphere).
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Optional

from .errors import InputError

EMPTY_FACE = frozenset()


def face_key(face):
    """Sort key for faces: the tuple of their labels in order."""
    return tuple(sorted(face))


def _antichain(faces):
    """Keep only inclusion-maximal sets."""
    ordered = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
    kept = []
    for f in ordered:
        if not any(f <= g for g in kept):
            kept.append(f)
    return frozenset(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ``ground`` determined by ``facets``.

    Any iterable of faces may be passed as ``facets``; non-maximal ones are
    dropped.  If ``ground`` is omitted it is the union of the faces.
    """

    ground: frozenset
    facets: frozenset

    def __init__(self, facets: Iterable = (), ground: Optional[Iterable] = None):
        facets = _antichain(facets)
        used = frozenset().union(*facets) if facets else frozenset()
        ground = used if ground is None else frozenset(ground)
        if not used <= ground:
            raise InputError(f"faces use labels outside the ground set: {sorted(used - ground)}")
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "ground", ground)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    def is_empty(self) -> bool:
        return not self.facets

    def is_minus_one_sphere(self) -> bool:
        return self.facets == {EMPTY_FACE}

    @property
    def dimension(self) -> int:
        if not self.facets:
            raise ValueError("the empty complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def sorted_facets(self) -> list:
        return sorted(self.facets, key=face_key)

    def faces(self) -> set:
        """Every face, enumerated from the facets."""
        out = set()
        for f in self.facets:
            if f in out:
                continue
            items = sorted(f)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return out

    def __contains__(self, face) -> bool:
        return contains_face(self, face)

    def __repr__(self):
        facets = ", ".join("{" + ",".join(sorted(f)) + "}" for f in self.sorted_facets())
        return f"SimplicialComplex([{facets}], ground={sorted(self.ground)})"


def _as_face(cx: SimplicialComplex, sigma) -> frozenset:
    # a bare label stands for the singleton face
    sigma = frozenset((sigma,)) if isinstance(sigma, str) else frozenset(sigma)
    if not sigma <= cx.ground:
        raise InputError(f"{sorted(sigma - cx.ground)} not in the ground set")
    return sigma


def contains_face(cx: SimplicialComplex, sigma) -> bool:
    sigma = _as_face(cx, sigma)
    return any(sigma <= f for f in cx.facets)


def link(cx: SimplicialComplex, sigma) -> SimplicialComplex:
    """(Δ:σ) = faces m disjoint from σ with m ∪ σ a face; ground loses σ."""
    sigma = _as_face(cx, sigma)
    return SimplicialComplex(
        (f - sigma for f in cx.facets if sigma <= f), cx.ground - sigma
    )


def deletion(cx: SimplicialComplex, sigma) -> SimplicialComplex:
    """(Δ,σ) = faces not containing σ.

    Deleting a single vertex also removes it from the ground set.
    """
    sigma = _as_face(cx, sigma)
    if not sigma:
        raise InputError("deletion of the empty face is not defined")
    faces = []
    for f in cx.facets:
        if sigma <= f:
            faces.extend(f - {x} for x in sigma)
        else:
            faces.append(f)
    ground = cx.ground - sigma if len(sigma) == 1 else cx.ground
    return SimplicialComplex(faces, ground)


def join(*complexes: SimplicialComplex) -> SimplicialComplex:
    ground = frozenset()
    for cx in complexes:
        if ground & cx.ground:
            raise InputError(f"join of complexes with shared labels {sorted(ground & cx.ground)}")
        ground |= cx.ground
    facets = (frozenset().union(*fs) for fs in product(*(c.facets for c in complexes)))
    return SimplicialComplex(facets, ground)


def cone(cx: SimplicialComplex, x) -> SimplicialComplex:
    """A_x(Δ): add x to every face.  x may already lie in the ground set."""
    return SimplicialComplex((f | {x} for f in cx.facets), cx.ground | {x})


def suspension(cx: SimplicialComplex, x, y) -> SimplicialComplex:
    if x == y:
        raise InputError("suspension needs two distinct labels")
    faces = [f | {p} for f in cx.facets for p in (x, y)]
    return SimplicialComplex(faces, cx.ground | {x, y})


def is_cone(cx: SimplicialComplex) -> Optional[str]:
    """Least label lying in every facet, or ``None``."""
    if not cx.facets:
        return None
    common = frozenset.intersection(*cx.facets)
    return min(common) if common else None


def relabel(cx: SimplicialComplex, mapping: dict) -> SimplicialComplex:
    """Rename labels through ``mapping`` (labels not in it stay as they are)."""
    get = lambda v: mapping.get(v, v)  # noqa: E731
    ground = [get(v) for v in cx.ground]
    if len(set(ground)) != len(ground):
        raise InputError("relabelling is not injective on the ground set")
    return SimplicialComplex(
        (frozenset(get(v) for v in f) for f in cx.facets), ground
    )


def simplex(labels: Iterable) -> SimplicialComplex:
    labels = frozenset(labels)
    return SimplicialComplex([labels], labels)


def cross_polytope_boundary(r: int, labels: Optional[list] = None) -> SimplicialComplex:
    """Join of r copies of S⁰; label pairs are ``(labels[2i], labels[2i+1])``."""
    if labels is None:
        labels = [f"{s}{i}" for i in range(r) for s in ("p", "n")]
    labels = list(labels)
    if len(labels) != 2 * r:
        raise InputError(f"need {2 * r} labels, got {len(labels)}")
    if len(set(labels)) != len(labels):
        raise InputError("cross-polytope labels must be distinct")
    spheres = [
        SimplicialComplex([{labels[2 * i]}, {labels[2 * i + 1]}]) for i in range(r)
    ]
    return join(*spheres)


def enumerate_faces(cx: SimplicialComplex, k: int) -> list:
    """Sorted list of the faces with k+1 vertices."""
    if k < -1:
        raise InputError("k must be at least -1")
    out = set()
    for f in cx.facets:
        if len(f) >= k + 1:
            out.update(frozenset(c) for c in combinations(sorted(f), k + 1))
    return sorted(out, key=face_key)


def greedy_collapse(cx: SimplicialComplex) -> SimplicialComplex:
    """Perform elementary collapses until none is left.

    A free pair is a nonempty face τ with exactly one proper coface σ (which is
    then maximal and one dimension higher).  The least τ is always collapsed
    first, so the result is deterministic.  This is best effort: reaching a
    non-minimal complex is not an error.
    """
    faces = cx.faces()
    cofaces = {f: set() for f in faces}
    for f in faces:
        for x in f:
            cofaces[f - {x}].add(f)

    heap = [(face_key(f), f) for f in faces if f and len(cofaces[f]) == 1]
    heapq.heapify(heap)
    while heap:
        _, tau = heapq.heappop(heap)
        if tau not in faces or len(cofaces[tau]) != 1:
            continue
        (sigma,) = cofaces[tau]
        for removed in (sigma, tau):
            faces.discard(removed)
            for x in removed:
                below = removed - {x}
                if below in cofaces:
                    cofaces[below].discard(removed)
                    if below and below in faces and len(cofaces[below]) == 1:
                        heapq.heappush(heap, (face_key(below), below))
        del cofaces[sigma], cofaces[tau]
    return SimplicialComplex(faces, cx.ground)
