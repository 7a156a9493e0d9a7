"""Seeded random forests, multidiforests and interval sets for experiments."""
from __future__ import annotations

import random
from fractions import Fraction

from .graphs import Graph, Interval, IntervalSet, Multidigraph


def _names(rng: random.Random, n: int) -> list:
    # shuffled so that label order is unrelated to the tree structure
    names = [f"v{i:02d}" for i in range(n)]
    rng.shuffle(names)
    return names


def random_forest(rng: random.Random, n: int, attach: float = 0.8) -> Graph:
    """Each new vertex joins a uniformly chosen earlier one with probability ``attach``."""
    names = _names(rng, n)
    edges = [
        (names[i], names[rng.randrange(i)]) for i in range(1, n) if rng.random() < attach
    ]
    return Graph.from_edges(edges, names)


def random_multidiforest(rng: random.Random, max_arcs: int = 8, max_vertices: int = 7) -> Multidigraph:
    """Orient a random forest, doubling some edges and adding parallel arcs and loops."""
    F = random_forest(rng, rng.randint(1, max_vertices))
    pairs = []
    for u, v in F.sorted_edges():
        if rng.random() < 0.5:
            u, v = v, u
        pairs.append((u, v))
        roll = rng.random()
        if roll < 0.3:
            pairs.append((v, u))
        elif roll < 0.45:
            pairs.append((u, v))
    if F.vertices and rng.random() < 0.1:
        w = rng.choice(F.sorted_vertices())
        pairs.append((w, w))
    rng.shuffle(pairs)
    return Multidigraph.from_pairs(pairs[:max_arcs], F.vertices)


def random_interval_set(rng: random.Random, max_intervals: int = 8) -> IntervalSet:
    """Intervals with small rational endpoints, so shared endpoints are common."""
    items = []
    for k in range(rng.randint(0, max_intervals)):
        lo = Fraction(rng.randint(0, 12), rng.choice((1, 2, 3)))
        hi = lo + Fraction(rng.randint(0, 6), rng.choice((1, 2)))
        items.append(Interval(f"I{k}", lo, hi))
    return IntervalSet(tuple(items))
