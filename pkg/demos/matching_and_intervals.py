"""
Matchings of a tree and disjoint intervals
==========================================

Both complexes are independence complexes in disguise: of the line graph for
matchings, of the overlap graph for intervals.
"""
from pathlib import Path

from grapes import (
    Graph,
    IntervalSet,
    analyze,
    independence_complex,
    interval_overlap_graph,
    line_dual,
)
from grapes.io import format_complex, read_input

data = Path(__file__).parent / "data"

T = read_input(data / "matching_tree.ug", Graph)
cx, htype, _ = analyze("match", T)
print(format_complex(cx), end="")
# a 4-cycle of matchings plus the lone edge {c,d}
print("matching complex:", htype)
print("same as Ind of the line graph:", cx == independence_complex(line_dual(T)))

X = read_input(data / "intervals.iv", IntervalSet)
cx, htype, trace = analyze("interval", X)
print("interval complex facets:", [sorted(f) for f in cx.sorted_facets()])
print("interval complex:", htype)
print("same as Ind of the overlap graph:", cx == independence_complex(interval_overlap_graph(X)))
