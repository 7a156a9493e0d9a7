"""Reduced integral simplicial homology, used as an independent check.

Everything is exact Python-int arithmetic.  The boundary matrices come from
the augmented chain complex, so ``{∅}`` has reduced Betti number 1 in degree
-1 while the empty complex has none at all.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import ResourceError
from .simplicial import EMPTY_FACE, SimplicialComplex, enumerate_faces

#: Default ceiling on the total number of faces fed to the oracle.
FACE_CUTOFF = 2**16


@dataclass
class IntegerMatrix:
    """Sparse integer matrix stored as ``{row: {col: value}}`` without zeros."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    @classmethod
    def from_dense(cls, dense) -> "IntegerMatrix":
        dense = [list(map(int, r)) for r in dense]
        cols = len(dense[0]) if dense else 0
        entries = {
            i: {j: v for j, v in enumerate(r) if v} for i, r in enumerate(dense)
        }
        return cls(len(dense), cols, {i: r for i, r in entries.items() if r})

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, r in self.entries.items():
            for j, v in r.items():
                out[i][j] = v
        return out

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = {}
        for i, r in self.entries.items():
            acc = {}
            for k, v in r.items():
                for j, w in other.entries.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + v * w
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        return IntegerMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not self.entries


def boundary_matrix(cx: SimplicialComplex, k: int) -> IntegerMatrix:
    """∂_k : C_k -> C_{k-1} in the sorted face bases.

    Column σ has entry (-1)^j in the row of σ minus its j-th smallest label.
    For k = 0 the target is spanned by the empty face (augmentation).
    """
    if k < 0:
        raise ValueError("boundary_matrix needs k >= 0")
    sources = enumerate_faces(cx, k)
    targets = enumerate_faces(cx, k - 1)
    index = {f: i for i, f in enumerate(targets)}
    entries = {}
    for j, sigma in enumerate(sources):
        for pos, x in enumerate(sorted(sigma)):
            row = index[sigma - {x}]
            entries.setdefault(row, {})[j] = -1 if pos % 2 else 1
    return IntegerMatrix(len(targets), len(sources), entries)


# ---------------------------------------------------------------------------
# Smith normal form


def _dense_invariant_factors(a: list) -> list:
    """Classic elimination with Euclidean steps on a small dense matrix."""
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    factors = []
    t = 0
    while t < min(m, n):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        clean = False
            if clean:
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, pi, pj = min(cands)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def smith_normal_form(matrix) -> tuple:
    """Rank and invariant factors d1 | d2 | ... of an integer matrix.

    Unit pivots are eliminated sparsely first (boundary matrices are almost
    entirely resolved this way); whatever is left goes through a dense
    Euclidean reduction.
    """
    if not isinstance(matrix, IntegerMatrix):
        matrix = IntegerMatrix.from_dense(matrix)
    rows = {i: dict(r) for i, r in matrix.entries.items() if r}
    cols = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)

    units = 0
    while True:
        pivot = None
        for i in sorted(rows, key=lambda i: len(rows[i])):
            j = next((j for j, v in rows[i].items() if v in (1, -1)), None)
            if j is not None:
                pivot = (i, j)
                break
        if pivot is None:
            break
        pi, pj = pivot
        prow = rows.pop(pi)
        for j in prow:
            cols[j].discard(pi)
        p = prow[pj]
        for i in list(cols.get(pj, ())):
            r = rows[i]
            q = r[pj] * p  # p = ±1, so r[pj]/p == r[pj]*p
            for j, v in prow.items():
                nv = r.get(j, 0) - q * v
                if nv:
                    if j not in r:
                        cols.setdefault(j, set()).add(i)
                    r[j] = nv
                elif j in r:
                    del r[j]
                    cols[j].discard(i)
            if not r:
                del rows[i]
        # the pivot row's other entries are cleared by column operations that
        # touch no surviving row, since every surviving row is now 0 in column pj
        for j in prow:
            if not cols.get(j):
                cols.pop(j, None)
        units += 1

    rest = []
    if rows:
        col_ids = sorted({j for r in rows.values() for j in r})
        pos = {j: k for k, j in enumerate(col_ids)}
        for r in rows.values():
            dense = [0] * len(col_ids)
            for j, v in r.items():
                dense[pos[j]] = v
            rest.append(dense)
    factors = [1] * units + _normalize_chain(_dense_invariant_factors(rest))
    return len(factors), factors


def _normalize_chain(factors: list) -> list:
    """Turn any diagonal into the divisibility-ordered invariant factors."""
    d = [abs(x) for x in factors if x]
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
    return sorted(d)


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyProfile:
    """Nonzero reduced Betti numbers and torsion coefficients, keyed by degree."""

    reduced_betti: dict
    torsion: dict

    def betti(self, k: int) -> int:
        return self.reduced_betti.get(k, 0)

    def torsion_present(self, k: int = None) -> bool:
        if k is None:
            return bool(self.torsion)
        return bool(self.torsion.get(k))

    def is_acyclic(self) -> bool:
        return not self.reduced_betti and not self.torsion


def reduced_homology(cx: SimplicialComplex, cutoff: int = FACE_CUTOFF) -> HomologyProfile:
    if cx.is_empty():
        return HomologyProfile({}, {})
    top = cx.dimension
    counts = {k: len(enumerate_faces(cx, k)) for k in range(-1, top + 1)}
    if sum(counts.values()) > cutoff:
        raise ResourceError(f"{sum(counts.values())} faces exceeds homology cutoff {cutoff}")

    ranks = {-1: 0, top + 1: 0}
    factors = {top + 1: []}
    for k in range(0, top + 1):
        ranks[k], factors[k] = smith_normal_form(boundary_matrix(cx, k))

    betti, torsion = {}, {}
    for k in range(-1, top + 1):
        b = counts[k] - ranks[k] - ranks[k + 1]
        if b:
            betti[k] = b
        tors = [d for d in factors[k + 1] if d > 1]
        if tors:
            torsion[k] = tors
    return HomologyProfile(betti, torsion)


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Σ (-1)^k f_k over nonempty faces."""
    return sum(
        (-1) ** (len(f) - 1) for f in cx.faces() if f != EMPTY_FACE
    )


def verify(cx: SimplicialComplex, htype, cutoff: int = FACE_CUTOFF) -> bool:
    """Does the homology of ``cx`` match the wedge of spheres ``htype``?"""
    profile = reduced_homology(cx, cutoff)
    if profile.torsion:
        return False
    expected = {}
    for d in htype.dims:
        expected[d] = expected.get(d, 0) + 1
    return profile.reduced_betti == expected

