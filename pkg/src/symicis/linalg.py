"""Exact sparse row reduction over the rationals.

Vectors are dicts ``{column: Fraction}`` with integer columns.  Each stored
row has its pivot at its largest column, so reducing a vector only ever
introduces smaller columns and the remainder is the unique representative
of the vector modulo the row space that has no entries in pivot columns.
"""

import heapq
from fractions import Fraction


def _axpy(target, row, factor):
    # target -= factor * row, in place
    for col, v in row.items():
        nv = target.get(col, 0) - factor * v
        if nv:
            target[col] = nv
        else:
            target.pop(col, None)


class Echelon:
    """Incrementally built row echelon form with optional coordinate tags.

    A tag is a sparse vector recording which combination of tagged inputs a
    row came from; reducing a vector returns the tag of what was subtracted.
    """

    def __init__(self):
        self.rows = {}
        self.tags = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec):
        """Return ``(remainder, combo)``.

        ``vec == remainder + sum(combo[k] * input_k)`` modulo untagged rows,
        where ``input_k`` are the tagged vectors passed to ``add``.
        """
        vec = {c: Fraction(v) for c, v in vec.items() if v}
        combo = {}
        heap = [-c for c in vec if c in self.rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            col = -heapq.heappop(heap)
            if col in seen:
                continue
            seen.add(col)
            factor = vec.get(col)
            if not factor:
                continue
            row = self.rows[col]
            for c in row:
                if c != col and c in self.rows and c not in vec:
                    heapq.heappush(heap, -c)
            _axpy(vec, row, factor)
            rtag = self.tags.get(col)
            if rtag:
                for k, v in rtag.items():
                    nv = combo.get(k, 0) + factor * v
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        return vec, combo

    def add(self, vec, tag=None):
        """Insert ``vec``; return True when it enlarged the row space."""
        rem, combo = self.reduce(vec)
        if not rem:
            return False
        rtag = dict(tag) if tag else {}
        for k, v in combo.items():
            nv = rtag.get(k, 0) - v
            if nv:
                rtag[k] = nv
            else:
                rtag.pop(k, None)
        pivot = max(rem)
        scale = 1 / rem[pivot]
        self.rows[pivot] = {c: v * scale for c, v in rem.items()}
        self.tags[pivot] = {k: v * scale for k, v in rtag.items()}
        return True

    def contains(self, vec):
        rem, _ = self.reduce(vec)
        return not rem

    def copy(self):
        out = Echelon()
        out.rows = dict(self.rows)
        out.tags = dict(self.tags)
        return out


def rank(vectors):
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for every row}`` over columns ``0..ncols-1``.

    Basis vectors are returned in order of their free column, each with a 1
    in that column.
    """
    ech = Echelon()
    for r in rows:
        ech.add(r)
    # back-substitute into reduced row echelon form
    reduced = {}
    for p in sorted(ech.rows):
        row = dict(ech.rows[p])
        for q in sorted((c for c in row if c != p and c in reduced), reverse=True):
            f = row.get(q)
            if f:
                _axpy(row, reduced[q], f)
        reduced[p] = row
    pivots = set(reduced)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = {free: Fraction(1)}
        for p, row in reduced.items():
            v = row.get(free)
            if v:
                vec[p] = -v
        basis.append(vec)
    return basis


def dense_rank(matrix):
    return rank({j: Fraction(v) for j, v in enumerate(r) if v} for r in matrix)
