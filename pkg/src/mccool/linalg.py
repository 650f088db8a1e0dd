"""Sparse exact linear algebra over the rationals.

Vectors are dicts ``{column: coefficient}`` with no zero entries. Coefficients
are ints whenever possible and :class:`fractions.Fraction` otherwise, so the
common case of unimodular relations never leaves integer arithmetic.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Union

Scalar = Union[int, Fraction]
Vector = Dict[int, Scalar]


def _clean(x: Scalar) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _div(a: Scalar, b: Scalar) -> Scalar:
    if b == 1:
        return a
    if b == -1:
        return -a
    return _clean(Fraction(a) / b)


def axpy(y: Vector, a: Scalar, x: Vector) -> None:
    """In place ``y += a*x``."""
    for c, v in x.items():
        w = y.get(c, 0) + a * v
        if w:
            y[c] = _clean(w)
        else:
            y.pop(c, None)


def scale(x: Vector, a: Scalar) -> Vector:
    if not a:
        return {}
    return {c: _clean(a * v) for c, v in x.items()}


class Echelon:
    """Incrementally built row echelon form.

    Each stored row is normalized so that its smallest column (the pivot) has
    coefficient 1. Rows are not inter-reduced until :meth:`to_rref` is called.
    """

    def __init__(self) -> None:
        self.rows: Dict[int, Vector] = {}
        self._reduced = False

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def reduce(self, vec: Vector) -> Vector:
        """Return ``vec`` with every pivot column eliminated (a copy)."""
        v = dict(vec)
        heap = list(v)
        heapq.heapify(heap)
        seen = set()
        rows = self.rows
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = v.get(c)
            if not a:
                continue
            row = rows.get(c)
            if row is None:
                continue
            for cc, x in row.items():
                w = v.get(cc, 0) - a * x
                if w:
                    v[cc] = _clean(w)
                else:
                    v.pop(cc, None)
                if cc not in seen:
                    heapq.heappush(heap, cc)
        return v

    def add(self, vec: Vector) -> Optional[int]:
        """Insert ``vec``; return its new pivot column or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        lead = v[p]
        if lead != 1:
            v = {c: _div(x, lead) for c, x in v.items()}
        self.rows[p] = v
        self._reduced = False
        return p

    def extend(self, vecs: Iterable[Vector]) -> int:
        n = 0
        for v in vecs:
            if self.add(v) is not None:
                n += 1
        return n

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)

    def to_rref(self) -> "Echelon":
        """Back-substitute in place so that no row touches another's pivot."""
        if self._reduced:
            return self
        rows = self.rows
        for p in sorted(rows, reverse=True):
            row = rows[p]
            hits = [c for c in row if c != p and c in rows]
            if not hits:
                continue
            for c in sorted(hits):
                a = row.get(c)
                if a:
                    axpy(row, -a, rows[c])
        self._reduced = True
        return self


def rank(vecs: Iterable[Vector]) -> int:
    e = Echelon()
    return e.extend(vecs)


def row_space_basis(vecs: Iterable[Vector]) -> List[Vector]:
    e = Echelon()
    e.extend(vecs)
    e.to_rref()
    return [e.rows[p] for p in e.pivots()]


def nullspace(vecs: List[Vector], ncols: int) -> List[Vector]:
    """Basis of ``{x : <v, x> = 0 for all v in vecs}`` in ``Q^ncols``."""
    e = Echelon()
    e.extend(vecs)
    e.to_rref()
    basis = []
    pivots = e.rows
    for f in range(ncols):
        if f in pivots:
            continue
        x: Vector = {f: 1}
        for p, row in pivots.items():
            a = row.get(f)
            if a:
                x[p] = _clean(-a)
        basis.append(x)
    return basis


def intersect(u: List[Vector], w_annihilator: List[Vector]) -> List[Vector]:
    """Basis of ``span(u) ∩ {x : <c, x> = 0 for c in w_annihilator}``.

    ``u`` must be linearly independent. Solves for the coefficient vectors
    ``λ`` with ``Σ λ_k <c, u_k> = 0`` and maps them back.
    """
    if not u:
        return []
    # column k of the constraint matrix is the pairing of every c with u_k
    by_col: Dict[int, List[int]] = {}
    for k, vec in enumerate(u):
        for c in vec:
            by_col.setdefault(c, []).append(k)
    constraints: List[Vector] = []
    for cvec in w_annihilator:
        row: Vector = {}
        for c, a in cvec.items():
            for k in by_col.get(c, ()):
                w = row.get(k, 0) + a * u[k][c]
                if w:
                    row[k] = _clean(w)
                else:
                    row.pop(k, None)
        if row:
            constraints.append(row)
    out = []
    for lam in nullspace(constraints, len(u)):
        x: Vector = {}
        for k, a in lam.items():
            axpy(x, a, u[k])
        out.append(x)
    return out


def fmt_scalar(x: Scalar) -> str:
    """Serialize a rational as ``"p/q"`` (``"p"`` when integral)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(s: str) -> Scalar:
    return _clean(Fraction(s))
