"""Quadratic-dual Hilbert series and the free-module decomposition of A_n.

The graded-commutative quotient is lifted to T(V)/(R) with R spanned by the
symmetrizers g⊗h + h⊗g, the squares g⊗g and one lift of every relation. The
dual satisfies dim A^!_k = dim ∩_i V^{⊗i} ⊗ R ⊗ V^{⊗(k-2-i)}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .algebra import (
    PLUS,
    CapacityError,
    Element,
    GradedBasis,
    Monomial,
    QuadraticPresentation,
    compute_graded_basis,
    ext_mul,
    normal_form,
    presentation,
)
from .linalg import Vector, intersect, nullspace, rank, row_space_basis

# Default bound on dim(V)^D for the dual computation.
DUAL_CAPACITY = 25000


@dataclass
class NoncommQuadraticData:
    generators: List[tuple]
    relations: List[Vector] = field(repr=False)  # RREF rows in V⊗V, index a*m + b

    @property
    def dim_v(self) -> int:
        return len(self.generators)

    @property
    def dim_r(self) -> int:
        return len(self.relations)

    @property
    def dim_a2(self) -> int:
        return self.dim_v ** 2 - self.dim_r


def noncomm_lift(pres: QuadraticPresentation) -> NoncommQuadraticData:
    gens = list(pres.generators)
    m = len(gens)
    pos = {g: k for k, g in enumerate(gens)}
    span: List[Vector] = []
    for a in range(m):
        span.append({a * m + a: 1})
        for b in range(a + 1, m):
            span.append({a * m + b: 1, b * m + a: 1})
    for r in pres.relations:
        vec: Vector = {}
        for (x, y), c in r.items():
            vec[pos[x] * m + pos[y]] = c
        span.append(vec)
    return NoncommQuadraticData(gens, row_space_basis(span))


def _tensor_rows(left: int, rows: Sequence[Vector], right: int, m: int, width: int) -> List[Vector]:
    """Embed ``V^{⊗left} ⊗ rows ⊗ V^{⊗right}`` (rows live in V^{⊗width})."""
    out = []
    shift = m ** (width + right)
    rshift = m ** right
    for u in range(m ** left):
        for w in range(rshift):
            base = u * shift + w
            for r in rows:
                out.append({base + c * rshift: x for c, x in r.items()})
    return out


@dataclass
class DualHilbert:
    coefficients: List[int]
    dim_r: int
    dim_r_perp: int
    dim_v: int

    @property
    def complement_ok(self) -> bool:
        return self.dim_r + self.dim_r_perp == self.dim_v ** 2


def _check_dual_capacity(m: int, D: int, capacity: Optional[int]) -> None:
    limit = DUAL_CAPACITY if capacity is None else capacity
    if m ** D > limit:
        raise CapacityError(f"dual computation needs dim(V)^D = {m ** D} > {limit}")


def quadratic_dual_hilbert(d: NoncommQuadraticData, D: int, capacity: Optional[int] = None) -> DualHilbert:
    """dim A^!_k for k <= D by iterated exact intersection."""
    if D < 2:
        raise ValueError("D must be at least 2")
    m = d.dim_v
    _check_dual_capacity(m, D, capacity)
    r_perp = nullspace(d.relations, m * m)
    coeffs = [1, m]
    for k in range(2, D + 1):
        current = _tensor_rows(0, d.relations, k - 2, m, 2)
        for i in range(1, k - 1):
            if not current:
                break
            current = intersect(current, _tensor_rows(i, r_perp, k - 2 - i, m, 2))
        coeffs.append(len(current))
    return DualHilbert(coeffs, d.dim_r, len(r_perp), m)


def dual_hilbert_by_quotient(d: NoncommQuadraticData, D: int, capacity: Optional[int] = None) -> List[int]:
    """dim of T(V*)/(R^⊥) per degree; an independent route to the same series."""
    m = d.dim_v
    _check_dual_capacity(m, D, capacity)
    r_perp = nullspace(d.relations, m * m)
    coeffs = [1, m]
    for k in range(2, D + 1):
        vecs = []
        for i in range(k - 1):
            vecs.extend(_tensor_rows(i, r_perp, k - 2 - i, m, 2))
        coeffs.append(m ** k - rank(vecs))
    return coeffs


@dataclass
class KoszulReport:
    n: int
    variant: str
    D: int
    hilbert: List[int]
    dual: List[int]
    degrees: List[dict]
    lift_consistent: bool
    complement_ok: bool

    @property
    def passed(self) -> bool:
        return self.lift_consistent and self.complement_ok and all(r["pass"] for r in self.degrees)

    def to_dict(self) -> dict:
        return {
            "check": "koszul-consistency",
            "n": self.n,
            "variant": self.variant,
            "max_degree": self.D,
            "hilbert": self.hilbert,
            "dual_hilbert": self.dual,
            "lift_consistent": self.lift_consistent,
            "complement_ok": self.complement_ok,
            "degrees": self.degrees,
            "pass": self.passed,
            "caveat": f"numerical necessary condition only; consistent up to degree {self.D}, not a proof",
        }


def koszul_consistency_test(pres: QuadraticPresentation, D: int = 4, basis: Optional[GradedBasis] = None,
                            capacity: Optional[int] = None) -> KoszulReport:
    """Check P_A(t) P_{A^!}(-t) = 1 mod t^{D+1}."""
    if basis is None:
        basis = compute_graded_basis(pres)
    lift = noncomm_lift(pres)
    dual = quadratic_dual_hilbert(lift, D, capacity)
    hilb = [basis.dim(q) for q in range(D + 1)]
    rows = []
    for k in range(1, D + 1):
        s = sum(hilb[i] * (-1) ** (k - i) * dual.coefficients[k - i] for i in range(k + 1))
        rows.append({"degree": k, "value": s, "pass": s == 0})
    return KoszulReport(pres.n, pres.variant, D, basis.dims(), dual.coefficients, rows,
                        lift.dim_a2 == basis.dim(2), dual.complement_ok)


# ---------------------------------------------------------------- freeness


def shift(e: Element, by: int = 1) -> Element:
    return {tuple((i + by, j + by) for i, j in mono): c for mono, c in e.items()}


def _coords(e: Element, col: Dict[Monomial, int]) -> Vector:
    return {col[m]: c for m, c in e.items()}


@dataclass
class FreenessReport:
    n: int
    relations_preserved: bool
    hilbert_identity: bool
    first_row_identity: bool
    degrees: List[dict]
    quotient_dims: List[int]
    rank_checked: bool

    @property
    def quotient_ok(self) -> bool:
        return self.quotient_dims == [1, self.n - 1] + [0] * (len(self.quotient_dims) - 2)

    @property
    def passed(self) -> bool:
        ok = self.relations_preserved and self.hilbert_identity and self.first_row_identity
        if self.rank_checked:
            ok = ok and self.quotient_ok and all(r["pass"] for r in self.degrees)
        return ok

    def to_dict(self) -> dict:
        return {
            "check": "freeness-decomposition",
            "n": self.n,
            "relations_preserved": self.relations_preserved,
            "hilbert_identity": self.hilbert_identity,
            "first_row_identity": self.first_row_identity,
            "rank_checked": self.rank_checked,
            "degrees": self.degrees,
            "quotient_dims": self.quotient_dims,
            "pass": self.passed,
        }


def freeness_decomposition_check(n: int, basis: Optional[GradedBasis] = None,
                                 sub_basis: Optional[GradedBasis] = None,
                                 rank_checks: bool = True) -> FreenessReport:
    """A_n = ⊕_{j} a_{1,j} Ã_{n-1} ⊕ Ã_{n-1} with Ã spanned by a_{i,j}, 2 <= i."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if basis is None:
        basis = compute_graded_basis(presentation(n, PLUS))
    if sub_basis is None:
        sub_basis = compute_graded_basis(presentation(n - 1, PLUS))
    sub_pres = sub_basis.pres

    preserved = all(not normal_form(shift(r), basis) for r in sub_pres.relations)

    big = [basis.dim(q) for q in range(n + 1)]
    small = [sub_basis.dim(q) for q in range(n + 1)]
    expected = [small[q] + (n - 1) * (small[q - 1] if q else 0) for q in range(n + 1)]
    hilbert_ok = big == expected

    first_row = True
    for i, j in itertools.combinations(range(2, n + 1), 2):
        lhs = normal_form(ext_mul({((1, i),): 1}, {((1, j),): 1}), basis)
        rhs = normal_form(ext_mul({((1, i),): 1}, {((i, j),): 1}), basis)
        first_row &= lhs == rhs

    rows: List[dict] = []
    quotient: List[int] = []
    if rank_checks:
        sub_gens = [g for g in basis.pres.generators if g[0] >= 2]
        for q in range(n + 1):
            col = {m: c for c, m in enumerate(basis.basis(q))}
            tilde = [normal_form(shift({b: 1}), basis) for b in sub_basis.basis(q)]
            tilde_rank = rank(_coords(v, col) for v in tilde)
            vecs = list(tilde)
            if q:
                for j in range(2, n + 1):
                    for b in sub_basis.basis(q - 1):
                        vecs.append(normal_form(ext_mul({((1, j),): 1}, shift({b: 1})), basis))
            r = rank(_coords(v, col) for v in vecs)
            good = tilde_rank == small[q] and r == len(vecs) == big[q]
            rows.append({"degree": q, "subalgebra_dim": tilde_rank, "summands": len(vecs),
                         "rank": r, "dim": big[q], "pass": good})
            ideal = []
            if q:
                for b in basis.basis(q - 1):
                    for g in sub_gens:
                        v = normal_form(ext_mul({b: 1}, {(g,): 1}), basis)
                        if v:
                            ideal.append(_coords(v, col))
            quotient.append(big[q] - rank(ideal))
    return FreenessReport(n, preserved, hilbert_ok, first_row, rows, quotient, rank_checks)
