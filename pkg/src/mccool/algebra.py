"""Quadratic exterior quotients E/I (full) and E+/I+ (plus).

Generators are index pairs ``(i, j)``. A monomial is a strictly increasing
tuple of pairs (lexicographic order); an element is a dict
``{monomial: coefficient}`` without zero coefficients.

The authoritative normal form comes from exact row reduction of the degree-q
part of the ideal. A rewriting system mirroring the hand computation is
provided as a fast path and is checked against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .linalg import Echelon, Scalar, _clean, axpy

Pair = Tuple[int, int]
Monomial = Tuple[Pair, ...]
Element = Dict[Monomial, Scalar]

FULL = "full"
PLUS = "plus"
VARIANTS = (FULL, PLUS)

# Largest n handled without an explicit override.
CAPACITY = {FULL: 5, PLUS: 6}

UNIT: Monomial = ()


class CapacityError(RuntimeError):
    """Raised instead of attempting work outside the supported size tier."""


class RewriteBudgetExceeded(RuntimeError):
    pass


def check_capacity(n: int, variant: str, capacity: Optional[int] = None) -> None:
    limit = CAPACITY[variant] if capacity is None else capacity
    if n > limit:
        raise CapacityError(f"{variant} variant at n={n} exceeds capacity tier n<={limit}")


# ---------------------------------------------------------------- monomials


def sort_with_sign(factors: Sequence[Pair]) -> Tuple[int, Monomial]:
    """Sort an ordered exterior product; return ``(sign, monomial)``.

    The sign is 0 when a factor repeats.
    """
    f = list(factors)
    if len(set(f)) != len(f):
        return 0, UNIT
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(f)):
        b = a
        while b > 0 and f[b - 1] > f[b]:
            f[b - 1], f[b] = f[b], f[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(f)


def mono_mul(m1: Monomial, m2: Monomial) -> Tuple[int, Monomial]:
    if not m1:
        return 1, m2
    if not m2:
        return 1, m1
    s2 = set(m2)
    if any(x in s2 for x in m1):
        return 0, UNIT
    inv = 0
    for x in m1:
        for y in m2:
            if x > y:
                inv += 1
    return (-1 if inv & 1 else 1), tuple(sorted(m1 + m2))


def ext_mul(a: Element, b: Element) -> Element:
    """Product in the exterior algebra (no quotient)."""
    out: Element = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            s, m = mono_mul(m1, m2)
            if s:
                w = out.get(m, 0) + s * c1 * c2
                if w:
                    out[m] = _clean(w)
                else:
                    out.pop(m, None)
    return out


def element(*terms: Tuple[Scalar, Sequence[Pair]]) -> Element:
    """Build an element from ``(coefficient, ordered factors)`` terms."""
    out: Element = {}
    for c, factors in terms:
        s, m = sort_with_sign(factors)
        if s:
            w = out.get(m, 0) + s * c
            if w:
                out[m] = _clean(w)
            else:
                out.pop(m, None)
    return out


def gen(i: int, j: int) -> Element:
    return {((i, j),): 1}


def add(a: Element, b: Element, s: Scalar = 1) -> Element:
    out = dict(a)
    for m, c in b.items():
        w = out.get(m, 0) + s * c
        if w:
            out[m] = _clean(w)
        else:
            out.pop(m, None)
    return out


def degree(e: Element) -> Optional[int]:
    """Common degree of the terms, or None for zero / inhomogeneous."""
    degs = {len(m) for m in e}
    return degs.pop() if len(degs) == 1 else None


def has_cycle(m: Iterable[Pair]) -> bool:
    """True iff the edges ``i -> j`` of the factors contain a directed cycle."""
    adj: Dict[int, List[int]] = {}
    for i, j in m:
        adj.setdefault(i, []).append(j)
    state: Dict[int, int] = {}

    def visit(v: int) -> bool:
        state[v] = 1
        for w in adj.get(v, ()):
            s = state.get(w, 0)
            if s == 1 or (s == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state.get(v, 0) == 0 and visit(v) for v in list(adj))


def distinct_first(m: Iterable[Pair]) -> bool:
    firsts = [i for i, _ in m]
    return len(firsts) == len(set(firsts))


# ------------------------------------------------------------- presentation


@dataclass(frozen=True)
class QuadraticPresentation:
    n: int
    variant: str
    generators: Tuple[Pair, ...]
    relations: Tuple[Element, ...] = field(repr=False)

    @property
    def key(self) -> Tuple[int, str]:
        return (self.n, self.variant)


def presentation(n: int, variant: str = FULL) -> QuadraticPresentation:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if n < 2:
        raise ValueError("n must be at least 2")
    idx = range(1, n + 1)
    rels: List[Element] = []
    if variant == FULL:
        gens = tuple((i, j) for i in idx for j in idx if i != j)
        for i, j in itertools.combinations(idx, 2):
            rels.append(element((1, [(i, j), (j, i)])))
        for i, j, k in itertools.permutations(idx, 3):
            rels.append(element(
                (1, [(k, j), (j, i)]),
                (-1, [(k, j), (k, i)]),
                (1, [(i, j), (k, i)]),
            ))
    else:
        gens = tuple((i, j) for i, j in itertools.combinations(idx, 2))
        for i, j, k in itertools.combinations(idx, 3):
            rels.append(element((1, [(i, j), (i, k)]), (-1, [(i, j), (j, k)])))
    return QuadraticPresentation(n, variant, gens, tuple(rels))


def enumerate_degree_monomials(pres: QuadraticPresentation, q: int) -> List[Monomial]:
    if q < 0:
        return []
    return list(itertools.combinations(pres.generators, q))


def claimed_basis(pres: QuadraticPresentation, q: int) -> List[Monomial]:
    """The combinatorial basis of degree q.

    Full: distinct first indices and no cyclic sub-product. Plus: strictly
    increasing first indices (second indices exceed first automatically).
    """
    if not 0 <= q <= pres.n - 1:
        raise ValueError(f"degree {q} outside 0..{pres.n - 1}")
    out = []
    for m in enumerate_degree_monomials(pres, q):
        if not distinct_first(m):
            continue
        if pres.variant == FULL and has_cycle(m):
            continue
        out.append(m)
    return out


def _claimed_set(pres: QuadraticPresentation, q: int) -> set:
    if q > pres.n - 1:
        return set()
    return set(claimed_basis(pres, q))


# ------------------------------------------------------------------ basis


@dataclass
class DegreePiece:
    """Quotient data in one degree."""

    q: int
    monomials: List[Monomial]
    basis: List[Monomial]
    projection: Dict[Monomial, Element]
    relation_rank: int
    pivot_in_claimed: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)


class GradedBasis:
    """Per-degree quotient bases with the projection onto them.

    ``pieces[q]`` exists for ``0 <= q <= vanishing_degree``; the quotient is
    zero from ``vanishing_degree`` on (the algebra is generated in degree 1).
    """

    def __init__(self, pres: QuadraticPresentation, pieces: List[DegreePiece]):
        self.pres = pres
        self.pieces = pieces
        self._basis_sets = [set(p.basis) for p in pieces]

    @property
    def n(self) -> int:
        return self.pres.n

    @property
    def variant(self) -> str:
        return self.pres.variant

    @property
    def vanishing_degree(self) -> int:
        return len(self.pieces) - 1

    @property
    def top_degree(self) -> int:
        return len(self.pieces) - 2

    def dims(self) -> List[int]:
        return [p.dim for p in self.pieces if p.dim]

    def dim(self, q: int) -> int:
        if q < 0 or q >= len(self.pieces):
            return 0
        return self.pieces[q].dim

    def basis(self, q: int) -> List[Monomial]:
        if q < 0 or q >= len(self.pieces):
            return []
        return list(self.pieces[q].basis)

    def is_basis_monomial(self, m: Monomial) -> bool:
        q = len(m)
        return q < len(self._basis_sets) and m in self._basis_sets[q]

    def reduce_monomial(self, m: Monomial) -> Element:
        q = len(m)
        if q >= len(self.pieces):
            return {}
        if m in self._basis_sets[q]:
            return {m: 1}
        return self.pieces[q].projection.get(m, {})


def compute_graded_basis(pres: QuadraticPresentation, capacity: Optional[int] = None) -> GradedBasis:
    check_capacity(pres.n, pres.variant, capacity)
    pieces: List[DegreePiece] = []
    q = 0
    while True:
        piece = _compute_degree(pres, q)
        pieces.append(piece)
        if piece.dim == 0:
            break
        q += 1
    return GradedBasis(pres, pieces)


def _compute_degree(pres: QuadraticPresentation, q: int) -> DegreePiece:
    monos = enumerate_degree_monomials(pres, q)
    claimed = _claimed_set(pres, q)
    # claimed monomials go last so that they end up as free columns
    order = [m for m in monos if m not in claimed] + [m for m in monos if m in claimed]
    col = {m: c for c, m in enumerate(order)}
    ech = Echelon()
    if q >= 2:
        for r in pres.relations:
            for m in enumerate_degree_monomials(pres, q - 2):
                prod = ext_mul({m: 1}, r)
                if prod:
                    ech.add({col[mm]: c for mm, c in prod.items()})
    ech.to_rref()
    pivots = ech.rows
    first_claimed = len(order) - len(claimed)
    free = set(range(len(order))) - set(pivots)
    basis = sorted(order[c] for c in free)
    projection: Dict[Monomial, Element] = {}
    for p, row in pivots.items():
        projection[order[p]] = {order[c]: _clean(-a) for c, a in row.items() if c != p}
    return DegreePiece(
        q=q,
        monomials=monos,
        basis=basis,
        projection=projection,
        relation_rank=len(pivots),
        pivot_in_claimed=any(p >= first_claimed for p in pivots),
    )


# --------------------------------------------------------- quotient algebra


def normal_form(e: Element, basis: GradedBasis) -> Element:
    out: Element = {}
    for m, c in e.items():
        axpy(out, c, basis.reduce_monomial(m))
    return out


def multiply(a: Element, b: Element, basis: GradedBasis) -> Element:
    return normal_form(ext_mul(a, b), basis)


def product(factors: Iterable[Element], basis: GradedBasis) -> Element:
    out: Element = {UNIT: 1}
    for f in factors:
        out = multiply(out, f, basis)
        if not out:
            break
    return out


def poincare_polynomial(pres_or_basis) -> List[int]:
    basis = pres_or_basis
    if isinstance(pres_or_basis, QuadraticPresentation):
        basis = compute_graded_basis(pres_or_basis)
    return basis.dims()


def closed_form_poincare(n: int, variant: str) -> List[int]:
    """(1+nt)^(n-1) for full, prod_{k<n}(1+kt) for plus."""
    poly = [1]
    factors = [n] * (n - 1) if variant == FULL else list(range(1, n))
    for a in factors:
        nxt = poly + [0]
        for d in range(len(poly)):
            nxt[d + 1] += a * poly[d]
        poly = nxt
    return poly


@dataclass
class BasisReport:
    n: int
    variant: str
    degrees: List[dict]
    passed: bool

    def to_dict(self) -> dict:
        return {"check": "claimed-basis", "n": self.n, "variant": self.variant,
                "pass": self.passed, "degrees": self.degrees}


def verify_claimed_basis(pres: QuadraticPresentation, basis: Optional[GradedBasis] = None) -> BasisReport:
    """Check the combinatorial basis against the computed quotient.

    Independence modulo the relations: the claimed monomials occupy the last
    columns of the reduction, so they are independent modulo the relation
    space exactly when no pivot lands among them.
    """
    if basis is None:
        basis = compute_graded_basis(pres)
    rows = []
    ok = True
    for q in range(pres.n):
        claimed = claimed_basis(pres, q)
        piece = basis.pieces[q] if q < len(basis.pieces) else None
        dim = piece.dim if piece else 0
        independent = piece is not None and not piece.pivot_in_claimed
        good = len(claimed) == dim and independent
        ok &= good
        rows.append({"q": q, "claimed": len(claimed), "dim": dim,
                     "independent": independent, "pass": good})
    return BasisReport(pres.n, pres.variant, rows, ok)


# ----------------------------------------------------------------- rewriting


def _rewrite_step_full(m: Monomial) -> Optional[List[Tuple[int, List[Pair]]]]:
    """One application of a_kj a_ki = a_kj a_ji + a_ij a_ki, or None."""
    seen: Dict[int, int] = {}
    for pos, (k, j) in enumerate(m):
        if k in seen:
            p = seen[k]
            _, jj = m[p]
            i = j
            j = jj
            left = list(m)
            left[pos] = (j, i)
            right = list(m)
            right[p] = (i, j)
            return [(1, left), (1, right)]
        seen[k] = pos
    return None


def _rewrite_step_plus(m: Monomial) -> Optional[List[Tuple[int, List[Pair]]]]:
    """One application of a_ij a_ik -> a_ij a_jk (j < k), or None."""
    seen: Dict[int, int] = {}
    for pos, (i, k) in enumerate(m):
        if i in seen:
            _, j = m[seen[i]]
            out = list(m)
            out[pos] = (j, k)
            return [(1, out)]
        seen[i] = pos
    return None


def rewrite_reduce(e: Element, pres: QuadraticPresentation, budget: int = 1_000_000) -> Element:
    """Reduce ``e`` to the combinatorial basis by directed rewriting.

    Monomials with a cyclic sub-product are dropped (full variant); repeated
    first indices are eliminated one pair at a time.
    """
    step = _rewrite_step_full if pres.variant == FULL else _rewrite_step_plus
    todo: Element = dict(e)
    done: Element = {}
    steps = 0
    while todo:
        m, c = todo.popitem()
        steps += 1
        if steps > budget:
            raise RewriteBudgetExceeded(f"rewriting exceeded {budget} steps")
        if pres.variant == FULL and has_cycle(m):
            continue
        repl = step(m)
        if repl is None:
            w = done.get(m, 0) + c
            if w:
                done[m] = _clean(w)
            else:
                done.pop(m, None)
            continue
        for s, factors in repl:
            sign, mm = sort_with_sign(factors)
            if not sign:
                continue
            w = todo.get(mm, 0) + s * sign * c
            if w:
                todo[mm] = _clean(w)
            else:
                todo.pop(mm, None)
    return done


# ---------------------------------------------------------- serialization


def format_element(e: Element) -> str:
    """Human-readable form, e.g. ``-a13a21 + 2 a23a31``; the unit prints as 1."""
    if not e:
        return "0"
    parts = []
    for m, c in sorted(e.items()):
        word = "".join(f"a{i}{j}" if max(i, j) < 10 else f"a{i},{j}" for i, j in m)
        mag = abs(c)
        if not m:
            term = str(mag)
        else:
            term = word if mag == 1 else f"{mag} {word}"
        parts.append(("-" if c < 0 else "+", term))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return " ".join([head] + [f"{sg} {t}" for sg, t in parts[1:]])


def monomial_to_json(m: Monomial) -> list:
    return [[i, j] for i, j in m]


def monomial_from_json(obj) -> Monomial:
    return tuple((int(i), int(j)) for i, j in obj)


# ------------------------------------------------------- oracle cross-check


def random_element(pres: QuadraticPresentation, rng, q: Optional[int] = None, max_terms: int = 4) -> Element:
    """Random homogeneous element with small rational coefficients."""
    if q is None:
        q = rng.randint(0, min(pres.n, len(pres.generators)))
    out: Element = {}
    for _ in range(rng.randint(1, max_terms)):
        m = tuple(sorted(rng.sample(pres.generators, q)))
        c = Fraction(rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]), rng.randint(1, 4))
        w = out.get(m, 0) + c
        if w:
            out[m] = _clean(w)
        else:
            out.pop(m, None)
    return out


@dataclass
class RewriteReport:
    n: int
    variant: str
    samples: int
    seed: int
    mismatches: List[int]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {"check": "rewrite-oracle", "n": self.n, "variant": self.variant,
                "samples": self.samples, "seed": self.seed,
                "mismatches": len(self.mismatches), "pass": self.passed}


def rewrite_oracle_check(basis: GradedBasis, samples: int = 1000, seed: int = 0) -> RewriteReport:
    """Compare rewriting against the linear-algebra normal form on random input."""
    import random

    rng = random.Random(seed)
    bad = []
    for k in range(samples):
        e = random_element(basis.pres, rng)
        if rewrite_reduce(e, basis.pres) != normal_form(e, basis):
            bad.append(k)
    return RewriteReport(basis.n, basis.variant, samples, seed, bad)
