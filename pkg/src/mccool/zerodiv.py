"""The tensor square A⊗A, zero divisors, and cup-length certificates.

A tensor element is a dict ``{(left, right): coefficient}`` where both sides
are basis monomials of the quotient. Multiplication uses

    (u1 ⊗ v1)(u2 ⊗ v2) = (-1)^{|v1||u2|} u1 u2 ⊗ v1 v2

and reduces each side to normal form immediately.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .algebra import (
    FULL,
    PLUS,
    UNIT,
    Element,
    GradedBasis,
    Monomial,
    Pair,
    QuadraticPresentation,
    mono_mul,
    monomial_to_json,
    normal_form,
    sort_with_sign,
)
from .linalg import Scalar, _clean, axpy, fmt_scalar

TensorKey = Tuple[Monomial, Monomial]
TensorElement = Dict[TensorKey, Scalar]


def _acc(out: dict, key, w: Scalar) -> None:
    v = out.get(key, 0) + w
    if v:
        out[key] = _clean(v)
    else:
        out.pop(key, None)


def tensor(a: Element, b: Element) -> TensorElement:
    """The pure tensor a ⊗ b (inputs assumed in normal form)."""
    out: TensorElement = {}
    for u, c in a.items():
        for v, d in b.items():
            _acc(out, (u, v), c * d)
    return out


def tensor_multiply(s: TensorElement, t: TensorElement, basis: GradedBasis) -> TensorElement:
    out: TensorElement = {}
    cache: Dict[Tuple[Monomial, Monomial], Element] = {}

    def mul(x: Monomial, y: Monomial) -> Element:
        key = (x, y)
        r = cache.get(key)
        if r is None:
            sg, m = mono_mul(x, y)
            r = {} if not sg else {k: sg * c for k, c in basis.reduce_monomial(m).items()}
            cache[key] = r
        return r

    for (u1, v1), c1 in s.items():
        for (u2, v2), c2 in t.items():
            left = mul(u1, u2)
            if not left:
                continue
            right = mul(v1, v2)
            if not right:
                continue
            c = c1 * c2
            if (len(v1) * len(u2)) & 1:
                c = -c
            for lu, lc in left.items():
                for rv, rc in right.items():
                    _acc(out, (lu, rv), c * lc * rc)
    return out


def tensor_product(factors: Sequence[TensorElement], basis: GradedBasis) -> TensorElement:
    out: TensorElement = {(UNIT, UNIT): 1}
    for f in factors:
        out = tensor_multiply(out, f, basis)
        if not out:
            break
    return out


def bar(a: Element) -> TensorElement:
    """a ⊗ 1 - 1 ⊗ a."""
    out: TensorElement = {}
    for m, c in a.items():
        _acc(out, (m, UNIT), c)
        _acc(out, (UNIT, m), -c)
    return out


def mu(t: TensorElement, basis: GradedBasis) -> Element:
    """Multiplication map A⊗A -> A."""
    out: Element = {}
    for (u, v), c in t.items():
        sg, m = mono_mul(u, v)
        if sg:
            axpy(out, sg * c, basis.reduce_monomial(m))
    return out


def bidegrees(t: TensorElement) -> List[Tuple[int, int]]:
    return sorted({(len(u), len(v)) for u, v in t})


def tensor_to_json(t: TensorElement) -> List[list]:
    return [[monomial_to_json(u), monomial_to_json(v), fmt_scalar(c)] for (u, v), c in sorted(t.items())]


def total_degree_vanishes(basis: GradedBasis, d: int) -> bool:
    """True iff (A⊗A)^d = 0, i.e. every product of d degree-one elements dies."""
    return all(basis.dim(p) * basis.dim(d - p) == 0 for p in range(d + 1))


# -------------------------------------------------------------- certificates


@dataclass
class ZeroDivisorCertificate:
    name: str
    n: int
    variant: str
    factor_labels: List[str]
    factors: List[TensorElement] = field(repr=False)
    product: TensorElement = field(repr=False)
    witness: Optional[TensorKey] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    extra: dict = field(default_factory=dict)
    exhausted: bool = False

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def nonzero(self) -> bool:
        return bool(self.product)

    @property
    def witness_coefficient(self) -> Scalar:
        if self.witness is None:
            return 0
        return self.product.get(self.witness, 0)

    @property
    def passed(self) -> bool:
        return self.nonzero and all(self.checks.values())

    def to_dict(self, include_product: bool = False) -> dict:
        d = {
            "certificate": self.name,
            "n": self.n,
            "variant": self.variant,
            "length": self.length,
            "factors": self.factor_labels,
            "nonzero": self.nonzero,
            "terms": len(self.product),
            "bidegrees": [list(b) for b in bidegrees(self.product)],
            "witness": None if self.witness is None else [monomial_to_json(self.witness[0]),
                                                          monomial_to_json(self.witness[1])],
            "coefficient": fmt_scalar(self.witness_coefficient),
            "checks": dict(sorted(self.checks.items())),
            "pass": self.passed,
        }
        if self.exhausted:
            d["budget_exhausted"] = True
        d.update(self.extra)
        if include_product:
            d["product"] = tensor_to_json(self.product)
        return d


def _gen(i: int, j: int) -> Element:
    return {((i, j),): 1}


def _in_kernel(factors: Sequence[TensorElement], basis: GradedBasis) -> bool:
    return all(not mu(f, basis) for f in factors)


def _kill_cyclic_pairs(m: Monomial, pairs: Sequence[Tuple[Pair, Pair]]) -> bool:
    s = set(m)
    return any(x in s and y in s for x, y in pairs)


def _raw_tensor_expand(factors: Sequence[TensorElement], dead: Callable[[Monomial], bool]) -> TensorElement:
    """Expand in E⊗E, dropping monomials flagged ``dead`` (a monomial ideal)."""
    out: TensorElement = {(UNIT, UNIT): 1}
    for f in factors:
        nxt: TensorElement = {}
        for (u1, v1), c1 in out.items():
            for (u2, v2), c2 in f.items():
                s1, u = mono_mul(u1, u2)
                if not s1 or dead(u):
                    continue
                s2, v = mono_mul(v1, v2)
                if not s2 or dead(v):
                    continue
                c = s1 * s2 * c1 * c2
                if (len(v1) * len(u2)) & 1:
                    c = -c
                _acc(nxt, (u, v), c)
        out = nxt
    return out


def subset_expansion_M(n: int) -> TensorElement:
    """Σ_I (-1)^{|I|} ε_I U_I ⊗ V_I with every sign computed by sorting.

    ε_I collects the reordering of x̄_1..x̄_{n-1} ȳ_1..ȳ_{n-1} into
    pairs x̄_i ȳ_i and of the pure-tensor product into (z_1..z_{n-1}) ⊗
    (ẑ_1..ẑ_{n-1}); nothing here goes through tensor multiplication.
    """
    k = n - 1
    # sign of interleaving x1..xk y1..yk -> x1 y1 x2 y2 ...
    seq = [("x", i) for i in range(k)] + [("y", i) for i in range(k)]
    target = [t for i in range(k) for t in (("x", i), ("y", i))]
    pos = {t: p for p, t in enumerate(target)}
    s0, _ = sort_with_sign([(pos[t], 0) for t in seq])
    # sign of moving the right halves past the left halves: k(k-1)/2 swaps
    s1 = -1 if (k * (k - 1) // 2) & 1 else 1
    out: TensorElement = {}
    for r in range(k + 1):
        for I in itertools.combinations(range(1, n), r):
            z = [(i, i + 1) if i in I else (i + 1, i) for i in range(1, n)]
            zh = [(i + 1, i) if i in I else (i, i + 1) for i in range(1, n)]
            su, u = sort_with_sign(z)
            sv, v = sort_with_sign(zh)
            # x̄ȳ = y⊗x - x⊗y: choosing x⊗y (i in I) contributes -1
            _acc(out, (u, v), s0 * s1 * su * sv * (-1) ** r)
    return out


def certificate_M(basis: GradedBasis) -> ZeroDivisorCertificate:
    if basis.variant != FULL:
        raise ValueError("certificate M lives in the full variant")
    n = basis.n
    xs = [bar(_gen(i, i + 1)) for i in range(1, n)]
    ys = [bar(_gen(i + 1, i)) for i in range(1, n)]
    factors = xs + ys
    labels = [f"bar(a{i},{i + 1})" for i in range(1, n)] + [f"bar(a{i + 1},{i})" for i in range(1, n)]
    prod = tensor_product(factors, basis)

    _, u0 = sort_with_sign([(i + 1, i) for i in range(n - 1, 0, -1)])
    _, v0 = sort_with_sign([(i, i + 1) for i in range(1, n)])
    witness = (u0, v0)

    cyclic = [((i, i + 1), (i + 1, i)) for i in range(1, n)]
    raw = _raw_tensor_expand(factors, lambda m: _kill_cyclic_pairs(m, cyclic))
    subset = subset_expansion_M(n)
    subset_nf: TensorElement = {}
    for (u, v), c in subset.items():
        for lu, lc in basis.reduce_monomial(u).items():
            for rv, rc in basis.reduce_monomial(v).items():
                _acc(subset_nf, (lu, rv), c * lc * rc)

    checks = {
        "factors_in_kernel": _in_kernel(factors, basis),
        "witness_is_basis": basis.is_basis_monomial(u0) and basis.is_basis_monomial(v0),
        "witness_unit_coefficient": prod.get(witness, 0) in (1, -1),
        "bidegree": bidegrees(prod) == [(n - 1, n - 1)],
        "subset_expansion_raw": raw == subset,
        "subset_expansion_reduced": subset_nf == prod,
        "total_degree_2n-1_vanishes": total_degree_vanishes(basis, 2 * n - 1),
    }
    return ZeroDivisorCertificate("M", n, FULL, labels, factors, prod, witness, checks)


def survive_shape(n: int, key: TensorKey) -> bool:
    """a_{1,i1}..a_{n-2,i_{n-2}} a_{n-1,n} ⊗ a_{1,j1}.. a_{n-1,n}, {i_p, j_p} = {n-1, n}."""
    u, v = key
    if len(u) != n - 1 or len(v) != n - 1:
        return False
    for p in range(1, n - 1):
        (a, ip), (b, jp) = u[p - 1], v[p - 1]
        if a != p or b != p or {ip, jp} != {n - 1, n}:
            return False
    return u[-1] == (n - 1, n) and v[-1] == (n - 1, n)


def certificate_N(basis: GradedBasis) -> ZeroDivisorCertificate:
    if basis.variant != PLUS:
        raise ValueError("certificate N lives in the plus variant")
    n = basis.n
    factors: List[TensorElement] = []
    labels: List[str] = []
    for i in range(1, n - 1):
        for j in (n - 1, n):
            factors.append(bar(_gen(i, j)))
            labels.append(f"bar(a{i},{j})")
    top = tensor(_gen(n - 1, n), _gen(n - 1, n))
    factors.append(top)
    labels.append(f"a{n - 1},{n} (x) a{n - 1},{n}")
    prod = tensor_product(factors, basis)
    shaped = sorted(k for k in prod if survive_shape(n, k))
    checks = {
        "factors_in_kernel": _in_kernel(factors, basis),
        "pure_factor_in_kernel": not mu(top, basis),
        "survivor_present": bool(shaped),
        "all_survivors_present": len(shaped) == 2 ** (n - 2),
        "bidegree": bidegrees(prod) == [(n - 1, n - 1)],
    }
    witness = shaped[0] if shaped else None
    return ZeroDivisorCertificate("N", n, PLUS, labels, factors, prod, witness, checks,
                                  extra={"survivors": len(shaped)})


# ---------------------------------------------------------------- searches


def cup_length(basis: GradedBasis) -> int:
    """Longest nonzero product of degree-one generators (depth-first)."""
    gens = [((g,), 1) for g in basis.pres.generators]
    best = 0

    def dfs(start: int, cur: Element, depth: int) -> None:
        nonlocal best
        best = max(best, depth)
        for k in range(start, len(gens)):
            (g,), _ = gens[k]
            nxt = normal_form(_mul_gen(cur, g), basis)
            if nxt:
                dfs(k + 1, nxt, depth + 1)

    dfs(0, {UNIT: 1}, 0)
    return best


def _mul_gen(e: Element, g: Pair) -> Element:
    out: Element = {}
    for m, c in e.items():
        s, mm = mono_mul(m, (g,))
        if s:
            _acc(out, mm, s * c)
    return out


def zcl_candidates(pres: QuadraticPresentation) -> List[Tuple[str, TensorElement]]:
    out = []
    for i, j in pres.generators:
        out.append((f"bar(a{i},{j})", bar(_gen(i, j))))
    for i, j in pres.generators:
        out.append((f"a{i},{j} (x) a{i},{j}", tensor(_gen(i, j), _gen(i, j))))
    return out


def zcl_search(basis: GradedBasis, budget: int = 100_000) -> ZeroDivisorCertificate:
    """Best nonzero product of candidate zero divisors within ``budget`` steps.

    Degree-one candidates anticommute, so only subsets in candidate order are
    explored. The result is a lower bound for zcl and nothing more.
    """
    cands = zcl_candidates(basis.pres)
    ceiling = 2 * basis.top_degree
    best: List[int] = []
    steps = 0
    exhausted = False

    def dfs(start: int, cur: TensorElement, chosen: List[int]) -> bool:
        nonlocal best, steps, exhausted
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= ceiling:
            return True
        for k in range(start, len(cands)):
            steps += 1
            if steps > budget:
                exhausted = True
                return True
            nxt = tensor_multiply(cur, cands[k][1], basis)
            if nxt and dfs(k + 1, nxt, chosen + [k]):
                return True
        return False

    dfs(0, {(UNIT, UNIT): 1}, [])
    factors = [cands[k][1] for k in best]
    prod = tensor_product(factors, basis)
    witness = min(prod) if prod else None
    checks = {"factors_in_kernel": _in_kernel(factors, basis)}
    return ZeroDivisorCertificate("search", basis.n, basis.variant, [cands[k][0] for k in best],
                                  factors, prod, witness, checks, exhausted=exhausted,
                                  extra={"steps": min(steps, budget), "lower_bound_only": True})
