"""Topological complexity bounds assembled from dimensions and certificates.

Convention: unreduced, so tc(point) = 1 and tc(S^1) = 2.

Upper bounds come from tc <= 2 geomdim + 1 and tc(G x H) <= tc(G) + tc(H) - 1;
lower bounds from tc >= 1 + zcl, where zcl is witnessed by a machine-checked
nonzero product of zero divisors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .algebra import CAPACITY, FULL, PLUS, CapacityError
from .cache import get_basis
from .zerodiv import ZeroDivisorCertificate, certificate_M, certificate_N, zcl_search

FAMILIES = ("full", "plus", "plus_quotient", "free", "integers")
CONVENTION = "unreduced"
TC_CIRCLE = 2

VERIFIED = "machine-verified"
FORMULA = "formula (unverified at this n)"
CITED = "cited"


@dataclass(frozen=True)
class GroupId:
    family: str
    n: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("full", "plus", "plus_quotient") and self.n < 2:
            raise ValueError(f"{self.family} needs n >= 2")
        if self.family == "free" and self.n < 1:
            raise ValueError("free needs n >= 1")

    def __str__(self) -> str:
        names = {"full": "PΣ_{n}", "plus": "PΣ_{n}^+", "plus_quotient": "PΣ_{n}^+/Z",
                 "free": "F_{n}", "integers": "Z"}
        return names[self.family].format(n=self.n)


def dimension(group: GroupId) -> Tuple[int, int]:
    """(cd, geomdim), taken from the known formulas."""
    f, n = group.family, group.n
    if f in ("full", "plus"):
        d = n - 1
    elif f == "plus_quotient":
        d = n - 2
    elif f == "free":
        d = 1
    else:
        d = 1
    return d, d


def _is_circle(group: GroupId) -> bool:
    return group.family == "integers" or (group.family == "free" and group.n == 1) or \
        (group.family == "plus" and group.n == 2)


def tc_upper(group: GroupId) -> Tuple[int, List[str]]:
    trace: List[str] = []
    _, gd = dimension(group)
    dim_bound = 2 * gd + 1
    if group.family in ("integers", "free") and _is_circle(group):
        trace.append(f"tc({group}) = tc(S^1) = {TC_CIRCLE} (cited)")
        return TC_CIRCLE, trace
    trace.append(f"tc({group}) <= 2*geomdim+1 = 2*{gd}+1 = {dim_bound}")
    if group.family != "plus":
        return dim_bound, trace
    q = GroupId("plus_quotient", group.n)
    q_up, q_trace = tc_upper(q)
    prod = q_up + TC_CIRCLE - 1
    trace.extend(q_trace)
    trace.append(f"{group} = {q} x Z, so tc <= tc({q}) + tc(Z) - 1 <= {q_up} + {TC_CIRCLE} - 1 = {prod}")
    best = min(dim_bound, prod)
    route = "product" if prod <= dim_bound else "dimension"
    trace.append(f"upper bound {best} via {route} route")
    return best, trace


@dataclass
class LowerBound:
    value: int
    zcl: int
    provenance: str
    certificate: Optional[ZeroDivisorCertificate] = None
    note: str = ""


def tc_lower(group: GroupId, cache_dir=None, allow_unverified: bool = False,
             capacity: Optional[int] = None) -> LowerBound:
    f, n = group.family, group.n
    if f in ("full", "plus") or (f == "free" and n == 2):
        variant = PLUS if f == "plus" else FULL
        limit = CAPACITY[variant] if capacity is None else capacity
        if n > limit:
            if not allow_unverified:
                raise CapacityError(f"certificate for {group} unavailable beyond n={limit}")
            z = 2 * n - 3 if f == "plus" else 2 * n - 2
            return LowerBound(1 + z, z, FORMULA)
        basis = get_basis(n, variant, cache_dir, capacity)
        cert = certificate_N(basis) if f == "plus" else certificate_M(basis)
        if cert.passed:
            return LowerBound(1 + cert.length, cert.length, VERIFIED, cert)
        fallback = zcl_search(basis)
        return LowerBound(1 + fallback.length, fallback.length, VERIFIED, fallback,
                          note=f"certificate {cert.name} failed; downgraded to search result")
    if _is_circle(group):
        basis = get_basis(2, PLUS, cache_dir)
        cert = zcl_search(basis)
        return LowerBound(1 + cert.length, cert.length, VERIFIED, cert)
    if f == "free":
        return LowerBound(3, 2, FORMULA, note="bar(x1) bar(x2) != 0 in H*(F_n)")
    return LowerBound(1, 0, FORMULA, note="no lower bound attempted beyond the trivial one")


@dataclass
class TCReport:
    group: GroupId
    cd: int
    geomdim: int
    lower: LowerBound
    upper: int
    trace: List[str]
    checks: dict = field(default_factory=dict)
    zcl_exact: Optional[int] = None

    @property
    def tc_lower(self) -> int:
        return self.lower.value

    @property
    def tc_upper(self) -> int:
        return self.upper

    @property
    def tc_exact(self) -> Optional[int]:
        if self.lower.provenance == VERIFIED and self.lower.value == self.upper:
            return self.upper
        return None

    @property
    def passed(self) -> bool:
        return self.tc_exact is not None and all(self.checks.values())

    def to_dict(self) -> dict:
        certs = []
        if self.lower.certificate is not None:
            certs.append(self.lower.certificate.to_dict())
        d = {
            "family": self.group.family,
            "n": self.group.n,
            "convention": CONVENTION,
            "cd": self.cd,
            "geomdim": self.geomdim,
            "zcl_lower": self.lower.zcl,
            "tc_lower": self.tc_lower,
            "tc_upper": self.tc_upper,
            "tc_exact": self.tc_exact,
            "lower_provenance": self.lower.provenance,
            "certificates": certs,
            "trace": self.trace,
            "checks": self.checks,
        }
        if self.zcl_exact is not None:
            d["zcl_exact"] = self.zcl_exact
        if self.lower.note:
            d["note"] = self.lower.note
        return d


def tc_report(group: GroupId, cache_dir=None, allow_unverified: bool = False,
              capacity: Optional[int] = None) -> TCReport:
    cd, gd = dimension(group)
    up, trace = tc_upper(group)
    low = tc_lower(group, cache_dir, allow_unverified, capacity)
    if low.value > up:
        raise AssertionError(f"inconsistent bounds for {group}: {low.value} > {up}")
    trace = list(trace)
    trace.append(f"tc({group}) >= 1 + zcl >= 1 + {low.zcl} = {low.value} [{low.provenance}]")
    rep = TCReport(group, cd, gd, low, up, trace)
    if low.provenance == VERIFIED and group.family in ("full", "plus"):
        variant = PLUS if group.family == "plus" else FULL
        basis = get_basis(group.n, variant, cache_dir, capacity)
        rep.checks["top_degree_equals_cd"] = basis.top_degree == cd
    if rep.tc_exact is not None:
        trace.append(f"tc({group}) = {rep.tc_exact}")
        # zcl is squeezed between the certificate and tc - 1
        rep.zcl_exact = up - 1
        if group.family == "plus":
            trace.append(f"zcl = {up - 1}: certificate gives >=, tc <= {up} gives <=")
    return rep
