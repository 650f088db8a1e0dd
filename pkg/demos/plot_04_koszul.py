"""
Quadratic duals and the free decomposition
==========================================

A numerical Koszul check and the splitting of A_n as a free module over a
shifted copy of A_{n-1}.
"""

from mccool.algebra import presentation
from mccool.cache import get_basis
from mccool.koszul import freeness_decomposition_check, koszul_consistency_test

for n in (2, 3, 4):
    rep = koszul_consistency_test(presentation(n, "plus"), 4, get_basis(n, "plus"))
    print(f"plus n={n}: A {rep.hilbert}, dual {rep.dual}, identity holds: {rep.passed}")

# the full variant at n=3 for comparison
rep = koszul_consistency_test(presentation(3, "full"), 4, get_basis(3, "full"))
print("full n=3: dual", rep.dual, "identity holds:", rep.passed)

for n in (3, 4, 5):
    rep = freeness_decomposition_check(n, get_basis(n, "plus"), get_basis(n - 1, "plus"))
    ranks = [r["rank"] for r in rep.degrees]
    print(f"n={n}: summand ranks {ranks}, quotient {rep.quotient_dims}, pass={rep.passed}")
