"""
Zero divisors in the tensor square
==================================

Products of zero divisors a (x) 1 - 1 (x) a and the certificates behind the
lower bounds.
"""

from mccool.algebra import gen
from mccool.cache import get_basis
from mccool.zerodiv import bar, certificate_M, certificate_N, tensor_multiply, zcl_search

b2 = get_basis(2, "full")
print("bar(a12) bar(a21) =", tensor_multiply(bar(gen(1, 2)), bar(gen(2, 1)), b2))

for n in (2, 3, 4):
    cert = certificate_M(get_basis(n, "full"))
    print(f"M at n={n}: length {cert.length}, {len(cert.product)} terms, "
          f"witness coefficient {cert.witness_coefficient}, pass={cert.passed}")

for n in (3, 4, 5):
    cert = certificate_N(get_basis(n, "plus"))
    print(f"N at n={n}: length {cert.length}, survivors {cert.extra['survivors']}, pass={cert.passed}")

# a blind search over bar(g) and g (x) g only gives lower bounds
for n, v in ((2, "plus"), (3, "plus"), (3, "full")):
    cert = zcl_search(get_basis(n, v))
    print(f"search {v} n={n}: length {cert.length} using {cert.factor_labels}")
