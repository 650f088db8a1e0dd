"""
Quotients of exterior algebras
==============================

The cohomology rings as exterior algebras modulo quadratic relations,
with a normal form from exact row reduction.
"""

from mccool.algebra import (
    claimed_basis, closed_form_poincare, compute_graded_basis, element, format_element, gen,
    multiply, normal_form, presentation, rewrite_reduce, verify_claimed_basis,
)

pres = presentation(3, "full")
basis = compute_graded_basis(pres)
print("dims for n=3:", basis.dims(), "closed form:", closed_form_poincare(3, "full"))

# a repeated first index rewrites into the basis
x = element((1, [(2, 1), (2, 3)]))
print("a21 a23 ->", format_element(normal_form(x, basis)))
print("by rewriting ->", format_element(rewrite_reduce(x, pres)))

# a cyclic product vanishes
print("a12 a21 =", format_element(multiply(gen(1, 2), gen(2, 1), basis)))

# compare the computed basis with the combinatorial one
for n, variant in ((4, "full"), (5, "plus")):
    pres = presentation(n, variant)
    b = compute_graded_basis(pres)
    rep = verify_claimed_basis(pres, b)
    print(f"n={n} {variant}: dims {b.dims()}, claimed basis ok: {rep.passed}")
    print("  degree-2 claimed size:", len(claimed_basis(pres, 2)))
