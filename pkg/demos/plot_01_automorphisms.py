"""
Automorphisms of free groups
============================

Words in F_n, the generators alpha_{i,j} and a few relations checked by
direct substitution.
"""

from mccool.freegroup import (
    FreeWord, McCoolWord, center_element, compose, evaluate_mccool_word,
    mccool_generator, power, verify_mccool_presentation,
)

# alpha_{1,2} conjugates x1 by x2 and fixes x2
a12 = mccool_generator(2, 1, 2)
print("alpha_12:", a12)
print("alpha_12(x1) =", a12(FreeWord.gen(1, 2)))

# composition applies the right factor first
print("alpha_12 o alpha_12^-1 is identity:", compose(a12, mccool_generator(2, 1, 2, -1)).is_identity())

# a McCool word evaluates left to right; this one is conjugation by x1
beta1 = evaluate_mccool_word(McCoolWord(3, ((2, 1, 1), (3, 1, 1))))
print("beta_1:", beta1)

# every relation instance reduces to the identity
for n in (3, 4):
    for variant in ("full", "plus"):
        rep = verify_mccool_presentation(n, variant)
        print(f"n={n} {variant}: {len(rep.instances)} relation instances, pass={rep.passed}")

# the element c = alpha_{1,n} ... alpha_{n-1,n} has growing powers
c = evaluate_mccool_word(center_element(4))
print("lengths of c^m:", [power(c, m).total_length() for m in range(1, 6)])
