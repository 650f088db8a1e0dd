"""
Topological complexity
======================

Upper bounds from dimension and products, lower bounds from certified zero
divisor products. The convention is unreduced.
"""

from mccool.tc import GroupId, tc_report

for family, ns in (("full", (2, 3, 4, 5)), ("plus", (2, 3, 4, 5, 6))):
    for n in ns:
        rep = tc_report(GroupId(family, n))
        print(f"{family} n={n}: {rep.tc_lower} <= tc <= {rep.tc_upper}, exact = {rep.tc_exact}")

# the derivation for one case
for line in tc_report(GroupId("plus", 4)).trace:
    print("  ", line)

# beyond the certified tiers only formula values are available
rep = tc_report(GroupId("full", 7), allow_unverified=True)
print("full n=7:", rep.lower.provenance, "lower", rep.tc_lower, "upper", rep.tc_upper, "exact", rep.tc_exact)
